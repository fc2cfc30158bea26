//! The invariant suite run over catalog entries: lattice data against the
//! expected values, point counts against `chi`, freeness verdicts, and a
//! full checker scan per entry.

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogEntry, ExpectedFreeness};
use crate::checkers;
use crate::derivations::{freeness_with, saito_check, FreenessOptions, FreenessStatus};
use crate::error::{Error, Result};
use crate::exact::UniPoly;
use crate::lattice::{
    admissible_primes, char_data_from_lattice, check_admissible, count_points_unchecked, eval_chi,
    flats, mobius_signs_alternate,
};
use crate::roots::display_poly;
use crate::scan::{scan, ScanOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteCheck {
    pub entry: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub checks: Vec<SuiteCheck>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Oracle primes; when empty, the first `prime_count` admissible ones.
    pub primes: Vec<u64>,
    pub prime_count: usize,
    pub freeness: FreenessOptions,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            primes: Vec::new(),
            prime_count: 3,
            freeness: FreenessOptions::default(),
        }
    }
}

/// Replacement expected data for one catalog entry. Fields left out keep
/// the catalog's values.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ExpectedOverride {
    pub entry: String,
    /// `chi` as the multiset of its roots.
    pub chi_roots: Option<Vec<i64>>,
    /// `chi` by coefficients, constant term first.
    pub chi_coeffs: Option<Vec<i64>>,
    pub freeness: Option<ExpectedFreeness>,
    pub restriction_exponents: Option<Vec<u32>>,
}

/// Applies overrides in order. Unknown entry names are an error.
pub fn apply_overrides(entries: &mut [CatalogEntry], overrides: &[ExpectedOverride]) -> Result<()> {
    for o in overrides {
        let e = entries
            .iter_mut()
            .find(|e| e.name == o.entry)
            .ok_or_else(|| Error::UnknownCatalogEntry(o.entry.clone()))?;
        if let Some(r) = &o.chi_roots {
            e.expected.chi = Some(UniPoly::from_root_values(r));
        }
        if let Some(c) = &o.chi_coeffs {
            e.expected.chi = Some(UniPoly::from_i64(c));
        }
        if let Some(f) = &o.freeness {
            e.expected.freeness = Some(f.clone());
        }
        if let Some(r) = &o.restriction_exponents {
            e.expected.restriction_exponents = Some(r.clone());
        }
    }
    Ok(())
}

struct Recorder<'a> {
    entry: &'a str,
    checks: Vec<SuiteCheck>,
}

impl Recorder<'_> {
    fn record(&mut self, check: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(SuiteCheck {
            entry: self.entry.to_string(),
            check: check.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

fn run_entry(entry: &CatalogEntry, opts: &SuiteOptions) -> Result<Vec<SuiteCheck>> {
    let a = &entry.arrangement;
    let mut rec = Recorder {
        entry: &entry.name,
        checks: Vec::new(),
    };
    let lattice = flats(a);
    let data = char_data_from_lattice(&lattice);

    if let Some(chi) = &entry.expected.chi {
        rec.record(
            "chi",
            &data.chi == chi,
            format!(
                "computed {}, expected {}",
                display_poly(&data.chi),
                display_poly(chi)
            ),
        );
    }
    rec.record(
        "mobius_signs",
        mobius_signs_alternate(&lattice),
        "sign of mu(X) is (-1)^rank X",
    );

    let primes = if opts.primes.is_empty() {
        admissible_primes(a, &lattice, opts.prime_count)
    } else {
        opts.primes.clone()
    };
    if primes.is_empty() {
        rec.record("point_count", false, "no admissible oracle prime");
    }
    for q in primes {
        match check_admissible(a, &lattice, q) {
            Ok(()) => {
                let count = count_points_unchecked(a, q)?;
                let value = eval_chi(&data.chi, q);
                rec.record(
                    &format!("point_count_q{q}"),
                    count == value,
                    format!("chi({q}) = {value}, points = {count}"),
                );
            }
            Err(e @ (Error::InadmissiblePrime { .. } | Error::NotPrime(_))) => {
                rec.record(&format!("point_count_q{q}"), false, e.to_string());
            }
            Err(e) => return Err(e),
        }
    }

    let verdict = freeness_with(a, &opts.freeness)?;
    if let Some(expected) = &entry.expected.freeness {
        let ok = match expected {
            ExpectedFreeness::Free(exps) => {
                verdict.is_free() && verdict.exponents.as_ref() == Some(exps)
            }
            ExpectedFreeness::NotFree => verdict.status == FreenessStatus::NotFree,
            ExpectedFreeness::NeverFree => !verdict.is_free(),
        };
        rec.record(
            "freeness",
            ok,
            format!("computed {}, expected {expected:?}", verdict.summary()),
        );
    }
    if let Some(basis) = &verdict.basis {
        rec.record(
            "saito_basis",
            saito_check(a, basis)?,
            "stored basis passes the Saito criterion",
        );
    }

    if let Some(want) = &entry.expected.restriction_exponents {
        let mut found = None;
        for i in 0..a.len() {
            let v = freeness_with(&a.restrict(i)?, &opts.freeness)?;
            if v.is_free() && v.exponents.as_ref() == Some(want) {
                found = Some(i);
                break;
            }
        }
        let detail = match found {
            Some(i) => format!(
                "hyperplane {i} ({}) restricts to exponents {want:?}",
                a.form(i)
            ),
            None => format!("no restriction is free with exponents {want:?}"),
        };
        rec.record("restriction_exponents", found.is_some(), detail);
    }

    let scanned = scan(
        a,
        &ScanOptions {
            freeness: true,
            freeness_options: opts.freeness.clone(),
        },
    )?;
    let mut detail = format!("{} checks", scanned.items.len());
    if let Some(bad) = scanned.items.iter().find(|it| it.report.violated()) {
        detail = format!(
            "{detail}; first violation at {:?}: {}",
            bad.target, bad.report
        );
    }
    rec.record("scan", scanned.all_hold(), detail);
    Ok(rec.checks)
}

/// Runs the suite over `entries`, in order.
pub fn run_suite(entries: &[CatalogEntry], opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let forbidden = checkers::forbidden_patterns(&[2, 4, 7]);
    let expected: Vec<Vec<i64>> = [
        (2, 5),
        (2, 6),
        (3, 3),
        (3, 4),
        (3, 5),
        (3, 6),
        (3, 7),
        (4, 4),
        (4, 5),
        (4, 6),
        (5, 5),
        (5, 6),
    ]
    .iter()
    .map(|&(x, y)| vec![x, y])
    .collect();
    checks.push(SuiteCheck {
        entry: "-".into(),
        check: "forbidden_patterns_2_4_7".into(),
        passed: forbidden == expected,
        detail: format!("{} tuples", forbidden.len()),
    });
    for e in entries {
        checks.extend(run_entry(e, opts)?);
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    Ok(SuiteReport {
        failed: checks.len() - passed,
        passed,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn small() -> Vec<CatalogEntry> {
        ["boolean-3", "paper-ex9", "paper-rem1-deleted"]
            .iter()
            .map(|n| catalog::get(n).unwrap())
            .collect()
    }

    #[test]
    fn suite_passes_on_small_entries() {
        let r = run_suite(&small(), &SuiteOptions::default()).unwrap();
        assert!(
            r.all_passed(),
            "{:#?}",
            r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
        assert!(r.passed > 10);
    }

    #[test]
    fn corrupted_expectations_fail() {
        let mut entries = small();
        let overrides: Vec<ExpectedOverride> = serde_json::from_str(
            r#"[{"entry": "paper-ex9", "chiRoots": [1, 3, 4]},
                {"entry": "boolean-3", "freeness": {"status": "Free", "exponents": [1, 1, 2]}}]"#,
        )
        .unwrap();
        apply_overrides(&mut entries, &overrides).unwrap();
        let r = run_suite(&entries, &SuiteOptions::default()).unwrap();
        let failed: Vec<(&str, &str)> = r
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| (c.entry.as_str(), c.check.as_str()))
            .collect();
        assert_eq!(
            failed,
            vec![("boolean-3", "freeness"), ("paper-ex9", "chi")]
        );
    }

    #[test]
    fn bad_override_name() {
        let o = ExpectedOverride {
            entry: "nope".into(),
            ..Default::default()
        };
        assert!(apply_overrides(&mut small(), &[o]).is_err());
    }

    #[test]
    fn inadmissible_user_prime_is_reported() {
        let e = vec![catalog::get("paper-mult13").unwrap()];
        let opts = SuiteOptions {
            primes: vec![3],
            ..Default::default()
        };
        let r = run_suite(&e, &opts).unwrap();
        assert!(r
            .checks
            .iter()
            .any(|c| c.check == "point_count_q3" && !c.passed));
    }
}
