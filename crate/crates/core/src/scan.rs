//! Runs every applicable checker over all hyperplanes and all flats of
//! corank one.

use serde::Serialize;

use crate::arrangement::{Arrangement, FlatSpec};
use crate::checkers::{
    self, AvoidanceMode, CheckReport, FreeRestrictionReport, Hypothesis, HypothesisStatus, Verdict,
};
use crate::derivations::{freeness_with, FreenessOptions, FreenessVerdict};
use crate::error::Result;
use crate::exact::Integer;
use crate::lattice::flats;
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Target {
    Arrangement,
    Hyperplane { index: usize },
    Flat { indices: Vec<usize> },
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanItem {
    pub target: Target,
    pub report: CheckReport,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    /// Freeness summary of the arrangement itself, when requested.
    pub freeness: Option<String>,
    pub items: Vec<ScanItem>,
    pub violations: usize,
}

impl ScanReport {
    pub fn all_hold(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    /// Also run the checks whose hypotheses need freeness verdicts.
    pub freeness: bool,
    pub freeness_options: FreenessOptions,
}

fn nonzero_exponents(v: &FreenessVerdict) -> Option<Vec<i64>> {
    if !v.is_free() {
        return None;
    }
    v.exponents.as_ref().map(|e| {
        e.iter()
            .filter(|&&x| x > 0)
            .map(|&x| i64::from(x))
            .collect()
    })
}

fn chi0_roots(a: &Arrangement) -> Result<Option<Vec<Integer>>> {
    checkers::split_chi0_roots(a)
}

fn item(target: Target, report: CheckReport) -> ScanItem {
    ScanItem { target, report }
}

fn hyperplane_items(
    a: &Arrangement,
    i: usize,
    d_roots: &Option<Vec<Integer>>,
    free_exps: &Option<Vec<i64>>,
    opts: &ScanOptions,
) -> Result<Vec<ScanItem>> {
    let t = || Target::Hyperplane { index: i };
    let mut out = vec![
        item(t(), checkers::deletion_restriction(a, i)?),
        item(t(), checkers::b2_restriction(a, i)?),
    ];
    let restricted = a.restrict(i)?;
    if let (Some(d), Some(e)) = (d_roots, chi0_roots(&restricted)?) {
        let r = checkers::avoidance(d, &e, a.len(), restricted.len(), AvoidanceMode::Restriction);
        out.push(item(t(), r));
    }
    if opts.freeness {
        let vr = freeness_with(&restricted, &opts.freeness_options)?;
        let Some(e) = nonzero_exponents(&vr) else {
            return Ok(out);
        };
        if let Some(d) = free_exps {
            let FreeRestrictionReport { mut report, .. } =
                checkers::free_restriction_pattern(d, &e);
            report.hypotheses = vec![
                Hypothesis::new("A is free", HypothesisStatus::Verified),
                Hypothesis::new("A^H is free", HypothesisStatus::Verified),
            ];
            out.push(item(t(), report));
        }
        let vd = freeness_with(&a.delete(i)?, &opts.freeness_options)?;
        if let Some(d_del) = nonzero_exponents(&vd) {
            if d_del.len() == e.len() + 1 {
                let mut r = checkers::free_deletion_pattern(&d_del, &e, HypothesisStatus::Verified);
                r.hypotheses
                    .push(Hypothesis::new("A^H is free", HypothesisStatus::Verified));
                out.push(item(t(), r));
            }
        }
    }
    Ok(out)
}

fn flat_items(
    ess: &Arrangement,
    x: &FlatSpec,
    d_roots: &Option<Vec<Integer>>,
    free_exps: &Option<Vec<i64>>,
    opts: &ScanOptions,
) -> Result<Vec<ScanItem>> {
    let t = || Target::Flat {
        indices: x.indices(),
    };
    let mut out = vec![item(t(), checkers::b2_localization(ess, x))];
    let local = ess.localize(x);
    let local_ess = local.essentialize().arrangement;
    if let (Some(d), Some(e)) = (d_roots, chi0_roots(&local_ess)?) {
        let r = checkers::avoidance(d, &e, ess.len(), local.len(), AvoidanceMode::Localization);
        out.push(item(t(), r));
    }
    if let (true, Some(d)) = (opts.freeness, free_exps) {
        let v = freeness_with(&local, &opts.freeness_options)?;
        out.push(item(t(), checkers::localization_free(x, &v)));
        if let Some(e) = nonzero_exponents(&v) {
            // exp(A_X) = (1, e_2, ..., e_(l-1)) once the zeros are dropped
            let mut r = checkers::localization_pattern(d, e.get(1..).unwrap_or(&[]));
            r.hypotheses = vec![
                Hypothesis::new("A is free", HypothesisStatus::Verified),
                Hypothesis::new("A_X is free", HypothesisStatus::Verified),
            ];
            out.push(item(t(), r));
        }
    }
    Ok(out)
}

/// All checks, ordered by target: the arrangement, then hyperplanes by
/// index, then flats in lattice order. Localization checks run on the
/// essentialization, which keeps hyperplane indices.
pub fn scan(a: &Arrangement, opts: &ScanOptions) -> Result<ScanReport> {
    let ess = if a.is_essential() {
        a.clone()
    } else {
        a.essentialize().arrangement
    };
    let d_roots = chi0_roots(a)?;
    let verdict = if opts.freeness {
        Some(freeness_with(a, &opts.freeness_options)?)
    } else {
        None
    };
    let free_exps = verdict.as_ref().and_then(nonzero_exponents);

    let mut items = Vec::new();
    if ess.dim() == 3 {
        items.push(item(Target::Arrangement, checkers::theorem_a_range(&ess)?));
        items.push(item(Target::Arrangement, checkers::multiplicity_gap(&ess)));
    }
    for chunk in par::map(a.len(), |i| {
        hyperplane_items(a, i, &d_roots, &free_exps, opts)
    }) {
        items.extend(chunk?);
    }
    let lattice = flats(&ess);
    let corank_one = checkers::corank_one_flats(&ess, &lattice);
    let chunks = par::map(corank_one.len(), |j| {
        flat_items(&ess, &corank_one[j], &d_roots, &free_exps, opts)
    });
    for chunk in chunks {
        items.extend(chunk?);
    }
    let violations = items
        .iter()
        .filter(|it| it.report.verdict == Verdict::Violated)
        .count();
    Ok(ScanReport {
        freeness: verdict.map(|v| v.summary()),
        items,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn ex9_scan_has_equality_at_z_axis() {
        let a = catalog::get("paper-ex9").unwrap().arrangement;
        let r = scan(
            &a,
            &ScanOptions {
                freeness: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(
            r.all_hold(),
            "{:#?}",
            r.items
                .iter()
                .filter(|i| i.report.violated())
                .collect::<Vec<_>>()
        );
        assert_eq!(r.freeness.as_deref(), Some("Free(1,3,5)"));
        let z_axis = r
            .items
            .iter()
            .find(|it| {
                it.report.check_name == "b2_localization"
                    && it.target
                        == Target::Flat {
                            indices: vec![0, 1, 3, 4, 5, 6],
                        }
            })
            .expect("z-axis flat is scanned");
        assert_eq!(z_axis.report.equality, Some(true));
        assert_eq!(z_axis.report.lhs, Some(Integer::from(23)));
        assert!(r
            .items
            .iter()
            .any(|it| it.report.check_name == "localization_pattern"));
    }

    #[test]
    fn boolean_and_braid_scans_hold() {
        for name in ["boolean-4", "braid-4"] {
            let a = catalog::get(name).unwrap().arrangement;
            let r = scan(
                &a,
                &ScanOptions {
                    freeness: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(r.all_hold(), "{name}");
        }
    }
}
