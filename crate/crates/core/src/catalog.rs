//! Built-in arrangements with the data they are expected to reproduce.

use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "exponents")]
pub enum ExpectedFreeness {
    Free(Vec<u32>),
    NotFree,
    /// Anything except `Free`.
    NeverFree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Expected {
    /// Characteristic polynomial.
    pub chi: Option<UniPoly>,
    pub freeness: Option<ExpectedFreeness>,
    /// Exponents that some free restriction `A^H` must have.
    pub restriction_exponents: Option<Vec<u32>>,
    /// The defining equations come from outside this crate; the suite must
    /// re-derive the expected data before trusting the entry.
    pub needs_verification: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub arrangement: Arrangement,
    pub expected: Expected,
}

const FIXED: &[(&str, &str)] = &[
    (
        "paper-mult13",
        "xz(x^2-y^2)(x^2-4y^2)(x^2-9y^2)(y-z): chi0 = t^2 - 8t + 13, rank-2 Möbius values 1 and 6",
    ),
    (
        "paper-ex9",
        "xyz(x^2-y^2)(x^2-4y^2)(x-z)(y-z): free with exponents (1,3,5)",
    ),
    (
        "paper-rem1-deleted",
        "x(y-z)(x^2-y^2)(x^2-9y^2)z: chi = (t-1)(t-3)^2, not free",
    ),
    (
        "paper-rem1-full",
        "x(y-z)(x^2-y^2)(x^2-9y^2)z with y added last: free with exponents (1,2,5)",
    ),
    (
        "paper-ex999-base",
        "xyz(x^2-y^2)(x^2-4y^2)(x-z): free with exponents (1,2,5)",
    ),
    (
        "paper-ex999-B",
        "base plus y-z: free with exponents (1,3,5)",
    ),
    ("paper-ex999-A", "base plus 2y-3z: not free"),
    (
        "edelman-reiner",
        "x1..x5 and x1±x2±x3±x4±x5: 21 hyperplanes, free with exponents (1,5,5,5,5)",
    ),
];

/// Every catalog name with a one-line description.
pub fn list() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for l in 1..=5 {
        out.push((
            format!("boolean-{l}"),
            format!("the {l} coordinate hyperplanes"),
        ));
    }
    for l in 2..=5 {
        out.push((
            format!("braid-{l}"),
            format!("x_i - x_j for 1 <= i < j <= {l}"),
        ));
    }
    out.extend(FIXED.iter().map(|(n, d)| (n.to_string(), d.to_string())));
    out
}

pub fn get(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    let description = list()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, d)| d)
        .ok_or_else(unknown)?;
    let (arrangement, expected) = if let Some(l) = family_size(name, "boolean-") {
        boolean(l)
    } else if let Some(l) = family_size(name, "braid-") {
        braid(l)
    } else {
        fixed(name).ok_or_else(unknown)?
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        description,
        arrangement: arrangement.with_name(name),
        expected,
    })
}

/// All entries, in [`list`] order.
pub fn all() -> Vec<CatalogEntry> {
    list()
        .into_iter()
        .map(|(n, _)| get(&n).expect("listed names resolve"))
        .collect()
}

fn family_size(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

fn roots(r: &[i64]) -> Option<UniPoly> {
    Some(UniPoly::from_root_values(r))
}

fn build(dim: usize, rows: &[&[i64]]) -> Arrangement {
    Arrangement::from_i64(dim, rows).expect("catalog forms are valid")
}

fn boolean(l: usize) -> (Arrangement, Expected) {
    let rows: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    let ones = vec![1; l];
    (
        build(l, &refs),
        Expected {
            chi: roots(&ones.iter().map(|&e| i64::from(e)).collect::<Vec<_>>()),
            freeness: Some(ExpectedFreeness::Free(ones)),
            needs_verification: false,
            restriction_exponents: None,
        },
    )
}

fn braid(l: usize) -> (Arrangement, Expected) {
    let mut rows = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            let mut v = vec![0i64; l];
            v[i] = 1;
            v[j] = -1;
            rows.push(v);
        }
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    let exps: Vec<u32> = (0..l as u32).collect();
    (
        build(l, &refs),
        Expected {
            chi: roots(&exps.iter().map(|&e| i64::from(e)).collect::<Vec<_>>()),
            freeness: Some(ExpectedFreeness::Free(exps)),
            needs_verification: false,
            restriction_exponents: None,
        },
    )
}

const EX999_BASE: [&[i64]; 8] = [
    &[1, 0, 0],
    &[0, 1, 0],
    &[0, 0, 1],
    &[1, -1, 0],
    &[1, 1, 0],
    &[1, -2, 0],
    &[1, 2, 0],
    &[1, 0, -1],
];

const REM1_DELETED: [&[i64]; 7] = [
    &[1, 0, 0],
    &[0, 1, -1],
    &[1, -1, 0],
    &[1, 1, 0],
    &[1, -3, 0],
    &[1, 3, 0],
    &[0, 0, 1],
];

fn free(chi_roots: &[i64], exps: &[u32]) -> Expected {
    Expected {
        chi: roots(chi_roots),
        freeness: Some(ExpectedFreeness::Free(exps.to_vec())),
        needs_verification: false,
        restriction_exponents: None,
    }
}

fn fixed(name: &str) -> Option<(Arrangement, Expected)> {
    Some(match name {
        "paper-mult13" => (
            build(
                3,
                &[
                    &[1, 0, 0],
                    &[0, 0, 1],
                    &[1, -1, 0],
                    &[1, 1, 0],
                    &[1, -2, 0],
                    &[1, 2, 0],
                    &[1, -3, 0],
                    &[1, 3, 0],
                    &[0, 1, -1],
                ],
            ),
            Expected {
                chi: Some(&UniPoly::from_root_values(&[1]) * &UniPoly::from_i64(&[13, -8, 1])),
                freeness: Some(ExpectedFreeness::NotFree),
                needs_verification: false,
                restriction_exponents: None,
            },
        ),
        "paper-ex9" | "paper-ex999-B" => {
            let mut rows: Vec<&[i64]> = EX999_BASE.to_vec();
            rows.push(&[0, 1, -1]);
            (build(3, &rows), free(&[1, 3, 5], &[1, 3, 5]))
        }
        "paper-rem1-deleted" => (
            build(3, &REM1_DELETED),
            Expected {
                chi: roots(&[1, 3, 3]),
                freeness: Some(ExpectedFreeness::NotFree),
                needs_verification: false,
                restriction_exponents: None,
            },
        ),
        "paper-rem1-full" => {
            let mut rows: Vec<&[i64]> = REM1_DELETED.to_vec();
            rows.push(&[0, 1, 0]);
            (build(3, &rows), free(&[1, 2, 5], &[1, 2, 5]))
        }
        "paper-ex999-base" => (build(3, &EX999_BASE), free(&[1, 2, 5], &[1, 2, 5])),
        "paper-ex999-A" => {
            let mut rows: Vec<&[i64]> = EX999_BASE.to_vec();
            rows.push(&[0, 2, -3]);
            (
                build(3, &rows),
                Expected {
                    chi: None,
                    freeness: Some(ExpectedFreeness::NeverFree),
                    needs_verification: false,
                    restriction_exponents: None,
                },
            )
        }
        "edelman-reiner" => {
            let mut rows: Vec<Vec<i64>> = (0..5)
                .map(|i| (0..5).map(|j| i64::from(i == j)).collect())
                .collect();
            for signs in 0..16u32 {
                let mut v = vec![1i64];
                for bit in (0..4).rev() {
                    v.push(if signs & (1 << bit) == 0 { 1 } else { -1 });
                }
                rows.push(v);
            }
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            (
                build(5, &refs),
                Expected {
                    chi: roots(&[1, 5, 5, 5, 5]),
                    freeness: Some(ExpectedFreeness::Free(vec![1, 5, 5, 5, 5])),
                    needs_verification: true,
                    restriction_exponents: Some(vec![1, 3, 3, 5]),
                },
            )
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_resolves() {
        let names: Vec<String> = list().into_iter().map(|(n, _)| n).collect();
        assert!(names.contains(&"paper-ex9".to_string()));
        assert!(names.contains(&"edelman-reiner".to_string()));
        for n in &names {
            assert_eq!(&get(n).unwrap().name, n);
        }
        assert!(matches!(
            get("boolean-6"),
            Err(Error::UnknownCatalogEntry(_))
        ));
        assert!(get("nonsense").is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(get("boolean-3").unwrap().arrangement.len(), 3);
        assert_eq!(get("braid-4").unwrap().arrangement.len(), 6);
        assert_eq!(get("paper-ex9").unwrap().arrangement.len(), 9);
        assert_eq!(get("paper-rem1-deleted").unwrap().arrangement.len(), 7);
        assert_eq!(get("paper-rem1-full").unwrap().arrangement.len(), 8);
        let er = get("edelman-reiner").unwrap();
        assert_eq!(er.arrangement.len(), 21);
        assert!(er.expected.needs_verification);
    }

    #[test]
    fn rem1_full_extends_deleted() {
        let full = get("paper-rem1-full").unwrap().arrangement;
        let deleted = get("paper-rem1-deleted").unwrap().arrangement;
        assert_eq!(full.delete(7).unwrap().forms(), deleted.forms());
    }
}
