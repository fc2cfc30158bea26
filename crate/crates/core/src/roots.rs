//! Root profiles of characteristic polynomials and the `A`/`B` invariants of
//! root tuples.

use serde::Serialize;

use crate::error::Result;
use crate::exact::unipoly::factored_string;
use crate::exact::{integer_roots, intser, sturm_real_root_count, Integer, IntegerRoots, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RootProfile {
    pub polynomial: UniPoly,
    pub integer_roots: IntegerRoots,
    pub splits_over_z: bool,
    pub distinct_real_root_count: usize,
    pub real_rooted: bool,
}

impl RootProfile {
    /// The integer roots repeated by multiplicity, when the polynomial splits.
    pub fn split_roots(&self) -> Option<Vec<Integer>> {
        self.splits_over_z.then(|| self.integer_roots.multiset())
    }
}

pub fn root_profile(p: &UniPoly) -> Result<RootProfile> {
    let real = sturm_real_root_count(p)?;
    let integer_roots = integer_roots(p)?;
    Ok(RootProfile {
        polynomial: p.clone(),
        splits_over_z: integer_roots.splits,
        integer_roots,
        distinct_real_root_count: real.distinct,
        real_rooted: real.real_rooted,
    })
}

/// A monic polynomial with its integer roots pulled out as linear factors,
/// e.g. `(t - 1)(t^2 - 8t + 13)`. Anything else prints expanded.
pub fn display_poly(p: &UniPoly) -> String {
    let monic = p.leading().is_some_and(|c| c == &Integer::from(1));
    let roots = match integer_roots(p) {
        Ok(r) if monic && !r.roots.is_empty() => r.roots,
        _ => return p.to_string(),
    };
    let mut rest = p.clone();
    for (r, m) in &roots {
        for _ in 0..*m {
            rest = rest.div_linear(r).expect("an integer root divides");
        }
    }
    let linear = factored_string(&roots);
    if rest.degree() == Some(0) {
        linear
    } else {
        format!("{linear}({rest})")
    }
}

/// `A(a) = sum_{i<j} (a_i - a_j)^2`.
pub fn a_invariant(values: &[Integer]) -> Integer {
    let mut s = Integer::from(0);
    for (i, x) in values.iter().enumerate() {
        for y in &values[i + 1..] {
            let d = x - y;
            s += &d * &d;
        }
    }
    s
}

/// `B(a) = sum_{i<j} a_i a_j`.
pub fn b_invariant(values: &[Integer]) -> Integer {
    let mut s = Integer::from(0);
    for (i, x) in values.iter().enumerate() {
        for y in &values[i + 1..] {
            s += x * y;
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantPair {
    #[serde(serialize_with = "intser::one")]
    pub a_value: Integer,
    #[serde(serialize_with = "intser::one")]
    pub b_value: Integer,
    pub arity: usize,
}

pub fn invariants(values: &[Integer]) -> InvariantPair {
    InvariantPair {
        a_value: a_invariant(values),
        b_value: b_invariant(values),
        arity: values.len(),
    }
}

pub fn ints(values: &[i64]) -> Vec<Integer> {
    values.iter().map(|&v| Integer::from(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_factors_out_integer_roots() {
        let mult13 = &UniPoly::from_root_values(&[1]) * &UniPoly::from_i64(&[13, -8, 1]);
        assert_eq!(display_poly(&mult13), "(t - 1)(t^2 - 8t + 13)");
        assert_eq!(
            display_poly(&UniPoly::from_root_values(&[0, 1, 3, 3])),
            "t(t - 1)(t - 3)^2"
        );
        assert_eq!(display_poly(&UniPoly::from_i64(&[1, 0, 1])), "t^2 + 1");
    }

    #[test]
    fn a_and_b_values() {
        assert_eq!(a_invariant(&ints(&[2, 4, 7])), Integer::from(38));
        assert_eq!(a_invariant(&ints(&[3, 5, 5])), Integer::from(8));
        assert_eq!(a_invariant(&ints(&[4, 4, 4, 4])), Integer::from(0));
        assert_eq!(b_invariant(&ints(&[1, 3, 5])), Integer::from(23));
        assert_eq!(b_invariant(&ints(&[9])), Integer::from(0));
    }

    #[test]
    fn profiles() {
        let p = root_profile(&UniPoly::from_root_values(&[2, 4, 7])).unwrap();
        assert!(p.splits_over_z && p.real_rooted);
        assert_eq!(p.split_roots(), Some(ints(&[2, 4, 7])));
        let q = root_profile(&UniPoly::from_i64(&[13, -8, 1])).unwrap();
        assert!(!q.splits_over_z && q.real_rooted);
        assert_eq!(q.distinct_real_root_count, 2);
        assert!(q.integer_roots.roots.is_empty());
        let r = root_profile(&UniPoly::from_i64(&[1, 1, 1])).unwrap();
        assert!(!r.real_rooted);
    }
}
