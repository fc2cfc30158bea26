//! Real and integer roots of integer polynomials, decided exactly.

use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{Integer, Rational, UniPoly};
use crate::error::{Error, Result};

/// Dense polynomial over Q used for remainder sequences.
#[derive(Clone, Debug, PartialEq)]
struct QPoly(Vec<Rational>);

impl QPoly {
    fn from_int(p: &UniPoly) -> Self {
        Self(
            p.coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Self {
        Self(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(Integer::from(i)))
                .collect(),
        )
        .trimmed()
    }

    fn monic(&self) -> Self {
        let lc = self.lc().clone();
        Self(self.0.iter().map(|c| c / &lc).collect())
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let mut rem = self.0.clone();
        if self.0.len() < d.0.len() {
            return (Self(Vec::new()), self.clone());
        }
        let dd = d.degree();
        let lc = d.lc().clone();
        let mut q = vec![Rational::zero(); self.0.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Self(q).trimmed(), Self(rem).trimmed())
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn sign_at_pos_inf(&self) -> i8 {
        sign(self.lc())
    }

    fn sign_at_neg_inf(&self) -> i8 {
        let s = sign(self.lc());
        if self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

/// Number of distinct real roots of a nonzero rational polynomial.
fn distinct_real_roots(p: &QPoly) -> usize {
    if p.degree() == 0 {
        return 0;
    }
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(negated(r));
    }
    let at_neg = sign_changes(chain.iter().map(QPoly::sign_at_neg_inf));
    let at_pos = sign_changes(chain.iter().map(QPoly::sign_at_pos_inf));
    at_neg - at_pos
}

fn negated(p: QPoly) -> QPoly {
    QPoly(p.0.into_iter().map(|c| -c).collect())
}

/// Yun's square-free decomposition: returns `(f_i, i)` with `p = c * prod f_i^i`.
fn squarefree_decomposition(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = sub(&c, &b.derivative());
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        d = sub(&c, &b.derivative());
        i += 1;
    }
    out
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.0.len().max(b.0.len());
    QPoly(
        (0..n)
            .map(|k| {
                let x = a.0.get(k).cloned().unwrap_or_else(Rational::zero);
                let y = b.0.get(k).cloned().unwrap_or_else(Rational::zero);
                x - y
            })
            .collect(),
    )
    .trimmed()
}

/// Real-root census of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealRootCount {
    /// Distinct real roots, by Sturm's theorem.
    pub distinct: usize,
    /// Real roots counted with multiplicity.
    pub with_multiplicity: usize,
    /// Degree of the square-free part.
    pub squarefree_degree: usize,
    pub degree: usize,
    /// All roots (with multiplicity) are real.
    pub real_rooted: bool,
}

/// Counts real roots exactly with a Sturm chain over Q.
pub fn sturm_real_root_count(p: &UniPoly) -> Result<RealRootCount> {
    let Some(degree) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let q = QPoly::from_int(p);
    let sqfree_degree = q.degree() - q.gcd(&q.derivative()).degree();
    let distinct = distinct_real_roots(&q);
    let with_multiplicity = squarefree_decomposition(&q)
        .iter()
        .map(|(f, mult)| mult * distinct_real_roots(f))
        .sum();
    Ok(RealRootCount {
        distinct,
        with_multiplicity,
        squarefree_degree: sqfree_degree,
        degree,
        real_rooted: with_multiplicity == degree,
    })
}

/// Integer roots with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerRoots {
    /// `(root, multiplicity)`, ascending by root.
    #[serde(serialize_with = "serialize_roots")]
    pub roots: Vec<(Integer, usize)>,
    /// The polynomial is a constant times a product of `(t - r)` factors.
    pub splits: bool,
}

fn serialize_roots<S: serde::Serializer>(
    roots: &[(Integer, usize)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(roots.len()))?;
    for (r, m) in roots {
        seq.serialize_element(&(super::intser::IntOrString::from(r), m))?;
    }
    seq.end()
}

impl IntegerRoots {
    /// Roots repeated by multiplicity, ascending.
    pub fn multiset(&self) -> Vec<Integer> {
        self.roots
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
            .collect()
    }

    pub fn multiset_i64(&self) -> Vec<i64> {
        self.multiset()
            .iter()
            .map(|r| r.to_i64().expect("root fits in i64"))
            .collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }
}

/// Largest constant term whose divisors are enumerated by trial division.
const MAX_TRIAL_CONSTANT: u128 = 1 << 100;
const MAX_TRIAL_DIVISOR: u128 = 1 << 27;

/// All integer roots with multiplicity, by testing divisors of the trailing
/// nonzero coefficient.
pub fn integer_roots(p: &UniPoly) -> Result<IntegerRoots> {
    let Some(degree) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let (mut rest, zero_mult) = p.strip_t_power();
    let mut roots = Vec::new();
    if zero_mult > 0 {
        roots.push((Integer::zero(), zero_mult));
    }
    let c0 = rest.coeff(0).abs();
    for d in divisors(&c0)? {
        for r in [-d.clone(), d] {
            let mut mult = 0;
            while let Some(q) = rest.div_linear(&r) {
                rest = q;
                mult += 1;
                if rest.degree() == Some(0) {
                    break;
                }
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }
    roots.sort();
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    Ok(IntegerRoots {
        roots,
        splits: total == degree,
    })
}

fn divisors(n: &Integer) -> Result<Vec<Integer>> {
    if n.is_zero() {
        return Ok(Vec::new());
    }
    let Some(m) = n.to_u128().filter(|&m| m <= MAX_TRIAL_CONSTANT) else {
        return Err(Error::TooLarge(format!(
            "constant term {n} too large for divisor enumeration"
        )));
    };
    let root = m.sqrt();
    if root > MAX_TRIAL_DIVISOR {
        return Err(Error::TooLarge(format!(
            "constant term {n} too large for divisor enumeration"
        )));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= m {
        if m % d == 0 {
            small.push(Integer::from(d));
            if d * d != m {
                large.push(Integer::from(m / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_with_irrational_roots() {
        let p = UniPoly::from_i64(&[13, -8, 1]);
        let c = sturm_real_root_count(&p).unwrap();
        assert_eq!(c.distinct, 2);
        assert!(c.real_rooted);
        let r = integer_roots(&p).unwrap();
        assert!(r.roots.is_empty());
        assert!(!r.splits);
    }

    #[test]
    fn no_real_roots() {
        let c = sturm_real_root_count(&UniPoly::from_i64(&[1, 0, 1])).unwrap();
        assert_eq!(c.distinct, 0);
        assert!(!c.real_rooted);
        let c = sturm_real_root_count(&UniPoly::from_i64(&[1, 1, 1])).unwrap();
        assert!(!c.real_rooted);
    }

    #[test]
    fn repeated_roots() {
        let p = UniPoly::from_root_values(&[1, 3, 3]);
        let c = sturm_real_root_count(&p).unwrap();
        assert_eq!(c.distinct, 2);
        assert_eq!(c.with_multiplicity, 3);
        assert_eq!(c.squarefree_degree, 2);
        assert!(c.real_rooted);
        let r = integer_roots(&p).unwrap();
        assert_eq!(r.roots, vec![(Integer::from(1), 1), (Integer::from(3), 2)]);
        assert!(r.splits);
    }

    #[test]
    fn pure_power_of_t() {
        let r = integer_roots(&UniPoly::monomial(3)).unwrap();
        assert_eq!(r.roots, vec![(Integer::zero(), 3)]);
        assert!(r.splits);
    }

    #[test]
    fn negative_and_mixed_roots() {
        let p = UniPoly::from_root_values(&[-2, 0, 5, 5]);
        let r = integer_roots(&p).unwrap();
        assert_eq!(r.multiset_i64(), vec![-2, 0, 5, 5]);
    }

    #[test]
    fn non_monic() {
        // (2t - 1)(t - 3) has one integer root.
        let p = UniPoly::from_i64(&[3, -7, 2]);
        let r = integer_roots(&p).unwrap();
        assert_eq!(r.multiset_i64(), vec![3]);
        assert!(!r.splits);
        assert!(sturm_real_root_count(&p).unwrap().real_rooted);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(matches!(
            sturm_real_root_count(&UniPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
        assert!(integer_roots(&UniPoly::zero()).is_err());
    }

    #[test]
    fn constants() {
        let c = sturm_real_root_count(&UniPoly::from_i64(&[5])).unwrap();
        assert_eq!(c.distinct, 0);
        assert!(c.real_rooted);
    }
}
