//! Univariate integer polynomials in `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Integer;

/// Integer polynomial, coefficients in ascending degree. The zero polynomial
/// has no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct UniPoly {
    coeffs: Vec<Integer>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); k + 1];
        coeffs[k] = Integer::one();
        Self { coeffs }
    }

    /// `t - r`
    pub fn linear_root(r: &Integer) -> Self {
        Self::new(vec![-r.clone(), Integer::one()])
    }

    /// `prod (t - r)` over the given roots.
    pub fn from_roots<'a, I: IntoIterator<Item = &'a Integer>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    pub fn from_root_values(roots: &[i64]) -> Self {
        let roots: Vec<Integer> = roots.iter().map(|&r| Integer::from(r)).collect();
        Self::from_roots(&roots)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> Integer {
        self.eval(&Integer::from(x))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Integer::from(i))
                .collect(),
        )
    }

    /// Synthetic division by `t - r`; `None` unless it divides exactly.
    pub fn div_linear(&self, r: &Integer) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![Integer::zero(); n - 1];
        let mut carry = Integer::zero();
        for i in (0..n).rev() {
            let cur = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return cur.is_zero().then(|| Self::new(q));
            }
            q[i - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }

    /// Exact division by a monic divisor; `None` when the remainder is nonzero.
    pub fn div_exact_monic(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        assert!(
            d.leading().is_some_and(|c| c.is_one()),
            "divisor must be monic"
        );
        let Some(n) = self.degree() else {
            return Some(Self::zero());
        };
        if n < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![Integer::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        rem.iter().all(|c| c.is_zero()).then(|| Self::new(q))
    }

    /// Removes the largest power of `t` dividing `self`, returning it with the
    /// exponent.
    pub fn strip_t_power(&self) -> (Self, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if self.is_zero() {
            return (Self::zero(), 0);
        }
        (Self::new(self.coeffs[k..].to_vec()), k)
    }

    /// Human-readable form in the variable `t`, highest degree first.
    pub fn to_expanded_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

/// Product of linear factors written as `t^a(t - r)^m...`, sorted by root.
pub fn factored_string(roots: &[(Integer, usize)]) -> String {
    if roots.is_empty() {
        return "1".into();
    }
    let mut sorted = roots.to_vec();
    sorted.sort();
    let mut out = String::new();
    for (r, m) in sorted {
        let base = if r.is_zero() {
            "t".to_string()
        } else if r.is_negative() {
            format!("(t + {})", r.abs())
        } else {
            format!("(t - {r})")
        };
        out.push_str(&base);
        if m > 1 {
            out.push_str(&format!("^{m}"));
        }
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expanded_string())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl From<UniPoly> for Vec<String> {
    fn from(p: UniPoly) -> Self {
        p.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for UniPoly {
    type Error = String;

    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        v.iter()
            .map(|s| {
                s.parse::<Integer>()
                    .map_err(|e| format!("bad coefficient {s:?}: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = UniPoly::from_root_values(&[1, 1, 1]);
        assert_eq!(p, UniPoly::from_i64(&[-1, 3, -3, 1]));
        assert_eq!(p.to_string(), "t^3 - 3t^2 + 3t - 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_i64(&[13, -8, 1]).to_string(), "t^2 - 8t + 13");
    }

    #[test]
    fn linear_division() {
        let chi = UniPoly::from_root_values(&[1, 3, 5]);
        let q = chi.div_linear(&Integer::from(1)).unwrap();
        assert_eq!(q, UniPoly::from_root_values(&[3, 5]));
        assert!(chi.div_linear(&Integer::from(2)).is_none());
    }

    #[test]
    fn monic_division() {
        let a = UniPoly::from_root_values(&[1, 5, 5, 5, 5]);
        let b = UniPoly::from_root_values(&[1, 5]);
        assert_eq!(
            a.div_exact_monic(&b),
            Some(UniPoly::from_root_values(&[5, 5, 5]))
        );
        let c = UniPoly::from_root_values(&[1, 3, 3, 5]);
        assert_eq!(a.div_exact_monic(&c), None);
    }

    #[test]
    fn factored_rendering() {
        let roots = vec![
            (Integer::from(3), 2),
            (Integer::from(1), 1),
            (Integer::from(0), 1),
        ];
        assert_eq!(factored_string(&roots), "t(t - 1)(t - 3)^2");
    }

    #[test]
    fn serde_as_strings() {
        let p = UniPoly::from_i64(&[13, -8, 1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["13","-8","1"]"#);
        let back: UniPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
