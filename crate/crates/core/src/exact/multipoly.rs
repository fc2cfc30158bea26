//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose order is
//! degree-lexicographic, so iteration order and printed output are canonical.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, Integer, Rational};

/// Exponent vector. Ordered by total degree, then lexicographically with the
/// first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending
    /// deglex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Self> {
        fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur.push(left);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(nvars, i + 1, left - e, cur, out);
                cur.pop();
            }
        }
        if nvars == 0 {
            return if d == 0 {
                vec![Monomial(Vec::new())]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        rec(nvars, 0, d, &mut Vec::with_capacity(nvars), &mut out);
        out
    }

    /// Drops variable `k`, which must have exponent zero.
    fn without(&self, k: usize) -> Self {
        let mut e = self.0.clone();
        e.remove(k);
        Self(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Variable name used for printing: `x, y, z` up to three variables, then
/// `x1, x2, ...`.
pub fn var_name(nvars: usize, i: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { nvars, terms }
    }

    /// The linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Integer]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms
                    .insert(Monomial::var(n, i), Rational::from_integer(c.clone()));
            }
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term in deglex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Common degree of all terms; `None` when zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exps().iter().zip(point).fold(c.clone(), |acc, (&e, x)| {
                    acc * num_traits::pow(x.clone(), e as usize)
                })
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Substitutes `x_k = replacement` (a polynomial in the same variables
    /// not involving `x_k`) and removes the variable, giving a polynomial in
    /// `nvars - 1` variables.
    pub fn substitute_and_drop(&self, k: usize, replacement: &MultiPoly) -> MultiPoly {
        assert_eq!(replacement.nvars, self.nvars);
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(self.nvars)];
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let ek = m.0[k] as usize;
            while powers.len() <= ek {
                let next = &powers[powers.len() - 1] * replacement;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[k] = 0;
            for (pm, pc) in &powers[ek].terms {
                out.add_term(rest.mul(pm), c * pc);
            }
        }
        MultiPoly {
            nvars: self.nvars - 1,
            terms: out
                .terms
                .into_iter()
                .map(|(m, c)| {
                    debug_assert_eq!(m.0[k], 0);
                    (m.without(k), c)
                })
                .collect(),
        }
    }

    /// Substitutes `x_i = images[i]`; the images share a variable count,
    /// which becomes that of the result.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, MultiPoly::nvars);
        let mut powers: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one(target)]; self.nvars];
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    acc = &acc * &powers[i][e as usize];
                }
            }
            out = &out + &acc;
        }
        out
    }

    /// Reduction modulo a linear form: eliminates the variable with the
    /// largest index among those with nonzero coefficient, and returns the
    /// result in the remaining variables with that index.
    pub fn reduce_mod_form(&self, form: &[Integer]) -> (MultiPoly, usize) {
        assert_eq!(form.len(), self.nvars);
        let k = form
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("nonzero linear form");
        let ak = Rational::from_integer(form[k].clone());
        let mut replacement = MultiPoly::zero(self.nvars);
        for (j, c) in form.iter().enumerate() {
            if j != k && !c.is_zero() {
                replacement.add_term(
                    Monomial::var(self.nvars, j),
                    -Rational::from_integer(c.clone()) / &ak,
                );
            }
        }
        (self.substitute_and_drop(k, &replacement), k)
    }

    /// True when the linear form divides `self`.
    pub fn divisible_by_form(&self, form: &[Integer]) -> bool {
        self.reduce_mod_form(form).0.is_zero()
    }

    /// Returns `(c, p)` with `self = c * p`, `p` having integer coprime
    /// coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let den = common_denominator(self.terms.values());
        let ints: Vec<Integer> = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(Integer::zero(), |g, v| g.gcd(v));
        if self.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            g = -g;
        }
        let content = Rational::new(g.clone(), den);
        let p = MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .keys()
                .cloned()
                .zip(ints.into_iter().map(|v| Rational::from_integer(v / &g)))
                .collect(),
        };
        (content, p)
    }

    /// If `self = c * other` for a nonzero rational `c`, returns `c`.
    pub fn scalar_multiple_of(&self, other: &MultiPoly) -> Option<Rational> {
        if self.is_zero() || other.is_zero() || self.len() != other.len() {
            return None;
        }
        let (m, oc) = other.leading_term()?;
        let c = self.coeff(m) / oc;
        if c.is_zero() {
            return None;
        }
        (other.scale(&c) == *self).then_some(c)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        let name = var_name(self.nvars, i);
                        if e == 1 {
                            name
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        match (PackedPoly::pack(self), PackedPoly::pack(rhs)) {
            (Some((a, da)), Some((b, db))) if fits_packed(self, rhs) => {
                a.mul(&b).unpack(self.nvars, &(da * db))
            }
            _ => {
                let mut out = MultiPoly::zero(self.nvars);
                for (ma, ca) in &self.terms {
                    for (mb, cb) in &rhs.terms {
                        out.add_term(ma.mul(mb), ca * cb);
                    }
                }
                out
            }
        }
    }
}

const PACK_BITS: u32 = 8;
const PACK_MAX_VARS: usize = 8;

fn fits_packed(a: &MultiPoly, b: &MultiPoly) -> bool {
    a.nvars <= PACK_MAX_VARS
        && a.total_degree().unwrap_or(0) + b.total_degree().unwrap_or(0) < (1 << PACK_BITS)
}

/// Integer polynomial with monomials packed into a `u64`, one byte per
/// variable. Multiplication adds keys, which is exact while every exponent
/// stays below 256.
#[derive(Clone, Debug, Default)]
struct PackedPoly {
    terms: HashMap<u64, Integer>,
}

impl PackedPoly {
    /// Returns the packed integer numerator and the common denominator.
    fn pack(p: &MultiPoly) -> Option<(Self, Integer)> {
        if p.nvars > PACK_MAX_VARS || p.total_degree().unwrap_or(0) >= (1 << PACK_BITS) {
            return None;
        }
        let den = common_denominator(p.terms.values());
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| {
                let key =
                    m.0.iter()
                        .fold(0u64, |acc, &e| (acc << PACK_BITS) | u64::from(e));
                (key, (c * Rational::from_integer(den.clone())).to_integer())
            })
            .collect();
        Some((Self { terms }, den))
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out: HashMap<u64, Integer> = HashMap::with_capacity(self.terms.len() * 2);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                *out.entry(ka + kb).or_default() += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self { terms: out }
    }

    fn add_scaled(&mut self, other: &Self, sign_negative: bool) {
        for (k, c) in &other.terms {
            let e = self.terms.entry(*k).or_default();
            if sign_negative {
                *e -= c;
            } else {
                *e += c;
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn unpack(&self, nvars: usize, den: &Integer) -> MultiPoly {
        let mask = (1u64 << PACK_BITS) - 1;
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let exps = (0..nvars)
                    .map(|i| ((k >> (PACK_BITS as usize * (nvars - 1 - i))) & mask) as u32)
                    .collect();
                (Monomial(exps), Rational::new(c.clone(), den.clone()))
            })
            .collect();
        MultiPoly { nvars, terms }
    }
}

/// Determinant of a square matrix of polynomials, by Laplace expansion with
/// memoised minors over the bottom rows. Exact and division-free.
pub fn det_poly(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n),
        "det_poly needs a square matrix"
    );
    assert!(n <= 20, "det_poly: matrix too large for subset expansion");
    let nvars = m
        .first()
        .and_then(|r| r.first())
        .map_or(0, MultiPoly::nvars);
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    let total_deg: u32 = m
        .iter()
        .map(|r| {
            r.iter()
                .filter_map(MultiPoly::total_degree)
                .max()
                .unwrap_or(0)
        })
        .sum();
    if nvars <= PACK_MAX_VARS && total_deg < (1 << PACK_BITS) {
        det_packed(m, nvars)
    } else {
        det_generic(m, nvars)
    }
}

fn det_packed(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    let mut den = Integer::one();
    let packed: Vec<Vec<PackedPoly>> = m
        .iter()
        .map(|row| {
            let row_den = row.iter().fold(Integer::one(), |acc, p| {
                acc.lcm(&common_denominator(p.terms.values()))
            });
            den *= &row_den;
            row.iter()
                .map(|p| {
                    let scaled = p.scale(&Rational::from_integer(row_den.clone()));
                    PackedPoly::pack(&scaled).expect("packable").0
                })
                .collect()
        })
        .collect();

    // minors[mask] = det of rows (n - |mask|).. restricted to the columns in mask
    let mut minors: HashMap<u32, PackedPoly> = HashMap::new();
    let one = PackedPoly {
        terms: HashMap::from([(0u64, Integer::one())]),
    };
    minors.insert(0, one);
    for k in 1..=n {
        let row = n - k;
        let mut next: HashMap<u32, PackedPoly> = HashMap::new();
        for mask in masks_of_size(n, k) {
            let mut acc = PackedPoly::default();
            for (pos, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
                let entry = &packed[row][col];
                if entry.terms.is_empty() {
                    continue;
                }
                let Some(sub) = minors.get(&(mask & !(1 << col))) else {
                    continue;
                };
                if sub.terms.is_empty() {
                    continue;
                }
                acc.add_scaled(&entry.mul(sub), pos % 2 == 1);
            }
            next.insert(mask, acc);
        }
        minors = next;
    }
    minors[&((1u32 << n) - 1)].unpack(nvars, &den)
}

fn det_generic(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    let mut minors: HashMap<u32, MultiPoly> = HashMap::from([(0, MultiPoly::one(nvars))]);
    for k in 1..=n {
        let row = n - k;
        let mut next = HashMap::new();
        for mask in masks_of_size(n, k) {
            let mut acc = MultiPoly::zero(nvars);
            for (pos, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
                let prod = &m[row][col] * &minors[&(mask & !(1 << col))];
                acc = if pos % 2 == 1 {
                    &acc - &prod
                } else {
                    &acc + &prod
                };
            }
            next.insert(mask, acc);
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).expect("full minor")
}

fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..(1u32 << n)).filter(move |m| m.count_ones() as usize == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rat_int};

    fn xyz() -> (MultiPoly, MultiPoly, MultiPoly) {
        (
            MultiPoly::var(3, 0),
            MultiPoly::var(3, 1),
            MultiPoly::var(3, 2),
        )
    }

    #[test]
    fn deglex_order() {
        let a = Monomial::new(vec![0, 0, 2]);
        let b = Monomial::new(vec![1, 0, 0]);
        let c = Monomial::new(vec![0, 1, 1]);
        let d = Monomial::new(vec![1, 0, 1]);
        assert!(a > b, "degree dominates");
        assert!(d > c, "x beats y at equal degree");
        let all = Monomial::all_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn display_and_arithmetic() {
        let (x, y, _) = xyz();
        let p = &(&x * &x) - &(&y * &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        let q = &(&x + &y) * &(&x - &y);
        assert_eq!(p, q);
        assert_eq!(p.scale(&rat(-3, 2)).to_string(), "-3/2*x^2 + 3/2*y^2");
    }

    #[test]
    fn diagonal_determinant() {
        let (x, y, z) = xyz();
        let zero = MultiPoly::zero(3);
        let m = vec![
            vec![x.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), y.clone(), zero.clone()],
            vec![zero.clone(), zero, z.clone()],
        ];
        assert_eq!(det_poly(&m), &(&x * &y) * &z);
    }

    #[test]
    fn two_by_two_determinant() {
        let (x, y, _) = xyz();
        let m = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
        assert_eq!(det_poly(&m), &(&x * &x) - &(&y * &y));
        assert_eq!(det_generic(&m, 3), det_poly(&m));
    }

    #[test]
    fn equal_rows_give_zero() {
        let (x, y, z) = xyz();
        let row = vec![&x + &y, z.scale(&rat(1, 3)), &x * &z];
        let m = vec![row.clone(), vec![y.clone(), x.clone(), z.clone()], row];
        assert!(det_poly(&m).is_zero());
    }

    #[test]
    fn reduction_modulo_form() {
        let (x, y, z) = xyz();
        // (x - z)(y + z) vanishes mod x - z
        let p = &(&x - &z) * &(&y + &z);
        assert!(p.divisible_by_form(&[int(1), int(0), int(-1)]));
        assert!(!p.divisible_by_form(&[int(0), int(1), int(-1)]));
        // mod y - 2z: z -> y/2
        let (r, k) = z.reduce_mod_form(&[int(0), int(1), int(-2)]);
        assert_eq!(k, 2);
        assert_eq!(r, MultiPoly::var(2, 1).scale(&rat(1, 2)));
    }

    #[test]
    fn primitive_and_scalar_multiple() {
        let (x, y, _) = xyz();
        let p = (&x.scale(&rat(-2, 3)) + &y.scale(&rat(4, 3))).clone();
        let (c, q) = p.primitive_part();
        assert_eq!(c, rat(-2, 3));
        assert_eq!(q, &x - &y.scale(&rat_int(2)));
        assert_eq!(p.scalar_multiple_of(&q), Some(rat(-2, 3)));
        assert_eq!(p.scalar_multiple_of(&x), None);
    }

    #[test]
    fn evaluation() {
        let (x, y, z) = xyz();
        let p = &(&x * &y) + &z.scale(&rat_int(3));
        assert_eq!(p.eval(&[rat_int(2), rat_int(5), rat(1, 3)]), rat_int(11));
    }
}
