//! Logarithmic derivations: graded slices of `D(A)`, a Saito-criterion
//! freeness test, and the Euler restriction map.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arrangement::{Arrangement, LinearForm};
use crate::error::{Error, Result};
use crate::exact::{
    certified_kernel, common_denominator, det_poly, gcd_all, integer_roots, rref, IntMatrix,
    Integer, Monomial, MultiPoly, RatMatrix, Rational,
};
use crate::lattice::char_data;

/// A homogeneous derivation `sum theta_i d/dx_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    degree: u32,
    components: Vec<MultiPoly>,
}

impl Derivation {
    /// Components must be homogeneous of degree `degree` (zero allowed).
    pub fn new(degree: u32, components: Vec<MultiPoly>) -> Result<Self> {
        let dim = components.len();
        for (i, c) in components.iter().enumerate() {
            if c.nvars() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.nvars(),
                });
            }
            if !c.is_zero() && c.homogeneous_degree() != Some(degree) {
                return Err(Error::Precondition(format!(
                    "component {i} is not homogeneous of degree {degree}"
                )));
            }
        }
        Ok(Self { degree, components })
    }

    /// The Euler derivation `sum x_i d/dx_i`.
    pub fn euler(dim: usize) -> Self {
        Self {
            degree: 1,
            components: (0..dim).map(|i| MultiPoly::var(dim, i)).collect(),
        }
    }

    /// The constant derivation in direction `v`.
    pub fn constant(v: &[Rational]) -> Self {
        let dim = v.len();
        Self {
            degree: 0,
            components: v
                .iter()
                .map(|c| MultiPoly::constant(dim, c.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiPoly::is_zero)
    }

    /// `theta(alpha)` for a linear form.
    pub fn apply(&self, form: &LinearForm) -> MultiPoly {
        let mut out = MultiPoly::zero(self.dim());
        for (c, p) in form.coeffs().iter().zip(&self.components) {
            if !c.is_zero() {
                out = &out + &p.scale(&Rational::from_integer(c.clone()));
            }
        }
        out
    }

    /// Whether `theta(alpha)` lies in the ideal generated by `alpha`.
    pub fn preserves(&self, form: &LinearForm) -> bool {
        self.apply(form).divisible_by_form(form.coeffs())
    }

    /// First hyperplane of `a` not preserved, if any.
    pub fn first_violation(&self, a: &Arrangement) -> Option<usize> {
        (0..a.len()).find(|&i| !self.preserves(a.form(i)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            degree: self.degree,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        Self {
            degree: self.degree,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `f * theta` for a homogeneous polynomial `f`.
    pub fn mul_poly(&self, f: &MultiPoly) -> Self {
        let d = f.homogeneous_degree().expect("homogeneous multiplier");
        Self {
            degree: self.degree + d,
            components: self.components.iter().map(|p| p * f).collect(),
        }
    }

    /// Rescales to integer coefficients with content 1 and a positive leading
    /// coefficient in the first nonzero component.
    pub fn primitive(&self) -> Self {
        let all: Vec<&Rational> = self
            .components
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c))
            .collect();
        if all.is_empty() {
            return self.clone();
        }
        let den = common_denominator(all.iter().copied());
        let nums: Vec<Integer> = all
            .iter()
            .map(|c| (*c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = gcd_all(nums.iter());
        let lead_negative = self
            .components
            .iter()
            .find(|p| !p.is_zero())
            .and_then(|p| p.leading_term())
            .is_some_and(|(_, c)| c.is_negative());
        if lead_negative {
            g = -g;
        }
        self.scale(&Rational::new(den, g))
    }

    /// Human-readable form, e.g. `x*d/dx + y*d/dy`.
    pub fn to_string_with_partials(&self) -> String {
        let dim = self.dim();
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| {
                let name = crate::exact::multipoly::var_name(dim, i);
                let text = p.to_string();
                if text == "1" {
                    format!("d{name}")
                } else if text == "-1" {
                    format!("-d{name}")
                } else if p.len() == 1 {
                    format!("{p}*d{name}")
                } else {
                    format!("({p})*d{name}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl std::fmt::Debug for Derivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Derivation[deg {}]({})",
            self.degree,
            self.to_string_with_partials()
        )
    }
}

impl Serialize for Derivation {
    /// `{"degree": d, "components": [[[exponents], "coefficient"], ...] per component}`
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Component<'a>(&'a MultiPoly);
        impl Serialize for Component<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (m, c) in self.0.terms().rev() {
                    seq.serialize_element(&(m.exps(), c.to_string()))?;
                }
                seq.end()
            }
        }
        let comps: Vec<Component<'_>> = self.components.iter().map(Component).collect();
        let mut st = s.serialize_struct("Derivation", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("components", &comps)?;
        st.end()
    }
}

/// `dim S_m` for the polynomial ring in `n` variables.
pub fn poly_space_dim(n: usize, m: i64) -> u64 {
    if m < 0 {
        return 0;
    }
    if n == 0 {
        return u64::from(m == 0);
    }
    let m = m as u64;
    let k = (n - 1) as u64;
    // C(m + k, k)
    (1..=k).fold(1u64, |acc, i| acc * (m + i) / i)
}

/// Slice dimensions of a free module with the given exponents.
pub fn free_profile(n: usize, exponents: &[u32], dmax: u32) -> Vec<u64> {
    (0..=dmax)
        .map(|d| {
            exponents
                .iter()
                .map(|&e| poly_space_dim(n, i64::from(d) - i64::from(e)))
                .sum()
        })
        .collect()
}

/// Basis of `D(A)_d`, the degree-`d` derivations preserving every hyperplane.
///
/// The unknowns are the monomial coefficients of the components. For each
/// non-coordinate hyperplane, `theta(alpha_H)` is reduced modulo `alpha_H`
/// by eliminating its last variable, scaled to stay integral, and every
/// coefficient of the remainder gives one equation. A coordinate hyperplane
/// `x_k` just forces component `k` into `x_k S`, so those unknowns are
/// dropped instead.
pub fn derivation_slice(a: &Arrangement, d: u32) -> Vec<Derivation> {
    let dim = a.dim();
    if dim == 0 {
        return Vec::new();
    }
    let monos = Monomial::all_of_degree(dim, d);
    let mut coordinate = vec![false; dim];
    for f in a.forms() {
        if let Some(k) = f.is_coordinate() {
            coordinate[k] = true;
        }
    }
    let unknowns: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..monos.len()).map(move |m| (i, m)))
        .filter(|&(i, m)| !coordinate[i] || monos[m].exps()[i] > 0)
        .collect();

    let mut system = IntMatrix::new(unknowns.len());
    for form in a.forms().iter().filter(|f| f.is_coordinate().is_none()) {
        for row in reduction_equations(form, d, &monos, &unknowns) {
            system.push_row(row);
        }
    }
    certified_kernel(&system)
        .into_iter()
        .map(|v| {
            let mut comps: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); dim];
            for (&(i, m), c) in unknowns.iter().zip(v) {
                if !c.is_zero() {
                    comps[i].push((monos[m].clone(), c));
                }
            }
            Derivation {
                degree: d,
                components: comps
                    .into_iter()
                    .map(|t| MultiPoly::from_terms(dim, t))
                    .collect(),
            }
            .primitive()
        })
        .collect()
}

/// Equations expressing `theta(alpha) = 0 mod alpha`, one per monomial of the
/// reduced polynomial. A monomial `x^r x_k^e` reduces to
/// `x^r (-L)^e / a_k^e` with `L = sum_{j != k} a_j x_j`; everything is scaled
/// by `a_k^d`.
fn reduction_equations(
    form: &LinearForm,
    d: u32,
    monos: &[Monomial],
    unknowns: &[(usize, usize)],
) -> Vec<Vec<(usize, Integer)>> {
    let coeffs = form.coeffs();
    let dim = coeffs.len();
    let k = form.last_nonzero();
    let ak = &coeffs[k];

    // (-L)^e as sparse maps of exponent vectors (x_k exponent always 0)
    let neg_l: HashMap<Vec<u32>, Integer> = (0..dim)
        .filter(|&j| j != k && !coeffs[j].is_zero())
        .map(|j| (Monomial::var(dim, j).exps().to_vec(), -coeffs[j].clone()))
        .collect();
    let mut powers: Vec<HashMap<Vec<u32>, Integer>> =
        vec![HashMap::from([(vec![0; dim], Integer::one())])];
    for _ in 0..d {
        let prev = powers.last().expect("nonempty");
        let mut next: HashMap<Vec<u32>, Integer> = HashMap::new();
        for (m1, c1) in prev {
            for (m2, c2) in &neg_l {
                let key: Vec<u32> = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
                *next.entry(key).or_default() += c1 * c2;
            }
        }
        next.retain(|_, c| !c.is_zero());
        powers.push(next);
    }
    let ak_pows: Vec<Integer> = (0..=d)
        .map(|e| num_traits::pow(ak.clone(), e as usize))
        .collect();

    let mut row_of: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, Integer)>> = Vec::new();
    for (col, &(i, m)) in unknowns.iter().enumerate() {
        let ai = &coeffs[i];
        if ai.is_zero() {
            continue;
        }
        let exps = monos[m].exps();
        let e = exps[k];
        let mut rest = exps.to_vec();
        rest[k] = 0;
        let scale = ai * &ak_pows[(d - e) as usize];
        for (pm, pc) in &powers[e as usize] {
            let key: Vec<u32> = rest.iter().zip(pm).map(|(x, y)| x + y).collect();
            let r = *row_of.entry(key).or_insert_with(|| {
                rows.push(Vec::new());
                rows.len() - 1
            });
            rows[r].push((col, &scale * pc));
        }
    }
    rows
}

/// `dim D(A)_d` for `d = 0..=dmax`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub dims: Vec<u64>,
}

pub fn hilbert_profile(a: &Arrangement, dmax: u32) -> GradedDims {
    let solve = |d: u32| derivation_slice(a, d).len() as u64;
    #[cfg(feature = "parallel")]
    let dims = {
        use rayon::prelude::*;
        (0..=dmax).into_par_iter().map(solve).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let dims = (0..=dmax).map(solve).collect();
    GradedDims { dims }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FreenessStatus {
    Free,
    NotFree,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum FreenessReason {
    /// The characteristic polynomial has a non-integer root.
    ChiDoesNotSplit,
    /// A slice dimension differs from the free profile forced by the roots.
    HilbertMismatch {
        degree: u32,
        expected: u64,
        found: u64,
    },
    SaitoVerified,
    /// No random draw produced a Saito basis.
    SaitoGenericFail {
        attempts: u32,
    },
    /// A candidate exponent exceeds the solver's degree cap.
    DegreeCapExceeded {
        cap: u32,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct FreenessVerdict {
    pub status: FreenessStatus,
    pub exponents: Option<Vec<u32>>,
    pub reason: FreenessReason,
    /// A Saito basis, stored whenever the status is `Free`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Derivation>>,
}

impl FreenessVerdict {
    pub fn is_free(&self) -> bool {
        self.status == FreenessStatus::Free
    }

    fn no(reason: FreenessReason, exponents: Option<Vec<u32>>) -> Self {
        Self {
            status: FreenessStatus::NotFree,
            exponents,
            reason,
            basis: None,
        }
    }

    fn inconclusive(reason: FreenessReason, exponents: Vec<u32>) -> Self {
        Self {
            status: FreenessStatus::Inconclusive,
            exponents: Some(exponents),
            reason,
            basis: None,
        }
    }

    /// Human-readable one-liner, e.g. `Free(1,3,5)`.
    pub fn summary(&self) -> String {
        let exps = self
            .exponents
            .as_ref()
            .map(|e| e.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
        match (self.status, &self.reason) {
            (FreenessStatus::Free, _) => format!("Free({})", exps.unwrap_or_default()),
            (FreenessStatus::NotFree, FreenessReason::ChiDoesNotSplit) => {
                "NotFree (characteristic polynomial does not split over Z)".into()
            }
            (FreenessStatus::NotFree, FreenessReason::HilbertMismatch { degree, expected, found }) => format!(
                "NotFree (dim D(A)_{degree} = {found}, a free module with exponents ({}) needs {expected})",
                exps.unwrap_or_default()
            ),
            (FreenessStatus::Inconclusive, FreenessReason::DegreeCapExceeded { cap }) => {
                format!("Inconclusive (candidate exponents ({}) exceed degree cap {cap})", exps.unwrap_or_default())
            }
            (FreenessStatus::Inconclusive, FreenessReason::SaitoGenericFail { attempts }) => format!(
                "Inconclusive (no Saito basis in {attempts} random draws for exponents ({}))",
                exps.unwrap_or_default()
            ),
            (status, reason) => format!("{status:?} ({reason:?})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FreenessOptions {
    /// Largest degree the slice solver is asked for.
    pub max_degree: Option<u32>,
    pub seed: u64,
    pub retries: u32,
}

impl Default for FreenessOptions {
    fn default() -> Self {
        Self {
            max_degree: None,
            seed: 0x5a17_0b45,
            retries: 5,
        }
    }
}

pub fn freeness(a: &Arrangement) -> Result<FreenessVerdict> {
    freeness_with(a, &FreenessOptions::default())
}

/// Decides freeness. Candidate exponents are the roots of `chi`; the slice
/// dimensions up to the largest one must match the free profile; then
/// random combinations of slice elements are tested with Saito's criterion.
/// Non-essential arrangements are handled on their essentialization and the
/// basis is lifted back.
pub fn freeness_with(a: &Arrangement, opts: &FreenessOptions) -> Result<FreenessVerdict> {
    let chi = char_data(a).chi;
    let roots = integer_roots(&chi)?;
    if !roots.splits {
        return Ok(FreenessVerdict::no(FreenessReason::ChiDoesNotSplit, None));
    }
    let exponents: Vec<u32> = roots
        .multiset_i64()
        .into_iter()
        .map(|r| u32::try_from(r).expect("roots of chi are non-negative"))
        .collect();

    let rank = a.rank();
    if rank < a.dim() {
        let ess = a.essentialize();
        let inner = freeness_with(&ess.arrangement, opts)?;
        let zeros = a.dim() - rank;
        let lift_exps = |e: Vec<u32>| {
            let mut out = vec![0; zeros];
            out.extend(e);
            out
        };
        return Ok(match inner.status {
            FreenessStatus::Free => {
                let basis = lift_basis(a, &ess, inner.basis.as_deref().unwrap_or_default());
                debug_assert!(saito_check(a, &basis).unwrap_or(false));
                FreenessVerdict {
                    status: FreenessStatus::Free,
                    exponents: inner.exponents.map(lift_exps),
                    reason: inner.reason,
                    basis: Some(basis),
                }
            }
            _ => FreenessVerdict {
                exponents: inner.exponents.map(lift_exps),
                basis: None,
                ..inner
            },
        });
    }

    let dmax = exponents.iter().copied().max().unwrap_or(0);
    if let Some(cap) = opts.max_degree {
        if dmax > cap {
            return Ok(FreenessVerdict::inconclusive(
                FreenessReason::DegreeCapExceeded { cap },
                exponents,
            ));
        }
    }

    let expected = free_profile(a.dim(), &exponents, dmax);
    let mut slices: HashMap<u32, Vec<Derivation>> = HashMap::new();
    for d in 0..=dmax {
        let slice = derivation_slice(a, d);
        let found = slice.len() as u64;
        if found != expected[d as usize] {
            return Ok(FreenessVerdict::no(
                FreenessReason::HilbertMismatch {
                    degree: d,
                    expected: expected[d as usize],
                    found,
                },
                Some(exponents),
            ));
        }
        if exponents.contains(&d) {
            slices.insert(d, slice);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let q = a.defining_polynomial();
    if let Some(basis) = greedy_candidate(&exponents, &slices, &q, &mut rng) {
        if saito_check(a, &basis)? {
            return Ok(FreenessVerdict {
                status: FreenessStatus::Free,
                exponents: Some(exponents),
                reason: FreenessReason::SaitoVerified,
                basis: Some(basis),
            });
        }
    }
    for attempt in 0..opts.retries {
        let range: i64 = 4 << (2 * attempt);
        let basis = draw_candidate(&exponents, &slices, a.dim(), range, &mut rng);
        if !screen_at_points(&basis, &q, &mut rng) {
            continue;
        }
        if saito_check(a, &basis)? {
            return Ok(FreenessVerdict {
                status: FreenessStatus::Free,
                exponents: Some(exponents),
                reason: FreenessReason::SaitoVerified,
                basis: Some(basis),
            });
        }
    }
    Ok(FreenessVerdict::inconclusive(
        FreenessReason::SaitoGenericFail {
            attempts: opts.retries,
        },
        exponents,
    ))
}

/// Walks the slice bases in order, keeping each element that raises the rank
/// of the coefficient matrix at one random point off the arrangement. Rank
/// at a point never exceeds the generic rank, so the result is independent
/// whenever it is complete; its elements are single kernel vectors, which
/// reads better than random combinations.
fn greedy_candidate(
    exponents: &[u32],
    slices: &HashMap<u32, Vec<Derivation>>,
    q: &MultiPoly,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Derivation>> {
    let dim = exponents.len();
    let point = (0..8).find_map(|_| {
        let p: Vec<Rational> = (0..dim)
            .map(|_| Rational::from_integer(Integer::from(rng.gen_range(-1000i64..=1000))))
            .collect();
        (!q.eval(&p).is_zero()).then_some(p)
    })?;
    let values =
        |t: &Derivation| -> Vec<Rational> { t.components.iter().map(|c| c.eval(&point)).collect() };
    let mut basis: Vec<Derivation> = Vec::with_capacity(dim);
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(dim);
    let mut next = HashMap::new();
    for &e in exponents {
        let euler = (e == 1).then(|| Derivation::euler(dim));
        let pool = euler.iter().chain(slices[&e].iter());
        let start: usize = *next.get(&e).unwrap_or(&0);
        let mut picked = false;
        for (k, cand) in pool.enumerate().skip(start) {
            let mut trial = rows.clone();
            trial.push(values(cand));
            if rref(&RatMatrix::from_rows(dim, trial.clone())).rank == trial.len() {
                rows = trial;
                basis.push(cand.clone());
                next.insert(e, k + 1);
                picked = true;
                break;
            }
        }
        if !picked {
            return None;
        }
    }
    Some(basis)
}

fn draw_candidate(
    exponents: &[u32],
    slices: &HashMap<u32, Vec<Derivation>>,
    dim: usize,
    range: i64,
    rng: &mut ChaCha8Rng,
) -> Vec<Derivation> {
    let mut basis = Vec::with_capacity(exponents.len());
    let mut used_euler = false;
    for &e in exponents {
        if e == 1 && !used_euler {
            basis.push(Derivation::euler(dim));
            used_euler = true;
            continue;
        }
        let slice = &slices[&e];
        let mut acc: Option<Derivation> = None;
        for s in slice {
            let c = Rational::from_integer(Integer::from(rng.gen_range(-range..=range)));
            let term = s.scale(&c);
            acc = Some(match acc {
                None => term,
                Some(x) => x.add(&term),
            });
        }
        basis.push(acc.expect("slice of a candidate exponent is nonempty"));
    }
    basis
}

/// Cheap necessary condition before the symbolic determinant: at a random
/// point off the arrangement the coefficient matrix must be invertible.
fn screen_at_points(basis: &[Derivation], q: &MultiPoly, rng: &mut ChaCha8Rng) -> bool {
    let dim = basis.len();
    for _ in 0..8 {
        let point: Vec<Rational> = (0..dim)
            .map(|_| Rational::from_integer(Integer::from(rng.gen_range(-1000i64..=1000))))
            .collect();
        if q.eval(&point).is_zero() {
            continue;
        }
        let rows: Vec<Vec<Rational>> = basis
            .iter()
            .map(|t| t.components.iter().map(|p| p.eval(&point)).collect())
            .collect();
        return rref(&RatMatrix::from_rows(dim, rows)).rank == dim;
    }
    true
}

/// Lifts a basis of `D(A^e)` to `D(A)`: `eta` becomes
/// `sum_j eta_j(P x) d/dx_{p_j}`, and constant derivations along the kernel
/// of the projection `P` fill the remaining slots.
fn lift_basis(
    a: &Arrangement,
    ess: &crate::arrangement::Essentialization,
    inner: &[Derivation],
) -> Vec<Derivation> {
    let dim = a.dim();
    let proj = RatMatrix::from_rows(dim, ess.projection.clone());
    let mut basis: Vec<Derivation> = rref(&proj)
        .kernel
        .iter()
        .map(|v| Derivation::constant(v).primitive())
        .collect();
    let images: Vec<MultiPoly> = ess
        .projection
        .iter()
        .map(|row| {
            MultiPoly::from_terms(
                dim,
                row.iter()
                    .enumerate()
                    .map(|(i, c)| (Monomial::var(dim, i), c.clone())),
            )
        })
        .collect();
    for eta in inner {
        let mut comps = vec![MultiPoly::zero(dim); dim];
        for (j, &p) in ess.pivots.iter().enumerate() {
            comps[p] = eta.components[j].compose(&images);
        }
        basis.push(
            Derivation {
                degree: eta.degree,
                components: comps,
            }
            .primitive(),
        );
    }
    basis
}

/// Checks that every derivation lies in `D(A)`.
pub fn check_membership(a: &Arrangement, thetas: &[Derivation]) -> Result<()> {
    for (i, t) in thetas.iter().enumerate() {
        if t.dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: t.dim(),
            });
        }
        if let Some(h) = t.first_violation(a) {
            return Err(Error::Membership {
                derivation: i,
                hyperplane: h,
            });
        }
    }
    Ok(())
}

/// Saito's criterion: `l` derivations in `D(A)` whose degrees sum to `|A|`
/// form a basis iff their coefficient determinant is a nonzero multiple of
/// `Q(A)`.
pub fn saito_check(a: &Arrangement, thetas: &[Derivation]) -> Result<bool> {
    if thetas.len() != a.dim() {
        return Err(Error::Precondition(format!(
            "Saito's criterion needs {} derivations, got {}",
            a.dim(),
            thetas.len()
        )));
    }
    check_membership(a, thetas)?;
    let sum: u32 = thetas.iter().map(Derivation::degree).sum();
    if sum as usize != a.len() {
        return Err(Error::SaitoDegreeSum {
            sum,
            count: a.len(),
        });
    }
    Ok(saito_determinant(thetas)
        .scalar_multiple_of(&a.defining_polynomial())
        .is_some())
}

/// Determinant of the coefficient matrix (row `i` holds the components of
/// `thetas[i]`).
pub fn saito_determinant(thetas: &[Derivation]) -> MultiPoly {
    let m: Vec<Vec<MultiPoly>> = thetas.iter().map(|t| t.components.clone()).collect();
    det_poly(&m)
}

/// The Euler restriction map to `A^H` for `H` the `i`-th hyperplane: substitute
/// `alpha_H = 0` in the components along the coordinates kept by
/// [`Arrangement::restrict`]. The image is checked to lie in `D(A^H)`.
pub fn euler_restrict(a: &Arrangement, i: usize, theta: &Derivation) -> Result<Derivation> {
    check_membership(a, std::slice::from_ref(theta))?;
    let k = a.restriction_coordinate(i)?;
    let form = a.form(i);
    let components: Vec<MultiPoly> = theta
        .components
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, p)| p.reduce_mod_form(form.coeffs()).0)
        .collect();
    let image = Derivation {
        degree: theta.degree,
        components,
    };
    let restricted = a.restrict(i)?;
    if let Some(h) = image.first_violation(&restricted) {
        return Err(Error::Membership {
            derivation: 0,
            hyperplane: h,
        });
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean(l: usize) -> Arrangement {
        let rows: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        Arrangement::from_i64(l, &refs).unwrap()
    }

    fn ex9() -> Arrangement {
        Arrangement::from_i64(
            3,
            &[
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, -1, 0],
                &[1, 1, 0],
                &[1, -2, 0],
                &[1, 2, 0],
                &[1, 0, -1],
                &[0, 1, -1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn dims_of_polynomial_spaces() {
        assert_eq!(poly_space_dim(3, 2), 6);
        assert_eq!(poly_space_dim(5, 4), 70);
        assert_eq!(poly_space_dim(3, -1), 0);
        assert_eq!(free_profile(3, &[1, 1, 1], 2), vec![0, 3, 9]);
    }

    #[test]
    fn boolean_slices() {
        let b2 = boolean(2);
        let s = derivation_slice(&b2, 1);
        assert_eq!(s.len(), 2);
        assert_eq!(hilbert_profile(&boolean(3), 2).dims, vec![0, 3, 9]);
        assert_eq!(hilbert_profile(&Arrangement::empty(3), 1).dims, vec![3, 9]);
    }

    #[test]
    fn euler_is_always_a_member() {
        let a = ex9();
        assert!(Derivation::euler(3).first_violation(&a).is_none());
        assert_eq!(derivation_slice(&a, 1).len(), 1);
    }

    #[test]
    fn ex9_is_free() {
        let v = freeness(&ex9()).unwrap();
        assert_eq!(v.status, FreenessStatus::Free);
        assert_eq!(v.exponents, Some(vec![1, 3, 5]));
        assert!(saito_check(&ex9(), v.basis.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn boolean_is_free() {
        let v = freeness(&boolean(3)).unwrap();
        assert_eq!(v.exponents, Some(vec![1, 1, 1]));
        assert!(v.is_free());
    }

    #[test]
    fn non_essential_lift() {
        // pencil x, y, x+y, x-y in three variables
        let a =
            Arrangement::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, -1, 0]]).unwrap();
        let v = freeness(&a).unwrap();
        assert_eq!(v.exponents, Some(vec![0, 1, 3]));
        assert!(saito_check(&a, v.basis.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn saito_rejects_bad_input() {
        let a = boolean(2);
        let e = Derivation::euler(2);
        assert!(matches!(
            saito_check(
                &a,
                &[
                    e.clone(),
                    e.scale(&Rational::from_integer(Integer::from(2)))
                ]
            ),
            Ok(false)
        ));
        let c = Derivation::constant(&[Rational::one(), Rational::zero()]);
        assert!(matches!(
            saito_check(&a, &[c.clone(), e.clone()]),
            Err(Error::Membership {
                derivation: 0,
                hyperplane: 0
            })
        ));
        let b = Arrangement::from_i64(2, &[&[1, 0]]).unwrap();
        assert!(matches!(
            saito_check(&b, &[e.clone(), e]),
            Err(Error::SaitoDegreeSum { sum: 2, count: 1 })
        ));
    }

    #[test]
    fn euler_maps_to_euler() {
        let a = ex9();
        for i in 0..a.len() {
            let img = euler_restrict(&a, i, &Derivation::euler(3)).unwrap();
            assert_eq!(img, Derivation::euler(2));
        }
    }
}
