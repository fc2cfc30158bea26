//! Checkers for the inequalities and exponent patterns relating an
//! arrangement to its deletions, restrictions and localizations.
//!
//! Every checker returns a [`CheckReport`]. A theorem instance that comes
//! back `Violated` while its hypotheses hold means a bug somewhere; a pattern
//! test that comes back `Violated` means the pattern is forbidden.

use std::fmt;

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::arrangement::{Arrangement, FlatSpec};
use crate::derivations::{FreenessStatus, FreenessVerdict};
use crate::error::Result;
use crate::exact::{intser, Integer, UniPoly};
use crate::lattice::{char_data, deletion_restriction_check, flats, Lattice};
use crate::roots::{a_invariant, display_poly, root_profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    Inapplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// An instance of a theorem; `Violated` would be a bug.
    Theorem,
    /// A test of hypothetical data; `Violated` means forbidden.
    Pattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisStatus {
    /// Established by this library's own computation.
    Verified,
    /// Taken on the caller's word.
    Assumed,
    /// Computed and found false.
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub statement: String,
    pub status: HypothesisStatus,
}

impl Hypothesis {
    pub fn new(statement: impl Into<String>, status: HypothesisStatus) -> Self {
        Self {
            statement: statement.into(),
            status,
        }
    }

    fn check(statement: impl Into<String>, ok: bool) -> Self {
        Self::new(
            statement,
            if ok {
                HypothesisStatus::Verified
            } else {
                HypothesisStatus::Failed
            },
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Witness {
    Hyperplane { index: usize },
    Flat { indices: Vec<usize> },
    Tuple { values: Vec<i64> },
    Mobius { indices: Vec<usize>, mu: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub check_name: String,
    pub kind: CheckKind,
    pub verdict: Verdict,
    #[serde(serialize_with = "intser::option")]
    pub lhs: Option<Integer>,
    #[serde(serialize_with = "intser::option")]
    pub rhs: Option<Integer>,
    /// For inequalities: whether both sides agree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    pub witness: Option<Witness>,
    pub hypotheses_satisfied: bool,
    pub hypotheses: Vec<Hypothesis>,
    pub detail: String,
}

impl CheckReport {
    fn new(name: &str, kind: CheckKind) -> Self {
        Self {
            check_name: name.to_string(),
            kind,
            verdict: Verdict::Inapplicable,
            lhs: None,
            rhs: None,
            equality: None,
            witness: None,
            hypotheses_satisfied: true,
            hypotheses: Vec::new(),
            detail: String::new(),
        }
    }

    fn inapplicable(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::Inapplicable;
        self.detail = why.into();
        self
    }

    fn with_hypotheses(mut self, hyps: Vec<Hypothesis>) -> Self {
        self.hypotheses_satisfied = hyps.iter().all(|h| h.status != HypothesisStatus::Failed);
        self.hypotheses = hyps;
        self
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    /// `lhs >= rhs` style report.
    fn inequality(mut self, lhs: Integer, rhs: Integer, holds: bool) -> Self {
        self.equality = Some(lhs == rhs);
        self.verdict = if holds {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    fn decided(mut self, holds: bool, detail: impl Into<String>) -> Self {
        self.verdict = if holds {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        self.detail = detail.into();
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    /// `holds`/`violated`, or `allowed`/`forbidden` for pattern tests.
    pub fn verdict_word(&self) -> &'static str {
        match (self.kind, self.verdict) {
            (_, Verdict::Inapplicable) => "inapplicable",
            (CheckKind::Theorem, Verdict::Holds) => "holds",
            (CheckKind::Theorem, Verdict::Violated) => "violated",
            (CheckKind::Pattern, Verdict::Holds) => "allowed",
            (CheckKind::Pattern, Verdict::Violated) => "forbidden",
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check_name, self.verdict_word())?;
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, " (lhs {l}, rhs {r}")?;
            if self.equality == Some(true) {
                write!(f, ", equality")?;
            }
            write!(f, ")")?;
        }
        if !self.detail.is_empty() {
            write!(f, " - {}", self.detail)?;
        }
        Ok(())
    }
}

fn to_i64s(v: &[Integer]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect()
}

fn count(n: usize) -> Integer {
    Integer::from(n)
}

/// `chi(A) = chi(A') - chi(A^H)`, each side from its own lattice.
pub fn deletion_restriction(a: &Arrangement, i: usize) -> Result<CheckReport> {
    let dr = deletion_restriction_check(a, i)?;
    let detail = format!(
        "chi = {}, chi(A') = {}, chi(A^H) = {}",
        display_poly(&dr.chi),
        display_poly(&dr.chi_deleted),
        display_poly(&dr.chi_restricted)
    );
    Ok(CheckReport::new("deletion_restriction", CheckKind::Theorem)
        .with_witness(Witness::Hyperplane { index: i })
        .decided(dr.holds, detail))
}

/// Localizations of a free arrangement are free. `local` is the verdict
/// computed for `A_X`.
pub fn localization_free(x: &FlatSpec, local: &FreenessVerdict) -> CheckReport {
    let report = CheckReport::new("localization_free", CheckKind::Theorem)
        .with_witness(Witness::Flat {
            indices: x.indices(),
        })
        .with_hypotheses(vec![Hypothesis::new(
            "A is free",
            HypothesisStatus::Verified,
        )]);
    match local.status {
        FreenessStatus::Free => report.decided(true, local.summary()),
        FreenessStatus::NotFree => report.decided(false, local.summary()),
        FreenessStatus::Inconclusive => report.inapplicable(local.summary()),
    }
}

/// `b2(A) >= b2(A^H) + |A^H| (|A| - |A^H|)`.
pub fn b2_restriction(a: &Arrangement, i: usize) -> Result<CheckReport> {
    let restricted = a.restrict(i)?;
    let lhs = char_data(a).b2();
    let nh = restricted.len();
    let rhs = char_data(&restricted).b2() + count(nh) * count(a.len() - nh);
    let holds = lhs >= rhs;
    Ok(CheckReport::new("b2_restriction", CheckKind::Theorem)
        .inequality(lhs, rhs, holds)
        .with_witness(Witness::Hyperplane { index: i }))
}

/// `b2(A) >= b2(A_X^e) + |A_X| (|A| - |A_X|)` for a flat of rank `l - 1`
/// of an essential arrangement.
pub fn b2_localization(a: &Arrangement, x: &FlatSpec) -> CheckReport {
    let report =
        CheckReport::new("b2_localization", CheckKind::Theorem).with_witness(Witness::Flat {
            indices: x.indices(),
        });
    if !a.is_essential() {
        return report.inapplicable("arrangement is not essential");
    }
    if x.rank() + 1 != a.dim() {
        return report.inapplicable(format!("flat has rank {}, need {}", x.rank(), a.dim() - 1));
    }
    let local = a.localize(x);
    let ess = local.essentialize().arrangement;
    let nx = local.len();
    let lhs = char_data(a).b2();
    let rhs = char_data(&ess).b2() + count(nx) * count(a.len() - nx);
    let holds = lhs >= rhs;
    let mut r = report.inequality(lhs, rhs, holds);
    if r.equality == Some(true) {
        r.detail = "equality (no fiberedness claim attached)".into();
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AvoidanceMode {
    Restriction,
    Localization,
}

/// Root avoidance: with `d` the roots of `chi0(A)` and `e` those of the
/// restriction (or essentialized localization), the configuration is
/// allowed iff `A(d) <= A(e, nA - nSub)`.
pub fn avoidance(
    d: &[Integer],
    e: &[Integer],
    n_a: usize,
    n_sub: usize,
    mode: AvoidanceMode,
) -> CheckReport {
    let name = match mode {
        AvoidanceMode::Restriction => "avoidance_restriction",
        AvoidanceMode::Localization => "avoidance_localization",
    };
    let report = CheckReport::new(name, CheckKind::Pattern)
        .with_witness(Witness::Tuple { values: to_i64s(e) });
    if e.len() + 1 != d.len() {
        return report.inapplicable(format!(
            "need {} roots for the smaller arrangement, got {}",
            d.len() - 1,
            e.len()
        ));
    }
    let sum_d: Integer = d.iter().sum();
    let sum_e: Integer = e.iter().sum();
    if sum_d + 1 != count(n_a) {
        return report.inapplicable(format!("sum of d plus 1 is not |A| = {n_a}"));
    }
    if sum_e + 1 != count(n_sub) {
        return report.inapplicable(format!("sum of e plus 1 is not {n_sub}"));
    }
    if n_sub > n_a {
        return report.inapplicable("smaller arrangement has more hyperplanes");
    }
    let mut extended = e.to_vec();
    extended.push(count(n_a - n_sub));
    let lhs = a_invariant(d);
    let rhs = a_invariant(&extended);
    let holds = lhs <= rhs;
    report.inequality(lhs, rhs, holds)
}

/// Every sorted tuple `e` of positive integers, one shorter than `d`, with
/// `1 + sum e <= sum d`, that [`avoidance`] rejects. Lexicographic order.
pub fn forbidden_patterns(d: &[i64]) -> Vec<Vec<i64>> {
    let d_int: Vec<Integer> = d.iter().map(|&v| Integer::from(v)).collect();
    let sum_d: i64 = d.iter().sum();
    let n_a = (sum_d + 1) as usize;
    let len = d.len().saturating_sub(1);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    enumerate_sorted(len, 1, sum_d - 1, &mut cur, &mut |e| {
        let e_int: Vec<Integer> = e.iter().map(|&v| Integer::from(v)).collect();
        let n_sub = (e.iter().sum::<i64>() + 1) as usize;
        if avoidance(&d_int, &e_int, n_a, n_sub, AvoidanceMode::Restriction).violated() {
            out.push(e.to_vec());
        }
    });
    out
}

fn enumerate_sorted(
    len: usize,
    min: i64,
    budget: i64,
    cur: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64]),
) {
    if cur.len() == len {
        f(cur);
        return;
    }
    let slots_left = (len - cur.len()) as i64;
    let mut v = min;
    while v * slots_left <= budget {
        cur.push(v);
        enumerate_sorted(len, v, budget - v, cur, f);
        cur.pop();
        v += 1;
    }
}

/// For a rank-3 arrangement with real-rooted quadratic `chi0`, no rank-2
/// flat has Möbius value strictly between the roots. Betweenness is decided
/// by the sign of `chi0(mu)`.
pub fn multiplicity_gap(a: &Arrangement) -> CheckReport {
    let report = CheckReport::new("multiplicity_gap", CheckKind::Theorem);
    if a.rank() != 3 {
        return report.inapplicable(format!("rank {} (need 3)", a.rank()));
    }
    let ess = if a.is_essential() {
        a.clone()
    } else {
        a.essentialize().arrangement
    };
    let lattice = flats(&ess);
    let data = crate::lattice::char_data_from_lattice(&lattice);
    let chi0 = data.chi0.expect("rank 3 arrangement is nonempty");
    let mus: Vec<(Vec<usize>, Integer)> = lattice
        .of_rank(2)
        .iter()
        .map(|f| (f.closed.iter().collect(), f.mobius.clone()))
        .collect();
    multiplicity_gap_values(&chi0, &mus)
}

/// The arithmetic core of [`multiplicity_gap`] on explicit data, so that
/// hand-built inputs can exercise the reporting path.
pub fn multiplicity_gap_values(chi0: &UniPoly, mus: &[(Vec<usize>, Integer)]) -> CheckReport {
    let report = CheckReport::new("multiplicity_gap", CheckKind::Theorem);
    let monic_quadratic =
        chi0.degree() == Some(2) && chi0.leading().is_some_and(|c| c == &Integer::from(1));
    if !monic_quadratic {
        return report.inapplicable("chi0 is not a monic quadratic");
    }
    let real = root_profile(chi0).map(|p| p.real_rooted).unwrap_or(false);
    if !real {
        return report.inapplicable("chi0 is not real-rooted");
    }
    let report = report.with_hypotheses(vec![Hypothesis::check("chi0 is real-rooted", true)]);
    let mut distinct: Vec<i64> = mus
        .iter()
        .map(|(_, m)| m.to_i64().unwrap_or(i64::MAX))
        .collect();
    distinct.sort_unstable();
    distinct.dedup();
    for (indices, mu) in mus {
        if chi0.eval(mu).is_negative() {
            return report
                .decided(
                    false,
                    format!(
                        "mu = {mu} lies strictly between the roots of {}",
                        display_poly(chi0)
                    ),
                )
                .with_witness(Witness::Mobius {
                    indices: indices.clone(),
                    mu: mu.to_i64().unwrap_or(i64::MAX),
                });
        }
    }
    report
        .decided(
            true,
            format!(
                "rank-2 Möbius values {distinct:?} avoid the open interval between the roots of {}",
                display_poly(chi0)
            ),
        )
        .with_witness(Witness::Tuple { values: distinct })
}

fn starts_with_one_sorted(v: &[i64]) -> bool {
    v.first() == Some(&1) && v.windows(2).all(|w| w[0] <= w[1])
}

fn multiset_contains(big: &[i64], small: &[i64]) -> bool {
    let mut rest = big.to_vec();
    for x in small {
        match rest.iter().position(|y| y == x) {
            Some(p) => {
                rest.remove(p);
            }
            None => return false,
        }
    }
    true
}

/// Where the tail equality `e_i = d_{i+1}` for all `i >= k` kicks in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TailPattern {
    /// Smallest `k >= 3` with `e_j <= d_j` for `j < k`, `d_k < e_k`, and the tail
    /// equality from `k` on.
    pub strict_k: Option<usize>,
    /// Same with `d_k <= e_k` in place of `d_k < e_k`.
    pub relaxed_k: Option<usize>,
}

/// Exponent indices are 1-based as in `(d_1, ..., d_l)`.
pub fn tail_pattern(d: &[i64], e: &[i64]) -> TailPattern {
    if e.len() + 1 != d.len() {
        return TailPattern {
            strict_k: None,
            relaxed_k: None,
        };
    }
    let find = |strict: bool| {
        (3..=e.len()).find(|&k| {
            let head = (1..k).all(|j| e[j - 1] <= d[j - 1]);
            let pivot = if strict {
                d[k - 1] < e[k - 1]
            } else {
                d[k - 1] <= e[k - 1]
            };
            let tail = (k..=e.len()).all(|i| e[i - 1] == d[i]);
            head && pivot && tail
        })
    };
    TailPattern {
        strict_k: find(true),
        relaxed_k: find(false),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FreeRestrictionReport {
    pub report: CheckReport,
    pub divides: bool,
    pub tail: TailPattern,
}

/// For `A` and `A^H` free with exponents `d` and `e`: either
/// `chi(A^H) | chi(A)`, or `d_2 >= e_2` and `d_i >= e_{i-1}` for `i >= 3`.
pub fn free_restriction_pattern(d: &[i64], e: &[i64]) -> FreeRestrictionReport {
    let base = CheckReport::new("free_restriction_pattern", CheckKind::Pattern)
        .with_witness(Witness::Tuple { values: e.to_vec() });
    let tail = tail_pattern(d, e);
    if !starts_with_one_sorted(d) || !starts_with_one_sorted(e) || e.len() + 1 != d.len() {
        return FreeRestrictionReport {
            report: base
                .inapplicable("need sorted exponents starting with 1, restriction one shorter"),
            divides: false,
            tail,
        };
    }
    let divides = multiset_contains(d, e);
    let interlace = (e.len() < 2 || d[1] >= e[1]) && (3..=d.len()).all(|i| d[i - 1] >= e[i - 2]);
    let detail = match (divides, interlace) {
        (true, _) => "chi(A^H) divides chi(A)".to_string(),
        (false, true) => "d_2 >= e_2 and d_i >= e_(i-1) for i >= 3".to_string(),
        (false, false) => "neither divisibility nor interlacing".to_string(),
    };
    FreeRestrictionReport {
        report: base.decided(divides || interlace, detail),
        divides,
        tail,
    }
}

/// For `A'` and `A^H` free with exponents `d` (length `l`) and `e` (length
/// `l - 1`): `d_i <= e_i` for `i = 2..l-1`. `deleted_free` records what is
/// known about freeness of `A'`.
pub fn free_deletion_pattern(d: &[i64], e: &[i64], deleted_free: HypothesisStatus) -> CheckReport {
    let base = CheckReport::new("free_deletion_pattern", CheckKind::Pattern)
        .with_witness(Witness::Tuple { values: e.to_vec() })
        .with_hypotheses(vec![Hypothesis::new("A' is free", deleted_free)]);
    if e.len() + 1 != d.len() {
        return base.inapplicable("restriction exponents must be one shorter");
    }
    let bad = (2..d.len()).find(|&i| d[i - 1] > e[i - 1]);
    match bad {
        None => base.decided(true, "d_i <= e_i for i = 2..l-1"),
        Some(i) => base.decided(
            false,
            format!("d_{i} = {} > e_{i} = {}", d[i - 1], e[i - 1]),
        ),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum RangeDirection {
    /// `A` free with exponents `(1,a,b)`, `(c,d)` the roots of `chi0(A')`.
    DeletionOfFree,
    /// `A'` free with exponents `(1,a,b)`, `(c,d)` the roots of `chi0(A)`.
    AdditionToFree,
}

/// Rank-3 root range: `a-1 <= c <= d <= b` (deletion of a free arrangement)
/// or `a <= c <= d <= b+1` (addition to one).
pub fn range_3roots(
    exp_free: (i64, i64, i64),
    other: (i64, i64),
    direction: RangeDirection,
) -> CheckReport {
    let (one, a, b) = exp_free;
    let (c, d) = other;
    let base = CheckReport::new("range_3roots", CheckKind::Pattern)
        .with_witness(Witness::Tuple { values: vec![c, d] });
    if one != 1 || a > b || c > d {
        return base.inapplicable("need exponents (1,a,b) with a <= b and roots c <= d");
    }
    let (lo, hi) = match direction {
        RangeDirection::DeletionOfFree => (a - 1, b),
        RangeDirection::AdditionToFree => (a, b + 1),
    };
    base.decided(
        lo <= c && d <= hi,
        format!("need {lo} <= {c} <= {d} <= {hi}"),
    )
}

/// For `A` free with exponents `(1, d_2, ..., d_l)` and a flat `X` of rank
/// `l - 1` whose localization has exponents `(0, 1, e_2, ..., e_(l-1))`:
/// `d_i >= e_(i-1)`, and a tail equality after the first `k` where `e`
/// overtakes `d`. `e` is passed without the leading `0, 1`.
pub fn localization_pattern(d: &[i64], e_nonunit: &[i64]) -> CheckReport {
    let base =
        CheckReport::new("localization_pattern", CheckKind::Pattern).with_witness(Witness::Tuple {
            values: e_nonunit.to_vec(),
        });
    if !starts_with_one_sorted(d) || e_nonunit.len() + 2 != d.len() {
        return base.inapplicable(
            "need exp(A) = (1, ...) and exactly l - 2 non-unit localization exponents",
        );
    }
    // e with e_1 = 1 in front, 1-based
    let mut e = vec![1];
    e.extend_from_slice(e_nonunit);
    let l = d.len();
    if let Some(i) = (2..=l).find(|&i| d[i - 1] < e[i - 2]) {
        return base.decided(
            false,
            format!("d_{i} = {} < e_{} = {}", d[i - 1], i - 1, e[i - 2]),
        );
    }
    for k in 2..=e.len() {
        let premise = (1..k).all(|i| d[i - 1] <= e[i - 1]) && e[k - 1] > d[k - 1];
        if !premise {
            continue;
        }
        if let Some(i) = (k..=e.len()).find(|&i| e[i - 1] != d[i]) {
            return base.decided(
                false,
                format!(
                    "e_{k} > d_{k} but e_{i} = {} != d_{} = {}",
                    e[i - 1],
                    i + 1,
                    d[i]
                ),
            );
        }
    }
    base.decided(true, "d_i >= e_(i-1) and tail equalities hold")
}

/// For a rank-3 arrangement with `chi = (t-1)(t-a)(t-b)`, `1 <= a <= b`,
/// no hyperplane has `a + 1 < |A^H| < b + 1`.
pub fn theorem_a_range(a: &Arrangement) -> Result<CheckReport> {
    let report = CheckReport::new("restriction_size_range", CheckKind::Theorem);
    if a.rank() != 3 || a.dim() != 3 {
        return Ok(report.inapplicable(format!(
            "needs an essential rank-3 arrangement (rank {}, dim {})",
            a.rank(),
            a.dim()
        )));
    }
    let profile = root_profile(&char_data(a).chi)?;
    let Some(roots) = profile.split_roots() else {
        return Ok(report.inapplicable("chi does not split over Z"));
    };
    let r = to_i64s(&roots);
    if r.len() != 3 || r[0] != 1 || r[1] < 1 {
        return Ok(report.inapplicable(format!("chi roots {r:?} are not (1, a, b) with a >= 1")));
    }
    let (x, y) = (r[1], r[2]);
    for i in 0..a.len() {
        let size = a.restrict(i)?.len() as i64;
        if x + 1 < size && size < y + 1 {
            return Ok(report
                .decided(
                    false,
                    format!(
                        "|A^H| = {size} lies strictly between {} and {}",
                        x + 1,
                        y + 1
                    ),
                )
                .with_witness(Witness::Hyperplane { index: i }));
        }
    }
    Ok(report.decided(
        true,
        format!(
            "every |A^H| avoids the open interval ({}, {})",
            x + 1,
            y + 1
        ),
    ))
}

/// Integer roots of `chi0`, when it splits.
pub fn split_chi0_roots(a: &Arrangement) -> Result<Option<Vec<Integer>>> {
    match char_data(a).chi0 {
        Some(c) => Ok(root_profile(&c)?.split_roots()),
        None => Ok(None),
    }
}

/// Flats of rank `l - 1`, from an already computed lattice.
pub fn corank_one_flats(a: &Arrangement, lattice: &Lattice) -> Vec<FlatSpec> {
    if a.dim() == 0 {
        return Vec::new();
    }
    lattice
        .of_rank(a.dim() - 1)
        .iter()
        .map(|f| f.spec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::ints;

    #[test]
    fn avoidance_examples() {
        let d = ints(&[2, 4, 7]);
        let r = avoidance(&d, &ints(&[3, 5]), 14, 9, AvoidanceMode::Restriction);
        assert_eq!(r.verdict_word(), "forbidden");
        assert_eq!(
            (r.lhs.clone().unwrap(), r.rhs.clone().unwrap()),
            (Integer::from(38), Integer::from(8))
        );
        let r = avoidance(&d, &ints(&[2, 4]), 14, 7, AvoidanceMode::Restriction);
        assert!(r.holds() && r.equality == Some(true));
        assert!(avoidance(&d, &ints(&[4, 7]), 14, 12, AvoidanceMode::Localization).holds());
        let r = avoidance(&d, &ints(&[4, 7]), 15, 12, AvoidanceMode::Restriction);
        assert_eq!(r.verdict, Verdict::Inapplicable);
    }

    #[test]
    fn forbidden_for_small_inputs() {
        assert!(forbidden_patterns(&[1, 1]).is_empty());
        assert!(forbidden_patterns(&[3]).is_empty());
        assert!(forbidden_patterns(&[4, 4, 4])
            .iter()
            .all(|e| e.iter().sum::<i64>() != 8));
    }

    #[test]
    fn multiplicity_gap_synthetic_violation() {
        let chi0 = UniPoly::from_i64(&[13, -8, 1]);
        let mus = vec![
            (vec![0, 1], Integer::from(1)),
            (vec![2, 3], Integer::from(4)),
        ];
        let r = multiplicity_gap_values(&chi0, &mus);
        assert!(r.violated());
        assert_eq!(
            r.witness,
            Some(Witness::Mobius {
                indices: vec![2, 3],
                mu: 4
            })
        );
        let r = multiplicity_gap_values(&UniPoly::from_i64(&[1, 0, 1]), &mus);
        assert_eq!(r.verdict, Verdict::Inapplicable);
    }

    #[test]
    fn restriction_patterns() {
        let er = free_restriction_pattern(&[1, 5, 5, 5, 5], &[1, 3, 3, 5]);
        assert!(er.report.holds() && !er.divides);
        assert_eq!(er.tail.relaxed_k, Some(4));
        assert_eq!(er.tail.strict_k, None);
        assert!(free_restriction_pattern(&[1, 3, 5], &[1, 3]).divides);
        let r = free_restriction_pattern(&[1, 2, 5], &[1, 1]);
        assert!(r.report.holds() && !r.divides);
        assert!(!free_restriction_pattern(&[1, 2, 3], &[1, 4]).report.holds());
        let bad = free_restriction_pattern(&[1, 2, 3], &[1, 2, 3]);
        assert_eq!(bad.report.verdict, Verdict::Inapplicable);
    }

    #[test]
    fn deletion_pattern() {
        assert!(free_deletion_pattern(&[1, 2], &[1], HypothesisStatus::Assumed).holds());
        let r = free_deletion_pattern(&[1, 3, 3], &[1, 1], HypothesisStatus::Failed);
        assert!(r.violated() && !r.hypotheses_satisfied);
    }

    #[test]
    fn range_rules() {
        use RangeDirection::*;
        assert!(range_3roots((1, 2, 5), (3, 3), DeletionOfFree).holds());
        assert!(range_3roots((1, 2, 5), (1, 5), DeletionOfFree).holds());
        assert!(range_3roots((1, 2, 5), (0, 6), DeletionOfFree).violated());
        assert!(range_3roots((1, 2, 5), (2, 6), AdditionToFree).holds());
        assert!(range_3roots((1, 2, 5), (1, 6), AdditionToFree).violated());
    }

    #[test]
    fn localization_rules() {
        assert!(localization_pattern(&[1, 3, 5], &[5]).holds());
        assert!(localization_pattern(&[1, 3, 5], &[3]).holds());
        assert!(localization_pattern(&[1, 3, 5], &[6]).violated());
        assert_eq!(
            localization_pattern(&[1, 3, 5], &[1, 5]).verdict,
            Verdict::Inapplicable
        );
    }
}
