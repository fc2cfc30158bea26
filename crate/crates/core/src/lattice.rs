//! Intersection lattice, Möbius function, characteristic polynomial and a
//! finite-field point count used as an independent oracle for it.

use std::collections::HashSet;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arrangement::{Arrangement, FlatSpec, Span};
use crate::error::{Error, Result};
use crate::exact::modular::{is_prime_u64, rank_mod, Zp};
use crate::exact::{intser, Integer, UniPoly};
use crate::indexset::IndexSet;

/// Primes tried, in order, when an oracle prime is needed.
pub const ORACLE_PRIMES: [u64; 12] = [
    101, 211, 307, 401, 503, 601, 701, 809, 907, 1009, 1103, 1201,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub closed: IndexSet,
    pub rank: usize,
    pub mobius: Integer,
}

impl Flat {
    pub fn spec(&self) -> FlatSpec {
        FlatSpec::from_parts(self.closed.clone(), self.rank)
    }

    pub fn size(&self) -> usize {
        self.closed.len()
    }
}

/// All flats of an arrangement grouped by rank, with Möbius values.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    hyperplanes: usize,
    levels: Vec<Vec<Flat>>,
}

impl Lattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Vec<Flat>] {
        &self.levels
    }

    pub fn of_rank(&self, r: usize) -> &[Flat] {
        self.levels.get(r).map_or(&[], Vec::as_slice)
    }

    pub fn flats(&self) -> impl Iterator<Item = &Flat> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of flats per rank.
    pub fn rank_profile(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn find(&self, closed: &IndexSet) -> Option<&Flat> {
        self.levels.iter().flatten().find(|f| &f.closed == closed)
    }

    pub fn hyperplanes(&self) -> usize {
        self.hyperplanes
    }
}

/// Enumerates the lattice breadth-first: each flat of rank `r + 1` is the
/// closure of a rank-`r` flat together with one hyperplane outside it.
pub fn flats(a: &Arrangement) -> Lattice {
    let n = a.len();
    let mut levels: Vec<Vec<Flat>> = vec![vec![Flat {
        closed: IndexSet::new(n),
        rank: 0,
        mobius: Integer::one(),
    }]];
    loop {
        let current = levels.last().expect("rank 0 exists");
        let mut seen: HashSet<IndexSet> = HashSet::new();
        let mut next = Vec::new();
        for flat in current {
            let base: Vec<usize> = flat.closed.iter().collect();
            let span = Span::of(a.dim(), base.iter().map(|&i| a.form(i)));
            for h in 0..n {
                if flat.closed.contains(h) || seen_contains(&seen, &flat.closed, h) {
                    continue;
                }
                let mut gens = span.rows().to_vec();
                gens.push(a.form(h).to_rationals());
                let bigger = Span::of_rationals(a.dim(), gens);
                let closed = IndexSet::from_indices(
                    n,
                    (0..n).filter(|&i| {
                        flat.closed.contains(i) || i == h || bigger.contains(a.form(i))
                    }),
                );
                if seen.insert(closed.clone()) {
                    next.push(Flat {
                        closed,
                        rank: flat.rank + 1,
                        mobius: Integer::zero(),
                    });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_by(|x, y| x.closed.iter().cmp(y.closed.iter()));
        levels.push(next);
    }
    let mut lattice = Lattice {
        dim: a.dim(),
        hyperplanes: n,
        levels,
    };
    mobius(&mut lattice);
    lattice
}

// A flat already produced at the next level that contains `closed` and `h`
// is exactly the closure we would compute, so skip the span work.
fn seen_contains(seen: &HashSet<IndexSet>, closed: &IndexSet, h: usize) -> bool {
    seen.iter().any(|s| s.contains(h) && closed.is_subset(s))
}

/// Fills in `mobius` on every flat: `mu(V) = 1` and each other flat gets
/// minus the sum over the flats whose closed sets it strictly contains.
pub fn mobius(l: &mut Lattice) {
    for r in 1..l.levels.len() {
        let (below, rest) = l.levels.split_at_mut(r);
        for flat in rest[0].iter_mut() {
            let mut sum = Integer::zero();
            for lower in below.iter().flatten() {
                if lower.closed.is_subset(&flat.closed) {
                    sum += &lower.mobius;
                }
            }
            flat.mobius = -sum;
        }
    }
}

/// Characteristic polynomial and the numbers read off it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharData {
    pub chi: UniPoly,
    /// `chi / (t - 1)`; `None` for the empty arrangement.
    pub chi0: Option<UniPoly>,
    /// `b_i` with `chi = sum (-1)^i b_i t^(l - i)`.
    #[serde(serialize_with = "intser::vec")]
    pub b: Vec<Integer>,
    /// Same for `chi0` in degree `l - 1`.
    #[serde(serialize_with = "intser::vec")]
    pub b0: Vec<Integer>,
    /// `pi(A; t) = sum mu(X) (-t)^rank X`.
    pub poincare: UniPoly,
}

impl CharData {
    pub fn b2(&self) -> Integer {
        self.b.get(2).cloned().unwrap_or_else(Integer::zero)
    }
}

pub fn char_data(a: &Arrangement) -> CharData {
    char_data_from_lattice(&flats(a))
}

pub fn char_data_from_lattice(l: &Lattice) -> CharData {
    let dim = l.dim;
    let mut chi = vec![Integer::zero(); dim + 1];
    let mut poincare = vec![Integer::zero(); dim + 1];
    for f in l.flats() {
        chi[dim - f.rank] += &f.mobius;
        if f.rank % 2 == 0 {
            poincare[f.rank] += &f.mobius;
        } else {
            poincare[f.rank] -= &f.mobius;
        }
    }
    let chi = UniPoly::new(chi);
    let b = signed_coefficients(&chi, dim);
    let chi0 = (l.hyperplanes > 0).then(|| {
        chi.div_linear(&Integer::one())
            .expect("t - 1 divides the characteristic polynomial of a nonempty arrangement")
    });
    let b0 = chi0
        .as_ref()
        .map(|c| signed_coefficients(c, dim - 1))
        .unwrap_or_default();
    CharData {
        chi,
        chi0,
        b,
        b0,
        poincare: UniPoly::new(poincare),
    }
}

fn signed_coefficients(p: &UniPoly, degree: usize) -> Vec<Integer> {
    (0..=degree)
        .map(|i| {
            let c = p.coeff(degree - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

/// Checks that reducing mod `q` does not change the matroid: every flat keeps
/// its rank, and adding any hyperplane outside a flat still raises the rank.
pub fn check_admissible(a: &Arrangement, l: &Lattice, q: u64) -> Result<()> {
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    let rows: Vec<Vec<Integer>> = a.forms().iter().map(|f| f.coeffs().to_vec()).collect();
    for f in l.flats() {
        let mut sub: Vec<Vec<Integer>> = f.closed.iter().map(|i| rows[i].clone()).collect();
        if rank_mod(&sub, a.dim(), q) != f.rank {
            return Err(Error::InadmissiblePrime {
                prime: q,
                flat: f.closed.iter().collect(),
            });
        }
        for h in (0..a.len()).filter(|&h| !f.closed.contains(h)) {
            sub.push(rows[h].clone());
            let r = rank_mod(&sub, a.dim(), q);
            sub.pop();
            if r != f.rank + 1 {
                let mut flat: Vec<usize> = f.closed.iter().collect();
                flat.push(h);
                flat.sort_unstable();
                return Err(Error::InadmissiblePrime { prime: q, flat });
            }
        }
    }
    Ok(())
}

/// Largest `q^l` enumerated point by point; beyond it the count goes through
/// inclusion-exclusion over subsets of hyperplanes.
const DIRECT_LIMIT: u128 = 1 << 21;
const SUBSET_LIMIT: usize = 30;

/// Number of points of `F_q^l` on no hyperplane. Rejects `q` unless it is an
/// admissible prime, in which case the count equals `chi(A; q)`.
pub fn count_points_mod_q(a: &Arrangement, q: u64) -> Result<Integer> {
    check_admissible(a, &flats(a), q)?;
    count_points_unchecked(a, q)
}

/// The point count without the admissibility check.
pub fn count_points_unchecked(a: &Arrangement, q: u64) -> Result<Integer> {
    let total = (q as u128).checked_pow(a.dim() as u32);
    match total {
        Some(t) if t <= DIRECT_LIMIT => Ok(count_direct(a, q)),
        _ if a.len() <= SUBSET_LIMIT => Ok(count_inclusion_exclusion(a, q)),
        _ => Err(Error::TooLarge(format!(
            "{}^{} points and {} hyperplanes",
            q,
            a.dim(),
            a.len()
        ))),
    }
}

/// Walks every point of `F_q^l`.
pub fn count_direct(a: &Arrangement, q: u64) -> Integer {
    let f = Zp::new(q);
    let dim = a.dim();
    let forms: Vec<Vec<u64>> = a
        .forms()
        .iter()
        .map(|h| h.coeffs().iter().map(|c| f.from_integer(c)).collect())
        .collect();
    let mut point = vec![0u64; dim];
    let mut count: u64 = 0;
    loop {
        let off = forms.iter().all(|h| {
            h.iter()
                .zip(&point)
                .fold(0u64, |acc, (&c, &x)| f.add(acc, f.mul(c, x)))
                != 0
        });
        if off {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == dim {
                return Integer::from(count);
            }
            point[i] += 1;
            if point[i] < q {
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}

/// `sum over S of (-1)^|S| q^(l - rank_q S)`, walking subsets depth first
/// with an incrementally maintained echelon basis mod `q`.
pub fn count_inclusion_exclusion(a: &Arrangement, q: u64) -> Integer {
    let f = Zp::new(q);
    let dim = a.dim();
    let forms: Vec<Vec<u64>> = a
        .forms()
        .iter()
        .map(|h| h.coeffs().iter().map(|c| f.from_integer(c)).collect())
        .collect();
    // tally[r][parity]
    let mut tally = vec![[0u64; 2]; dim + 1];
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::with_capacity(dim);
    walk_subsets(&forms, 0, 0, &mut basis, &mut tally, f);
    let mut total = Integer::zero();
    for (r, [even, odd]) in tally.into_iter().enumerate() {
        let weight = num_traits::pow(Integer::from(q), dim - r);
        total += (Integer::from(even) - Integer::from(odd)) * weight;
    }
    total
}

fn walk_subsets(
    forms: &[Vec<u64>],
    next: usize,
    parity: usize,
    basis: &mut Vec<(usize, Vec<u64>)>,
    tally: &mut [[u64; 2]],
    f: Zp,
) {
    if next == forms.len() {
        tally[basis.len()][parity] += 1;
        return;
    }
    walk_subsets(forms, next + 1, parity, basis, tally, f);
    let mut v = forms[next].clone();
    for (p, row) in basis.iter() {
        if v[*p] != 0 {
            let c = v[*p];
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
    }
    match v.iter().position(|&x| x != 0) {
        Some(p) => {
            let inv = f.inv(v[p]);
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
            basis.push((p, v));
            walk_subsets(forms, next + 1, parity ^ 1, basis, tally, f);
            basis.pop();
        }
        None => walk_subsets(forms, next + 1, parity ^ 1, basis, tally, f),
    }
}

/// The first `count` admissible primes from [`ORACLE_PRIMES`].
pub fn admissible_primes(a: &Arrangement, l: &Lattice, count: usize) -> Vec<u64> {
    ORACLE_PRIMES
        .iter()
        .copied()
        .filter(|&q| check_admissible(a, l, q).is_ok())
        .take(count)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionRestriction {
    pub index: usize,
    pub chi: UniPoly,
    pub chi_deleted: UniPoly,
    pub chi_restricted: UniPoly,
    pub holds: bool,
}

/// Computes the three characteristic polynomials independently and compares
/// `chi(A) = chi(A') - chi(A^H)`.
pub fn deletion_restriction_check(a: &Arrangement, i: usize) -> Result<DeletionRestriction> {
    let deleted = a.delete(i)?;
    let restricted = a.restrict(i)?;
    let chi = char_data(a).chi;
    let chi_deleted = char_data(&deleted).chi;
    let chi_restricted = char_data(&restricted).chi;
    let holds = chi == &chi_deleted - &chi_restricted;
    Ok(DeletionRestriction {
        index: i,
        chi,
        chi_deleted,
        chi_restricted,
        holds,
    })
}

/// `chi(A; q)` as an integer, for comparisons with point counts.
pub fn eval_chi(chi: &UniPoly, q: u64) -> Integer {
    chi.eval(&Integer::from(q))
}

/// Sign alternation: `(-1)^rank * mu > 0` on every flat.
pub fn mobius_signs_alternate(l: &Lattice) -> bool {
    l.flats().all(|f| {
        let s = if f.rank % 2 == 0 {
            f.mobius.clone()
        } else {
            -f.mobius.clone()
        };
        s.is_positive()
    })
}

/// Möbius values of the given rank as machine integers, sorted.
pub fn mobius_values(l: &Lattice, rank: usize) -> Vec<i64> {
    let mut v: Vec<i64> = l
        .of_rank(rank)
        .iter()
        .map(|f| f.mobius.to_i64().expect("Möbius value fits in i64"))
        .collect();
    v.sort_unstable();
    v
}
