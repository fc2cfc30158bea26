mod common;

use common::{bareiss_rank, brute_count, chi_coeffs, eval_coeffs, int_rows, whitney_chi};
use hyperarr::catalog;
use hyperarr::exact::{rref, RatMatrix, Rational};
use hyperarr::lattice::{admissible_primes, count_points_mod_q, eval_chi};
use hyperarr::{char_data, flats};
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

fn matrix_5x8() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-5i64..=5, 8), 5)
}

proptest! {
    #[test]
    fn rref_matches_fraction_free_elimination(rows in matrix_5x8()) {
        let m = RatMatrix::from_int_rows(8, &rows);
        let r = rref(&m);
        prop_assert_eq!(r.rank, bareiss_rank(&rows));
        prop_assert_eq!(r.kernel.len(), 8 - r.rank);
        for v in &r.kernel {
            for row in &rows {
                let dot: Rational = row.iter().zip(v).map(|(&a, x)| x * Rational::from_integer(a.into())).sum();
                prop_assert!(dot.is_zero());
            }
        }
        // pivot columns are unit vectors in the reduced matrix
        for (i, &p) in r.pivots.iter().enumerate() {
            for k in 0..r.reduced.rows() {
                let want = if k == i { Rational::one() } else { Rational::zero() };
                prop_assert_eq!(r.reduced.get(k, p), &want);
            }
        }
        // the reduced rows span the same space
        let mut stacked = rows.clone();
        for k in 0..r.rank {
            let row: Vec<Rational> = r.reduced.row(k).to_vec();
            let den = row.iter().fold(num_bigint::BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
            stacked.push(row.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer().to_i64().unwrap()).collect());
        }
        prop_assert_eq!(bareiss_rank(&stacked), r.rank);
    }

    #[test]
    fn rref_is_idempotent(rows in matrix_5x8()) {
        let once = rref(&RatMatrix::from_int_rows(8, &rows));
        let twice = rref(&once.reduced);
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.pivots, twice.pivots);
    }
}

#[test]
fn lattice_chi_matches_subset_sum() {
    for entry in catalog::all() {
        let a = &entry.arrangement;
        if a.len() > 16 {
            continue;
        }
        assert_eq!(
            chi_coeffs(a),
            whitney_chi(&int_rows(a), a.dim()),
            "{}",
            entry.name
        );
    }
}

#[test]
fn large_entry_chi_matches_subset_sum_on_restriction() {
    let er = catalog::get("edelman-reiner").unwrap().arrangement;
    let restricted = er.restrict(4).unwrap();
    assert_eq!(restricted.len(), 12);
    assert_eq!(
        chi_coeffs(&restricted),
        whitney_chi(&int_rows(&restricted), restricted.dim())
    );
}

#[test]
fn point_counts_match_chi_at_three_primes() {
    for entry in catalog::all() {
        let a = &entry.arrangement;
        let lattice = flats(a);
        let primes = admissible_primes(a, &lattice, 3);
        assert_eq!(primes.len(), 3, "{}", entry.name);
        let chi = char_data(a).chi;
        for q in primes {
            assert_eq!(
                count_points_mod_q(a, q).unwrap(),
                eval_chi(&chi, q),
                "{} at q={q}",
                entry.name
            );
        }
    }
}

#[test]
fn library_counts_match_enumeration() {
    for entry in catalog::all() {
        let a = &entry.arrangement;
        let lattice = flats(a);
        let Some(&q) = admissible_primes(a, &lattice, 1).first() else {
            panic!("{} has no admissible prime", entry.name)
        };
        // keep enumeration to about a million points
        if (q as f64).powi(a.dim() as i32) > 1.1e6 {
            continue;
        }
        let rows = int_rows(a);
        let brute = brute_count(&rows, a.dim(), q);
        assert_eq!(
            count_points_mod_q(a, q).unwrap().to_u64(),
            Some(brute),
            "{}",
            entry.name
        );
        let chi = whitney_chi(&rows, a.dim());
        assert_eq!(eval_coeffs(&chi, q as i64), brute as i128, "{}", entry.name);
    }
}
