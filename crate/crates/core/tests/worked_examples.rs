mod common;

use common::{chi_coeffs, int_rows, whitney_chi};
use hyperarr::catalog::{self, ExpectedFreeness};
use hyperarr::checkers::{self, HypothesisStatus, RangeDirection};
use hyperarr::derivations::{
    check_membership, derivation_slice, freeness, saito_check, saito_determinant, Derivation,
};
use hyperarr::exact::{MultiPoly, Rational, UniPoly};
use hyperarr::lattice::mobius_values;
use hyperarr::{char_data, flats, Arrangement, FlatSpec};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lin(coeffs: &[i64]) -> MultiPoly {
    hyperarr::LinearForm::from_i64(coeffs).unwrap().to_poly()
}

fn product(forms: &[&[i64]]) -> MultiPoly {
    forms
        .iter()
        .fold(MultiPoly::one(3), |acc, f| &acc * &lin(f))
}

/// Checks `theta(alpha)` vanishes at random rational points of each
/// hyperplane, without polynomial division.
fn vanishes_on_hyperplanes(a: &Arrangement, theta: &Derivation) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in a.forms() {
        let alpha: Vec<Rational> = f.to_rationals();
        let k = alpha.iter().position(|c| !c.is_zero()).unwrap();
        for _ in 0..6 {
            let mut p: Vec<Rational> = (0..a.dim())
                .map(|_| Rational::from_integer(rng.gen_range(-50i64..=50).into()))
                .collect();
            let rest: Rational = (0..a.dim())
                .filter(|&j| j != k)
                .map(|j| &alpha[j] * &p[j])
                .sum();
            p[k] = -rest / &alpha[k];
            let value: Rational = theta
                .components()
                .iter()
                .zip(&alpha)
                .map(|(c, a)| c.eval(&p) * a)
                .sum();
            if !value.is_zero() {
                return false;
            }
        }
    }
    true
}

fn psi() -> Derivation {
    // y(x^2-y^2)(x^2-4y^2) d/dy + z(x+y)(x-z)(x^2-4y^2) d/dz
    let dy = product(&[&[0, 1, 0], &[1, -1, 0], &[1, 1, 0], &[1, -2, 0], &[1, 2, 0]]);
    let dz = product(&[&[0, 0, 1], &[1, 1, 0], &[1, 0, -1], &[1, -2, 0], &[1, 2, 0]]);
    Derivation::new(5, vec![MultiPoly::zero(3), dy, dz]).unwrap()
}

fn z_axis(a: &Arrangement) -> FlatSpec {
    FlatSpec::new(a, &[0, 1]).unwrap()
}

#[test]
fn degree_five_element_extends_to_a_basis() {
    let a = catalog::get("paper-ex9").unwrap().arrangement;
    let x = z_axis(&a);
    let local = a.localize(&x);
    assert_eq!(local.len(), 6);
    let psi = psi();
    check_membership(&local, std::slice::from_ref(&psi)).unwrap();
    check_membership(&a, std::slice::from_ref(&psi)).unwrap();
    assert!(vanishes_on_hyperplanes(&a, &psi));

    // part of a basis of D(A_X): with d/dz and the Euler field
    let dz = Derivation::new(
        0,
        vec![MultiPoly::zero(3), MultiPoly::zero(3), MultiPoly::one(3)],
    )
    .unwrap();
    assert!(saito_check(&local, &[dz, Derivation::euler(3), psi.clone()]).unwrap());

    // z(x-z)(y-z) d/dz lies in the degree-3 slice and completes a basis of D(A)
    let cubic = Derivation::new(
        3,
        vec![
            MultiPoly::zero(3),
            MultiPoly::zero(3),
            product(&[&[0, 0, 1], &[1, 0, -1], &[0, 1, -1]]),
        ],
    )
    .unwrap();
    assert!(vanishes_on_hyperplanes(&a, &cubic));
    let slice = derivation_slice(&a, 3);
    assert!(in_span(&cubic, &slice));
    let basis = [Derivation::euler(3), cubic, psi];
    assert!(saito_check(&a, &basis).unwrap());
    let det = saito_determinant(&basis);
    assert!(det
        .scalar_multiple_of(&a.defining_polynomial())
        .is_some_and(|c| !c.is_zero()));
}

/// Whether `theta` is a rational combination of `span`, by comparing
/// coefficient vectors through an exact solve.
fn in_span(theta: &Derivation, span: &[Derivation]) -> bool {
    use hyperarr::exact::{rref, RatMatrix};
    let mut keys = Vec::new();
    for d in span.iter().chain(std::iter::once(theta)) {
        for (i, c) in d.components().iter().enumerate() {
            for (m, _) in c.terms() {
                if !keys.contains(&(i, m.clone())) {
                    keys.push((i, m.clone()));
                }
            }
        }
    }
    let vector = |d: &Derivation| -> Vec<Rational> {
        keys.iter()
            .map(|(i, m)| d.components()[*i].coeff(m))
            .collect()
    };
    let base: Vec<Vec<Rational>> = span.iter().map(vector).collect();
    let mut with = base.clone();
    with.push(vector(theta));
    rref(&RatMatrix::from_rows(keys.len(), base)).rank
        == rref(&RatMatrix::from_rows(keys.len(), with)).rank
}

#[test]
fn edelman_reiner_restriction_at_last_coordinate() {
    let er = catalog::get("edelman-reiner").unwrap().arrangement;
    assert_eq!(er.form(4).to_string(), "x5");
    let h = er.restrict(4).unwrap();
    assert_eq!(h.len(), 12);
    assert_eq!(char_data(&h).chi, UniPoly::from_root_values(&[1, 3, 3, 5]));
    let v = freeness(&h).unwrap();
    assert_eq!(v.exponents, Some(vec![1, 3, 3, 5]));
    assert!(v.is_free());
    let r = checkers::free_restriction_pattern(&[1, 5, 5, 5, 5], &[1, 3, 3, 5]);
    assert!(r.report.holds());
    assert_eq!(r.tail.relaxed_k, Some(4));
}

#[test]
fn localizations_of_free_entries_are_free() {
    for entry in catalog::all() {
        if !matches!(entry.expected.freeness, Some(ExpectedFreeness::Free(_))) {
            continue;
        }
        let a = &entry.arrangement;
        let lattice = flats(a);
        for f in lattice.flats() {
            let local = a.localize(&f.spec());
            let v = freeness(&local).unwrap();
            assert!(
                v.is_free(),
                "{} at {:?}: {}",
                entry.name,
                f.closed,
                v.summary()
            );
        }
    }
}

#[test]
fn root_data_of_the_thirteen_example() {
    let a = catalog::get("paper-mult13").unwrap().arrangement;
    let lattice = flats(&a);
    let mut mu = mobius_values(&lattice, 2);
    mu.sort_unstable();
    mu.dedup();
    assert_eq!(mu, vec![1, 6]);
    assert_eq!(chi_coeffs(&a), whitney_chi(&int_rows(&a), 3));
    let chi0 = char_data(&a).chi0.unwrap();
    let p = hyperarr::roots::root_profile(&chi0).unwrap();
    assert_eq!(
        (
            p.integer_roots.total_multiplicity(),
            p.distinct_real_root_count
        ),
        (0, 2)
    );
    let gap = checkers::multiplicity_gap(&a);
    assert!(gap.holds());
}

#[test]
fn removing_y_from_the_free_example() {
    let full = catalog::get("paper-rem1-full").unwrap().arrangement;
    let deleted = full.delete(7).unwrap();
    let restricted = full.restrict(7).unwrap();
    assert_eq!(
        char_data(&restricted).chi,
        UniPoly::from_root_values(&[1, 1])
    );
    assert!(!freeness(&deleted).unwrap().is_free());
    let r = checkers::range_3roots((1, 2, 5), (3, 3), RangeDirection::DeletionOfFree);
    assert!(r.holds());
    // the deletion pattern needs A' free; here it is not, and the pattern fails
    let r = checkers::free_deletion_pattern(&[1, 3, 3], &[1, 1], HypothesisStatus::Failed);
    assert!(r.violated() && !r.hypotheses_satisfied);
}

#[test]
fn adding_a_line_to_the_base_example() {
    let base = catalog::get("paper-ex999-base").unwrap().arrangement;
    let b = catalog::get("paper-ex999-B").unwrap().arrangement;
    let a = catalog::get("paper-ex999-A").unwrap().arrangement;
    assert_eq!(freeness(&base).unwrap().exponents, Some(vec![1, 2, 5]));
    assert!(!freeness(&a).unwrap().is_free());
    // B = base + (y - z): free with (1,3,5); its restriction to y - z
    let last = b.len() - 1;
    let h = b.restrict(last).unwrap();
    let vh = freeness(&h).unwrap();
    assert!(vh.is_free());
    let e: Vec<i64> = vh
        .exponents
        .unwrap()
        .iter()
        .map(|&x| i64::from(x))
        .collect();
    assert!(checkers::free_deletion_pattern(&[1, 2, 5], &e, HypothesisStatus::Verified).holds());
    // chi0(A) for A = base + (2y - 3z) against exp(base) = (1,2,5)
    let d = checkers::split_chi0_roots(&a).unwrap().unwrap();
    let d: Vec<i64> = d.iter().map(|x| i64::try_from(x).unwrap()).collect();
    assert!(
        checkers::range_3roots((1, 2, 5), (d[0], d[1]), RangeDirection::AdditionToFree).holds()
    );
}
