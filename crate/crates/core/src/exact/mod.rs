//! Exact arithmetic substrate: big integers and rationals, dense rational
//! linear algebra, a multi-modular kernel solver, and univariate/multivariate
//! polynomials.
//!
//! Nothing in here touches floating point.

pub mod intser;
pub mod matrix;
pub mod modular;
pub mod multipoly;
pub mod realroots;
pub mod unipoly;

pub use matrix::{rref, RatMatrix, Rref};
pub use modular::{certified_kernel, IntMatrix};
pub use multipoly::{det_poly, Monomial, MultiPoly};
pub use realroots::{integer_roots, sturm_real_root_count, IntegerRoots, RealRootCount};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// Gcd of a slice of integers (non-negative; zero for an all-zero slice).
pub fn gcd_all<'a, I: IntoIterator<Item = &'a Integer>>(values: I) -> Integer {
    let mut g = Integer::zero();
    for v in values {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Lcm of the denominators of a rational vector.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> Integer {
    values
        .into_iter()
        .fold(Integer::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scale a rational vector to a primitive integer vector with the same
/// direction (first nonzero entry keeps its sign).
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<Integer> {
    let den = common_denominator(values);
    let ints: Vec<Integer> = values
        .iter()
        .map(|v| (v * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = gcd_all(ints.iter());
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}
