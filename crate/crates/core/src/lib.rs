//! Exact combinatorics of central hyperplane arrangements.
//!
//! Everything is computed over the integers and rationals: intersection
//! lattices and Möbius functions, characteristic polynomials and their root
//! profiles, logarithmic derivation modules with a Saito-criterion freeness
//! test, and checkers for root-avoidance and exponent-interlacing inequalities.

pub mod arrangement;
pub mod catalog;
pub mod checkers;
pub mod derivations;
pub mod error;
pub mod exact;
pub mod indexset;
pub mod lattice;
mod par;
pub mod roots;
pub mod scan;
pub mod selftest;

pub use arrangement::{Arrangement, FlatSpec, LinearForm};
pub use error::{Error, Result};
pub use indexset::IndexSet;
pub use lattice::{char_data, flats, CharData, Flat, Lattice};
