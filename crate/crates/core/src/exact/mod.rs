//! Arbitrary-precision polynomial and finite-field arithmetic: the exact
//! foundation every other module builds on. All values are immutable and
//! all operations are pure functions.

mod int_poly;
mod rat_poly;
mod finite_field;
mod sturm;
mod resultant;
mod integers;
mod parse;

pub use int_poly::IntPolynomial;
pub use rat_poly::RatPolynomial;
pub use finite_field::{FiniteField, FiniteFieldElement, least_nonresidue, ff_is_square};
pub use sturm::{sturm_count, real_root_count, isolate_real_roots, SturmError};
pub use resultant::{poly_resultant, resultant_y, det_bareiss, ResultantError};
pub use integers::{is_squarefree_integer, SquarefreeError, small_primes, is_prime_u64};
pub use parse::{parse_poly, ParseError};

use num_rational::BigRational;

/// Convenience: rational from an i64 pair.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
