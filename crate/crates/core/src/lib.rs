//! Exact-arithmetic toolkit for algebraic dynamics on complex tori and
//! abelian varieties: certified root-modulus classification of integer
//! polynomials (Salem/Pisot detection), number-field arithmetic, quaternion
//! algebras over real quadratic fields with local ramification certificates,
//! and dynamical degrees / entropy / fixed-point counts with an exact
//! diagram classifier for dimensions 1..4.

pub mod exact;
pub mod algebraic;
pub mod salem;
pub mod number_field;
pub mod quaternion;
pub mod dynamics;

pub use exact::{IntPolynomial, RatPolynomial, FiniteField, FiniteFieldElement};
pub use algebraic::RealAlgebraic;

/// Working precision in bits for numerical fallbacks (root refinement).
/// Reads `ADT_PRECISION_BITS`, default 200.
pub fn precision_bits() -> u32 {
    std::env::var("ADT_PRECISION_BITS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(200)
}
