//! Certified classification of root moduli, Salem/Pisot detection, and the
//! trace-polynomial transform y = x + 1/x.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::algebraic::{root_moduli, trace_poly_of_reciprocal, AlgebraicError, Modulus, RealAlgebraic};
use crate::exact::{isolate_real_roots, sturm_count, IntPolynomial};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SalemError {
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not self-reciprocal of even degree")]
    NotReciprocal,
    #[error("polynomial is not a Salem polynomial")]
    NotSalem,
    #[error("certification failed at maximum precision")]
    Indeterminate,
    #[error("zero polynomial")]
    ZeroPolynomial,
}

impl From<AlgebraicError> for SalemError {
    fn from(e: AlgebraicError) -> Self {
        match e {
            AlgebraicError::NotSquarefree => SalemError::NotSquarefree,
            _ => SalemError::Indeterminate,
        }
    }
}

/// Exact counts of roots outside / on / inside the unit circle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliPattern {
    pub n_outside: usize,
    pub n_on: usize,
    pub n_inside: usize,
    pub certified: bool,
    pub real_root_count: usize,
}

/// Certificate that a polynomial is Salem: the polynomial, its trace
/// polynomial, and the Salem number with a certified error radius.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SalemCertificate {
    pub polynomial: IntPolynomial,
    pub trace_polynomial: IntPolynomial,
    pub salem_value: RealAlgebraic,
    pub degree: usize,
}

/// Exact moduli counts for a squarefree integer polynomial.
pub fn classify_root_moduli(p: &IntPolynomial) -> Result<ModuliPattern, SalemError> {
    if p.is_zero() {
        return Err(SalemError::ZeroPolynomial);
    }
    let c = root_moduli(p)?;
    let mut pattern = ModuliPattern {
        n_outside: 0,
        n_on: 0,
        n_inside: 0,
        certified: c.certified,
        real_root_count: c.real_root_count,
    };
    for m in &c.moduli {
        match m.cmp_one() {
            Ordering::Greater => pattern.n_outside += 1,
            Ordering::Equal => pattern.n_on += 1,
            Ordering::Less => pattern.n_inside += 1,
        }
    }
    Ok(pattern)
}

/// Full moduli list (exposed for the dynamics module).
pub fn certified_moduli(p: &IntPolynomial) -> Result<Vec<Modulus>, SalemError> {
    Ok(root_moduli(p)?.moduli)
}

/// Trace polynomial of a self-reciprocal polynomial of even degree 2m.
pub fn trace_polynomial(p: &IntPolynomial) -> Result<IntPolynomial, SalemError> {
    if p.is_zero() || !p.is_self_reciprocal() || p.deg() % 2 != 0 {
        return Err(SalemError::NotReciprocal);
    }
    Ok(trace_poly_of_reciprocal(p))
}

fn basic_salem_shape(p: &IntPolynomial, allow_quadratic: bool) -> bool {
    if p.is_zero() || !p.is_monic() {
        return false;
    }
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        _ => return false,
    };
    if n % 2 != 0 || (!allow_quadratic && n < 4) {
        return false;
    }
    if !p.is_self_reciprocal() {
        // A monic integer polynomial with one root > 1, one root < 1 and the
        // rest on the circle is automatically self-reciprocal; reject early.
        return false;
    }
    if !p.is_irreducible() {
        return false;
    }
    true
}

/// Salem test under the classical convention: monic, integral, irreducible,
/// exactly one root of modulus > 1 (real), one of modulus < 1, at least two
/// on the unit circle (hence degree >= 4). `allow_quadratic` relaxes the
/// degree bound for comparison with the wider literature.
pub fn is_salem_with(p: &IntPolynomial, allow_quadratic: bool) -> bool {
    if !basic_salem_shape(p, allow_quadratic) {
        return false;
    }
    let n = p.deg();
    let Ok(pattern) = classify_root_moduli(p) else {
        return false;
    };
    let expected_on = if allow_quadratic && n == 2 { 0 } else { 2 };
    if !(pattern.n_outside == 1
        && pattern.n_inside == 1
        && pattern.n_on == n - 2
        && pattern.n_on >= expected_on)
    {
        return false;
    }
    // The Salem number itself must be real and > 1 (a single root off the
    // circle is automatically real, but it could be < -1).
    dominant_real_root(p).map_or(false, |r| r.cmp_rational(&BigRational::one()) == Ordering::Greater)
}

pub fn is_salem(p: &IntPolynomial) -> bool {
    is_salem_with(p, false)
}

/// Pisot test: monic, integral, irreducible, exactly one root of modulus > 1
/// and all other roots strictly inside the unit circle.
pub fn is_pisot(p: &IntPolynomial) -> bool {
    if p.is_zero() || !p.is_monic() {
        return false;
    }
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if !p.is_irreducible() {
        return false;
    }
    let Ok(pattern) = classify_root_moduli(p) else {
        return false;
    };
    // The dominant root of a Pisot polynomial is real > 1; with exactly one
    // root outside and none on the circle it must be real (complex roots come
    // in pairs of equal modulus), but its sign needs a check.
    if !(pattern.n_outside == 1 && pattern.n_on == 0 && pattern.n_inside == n - 1) {
        return false;
    }
    dominant_real_root(p).map_or(false, |r| r.cmp_rational(&BigRational::one()) == Ordering::Greater)
}

/// The largest real root as a certified algebraic number.
fn dominant_real_root(p: &IntPolynomial) -> Option<RealAlgebraic> {
    let ivs = isolate_real_roots(p).ok()?;
    let (lo, hi) = ivs.last()?.clone();
    RealAlgebraic::new(p.primitive_part(), lo, hi).ok()
}

/// The Salem number (unique real root > 1) with certified radius <= 10^-30.
pub fn salem_value(p: &IntPolynomial) -> Result<RealAlgebraic, SalemError> {
    if !is_salem(p) {
        return Err(SalemError::NotSalem);
    }
    let mut r = dominant_real_root(p).ok_or(SalemError::Indeterminate)?;
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(30));
    r.refine_to_width(&eps);
    Ok(r)
}

/// Full Salem certificate.
pub fn salem_certificate(p: &IntPolynomial) -> Result<SalemCertificate, SalemError> {
    let value = salem_value(p)?;
    Ok(SalemCertificate {
        polynomial: p.clone(),
        trace_polynomial: trace_polynomial(p)?,
        salem_value: value,
        degree: p.deg(),
    })
}

/// Trace-polynomial criterion: for self-reciprocal irreducible P of degree
/// >= 4, P is Salem iff its trace polynomial has all roots real, exactly one
/// in (2, inf) and the rest in (-2, 2).
pub fn salem_by_trace_criterion(p: &IntPolynomial) -> Result<bool, SalemError> {
    let t = trace_polynomial(p)?;
    if !p.is_monic() || !p.is_irreducible() || p.deg() < 4 {
        return Ok(false);
    }
    let m = t.deg();
    let two = BigRational::from_integer(2.into());
    let big = t.cauchy_root_bound() + BigRational::one();
    let in_middle = sturm_count(&t, &-two.clone(), &two).map_err(|_| SalemError::Indeterminate)?;
    let above = sturm_count(&t, &two, &big).map_err(|_| SalemError::Indeterminate)?;
    Ok(in_middle == m - 1 && above == 1 && !t.eval_rat(&two).is_zero() && !t.eval_rat(&-two).is_zero())
}
