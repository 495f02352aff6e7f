//! Quaternion algebras (a, b / F) over totally real fields: reduced norm,
//! trace and characteristic polynomial, definiteness at the real places,
//! local ramification certificates at odd primes, prime search, the
//! second-kind extension integer d, and end-to-end construction
//! certificates for Salem quartics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::algebraic::RealAlgebraic;
use crate::exact::{
    ff_is_square, is_prime_u64, isolate_real_roots, FiniteField, FiniteFieldElement,
    IntPolynomial, RatPolynomial,
};
use crate::number_field::{
    power_basis_discriminant, quadratic_splitting, FieldElement, FieldError, FieldRef,
    NumberField, SplittingKind, SplittingType,
};
use crate::salem::{is_salem, salem_value, trace_polynomial, SalemError};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QuatError {
    #[error("center field is not totally real")]
    NotTotallyReal,
    #[error("residue characteristic 2 is unsupported")]
    UnsupportedResidueChar,
    #[error("no suitable prime found below the bound")]
    NoPrimeFound,
    #[error("the proposed generator is a square in the center")]
    NotAFieldGenerator,
    #[error("the chosen root is real, not a circle root")]
    NotACircleRoot,
    #[error("no suitable extension integer d found below the search bound")]
    NotFound,
    #[error("polynomial is not a Salem polynomial")]
    NotSalem,
    #[error("construction requires a quadratic trace field")]
    Unsupported,
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("salem error: {0}")]
    Salem(#[from] SalemError),
}

/// The algebra (a, b / F): i^2 = a, j^2 = b, ij = -ji.
#[derive(Clone, Debug)]
pub struct QuaternionAlgebra {
    pub center: FieldRef,
    pub a: FieldElement,
    pub b: FieldElement,
}

impl QuaternionAlgebra {
    pub fn new(center: FieldRef, a: FieldElement, b: FieldElement) -> Self {
        assert!(!a.is_zero() && !b.is_zero(), "a and b must be nonzero");
        QuaternionAlgebra { center, a, b }
    }

    pub fn one(&self) -> QuaternionElement {
        QuaternionElement {
            w: FieldElement::from_integer(self.center.clone(), 1),
            x: FieldElement::from_integer(self.center.clone(), 0),
            y: FieldElement::from_integer(self.center.clone(), 0),
            z: FieldElement::from_integer(self.center.clone(), 0),
        }
    }

    pub fn element(
        &self,
        w: FieldElement,
        x: FieldElement,
        y: FieldElement,
        z: FieldElement,
    ) -> QuaternionElement {
        QuaternionElement { w, x, y, z }
    }

    /// Product in the basis 1, i, j, ij.
    pub fn mul(&self, p: &QuaternionElement, q: &QuaternionElement) -> QuaternionElement {
        let a = &self.a;
        let b = &self.b;
        let ab = a.mul(b);
        let w = p
            .w
            .mul(&q.w)
            .add(&a.mul(&p.x.mul(&q.x)))
            .add(&b.mul(&p.y.mul(&q.y)))
            .sub(&ab.mul(&p.z.mul(&q.z)));
        let x = p
            .w
            .mul(&q.x)
            .add(&p.x.mul(&q.w))
            .sub(&b.mul(&p.y.mul(&q.z)))
            .add(&b.mul(&p.z.mul(&q.y)));
        let y = p
            .w
            .mul(&q.y)
            .add(&p.y.mul(&q.w))
            .add(&a.mul(&p.x.mul(&q.z)))
            .sub(&a.mul(&p.z.mul(&q.x)));
        let z = p
            .w
            .mul(&q.z)
            .add(&p.z.mul(&q.w))
            .add(&p.x.mul(&q.y))
            .sub(&p.y.mul(&q.x));
        QuaternionElement { w, x, y, z }
    }

    /// Reduced norm: N = w^2 - a x^2 - b y^2 + a b z^2.
    pub fn reduced_norm(&self, q: &QuaternionElement) -> FieldElement {
        q.w.mul(&q.w)
            .sub(&self.a.mul(&q.x.mul(&q.x)))
            .sub(&self.b.mul(&q.y.mul(&q.y)))
            .add(&self.a.mul(&self.b).mul(&q.z.mul(&q.z)))
    }

    /// Reduced trace: T = 2w.
    pub fn reduced_trace(&self, q: &QuaternionElement) -> FieldElement {
        q.w.add(&q.w)
    }

    /// Reduced characteristic polynomial X^2 - T X + N as (T, N).
    pub fn reduced_charpoly(&self, q: &QuaternionElement) -> (FieldElement, FieldElement) {
        (self.reduced_trace(q), self.reduced_norm(q))
    }
}

/// Coordinates in the basis 1, i, j, ij.
#[derive(Clone, Debug)]
pub struct QuaternionElement {
    pub w: FieldElement,
    pub x: FieldElement,
    pub y: FieldElement,
    pub z: FieldElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    TotallyIndefinite,
    TotallyDefinite,
    Mixed,
}

/// Definiteness via the sign rule at the real places: (a, b / R) is the
/// Hamilton algebra iff a < 0 and b < 0, and M_2(R) otherwise.
pub fn definiteness(algebra: &QuaternionAlgebra) -> Result<Definiteness, QuatError> {
    let def = algebra.center.defining();
    let real = crate::exact::real_root_count(def).map_err(|_| QuatError::NotTotallyReal)?;
    if real != def.deg() {
        return Err(QuatError::NotTotallyReal);
    }
    let sa = algebra.a.embedding_signs();
    let sb = algebra.b.embedding_signs();
    let mut definite_places = 0usize;
    for (pa, pb) in sa.iter().zip(sb.iter()) {
        match (pa, pb) {
            (Some(Ordering::Less), Some(Ordering::Less)) => definite_places += 1,
            _ => {}
        }
    }
    Ok(if definite_places == sa.len() {
        Definiteness::TotallyDefinite
    } else if definite_places == 0 {
        Definiteness::TotallyIndefinite
    } else {
        Definiteness::Mixed
    })
}

/// Witness that (a, p / F) ramifies at a prime ideal above p: the reduced
/// image of a in the residue field is a non-square, certified by the Euler
/// criterion a^((q-1)/2) = -1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationCertificate {
    pub p: u64,
    pub splitting: SplittingType,
    /// Residue degree f of the witnessing prime ideal (residue field GF(p^f)).
    pub residue_degree: u32,
    /// Image of a in GF(p^f), coordinates in the basis 1, s with s^2 equal
    /// to the canonical non-residue of the field implementation.
    pub a_image: (u64, u64),
    /// a^((q-1)/2) evaluated in GF(p^f); must equal -1.
    pub euler_exponent: u64,
}

impl RamificationCertificate {
    /// Recompute the Euler criterion from the stored data.
    pub fn verify(&self) -> bool {
        if self.p % 2 == 0 || !is_prime_u64(self.p) {
            return false;
        }
        let field = match self.residue_degree {
            1 => FiniteField::prime(self.p),
            2 => FiniteField::quadratic(self.p),
            _ => return false,
        };
        let img = field.el(self.a_image.0 as i64, self.a_image.1 as i64);
        if img.is_zero() {
            return false;
        }
        let q = field.order();
        let e = img.pow((q - 1) / 2);
        e == field.el(self.euler_exponent as i64, 0) && e.is_minus_one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalTest {
    Ramified(RamificationCertificate),
    Split,
    Rejected(String),
}

/// Squarefree kernel of a small integer (squared prime factors removed).
fn squarefree_kernel(n: &BigInt) -> BigInt {
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let mut count = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            count += 1;
        }
        if count % 2 == 1 {
            out *= &d;
        }
        d += 1u32;
    }
    out *= m;
    if n.is_negative() {
        -out
    } else {
        out
    }
}

/// Reduce a rational mod p, failing when p divides the denominator.
fn rational_mod_p(q: &BigRational, p: u64) -> Option<u64> {
    let pp = BigInt::from(p);
    if (q.denom() % &pp).is_zero() {
        return None;
    }
    let num = ((q.numer() % &pp) + &pp) % &pp;
    let den = ((q.denom() % &pp) + &pp) % &pp;
    let num = num.to_u64().unwrap();
    let den = den.to_u64().unwrap();
    // den^(p-2) mod p
    let mut inv = 1u64;
    let mut base = den % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = (inv as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    Some((num as u128 * inv as u128 % p as u128) as u64)
}

/// Roots of the center's defining quadratic in GF(p^f) (f = 1 or 2).
fn center_roots_in(field: &FiniteField, defining: &IntPolynomial) -> Vec<FiniteFieldElement> {
    let p = field.p();
    let pp = BigInt::from(p);
    let red = |c: BigInt| -> u64 { (((c % &pp) + &pp) % &pp).to_u64().unwrap() };
    let c0 = red(defining.coeff(0)) as i64;
    let c1 = red(defining.coeff(1)) as i64;
    let mut out = vec![];
    for el in field.elements() {
        // el^2 + c1*el + c0 = 0
        let sq = el.mul(&el);
        let lin = el.mul(&field.el(c1, 0));
        let val = sq.add(&lin).add(&field.el(c0, 0));
        if val.is_zero() {
            out.push(el);
        }
    }
    out
}

/// Minimal polynomial over Q of sqrt(a), cleared to integer coefficients:
/// M(z^2) for M the minimal polynomial of a.
fn sqrt_min_poly(a: &FieldElement) -> IntPolynomial {
    let m = a.min_poly();
    let mut coeffs = vec![BigRational::zero(); 2 * m.degree().unwrap_or(0) + 1];
    for (k, c) in m.coeffs().iter().enumerate() {
        coeffs[2 * k] = c.clone();
    }
    RatPolynomial::new(coeffs).clear_denominators().primitive_part()
}

/// Prop 2.6 local test at an odd prime p for B = (a, p / F), F quadratic.
///
/// Rejects p when it divides N(a), disc(F) or the power-basis discriminant
/// of F(sqrt(a)); otherwise reduces a into the residue field of each prime
/// ideal above p and looks for a non-square image (Euler criterion).
pub fn local_ramification_test(
    center: &FieldRef,
    a: &FieldElement,
    p: u64,
) -> Result<LocalTest, QuatError> {
    if p == 2 {
        return Err(QuatError::UnsupportedResidueChar);
    }
    assert!(is_prime_u64(p), "{p} is not prime");
    assert_eq!(center.degree(), 2, "local test requires a quadratic center");
    assert!(!a.is_zero(), "a must be nonzero");
    let pp = BigInt::from(p);
    let norm = a.norm();
    if (norm.numer() % &pp).is_zero() || (norm.denom() % &pp).is_zero() {
        return Ok(LocalTest::Rejected(format!("p = {p} divides N(a)")));
    }
    let disc_center = power_basis_discriminant(center.defining());
    if (&disc_center % &pp).is_zero() {
        return Ok(LocalTest::Rejected(format!(
            "p = {p} ramifies in the center"
        )));
    }
    if !a.is_rational() {
        let disc_ext = power_basis_discriminant(&sqrt_min_poly(a));
        if (&disc_ext % &pp).is_zero() {
            return Ok(LocalTest::Rejected(format!(
                "p = {p} divides the discriminant of the extension by sqrt(a)"
            )));
        }
    }
    let d = squarefree_kernel(&disc_center);
    let splitting = quadratic_splitting(&d, p)?;
    let f = match splitting.kind {
        SplittingKind::Ramified => {
            // Unreachable: p | disc was rejected above.
            return Ok(LocalTest::Rejected(format!("p = {p} ramifies in the center")));
        }
        SplittingKind::Split => 1u32,
        SplittingKind::Inert => 2u32,
    };
    let field = if f == 1 {
        FiniteField::prime(p)
    } else {
        FiniteField::quadratic(p)
    };
    let roots = center_roots_in(&field, center.defining());
    debug_assert_eq!(roots.len(), 2, "unramified quadratic has two residue roots");
    // For split p the two roots give the two prime ideals; for inert p the
    // two roots are Frobenius-conjugate and yield the same square class.
    for tau in roots {
        // a = u + v*gamma -> u + v*tau in the residue field.
        let u = match rational_mod_p(&a.repr().coeff(0), p) {
            Some(x) => x,
            None => return Ok(LocalTest::Rejected(format!("p = {p} divides denominators of a"))),
        };
        let v = match rational_mod_p(&a.repr().coeff(1), p) {
            Some(x) => x,
            None => return Ok(LocalTest::Rejected(format!("p = {p} divides denominators of a"))),
        };
        let img = tau.mul(&field.el(v as i64, 0)).add(&field.el(u as i64, 0));
        if img.is_zero() {
            return Ok(LocalTest::Rejected(format!(
                "a reduces to zero at a prime above {p}"
            )));
        }
        if !ff_is_square(&img).expect("nonzero image") {
            let q = field.order();
            let euler = img.pow((q - 1) / 2);
            debug_assert!(euler.is_minus_one());
            return Ok(LocalTest::Ramified(RamificationCertificate {
                p,
                splitting,
                residue_degree: f,
                a_image: (img.a, img.b),
                euler_exponent: euler.a,
            }));
        }
    }
    Ok(LocalTest::Split)
}

/// Smallest odd prime p <= bound with a ramification certificate for
/// (a, p / F); certifies that the algebra is a skew field.
pub fn search_prime(
    center: &FieldRef,
    a: &FieldElement,
    bound: u64,
) -> Result<(u64, RamificationCertificate), QuatError> {
    if a.is_square()? {
        return Err(QuatError::NotAFieldGenerator);
    }
    let mut p = 3u64;
    while p <= bound {
        if is_prime_u64(p) {
            if let LocalTest::Ramified(cert) = local_ramification_test(center, a, p)? {
                return Ok((p, cert));
            }
        }
        p += 2;
    }
    Err(QuatError::NoPrimeFound)
}

/// Trace-field data of a self-reciprocal polynomial: the trace polynomial,
/// the field F = Q[t]/(trace poly) and the trace values t = gamma + 1/gamma
/// of the circle roots (the real roots in (-2, 2)).
pub struct TraceField {
    pub field: FieldRef,
    pub circle_traces: Vec<RealAlgebraic>,
}

pub fn trace_field(p: &IntPolynomial) -> Result<TraceField, QuatError> {
    let t = trace_polynomial(p)?;
    let field = NumberField::new(t.clone())?;
    let mut circle_traces = vec![];
    let two = BigRational::from(BigInt::from(2));
    for (lo, hi) in isolate_real_roots(&t).map_err(|_| QuatError::NotSalem)? {
        let mut root = RealAlgebraic::new(t.clone(), lo, hi).map_err(|_| QuatError::NotSalem)?;
        // Inside (-2, 2)?
        while root.cmp_rational(&two) == Ordering::Equal
            || root.cmp_rational(&(-two.clone())) == Ordering::Equal
        {
            root.refine();
        }
        if root.cmp_rational(&two) == Ordering::Less
            && root.cmp_rational(&(-two.clone())) == Ordering::Greater
        {
            circle_traces.push(root);
        }
    }
    Ok(TraceField {
        field,
        circle_traces,
    })
}

/// The generator a = (gamma - conj(gamma))^2 of K over the trace field,
/// expressed in F: for |gamma| = 1 one has a = t^2 - 4 with t = gamma +
/// conj(gamma), since gamma * conj(gamma) = 1.
pub fn generator_from_gamma(
    tf: &TraceField,
    circle_trace: &RealAlgebraic,
) -> Result<FieldElement, QuatError> {
    let two = BigRational::from(BigInt::from(2));
    if circle_trace.cmp_rational(&two) != Ordering::Less
        || circle_trace.cmp_rational(&(-two.clone())) != Ordering::Greater
    {
        return Err(QuatError::NotACircleRoot);
    }
    let t = FieldElement::generator(tf.field.clone());
    Ok(t.mul(&t).sub(&FieldElement::from_integer(tf.field.clone(), 4)))
}

/// True iff a1 and a2 generate the same quadratic extension of their
/// (common, quadratic) parent field: a1/a2 is a square.
pub fn same_extension(a1: &FieldElement, a2: &FieldElement) -> Result<bool, QuatError> {
    let inv = a2.inv().ok_or(QuatError::NotAFieldGenerator)?;
    Ok(a1.mul(&inv).is_square()?)
}

/// Lemma-2.13 extension integer: the smallest d > 0 coprime to p such that
/// -d is a square in the certificate's residue field but not a square in
/// the (totally real) center, so F(sqrt(-d)) is a CM-field that does not
/// embed into the algebra at the ramified place.
pub fn second_kind_d(
    cert: &RamificationCertificate,
    center: &FieldRef,
) -> Result<u64, QuatError> {
    let p = cert.p;
    let field = match cert.residue_degree {
        1 => FiniteField::prime(p),
        2 => FiniteField::quadratic(p),
        _ => return Err(QuatError::NotFound),
    };
    for d in 1..=10_000u64 {
        if d % p == 0 {
            continue;
        }
        let md = field.el(-(d as i64), 0);
        if md.is_zero() || !ff_is_square(&md).expect("nonzero") {
            continue;
        }
        let md_center = FieldElement::from_rational(
            center.clone(),
            BigRational::from(-BigInt::from(d)),
        );
        if md_center.is_square()? {
            continue;
        }
        return Ok(d);
    }
    Err(QuatError::NotFound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionVariant {
    Indefinite,
    SecondKind,
}

/// End-to-end certificate: a Salem quartic, the trace-field generator a,
/// a certified ramification prime, and the predicted dynamical degree
/// sequence on the target abelian variety.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstructionCertificate {
    pub polynomial: IntPolynomial,
    /// Degree of the Salem polynomial.
    pub salem_degree: usize,
    /// Dimension of the target abelian variety.
    pub dimension: usize,
    pub variant: ConstructionVariant,
    pub v: u32,
    /// True when only the degree sequence is predicted (v > 1) and no
    /// number-field realization is attached.
    pub abstract_only: bool,
    pub generator: FieldElement,
    pub prime: u64,
    pub ramification: RamificationCertificate,
    pub second_kind_d: Option<u64>,
    pub salem_value: RealAlgebraic,
    /// lambda_k = salem_value^(exponents[k]); palindromic, length dim + 1.
    pub degree_exponents: Vec<u32>,
}

/// Predicted exponent sequence of Cor 2.2: ramp 2k up to the plateau.
fn degree_exponents(dimension: usize, ramp: usize) -> Vec<u32> {
    (0..=dimension)
        .map(|k| 2 * k.min(ramp).min(dimension - k) as u32)
        .collect()
}

pub fn build_construction_certificate(
    p_poly: &IntPolynomial,
    variant: ConstructionVariant,
    v: u32,
    prime_bound: u64,
) -> Result<ConstructionCertificate, QuatError> {
    assert!(v >= 1, "v must be positive");
    if !is_salem(p_poly) {
        return Err(QuatError::NotSalem);
    }
    let g = p_poly.deg();
    // The realized construction needs a quadratic trace field.
    if g != 4 {
        return Err(QuatError::Unsupported);
    }
    let tf = trace_field(p_poly)?;
    let circle = tf
        .circle_traces
        .first()
        .ok_or(QuatError::NotACircleRoot)?
        .clone();
    let a = generator_from_gamma(&tf, &circle)?;
    let (prime, ramification) = search_prime(&tf.field, &a, prime_bound)?;
    let d = match variant {
        ConstructionVariant::Indefinite => None,
        ConstructionVariant::SecondKind => Some(second_kind_d(&ramification, &tf.field)?),
    };
    let (dimension, ramp) = match variant {
        ConstructionVariant::Indefinite => (g * v as usize, v as usize),
        ConstructionVariant::SecondKind => (2 * g * v as usize, 2 * v as usize),
    };
    Ok(ConstructionCertificate {
        polynomial: p_poly.clone(),
        salem_degree: g,
        dimension,
        variant,
        v,
        abstract_only: v > 1,
        generator: a,
        prime,
        ramification,
        second_kind_d: d,
        salem_value: salem_value(p_poly)?,
        degree_exponents: degree_exponents(dimension, ramp),
    })
}
