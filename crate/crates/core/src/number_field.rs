//! Arithmetic in number fields Q[x]/(P) for monic irreducible P of degree
//! <= 8: norms, traces, minimal polynomials, power-basis discriminants,
//! embedding signatures, prime splitting in quadratic fields, and a
//! brute-force primality test for the ideal p*O in a power order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::sync::Arc;

use crate::algebraic::RealAlgebraic;
use crate::exact::{
    is_prime_u64, is_squarefree_integer, poly_resultant, real_root_count, resultant_y,
    IntPolynomial, RatPolynomial,
};

pub const MAX_FIELD_DEGREE: usize = 8;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("defining polynomial must be monic")]
    NotMonic,
    #[error("defining polynomial is reducible over Q")]
    Reducible,
    #[error("field degree exceeds the supported bound of 8")]
    DegreeTooLarge,
    #[error("residue characteristic 2 is unsupported")]
    UnsupportedResidueChar,
    #[error("enumeration exceeds the work bound")]
    WorkBoundExceeded,
    #[error("operation requires a quadratic field")]
    NotQuadratic,
}

/// Number field Q(gamma) = Q[x]/(defining).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberField {
    defining: IntPolynomial,
}

pub type FieldRef = Arc<NumberField>;

impl NumberField {
    pub fn new(defining: IntPolynomial) -> Result<FieldRef, FieldError> {
        if !defining.is_monic() {
            return Err(FieldError::NotMonic);
        }
        if defining.deg() > MAX_FIELD_DEGREE {
            return Err(FieldError::DegreeTooLarge);
        }
        if !defining.is_irreducible() {
            return Err(FieldError::Reducible);
        }
        Ok(Arc::new(NumberField { defining }))
    }

    pub fn defining(&self) -> &IntPolynomial {
        &self.defining
    }

    pub fn degree(&self) -> usize {
        self.defining.deg()
    }

    /// Power sums p_0, ..., p_k of the roots, via Newton's identities.
    fn power_sums(&self, k: usize) -> Vec<BigRational> {
        let n = self.degree();
        let mut p = vec![BigRational::from(BigInt::from(n as i64))];
        for m in 1..=k {
            let mut acc = BigRational::zero();
            for i in 1..m.min(n + 1) {
                let a = BigRational::from(self.defining.coeff(n - i));
                acc += a * &p[m - i];
            }
            if m <= n {
                acc += BigRational::from(BigInt::from(m as i64) * self.defining.coeff(n - m));
            }
            p.push(-acc);
        }
        p
    }
}

/// Element of a number field: a residue class modulo the defining polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldElement {
    pub parent: FieldRef,
    repr: RatPolynomial,
}

impl FieldElement {
    pub fn new(parent: FieldRef, repr: RatPolynomial) -> Self {
        let repr = repr.rem(&parent.defining.to_rat());
        FieldElement { parent, repr }
    }

    pub fn from_rational(parent: FieldRef, q: BigRational) -> Self {
        FieldElement {
            parent,
            repr: RatPolynomial::constant(q),
        }
    }

    pub fn from_integer(parent: FieldRef, n: i64) -> Self {
        Self::from_rational(parent, BigRational::from(BigInt::from(n)))
    }

    pub fn generator(parent: FieldRef) -> Self {
        Self::new(
            parent,
            RatPolynomial::new(vec![BigRational::zero(), BigRational::one()]),
        )
    }

    pub fn repr(&self) -> &RatPolynomial {
        &self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.repr.degree().map_or(true, |d| d == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.parent.defining, other.parent.defining);
        FieldElement {
            parent: self.parent.clone(),
            repr: self.repr.add(&other.repr),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.parent.defining, other.parent.defining);
        FieldElement {
            parent: self.parent.clone(),
            repr: self.repr.sub(&other.repr),
        }
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            parent: self.parent.clone(),
            repr: self.repr.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.parent.defining, other.parent.defining);
        FieldElement {
            parent: self.parent.clone(),
            repr: self
                .repr
                .mul(&other.repr)
                .rem(&self.parent.defining.to_rat()),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        FieldElement {
            parent: self.parent.clone(),
            repr: self.repr.scale(q),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, _s, t) = self.parent.defining.to_rat().extended_gcd(&self.repr);
        if g.degree() != Some(0) {
            return None;
        }
        Some(FieldElement {
            parent: self.parent.clone(),
            repr: t.rem(&self.parent.defining.to_rat()),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = FieldElement::from_rational(self.parent.clone(), BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Norm over Q: Res(defining, repr); N(c) = c^degree for constants.
    pub fn norm(&self) -> BigRational {
        if self.repr.is_zero() {
            return BigRational::zero();
        }
        poly_resultant(&self.parent.defining.to_rat(), &self.repr).expect("nonzero inputs")
    }

    /// Trace over Q: sum of the images of repr over all roots.
    pub fn trace(&self) -> BigRational {
        let k = self
            .parent
            .degree()
            .saturating_sub(1)
            .max(self.repr.degree().unwrap_or(0));
        let ps = self.parent.power_sums(k);
        let mut acc = BigRational::zero();
        for (j, c) in self.repr.coeffs().iter().enumerate() {
            acc += c * &ps[j];
        }
        acc
    }

    /// Monic characteristic polynomial over Q, degree = field degree:
    /// Res_y(P(y), x - repr(y)) = prod_i (x - repr(alpha_i)).
    pub fn char_poly(&self) -> RatPolynomial {
        let n = self.parent.degree();
        if self.repr.is_zero() {
            let mut c = vec![BigRational::zero(); n + 1];
            c[n] = BigRational::one();
            return RatPolynomial::new(c);
        }
        let d = self.repr.degree().unwrap_or(0);
        let mut b: Vec<RatPolynomial> = vec![];
        for k in 0..=d {
            let c = self.repr.coeff(k);
            if k == 0 {
                b.push(RatPolynomial::new(vec![-c, BigRational::one()]));
            } else {
                b.push(RatPolynomial::constant(-c));
            }
        }
        resultant_y(&self.parent.defining.to_rat(), &b).monic()
    }

    /// Monic minimal polynomial over Q (squarefree part of char_poly).
    pub fn min_poly(&self) -> RatPolynomial {
        let cp = self.char_poly();
        let g = cp.gcd(&cp.derivative());
        if g.degree() == Some(0) {
            return cp;
        }
        cp.div_rem(&g).0.monic()
    }

    /// Signs at the real embeddings, in increasing order of the embedded
    /// generator. `None` marks an exact zero image.
    pub fn embedding_signs(&self) -> Vec<Option<Ordering>> {
        let roots = crate::exact::isolate_real_roots(&self.parent.defining)
            .expect("defining polynomial is squarefree");
        let mut out = vec![];
        for (lo, hi) in roots {
            if self.is_zero() {
                out.push(None);
                continue;
            }
            let mut root = RealAlgebraic::new(self.parent.defining.clone(), lo, hi)
                .expect("isolating interval");
            loop {
                let (elo, ehi) = eval_interval(&self.repr, root.lo(), root.hi());
                if elo.is_positive() {
                    out.push(Some(Ordering::Greater));
                    break;
                }
                if ehi.is_negative() {
                    out.push(Some(Ordering::Less));
                    break;
                }
                // Exact-zero check: repr vanishes at this root iff the root
                // is shared with the numerator polynomial of repr.
                let num = self.repr.clear_denominators();
                let g = self.parent.defining.gcd(&num);
                if g.degree().map_or(false, |dg| dg >= 1)
                    && matches!(crate::exact::sturm_count(&g, root.lo(), root.hi()), Ok(1))
                {
                    out.push(None);
                    break;
                }
                root.refine();
            }
        }
        out
    }

    /// Exact square test, implemented for quadratic fields (all square-class
    /// decisions in this crate happen in real quadratic trace fields).
    pub fn is_square(&self) -> Result<bool, FieldError> {
        Ok(self.square_root()?.is_some())
    }

    /// A square root in the field if one exists (quadratic fields only).
    ///
    /// Writing gamma^2 = c1*gamma + c0 and x = u + v*gamma, a root
    /// s + t*gamma of z^2 - x satisfies s^2 + t^2*c0 = u and
    /// t*(2s + t*c1) = v; eliminating s gives a rational quadratic in t^2.
    pub fn square_root(&self) -> Result<Option<FieldElement>, FieldError> {
        if self.parent.degree() != 2 {
            return Err(FieldError::NotQuadratic);
        }
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        let c0 = -BigRational::from(self.parent.defining.coeff(0));
        let c1 = -BigRational::from(self.parent.defining.coeff(1));
        let u = self.repr.coeff(0);
        let v = self.repr.coeff(1);
        let two = BigRational::from(BigInt::from(2));
        let four = BigRational::from(BigInt::from(4));
        let mk = |s: BigRational, t: BigRational| {
            FieldElement::new(self.parent.clone(), RatPolynomial::new(vec![s, t]))
        };
        if v.is_zero() {
            // t = 0, s^2 = u; or s = -t*c1/2 with t^2*(c1^2/4 + c0) = u.
            if let Some(s) = rational_sqrt(&u) {
                return Ok(Some(mk(s, BigRational::zero())));
            }
            let q = &c1 * &c1 / &four + &c0;
            if !q.is_zero() {
                if let Some(t) = rational_sqrt(&(&u / &q)) {
                    let s = -&t * &c1 / &two;
                    return Ok(Some(mk(s, t)));
                }
            }
            return Ok(None);
        }
        // v != 0 forces t != 0: with w = t^2,
        // (c1^2 + 4*c0) w^2 - (2*v*c1 + 4*u) w + v^2 = 0.
        let qa = &c1 * &c1 + &four * &c0;
        let qb = -(&two * &v * &c1 + &four * &u);
        let qc = &v * &v;
        let mut w_candidates = vec![];
        if qa.is_zero() {
            if !qb.is_zero() {
                w_candidates.push(-&qc / &qb);
            }
        } else {
            let disc = &qb * &qb - &four * &qa * &qc;
            if let Some(sq) = rational_sqrt(&disc) {
                w_candidates.push((-&qb + &sq) / (&two * &qa));
                w_candidates.push((-&qb - &sq) / (&two * &qa));
            }
        }
        for w in w_candidates {
            if let Some(t) = rational_sqrt(&w) {
                if t.is_zero() {
                    continue;
                }
                let s = (&v / &t - &t * &c1) / &two;
                let cand = mk(s, t);
                if cand.mul(&cand).sub(self).is_zero() {
                    return Ok(Some(cand));
                }
            }
        }
        Ok(None)
    }
}

/// Exact rational square root, if the argument is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    if &(&ns * &ns) == q.numer() && &(&ds * &ds) == q.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// Interval evaluation of a rational polynomial on [lo, hi] (Horner with
/// interval arithmetic; correct, not tight).
fn eval_interval(
    p: &RatPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut alo = BigRational::zero();
    let mut ahi = BigRational::zero();
    for c in p.coeffs().iter().rev() {
        let products = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut nlo = products[0].clone();
        let mut nhi = products[0].clone();
        for v in &products[1..] {
            if *v < nlo {
                nlo = v.clone();
            }
            if *v > nhi {
                nhi = v.clone();
            }
        }
        alo = nlo + c;
        ahi = nhi + c;
    }
    (alo, ahi)
}

/// Power-basis discriminant: (-1)^(n(n-1)/2) * N(P'(gamma)).
pub fn power_basis_discriminant(p: &IntPolynomial) -> BigInt {
    assert!(p.is_monic(), "power basis needs a monic polynomial");
    let n = p.deg();
    let res = poly_resultant(&p.to_rat(), &p.derivative().to_rat()).expect("nonzero");
    let v = res.to_integer();
    if (n * (n - 1) / 2) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Embedding signature (r1 real embeddings, r2 conjugate pairs).
pub fn embedding_signature(p: &IntPolynomial) -> (usize, usize) {
    let r1 = real_root_count(p).expect("irreducible polynomials are squarefree");
    (r1, (p.deg() - r1) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    TotallyReal,
    Cm,
    Mixed,
    Other,
}

/// Field classification from the defining polynomial.
pub fn field_kind(p: &IntPolynomial) -> FieldKind {
    let n = p.deg();
    let (r1, r2) = embedding_signature(p);
    if r2 == 0 {
        return FieldKind::TotallyReal;
    }
    if r1 > 0 {
        return FieldKind::Mixed;
    }
    // Totally imaginary; CM iff there is a totally real subfield of index 2.
    if n == 2 {
        return FieldKind::Cm;
    }
    // For a self-reciprocal defining polynomial the candidate half-degree
    // subfield is generated by gamma + 1/gamma.
    if p.is_self_reciprocal() && n % 2 == 0 {
        let t = crate::algebraic::trace_poly_of_reciprocal(p).squarefree_part();
        if matches!(real_root_count(&t), Ok(c) if c == t.deg()) {
            return FieldKind::Cm;
        }
    }
    // General case: the field is CM iff complex conjugation acts as a field
    // automorphism, i.e. there is a rational g with g(alpha) = conj(alpha)
    // under every embedding. Propose g numerically, then verify exactly that
    // x + g(x) generates a totally real subfield of half degree.
    if n % 2 == 0 {
        if let Some(g) = conjugation_polynomial(p) {
            if let Ok(field) = NumberField::new(p.clone()) {
                let x = FieldElement::generator(field.clone());
                let t = x.add(&FieldElement::new(field, g));
                let mp = t.min_poly().clear_denominators();
                if mp.deg() == n / 2
                    && matches!(real_root_count(&mp), Ok(c) if c == n / 2)
                {
                    return FieldKind::Cm;
                }
            }
        }
    }
    FieldKind::Other
}

/// Continued-fraction rational reconstruction of an f64, denominator <= 10^6.
fn reconstruct_rational(x: f64) -> Option<BigRational> {
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, x.round() as i64, 1i64);
    let mut frac = x - x.round();
    for _ in 0..40 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() < 1e-9 {
            return Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)));
        }
        if frac.abs() < 1e-12 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.round();
        if !a.is_finite() || a.abs() > 1e15 {
            break;
        }
        frac = inv - a;
        let (p2, q2) = (
            (a as i64).checked_mul(p1)?.checked_add(p0)?,
            (a as i64).checked_mul(q1)?.checked_add(q0)?,
        );
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if q1.abs() > 1_000_000 {
            break;
        }
    }
    None
}

/// Polynomial composition reduced modulo a defining polynomial.
fn compose_mod(g: &RatPolynomial, inner: &RatPolynomial, modulus: &RatPolynomial) -> RatPolynomial {
    let mut acc = RatPolynomial::zero();
    for c in g.coeffs().iter().rev() {
        acc = acc.mul(inner).add(&RatPolynomial::constant(c.clone())).rem(modulus);
    }
    acc
}

/// The rational polynomial g with g(alpha) = conj(alpha) under every complex
/// embedding, when it exists (i.e. when complex conjugation is a field
/// automorphism). Proposed by solving the Vandermonde system at the numeric
/// roots and verified exactly; returns None for non-CM fields or when the
/// numeric reconstruction fails.
fn conjugation_polynomial(p: &IntPolynomial) -> Option<RatPolynomial> {
    let n = p.deg();
    let disks = crate::algebraic::certified_complex_roots(p, 64).ok()?;
    let roots: Vec<(f64, f64)> = disks
        .iter()
        .map(|d| (d.re.to_f64().unwrap_or(f64::NAN), d.im.to_f64().unwrap_or(f64::NAN)))
        .collect();
    if roots.len() != n || roots.iter().any(|r| !r.0.is_finite() || !r.1.is_finite()) {
        return None;
    }
    // Complex Gaussian elimination on the Vandermonde system V c = conj(r).
    let cmul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let csub = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0, a.1 - b.1);
    let cdiv = |a: (f64, f64), b: (f64, f64)| {
        let d = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
    };
    let mut m: Vec<Vec<(f64, f64)>> = roots
        .iter()
        .map(|&r| {
            let mut row = Vec::with_capacity(n + 1);
            let mut acc = (1.0, 0.0);
            for _ in 0..n {
                row.push(acc);
                acc = cmul(acc, r);
            }
            row.push((r.0, -r.1));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).max_by(|&a, &b| {
            let na = m[a][col].0.hypot(m[a][col].1);
            let nb = m[b][col].0.hypot(m[b][col].1);
            na.partial_cmp(&nb).unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if m[pivot][col].0.hypot(m[pivot][col].1) < 1e-12 {
            return None;
        }
        m.swap(col, pivot);
        for row in 0..n {
            if row == col {
                continue;
            }
            let factor = cdiv(m[row][col], m[col][col]);
            for k in col..=n {
                let t = cmul(factor, m[col][k]);
                m[row][k] = csub(m[row][k], t);
            }
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        let c = cdiv(m[i][n], m[i][i]);
        if c.1.abs() > 1e-8 {
            return None;
        }
        coeffs.push(reconstruct_rational(c.0)?);
    }
    let g = RatPolynomial::new(coeffs);
    // Exact verification: P(g(x)) = 0 mod P and g(g(x)) = x mod P.
    let modulus = p.to_rat();
    if !compose_mod(&modulus, &g, &modulus).is_zero() {
        return None;
    }
    let x = RatPolynomial::new(vec![BigRational::zero(), BigRational::one()]);
    if compose_mod(&g, &g, &modulus) != x {
        return None;
    }
    Some(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplittingKind {
    Split,
    Inert,
    Ramified,
}

/// Splitting of an odd prime in Q(sqrt(D)), with (e, f) per prime above p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingType {
    pub kind: SplittingKind,
    pub primes: Vec<(u32, u32)>,
}

pub fn quadratic_splitting(d: &BigInt, p: u64) -> Result<SplittingType, FieldError> {
    if p == 2 {
        return Err(FieldError::UnsupportedResidueChar);
    }
    assert!(is_prime_u64(p), "{p} is not prime");
    assert!(
        matches!(is_squarefree_integer(d), Ok(true)),
        "quadratic_splitting requires a squarefree D"
    );
    let pp = BigInt::from(p);
    let dm = ((d % &pp) + &pp) % &pp;
    if dm.is_zero() {
        return Ok(SplittingType {
            kind: SplittingKind::Ramified,
            primes: vec![(2, 1)],
        });
    }
    let dm_u = dm.to_u64().expect("reduced residue fits");
    let is_sq = (1..p).any(|x| (x as u128 * x as u128 % p as u128) as u64 == dm_u);
    Ok(if is_sq {
        SplittingType {
            kind: SplittingKind::Split,
            primes: vec![(1, 1), (1, 1)],
        }
    } else {
        SplittingType {
            kind: SplittingKind::Inert,
            primes: vec![(1, 2)],
        }
    })
}

/// The order Z[gamma] with its exact multiplication table.
#[derive(Clone, Debug)]
pub struct PowerOrder {
    pub field: FieldRef,
    /// table[i][j] = integer coordinates of gamma^(i+j) in the power basis.
    table: Vec<Vec<Vec<BigInt>>>,
    /// Set when the power-basis discriminant is not (provably) squarefree,
    /// so Z[gamma] may be a proper suborder of the ring of integers.
    pub maybe_non_maximal: bool,
}

impl PowerOrder {
    pub fn new(field: FieldRef) -> Self {
        let n = field.degree();
        let mut powers: Vec<Vec<BigInt>> = vec![];
        let mut cur = vec![BigInt::zero(); n];
        cur[0] = BigInt::one();
        powers.push(cur.clone());
        for _ in 1..(2 * n - 1).max(1) {
            let top = cur[n - 1].clone();
            for i in (1..n).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                // gamma^n = -(a_0 + a_1 gamma + ... + a_{n-1} gamma^{n-1})
                for (i, slot) in cur.iter_mut().enumerate() {
                    *slot -= &top * field.defining().coeff(i);
                }
            }
            powers.push(cur.clone());
        }
        let mut table = vec![vec![vec![BigInt::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = powers[i + j].clone();
            }
        }
        let disc = power_basis_discriminant(field.defining());
        let maybe_non_maximal = !matches!(is_squarefree_integer(&disc), Ok(true));
        PowerOrder {
            field,
            table,
            maybe_non_maximal,
        }
    }

    /// Multiply two coordinate vectors of O/pO.
    fn mul_mod_p(&self, u: &[u64], v: &[u64], p: u64) -> Vec<u64> {
        let n = u.len();
        let pp = BigInt::from(p);
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            for j in 0..n {
                if v[j] == 0 {
                    continue;
                }
                let c = BigInt::from(u[i] * v[j]);
                for k in 0..n {
                    out[k] += &c * &self.table[i][j][k];
                }
            }
        }
        out.iter()
            .map(|x| (((x % &pp) + &pp) % &pp).to_u64().unwrap())
            .collect()
    }
}

/// Work bound for the brute-force ideal primality test (pair count p^(2n)).
pub const IDEAL_WORK_BOUND: u128 = 80_000_000;

/// True iff p*O is a prime ideal of the power order O, i.e. O/pO has no
/// zero divisors. Exhaustive search over pairs of nonzero residue vectors,
/// halved by commutativity (only pairs with u[0] <= v[0] are tested).
pub fn is_prime_ideal_p_o(order: &PowerOrder, p: u64) -> Result<bool, FieldError> {
    assert!(is_prime_u64(p), "{p} is not prime");
    let n = order.field.degree();
    if (p as u128).pow(2 * n as u32) > IDEAL_WORK_BOUND {
        return Err(FieldError::WorkBoundExceeded);
    }
    let pn = p.pow(n as u32);
    let decode = |mut idx: u64| -> Vec<u64> {
        let mut v = vec![0u64; n];
        for slot in v.iter_mut() {
            *slot = idx % p;
            idx /= p;
        }
        v
    };
    for ui in 1..pn {
        let u = decode(ui);
        for vi in 1..pn {
            let v = decode(vi);
            if u[0] > v[0] {
                continue;
            }
            if order.mul_mod_p(&u, &v, p).iter().all(|&x| x == 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Independent check used by tests: for p not dividing the discriminant,
/// p*O is prime iff the defining polynomial stays irreducible mod p.
/// Implemented by trial division over GF(p)[x] up to half the degree.
pub fn defining_irreducible_mod_p(p_poly: &IntPolynomial, p: u64) -> bool {
    let n = p_poly.deg();
    let pp = BigInt::from(p);
    let target: Vec<u64> = (0..=n)
        .map(|i| (((p_poly.coeff(i) % &pp) + &pp) % &pp).to_u64().unwrap())
        .collect();
    if *target.last().unwrap() == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut t = idx;
            for slot in g.iter_mut().take(d) {
                *slot = t % p;
                t /= p;
            }
            g[d] = 1;
            // Divide target by the monic g over GF(p); remainder in rem[0..d].
            let mut rem = target.clone();
            for k in (d..=n).rev() {
                let c = rem[k];
                if c == 0 {
                    continue;
                }
                rem[k] = 0;
                for (i, &gi) in g.iter().enumerate().take(d) {
                    let sub = (c as u128 * gi as u128 % p as u128) as u64;
                    let pos = k - d + i;
                    rem[pos] = (rem[pos] + p - sub) % p;
                }
            }
            if rem[..d].iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}
