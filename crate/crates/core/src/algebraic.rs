//! Certified real algebraic numbers (squarefree defining polynomial plus a
//! rational isolating interval), certified complex root disks, and the
//! modulus classification used by the Salem and dynamics modules.
//!
//! Nothing here trusts floating point: f64 is used only to propose
//! approximations, which are then certified with exact rational arithmetic
//! (Sturm counts, sign evaluations, and the inclusion bound
//! min_i |z - alpha_i| <= n |P(z)/P'(z)|).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::exact::{
    isolate_real_roots, resultant_y, sturm_count, IntPolynomial, RatPolynomial,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraicError {
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
    #[error("certification failed at maximum precision")]
    Indeterminate,
}

fn two() -> BigRational {
    BigRational::from_integer(2.into())
}

fn half(x: &BigRational) -> BigRational {
    x / two()
}

/// Extra precision for rational square-root bounds: the error is at most
/// 1/(denom * 2^SQRT_BITS), so the bounds tighten automatically as the
/// denominators of certified root approximations grow.
const SQRT_BITS: u32 = 64;

/// Rational lower bound for sqrt(q), q >= 0, error < 2^-SQRT_BITS.
pub fn sqrt_lower(q: &BigRational) -> BigRational {
    assert!(!q.is_negative());
    let (n, d) = (q.numer(), q.denom());
    let scale = BigInt::one() << SQRT_BITS;
    // sqrt(n/d) = sqrt(n*d*4^k)/(d*2^k) >= floor(...)/(d*2^k)
    let s = (n * d * (&scale * &scale)).sqrt();
    BigRational::new(s, d * scale)
}

/// Rational upper bound for sqrt(q), q >= 0, error < 2^-SQRT_BITS.
pub fn sqrt_upper(q: &BigRational) -> BigRational {
    assert!(!q.is_negative());
    if q.is_zero() {
        return BigRational::zero();
    }
    let (n, d) = (q.numer(), q.denom());
    let scale = BigInt::one() << SQRT_BITS;
    let s = (n * d * (&scale * &scale)).sqrt() + BigInt::one();
    BigRational::new(s, d * scale)
}

/// Round to the grid with denominator 2^bits.
fn round_to_bits(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let v = (x * BigRational::from(scale.clone())).round().to_integer();
    BigRational::new(v, scale)
}

/// A real algebraic number: the unique root of `poly` (squarefree, primitive,
/// positive leading coefficient) in the open interval (lo, hi), where the
/// endpoints are not roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealAlgebraic {
    poly: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
}

impl RealAlgebraic {
    pub fn new(
        poly: IntPolynomial,
        lo: BigRational,
        hi: BigRational,
    ) -> Result<Self, AlgebraicError> {
        let p = poly.squarefree_part();
        if p != poly.primitive_part() {
            return Err(AlgebraicError::NotSquarefree);
        }
        let p = poly.primitive_part();
        match sturm_count(&p, &lo, &hi) {
            Ok(1) => Ok(RealAlgebraic { poly: p, lo, hi }),
            _ => Err(AlgebraicError::NotIsolating),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        let poly = RatPolynomial::new(vec![-q.clone(), BigRational::one()])
            .clear_denominators()
            .primitive_part();
        RealAlgebraic {
            poly,
            lo: &q - BigRational::one(),
            hi: &q + BigRational::one(),
        }
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// One bisection step.
    pub fn refine(&mut self) {
        let mid = half(&(&self.lo + &self.hi));
        if self.poly.eval_rat(&mid).is_zero() {
            // The root is exactly mid; shrink symmetrically around it.
            let w = half(&half(&self.width()));
            self.lo = &mid - &w;
            self.hi = mid + w;
            return;
        }
        let slo = self.poly.eval_rat(&self.lo).is_positive();
        let smid = self.poly.eval_rat(&mid).is_positive();
        if slo == smid {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to_width(&mut self, w: &BigRational) {
        while &self.width() > w {
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut s = self.clone();
        let eps = BigRational::new(BigInt::one(), BigInt::one() << 80);
        s.refine_to_width(&eps);
        half(&(&s.lo + &s.hi)).to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` fractional digits, certified.
    pub fn to_decimal(&self, digits: u32) -> String {
        let mut s = self.clone();
        let scale = BigInt::from(10u32).pow(digits + 2);
        let eps = BigRational::new(BigInt::one(), scale.clone());
        s.refine_to_width(&eps);
        let mid = half(&(&s.lo + &s.hi));
        let scaled = (&mid * BigRational::from(BigInt::from(10u32).pow(digits)))
            .round()
            .to_integer();
        let neg = scaled.is_negative();
        let a = scaled.abs();
        let ten = BigInt::from(10u32).pow(digits);
        let int_part = &a / &ten;
        let frac = &a % &ten;
        let mut fs = frac.to_string();
        while (fs.len() as u32) < digits {
            fs.insert(0, '0');
        }
        format!("{}{}.{}", if neg { "-" } else { "" }, int_part, fs)
    }

    /// Comparison against a rational, exact.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        if self.poly.eval_rat(q).is_zero() && q > &self.lo && q < &self.hi {
            return Ordering::Equal;
        }
        let mut s = self.clone();
        loop {
            if q <= &s.lo {
                return Ordering::Greater;
            }
            if q >= &s.hi {
                return Ordering::Less;
            }
            s.refine();
        }
    }

    /// Exact equality as real numbers (possibly across different defining
    /// polynomials).
    pub fn equals(&self, other: &Self) -> bool {
        let g = self.poly.gcd(&other.poly);
        if g.degree().map_or(true, |d| d == 0) {
            return false;
        }
        // Any root of g inside this isolating interval IS this number, and
        // likewise for other; so they are equal iff g has a root in the
        // intersection.
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            let lo = a.lo.clone().max(b.lo.clone());
            let hi = a.hi.clone().min(b.hi.clone());
            if lo >= hi {
                return false;
            }
            if !g.eval_rat(&lo).is_zero() && !g.eval_rat(&hi).is_zero() {
                if let Ok(n) = sturm_count(&g, &lo, &hi) {
                    if n >= 1 {
                        return true;
                    }
                }
            }
            a.refine();
            b.refine();
            let lo2 = a.lo.clone().max(b.lo.clone());
            let hi2 = a.hi.clone().min(b.hi.clone());
            if lo2 >= hi2 {
                return false;
            }
        }
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        if self.equals(other) {
            return Ordering::Equal;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.refine();
            b.refine();
        }
    }

    /// The algebraic number 1/x (requires 0 outside the isolating interval).
    pub fn reciprocal(&self) -> RealAlgebraic {
        let mut s = self.clone();
        let zero = BigRational::zero();
        while s.lo <= zero && zero <= s.hi {
            if s.poly.coeff(0).is_zero() {
                panic!("reciprocal of zero");
            }
            s.refine();
        }
        let poly = s.poly.reverse().primitive_part();
        let (lo, hi) = (
            BigRational::one() / s.hi.clone(),
            BigRational::one() / s.lo.clone(),
        );
        let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
        RealAlgebraic { poly, lo, hi }
    }

    /// True iff self * other = 1 exactly.
    pub fn is_reciprocal_of(&self, other: &Self) -> bool {
        // Quick interval filter before the exact test.
        let prod_lo = &self.lo * &other.lo;
        let prod_hi = &self.hi * &other.hi;
        let one = BigRational::one();
        if self.lo.is_positive() && other.lo.is_positive() && (prod_hi < one || prod_lo > one) {
            return false;
        }
        self.equals(&other.reciprocal())
    }
}

/// A disk in the complex plane certified to contain exactly one root.
#[derive(Clone, Debug)]
pub struct RootDisk {
    pub re: BigRational,
    pub im: BigRational,
    pub radius: BigRational,
}

impl RootDisk {
    /// Certified interval containing |root|^2.
    pub fn modulus_sq_interval(&self) -> (BigRational, BigRational) {
        let c2 = &self.re * &self.re + &self.im * &self.im;
        let clo = sqrt_lower(&c2);
        let chi = sqrt_upper(&c2);
        let lo = &clo - &self.radius;
        let lo = if lo.is_negative() {
            BigRational::zero()
        } else {
            lo
        };
        let hi = chi + &self.radius;
        (&lo * &lo, &hi * &hi)
    }

    pub fn certainly_nonreal(&self) -> bool {
        self.im.abs() > self.radius
    }
}

#[derive(Clone, Debug)]
struct Qc {
    re: BigRational,
    im: BigRational,
}

impl Qc {
    fn from_f64(z: (f64, f64)) -> Option<Qc> {
        Some(Qc {
            re: BigRational::from_float(z.0)?,
            im: BigRational::from_float(z.1)?,
        })
    }

    fn sub(&self, o: &Qc) -> Qc {
        Qc {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Qc) -> Qc {
        Qc {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn abs2(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    fn div(&self, o: &Qc) -> Qc {
        let d = o.abs2();
        let conj = Qc {
            re: o.re.clone(),
            im: -o.im.clone(),
        };
        let n = self.mul(&conj);
        Qc {
            re: n.re / &d,
            im: n.im / d,
        }
    }

    fn round(&self, bits: u32) -> Qc {
        Qc {
            re: round_to_bits(&self.re, bits),
            im: round_to_bits(&self.im, bits),
        }
    }
}

fn eval_qc(p: &IntPolynomial, z: &Qc) -> Qc {
    let mut acc = Qc {
        re: BigRational::zero(),
        im: BigRational::zero(),
    };
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.re += BigRational::from(c.clone());
    }
    acc
}

/// Aberth-Ehrlich iteration in f64 to propose root approximations.
fn aberth_f64(p: &IntPolynomial) -> Vec<(f64, f64)> {
    let n = p.deg();
    let dp = p.derivative();
    let bound = p.cauchy_root_bound().to_f64().unwrap_or(2.0);
    let mut zs: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.354) / n as f64;
            let r = bound * (0.4 + 0.5 * ((k % 3) as f64 + 1.0) / 3.0);
            (r * theta.cos(), r * theta.sin())
        })
        .collect();
    let cadd = |a: (f64, f64), b: (f64, f64)| (a.0 + b.0, a.1 + b.1);
    let csub = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0, a.1 - b.1);
    let cmul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let cdiv = |a: (f64, f64), b: (f64, f64)| {
        let d = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
    };
    let evalc = |q: &IntPolynomial, z: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for c in q.coeffs().iter().rev() {
            acc = cmul(acc, z);
            acc.0 += c.to_f64().unwrap_or(0.0);
        }
        acc
    };
    for _ in 0..300 {
        let mut done = true;
        let old = zs.clone();
        for i in 0..n {
            let z = old[i];
            let pv = evalc(p, z);
            let dv = evalc(&dp, z);
            if pv.0 == 0.0 && pv.1 == 0.0 {
                continue;
            }
            let newton = cdiv(pv, dv);
            let mut s = (0.0, 0.0);
            for (j, w) in old.iter().enumerate() {
                if j != i {
                    s = cadd(s, cdiv((1.0, 0.0), csub(z, *w)));
                }
            }
            let denom = csub((1.0, 0.0), cmul(newton, s));
            let delta = cdiv(newton, denom);
            zs[i] = csub(z, delta);
            if delta.0.abs() + delta.1.abs() > 1e-14 * (1.0 + z.0.abs() + z.1.abs()) {
                done = false;
            }
        }
        if done {
            break;
        }
    }
    zs
}

/// Certified complex roots of a squarefree polynomial: one disk per root,
/// pairwise disjoint, radii at most `2^-min_bits` (best effort; disjointness
/// is the hard guarantee).
pub fn certified_complex_roots(
    p: &IntPolynomial,
    min_bits: u32,
) -> Result<Vec<RootDisk>, AlgebraicError> {
    let p = p.primitive_part();
    if !p.is_squarefree() {
        return Err(AlgebraicError::NotSquarefree);
    }
    let n = p.deg();
    if n == 0 {
        return Ok(vec![]);
    }
    let dp = p.derivative();
    let n_rat = BigRational::from(BigInt::from(n));
    let approx = aberth_f64(&p);
    let mut centers: Vec<Qc> = approx
        .into_iter()
        .map(|z| Qc::from_f64(z).ok_or(AlgebraicError::Indeterminate))
        .collect::<Result<_, _>>()?;

    let mut bits = 64u32.max(min_bits);
    for _round in 0..12 {
        // Newton refinement in exact rational arithmetic, rounded to a grid.
        for z in centers.iter_mut() {
            for _ in 0..4 {
                let pv = eval_qc(&p, z);
                if pv.re.is_zero() && pv.im.is_zero() {
                    break;
                }
                let dv = eval_qc(&dp, z);
                if dv.re.is_zero() && dv.im.is_zero() {
                    break;
                }
                let step = pv.div(&dv);
                *z = z.sub(&step).round(bits + 8);
            }
        }
        // Inclusion radii: r_i = n |P(z_i)| / |P'(z_i)| (upper bound).
        let mut disks: Vec<RootDisk> = vec![];
        let mut ok = true;
        for z in &centers {
            let pv = eval_qc(&p, z);
            let dv = eval_qc(&dp, z);
            if dv.re.is_zero() && dv.im.is_zero() {
                ok = false;
                break;
            }
            let r2 = &n_rat * &n_rat * pv.abs2() / dv.abs2();
            let r = sqrt_upper(&r2);
            disks.push(RootDisk {
                re: z.re.clone(),
                im: z.im.clone(),
                radius: r,
            });
        }
        if ok {
            // Pairwise disjoint => each disk holds exactly one of the n roots.
            let mut disjoint = true;
            'pairs: for i in 0..disks.len() {
                for j in i + 1..disks.len() {
                    let d2 = Qc {
                        re: &disks[i].re - &disks[j].re,
                        im: &disks[i].im - &disks[j].im,
                    }
                    .abs2();
                    let rsum = &disks[i].radius + &disks[j].radius;
                    if d2 <= &rsum * &rsum {
                        disjoint = false;
                        break 'pairs;
                    }
                }
            }
            let target = BigRational::new(BigInt::one(), BigInt::one() << min_bits);
            let small = disks.iter().all(|d| d.radius <= target);
            if disjoint && small {
                return Ok(disks);
            }
        }
        bits *= 2;
    }
    Err(AlgebraicError::Indeterminate)
}

/// Certified modulus of a polynomial root. Off-circle moduli are stored via
/// their SQUARE as a real algebraic number (squares compare exactly like the
/// moduli themselves and avoid square roots).
#[derive(Clone, Debug)]
pub enum Modulus {
    Zero,
    One,
    /// The square of the modulus: a certified real algebraic number > 0, != 1.
    Sq(RealAlgebraic),
}

impl Modulus {
    pub fn cmp_one(&self) -> Ordering {
        match self {
            Modulus::Zero => Ordering::Less,
            Modulus::One => Ordering::Equal,
            Modulus::Sq(a) => a.cmp_rational(&BigRational::one()),
        }
    }

    /// f64 value of the modulus itself (not its square).
    pub fn to_f64(&self) -> f64 {
        match self {
            Modulus::Zero => 0.0,
            Modulus::One => 1.0,
            Modulus::Sq(a) => a.to_f64().sqrt(),
        }
    }

    pub fn equals(&self, other: &Modulus) -> bool {
        match (self, other) {
            (Modulus::Zero, Modulus::Zero) | (Modulus::One, Modulus::One) => true,
            (Modulus::Sq(a), Modulus::Sq(b)) => a.equals(b),
            _ => false,
        }
    }

    pub fn compare(&self, other: &Modulus) -> Ordering {
        match (self, other) {
            (Modulus::Zero, Modulus::Zero) => Ordering::Equal,
            (Modulus::Zero, _) => Ordering::Less,
            (_, Modulus::Zero) => Ordering::Greater,
            (Modulus::One, Modulus::One) => Ordering::Equal,
            (Modulus::One, b) => b.cmp_one().reverse(),
            (a, Modulus::One) => a.cmp_one(),
            (Modulus::Sq(a), Modulus::Sq(b)) => a.compare(b),
        }
    }
}

/// Composed-product polynomial: roots are all pairwise products
/// alpha_i * alpha_j (ordered pairs) of the roots of P.
/// Res_y(P(y), y^n P(x/y)).
pub fn pairwise_product_poly(p: &IntPolynomial) -> IntPolynomial {
    let n = p.deg();
    let a = p.to_rat();
    // B(x, y) = y^n P(x/y) = sum_i c_i x^i y^(n-i); as y-coefficients:
    // coefficient of y^k is c_{n-k} x^{n-k}.
    let mut b: Vec<RatPolynomial> = vec![];
    for k in 0..=n {
        let i = n - k;
        let mut coeffs = vec![BigRational::zero(); i + 1];
        coeffs[i] = BigRational::from(p.coeff(i));
        b.push(RatPolynomial::new(coeffs));
    }
    resultant_y(&a, &b).clear_denominators().primitive_part()
}

pub struct ModuliClassification {
    pub moduli: Vec<Modulus>,
    pub real_root_count: usize,
    pub certified: bool,
}

/// Certified moduli of all roots of a squarefree polynomial.
///
/// Circle roots are detected algebraically: a root of modulus one must be a
/// root of gcd(P, reverse(P)), and the conjugate circle pairs of that factor
/// are counted exactly as the real roots of its trace polynomial in (-2, 2).
/// No floating-point threshold is involved anywhere.
pub fn root_moduli(p: &IntPolynomial) -> Result<ModuliClassification, AlgebraicError> {
    let mut p = p.primitive_part();
    if p.is_zero() {
        return Err(AlgebraicError::NotIsolating);
    }
    if !p.is_squarefree() {
        return Err(AlgebraicError::NotSquarefree);
    }
    let mut moduli: Vec<Modulus> = vec![];
    // Root at zero (at most one since squarefree).
    if p.coeff(0).is_zero() {
        moduli.push(Modulus::Zero);
        let mut c = p.coeffs().to_vec();
        c.remove(0);
        p = IntPolynomial::new(c);
    }
    if p.deg() == 0 {
        return Ok(ModuliClassification {
            real_root_count: moduli.len(),
            moduli,
            certified: true,
        });
    }

    let one = BigInt::one();
    let mone = -BigInt::one();
    let root_at_1 = p.eval_int(&one).is_zero();
    let root_at_m1 = p.eval_int(&mone).is_zero();

    // Count complex circle pairs via the reciprocal factor's trace polynomial.
    let mut g = p.gcd(&p.reverse());
    for (v, is_root) in [(BigInt::one(), root_at_1), (-BigInt::one(), root_at_m1)] {
        if is_root && g.eval_int(&v).is_zero() {
            let lin = IntPolynomial::new(vec![-v, BigInt::one()]);
            g = g.div_exact(&lin);
        }
    }
    let circle_pairs = if g.degree().map_or(true, |d| d == 0) {
        0
    } else {
        let t = trace_poly_of_reciprocal(&g);
        sturm_count(&t, &BigRational::from_integer((-2).into()), &two())
            .map_err(|_| AlgebraicError::Indeterminate)?
    };

    // Real roots: exact isolation.
    let real_intervals = isolate_real_roots(&p).map_err(|_| AlgebraicError::Indeterminate)?;
    let real_count = real_intervals.len() + moduli.len(); // zero root is real
    let s_poly = p.root_square_poly().squarefree_part();
    for (lo, hi) in &real_intervals {
        let mut root = RealAlgebraic {
            poly: p.clone(),
            lo: lo.clone(),
            hi: hi.clone(),
        };
        match root.cmp_rational(&BigRational::one()) {
            Ordering::Equal => {
                moduli.push(Modulus::One);
                continue;
            }
            _ => {}
        }
        if root.cmp_rational(&(-BigRational::one())) == Ordering::Equal {
            moduli.push(Modulus::One);
            continue;
        }
        // modulus^2 is a root of s_poly; refine until the squared interval
        // isolates it there.
        loop {
            let zero = BigRational::zero();
            if root.lo > zero || root.hi < zero {
                let a2 = &root.lo * &root.lo;
                let b2 = &root.hi * &root.hi;
                let (slo, shi) = if a2 < b2 { (a2, b2) } else { (b2, a2) };
                if !s_poly.eval_rat(&slo).is_zero() && !s_poly.eval_rat(&shi).is_zero() {
                    if let Ok(1) = sturm_count(&s_poly, &slo, &shi) {
                        moduli.push(Modulus::Sq(RealAlgebraic {
                            poly: s_poly.clone(),
                            lo: slo,
                            hi: shi,
                        }));
                        break;
                    }
                }
            }
            root.refine();
        }
    }

    // Complex roots: certified disks, upper half-plane representatives.
    let n_complex_pairs = (p.deg() - real_intervals.len()) / 2;
    if n_complex_pairs > 0 {
        let mut disks = certified_complex_roots(&p, 64)?;
        // Keep only certainly-nonreal upper-half-plane disks; refine if unclear.
        let mut upper: Vec<RootDisk> = disks
            .drain(..)
            .filter(|d| d.certainly_nonreal() && d.im.is_positive())
            .collect();
        if upper.len() != n_complex_pairs {
            // Retry at higher precision once.
            let disks = certified_complex_roots(&p, 256)?;
            upper = disks
                .into_iter()
                .filter(|d| d.certainly_nonreal() && d.im.is_positive())
                .collect();
            if upper.len() != n_complex_pairs {
                return Err(AlgebraicError::Indeterminate);
            }
        }
        // Separate off-circle pairs from circle pairs: refine until exactly
        // `circle_pairs` disks remain with modulus interval straddling 1.
        let cp_poly = pairwise_product_poly(&p).squarefree_part();
        let mut resolved: Vec<(usize, Option<(BigRational, BigRational)>)> = vec![];
        let mut pending: Vec<usize> = (0..upper.len()).collect();
        let mut precision = 64u32;
        while pending.len() > circle_pairs {
            let mut still = vec![];
            for &i in &pending {
                let (mlo, mhi) = upper[i].modulus_sq_interval();
                let one_r = BigRational::one();
                if mhi < one_r || mlo > one_r {
                    resolved.push((i, Some((mlo, mhi))));
                } else {
                    still.push(i);
                }
            }
            if still.len() == circle_pairs {
                pending = still;
                break;
            }
            precision *= 2;
            if precision > 1 << 14 {
                return Err(AlgebraicError::Indeterminate);
            }
            let new_disks = certified_complex_roots(&p, precision)?;
            upper = new_disks
                .into_iter()
                .filter(|d| d.certainly_nonreal() && d.im.is_positive())
                .collect();
            if upper.len() != n_complex_pairs {
                return Err(AlgebraicError::Indeterminate);
            }
            resolved.clear();
            pending = (0..upper.len()).collect();
        }
        // Remaining pending disks are the circle pairs.
        for _ in 0..pending.len() {
            moduli.push(Modulus::One);
            moduli.push(Modulus::One);
        }
        for (i, interval) in resolved {
            let (mut mlo, mut mhi) = interval.unwrap();
            // Isolate |root|^2 among the roots of the pairwise-product poly.
            let mut local_bits = precision.max(64);
            loop {
                if !cp_poly.eval_rat(&mlo).is_zero() && !cp_poly.eval_rat(&mhi).is_zero() {
                    if let Ok(1) = sturm_count(&cp_poly, &mlo, &mhi) {
                        let alg = RealAlgebraic {
                            poly: cp_poly.clone(),
                            lo: mlo,
                            hi: mhi,
                        };
                        moduli.push(Modulus::Sq(alg.clone()));
                        moduli.push(Modulus::Sq(alg));
                        break;
                    }
                }
                local_bits *= 2;
                if local_bits > 1 << 15 {
                    return Err(AlgebraicError::Indeterminate);
                }
                let nd = certified_complex_roots(&p, local_bits)?;
                // Find the disk nearest the old center.
                let target = (&upper[i].re, &upper[i].im);
                let best = nd
                    .into_iter()
                    .filter(|d| d.im.is_positive())
                    .min_by(|a, b| {
                        let da = (&a.re - target.0) * (&a.re - target.0)
                            + (&a.im - target.1) * (&a.im - target.1);
                        let db = (&b.re - target.0) * (&b.re - target.0)
                            + (&b.im - target.1) * (&b.im - target.1);
                        da.cmp(&db)
                    })
                    .ok_or(AlgebraicError::Indeterminate)?;
                let (a, b) = best.modulus_sq_interval();
                mlo = a;
                mhi = b;
            }
        }
    }

    Ok(ModuliClassification {
        moduli,
        real_root_count: real_count,
        certified: true,
    })
}

/// Trace polynomial of a palindromic polynomial of even degree 2m: the monic
/// degree-m polynomial whose roots are x + 1/x over the roots x.
pub fn trace_poly_of_reciprocal(p: &IntPolynomial) -> IntPolynomial {
    assert!(p.is_self_reciprocal(), "trace polynomial needs a palindromic input");
    let n = p.deg();
    assert!(n % 2 == 0, "trace polynomial needs even degree");
    let m = n / 2;
    // Chebyshev-like basis: v_k(y) = x^k + x^-k as a polynomial in y = x + 1/x.
    // v_0 = 2, v_1 = y, v_{k+1} = y v_k - v_{k-1}.
    let mut v: Vec<IntPolynomial> = vec![
        IntPolynomial::from_i64(&[2]),
        IntPolynomial::from_i64(&[0, 1]),
    ];
    for k in 2..=m {
        let y = IntPolynomial::from_i64(&[0, 1]);
        let next = y.mul(&v[k - 1]).sub(&v[k - 2]);
        v.push(next);
    }
    // P(x)/x^m = c_m + sum_{k=1}^{m} c_{m+k} (x^k + x^-k)   (palindromic)
    let mut t = IntPolynomial::constant(p.coeff(m));
    for k in 1..=m {
        t = t.add(&v[k].scale(&p.coeff(m + k)));
    }
    // Monic up to the leading coefficient of P (v_m is monic in y).
    t
}
