//! Eigenvalue spectra of endomorphisms of simple abelian varieties,
//! dynamical degree sequences with exact comparisons, entropy, Lefschetz
//! fixed-point counts, root-of-unity detection, and the diagram classifier
//! for dimensions 1 through 4.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::algebraic::{root_moduli, Modulus, RealAlgebraic};
use crate::exact::IntPolynomial;
use crate::salem::SalemError;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DynError {
    #[error("inconsistent endomorphism descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("1 is an analytic eigenvalue; the fixed locus is infinite")]
    InfiniteFixedLocus,
    #[error("moduli pattern matches no encoded diagram")]
    Unclassified,
    #[error("exact comparison of degree products could not be resolved")]
    Unresolved,
    #[error("spectrum contains a zero eigenvalue")]
    ZeroEigenvalue,
    #[error("salem error: {0}")]
    Salem(#[from] SalemError),
}

/// Endomorphism data determining the analytic eigenvalue multiset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EndoDescriptor {
    /// B = End(X) ⊗ Q is a field of degree e; f has minimal polynomial of
    /// degree l with l * m = e.
    Field {
        min_poly: IntPolynomial,
        m: u32,
        e: u32,
        g: u32,
    },
    /// B is a quaternion algebra with center of degree e; the half-trace
    /// elements t1, t2 have the given minimal polynomials of degree l with
    /// l * m = 2e.
    Quaternion {
        t1_min_poly: IntPolynomial,
        t2_min_poly: IntPolynomial,
        m: u32,
        e: u32,
        g: u32,
    },
}

/// The 2g analytic eigenvalues (with conjugates) of an endomorphism,
/// carried as minimal-polynomial components with multiplicities plus the
/// certified moduli multiset.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub g: usize,
    /// (polynomial, multiplicity): the eigenvalues are the roots of each
    /// polynomial, each counted `multiplicity` times.
    pub components: Vec<(IntPolynomial, u32)>,
    /// All 2g moduli, sorted descending.
    moduli: Vec<Modulus>,
    /// Number of moduli equal to 1 / greater than 1.
    n_on: usize,
    n_outside: usize,
}

impl Spectrum {
    pub fn from_components(
        g: usize,
        components: Vec<(IntPolynomial, u32)>,
    ) -> Result<Spectrum, DynError> {
        let mut total = 0usize;
        for (p, mult) in &components {
            if p.is_zero() || *mult == 0 {
                return Err(DynError::InvalidDescriptor(
                    "zero polynomial or multiplicity in spectrum".into(),
                ));
            }
            if p.coeff(0).is_zero() {
                return Err(DynError::ZeroEigenvalue);
            }
            total += p.deg() * *mult as usize;
        }
        if total != 2 * g {
            return Err(DynError::InvalidDescriptor(format!(
                "eigenvalue count {total} != 2g = {}",
                2 * g
            )));
        }
        let mut moduli = vec![];
        for (p, mult) in &components {
            let c = root_moduli(p).map_err(SalemError::from)?;
            for _ in 0..*mult {
                moduli.extend(c.moduli.iter().cloned());
            }
        }
        moduli.sort_by(|a, b| b.compare(a));
        let n_on = moduli.iter().filter(|m| m.cmp_one() == Ordering::Equal).count();
        let n_outside = moduli
            .iter()
            .filter(|m| m.cmp_one() == Ordering::Greater)
            .count();
        Ok(Spectrum {
            g,
            components,
            moduli,
            n_on,
            n_outside,
        })
    }

    pub fn moduli(&self) -> &[Modulus] {
        &self.moduli
    }

    pub fn n_on_circle(&self) -> usize {
        self.n_on
    }

    pub fn n_outside(&self) -> usize {
        self.n_outside
    }

    /// lambda_k as f64: product of the 2k largest moduli.
    pub fn lambda_f64(&self, k: usize) -> f64 {
        self.moduli.iter().take(2 * k).map(|m| m.to_f64()).product()
    }

    /// Exact comparison of lambda_a^pa against lambda_b^pb.
    pub fn compare_lambda_powers(
        &self,
        a: usize,
        pa: i64,
        b: usize,
        pb: i64,
    ) -> Result<Ordering, DynError> {
        // Work with modulus squares: lambda^2p = prod of squares^p, and
        // comparing squares of positive reals preserves the order.
        let mut terms: Vec<(RealAlgebraic, i64)> = vec![];
        let mut push = |m: &Modulus, e: i64| -> Result<(), DynError> {
            match m {
                Modulus::Zero => Err(DynError::ZeroEigenvalue),
                Modulus::One => Ok(()),
                Modulus::Sq(r) => {
                    terms.push((r.clone(), e));
                    Ok(())
                }
            }
        };
        for m in self.moduli.iter().take(2 * a) {
            push(m, pa)?;
        }
        for m in self.moduli.iter().take(2 * b) {
            push(m, -pb)?;
        }
        compare_product_to_one(terms, &self.unit_relation())
    }

    /// Exponent terms of the full-spectrum product of modulus squares; the
    /// product equals det^2 and is exactly 1 when every component is monic
    /// with unit constant term (automorphism case). Returns None otherwise.
    fn unit_relation(&self) -> Option<Vec<(RealAlgebraic, i64)>> {
        let mut det = BigInt::one();
        for (p, mult) in &self.components {
            if !p.is_monic() {
                return None;
            }
            for _ in 0..*mult {
                det *= p.coeff(0);
            }
        }
        if !det.abs().is_one() {
            return None;
        }
        let mut terms = vec![];
        for m in &self.moduli {
            if let Modulus::Sq(r) = m {
                terms.push((r.clone(), 1i64));
            }
        }
        Some(terms)
    }
}

/// Canonical basis for exact product comparisons: reciprocal pairs share a
/// representative (the reciprocal partner carries negated exponents).
struct ProductBasis {
    reps: Vec<RealAlgebraic>,
}

impl ProductBasis {
    fn new() -> Self {
        ProductBasis { reps: vec![] }
    }

    /// Exponent vector of prod terms_i^(e_i) over the (growing) basis.
    fn exponent_vector(&mut self, terms: &[(RealAlgebraic, i64)]) -> Vec<i64> {
        let mut v = vec![0i64; self.reps.len()];
        for (r, e) in terms {
            if r.cmp_rational(&BigRational::one()) == Ordering::Equal {
                continue;
            }
            let mut found = None;
            for (i, rep) in self.reps.iter().enumerate() {
                if rep.equals(r) {
                    found = Some((i, *e));
                    break;
                }
                if rep.is_reciprocal_of(r) {
                    found = Some((i, -*e));
                    break;
                }
            }
            match found {
                Some((i, signed)) => v[i] += signed,
                None => {
                    self.reps.push(r.clone());
                    v.push(*e);
                }
            }
        }
        v
    }
}

/// Exact sign of prod terms^e - 1 for positive real algebraic terms.
///
/// Strategy: cancel equal and reciprocal factors via a shared basis; if the
/// exponent vector vanishes the product is 1; if it is an integer multiple
/// of the unit-group relation (full-spectrum product = 1) the product is 1;
/// otherwise separate from 1 by interval refinement.
fn compare_product_to_one(
    terms: Vec<(RealAlgebraic, i64)>,
    relation: &Option<Vec<(RealAlgebraic, i64)>>,
) -> Result<Ordering, DynError> {
    let mut basis = ProductBasis::new();
    let mut v = basis.exponent_vector(&terms);
    let rel = relation.as_ref().map(|r| basis.exponent_vector(r));
    v.resize(basis.reps.len(), 0);
    if v.iter().all(|&e| e == 0) {
        return Ok(Ordering::Equal);
    }
    if let Some(mut r) = rel {
        r.resize(basis.reps.len(), 0);
        if r.iter().any(|&e| e != 0) {
            for k in -4i64..=4 {
                if k == 0 {
                    continue;
                }
                if v.iter().zip(r.iter()).all(|(&ve, &re)| ve == k * re) {
                    return Ok(Ordering::Equal);
                }
            }
        }
    }
    // Interval separation.
    let mut reps: Vec<RealAlgebraic> = basis.reps;
    for _ in 0..200 {
        let mut lo = BigRational::one();
        let mut hi = BigRational::one();
        let mut ok = true;
        for (rep, &e) in reps.iter().zip(v.iter()) {
            if e == 0 {
                continue;
            }
            let (rlo, rhi) = (rep.lo().clone(), rep.hi().clone());
            if !rlo.is_positive() {
                ok = false;
                break;
            }
            let (flo, fhi) = if e > 0 { (rlo, rhi) } else { (rhi.recip(), rlo.recip()) };
            for _ in 0..e.unsigned_abs() {
                lo *= &flo;
                hi *= &fhi;
            }
        }
        if ok {
            let one = BigRational::one();
            if lo > one {
                return Ok(Ordering::Greater);
            }
            if hi < one {
                return Ok(Ordering::Less);
            }
        }
        for rep in reps.iter_mut() {
            rep.refine();
        }
    }
    Err(DynError::Unresolved)
}

/// Spectrum of a field-type endomorphism (each root of the minimal
/// polynomial with multiplicity m * 2g / e).
pub fn spectrum_from_field_endo(d: &EndoDescriptor) -> Result<Spectrum, DynError> {
    let EndoDescriptor::Field { min_poly, m, e, g } = d else {
        return Err(DynError::InvalidDescriptor("expected field kind".into()));
    };
    let l = min_poly.deg() as u32;
    if l * m != *e {
        return Err(DynError::InvalidDescriptor(format!(
            "l*m = {} != e = {e}",
            l * m
        )));
    }
    if 2 * g % e != 0 {
        return Err(DynError::InvalidDescriptor(format!("e = {e} does not divide 2g")));
    }
    let mult = m * (2 * g / e);
    Spectrum::from_components(*g as usize, vec![(min_poly.clone(), mult)])
}

/// Spectrum of a quaternion-type endomorphism: each root of the minimal
/// polynomial of t1 and of t2 with multiplicity m * g / (2e); coinciding
/// minimal polynomials merge with doubled multiplicity.
pub fn spectrum_from_quaternion_endo(d: &EndoDescriptor) -> Result<Spectrum, DynError> {
    let EndoDescriptor::Quaternion {
        t1_min_poly,
        t2_min_poly,
        m,
        e,
        g,
    } = d
    else {
        return Err(DynError::InvalidDescriptor("expected quaternion kind".into()));
    };
    let l = t1_min_poly.deg() as u32;
    if t2_min_poly.deg() as u32 != l {
        return Err(DynError::InvalidDescriptor(
            "t1 and t2 must have minimal polynomials of equal degree".into(),
        ));
    }
    if l * m != 2 * e {
        return Err(DynError::InvalidDescriptor(format!(
            "l*m = {} != 2e = {}",
            l * m,
            2 * e
        )));
    }
    if (m * g) % (2 * e) != 0 {
        return Err(DynError::InvalidDescriptor(format!(
            "multiplicity m*g/(2e) is not an integer for m={m}, g={g}, e={e}"
        )));
    }
    let mult = m * g / (2 * e);
    let components = if t1_min_poly == t2_min_poly {
        vec![(t1_min_poly.clone(), 2 * mult)]
    } else {
        vec![(t1_min_poly.clone(), mult), (t2_min_poly.clone(), mult)]
    };
    Spectrum::from_components(*g as usize, components)
}

/// The dynamical degree sequence with entropy and hyperbolicity flags.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DynamicalProfile {
    pub g: usize,
    /// lambda_0 .. lambda_g as f64 (exact values live in the spectrum).
    pub lambdas: Vec<f64>,
    pub entropy: f64,
    pub hyperbolic: bool,
    /// Strictly unimodal sequence lambda_1 < ... < lambda_k > ... > lambda_g.
    pub cohomologically_hyperbolic: bool,
    /// Exact adjacent comparisons sign(lambda_k - lambda_{k+1}), k = 0..g-1.
    pub adjacent: Vec<i8>,
}

pub fn dynamical_degrees(s: &Spectrum) -> Result<DynamicalProfile, DynError> {
    let g = s.g;
    let lambdas: Vec<f64> = (0..=g).map(|k| s.lambda_f64(k)).collect();
    let adjacent: Vec<i8> = (0..g)
        .map(|k| s.compare_lambda_powers(k, 1, k + 1, 1).map(|o| o as i8))
        .collect::<Result<_, _>>()?;
    let hyperbolic = s.n_on == 0;
    // Strict unimodality: ascending then descending with no plateau.
    let mut cohom = true;
    let mut seen_descent = false;
    for &sgn in &adjacent {
        match sgn {
            -1 => {
                if seen_descent {
                    cohom = false;
                    break;
                }
            }
            1 => seen_descent = true,
            _ => {
                cohom = false;
                break;
            }
        }
    }
    let entropy = lambdas.iter().fold(1.0f64, |a, &b| a.max(b)).ln();
    Ok(DynamicalProfile {
        g,
        lambdas,
        entropy,
        hyperbolic,
        cohomologically_hyperbolic: cohom,
        adjacent,
    })
}

/// Holomorphic Lefschetz count |prod (1 - rho_i)| over all 2g eigenvalues:
/// |prod Q(1)^mult| over the components.
pub fn count_fixed_points(s: &Spectrum) -> Result<BigInt, DynError> {
    let one = BigRational::one();
    let mut acc = BigInt::one();
    for (p, mult) in &s.components {
        let v = p.eval_rat(&one);
        if v.is_zero() {
            return Err(DynError::InfiniteFixedLocus);
        }
        debug_assert!(v.is_integer());
        for _ in 0..*mult {
            acc *= v.numer();
        }
    }
    Ok(acc.abs())
}

/// Prop 4.1 criterion: no analytic eigenvalue on the unit circle.
pub fn hyperbolicity(s: &Spectrum) -> bool {
    s.n_on == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reducibility {
    None,
    EigenvalueOne,
    RootOfUnity(u32),
}

/// n-th cyclotomic polynomial by iterated exact division of x^n - 1.
pub fn cyclotomic(n: u32) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    coeffs[0] = -BigInt::one();
    coeffs[n as usize] = BigInt::one();
    let mut num = IntPolynomial::new(coeffs);
    for d in 1..n {
        if n % d == 0 {
            num = num.div_exact(&cyclotomic(d));
        }
    }
    num
}

fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Exact detection of eigenvalue 1 or roots of unity in the spectrum, by
/// divisibility against cyclotomic polynomials (Kronecker's criterion).
pub fn reducibility_criterion(s: &Spectrum) -> Reducibility {
    for (p, _) in &s.components {
        if p.eval_rat(&BigRational::one()).is_zero() {
            return Reducibility::EigenvalueOne;
        }
    }
    for n in 2..=100u32 {
        let phi = euler_phi(n);
        for (p, _) in &s.components {
            if phi as usize <= p.deg() && p.divisible_by(&cyclotomic(n)) {
                return Reducibility::RootOfUnity(n);
            }
        }
    }
    Reducibility::None
}

/// A diagram assignment: the label from the dimension-1..4 figures plus the
/// defining inequality text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub label: String,
    pub condition: String,
}

fn diagram(label: &str, condition: &str) -> Diagram {
    Diagram {
        label: label.into(),
        condition: condition.into(),
    }
}

/// Classify the spectrum into the diagram taxonomy for g <= 4.
pub fn classify_diagram(s: &Spectrum) -> Result<Diagram, DynError> {
    match s.g {
        1 => {
            if s.n_outside == 0 && s.n_on == 2 {
                Ok(diagram("(1)", "lambda_0 = lambda_1 = 1"))
            } else {
                Err(DynError::Unclassified)
            }
        }
        2 => {
            if s.n_outside == 0 && s.n_on == 4 {
                Ok(diagram("(1)", "lambda_1 = 1"))
            } else if s.n_outside == 2 {
                Ok(diagram("(2)", "lambda_1 > 1, lambda_0 = lambda_2 = 1"))
            } else {
                Err(DynError::Unclassified)
            }
        }
        3 => match s.n_outside {
            0 if s.n_on == 6 => Ok(diagram("(1)", "all lambda_k = 1")),
            4 => Ok(diagram(
                "(2)",
                "two analytic eigenvalues outside the unit circle",
            )),
            2 => Ok(diagram(
                "(3)",
                "one analytic eigenvalue outside the unit circle",
            )),
            _ => Err(DynError::Unclassified),
        },
        4 => classify_dim4(s),
        _ => Err(DynError::Unclassified),
    }
}

fn classify_dim4(s: &Spectrum) -> Result<Diagram, DynError> {
    if s.n_outside == 0 && s.n_on == 8 {
        return Ok(diagram("(1)", "lambda_j = 1 for j = 0..4"));
    }
    let cmp = |a, pa, b, pb| s.compare_lambda_powers(a, pa, b, pb);
    let c12 = cmp(1, 1, 2, 1)?;
    let c23 = cmp(2, 1, 3, 1)?;
    let c13 = cmp(1, 1, 3, 1)?;
    let s12 = cmp(1, 2, 2, 1)?; // lambda_1^2 vs lambda_2
    let s23 = cmp(2, 2, 3, 1)?; // lambda_2^2 vs lambda_3
    let s32 = cmp(2, 1, 3, 2)?; // lambda_2 vs lambda_3^2
    use Ordering::{Equal, Greater, Less};
    if c12 == Equal && c23 == Equal {
        // Salem pattern: one pair off-circle each side, the rest on.
        return Ok(diagram(
            "(12)",
            "lambda_1 = lambda_2 = lambda_3 > 1 (Salem pattern)",
        ));
    }
    if s12 == Equal && s32 == Equal {
        // n_outside > 0 already guarantees lambda_1 > 1 here.
        return Ok(diagram("(2)", "1 < lambda_1^2 = lambda_2 = lambda_3^2"));
    }
    if c12 == Less && c23 == Greater && s12 == Greater && s32 == Less {
        return Ok(match c13 {
            Less => diagram(
                "(3)",
                "lambda_1 < lambda_2 > lambda_3, lambda_1^2 > lambda_2 < lambda_3^2, lambda_1 < lambda_3",
            ),
            Equal => diagram(
                "(4)",
                "lambda_1 < lambda_2 > lambda_3, lambda_1^2 > lambda_2 < lambda_3^2, lambda_1 = lambda_3",
            ),
            Greater => diagram(
                "(5)",
                "lambda_1 < lambda_2 > lambda_3, lambda_1^2 > lambda_2 < lambda_3^2, lambda_1 > lambda_3",
            ),
        });
    }
    if c12 == Less && c23 == Less && s12 == Greater && s23 == Greater {
        return Ok(diagram(
            "(6)",
            "lambda_1 < lambda_2 < lambda_3, lambda_1^2 > lambda_2, lambda_2^2 > lambda_3",
        ));
    }
    if c12 == Greater && c23 == Greater && cmp(1, 1, 2, 2)? == Less && s32 == Less {
        return Ok(diagram(
            "(7)",
            "lambda_1 > lambda_2 > lambda_3, lambda_1 < lambda_2^2, lambda_2 < lambda_3^2",
        ));
    }
    if c12 == Less && c23 == Less && s12 == Equal && s23 == Greater {
        return Ok(diagram(
            "(8)",
            "lambda_1 < lambda_2 < lambda_3, lambda_1^2 = lambda_2, lambda_2^2 > lambda_3",
        ));
    }
    if c12 == Greater && c23 == Greater && cmp(1, 1, 2, 2)? == Less && s32 == Equal {
        return Ok(diagram(
            "(9)",
            "lambda_1 > lambda_2 > lambda_3, lambda_1 < lambda_2^2, lambda_2 = lambda_3^2",
        ));
    }
    if c12 == Less && c23 == Greater && s12 == Equal && s32 == Less && c13 == Less {
        return Ok(diagram(
            "(10)",
            "lambda_1 < lambda_2 > lambda_3, lambda_1^2 = lambda_2 < lambda_3^2, lambda_1 < lambda_3",
        ));
    }
    if c12 == Less && c23 == Greater && s12 == Greater && s32 == Equal && c13 == Greater {
        return Ok(diagram(
            "(11)",
            "lambda_1 < lambda_2 > lambda_3, lambda_1^2 > lambda_2 = lambda_3^2, lambda_1 > lambda_3",
        ));
    }
    Err(DynError::Unclassified)
}

/// One row of the encoded classification tables (dimensions 1-4).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub multiplication: &'static str,
    pub field: &'static str,
    pub degree: &'static str,
    pub diagrams: &'static str,
    pub lambda_property: &'static str,
}

const fn row(
    multiplication: &'static str,
    field: &'static str,
    degree: &'static str,
    diagrams: &'static str,
    lambda_property: &'static str,
) -> TableRow {
    TableRow {
        multiplication,
        field,
        degree,
        diagrams,
        lambda_property,
    }
}

/// The classification table for the given dimension (1..=4).
pub fn classification_table(dim: usize) -> &'static [TableRow] {
    const T1: &[TableRow] = &[
        row("trivial", "Q", "1", "(1)", "1 in Z"),
        row("complex", "CM-field", "2", "(1)", "1 in Z"),
    ];
    const T2: &[TableRow] = &[
        row("trivial", "Q", "1", "(1)", "1 in Z"),
        row("real", "totally real", "2", "(2)", "constructible, Pisot deg. 2, tot. real"),
        row(
            "tot. indef. quaternion",
            "totally real",
            "2",
            "(2)",
            "constructible, Pisot deg. 2, tot. real",
        ),
        row("-", "CM-field", "2", "(1)", "1 in Z"),
        row("complex", "totally real", "2", "(2)", "constructible, Pisot, deg. 2, tot. real"),
        row("-", "CM-field", "2", "(1)", "1 in Z"),
        row(
            "-",
            "CM-field",
            "4",
            "(1), (2)",
            "1 in Z or constructible, Pisot, deg. 2, tot. real",
        ),
    ];
    const T3: &[TableRow] = &[
        row("trivial", "Q", "1", "(1)", "1 in Z"),
        row("real", "totally real", "3", "(2), (3)", "deg. 3, tot. real"),
        row("complex", "totally real", "3", "(2), (3)", "deg. 3, tot. real"),
        row("-", "CM-field", "2", "(1)", "1 in Z"),
        row("-", "CM-field", "6", "(1), (2), (3)", "1 in Z or deg. 3, tot. real"),
    ];
    const T4: &[TableRow] = &[
        row("trivial", "Q", "1", "(1)", "lambda_1(f) = 1"),
        row("real", "totally real", "2", "(2)", "Constructible"),
        row("-", "totally real", "4", "(2) - (7)", "deg. <= 4"),
        row("tot. def. quaternion", "totally real", "2", "(2)", "Constructible"),
        row("-", "CM-field", "2", "(1)", "lambda_1(f) = 1"),
        row("-", "CM-field", "4", "(1), (2)", "Constructible"),
        row("tot. indef. quaternion", "totally real", "2", "(2)", "Constructible"),
        row("-", "totally real", "4", "(2) - (7)", "deg. <= 4"),
        row("-", "CM-field", "2", "(1)", "Constructible"),
        row("-", "CM-field", "4", "(1), (2)", "Constructible"),
        row("-", "real and complex embeddings", "4", "(6) - (12),", "deg. <= 4"),
        row("second kind", "totally real", "2", "(2)", "Constructible"),
        row("-", "CM-field", "2", "(1)", "lambda_1(f) = 1"),
        row("-", "CM-field", "4", "(1), (2)", "Constructible"),
        row("-", "totally real", "4", "(2) - (7)", "deg. <= 4"),
        row("-", "CM-field", "8", "at most (2) - (7)", "deg. <= 8"),
        row(
            "-",
            "quad. ext. of CM-field of deg. 2",
            "4",
            "(1), (2)",
            "Constructible",
        ),
    ];
    match dim {
        1 => T1,
        2 => T2,
        3 => T3,
        4 => T4,
        _ => &[],
    }
}
