use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::rat_poly::RatPolynomial;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first. The coefficient vector never has trailing zeros,
/// so `coeffs.len() - 1` is the degree of a nonzero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial x^n.
    pub fn x_pow(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// The reversed (reciprocal) polynomial x^deg * P(1/x).
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Palindromic coefficients: x^deg * P(1/x) = P.
    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.reverse() == *self
    }

    /// GCD of all coefficients (positive), 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Content-free version with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division; panics if `other` does not divide `self` over Q.
    /// Result may be rational-coefficient; use only when divisibility holds in Z[x].
    /// True iff other divides self exactly over Q.
    pub fn divisible_by(&self, other: &Self) -> bool {
        if other.is_zero() {
            return self.is_zero();
        }
        let (_, r) = self.to_rat().div_rem(&other.to_rat());
        r.is_zero()
    }

    pub fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.to_rat().div_rem(&other.to_rat());
        assert!(r.is_zero(), "div_exact: not divisible");
        q.to_int_exact().expect("div_exact: non-integer quotient")
    }

    pub fn to_rat(&self) -> RatPolynomial {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// Primitive integer GCD (positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let g = self.to_rat().gcd(&other.to_rat());
        // g is monic over Q; clear denominators and take the primitive part.
        g.clear_denominators().primitive_part()
    }

    /// Squarefree over Q (no repeated complex roots).
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == 0 {
            return true;
        }
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Product of each distinct irreducible factor once (primitive, positive lc).
    pub fn squarefree_part(&self) -> Self {
        let p = self.primitive_part();
        if p.is_zero() || p.deg() == 0 {
            return p;
        }
        let g = p.gcd(&p.derivative());
        if g.deg() == 0 {
            return p;
        }
        p.div_exact(&g).primitive_part()
    }

    /// Cauchy bound: every complex root has modulus < 1 + max|a_i|/|a_n|.
    pub fn cauchy_root_bound(&self) -> BigRational {
        let lead = BigRational::from(self.leading().abs());
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = BigRational::from(c.abs());
            if v > m {
                m = v;
            }
        }
        BigRational::one() + m / lead
    }

    /// Even/odd split of P(x)P(-x): returns S with S(x^2) = (-1)^deg * P(x)P(-x),
    /// normalized so that S is monic when P is. Roots of S are the squares of
    /// the roots of P.
    pub fn root_square_poly(&self) -> Self {
        let n = self.deg();
        let mut pm = self.clone();
        for (i, c) in pm.coeffs.iter_mut().enumerate() {
            if i % 2 == 1 {
                *c = -&*c;
            }
        }
        let prod = self.mul(&pm); // even polynomial of degree 2n
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, c) in prod.coeffs().iter().enumerate() {
            if i % 2 == 0 {
                out[i / 2] = c.clone();
            } else {
                debug_assert!(c.is_zero());
            }
        }
        let s = Self::new(out);
        if s.leading().is_negative() {
            s.neg()
        } else {
            s
        }
    }

    /// Kronecker's method: monic integer factor of degree in 1..=deg/2 if one
    /// exists. `self` must be monic with nonzero constant term.
    pub fn monic_factor(&self) -> Option<IntPolynomial> {
        assert!(self.is_monic());
        let n = self.deg();
        if n <= 1 {
            return None;
        }
        for d in 1..=n / 2 {
            // Evaluation points 0, 1, -1, 2, -2, ...
            let points: Vec<BigInt> = (0..=d as i64)
                .map(|i| {
                    let k = (i + 1) / 2;
                    BigInt::from(if i % 2 == 1 { k } else { -k })
                })
                .collect();
            let values: Vec<BigInt> = points.iter().map(|x| self.eval_int(x)).collect();
            if values.iter().any(|v| v.is_zero()) {
                // Rational root at an evaluation point.
                let x0 = &points[values.iter().position(|v| v.is_zero()).unwrap()];
                return Some(IntPolynomial::new(vec![-x0.clone(), BigInt::one()]));
            }
            let divisor_sets: Vec<Vec<BigInt>> =
                values.iter().map(|v| signed_divisors(v)).collect();
            let mut idx = vec![0usize; d + 1];
            loop {
                let choice: Vec<BigInt> = (0..=d)
                    .map(|i| divisor_sets[i][idx[i]].clone())
                    .collect();
                if let Some(g) = interpolate_int(&points, &choice) {
                    if g.degree() == Some(d) && g.leading().abs().is_one() {
                        let g = if g.leading().is_negative() { g.neg() } else { g };
                        let (q, r) = self.to_rat().div_rem(&g.to_rat());
                        if r.is_zero() && q.is_integral() {
                            return Some(g);
                        }
                    }
                }
                // advance multi-index
                let mut i = 0;
                loop {
                    idx[i] += 1;
                    if idx[i] < divisor_sets[i].len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                    if i > d {
                        break;
                    }
                }
                if i > d {
                    break;
                }
            }
        }
        None
    }

    /// Irreducibility over Q for monic integer polynomials (Kronecker search).
    pub fn is_irreducible(&self) -> bool {
        assert!(self.is_monic(), "irreducibility test expects monic input");
        let n = self.deg();
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        if self.coeff(0).is_zero() {
            return false; // divisible by x
        }
        self.monic_factor().is_none()
    }

    /// All monic irreducible factors (with multiplicity) of a monic polynomial.
    pub fn factor_monic(&self) -> Vec<IntPolynomial> {
        assert!(self.is_monic());
        let mut todo = vec![self.clone()];
        let mut out = vec![];
        while let Some(p) = todo.pop() {
            if p.deg() == 0 {
                continue;
            }
            if p.coeff(0).is_zero() {
                let mut c = p.coeffs.clone();
                c.remove(0);
                todo.push(IntPolynomial::new(c));
                out.push(IntPolynomial::x_pow(1));
                continue;
            }
            match p.monic_factor() {
                None => out.push(p),
                Some(g) => {
                    todo.push(p.div_exact(&g));
                    todo.push(g);
                }
            }
        }
        out.sort_by_key(|f| (f.deg(), format!("{f}")));
        out
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

/// All divisors of |v| with both signs, v nonzero.
fn signed_divisors(v: &BigInt) -> Vec<BigInt> {
    let a = v.abs();
    let mut divs = vec![];
    let mut d = BigInt::one();
    // |v| in our use is small (polynomial values at small points)
    while &d * &d <= a {
        if (&a % &d).is_zero() {
            divs.push(d.clone());
            let q = &a / &d;
            if q != d {
                divs.push(q);
            }
        }
        d += 1;
    }
    let mut out = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        out.push(d.clone());
        out.push(-d);
    }
    out
}

/// Lagrange interpolation; Some only if all coefficients are integers.
fn interpolate_int(points: &[BigInt], values: &[BigInt]) -> Option<IntPolynomial> {
    let mut acc = RatPolynomial::zero();
    for (i, (xi, yi)) in points.iter().zip(values).enumerate() {
        let mut li = RatPolynomial::new(vec![BigRational::from(yi.clone())]);
        for (j, xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from(xi - xj);
            li = li.mul(&RatPolynomial::new(vec![
                BigRational::from(-xj.clone()) / denom.clone(),
                BigRational::one() / denom,
            ]));
        }
        acc = acc.add(&li);
    }
    acc.to_int_exact()
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}
