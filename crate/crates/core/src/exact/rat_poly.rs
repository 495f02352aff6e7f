use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::int_poly::IntPolynomial;

/// Univariate polynomial with arbitrary-precision rational coefficients,
/// constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn neg(&self) -> Self {
        RatPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
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

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
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
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg other.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let d = other.deg();
        let lead = other.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() < d + 1 {
            return (Self::zero(), self.clone());
        }
        let qdeg = rem.len() - 1 - d;
        let mut q = vec![BigRational::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let c = &rem[k + d] / &lead;
            if !c.is_zero() {
                for (i, oc) in other.coeffs.iter().enumerate() {
                    let v = &c * oc;
                    rem[k + i] -= v;
                }
            }
            q[k] = c;
        }
        rem.truncate(d);
        (Self::new(q), Self::new(rem))
    }

    pub fn rem(&self, other: &Self) -> Self {
        self.div_rem(other).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = BigRational::one() / self.leading();
        self.scale(&inv)
    }

    /// Monic GCD over Q. Each remainder is rescaled to coprime integer
    /// coefficients; without this the remainder sequence blows up badly.
    pub fn gcd(&self, other: &Self) -> Self {
        let normalize = |p: &Self| -> Self {
            if p.is_zero() {
                return Self::zero();
            }
            let ints = p.clear_denominators();
            let g = ints.content();
            Self::new(
                ints.coeffs()
                    .iter()
                    .map(|c| BigRational::from(c / &g))
                    .collect(),
            )
        };
        let (mut a, mut b) = (normalize(self), normalize(other));
        while !b.is_zero() {
            let r = normalize(&a.rem(&b));
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended GCD: returns (g, s, t) monic with s*self + t*other = g.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        let inv = BigRational::one() / r0.leading();
        (
            r0.scale(&inv),
            s0.scale(&inv),
            t0.scale(&inv),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_int_exact(&self) -> Option<IntPolynomial> {
        if !self.is_integral() {
            return None;
        }
        Some(IntPolynomial::new(
            self.coeffs.iter().map(|c| c.to_integer()).collect(),
        ))
    }

    /// Multiply by the LCM of coefficient denominators.
    pub fn clear_denominators(&self) -> IntPolynomial {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from(l.clone())).to_integer())
                .collect(),
        )
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPolynomial(")?;
        if self.is_zero() {
            write!(f, "0")?;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if c.is_negative() {
                    write!(f, " -{}x^{i}", -c)?;
                } else {
                    write!(f, " +{c}x^{i}")?;
                }
            }
        }
        write!(f, ")")
    }
}
