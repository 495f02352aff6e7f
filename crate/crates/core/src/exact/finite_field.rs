use serde::{Deserialize, Serialize};
use std::fmt;

use super::int_poly::IntPolynomial;
use super::integers::is_prime_u64;

/// GF(p) or its quadratic extension GF(p^2) = GF(p)[t]/(t^2 - r), with r
/// the least positive quadratic non-residue mod p. p must be an odd prime
/// (ramification tests require residue characteristic != 2).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiniteField {
    p: u64,
    /// None for GF(p); Some(r) for GF(p)[t]/(t^2 - r).
    r: Option<u64>,
}

/// Element a + b*t of a `FiniteField` (b = 0 in the prime field).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiniteFieldElement {
    pub field: FiniteField,
    pub a: u64,
    pub b: u64,
}

impl FiniteField {
    pub fn prime(p: u64) -> Self {
        assert!(is_prime_u64(p), "{p} is not prime");
        FiniteField { p, r: None }
    }

    /// The canonical quadratic extension GF(p^2).
    pub fn quadratic(p: u64) -> Self {
        assert!(is_prime_u64(p) && p > 2, "need an odd prime, got {p}");
        FiniteField {
            p,
            r: Some(least_nonresidue(p)),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn order(&self) -> u64 {
        match self.r {
            None => self.p,
            Some(_) => self.p * self.p,
        }
    }

    pub fn degree(&self) -> u32 {
        if self.r.is_some() {
            2
        } else {
            1
        }
    }

    /// Defining modulus as an integer polynomial: t for GF(p) (degree-1
    /// placeholder is x), t^2 - r for GF(p^2).
    pub fn modulus(&self) -> IntPolynomial {
        match self.r {
            None => IntPolynomial::from_i64(&[0, 1]),
            Some(r) => IntPolynomial::from_i64(&[-(r as i64), 0, 1]),
        }
    }

    pub fn el(&self, a: i64, b: i64) -> FiniteFieldElement {
        let p = self.p as i64;
        FiniteFieldElement {
            field: *self,
            a: (a.rem_euclid(p)) as u64,
            b: if self.r.is_some() {
                (b.rem_euclid(p)) as u64
            } else {
                assert!(b.rem_euclid(p) == 0, "nonzero t-part in a prime field");
                0
            },
        }
    }

    pub fn zero(&self) -> FiniteFieldElement {
        self.el(0, 0)
    }

    pub fn one(&self) -> FiniteFieldElement {
        self.el(1, 0)
    }

    pub fn elements(&self) -> Vec<FiniteFieldElement> {
        let mut out = vec![];
        let bmax = if self.r.is_some() { self.p } else { 1 };
        for a in 0..self.p {
            for b in 0..bmax {
                out.push(FiniteFieldElement {
                    field: *self,
                    a,
                    b,
                });
            }
        }
        out
    }
}

impl FiniteFieldElement {
    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn p(&self) -> u64 {
        self.field.p
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field);
        FiniteFieldElement {
            field: self.field,
            a: (self.a + other.a) % self.p(),
            b: (self.b + other.b) % self.p(),
        }
    }

    pub fn neg(&self) -> Self {
        let p = self.p();
        FiniteFieldElement {
            field: self.field,
            a: (p - self.a) % p,
            b: (p - self.b) % p,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field);
        let p = self.p() as u128;
        let (a1, b1, a2, b2) = (
            self.a as u128,
            self.b as u128,
            other.a as u128,
            other.b as u128,
        );
        let r = self.field.r.unwrap_or(0) as u128;
        // (a1 + b1 t)(a2 + b2 t) = a1 a2 + r b1 b2 + (a1 b2 + a2 b1) t
        FiniteFieldElement {
            field: self.field,
            a: ((a1 * a2 + r * (b1 * b2 % p)) % p) as u64,
            b: ((a1 * b2 + a2 * b1) % p) as u64,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Norm to GF(p): x^(p+1) for the quadratic extension, x itself for GF(p).
    pub fn norm(&self) -> u64 {
        match self.field.r {
            None => self.a,
            Some(_) => {
                let n = self.pow(self.p() + 1);
                debug_assert_eq!(n.b, 0);
                n.a
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    pub fn is_minus_one(&self) -> bool {
        self.a == self.p() - 1 && self.b == 0
    }
}

impl fmt::Display for FiniteFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.r.is_some() {
            write!(f, "{}+{}t", self.a, self.b)
        } else {
            write!(f, "{}", self.a)
        }
    }
}

/// Least positive quadratic non-residue mod an odd prime p.
pub fn least_nonresidue(p: u64) -> u64 {
    assert!(p > 2);
    'outer: for r in 2..p {
        for x in 1..p {
            if (x as u128 * x as u128 % p as u128) as u64 == r {
                continue 'outer;
            }
        }
        return r;
    }
    unreachable!("every odd prime has a non-residue")
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FfError {
    #[error("Euler criterion is undefined on the zero element")]
    ZeroElement,
}

/// Euler criterion: x is a nonzero square iff x^((q-1)/2) = 1.
pub fn ff_is_square(x: &FiniteFieldElement) -> Result<bool, FfError> {
    if x.is_zero() {
        return Err(FfError::ZeroElement);
    }
    let q = x.field.order();
    Ok(x.pow((q - 1) / 2).is_one())
}
