use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rat_poly::RatPolynomial;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ResultantError {
    #[error("resultant of a zero polynomial is undefined")]
    InvalidInput,
}

/// Resultant under the convention Res(P, Q) = lc(P)^deg(Q) * prod Q(alpha_i)
/// over the roots alpha_i of P. Computed from the Sylvester matrix.
pub fn poly_resultant(p: &RatPolynomial, q: &RatPolynomial) -> Result<BigRational, ResultantError> {
    if p.is_zero() || q.is_zero() {
        return Err(ResultantError::InvalidInput);
    }
    let (dp, dq) = (p.deg(), q.deg());
    if dp == 0 {
        // No roots of P: empty product, times lc(P)^deg(Q).
        return Ok(pow_rat(&p.leading(), dq));
    }
    if dq == 0 {
        return Ok(pow_rat(&q.leading(), dp));
    }
    let n = dp + dq;
    let mut m = vec![vec![BigRational::zero(); n]; n];
    // dq rows of P's coefficients (highest degree first), then dp rows of Q's.
    for r in 0..dq {
        for i in 0..=dp {
            m[r][r + i] = p.coeff(dp - i);
        }
    }
    for r in 0..dp {
        for i in 0..=dq {
            m[dq + r][r + i] = q.coeff(dq - i);
        }
    }
    Ok(det_rational(m))
}

fn pow_rat(x: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Determinant by fraction Gaussian elimination.
fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    det
}

/// Determinant of a matrix with polynomial entries (Bareiss fraction-free
/// elimination; exact division holds over the integral domain Q[x]).
pub fn det_bareiss(mut m: Vec<Vec<RatPolynomial>>) -> RatPolynomial {
    let n = m.len();
    if n == 0 {
        return RatPolynomial::one();
    }
    let mut sign = 1i32;
    let mut prev = RatPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return RatPolynomial::zero();
            };
            m.swap(pivot, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = RatPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}

/// Resultant with respect to y of A(y) and B(x, y), where B is given as the
/// vector of its y-coefficients (each a polynomial in x, constant y-power
/// first). Returns a polynomial in x. Convention matches `poly_resultant`
/// with P = A (coefficients constant in x).
pub fn resultant_y(a: &RatPolynomial, b_ycoeffs: &[RatPolynomial]) -> RatPolynomial {
    let mut b: Vec<RatPolynomial> = b_ycoeffs.to_vec();
    while b.last().map_or(false, |c| c.is_zero()) {
        b.pop();
    }
    assert!(!a.is_zero() && !b.is_empty(), "resultant_y of zero input");
    let da = a.deg();
    let db = b.len() - 1;
    if da == 0 {
        let mut acc = RatPolynomial::one();
        for _ in 0..db {
            acc = acc.scale(&a.leading());
        }
        return acc;
    }
    if db == 0 {
        let mut acc = RatPolynomial::one();
        for _ in 0..da {
            acc = acc.mul(&b[0]);
        }
        return acc;
    }
    let n = da + db;
    let zero = RatPolynomial::zero();
    let mut m = vec![vec![zero; n]; n];
    for r in 0..db {
        for i in 0..=da {
            m[r][r + i] = RatPolynomial::constant(a.coeff(da - i));
        }
    }
    for r in 0..da {
        for i in 0..=db {
            m[db + r][r + i] = b[db - i].clone();
        }
    }
    det_bareiss(m)
}
