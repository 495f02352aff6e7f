use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::int_poly::IntPolynomial;
use super::rat_poly::RatPolynomial;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SturmError {
    #[error("polynomial is not squarefree over Q")]
    NotSquarefree,
    #[error("interval endpoint is a root")]
    EndpointRoot,
    #[error("empty interval: lo must be < hi")]
    BadInterval,
    #[error("zero polynomial")]
    ZeroPolynomial,
}

/// Scale by a positive rational so the coefficients become coprime integers.
/// Positive scaling preserves the sign pattern, hence the Sturm property,
/// while keeping the coefficient growth of the remainder sequence in check.
fn normalize(p: &RatPolynomial) -> RatPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let ints = p.clear_denominators();
    let g = ints.content();
    RatPolynomial::new(
        ints.coeffs()
            .iter()
            .map(|c| BigRational::from(c / &g))
            .collect(),
    )
}

/// Sturm chain of a squarefree rational polynomial.
fn sturm_chain(p: &RatPolynomial) -> Vec<RatPolynomial> {
    let mut chain = vec![normalize(p), normalize(&p.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        if r.is_zero() {
            return chain;
        }
        chain.push(normalize(&r));
    }
}

fn sign_changes_at(chain: &[RatPolynomial], x: &BigRational) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for q in chain {
        let v = q.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn sign_changes_at_infinity(chain: &[RatPolynomial], positive: bool) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for q in chain {
        if q.is_zero() {
            continue;
        }
        let lead = q.leading();
        let mut s = if lead.is_positive() { 1i8 } else { -1 };
        if !positive && q.deg() % 2 == 1 {
            s = -s;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Exact number of real roots of a squarefree P in the open interval (lo, hi).
pub fn sturm_count(
    p: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<usize, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(SturmError::BadInterval);
    }
    if !p.is_squarefree() {
        return Err(SturmError::NotSquarefree);
    }
    if p.eval_rat(lo).is_zero() || p.eval_rat(hi).is_zero() {
        return Err(SturmError::EndpointRoot);
    }
    let chain = sturm_chain(&p.to_rat());
    Ok(sign_changes_at(&chain, lo) - sign_changes_at(&chain, hi))
}

/// Number of real roots of a squarefree P on the whole real line.
pub fn real_root_count(p: &IntPolynomial) -> Result<usize, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    if !p.is_squarefree() {
        return Err(SturmError::NotSquarefree);
    }
    let chain = sturm_chain(&p.to_rat());
    Ok(sign_changes_at_infinity(&chain, false) - sign_changes_at_infinity(&chain, true))
}

/// Isolating intervals (lo, hi) with rational non-root endpoints, one per real
/// root of a squarefree polynomial, in increasing order.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<(BigRational, BigRational)>, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    if !p.is_squarefree() {
        return Err(SturmError::NotSquarefree);
    }
    let chain = sturm_chain(&p.to_rat());
    let count =
        sign_changes_at_infinity(&chain, false) - sign_changes_at_infinity(&chain, true);
    if count == 0 {
        return Ok(vec![]);
    }
    let mut bound = p.cauchy_root_bound();
    // Nudge the bound away from any root (roots are strictly inside).
    while p.eval_rat(&bound).is_zero() || p.eval_rat(&(-bound.clone())).is_zero() {
        bound += BigRational::from_integer(1.into());
    }
    let mut out = vec![];
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = sign_changes_at(&chain, &lo) - sign_changes_at(&chain, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mut mid = (&lo + &hi) / BigRational::from_integer(2.into());
        // Perturb the midpoint off a root if needed.
        while p.eval_rat(&mid).is_zero() {
            mid = (&lo + &mid) / BigRational::from_integer(2.into());
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert_eq!(out.len(), count);
    Ok(out)
}
