use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SquarefreeError {
    #[error("zero has no squarefree classification")]
    ZeroInput,
    #[error("cofactor exceeds the factorization bound; squarefreeness undecided")]
    Indeterminate,
}

/// Trial-division bound: primes up to 10^6 are removed before deciding.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// True iff no prime square divides |n|. Trial division up to 10^6; if an
/// unfactored cofactor remains that is neither provably prime nor a perfect
/// square, the answer is refused (`Indeterminate`) rather than guessed.
pub fn is_squarefree_integer(n: &BigInt) -> Result<bool, SquarefreeError> {
    if n.is_zero() {
        return Err(SquarefreeError::ZeroInput);
    }
    let mut m = n.abs();
    let one = BigInt::from(1);
    if m == one {
        return Ok(true);
    }
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND {
        let dd = BigInt::from(d);
        if (&m % &dd).is_zero() {
            m /= &dd;
            if (&m % &dd).is_zero() {
                return Ok(false);
            }
        }
        if &dd * &dd > m {
            break;
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if m == one {
        return Ok(true);
    }
    // m has no prime factor <= 10^6.
    let s = m.sqrt();
    if &s * &s == m {
        return Ok(false); // perfect square of a large prime (or prime product)
    }
    let bound_sq = BigInt::from(TRIAL_DIVISION_BOUND) * BigInt::from(TRIAL_DIVISION_BOUND);
    if m < bound_sq {
        return Ok(true); // m must be prime: composite would have a small factor
    }
    // Could be p*q (squarefree) or p^2*q etc.; refuse to guess.
    Err(SquarefreeError::Indeterminate)
}

/// Deterministic primality for u64 via trial division (inputs here are small).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes below `bound`, ascending.
pub fn small_primes(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&n| is_prime_u64(n)).collect()
}
