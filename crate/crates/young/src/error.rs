use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YoungError {
    #[error("parts are not weakly decreasing: {0}")]
    NotDecreasing(String),
    #[error("malformed partition token: {0}")]
    BadPartitionToken(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u64, right: u64 },
    #[error("p-adic valuation of zero is undefined")]
    ValuationOfZero,
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unresolved: {0}")]
    Unresolved(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Primality test for the small moduli used throughout.
pub fn check_prime(p: u32) -> Result<(), YoungError> {
    if p < 2 {
        return Err(YoungError::NotPrime(p));
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return Err(YoungError::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}
