//! Brute-force cross-checks for the closed forms.
//!
//! Everything here is deliberately naive: direct enumeration and plain
//! Stirling sums, with size guards so that the whole suite stays fast.

use num_bigint::BigInt;
use num_traits::Pow;
use thiserror::Error;

use crate::combinatorics::{enumerate_set_partitions, stirling_tables};

/// Largest `n` (and `m`) accepted by the enumerating oracles.
pub const MAX_ORACLE_N: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} = {value} exceeds the oracle limit {limit}")]
    TooLarge { what: &'static str, value: usize, limit: usize },
}

fn guard(what: &'static str, value: usize) -> Result<(), OracleError> {
    if value > MAX_ORACLE_N {
        return Err(OracleError::TooLarge { what, value, limit: MAX_ORACLE_N });
    }
    Ok(())
}

/// `χ_c(F(X, k)) = Σ_{n=1}^{k} s(k, n) χ_c(X)^n`, with the `k = 0` value 1.
pub fn chi_c_config_by_inversion(chi_c_x: i64, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::from(1);
    }
    let table = stirling_tables(k);
    let x = BigInt::from(chi_c_x);
    (1..=k).map(|n| table.first_kind(k, n) * Pow::pow(&x, n)).sum()
}

/// Checks `χ_c(X)^n = Σ_{T ∈ Π_n} χ_c(F(X, |T|))` by enumerating every set
/// partition `T` of `{1, …, n}`.
pub fn diagonal_identity_check(chi_c_x: i64, n: usize) -> Result<bool, OracleError> {
    guard("n", n)?;
    let partitions = enumerate_set_partitions(n).expect("within guard");
    let rhs: BigInt = partitions
        .iter()
        .map(|t| chi_c_config_by_inversion(chi_c_x, t.num_blocks()))
        .sum();
    Ok(rhs == Pow::pow(&BigInt::from(chi_c_x), n))
}

/// Number of injective maps `{1..n} → {1..m}`, i.e. `|F(X, n)|` for a
/// discrete `m`-point space, found by walking every injection.
pub fn count_injections(m: usize, n: usize) -> Result<u64, OracleError> {
    guard("m", m)?;
    guard("n", n)?;
    let mut used = vec![false; m];
    Ok(walk(&mut used, n))
}

fn walk(used: &mut [bool], remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut count = 0;
    for i in 0..used.len() {
        if !used[i] {
            used[i] = true;
            count += walk(used, remaining - 1);
            used[i] = false;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_examples() {
        assert_eq!(chi_c_config_by_inversion(1, 2), BigInt::from(0));
        assert_eq!(chi_c_config_by_inversion(3, 2), BigInt::from(6));
        assert_eq!(chi_c_config_by_inversion(-1, 3), BigInt::from(-6));
        assert_eq!(chi_c_config_by_inversion(7, 0), BigInt::from(1));
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(diagonal_identity_check(2, 3), Ok(true));
        for n in 1..=8 {
            assert_eq!(diagonal_identity_check(0, n), Ok(true));
            assert_eq!(diagonal_identity_check(-3, n), Ok(true));
        }
        assert!(diagonal_identity_check(2, 9).is_err());
    }

    #[test]
    fn injection_examples() {
        assert_eq!(count_injections(3, 2), Ok(6));
        assert_eq!(count_injections(2, 3), Ok(0));
        assert_eq!(count_injections(5, 0), Ok(1));
        assert_eq!(count_injections(0, 0), Ok(1));
        assert!(count_injections(9, 1).is_err());
    }
}
