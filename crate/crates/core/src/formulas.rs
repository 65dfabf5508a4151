//! Closed-form generating functions for Euler characteristics of configuration spaces.
//!
//! All functions return the exponential generating function truncated at
//! `order`; use [`EgfSeries::coefficient_chi`] to read off `χ(F(X, n))`
//! (or `χ_c(F(X, n), K^{⊠n})` for the sheaf-coefficient version).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::combinatorics::{falling_factorial, rising_factorial};
use crate::series::{EgfSeries, SeriesError};
use crate::simplicial::SimplicialComplex;
use crate::stratified::{StratifiedError, StratifiedSpace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error(transparent)]
    Stratified(#[from] StratifiedError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Parity of the dimension of a manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(dim: usize) -> Self {
        if dim.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(format!("parity must be `even` or `odd`, got {other:?}")),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `∏_α (1 + χ(K|_{X_α}) t)^{χ_c(X_α)}`, the sheaf ranks taken from `sheaf_rank`.
pub fn egf_theorem(space: &StratifiedSpace, order: usize) -> Result<EgfSeries, FormulaError> {
    space.validate(false, true)?;
    let mut acc = EgfSeries::one(order);
    for s in space.strata() {
        let rank = s.sheaf_rank.expect("validated");
        acc = acc.mul(&EgfSeries::binomial(rank, s.chi_c, order))?;
    }
    Ok(acc)
}

/// Same product as [`egf_theorem`], but every factor is built as an integer
/// power of `1 + c t`, negative powers through the series inverse.
pub fn egf_theorem_by_powers(space: &StratifiedSpace, order: usize) -> Result<EgfSeries, FormulaError> {
    space.validate(false, true)?;
    let mut acc = EgfSeries::one(order);
    for s in space.strata() {
        let base = EgfSeries::binomial(s.sheaf_rank.expect("validated"), 1, order);
        acc = acc.mul(&base.pow(s.chi_c)?)?;
    }
    Ok(acc)
}

/// Ordinary Euler characteristics `χ(F(X, n))`: the theorem with the dualizing
/// complex as coefficients, i.e. rank `(-1)^{d_α}(1 - χ(L_α))` on each stratum.
pub fn egf_corollary(space: &StratifiedSpace, order: usize) -> Result<EgfSeries, FormulaError> {
    space.validate(true, false)?;
    egf_theorem(&space.with_dualizing_sheaf()?, order)
}

/// `(1 + t)^{χ_c}`: compactly supported Euler characteristics with constant coefficients.
pub fn egf_getzler(chi_c: i64, order: usize) -> EgfSeries {
    EgfSeries::binomial(1, chi_c, order)
}

/// `∏_σ (1 + (-1)^{d_σ}(1 - v_σ) t)^{(-1)^{d_σ}}` over all faces of a finite
/// simplicial complex, `v_σ` the Euler characteristic of the link of `σ`.
///
/// `v_σ` is counted directly from the cofaces of `σ` instead of building the
/// link complex: a face `τ ⊋ σ` contributes `(-1)^{dim τ - dim σ - 1}`.
pub fn egf_gal(complex: &SimplicialComplex, order: usize) -> EgfSeries {
    let faces: Vec<_> = complex.faces().collect();
    let mut acc = EgfSeries::one(order);
    for sigma in &faces {
        let v: i64 = faces
            .iter()
            .filter(|tau| tau.dim() > sigma.dim() && sigma.is_face_of(tau))
            .map(|tau| if (tau.dim() - sigma.dim() - 1) % 2 == 0 { 1 } else { -1 })
            .sum();
        let sign = if sigma.dim() % 2 == 0 { 1 } else { -1 };
        let factor = EgfSeries::binomial(sign * (1 - v), sign, order);
        acc = acc.mul(&factor).expect("uniform order");
    }
    acc
}

/// `(1 + t)^χ` for even-dimensional manifolds, `(1 - t)^{-χ}` for odd ones.
pub fn egf_manifold(chi: i64, parity: Parity, order: usize) -> EgfSeries {
    match parity {
        Parity::Even => EgfSeries::binomial(1, chi, order),
        Parity::Odd => EgfSeries::binomial(-1, -chi, order),
    }
}

/// `∏_{i<n} (χ - i)` for even dimension, `∏_{i<n} (χ + i)` for odd.
pub fn chi_f_manifold_product(chi: i64, parity: Parity, n: usize) -> BigInt {
    match parity {
        Parity::Even => falling_factorial(chi, n),
        Parity::Odd => rising_factorial(chi, n),
    }
}
