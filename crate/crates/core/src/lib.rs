//! Euler characteristics of configuration spaces on stratified spaces.
//!
//! For a stratified space `X = ∪ X_α` and a constructible complex `K` whose
//! restriction to `X_α` has Euler characteristic `r_α`, the exponential
//! generating function of `χ_c(F(X, n), K^{⊠n})` is
//! `∏_α (1 + r_α t)^{χ_c(X_α)}`. This crate evaluates that product and its
//! specializations exactly, as truncated power series over the rationals,
//! and checks them against independent combinatorial oracles.

pub mod cli;
pub mod combinatorics;
pub mod equivariant;
pub mod formulas;
pub mod oracle;
pub mod rational;
pub mod series;
pub mod simplicial;
pub mod stratified;

pub use formulas::{
    chi_f_manifold_product, egf_corollary, egf_gal, egf_getzler, egf_manifold, egf_theorem, Parity,
};
pub use rational::Rational;
pub use series::{EgfSeries, SeriesError};
pub use simplicial::{downward_closure, Simplex, SimplicialComplex, Vertex};
pub use stratified::{dualizing_rank, StratifiedSpace, Stratum};
