//! Command-line driver.
//!
//! [`run`] is a pure function from a [`RunConfig`] and the raw input bytes to
//! the text written on stdout/stderr and the process exit status, so the
//! binary in `main.rs` only parses arguments and reads the input file.
//!
//! Exit status: 0 success, 1 I/O or internal error, 2 parse error,
//! 3 validation error, 4 integrality error, 5 `--check` disagreement.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde_json::json;
use thiserror::Error;

use crate::combinatorics::falling_factorial;
use crate::equivariant::{bigint_json, equivariant_character, EquivariantError};
use crate::formulas::{
    chi_f_manifold_product, egf_corollary, egf_gal, egf_getzler, egf_manifold, egf_theorem,
    egf_theorem_by_powers, FormulaError, Parity,
};
use crate::oracle::{chi_c_config_by_inversion, count_injections, diagonal_identity_check, OracleError, MAX_ORACLE_N};
use crate::series::{EgfSeries, SeriesError};
use crate::simplicial::{ComplexInput, SimplicialComplex, SimplicialError};
use crate::stratified::{StratifiedError, StratifiedSpace, Stratum};

pub const DEFAULT_ORDER: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "confchi", version, about = "Euler characteristics of configuration spaces via exponential generating functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    /// Truncation order of the generating function.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Also evaluate an independent route and report agreement.
    #[arg(long, global = true)]
    pub check: bool,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Product formula with per-stratum sheaf ranks (stratified-space JSON).
    EgfTheorem { input: PathBuf },
    /// Ordinary Euler characteristics via the dualizing complex (stratified-space JSON).
    EgfCorollary { input: PathBuf },
    /// Product over the cells of a simplicial complex (simplicial JSON).
    Gal { input: PathBuf },
    /// (1 + t)^chi_c.
    Getzler {
        #[arg(long, allow_hyphen_values = true)]
        chi_c: i64,
    },
    /// (1 + t)^chi or (1 - t)^(-chi) for a manifold.
    Manifold {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        parity: Parity,
    },
    /// Brute-force cross-checks.
    Oracle(OracleArgs),
    /// Symmetric-group equivariant Euler characteristic of F(X, n), as JSON.
    Equivariant(EquivariantArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct OracleArgs {
    /// Compare (1 + t)^chi_c with the Stirling inversion and the diagonal identity.
    #[arg(long, allow_hyphen_values = true)]
    pub chi_c: Option<i64>,
    /// Count injections into a discrete space with this many points.
    #[arg(long)]
    pub points: Option<usize>,
}

#[derive(Args, Debug)]
pub struct EquivariantArgs {
    /// Stratified-space or simplicial JSON; χ(F(X, n)) is computed from it.
    #[arg(required_unless_present = "chi_f", conflicts_with = "chi_f")]
    pub input: Option<PathBuf>,
    /// Use this value of χ(F(X, n)) directly.
    #[arg(long, allow_hyphen_values = true)]
    pub chi_f: Option<i64>,
    #[arg(long = "n")]
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Series,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    EgfTheorem,
    EgfCorollary,
    Gal,
    Getzler { chi_c: i64 },
    Manifold { chi: i64, parity: Parity },
    OracleChiC { chi_c: i64 },
    OraclePoints { m: usize },
    Equivariant { n: usize, chi_f: Option<i64> },
}

impl Command {
    pub fn needs_input(&self) -> bool {
        matches!(
            self,
            Command::EgfTheorem
                | Command::EgfCorollary
                | Command::Gal
                | Command::Equivariant { chi_f: None, .. }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input_path: Option<PathBuf>,
    pub order: usize,
    pub format: OutputFormat,
    pub check: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let (command, input_path) = match cli.command {
            CliCommand::EgfTheorem { input } => (Command::EgfTheorem, Some(input)),
            CliCommand::EgfCorollary { input } => (Command::EgfCorollary, Some(input)),
            CliCommand::Gal { input } => (Command::Gal, Some(input)),
            CliCommand::Getzler { chi_c } => (Command::Getzler { chi_c }, None),
            CliCommand::Manifold { chi, parity } => (Command::Manifold { chi, parity }, None),
            CliCommand::Oracle(OracleArgs { chi_c: Some(chi_c), .. }) => (Command::OracleChiC { chi_c }, None),
            CliCommand::Oracle(OracleArgs { points, .. }) => {
                (Command::OraclePoints { m: points.unwrap_or_default() }, None)
            }
            CliCommand::Equivariant(a) => (Command::Equivariant { n: a.n, chi_f: a.chi_f }, a.input),
        };
        RunConfig { command, input_path, order: cli.order, format: cli.format, check: cli.check }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("integrality error: {0}")]
    Integrality(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Internal(_) => 1,
            CliError::Parse { .. } => 2,
            CliError::Validation(_) => 3,
            CliError::Integrality(_) => 4,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

impl From<StratifiedError> for CliError {
    fn from(e: StratifiedError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SimplicialError> for CliError {
    fn from(e: SimplicialError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::NotIntegral { .. } => CliError::Integrality(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::Stratified(e) => e.into(),
            FormulaError::Series(e) => e.into(),
        }
    }
}

impl From<EquivariantError> for CliError {
    fn from(e: EquivariantError) -> Self {
        match e {
            EquivariantError::ZeroN => CliError::Validation(e.to_string()),
            EquivariantError::NotDivisible { .. } => CliError::Integrality(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Result of an independent evaluation route.
struct Check {
    name: &'static str,
    agree: bool,
}

pub fn run(config: &RunConfig, input: Option<&[u8]>) -> Outcome {
    match dispatch(config, input) {
        Ok((stdout, check)) => {
            let code = if check.is_some_and(|c| !c.agree) { 5 } else { 0 };
            Outcome { stdout, stderr: String::new(), code }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}

fn parse<T: DeserializeOwned>(input: Option<&[u8]>) -> Result<T, CliError> {
    let bytes = input.ok_or_else(|| CliError::Io("this command needs an input file".into()))?;
    Ok(serde_json::from_slice(bytes)?)
}

fn parse_complex(input: Option<&[u8]>) -> Result<SimplicialComplex, CliError> {
    let raw: ComplexInput = parse(input)?;
    Ok(SimplicialComplex::from_input(raw)?)
}

fn dispatch(config: &RunConfig, input: Option<&[u8]>) -> Result<(String, Option<Check>), CliError> {
    let order = config.order;
    let (series, check) = match &config.command {
        Command::EgfTheorem => {
            let space: StratifiedSpace = parse(input)?;
            let e = egf_theorem(&space, order)?;
            let check = config.check.then(|| -> Result<Check, CliError> {
                let alt = egf_theorem_by_powers(&space, order)?;
                let linear: i64 = space.strata().iter().map(|s| s.sheaf_rank.unwrap_or(0) * s.chi_c).sum();
                let linear_ok = order == 0 || e.coefficient_chi(1)? == BigInt::from(linear);
                Ok(Check { name: "inverse-power route and additivity of [t^1]", agree: alt == e && linear_ok })
            });
            (e, check.transpose()?)
        }
        Command::EgfCorollary => {
            let space: StratifiedSpace = parse(input)?;
            let e = egf_corollary(&space, order)?;
            let check = config.check.then(|| -> Result<Check, CliError> {
                let alt = egf_theorem_by_powers(&space.with_dualizing_sheaf()?, order)?;
                let coarse = egf_corollary(&space.coarsen(), order)?;
                Ok(Check { name: "inverse-power route and stratum grouping", agree: alt == e && coarse == e })
            });
            (e, check.transpose()?)
        }
        Command::Gal => {
            let x = parse_complex(input)?;
            let e = egf_gal(&x, order);
            let check = config.check.then(|| -> Result<Check, CliError> {
                let alt = egf_corollary(&x.cell_stratification(), order)?;
                Ok(Check { name: "stratified formula on the cell stratification", agree: alt == e })
            });
            (e, check.transpose()?)
        }
        Command::Getzler { chi_c } => {
            let e = egf_getzler(*chi_c, order);
            let check = config.check.then(|| -> Result<Check, CliError> {
                let mut agree = true;
                for k in 0..=order {
                    agree &= e.coefficient_chi(k)? == chi_c_config_by_inversion(*chi_c, k);
                }
                for n in 1..=order.min(MAX_ORACLE_N) {
                    agree &= diagonal_identity_check(*chi_c, n)?;
                }
                Ok(Check { name: "Stirling inversion and diagonal identity", agree })
            });
            (e, check.transpose()?)
        }
        Command::Manifold { chi, parity } => {
            let e = egf_manifold(*chi, *parity, order);
            let check = config.check.then(|| -> Result<Check, CliError> {
                let mut agree = true;
                for n in 0..=order {
                    agree &= e.coefficient_chi(n)? == chi_f_manifold_product(*chi, *parity, n);
                }
                Ok(Check { name: "fibration product formula", agree })
            });
            (e, check.transpose()?)
        }
        Command::OracleChiC { chi_c } => return oracle_chi_c(*chi_c, config),
        Command::OraclePoints { m } => return oracle_points(*m, config),
        Command::Equivariant { n, chi_f } => return equivariant(*n, *chi_f, input).map(|s| (s, None)),
    };
    let out = render_series(&series, config.format, check.as_ref())?;
    Ok((out, check))
}

fn render_series(e: &EgfSeries, format: OutputFormat, check: Option<&Check>) -> Result<String, CliError> {
    let chi = e.chi_values()?;
    let mut out = String::new();
    match format {
        OutputFormat::Table => {
            writeln!(out, "n\tc_n\tchi").unwrap();
            for (n, (c, x)) in e.coeffs().iter().zip(&chi).enumerate() {
                writeln!(out, "{n}\t{c}\t{x}").unwrap();
            }
        }
        OutputFormat::Series => writeln!(out, "{e}").unwrap(),
        OutputFormat::Json => {
            let mut v = serde_json::to_value(e).map_err(|e| CliError::Internal(e.to_string()))?;
            v["chi"] = chi.iter().map(bigint_json).collect();
            if let Some(c) = check {
                v["check"] = json!({ "name": c.name, "agree": c.agree });
            }
            writeln!(out, "{v}").unwrap();
            return Ok(out);
        }
    }
    if let Some(c) = check {
        writeln!(out, "check ({}): {}", c.name, if c.agree { "agree" } else { "MISMATCH" }).unwrap();
    }
    Ok(out)
}

fn oracle_chi_c(chi_c: i64, config: &RunConfig) -> Result<(String, Option<Check>), CliError> {
    let e = egf_getzler(chi_c, config.order);
    let mut rows = Vec::new();
    let mut agree = true;
    for k in 0..=config.order {
        let series = e.coefficient_chi(k)?;
        let inversion = chi_c_config_by_inversion(chi_c, k);
        let diagonal = if (1..=MAX_ORACLE_N).contains(&k) { Some(diagonal_identity_check(chi_c, k)?) } else { None };
        agree &= series == inversion && diagonal != Some(false);
        rows.push((k, series, inversion, diagonal));
    }
    let mut out = String::new();
    match config.format {
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(k, s, i, d)| json!({ "k": k, "series": bigint_json(s), "inversion": bigint_json(i), "diagonal": d }))
                .collect();
            writeln!(out, "{}", json!({ "chi_c": chi_c, "rows": rows, "agree": agree })).unwrap();
        }
        _ => {
            writeln!(out, "k\tseries\tinversion\tdiagonal").unwrap();
            for (k, s, i, d) in &rows {
                let d = d.map_or("-".to_string(), |b| b.to_string());
                writeln!(out, "{k}\t{s}\t{i}\t{d}").unwrap();
            }
            writeln!(out, "oracle: {}", if agree { "agree" } else { "MISMATCH" }).unwrap();
        }
    }
    Ok((out, Some(Check { name: "oracle", agree })))
}

fn oracle_points(m: usize, config: &RunConfig) -> Result<(String, Option<Check>), CliError> {
    let strata = (0..m)
        .map(|i| Stratum { name: format!("p{i}"), dim: 0, chi_c: 1, link_chi: Some(0), sheaf_rank: None })
        .collect();
    let space = StratifiedSpace::new(strata);
    let top = config.order.min(MAX_ORACLE_N);
    let e = if m == 0 { EgfSeries::one(top) } else { egf_corollary(&space, top)? };
    let mut rows = Vec::new();
    let mut agree = true;
    for n in 0..=top {
        let brute = BigInt::from(count_injections(m, n)?);
        let formula = e.coefficient_chi(n)?;
        let falling = falling_factorial(m as i64, n);
        agree &= brute == formula && brute == falling;
        rows.push((n, brute, formula, falling));
    }
    let mut out = String::new();
    match config.format {
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, b, f, ff)| json!({ "n": n, "injections": bigint_json(b), "formula": bigint_json(f), "falling": bigint_json(ff) }))
                .collect();
            writeln!(out, "{}", json!({ "points": m, "rows": rows, "agree": agree })).unwrap();
        }
        _ => {
            writeln!(out, "n\tinjections\tformula\tfalling").unwrap();
            for (n, b, f, ff) in &rows {
                writeln!(out, "{n}\t{b}\t{f}\t{ff}").unwrap();
            }
            writeln!(out, "oracle: {}", if agree { "agree" } else { "MISMATCH" }).unwrap();
        }
    }
    Ok((out, Some(Check { name: "oracle", agree })))
}

fn equivariant(n: usize, chi_f: Option<i64>, input: Option<&[u8]>) -> Result<String, CliError> {
    let chi_f = match chi_f {
        Some(v) => BigInt::from(v),
        None => {
            let value: serde_json::Value = parse(input)?;
            let e = if value.get("facets").is_some() {
                let raw: ComplexInput = serde_json::from_value(value)?;
                egf_gal(&SimplicialComplex::from_input(raw)?, n)
            } else {
                let space: StratifiedSpace = serde_json::from_value(value)?;
                egf_corollary(&space, n)?
            };
            e.coefficient_chi(n)?
        }
    };
    let c = equivariant_character(&chi_f, n)?;
    Ok(format!("{}\n", serde_json::to_string(&c).map_err(|e| CliError::Internal(e.to_string()))?))
}
