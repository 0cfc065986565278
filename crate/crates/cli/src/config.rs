use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ladder_core::integrals::{paper_coefficients, quadrature_coefficients, QuadratureCoefficients};
use ladder_core::{EnergyUnit, ModelCoefficients, SignConvention};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "ladder",
    version,
    about = "Ladder-operator ground state of two-level electron systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stationary occupation, ground energy and diagnostics.
    Solve(CommonArgs),
    /// Energies and ladder quantities on a uniform η grid over [0, 1].
    Scan {
        #[command(flatten)]
        common: CommonArgs,
        /// Number of η values, endpoints included.
        #[arg(long, default_value_t = 101, value_parser = parse_points)]
        points: usize,
    },
    /// Radial electron density of the ground state.
    Density {
        #[command(flatten)]
        common: CommonArgs,
        /// Radial grid as RMAX:NPOINTS, radii in units of a.
        #[arg(long, default_value = "40:2000")]
        grid: GridSpec,
    },
    /// Check the operator identities on the 16-state representation.
    Verify {
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, hide = true, value_enum, default_value_t = ConventionArg::JordanWigner)]
        sign_convention: ConventionArg,
    },
    /// Compare published coefficients with the literal Coulomb integrals.
    Integrals(OutputArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// paper, quadrature, or file:PATH.
    #[arg(long, default_value = "paper")]
    pub coefficients: CoefficientSource,
    /// Evaluate at this occupation instead of the stationary point.
    #[arg(long, value_parser = parse_eta)]
    pub eta: Option<f64>,
    #[arg(long, default_value = "e2a", value_parser = parse_unit)]
    pub unit: EnergyUnit,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    JordanWigner,
    Ignored,
}

impl From<ConventionArg> for SignConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::JordanWigner => SignConvention::JordanWigner,
            ConventionArg::Ignored => SignConvention::Ignored,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientSource {
    Paper,
    Quadrature,
    File(PathBuf),
}

impl FromStr for CoefficientSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(CoefficientSource::Paper),
            "quadrature" => Ok(CoefficientSource::Quadrature),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(CoefficientSource::File(path.into())),
                _ => Err(format!(
                    "expected paper, quadrature or file:PATH, got `{s}`"
                )),
            },
        }
    }
}

impl CoefficientSource {
    pub fn label(&self) -> String {
        match self {
            CoefficientSource::Paper => "paper".into(),
            CoefficientSource::Quadrature => "quadrature".into(),
            CoefficientSource::File(p) => format!("file:{}", p.display()),
        }
    }

    /// Loaded coefficients, plus the quadrature details when computed.
    pub fn load(&self) -> Result<(ModelCoefficients, Option<QuadratureCoefficients>), CliError> {
        match self {
            CoefficientSource::Paper => Ok((paper_coefficients(), None)),
            CoefficientSource::Quadrature => {
                let q = quadrature_coefficients()?;
                Ok((q.coefficients, Some(q)))
            }
            CoefficientSource::File(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                Ok((parse_coefficient_file(&text)?, None))
            }
        }
    }
}

/// Parses `key = value` lines (`=`, `:` or whitespace separated). Blank
/// lines and `#` comments are skipped; all six keys are required once.
pub fn parse_coefficient_file(text: &str) -> Result<ModelCoefficients, CliError> {
    const KEYS: [&str; 6] = ["eps1", "eps2", "V1", "V2", "U", "Ubar"];
    let mut values: [Option<f64>; 6] = [None; 6];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad =
            |msg: String| CliError::Usage(format!("coefficient file line {}: {msg}", lineno + 1));
        let (key, value) = line
            .split_once(['=', ':'])
            .or_else(|| line.split_once(char::is_whitespace))
            .ok_or_else(|| bad(format!("expected `key = value`, got `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        let slot = KEYS
            .iter()
            .position(|k| *k == key)
            .ok_or_else(|| bad(format!("unknown key `{key}`")))?;
        let x: f64 = value
            .parse()
            .map_err(|_| bad(format!("cannot parse `{value}` as a number")))?;
        if !x.is_finite() {
            return Err(bad(format!("{key} must be finite")));
        }
        if values[slot].replace(x).is_some() {
            return Err(bad(format!("duplicate key `{key}`")));
        }
    }
    let missing: Vec<&str> = KEYS
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_none())
        .map(|(k, _)| *k)
        .collect();
    if !missing.is_empty() {
        return Err(CliError::Usage(format!(
            "coefficient file is missing {}",
            missing.join(", ")
        )));
    }
    let v = values.map(Option::unwrap);
    Ok(ModelCoefficients::new(v[0], v[1], v[2], v[3], v[4], v[5]))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub r_max: f64,
    pub points: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (r, n) = s
            .split_once(':')
            .ok_or_else(|| format!("expected RMAX:NPOINTS, got `{s}`"))?;
        let r_max: f64 = r.parse().map_err(|_| format!("bad RMAX `{r}`"))?;
        let points: usize = n.parse().map_err(|_| format!("bad NPOINTS `{n}`"))?;
        if !(r_max > 0.0 && r_max.is_finite()) {
            return Err(format!("RMAX must be positive, got {r_max}"));
        }
        if points < 2 {
            return Err(format!("NPOINTS must be at least 2, got {points}"));
        }
        Ok(GridSpec { r_max, points })
    }
}

fn parse_eta(s: &str) -> Result<f64, String> {
    let eta: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !(0.0..=1.0).contains(&eta) {
        return Err(format!("eta must lie in [0, 1], got {eta}"));
    }
    Ok(eta)
}

fn parse_unit(s: &str) -> Result<EnergyUnit, String> {
    s.parse().map_err(|e: ladder_core::Error| e.to_string())
}

fn parse_points(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("`{s}` is not a count"))?;
    if n < 2 {
        return Err(format!("need at least 2 points, got {n}"));
    }
    Ok(n)
}
