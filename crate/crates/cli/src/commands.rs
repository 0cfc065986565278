use ladder_core::integrals::{
    coefficient_comparison, convert_energy, CoefficientRow, QuadratureCoefficients,
};
use ladder_core::model::{verify_identity_suite_with, IdentityKind, IdentityReport};
use ladder_core::solver::{
    density_profile, energy_quadratic, ground_energy, solve_at, stationary_eta, uniform_grid,
    RadialDensityProfile,
};
use ladder_core::{ladder_data, EnergyUnit, GroundStateReport, ModelCoefficients, SignConvention};
use serde::Serialize;

use crate::config::{CommonArgs, Format, GridSpec};
use crate::error::CliError;
use crate::format::{csv, g12, json};

/// Provenance block at the top of every JSON document.
#[derive(Debug, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient_source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<&'static str>,
}

impl Metadata {
    fn new(command: &'static str, common: Option<&CommonArgs>) -> Self {
        Metadata {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            coefficient_source: common.map(|c| c.coefficients.label()),
            unit: common.map(|c| c.unit.symbol()),
        }
    }
}

#[derive(Debug, Serialize)]
struct SolveDocument<'a> {
    metadata: Metadata,
    coefficients: ModelCoefficients,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadrature: Option<QuadratureCoefficients>,
    /// Ground energy in the requested unit.
    energy: f64,
    report: &'a GroundStateReport,
}

fn to_unit(x_e2a: f64, unit: EnergyUnit) -> f64 {
    convert_energy(x_e2a, EnergyUnit::E2a, unit)
}

pub fn solve(args: &CommonArgs) -> Result<String, CliError> {
    let (c, quadrature) = args.coefficients.load()?;
    let report = solve_at(&c, args.eta)?;
    let unit = args.unit;
    match args.output.format.unwrap_or(Format::Json) {
        Format::Json => Ok(json(&SolveDocument {
            metadata: Metadata::new("solve", Some(args)),
            coefficients: c,
            quadrature,
            energy: report.energy.get(unit),
            report: &report,
        })),
        Format::Csv => {
            let l = &report.ladder;
            let mut rows: Vec<(String, String)> = vec![
                ("unit".into(), unit.symbol().into()),
                ("eta_star".into(), g12(report.eta_star)),
                ("stationary".into(), report.stationary.to_string()),
                ("energy".into(), g12(report.energy.get(unit))),
                (
                    "energy_quadratic".into(),
                    g12(report.energy_quadratic.get(unit)),
                ),
                ("theta".into(), g12(report.theta)),
                ("K".into(), g12(l.k)),
                ("D_plus".into(), g12(to_unit(l.d_plus, unit))),
                ("D_minus".into(), g12(to_unit(l.d_minus, unit))),
                ("lambda_plus".into(), g12(l.lambda_plus)),
                ("lambda_minus".into(), g12(l.lambda_minus)),
                ("residual_norm".into(), g12(report.residual_norm)),
            ];
            for (i, e) in report.exact_sector_spectrum.iter().enumerate() {
                rows.push((format!("sector_eigenvalue_{i}"), g12(to_unit(*e, unit))));
            }
            for r in &report.reference_deltas {
                rows.push((
                    format!("{}_difference_hartree", r.name),
                    g12(r.difference_hartree),
                ));
                rows.push((
                    format!("{}_relative_deviation", r.name),
                    g12(r.relative_deviation),
                ));
            }
            let rows: Vec<Vec<String>> = rows.into_iter().map(|(k, v)| vec![k, v]).collect();
            csv(&["quantity", "value"], &rows).map_err(csv_error)
        }
    }
}

#[derive(Debug, Serialize)]
struct ScanRow {
    eta: f64,
    #[serde(rename = "E43")]
    e43: f64,
    #[serde(rename = "E41")]
    e41: f64,
    #[serde(rename = "D_plus")]
    d_plus: f64,
    #[serde(rename = "D_minus")]
    d_minus: f64,
    lambda_sum: f64,
}

#[derive(Debug, Serialize)]
struct ScanDocument {
    metadata: Metadata,
    coefficients: ModelCoefficients,
    rows: Vec<ScanRow>,
}

pub const SCAN_HEADER: [&str; 6] = ["eta", "E43", "E41", "D_plus", "D_minus", "lambda_sum"];

pub fn scan(args: &CommonArgs, points: usize) -> Result<String, CliError> {
    let (c, _) = args.coefficients.load()?;
    let unit = args.unit;
    let rows = (0..points)
        .map(|i| {
            let eta = if i + 1 == points {
                1.0
            } else {
                i as f64 / (points - 1) as f64
            };
            let l = ladder_data(&c, eta)?;
            Ok(ScanRow {
                eta,
                e43: to_unit(energy_quadratic(&c, eta)?, unit),
                e41: to_unit(ground_energy(&c, eta)?.full, unit),
                d_plus: to_unit(l.d_plus, unit),
                d_minus: to_unit(l.d_minus, unit),
                lambda_sum: l.lambda_plus + l.lambda_minus,
            })
        })
        .collect::<Result<Vec<_>, ladder_core::Error>>()?;
    match args.output.format.unwrap_or(Format::Csv) {
        Format::Json => Ok(json(&ScanDocument {
            metadata: Metadata::new("scan", Some(args)),
            coefficients: c,
            rows,
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    [r.eta, r.e43, r.e41, r.d_plus, r.d_minus, r.lambda_sum]
                        .map(g12)
                        .to_vec()
                })
                .collect();
            csv(&SCAN_HEADER, &rows).map_err(csv_error)
        }
    }
}

#[derive(Debug, Serialize)]
struct DensityDocument {
    metadata: Metadata,
    coefficients: ModelCoefficients,
    eta: f64,
    theta: f64,
    profile: RadialDensityProfile,
}

pub fn density(args: &CommonArgs, grid: GridSpec) -> Result<String, CliError> {
    let (c, _) = args.coefficients.load()?;
    let eta = args.eta.unwrap_or_else(|| stationary_eta(&c).eta);
    let radii = uniform_grid(grid.r_max, grid.points)?;
    let profile = density_profile(&c, eta, &radii)?;
    match args.output.format.unwrap_or(Format::Csv) {
        Format::Json => Ok(json(&DensityDocument {
            metadata: Metadata::new("density", Some(args)),
            coefficients: c,
            eta,
            theta: ladder_data(&c, eta)?.theta,
            profile,
        })),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = profile
                .radii
                .iter()
                .zip(&profile.density)
                .map(|(r, rho)| vec![g12(*r), g12(*rho)])
                .collect();
            rows.push(vec!["integral".into(), g12(profile.integral)]);
            csv(&["r", "rho"], &rows).map_err(csv_error)
        }
    }
}

#[derive(Debug, Serialize)]
struct VerifyDocument<'a> {
    metadata: Metadata,
    all_exact: bool,
    report: &'a IdentityReport,
}

/// Identity table and the underlying report.
pub fn verify(
    format: Option<Format>,
    convention: SignConvention,
) -> Result<(String, IdentityReport), CliError> {
    let report = verify_identity_suite_with(convention);
    let ok = report.all_exact();
    let text = match format.unwrap_or(Format::Csv) {
        Format::Json => json(&VerifyDocument {
            metadata: Metadata::new("verify", None),
            all_exact: ok,
            report: &report,
        }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    let kind = match c.kind {
                        IdentityKind::Exact => "exact",
                        IdentityKind::Diagnostic => "diagnostic",
                    };
                    let status = if c.passed() { "ok" } else { "FAIL" };
                    vec![
                        c.label.clone(),
                        c.relation.clone(),
                        kind.into(),
                        g12(c.max_deviation),
                        status.into(),
                    ]
                })
                .collect();
            csv(
                &["identity", "relation", "kind", "max_deviation", "status"],
                &rows,
            )
            .map_err(csv_error)?
        }
    };
    Ok((text, report))
}

#[derive(Debug, Serialize)]
struct IntegralsDocument {
    metadata: Metadata,
    rows: Vec<CoefficientRow>,
}

pub fn integrals(format: Option<Format>) -> Result<String, CliError> {
    let rows = coefficient_comparison()?;
    match format.unwrap_or(Format::Csv) {
        Format::Json => Ok(json(&IntegralsDocument {
            metadata: Metadata::new("integrals", None),
            rows,
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        g12(r.paper),
                        g12(r.literal),
                        g12(r.error_estimate),
                        g12(r.ratio),
                        r.sign_mismatch.to_string(),
                    ]
                })
                .collect();
            csv(
                &[
                    "coefficient",
                    "paper",
                    "literal",
                    "error_estimate",
                    "ratio",
                    "sign_mismatch",
                ],
                &rows,
            )
            .map_err(csv_error)
        }
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Usage(format!("csv output: {e}"))
}
