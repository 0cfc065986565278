//! Hydrogenic 1s/2s orbitals and the two-electron Coulomb integrals of the
//! two-level model.
//!
//! Lengths are measured in `a = ħ²/(2me²)` (half the Bohr radius) and
//! energies in `e²/a`, which makes the helium coefficients rational.
//! Two coefficient sets are provided: the published closed-form values
//! ([`paper_coefficients`]) and the literal integrals evaluated by radial
//! quadrature ([`quadrature_coefficients`]). They do not agree; see
//! [`coefficient_comparison`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Radial cutoff of the quadrature, in units of `a`.
pub const QUADRATURE_RADIUS: f64 = 60.0;
/// Gauss–Legendre nodes per radial dimension.
pub const QUADRATURE_NODES: usize = 400;
/// Relative error accepted from the grid-doubling estimate.
pub const QUADRATURE_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HydrogenicOrbital {
    OneS,
    TwoS,
}

impl HydrogenicOrbital {
    /// Radial amplitude at `r` (units of `a`), in `a^(-3/2)`.
    pub fn amplitude(self, r: f64) -> Result<f64> {
        if r < 0.0 || r.is_nan() {
            return Err(Error::NegativeRadius(r));
        }
        Ok(self.amplitude_unchecked(r))
    }

    fn amplitude_unchecked(self, r: f64) -> f64 {
        match self {
            HydrogenicOrbital::OneS => (-r).exp() / PI.sqrt(),
            HydrogenicOrbital::TwoS => {
                (1.0 - 0.5 * r) * (-0.5 * r).exp() / (2.0 * (2.0 * PI).sqrt())
            }
        }
    }

    /// One-electron energy in `e²/a`: `-1` for 1s, `-1/4` for 2s.
    pub fn energy(self) -> f64 {
        match self {
            HydrogenicOrbital::OneS => -1.0,
            HydrogenicOrbital::TwoS => -0.25,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            HydrogenicOrbital::OneS => "1s",
            HydrogenicOrbital::TwoS => "2s",
        }
    }
}

pub fn orbital_amplitude(orb: HydrogenicOrbital, r: f64) -> Result<f64> {
    orb.amplitude(r)
}

/// Scalar inputs of the two-level Hamiltonian, all in `e²/a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelCoefficients {
    pub eps1: f64,
    pub eps2: f64,
    #[serde(rename = "V1")]
    pub v1: f64,
    #[serde(rename = "V2")]
    pub v2: f64,
    #[serde(rename = "U")]
    pub u: f64,
    #[serde(rename = "Ubar")]
    pub ubar: f64,
}

impl ModelCoefficients {
    pub fn new(eps1: f64, eps2: f64, v1: f64, v2: f64, u: f64, ubar: f64) -> Self {
        ModelCoefficients {
            eps1,
            eps2,
            v1,
            v2,
            u,
            ubar,
        }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.values().iter().all(|(_, x)| x.is_finite())
    }

    /// Copy with every two-body coefficient (`V₁, V₂, U, Ū`) multiplied by
    /// `factor`; one-body energies unchanged.
    pub fn with_interactions_scaled(&self, factor: f64) -> Self {
        ModelCoefficients {
            v1: self.v1 * factor,
            v2: self.v2 * factor,
            u: self.u * factor,
            ubar: self.ubar * factor,
            ..*self
        }
    }

    /// `(name, value)` pairs in canonical order.
    pub fn values(&self) -> [(&'static str, f64); 6] {
        [
            ("eps1", self.eps1),
            ("eps2", self.eps2),
            ("V1", self.v1),
            ("V2", self.v2),
            ("U", self.u),
            ("Ubar", self.ubar),
        ]
    }
}

/// Published helium coefficients, exact rationals in `e²/a`.
pub fn paper_coefficients() -> ModelCoefficients {
    ModelCoefficients::new(-1.0, -0.25, -2.0, -0.5, 17.0 / 162.0, 8.0 / 729.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnergyUnit {
    /// `e²/a`, the working unit.
    E2a,
    Hartree,
    #[serde(rename = "ev")]
    Ev,
}

/// Hartree per `e²/a`; exact because `a` is half the Bohr radius.
pub const HARTREE_PER_E2A: f64 = 2.0;
pub const EV_PER_HARTREE: f64 = 27.211;

impl EnergyUnit {
    /// Size of one unit in `e²/a`.
    fn in_e2a(self) -> f64 {
        match self {
            EnergyUnit::E2a => 1.0,
            EnergyUnit::Hartree => 1.0 / HARTREE_PER_E2A,
            EnergyUnit::Ev => 1.0 / (HARTREE_PER_E2A * EV_PER_HARTREE),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            EnergyUnit::E2a => "e2a",
            EnergyUnit::Hartree => "hartree",
            EnergyUnit::Ev => "ev",
        }
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e2a" | "e^2/a" | "e2/a" | "gauss" => Ok(EnergyUnit::E2a),
            "hartree" | "au" | "a.u." | "ha" => Ok(EnergyUnit::Hartree),
            "ev" => Ok(EnergyUnit::Ev),
            _ => Err(Error::UnknownUnit(s.to_string())),
        }
    }
}

pub fn convert_energy(x: f64, from: EnergyUnit, to: EnergyUnit) -> f64 {
    if from == to {
        return x;
    }
    match (from, to) {
        (EnergyUnit::E2a, EnergyUnit::Hartree) => x * HARTREE_PER_E2A,
        (EnergyUnit::Hartree, EnergyUnit::E2a) => x / HARTREE_PER_E2A,
        (EnergyUnit::Hartree, EnergyUnit::Ev) => x * EV_PER_HARTREE,
        (EnergyUnit::Ev, EnergyUnit::Hartree) => x / EV_PER_HARTREE,
        _ => x * from.in_e2a() / to.in_e2a(),
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let half = n.div_ceil(2);
        for i in 0..half {
            // Tricomi initial guess, then Newton on P_n.
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            weights[i] = w;
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫ₐᵇ f` with the rule mapped onto `[a, b]`.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum();
        half * sum
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// A quadrature value together with its grid-doubling error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
}

/// `∫∫ 4πr² f(r) · 4πr'² g(r') / max(r, r') dr dr'` over `[0, R]²`.
///
/// This is the s-wave reduction of `∫∫ f(r) g(r') / |r − r'| d³r d³r'`.
/// The outer integral uses `n` nodes; for each outer node the inner
/// integral is split at the diagonal into `[0, r]` and `[r, R]`, each with
/// `n` nodes, so the kink of `1/max(r, r')` never falls inside a panel.
pub fn radial_coulomb(
    rule: &GaussLegendre,
    radius: f64,
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
) -> f64 {
    let shell = |h: &dyn Fn(f64) -> f64, r: f64| 4.0 * PI * r * r * h(r);
    rule.integrate(0.0, radius, |r| {
        if r == 0.0 {
            return 0.0;
        }
        let inside = rule.integrate(0.0, r, |rp| shell(&g, rp)) / r;
        let outside = rule.integrate(r, radius, |rp| shell(&g, rp) / rp);
        shell(&f, r) * (inside + outside)
    })
}

fn converged(
    label: String,
    f: impl Fn(f64) -> f64 + Copy,
    g: impl Fn(f64) -> f64 + Copy,
) -> Result<QuadratureResult> {
    let coarse = radial_coulomb(
        &GaussLegendre::new(QUADRATURE_NODES),
        QUADRATURE_RADIUS,
        f,
        g,
    );
    let fine = radial_coulomb(
        &GaussLegendre::new(2 * QUADRATURE_NODES),
        QUADRATURE_RADIUS,
        f,
        g,
    );
    let estimate = (fine - coarse).abs();
    let tolerance = QUADRATURE_REL_TOL * coarse.abs();
    if !coarse.is_finite() || !fine.is_finite() || estimate > tolerance {
        return Err(Error::QuadratureNotConverged {
            integral: label,
            estimate,
            tolerance,
        });
    }
    Ok(QuadratureResult {
        value: coarse,
        error_estimate: estimate,
    })
}

/// Direct Coulomb integral `∫∫ |u_a(r)|² |u_b(r')|² / |r − r'|` in `e²/a`.
pub fn coulomb_direct(a: HydrogenicOrbital, b: HydrogenicOrbital) -> Result<QuadratureResult> {
    converged(
        format!("direct({}, {})", a.label(), b.label()),
        move |r| a.amplitude_unchecked(r).powi(2),
        move |r| b.amplitude_unchecked(r).powi(2),
    )
}

/// Exchange integral `∫∫ u_a(r) u_b(r') / |r − r'| · u_a(r') u_b(r)` in `e²/a`.
pub fn coulomb_exchange(a: HydrogenicOrbital, b: HydrogenicOrbital) -> Result<QuadratureResult> {
    let pair = move |r: f64| a.amplitude_unchecked(r) * b.amplitude_unchecked(r);
    converged(
        format!("exchange({}, {})", a.label(), b.label()),
        pair,
        pair,
    )
}

/// `∫ 4πr² u_a(r) u_b(r) dr`, the radial overlap of two s orbitals.
pub fn orbital_overlap(a: HydrogenicOrbital, b: HydrogenicOrbital) -> f64 {
    GaussLegendre::new(QUADRATURE_NODES).integrate(0.0, QUADRATURE_RADIUS, |r| {
        4.0 * PI * r * r * a.amplitude_unchecked(r) * b.amplitude_unchecked(r)
    })
}

/// Coefficients from the literal integrals, with per-integral error estimates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureCoefficients {
    pub coefficients: ModelCoefficients,
    pub v1: QuadratureResult,
    pub v2: QuadratureResult,
    pub u: QuadratureResult,
    pub ubar: QuadratureResult,
}

impl QuadratureCoefficients {
    pub fn error_estimate(&self, name: &str) -> f64 {
        match name {
            "V1" => self.v1.error_estimate,
            "V2" => self.v2.error_estimate,
            "U" => self.u.error_estimate,
            "Ubar" => self.ubar.error_estimate,
            _ => 0.0,
        }
    }
}

pub fn quadrature_coefficients() -> Result<QuadratureCoefficients> {
    use HydrogenicOrbital::{OneS, TwoS};
    let v1 = coulomb_direct(OneS, OneS)?;
    let v2 = coulomb_direct(TwoS, TwoS)?;
    let u = coulomb_direct(OneS, TwoS)?;
    let ubar = coulomb_exchange(OneS, TwoS)?;
    Ok(QuadratureCoefficients {
        coefficients: ModelCoefficients::new(
            OneS.energy(),
            TwoS.energy(),
            v1.value,
            v2.value,
            u.value,
            ubar.value,
        ),
        v1,
        v2,
        u,
        ubar,
    })
}

/// One row of the published-vs-literal coefficient table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub name: String,
    pub paper: f64,
    pub literal: f64,
    pub error_estimate: f64,
    /// `paper / literal`.
    pub ratio: f64,
    pub sign_mismatch: bool,
}

/// Side-by-side comparison of the published and literal coefficients.
pub fn coefficient_comparison() -> Result<Vec<CoefficientRow>> {
    let literal = quadrature_coefficients()?;
    let rows = paper_coefficients()
        .values()
        .into_iter()
        .zip(literal.coefficients.values())
        .map(|((name, paper), (_, lit))| CoefficientRow {
            name: name.to_string(),
            paper,
            literal: lit,
            error_estimate: literal.error_estimate(name),
            ratio: paper / lit,
            sign_mismatch: paper.signum() != lit.signum(),
        })
        .collect();
    Ok(rows)
}
