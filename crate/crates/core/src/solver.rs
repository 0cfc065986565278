//! Stationary occupation, ground-state vector, energy and density of the
//! two-level model, plus diagnostics that compare the occupation-averaged
//! result with the exact 16×16 representation.

use std::f64::consts::PI;

use nalgebra::{Matrix4, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{operator_exponential, FockState, OperatorMatrix, StateVector, DIM};
use crate::integrals::{convert_energy, EnergyUnit, HydrogenicOrbital, ModelCoefficients};
use crate::model::{
    build_hamiltonian, build_phi_tilde, build_psi_tilde, ladder_data, lower_pair_state,
    two_electron_singlet_sector, upper_pair_state, LadderData,
};

/// Quadratic coefficients smaller than this make the energy linear in `η`.
pub const LINEAR_MODEL_THRESHOLD: f64 = 1e-12;

/// A published helium ground-state energy used for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceEnergy {
    pub name: &'static str,
    pub hartree: f64,
    pub citation: &'static str,
}

pub const KOROBOV_REFERENCE: ReferenceEnergy = ReferenceEnergy {
    name: "korobov",
    hartree: -2.90372,
    citation: "V. I. Korobov, Phys. Rev. A 61, 064503 (2000), 5200-function variational",
};
pub const EXPERIMENT_REFERENCE: ReferenceEnergy = ReferenceEnergy {
    name: "experiment",
    hartree: -2.9034,
    citation: "experimental total energy of He as tabulated by Baseden and Tye",
};
pub const HARTREE_FOCK_REFERENCE: ReferenceEnergy = ReferenceEnergy {
    name: "hartree_fock_limit",
    hartree: -2.8617,
    citation: "Hartree-Fock limit for He as tabulated by Baseden and Tye",
};
pub const REFERENCES: [ReferenceEnergy; 3] = [
    KOROBOV_REFERENCE,
    EXPERIMENT_REFERENCE,
    HARTREE_FOCK_REFERENCE,
];

fn check_eta(eta: f64) -> Result<()> {
    if (0.0..=1.0).contains(&eta) {
        Ok(())
    } else {
        Err(Error::EtaOutOfRange(eta))
    }
}

/// `E(η) = 2ε₁+2V₁ + (−2ε₁+2ε₂−4V₁+4U)η + 2(V₁+V₂−2U)η²`, in `e²/a`.
pub fn energy_quadratic(c: &ModelCoefficients, eta: f64) -> Result<f64> {
    check_eta(eta)?;
    Ok(quadratic_unchecked(c, eta))
}

fn quadratic_unchecked(c: &ModelCoefficients, eta: f64) -> f64 {
    let (c0, c1, c2) = quadratic_terms(c);
    c0 + c1 * eta + c2 * eta * eta
}

fn quadratic_terms(c: &ModelCoefficients) -> (f64, f64, f64) {
    (
        2.0 * c.eps1 + 2.0 * c.v1,
        -2.0 * c.eps1 + 2.0 * c.eps2 - 4.0 * c.v1 + 4.0 * c.u,
        2.0 * (c.v1 + c.v2 - 2.0 * c.u),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StationaryPoint {
    pub eta: f64,
    /// The unconstrained root, when the energy is quadratic.
    pub unclamped: Option<f64>,
    /// The root fell outside `[0, 1]` and was clamped.
    pub boundary: bool,
    /// The quadratic coefficient vanished; `eta` is the better endpoint.
    pub linear_model: bool,
    /// `d²E/dη²`; negative means the stationary point is a maximum.
    pub curvature: f64,
}

impl StationaryPoint {
    /// True when `eta` is an interior zero of `dE/dη`.
    pub fn is_interior(&self) -> bool {
        !self.boundary && !self.linear_model
    }
}

/// Stationary point of [`energy_quadratic`] on `[0, 1]`.
pub fn stationary_eta(c: &ModelCoefficients) -> StationaryPoint {
    let (_, linear, quad) = quadratic_terms(c);
    let curvature = 2.0 * quad;
    if (c.v1 + c.v2 - 2.0 * c.u).abs() < LINEAR_MODEL_THRESHOLD {
        let eta = if quadratic_unchecked(c, 1.0) < quadratic_unchecked(c, 0.0) {
            1.0
        } else {
            0.0
        };
        return StationaryPoint {
            eta,
            unclamped: None,
            boundary: true,
            linear_model: true,
            curvature,
        };
    }
    let root =
        (2.0 * c.eps1 - 2.0 * c.eps2 + 4.0 * c.v1 - 4.0 * c.u) / (4.0 * (c.v1 + c.v2 - 2.0 * c.u));
    debug_assert!((root + linear / (2.0 * quad)).abs() <= 1e-9 * (1.0 + root.abs()));
    let eta = root.clamp(0.0, 1.0);
    StationaryPoint {
        eta,
        unclamped: Some(root),
        boundary: eta != root,
        linear_model: false,
        curvature,
    }
}

/// `cos θ |d₁⟩ − sin θ |d₂⟩`.
pub fn pair_rotation(theta: f64) -> StateVector {
    StateVector::basis(lower_pair_state()).scale(theta.cos())
        - StateVector::basis(upper_pair_state()).scale(theta.sin())
}

/// `exp[−θ(ψ̃† − ψ̃)] c†₁↑c†₁↓|0⟩` through the matrix exponential.
///
/// The scalar shifts in `ψ₋ = ψ̃ + Λ₋` cancel in `ψ₋† − ψ₋`, so the
/// generator is built from `ψ̃` alone.
pub fn ground_state_vector(c: &ModelCoefficients, eta: f64) -> Result<StateVector> {
    let ladder = ladder_data(c, eta)?;
    rotated_pair_state(ladder.theta)
}

fn rotated_pair_state(theta: f64) -> Result<StateVector> {
    let psi = build_psi_tilde();
    let generator = (psi.adjoint() - psi).scale(-theta);
    Ok(operator_exponential(&generator)?.apply(&StateVector::basis(lower_pair_state())))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroundEnergies {
    /// Full functional including `−Ū(Λ₊+Λ₋)`, in `e²/a`.
    pub full: f64,
    /// Quadratic form without the `Λ` term, in `e²/a`.
    pub quadratic: f64,
    /// `−Ū(Λ₊+Λ₋)`.
    pub lambda_term: f64,
}

pub fn ground_energy(c: &ModelCoefficients, eta: f64) -> Result<GroundEnergies> {
    let ladder = ladder_data(c, eta)?;
    Ok(energies_from(c, &ladder))
}

fn energies_from(c: &ModelCoefficients, l: &LadderData) -> GroundEnergies {
    let eta = l.eta;
    let lambda_term = -c.ubar * (l.lambda_plus + l.lambda_minus);
    let occupied = 2.0 * (1.0 - eta) * c.eps1
        + 2.0 * eta * c.eps2
        + 2.0 * c.v1 * (1.0 - eta).powi(2)
        + 2.0 * c.v2 * eta * eta
        + 4.0 * c.u * eta * (1.0 - eta);
    GroundEnergies {
        full: occupied + lambda_term,
        quadratic: quadratic_unchecked(c, eta),
        lambda_term,
    }
}

/// `‖(ψ̃ + Λ₋)|g⟩‖`, how far the constructed state is from being
/// annihilated by the exact lowering operator.
pub fn residual_norm(c: &ModelCoefficients, eta: f64) -> Result<f64> {
    let ladder = ladder_data(c, eta)?;
    let g = rotated_pair_state(ladder.theta)?;
    Ok(residual_for(&ladder, &g))
}

fn residual_for(ladder: &LadderData, g: &StateVector) -> f64 {
    let lowering = build_psi_tilde() + OperatorMatrix::identity().scale(ladder.lambda_minus);
    lowering.apply(g).norm()
}

/// Eigenvalues of `H` on the N = 2, S_z = 0 sector, ascending, in `e²/a`.
pub fn exact_sector_spectrum(c: &ModelCoefficients) -> [f64; 4] {
    let h = build_hamiltonian(c);
    let sector = two_electron_singlet_sector();
    let block = Matrix4::from_fn(|i, j| h.get(sector[i], sector[j]));
    let mut values: [f64; 4] = SymmetricEigen::new(block).eigenvalues.into();
    values.sort_by(f64::total_cmp);
    values
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialDensityProfile {
    /// Radii in units of `a`.
    pub radii: Vec<f64>,
    /// Electron density in `a⁻³`.
    pub density: Vec<f64>,
    /// Trapezoid estimate of `∫ ρ 4πr² dr`.
    pub integral: f64,
}

/// Uniform radial grid `0, …, r_max` with `points` nodes.
pub fn uniform_grid(r_max: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidGrid(format!(
            "need at least 2 points, got {points}"
        )));
    }
    if r_max <= 0.0 || !r_max.is_finite() {
        return Err(Error::InvalidGrid(format!(
            "r_max must be positive, got {r_max}"
        )));
    }
    let step = r_max / (points - 1) as f64;
    Ok((0..points).map(|i| i as f64 * step).collect())
}

/// `ρ(r) = 2cos²θ |u₁ₛ(r)|² + 2sin²θ |u₂ₛ(r)|²` on `grid`.
pub fn density_profile(
    c: &ModelCoefficients,
    eta: f64,
    grid: &[f64],
) -> Result<RadialDensityProfile> {
    if grid.len() < 2 {
        return Err(Error::InvalidGrid("need at least 2 points".into()));
    }
    if grid[0] < 0.0 || grid.iter().any(|r| !r.is_finite()) || grid.windows(2).any(|w| w[1] <= w[0])
    {
        return Err(Error::InvalidGrid(
            "radii must be non-negative and strictly increasing".into(),
        ));
    }
    let theta = ladder_data(c, eta)?.theta;
    let (w1, w2) = (2.0 * theta.cos().powi(2), 2.0 * theta.sin().powi(2));
    let density: Vec<f64> = grid
        .iter()
        .map(|&r| {
            let u1 = HydrogenicOrbital::OneS.amplitude(r)?;
            let u2 = HydrogenicOrbital::TwoS.amplitude(r)?;
            Ok(w1 * u1 * u1 + w2 * u2 * u2)
        })
        .collect::<Result<_>>()?;
    let shell = |i: usize| 4.0 * PI * grid[i] * grid[i] * density[i];
    let integral = (1..grid.len())
        .map(|i| 0.5 * (grid[i] - grid[i - 1]) * (shell(i) + shell(i - 1)))
        .sum();
    Ok(RadialDensityProfile {
        radii: grid.to_vec(),
        density,
        integral,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyValues {
    pub e2a: f64,
    pub hartree: f64,
    pub ev: f64,
}

impl EnergyValues {
    pub fn from_e2a(x: f64) -> Self {
        EnergyValues {
            e2a: x,
            hartree: convert_energy(x, EnergyUnit::E2a, EnergyUnit::Hartree),
            ev: convert_energy(x, EnergyUnit::E2a, EnergyUnit::Ev),
        }
    }

    pub fn get(&self, unit: EnergyUnit) -> f64 {
        match unit {
            EnergyUnit::E2a => self.e2a,
            EnergyUnit::Hartree => self.hartree,
            EnergyUnit::Ev => self.ev,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceDelta {
    pub name: String,
    pub reference_hartree: f64,
    /// `E − E_ref` in hartree.
    pub difference_hartree: f64,
    /// `|E − E_ref| / |E_ref|`.
    pub relative_deviation: f64,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroundStateReport {
    pub eta_star: f64,
    /// `eta_star` is the stationary point rather than a forced value.
    pub stationary: bool,
    pub stationary_point: StationaryPoint,
    pub energy: EnergyValues,
    pub energy_quadratic: EnergyValues,
    /// `−Ū(Λ₊+Λ₋)` in `e²/a`.
    pub lambda_term: f64,
    pub ladder: LadderData,
    pub theta: f64,
    pub state: Vec<f64>,
    pub residual_norm: f64,
    /// Lowest-first eigenvalues of `H` on the N = 2, S_z = 0 sector, `e²/a`.
    pub exact_sector_spectrum: [f64; 4],
    /// `⟨g|H|g⟩` with the exact matrix, `e²/a`. Diagnostic only.
    pub exact_expectation: f64,
    /// `‖φ̃|g⟩‖ + ‖φ̃†|g⟩‖`.
    pub phi_action_norm: f64,
    pub reference_deltas: Vec<ReferenceDelta>,
}

/// Full pipeline at the stationary `η`.
pub fn solve(c: &ModelCoefficients) -> Result<GroundStateReport> {
    solve_at(c, None)
}

/// Full pipeline, optionally at a forced `η`.
pub fn solve_at(c: &ModelCoefficients, eta_override: Option<f64>) -> Result<GroundStateReport> {
    if !c.is_finite() {
        return Err(Error::NonFinite("model coefficients"));
    }
    let stationary_point = stationary_eta(c);
    let eta = match eta_override {
        Some(eta) => {
            check_eta(eta)?;
            eta
        }
        None => stationary_point.eta,
    };
    let ladder = ladder_data(c, eta)?;
    let energies = energies_from(c, &ladder);
    let g = rotated_pair_state(ladder.theta)?;
    let residual = residual_for(&ladder, &g);
    let h = build_hamiltonian(c);
    let exact_expectation = g.dot(&h.apply(&g));
    let phi = build_phi_tilde();
    let phi_action_norm = phi.apply(&g).norm() + phi.adjoint().apply(&g).norm();

    let energy = EnergyValues::from_e2a(energies.full);
    let reference_deltas = REFERENCES
        .iter()
        .map(|r| ReferenceDelta {
            name: r.name.to_string(),
            reference_hartree: r.hartree,
            difference_hartree: energy.hartree - r.hartree,
            relative_deviation: (energy.hartree - r.hartree).abs() / r.hartree.abs(),
            citation: r.citation.to_string(),
        })
        .collect();

    Ok(GroundStateReport {
        eta_star: eta,
        stationary: eta_override.is_none(),
        stationary_point,
        energy,
        energy_quadratic: EnergyValues::from_e2a(energies.quadratic),
        lambda_term: energies.lambda_term,
        ladder,
        theta: ladder.theta,
        state: g.amplitudes().to_vec(),
        residual_norm: residual,
        exact_sector_spectrum: exact_sector_spectrum(c),
        exact_expectation,
        phi_action_norm,
        reference_deltas,
    })
}

impl GroundStateReport {
    pub fn state_vector(&self) -> StateVector {
        let mut a = [0.0; DIM];
        a.copy_from_slice(&self.state);
        StateVector::from_amplitudes(a)
    }

    pub fn reference(&self, name: &str) -> Option<&ReferenceDelta> {
        self.reference_deltas.iter().find(|r| r.name == name)
    }
}

/// Basis states carrying nonzero amplitude in `v`.
pub fn support(v: &StateVector) -> Vec<FockState> {
    FockState::all()
        .filter(|s| v.amplitude(*s) != 0.0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::paper_coefficients;

    #[test]
    fn quadratic_endpoints_and_published_value() {
        let c = paper_coefficients();
        assert_eq!(energy_quadratic(&c, 0.0).unwrap(), -6.0);
        assert_eq!(energy_quadratic(&c, 1.0).unwrap(), -1.5);
        assert!((energy_quadratic(&c, 0.91515).unwrap() + 1.4610).abs() < 5e-5);
    }

    #[test]
    fn stationary_eta_cases() {
        let p = stationary_eta(&paper_coefficients());
        assert!((p.eta - 0.91515).abs() < 1e-5);
        assert!(p.is_interior());
        assert!(p.curvature < 0.0);

        let free = ModelCoefficients::new(-1.0, -0.25, 0.0, 0.0, 0.0, 0.0);
        let p = stationary_eta(&free);
        assert_eq!(p.eta, 0.0);
        assert!(p.linear_model);

        let clamped = ModelCoefficients::new(-1.0, -0.25, 0.1, 0.1, 0.0, 0.0);
        let p = stationary_eta(&clamped);
        assert!(p.boundary && !p.linear_model);
        assert!(p.unclamped.unwrap() < 0.0);
        assert_eq!(p.eta, 0.0);

        // V1 + V2 - 2U = 0 with negative slope
        let flat = ModelCoefficients::new(0.0, -1.0, 0.5, 0.5, 0.5, 0.0);
        let p = stationary_eta(&flat);
        assert!(p.linear_model);
        assert_eq!(p.eta, 1.0);
    }

    #[test]
    fn no_exchange_means_no_rotation() {
        let c = ModelCoefficients {
            ubar: 0.0,
            ..paper_coefficients()
        };
        let g = ground_state_vector(&c, 0.3).unwrap();
        assert_eq!(g, StateVector::basis(lower_pair_state()));
        assert_eq!(residual_norm(&c, 0.3).unwrap(), 0.0);
        for eta in [0.0, 0.2, 0.77, 1.0] {
            let e = ground_energy(&c, eta).unwrap();
            assert_eq!(e.lambda_term, 0.0);
            assert!((e.full - e.quadratic).abs() < 1e-14);
        }
    }

    #[test]
    fn helium_ground_state_amplitudes() {
        let c = paper_coefficients();
        let eta = stationary_eta(&c).eta;
        let g = ground_state_vector(&c, eta).unwrap();
        let theta = ladder_data(&c, eta).unwrap().theta;
        assert!((theta - 0.0040496).abs() < 1e-7);
        assert!(g.max_abs_diff(&pair_rotation(theta)) < 1e-10);
        assert_eq!(support(&g).len(), 2);
    }

    #[test]
    fn energies_agree_only_at_stationarity() {
        let c = paper_coefficients();
        let eta = stationary_eta(&c).eta;
        let e = ground_energy(&c, eta).unwrap();
        assert!((e.full + 1.46098).abs() < 1e-5);
        assert!((e.full - e.quadratic).abs() < 1e-9);
        let off = ground_energy(&c, 0.8).unwrap();
        assert!((off.full - off.quadratic).abs() > 1e-7);
        assert!((off.full - off.quadratic - off.lambda_term).abs() < 1e-14);
    }

    #[test]
    fn residual_at_helium_solution() {
        let c = paper_coefficients();
        let r = residual_norm(&c, stationary_eta(&c).eta).unwrap();
        assert!((r - 0.0069).abs() < 1e-3, "{r}");
    }

    #[test]
    fn residual_shrinks_with_exchange() {
        let base = paper_coefficients();
        let eta = stationary_eta(&base).eta;
        let mut last = f64::INFINITY;
        for k in 0..=10 {
            let c = ModelCoefficients {
                ubar: base.ubar * (10 - k) as f64 / 10.0,
                ..base
            };
            let r = residual_norm(&c, eta).unwrap();
            assert!(r < last || r == 0.0);
            last = r;
        }
        assert_eq!(last, 0.0);
    }

    #[test]
    fn sector_spectrum_cases() {
        let c = ModelCoefficients {
            ubar: 0.0,
            ..paper_coefficients()
        };
        let mut expected = [
            2.0 * c.eps1 + c.v1,
            c.eps1 + c.eps2 + c.u,
            c.eps1 + c.eps2 + c.u,
            2.0 * c.eps2 + c.v2,
        ];
        expected.sort_by(f64::total_cmp);
        let got = exact_sector_spectrum(&c);
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() < 1e-12);
        }
        // singly-excited pair decouples; the d1/d2 block [[2e1+V1, Ub], [Ub, 2e2+V2]]
        let c = paper_coefficients();
        let (a, d) = (2.0 * c.eps1 + c.v1, 2.0 * c.eps2 + c.v2);
        let block_min = 0.5 * (a + d) - (0.25 * (a - d).powi(2) + c.ubar * c.ubar).sqrt();
        let lowest = exact_sector_spectrum(&c)[0];
        assert!((lowest - block_min).abs() < 1e-12, "{lowest}");
        assert!((lowest + 4.0).abs() < 1e-3);
    }

    #[test]
    fn density_normalization_and_origin() {
        let c = paper_coefficients();
        let eta = stationary_eta(&c).eta;
        let grid = uniform_grid(40.0, 2000).unwrap();
        let p = density_profile(&c, eta, &grid).unwrap();
        assert!((p.integral - 2.0).abs() < 1e-6, "{}", p.integral);
        assert!(p.density.iter().all(|&x| x >= 0.0));
        let theta = ladder_data(&c, eta).unwrap().theta;
        let origin = 2.0 * theta.cos().powi(2) / PI + theta.sin().powi(2) / (4.0 * PI);
        assert!((p.density[0] - origin).abs() < 1e-15);
    }

    #[test]
    fn density_rejects_bad_grid() {
        let c = paper_coefficients();
        assert!(matches!(
            density_profile(&c, 0.9, &[0.0, 1.0, 1.0]),
            Err(Error::InvalidGrid(_))
        ));
        assert!(matches!(
            density_profile(&c, 0.9, &[-1.0, 1.0]),
            Err(Error::InvalidGrid(_))
        ));
        assert!(uniform_grid(0.0, 10).is_err());
        assert!(uniform_grid(10.0, 1).is_err());
    }

    #[test]
    fn solve_helium() {
        let r = solve(&paper_coefficients()).unwrap();
        assert!((r.eta_star - 0.91515).abs() < 1e-5);
        assert!((r.energy.hartree + 2.9220).abs() < 5e-4);
        assert!((r.energy.ev + 79.51).abs() < 0.02);
        let k = r.reference("korobov").unwrap();
        assert!((k.relative_deviation - 0.0063).abs() < 3e-4);
        assert!(r.phi_action_norm == 0.0);
        assert!(r.stationary);
    }

    #[test]
    fn solve_all_zero() {
        let r = solve(&ModelCoefficients::zero()).unwrap();
        assert_eq!(r.energy.e2a, 0.0);
        assert!(r.stationary_point.linear_model);
    }

    #[test]
    fn solve_with_forced_eta() {
        let r = solve_at(&paper_coefficients(), Some(0.5)).unwrap();
        assert!(!r.stationary);
        assert_eq!(r.eta_star, 0.5);
        assert!(solve_at(&paper_coefficients(), Some(-0.1)).is_err());
    }
}
