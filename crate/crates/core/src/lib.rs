//! Ladder-operator ground state of two-level systems of interacting
//! electrons, built on an exact 16-state fermionic Fock space and applied
//! to the helium atom in a hydrogenic 1s/2s basis.

pub mod error;
pub mod fock;
pub mod integrals;
pub mod model;
pub mod solver;

pub use error::{Error, Result};
pub use fock::{FockState, OperatorMatrix, SignConvention, SpinOrbital, StateVector};
pub use integrals::{paper_coefficients, quadrature_coefficients, EnergyUnit, ModelCoefficients};
pub use model::{ladder_data, verify_identity_suite, LadderData};
pub use solver::{solve, solve_at, GroundStateReport};
