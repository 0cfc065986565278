//! Fermionic creation/annihilation operators on the 16-state Fock space of
//! four spin-orbitals.
//!
//! Modes are ordered `1↑ → 0, 1↓ → 1, 2↑ → 2, 2↓ → 3`. A basis state is a
//! 4-bit occupation mask; the creation operator for mode `k` carries the
//! Jordan–Wigner sign `(-1)^(number of occupied modes with index < k)`.
//! All operators are dense real 16×16 matrices. Products of the ±1/0
//! ladder matrices stay small integers, so identities built from them are
//! checked for exact equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{SMatrix, SVector};

use crate::error::{Error, Result};

/// Number of spin-orbitals (modes).
pub const NUM_MODES: usize = 4;
/// Dimension of the Fock space, `2^NUM_MODES`.
pub const DIM: usize = 1 << NUM_MODES;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

/// One of the two retained energy levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    One,
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinOrbital {
    pub level: Level,
    pub spin: Spin,
}

impl SpinOrbital {
    pub const ONE_UP: SpinOrbital = SpinOrbital::new(Level::One, Spin::Up);
    pub const ONE_DOWN: SpinOrbital = SpinOrbital::new(Level::One, Spin::Down);
    pub const TWO_UP: SpinOrbital = SpinOrbital::new(Level::Two, Spin::Up);
    pub const TWO_DOWN: SpinOrbital = SpinOrbital::new(Level::Two, Spin::Down);

    /// All four spin-orbitals in mode order.
    pub const ALL: [SpinOrbital; NUM_MODES] =
        [Self::ONE_UP, Self::ONE_DOWN, Self::TWO_UP, Self::TWO_DOWN];

    pub const fn new(level: Level, spin: Spin) -> Self {
        SpinOrbital { level, spin }
    }

    /// Mode index in `0..4`: `1↑ → 0, 1↓ → 1, 2↑ → 2, 2↓ → 3`.
    pub const fn mode_index(self) -> usize {
        let level = match self.level {
            Level::One => 0,
            Level::Two => 2,
        };
        let spin = match self.spin {
            Spin::Up => 0,
            Spin::Down => 1,
        };
        level + spin
    }

    pub fn from_mode_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }
}

impl fmt::Display for SpinOrbital {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.level {
            Level::One => 1,
            Level::Two => 2,
        };
        let spin = match self.spin {
            Spin::Up => '↑',
            Spin::Down => '↓',
        };
        write!(f, "{level}{spin}")
    }
}

/// Free-function form of [`SpinOrbital::mode_index`].
pub fn mode_index(orb: SpinOrbital) -> usize {
    orb.mode_index()
}

/// Occupation-number basis state; bit `b` is set iff mode `b` is occupied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockState(u8);

impl FockState {
    pub const VACUUM: FockState = FockState(0);

    pub fn new(mask: u8) -> Option<Self> {
        (usize::from(mask) < DIM).then_some(FockState(mask))
    }

    pub fn from_orbitals(orbs: &[SpinOrbital]) -> Self {
        FockState(orbs.iter().fold(0u8, |m, o| m | (1 << o.mode_index())))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        usize::from(self.0)
    }

    pub fn is_occupied(self, orb: SpinOrbital) -> bool {
        self.0 & (1 << orb.mode_index()) != 0
    }

    pub fn particle_number(self) -> u32 {
        self.0.count_ones()
    }

    /// Twice the total `S_z`, so that it stays an integer.
    pub fn twice_sz(self) -> i32 {
        let up = (self.0 & 0b0101).count_ones() as i32;
        let down = (self.0 & 0b1010).count_ones() as i32;
        up - down
    }

    pub fn all() -> impl Iterator<Item = FockState> {
        (0..DIM as u8).map(FockState)
    }
}

/// Fermion sign rule used to build the ladder matrices.
///
/// `Ignored` drops the Jordan–Wigner string. It exists only as a negative
/// control: with it the canonical anticommutators fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    #[default]
    JordanWigner,
    Ignored,
}

type Mat16 = SMatrix<f64, DIM, DIM>;
type Vec16 = SVector<f64, DIM>;

/// Dense real operator on the 16-dimensional Fock space.
#[derive(Clone, Copy, PartialEq)]
pub struct OperatorMatrix(Mat16);

impl OperatorMatrix {
    pub fn zeros() -> Self {
        OperatorMatrix(Mat16::zeros())
    }

    pub fn identity() -> Self {
        OperatorMatrix(Mat16::identity())
    }

    pub fn from_matrix(m: SMatrix<f64, DIM, DIM>) -> Self {
        OperatorMatrix(m)
    }

    pub fn from_fn(f: impl FnMut(usize, usize) -> f64) -> Self {
        OperatorMatrix(Mat16::from_fn(f))
    }

    pub fn as_matrix(&self) -> &SMatrix<f64, DIM, DIM> {
        &self.0
    }

    pub fn get(&self, row: FockState, col: FockState) -> f64 {
        self.0[(row.index(), col.index())]
    }

    /// Matrix element `⟨bra|A|ket⟩` between basis states.
    pub fn element(&self, bra: FockState, ket: FockState) -> f64 {
        self.get(bra, ket)
    }

    pub fn adjoint(&self) -> Self {
        OperatorMatrix(self.0.transpose())
    }

    pub fn scale(&self, factor: f64) -> Self {
        OperatorMatrix(self.0 * factor)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    pub fn is_symmetric(&self) -> bool {
        self.0 == self.0.transpose()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &OperatorMatrix) -> f64 {
        (self.0 - other.0)
            .iter()
            .fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    /// Induced 1-norm (maximum absolute column sum).
    pub fn norm_one(&self) -> f64 {
        self.0
            .column_iter()
            .map(|c| c.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        StateVector(self.0 * v.0)
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorMatrix{}", self.0)
    }
}

impl Add for OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix(self.0 + rhs.0)
    }
}

impl Sub for OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix(self.0 - rhs.0)
    }
}

impl Mul for OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix(self.0 * rhs.0)
    }
}

impl Mul<OperatorMatrix> for f64 {
    type Output = OperatorMatrix;
    fn mul(self, rhs: OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix(rhs.0 * self)
    }
}

impl Neg for OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        OperatorMatrix(-self.0)
    }
}

/// Real amplitudes over the 16 basis states.
#[derive(Clone, Copy, PartialEq)]
pub struct StateVector(Vec16);

impl StateVector {
    pub fn zeros() -> Self {
        StateVector(Vec16::zeros())
    }

    pub fn basis(state: FockState) -> Self {
        let mut v = Vec16::zeros();
        v[state.index()] = 1.0;
        StateVector(v)
    }

    pub fn from_amplitudes(amplitudes: [f64; DIM]) -> Self {
        StateVector(Vec16::from_column_slice(&amplitudes))
    }

    pub fn amplitude(&self, state: FockState) -> f64 {
        self.0[state.index()]
    }

    pub fn amplitudes(&self) -> [f64; DIM] {
        let mut out = [0.0; DIM];
        out.copy_from_slice(self.0.as_slice());
        out
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn dot(&self, other: &StateVector) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn scale(&self, factor: f64) -> Self {
        StateVector(self.0 * factor)
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        (self.0 - other.0)
            .iter()
            .fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() <= 1e-12
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Add for StateVector {
    type Output = StateVector;
    fn add(self, rhs: StateVector) -> StateVector {
        StateVector(self.0 + rhs.0)
    }
}

impl Sub for StateVector {
    type Output = StateVector;
    fn sub(self, rhs: StateVector) -> StateVector {
        StateVector(self.0 - rhs.0)
    }
}

impl Neg for StateVector {
    type Output = StateVector;
    fn neg(self) -> StateVector {
        StateVector(-self.0)
    }
}

/// `c†ₖ` under the Jordan–Wigner convention.
pub fn creation_matrix(orb: SpinOrbital) -> OperatorMatrix {
    creation_matrix_with(orb, SignConvention::JordanWigner)
}

pub fn creation_matrix_with(orb: SpinOrbital, convention: SignConvention) -> OperatorMatrix {
    let k = orb.mode_index();
    let bit = 1u8 << k;
    let mut m = Mat16::zeros();
    for s in FockState::all() {
        let mask = s.mask();
        if mask & bit != 0 {
            continue;
        }
        let sign = match convention {
            SignConvention::JordanWigner if (mask & (bit - 1)).count_ones() % 2 == 1 => -1.0,
            _ => 1.0,
        };
        m[(usize::from(mask | bit), usize::from(mask))] = sign;
    }
    OperatorMatrix(m)
}

/// `cₖ`, the transpose of [`creation_matrix`].
pub fn annihilation_matrix(orb: SpinOrbital) -> OperatorMatrix {
    creation_matrix(orb).adjoint()
}

pub fn annihilation_matrix_with(orb: SpinOrbital, convention: SignConvention) -> OperatorMatrix {
    creation_matrix_with(orb, convention).adjoint()
}

/// `nₖ = c†ₖ cₖ`.
pub fn number_operator(orb: SpinOrbital) -> OperatorMatrix {
    let c = creation_matrix(orb);
    c * c.adjoint()
}

/// Total particle number `N = Σ nₖ`.
pub fn total_number_operator() -> OperatorMatrix {
    SpinOrbital::ALL
        .iter()
        .fold(OperatorMatrix::zeros(), |acc, &o| acc + number_operator(o))
}

/// Twice the total `S_z`: `n₁↑ + n₂↑ − n₁↓ − n₂↓`.
pub fn twice_sz_operator() -> OperatorMatrix {
    number_operator(SpinOrbital::ONE_UP) + number_operator(SpinOrbital::TWO_UP)
        - number_operator(SpinOrbital::ONE_DOWN)
        - number_operator(SpinOrbital::TWO_DOWN)
}

/// `[A, B] = AB − BA`.
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> OperatorMatrix {
    *a * *b - *b * *a
}

/// `{A, B} = AB + BA`.
pub fn anticommutator(a: &OperatorMatrix, b: &OperatorMatrix) -> OperatorMatrix {
    *a * *b + *b * *a
}

pub fn apply(a: &OperatorMatrix, v: &StateVector) -> StateVector {
    a.apply(v)
}

/// Product `c†_{o₁} c†_{o₂} … |0⟩`, the rightmost operator acting first.
pub fn create_on_vacuum(orbs: &[SpinOrbital]) -> StateVector {
    orbs.iter()
        .rev()
        .fold(StateVector::basis(FockState::VACUUM), |v, &o| {
            creation_matrix(o).apply(&v)
        })
}

const TAYLOR_TERMS: usize = 18;
const SCALING_THRESHOLD: f64 = 0.5;

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
///
/// The input is scaled by `2^-s` until its 1-norm is at most 1/2, the
/// series is summed to 18 terms (remainder below `1e-22` relative), then
/// the result is squared `s` times.
pub fn operator_exponential(a: &OperatorMatrix) -> Result<OperatorMatrix> {
    if !a.is_finite() {
        return Err(Error::NonFinite("operator exponential input"));
    }
    let norm = a.norm_one();
    let squarings = if norm > SCALING_THRESHOLD {
        (norm / SCALING_THRESHOLD).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a.0 * 2f64.powi(-squarings);

    let mut term = Mat16::identity();
    let mut sum = Mat16::identity();
    for k in 1..=TAYLOR_TERMS {
        term = term * scaled / k as f64;
        sum += term;
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    Ok(OperatorMatrix(sum))
}
