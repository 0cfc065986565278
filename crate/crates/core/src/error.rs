use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("radius must be non-negative, got {0}")]
    NegativeRadius(f64),

    #[error("occupation parameter eta must lie in [0, 1], got {0}")]
    EtaOutOfRange(f64),

    #[error("degenerate denominator: {quantity} = {value:e} (e^2/a)")]
    DegenerateDenominator { quantity: &'static str, value: f64 },

    #[error("quadrature for {integral} did not converge: error estimate {estimate:e} exceeds {tolerance:e}")]
    QuadratureNotConverged {
        integral: String,
        estimate: f64,
        tolerance: f64,
    },

    #[error("unknown energy unit `{0}`")]
    UnknownUnit(String),

    #[error("invalid radial grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
