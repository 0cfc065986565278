use thiserror::Error;

pub const EXIT_IDENTITY_FAILURE: u8 = 1;
pub const EXIT_DEGENERATE: u8 = 2;
pub const EXIT_QUADRATURE: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0} identities failed")]
    IdentityFailure(usize),

    #[error(transparent)]
    Model(#[from] ladder_core::Error),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use ladder_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::IdentityFailure(_) => EXIT_IDENTITY_FAILURE,
            CliError::Model(e) => match e {
                E::QuadratureNotConverged { .. } => EXIT_QUADRATURE,
                E::DegenerateDenominator { .. } | E::NonFinite(_) => EXIT_DEGENERATE,
                E::NegativeRadius(_)
                | E::EtaOutOfRange(_)
                | E::UnknownUnit(_)
                | E::InvalidGrid(_) => EXIT_USAGE,
            },
        }
    }
}
