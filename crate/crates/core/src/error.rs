use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
    #[error("triple is not primitive")]
    NotPrimitive,
    #[error("values do not satisfy a^2 + b^2 = c^2")]
    NotATriple,
    #[error("progression degenerates to a zero first term")]
    DegenerateProgression,
    #[error("m + n + p + q must be odd")]
    InvalidParity,
    #[error("quadruple degenerates to d = 0")]
    DegenerateQuadruple,
    #[error("sides violate the strict triangle inequality")]
    DegenerateTriangle,
    #[error("witness does not satisfy u^2 = m^2 + n^2 + v^2 with m, n, v >= 1")]
    InvalidWitness,
}

impl Error {
    /// Stable kebab-case code for machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParams(_) => "invalid-params",
            Error::NotPrimitive => "not-primitive",
            Error::NotATriple => "not-a-triple",
            Error::DegenerateProgression => "degenerate-progression",
            Error::InvalidParity => "invalid-parity",
            Error::DegenerateQuadruple => "degenerate-quadruple",
            Error::DegenerateTriangle => "degenerate-triangle",
            Error::InvalidWitness => "invalid-witness",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
