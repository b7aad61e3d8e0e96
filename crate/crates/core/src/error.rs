use std::path::PathBuf;

use crate::spatial::MatrixKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("expected a {expected} matrix, got a {found} matrix")]
    KindMismatch { expected: MatrixKind, found: MatrixKind },

    #[error("matrix is singular or ill-conditioned (condition number {condition:.3e})")]
    Singular { condition: f64 },

    #[error("invalid placement: {0}")]
    InvalidPlacement(String),

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid material: {0}")]
    InvalidMaterial(String),

    #[error("{0} is outside the domain: {1}")]
    OutOfDomain(&'static str, String),

    #[error("adaptive quadrature did not converge (residual estimate {residual:.3e})")]
    Quadrature { residual: f64 },

    #[error("unavailable: {0}")]
    Unavailable(String),

    #[error("invalid mechanism: {0}")]
    InvalidMechanism(String),

    #[error("no finite rotation center (C53 vanishes)")]
    NoRotationCenter,

    #[error("ideal four-bar center at infinity (leg axes are parallel)")]
    CenterAtInfinity,

    #[error("direction `{0}` has no analytic counterpart")]
    NoAnalyticCounterpart(String),

    #[error("invalid samples: {0}")]
    InvalidSamples(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("{origin}:{line}: {field}: {message}")]
    Parse {
        origin: String,
        line: usize,
        field: String,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(
        origin: &str,
        line: usize,
        field: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Error::Parse {
            origin: origin.to_string(),
            line,
            field: field.into(),
            message: message.into(),
        }
    }

    /// True for failures of the numerics rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Singular { .. }
                | Error::Quadrature { .. }
                | Error::NoRotationCenter
                | Error::CenterAtInfinity
        )
    }
}
