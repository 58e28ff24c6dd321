use thiserror::Error;

use crate::axioms::AxiomError;
use crate::bipolar_ops::OpsError;
use crate::io::IoError;
use crate::model::ModelError;
use crate::unipolar::IntegralError;

/// Any error surfaced by the command line.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Integral(#[from] IntegralError),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error(transparent)]
    Ops(#[from] OpsError),
}

impl Error {
    /// 1 for parse, validation and usage errors, 2 for dimension or scale
    /// errors, 3 for internal consistency failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Model(_) | Error::Ops(_) => 1,
            Error::Io(IoError::ScaleViolation { .. }) => 2,
            Error::Io(_) => 1,
            Error::Integral(e) | Error::Axiom(AxiomError::Integral(e)) => integral_code(e),
            Error::Axiom(_) => 1,
        }
    }
}

fn integral_code(e: &IntegralError) -> i32 {
    match e {
        IntegralError::LinkViolation { .. } => 3,
        _ => 2,
    }
}
