use thiserror::Error;

use crate::alcove::Weight;
use crate::multiplicity::Triple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("triple {0} is not admissible")]
    NotAdmissible(Triple),

    #[error("weight {weight} is not integrable at level {level}")]
    NotIntegrable { weight: Weight, level: u32 },

    #[error("affine weight ({l0},{l1},{l2}) is not integrable at level {level}")]
    NotIntegrableAffine {
        level: u32,
        l0: i64,
        l1: i64,
        l2: i64,
    },

    #[error("Ψ undefined on this triple: {0}")]
    PsiUndefined(Triple),

    #[error("invalid O-blade {coords:?}: {reason}")]
    InvalidOBlade {
        coords: [i64; 7],
        reason: &'static str,
    },

    #[error("ρ-shift precondition violated: {0}")]
    RhoShiftPrecondition(String),

    #[error("unsupported diagram: {0}")]
    UnsupportedDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
