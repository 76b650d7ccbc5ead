use num_bigint::BigInt;
use thiserror::Error;

use crate::mcg::BoundaryData;
use crate::system::{CycleSystem, Move};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("({p},{q}) is not primitive, so it is not the class of a simple closed curve")]
    NonPrimitive { p: BigInt, q: BigInt },

    #[error("matrix {0} does not have determinant 1")]
    NotUnimodular(String),

    #[error("the boundary vanishing cycle must be an essential curve")]
    TrivialBoundary,

    #[error("monodromy {monodromy} is not of the form +/-A^k about the boundary curve")]
    NotTwistPower { monodromy: String },

    #[error("index {index} out of range for a system with {len} cycles")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("normalization exceeded its budget of {budget} search nodes")]
    BudgetExceeded { budget: usize, partial: Box<PartialNormalization> },

    #[error("no equivalence found up to depth {depth}")]
    NotFound { depth: usize },

    #[error("normal form with ks = {ks:?} has no adjacent difference in {{1,2,3}}")]
    MissingReduciblePair { ks: Vec<BigInt> },

    #[error("cycle {index} is neither null-homotopic nor parallel to the boundary")]
    NotBlowdownable { index: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("the pair at {index} has no third cycle after it")]
    NoThirdCycle { index: usize },

    #[error("summand {0} cannot occur over an S1xS3 base")]
    UnexpectedSummand(String),

    #[error("unsupported construction target: {0}")]
    UnsupportedTarget(String),

    #[error("invalid cycle system: {0}")]
    InvalidSystem(String),

    #[error("internal audit failure at {step}: predicted {predicted}, recomputed {actual}")]
    InternalAuditFailure {
        step: String,
        predicted: String,
        actual: String,
    },
}

/// Best state reached by a normalization that ran out of budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialNormalization {
    pub moves: Vec<Move>,
    pub system: CycleSystem,
}

impl Error {
    pub(crate) fn audit(step: &str, predicted: &BoundaryData, actual: impl ToString) -> Self {
        Error::InternalAuditFailure {
            step: step.to_string(),
            predicted: predicted.to_string(),
            actual: actual.to_string(),
        }
    }
}
