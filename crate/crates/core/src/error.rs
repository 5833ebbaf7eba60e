use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("family {family} requires {expected} length, got {len}")]
    WrongParity {
        family: String,
        expected: &'static str,
        len: usize,
    },

    #[error("{word} is not a member of {family}")]
    NotMember { family: String, word: String },

    #[error("enumeration budget exceeded: carrier {required} exceeds bound {bound}")]
    BudgetExceeded { bound: String, required: String },

    #[error("series constant term must be 1")]
    NonUnitConstant,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("not gamma-decomposable in the (t, 1+yt) basis: remainder {0}")]
    NotGammaDecomposable(String),

    #[error("unknown catalog entry `{name}`; valid names: {valid}")]
    UnknownCatalog { name: String, valid: String },

    #[error("invalid path diagram: {0}")]
    InvalidDiagram(String),

    #[error("pair {r} of {word} is not free")]
    NotFree { r: usize, word: String },

    #[error("value {x} is not applicable to {word}: {reason}")]
    NotApplicable { x: usize, word: String, reason: String },

    #[error("reconstruction in case {case} for {word} found {solutions} solutions")]
    Reconstruction {
        case: String,
        word: String,
        solutions: usize,
    },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
