//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by complex construction, ideal arithmetic, the Koszul
/// engine and the file layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("empty input: at least one facet/generator is required")]
    EmptyInput,

    #[error("facets are not an antichain: {0} is contained in {1}")]
    NotAntichain(String, String),

    #[error("vertex universe of size {0} exceeds the supported capacity of {cap}", cap = crate::vset::MAX_VERTICES)]
    CapacityExceeded(usize),

    #[error("universe vertex {0:?} does not occur in any facet")]
    UnusedVertex(String),

    #[error("{0} is not a facet of the complex")]
    NotAFacet(String),

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("colon ideal is the unit ideal")]
    UnitColon,

    #[error("the unit ideal has no minimal free resolution data")]
    UnitIdeal,

    #[error("generators do not all have the same degree")]
    MixedDegrees,

    #[error("order is not a permutation of the generator indices")]
    BadOrder,

    #[error("chain is not a Koszul cycle")]
    NotACycle,

    #[error("invalid Koszul chain: {0}")]
    InvalidChain(String),

    #[error("complex is not a forest")]
    NotAForest,

    #[error("complex is not a tree")]
    NotATree,

    #[error("complex is not a linear tree")]
    NotLinearTree,

    #[error("{0} is not an adjacent face")]
    NotAdjacentFace(String),

    #[error("vertex name {0:?} is already in use")]
    VertexClash(String),

    #[error("generator retry budget exceeded")]
    GenerationExhausted,

    #[error("parse error on line {line}: {msg}")]
    ParseError { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
