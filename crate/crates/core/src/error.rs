use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation is not a bijection of 0..{degree}: {images:?}")]
    InvalidPermutation { degree: usize, images: Vec<usize> },
    #[error("group closure exceeded the order cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("the given member set is not a subgroup: {reason}")]
    NotASubgroup { reason: String },
    #[error("subgroups are not nested: |I| = {sub}, |J| = {sup}")]
    NotNested { sub: usize, sup: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },
    #[error("group action violation at pair ({g}, {h}): {reason}")]
    ActionViolation { g: usize, h: usize, reason: String },
    #[error("ring axiom violation: {0}")]
    RingViolation(String),
    #[error("values belong to different groups or subgroups")]
    GroupMismatch,
    #[error("morphisms belong to different category contexts")]
    ContextMismatch,
    #[error("morphism support leaves the designated subgroup (element index {element})")]
    SupportViolation { element: usize },
    #[error("representative systems are incompatible: {0}")]
    IncompatibleRepSystems(String),
    #[error("family is not closed: {0}")]
    FamilyNotClosed(String),
    #[error("integrality violation in Burnside product (implementation bug): {0}")]
    IntegralityViolation(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid input: {0}")]
    InputError(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
