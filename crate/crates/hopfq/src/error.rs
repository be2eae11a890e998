//! Library-wide error type.

use thiserror::Error;

/// Everything that can go wrong while building or checking structures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("bad field: {0}")]
    BadField(String),
    #[error("bad scalar: {0}")]
    BadScalar(String),
    #[error("bad space: {0}")]
    BadSpace(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map is not invertible (rank {rank} of {dim})")]
    NotInvertible { rank: usize, dim: usize },
    #[error("map is not idempotent")]
    NotIdempotent,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("morphism is not convolution invertible")]
    NotConvInvertible,
    #[error("only a one-sided convolution inverse exists ({0} check failed)")]
    OneSidedOnly(String),
    #[error("no {side} division exists: {reason}")]
    NoDivision { side: String, reason: String },
    #[error("law {law} failed at basis index {witness}")]
    LawFails { law: String, witness: String },
    #[error("missing {what} on structure {name}")]
    MissingMap { name: String, what: String },
    #[error("{0} is not a valid loop table: {1}")]
    BadLoop(String, String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("functional is not a two-cocycle: {law} fails at {witness}")]
    NotACocycle { law: String, witness: String },
    #[error("two-cocycle is not normal (and auto-normalize is off)")]
    NotNormal,
    #[error("not a skew pairing: {law} fails at {witness}")]
    NotSkewPairing { law: String, witness: String },
    #[error("division-route and solver convolution inverses disagree")]
    InverseMismatch,
    #[error("deformation precursor law {0} fails; auxiliary functionals are undefined")]
    PrecursorLawFails(String),
    #[error("antipode is not invertible, cannot build the requested action")]
    AntipodeNotInvertible,
    #[error("not quasitriangular: {law} fails at {witness}")]
    NotQuasitriangular { law: String, witness: String },
    #[error("module law {law} fails at {witness}")]
    ModuleLawFails { law: String, witness: String },
    #[error("unital-magma compatibility {law} fails at {witness}")]
    RTConditionFails { law: String, witness: String },
    #[error("projection is not strong: {law} fails at {witness}")]
    NotStrong { law: String, witness: String },
    #[error("map is not an isomorphism: {0}")]
    NotIso(String),
    #[error("{name} has not been verified as a {needed}")]
    NotVerified { name: String, needed: String },
    #[error("unknown {kind}: {name}")]
    Unknown { kind: String, name: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
