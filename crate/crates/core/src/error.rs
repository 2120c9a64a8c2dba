use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("face tracing violates Euler's formula: V - E + F = {0}")]
    NonPlanarEmbedding(i64),
    #[error("degenerate geometry at vertex {vertex}: {reason}")]
    DegenerateGeometry { vertex: i64, reason: String },
    #[error("not in generic position: {0}")]
    NonGenericPosition(String),
    #[error("self-loop on edge {0}")]
    SelfLoop(i64),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown vertex id {0}")]
    UnknownVertex(i64),
    #[error("unknown edge id {0}")]
    UnknownEdge(i64),
    #[error("duplicate id {0}")]
    DuplicateId(i64),
    #[error("loop is not simple")]
    NotSimpleLoop,
    #[error("loop is not closed or has a broken step")]
    BrokenLoop,
    #[error("polygonal path has a horizontal step at position {0}")]
    HorizontalStep(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("matrix is too large for the pairing expansion ({0} > 8)")]
    TooLarge(usize),
    #[error("exterior power degree {k} outside 0..={max}")]
    BadK { k: usize, max: usize },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("complex matrix is not unitary")]
    NotUnitary,
    #[error("point ({0}, {1}) is not on the unit circle")]
    NotOnCircle(String, String),
    #[error("edge matrices do not commute on edge {0}")]
    NonCommuting(i64),
    #[error("invalid annulus cut: {0}")]
    InvalidCut(String),
    #[error("an odd number of faces was marked")]
    OddMarking,
    #[error("malformed multiweb: {0}")]
    MalformedWeb(String),
    #[error("operation requires rank {expected}, got {got}")]
    WrongRank { expected: usize, got: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("identity violated: left = {left}, right = {right}")]
    IdentityViolated { left: String, right: String },
    #[error("value {0} outside [-1, 1]")]
    OutOfRange(f64),
    #[error("division by zero")]
    DivByZero,
    #[error("ill-conditioned system (condition estimate {0:e})")]
    IllConditioned(f64),
    #[error("inexact division in an exact ring")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no face has boundary vertices {0}")]
    NoSuchFace(String),
    #[error("unknown face {0}")]
    UnknownFace(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
