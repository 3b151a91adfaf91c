use thiserror::Error;

use crate::oracle::VerifyReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad rational {0:?}: expected \"p/q\"")]
    BadRational(String),
    #[error("arc of vertex {0:?} spans the full circle")]
    FullCircleArc(String),
    #[error("arc of vertex {0:?} is a single point")]
    PointArc(String),
    #[error("family has {0} arcs; at least 2 are required")]
    DegenerateFamily(usize),
    #[error("{vertices} vertex labels but {arcs} arcs")]
    LengthMismatch { vertices: usize, arcs: usize },
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("alpha must be at least 2, got {0}")]
    BadAlpha(usize),
    #[error("point lies on a half-axis")]
    OnAxis,
    #[error("arc meets no half-axis")]
    EmptyInterception,
    #[error("arc endpoints are not pairwise distinct")]
    CoincidentEndpoints,
    #[error("start point coincides with an arc endpoint")]
    StartOnEndpoint,
    #[error("every point of the circle is covered")]
    CircleCovered,
    #[error("max degree {delta} is not below floor(n(alpha-1)/(2 alpha)) = {bound}")]
    DegreeTooHigh { delta: usize, bound: usize },
    #[error("family is not normalized for alpha = {0}")]
    NotNormalized(usize),
    #[error("circular cover number {0} is at most 4")]
    CoverTooSmall(usize),
    #[error("no third point with an overlap set disjoint from the first two")]
    NoThirdPoint,
    #[error("dimension {0} out of range")]
    BadDimension(usize),
    #[error("vertex sets of representation and graph differ")]
    VertexMismatch,
    #[error("graph too large for the oracle: {0}")]
    TooLarge(String),
    #[error("n = {0} must be even")]
    OddN(usize),
    #[error("n = {0} is too small")]
    TooFewVertices(usize),
    #[error("n = {n} must be a multiple of {modulus} and at least {min}")]
    BadDivisibility {
        n: usize,
        modulus: usize,
        min: usize,
    },
    #[error("max_len must lie strictly between 0 and 1")]
    BadLength,
    #[error("unknown method {0:?}")]
    UnknownMethod(String),
    #[error("dimension {0} is not a supergraph of the target graph")]
    NotSupergraph(usize),
    #[error("built representation does not realize the graph: {0:?}")]
    VerificationFailed(Box<VerifyReport>),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Whether this error means a builder produced a wrong representation.
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, Error::VerificationFailed(_) | Error::NotSupergraph(_))
    }
}
