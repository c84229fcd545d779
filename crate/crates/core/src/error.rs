use thiserror::Error;

use crate::complex::VertexLabel;

/// Everything that can go wrong in the library. Contract violations are
/// reported here; a failed verification is a report outcome, not an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex {0} in ground set")]
    DuplicateVertex(VertexLabel),
    #[error("facet vertex {0} is not in the ground set")]
    FacetOutsideGround(VertexLabel),
    #[error("vertex {0} is not in the ground set")]
    VertexNotInGround(VertexLabel),
    #[error("a complex needs at least one face (use [[]] for the empty complex)")]
    VoidComplex,
    #[error("barycenter label must name a nonempty set of distinct vertices")]
    BadBarycenter,
    #[error("apex {0} already belongs to the ground set")]
    ApexCollision(VertexLabel),
    #[error("full simplex has no Alexander dual")]
    FullSimplexInput,
    #[error("complex has ghost vertex {0}")]
    GhostVertexInput(VertexLabel),
    #[error("ground set of {0} vertices is too large for subset enumeration (max 63)")]
    GroundTooLarge(usize),
    #[error("permutohedron needs n >= 2, got {0}")]
    BadDimension(usize),
    #[error("{0:?} is not a proper nonempty subset of [{1}]")]
    ImproperSubset(Vec<usize>, usize),
    #[error("Rado bound vector must be strictly increasing")]
    NonIncreasingB,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("covector {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("vector {0:?} does not lie in the hyperplane of the covector")]
    NotInHyperplane(Vec<String>),
    #[error("nerve vertex {0} has no characteristic vector")]
    MissingLambda(VertexLabel),
    #[error("characteristic vectors are not a lattice basis at facet {0:?}")]
    StarConditionViolated(Vec<VertexLabel>),
    #[error("{0:?} is not a facet of the nerve")]
    NotAFacet(Vec<VertexLabel>),
    #[error("orbit-space hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
