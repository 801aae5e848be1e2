use crate::complex::{Face, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("complex has no facets")]
    EmptyComplex,
    #[error("vertex labels must be positive integers, found 0 in facet {0:?}")]
    ZeroLabel(Face),
    #[error("facet {0:?} repeats a vertex")]
    RepeatedVertex(Face),
    #[error("complex is not pure: facet {facet:?} has {found} vertices, expected {expected}")]
    NotPure {
        facet: Face,
        expected: usize,
        found: usize,
    },
    #[error("duplicate facet {0:?}")]
    DuplicateFacet(Face),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("operation requires dimension {expected}, complex has dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("complex is not a closed pseudomanifold")]
    NotClosed,
    #[error("complex is not connected")]
    NotConnected,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("slicing meets the boundary of the complex in triangle {0:?}")]
    MixedBoundaryTriangle(Face),
    #[error("slicing is not a closed surface: edge {edge:?} lies in {degree} facets")]
    OpenSlicing { edge: [usize; 2], degree: usize },
    #[error("slicing is disconnected")]
    DisconnectedSlicing,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("label {label} is outside the permutation domain 1..={degree}")]
    LabelOutOfRange { label: Vertex, degree: usize },
    #[error("orbit of {seed:?} has length {found}, expected {expected}")]
    OrbitLength {
        seed: Face,
        expected: usize,
        found: usize,
    },
    #[error("unknown builtin complex '{0}'")]
    UnknownBuiltin(String),
    #[error("builtin '{name}' failed verification: {reason}")]
    BuiltinVerification { name: String, reason: String },
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("search specification out of range: {0}")]
    SpecOutOfRange(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
