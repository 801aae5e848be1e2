//! Slicings of combinatorial 3-manifolds.
//!
//! A partition of the vertex set of a triangulated 3-manifold into two parts
//! determines a level set of any simplexwise linear function separating the
//! parts. That level set is a polyhedral surface made of triangles and
//! quadrilaterals, one piece per tetrahedron it meets. This crate builds such
//! surfaces, computes their invariants, evaluates the known inequalities
//! relating genus to the number of quadrilaterals and enumerates all
//! slicings of small complexes.
//!
//! Module map:
//!
//! - [`complex`]: pure simplicial complexes, faces, links, spans, homology.
//! - [`constructors`]: permutation orbits, cyclic polytopes, built-in complexes.
//! - [`slicing`]: slicing construction, statistics, traces, normal coordinates.
//! - [`bounds`]: exact evaluation of the genus/quadrilateral inequalities.
//! - [`search`]: exhaustive enumeration and classification.
//! - [`io`]: facet-list documents, OFF export and report rendering.

pub mod bounds;
pub mod complex;
pub mod constructors;
mod error;
pub mod io;
mod orient;
mod rank;
pub mod search;
pub mod slicing;

pub use bounds::{AmbientProfile, BoundRecord, BoundReport, Verdict};
pub use complex::{BettiVector, FVector, Face, FaceSet, SimplicialComplex, Vertex};
pub use constructors::{Builtin, OrbitSpec, Permutation};
pub use error::{Error, Result};
pub use search::{SearchEntry, SearchResult, SearchSpec};
pub use slicing::{
    PolygonalMap, Slicer, Slicing, SlicingStats, SlicingVertex, VertexPartition,
};

/// Exact rational used for genus values and bound evaluation.
pub type Rational = num_rational::Rational64;
