//! Traces of ambient vertices and the local structure of slicings.

use std::collections::BTreeSet;

use super::{FacetKind, Side, Slicing, SlicingVertex};
use crate::complex::Vertex;
use crate::error::{Error, Result};

/// The trace `C^x` (or `C_x`) of an ambient vertex: the closure of the slicing
/// triangles and edges all of whose vertices have `x` as upper (lower) entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub vertex: Vertex,
    pub side: Side,
    /// Slicing vertex indices covered by the trace edges, sorted.
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    /// Indices of triangle facets inside the trace.
    pub triangles: Vec<usize>,
    /// Slicing vertices carrying `x` that lie on no trace edge (`C_0^x`).
    pub isolated: Vec<usize>,
}

impl Trace {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.isolated.is_empty()
    }
}

/// A violated local structure property of a slicing.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StructureViolation {
    /// An edge `((x|a), (y|b))` with `x ≠ y` and `a ≠ b`.
    #[error("edge {0}-{1} joins vertices sharing neither entry")]
    EdgeEntries(SlicingVertex, SlicingVertex),
    #[error("facet {facet} does not have the form of a slicing triangle or quadrilateral")]
    FacetForm { facet: usize },
    /// A quadrilateral sharing other than exactly one edge with a trace.
    #[error("quadrilateral {facet} shares {shared} edges with the trace of {vertex}")]
    QuadrilateralTrace { facet: usize, vertex: Vertex, side: Side, shared: usize },
}

impl Slicing {
    pub fn trace(&self, x: Vertex) -> Result<Trace> {
        let side = self.partition.side(x).ok_or(Error::UnknownVertex(x))?;
        let carries = |v: &SlicingVertex| match side {
            Side::V1 => v.upper == x,
            Side::V2 => v.lower == x,
        };
        let members: Vec<usize> = (0..self.vertices.len()).filter(|&i| carries(&self.vertices[i])).collect();
        let edges: Vec<[usize; 2]> = self
            .edges
            .iter()
            .copied()
            .filter(|e| e.iter().all(|&i| carries(&self.vertices[i])))
            .collect();
        let triangles = self
            .facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.kind == FacetKind::Triangle && f.boundary.iter().all(|&i| carries(&self.vertices[i])))
            .map(|(i, _)| i)
            .collect();
        let covered: BTreeSet<usize> = edges.iter().flatten().copied().collect();
        let isolated = members.into_iter().filter(|i| !covered.contains(i)).collect();
        Ok(Trace { vertex: x, side, vertices: covered.into_iter().collect(), edges, triangles, isolated })
    }

    /// Checks the local structure every slicing has: edges join vertices
    /// sharing an entry, facets have one of the three admissible forms and
    /// each quadrilateral meets each of its four traces in exactly one edge.
    pub fn validate_structure(&self) -> std::result::Result<(), StructureViolation> {
        let v = |i: usize| self.vertices[i];
        for &[a, b] in &self.edges {
            let (p, q) = (v(a), v(b));
            if (p.upper == q.upper) == (p.lower == q.lower) {
                return Err(StructureViolation::EdgeEntries(p, q));
            }
        }
        for (index, facet) in self.facets.iter().enumerate() {
            let labels: Vec<SlicingVertex> = facet.boundary.iter().map(|&i| v(i)).collect();
            let uppers: BTreeSet<Vertex> = labels.iter().map(|l| l.upper).collect();
            let lowers: BTreeSet<Vertex> = labels.iter().map(|l| l.lower).collect();
            let distinct: BTreeSet<SlicingVertex> = labels.iter().copied().collect();
            let well_formed = match facet.kind {
                FacetKind::Triangle => {
                    labels.len() == 3
                        && distinct.len() == 3
                        && (uppers.len() == 1 || lowers.len() == 1)
                }
                FacetKind::Quadrilateral => {
                    labels.len() == 4
                        && distinct.len() == 4
                        && uppers.len() == 2
                        && lowers.len() == 2
                        && (0..4).all(|i| {
                            let (p, q) = (labels[i], labels[(i + 1) % 4]);
                            (p.upper == q.upper) != (p.lower == q.lower)
                        })
                }
            };
            if !well_formed {
                return Err(StructureViolation::FacetForm { facet: index });
            }
            if facet.kind == FacetKind::Quadrilateral {
                let sides = uppers
                    .iter()
                    .map(|&x| (x, Side::V1))
                    .chain(lowers.iter().map(|&a| (a, Side::V2)));
                for (vertex, side) in sides {
                    let carries = |l: SlicingVertex| match side {
                        Side::V1 => l.upper == vertex,
                        Side::V2 => l.lower == vertex,
                    };
                    let shared = (0..4)
                        .filter(|&i| {
                            let (a, b) = (facet.boundary[i], facet.boundary[(i + 1) % 4]);
                            carries(v(a)) && carries(v(b)) && self.has_edge(a, b)
                        })
                        .count();
                    if shared != 1 {
                        return Err(StructureViolation::QuadrilateralTrace { facet: index, vertex, side, shared });
                    }
                }
            }
        }
        Ok(())
    }
}
