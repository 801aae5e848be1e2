//! Slicings: level sets separating two vertex classes of a 3-complex.
//!
//! Every edge with one endpoint in each class contributes a slicing vertex
//! `(u|w)`, `u ∈ V1`, `w ∈ V2`. Every triangle with vertices in both classes
//! contributes an edge joining its two cut edges. A tetrahedron split 1|3 or
//! 3|1 contributes a triangle, one split 2|2 a quadrilateral.

mod normal;
mod polymap;
mod structure;

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{Face, FaceSet, SimplicialComplex, UnionFind, Vertex};
use crate::error::{Error, Result};
use crate::Rational;

pub use normal::{ArcMismatch, CompatibilityReport, NormalCoordinates};
pub use polymap::PolygonalMap;
pub use structure::{StructureViolation, Trace};

/// Which class of the partition a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    V1,
    V2,
}

/// An ordered pair `(V1, V2)` of disjoint nonempty vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPartition {
    v1: BTreeSet<Vertex>,
    v2: BTreeSet<Vertex>,
}

impl VertexPartition {
    pub fn new(v1: impl IntoIterator<Item = Vertex>, v2: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let v1: BTreeSet<Vertex> = v1.into_iter().collect();
        let v2: BTreeSet<Vertex> = v2.into_iter().collect();
        if v1.is_empty() || v2.is_empty() {
            return Err(Error::InvalidPartition("both parts must be nonempty".into()));
        }
        if let Some(v) = v1.intersection(&v2).next() {
            return Err(Error::InvalidPartition(format!("vertex {v} lies in both parts")));
        }
        Ok(VertexPartition { v1, v2 })
    }

    /// `V1` as given, `V2` the remaining vertices of `complex`.
    pub fn with_complement(complex: &SimplicialComplex, v1: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let v1: BTreeSet<Vertex> = v1.into_iter().collect();
        if let Some(&v) = v1.iter().find(|&&v| !complex.contains_vertex(v)) {
            return Err(Error::UnknownVertex(v));
        }
        let v2 = complex.vertices().iter().copied().filter(|v| !v1.contains(v));
        VertexPartition::new(v1.clone(), v2)
    }

    pub fn v1(&self) -> &BTreeSet<Vertex> {
        &self.v1
    }

    pub fn v2(&self) -> &BTreeSet<Vertex> {
        &self.v2
    }

    pub fn part(&self, side: Side) -> &BTreeSet<Vertex> {
        match side {
            Side::V1 => &self.v1,
            Side::V2 => &self.v2,
        }
    }

    pub fn side(&self, v: Vertex) -> Option<Side> {
        if self.v1.contains(&v) {
            Some(Side::V1)
        } else if self.v2.contains(&v) {
            Some(Side::V2)
        } else {
            None
        }
    }

    /// `c = (|V2| - |V1|) / 2`.
    pub fn balance(&self) -> Rational {
        Rational::new(self.v2.len() as i64 - self.v1.len() as i64, 2)
    }

    /// The same partition with the parts exchanged.
    pub fn swapped(&self) -> Self {
        VertexPartition { v1: self.v2.clone(), v2: self.v1.clone() }
    }

    /// Representative up to complementation: the part holding the smallest label is `V1`.
    pub fn canonical(&self) -> Self {
        if self.v1.first() < self.v2.first() {
            self.clone()
        } else {
            self.swapped()
        }
    }

    fn covers(&self, complex: &SimplicialComplex) -> Result<()> {
        for &v in complex.vertices() {
            if self.side(v).is_none() {
                return Err(Error::InvalidPartition(format!("vertex {v} is in neither part")));
            }
        }
        if let Some(&v) = self.v1.iter().chain(&self.v2).find(|&&v| !complex.contains_vertex(v)) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(())
    }
}

impl fmt::Display for VertexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<Vertex>| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}}|{{{}}}", join(&self.v1), join(&self.v2))
    }
}

/// Slicing vertex `(upper|lower)`: the cut point on the edge `{upper, lower}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlicingVertex {
    pub upper: Vertex,
    pub lower: Vertex,
}

impl SlicingVertex {
    pub fn new(upper: Vertex, lower: Vertex) -> Self {
        SlicingVertex { upper, lower }
    }
}

impl fmt::Display for SlicingVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.upper, self.lower)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FacetKind {
    Triangle,
    Quadrilateral,
}

/// A polygon of the slicing, with its boundary in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlicingFacet {
    pub kind: FacetKind,
    /// Indices into [`Slicing::vertices`].
    pub boundary: Vec<usize>,
    /// Source tetrahedron of the ambient complex.
    pub tetrahedron: Face,
}

/// A slicing `S_(V1,V2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slicing {
    partition: VertexPartition,
    vertices: Vec<SlicingVertex>,
    edges: Vec<[usize; 2]>,
    facets: Vec<SlicingFacet>,
}

/// Counts and topology of a closed slicing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlicingStats {
    pub n: usize,
    pub e: usize,
    pub t: usize,
    pub q: usize,
    pub chi: i64,
    pub orientable: bool,
    /// `(2 - χ) / 2`, used for both orientabilities.
    pub genus: Rational,
    pub components: usize,
    pub vertex_linking_components: usize,
}

impl SlicingStats {
    pub fn f_vector(&self) -> [usize; 4] {
        [self.n, self.e, self.t, self.q]
    }

    pub fn is_connected(&self) -> bool {
        self.components == 1
    }

    /// Number of cross-caps `2 - χ` of a non-orientable surface.
    pub fn nonorientable_genus(&self) -> Option<i64> {
        (!self.orientable).then_some(2 - self.chi)
    }
}

impl Slicing {
    /// Assembles a slicing from explicit parts without checking any of the
    /// structural lemmas; see [`Slicing::validate_structure`].
    pub fn from_raw_parts(
        partition: VertexPartition,
        vertices: Vec<SlicingVertex>,
        edges: Vec<[usize; 2]>,
        facets: Vec<SlicingFacet>,
    ) -> Result<Self> {
        let n = vertices.len();
        let in_range = |i: &usize| *i < n;
        if !edges.iter().flatten().all(in_range) || !facets.iter().flat_map(|f| &f.boundary).all(in_range) {
            return Err(Error::InvalidArgument("slicing index out of range".into()));
        }
        let mut edges: Vec<[usize; 2]> = edges.into_iter().map(|[a, b]| [a.min(b), a.max(b)]).collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(Slicing { partition, vertices, edges, facets })
    }

    pub fn partition(&self) -> &VertexPartition {
        &self.partition
    }

    pub fn vertices(&self) -> &[SlicingVertex] {
        &self.vertices
    }

    /// Sorted index pairs.
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn facets(&self) -> &[SlicingFacet] {
        &self.facets
    }

    pub fn vertex_index(&self, v: SlicingVertex) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&[a.min(b), a.max(b)]).is_ok()
    }

    pub fn num_triangles(&self) -> usize {
        self.facets.iter().filter(|f| f.kind == FacetKind::Triangle).count()
    }

    pub fn num_quadrilaterals(&self) -> usize {
        self.facets.iter().filter(|f| f.kind == FacetKind::Quadrilateral).count()
    }

    /// `(n, e, t, q)`.
    pub fn f_vector(&self) -> [usize; 4] {
        [self.vertices.len(), self.edges.len(), self.num_triangles(), self.num_quadrilaterals()]
    }

    pub fn map(&self) -> PolygonalMap {
        PolygonalMap::new(self.vertices.len(), self.facets.iter().map(|f| f.boundary.clone()).collect())
    }

    /// Every pair of slicing vertices lies in a common facet.
    pub fn is_weakly_neighborly(&self) -> bool {
        self.map().is_weakly_neighborly()
    }

    /// Checks that the edges given equal the facet edges and that each lies in
    /// exactly two facets.
    pub fn check_closed(&self) -> Result<()> {
        let incidences = self.map().edge_incidences();
        for edge in &self.edges {
            let degree = incidences.get(edge).map_or(0, Vec::len);
            if degree != 2 {
                return Err(Error::OpenSlicing { edge: *edge, degree });
            }
        }
        if let Some((edge, list)) = incidences.iter().find(|(e, _)| !self.has_edge(e[0], e[1])) {
            return Err(Error::OpenSlicing { edge: *edge, degree: list.len() });
        }
        Ok(())
    }

    pub fn stats(&self) -> Result<SlicingStats> {
        self.check_closed()?;
        let map = self.map();
        let [n, e, t, q] = self.f_vector();
        let chi = n as i64 - e as i64 + t as i64 + q as i64;
        let mut uf = UnionFind::new(n);
        for &[a, b] in &self.edges {
            uf.union(a, b);
        }
        let components = uf.components();
        let mut vertex_linking_components = 0;
        let roots: BTreeSet<usize> = (0..n).map(|i| uf.find(i)).collect();
        for root in roots {
            let members: Vec<usize> = (0..n).filter(|&i| uf.find(i) == root).collect();
            let only_triangles = self
                .facets
                .iter()
                .filter(|f| uf.find(f.boundary[0]) == root)
                .all(|f| f.kind == FacetKind::Triangle);
            let first = self.vertices[members[0]];
            let same_upper = members.iter().all(|&i| self.vertices[i].upper == first.upper);
            let same_lower = members.iter().all(|&i| self.vertices[i].lower == first.lower);
            if only_triangles && (same_upper || same_lower) {
                vertex_linking_components += 1;
            }
        }
        Ok(SlicingStats {
            n,
            e,
            t,
            q,
            chi,
            orientable: map.orientable().ok_or(Error::NotClosed)?,
            genus: Rational::new(2 - chi, 2),
            components,
            vertex_linking_components,
        })
    }
}

/// Precomputed face data of a 3-complex for slicing many partitions.
#[derive(Clone, Debug)]
pub struct Slicer<'a> {
    complex: &'a SimplicialComplex,
    faces: FaceSet,
    /// Number of tetrahedra containing each triangle, aligned with `faces.faces(2)`.
    triangle_degrees: Vec<usize>,
}

impl<'a> Slicer<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Result<Self> {
        let dim = complex.dimension();
        if dim != 3 {
            return Err(Error::WrongDimension { expected: 3, found: dim });
        }
        let faces = complex.faces();
        let degrees = complex.ridge_degrees();
        let triangle_degrees = faces.faces(2).iter().map(|t| degrees[t]).collect();
        Ok(Slicer { complex, faces, triangle_degrees })
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    /// Induced subcomplex on one part.
    pub fn span(&self, part: &BTreeSet<Vertex>) -> FaceSet {
        self.faces.restrict(part)
    }

    pub fn slice(&self, partition: &VertexPartition) -> Result<Slicing> {
        partition.covers(self.complex)?;
        let in_v1 = |v: &Vertex| partition.v1.contains(v);
        let cut = |a: Vertex, b: Vertex| -> Option<SlicingVertex> {
            match (in_v1(&a), in_v1(&b)) {
                (true, false) => Some(SlicingVertex::new(a, b)),
                (false, true) => Some(SlicingVertex::new(b, a)),
                _ => None,
            }
        };
        let vertices: Vec<SlicingVertex> = self
            .faces
            .faces(1)
            .iter()
            .filter_map(|e| cut(e[0], e[1]))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index = |v: SlicingVertex| vertices.binary_search(&v).expect("cut edge is a slicing vertex");

        let mut edges = Vec::new();
        for (triangle, &degree) in self.faces.faces(2).iter().zip(&self.triangle_degrees) {
            let cuts: Vec<SlicingVertex> = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .filter_map(|&(i, j)| cut(triangle[i], triangle[j]))
                .collect();
            if cuts.is_empty() {
                continue;
            }
            if degree == 1 {
                return Err(Error::MixedBoundaryTriangle(triangle.clone()));
            }
            let (a, b) = (index(cuts[0]), index(cuts[1]));
            edges.push([a.min(b), a.max(b)]);
        }
        edges.sort_unstable();

        let mut facets = Vec::new();
        for tet in self.complex.facets() {
            let (upper, lower): (Vec<Vertex>, Vec<Vertex>) = tet.iter().partition(|v| in_v1(v));
            let (kind, boundary) = match (upper.as_slice(), lower.as_slice()) {
                ([x], [a, b, c]) => (
                    FacetKind::Triangle,
                    vec![(*x, *a), (*x, *b), (*x, *c)],
                ),
                ([x, y, z], [a]) => (
                    FacetKind::Triangle,
                    vec![(*x, *a), (*y, *a), (*z, *a)],
                ),
                ([x, y], [a, b]) => (
                    FacetKind::Quadrilateral,
                    vec![(*x, *a), (*x, *b), (*y, *b), (*y, *a)],
                ),
                _ => continue,
            };
            facets.push(SlicingFacet {
                kind,
                boundary: boundary
                    .into_iter()
                    .map(|(u, w)| index(SlicingVertex::new(u, w)))
                    .collect(),
                tetrahedron: tet.clone(),
            });
        }
        Ok(Slicing { partition: partition.clone(), vertices, edges, facets })
    }

    /// `1 - χ(span(V1))`; see [`genus_via_span`].
    pub fn span_genus(&self, part: &BTreeSet<Vertex>) -> Rational {
        Rational::from_integer(1 - self.span(part).euler_characteristic())
    }
}

/// Builds the slicing of a 3-complex for a vertex partition.
pub fn slice(complex: &SimplicialComplex, partition: &VertexPartition) -> Result<Slicing> {
    Slicer::new(complex)?.slice(partition)
}

/// Genus of a connected slicing of a closed, connected, orientable
/// 3-manifold from the face counts of `span(V1)`: `1 - m + e - t + Δ`.
pub fn genus_via_span(complex: &SimplicialComplex, partition: &VertexPartition) -> Result<Rational> {
    let slicer = Slicer::new(complex)?;
    if !complex.is_closed_pseudomanifold() {
        return Err(Error::NotClosed);
    }
    if !complex.is_connected() {
        return Err(Error::NotConnected);
    }
    if complex.orientability()? != crate::complex::Orientability::Orientable {
        return Err(Error::Precondition("ambient complex is not orientable".into()));
    }
    let slicing = slicer.slice(partition)?;
    if !slicing.stats()?.is_connected() {
        return Err(Error::DisconnectedSlicing);
    }
    Ok(slicer.span_genus(partition.v1()))
}
