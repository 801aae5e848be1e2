//! Pure simplicial complexes given by their facets.
//!
//! Faces are sorted vertex tuples. Labels are arbitrary positive integers and
//! are preserved exactly as given. A [`SimplicialComplex`] is pure; induced
//! subcomplexes and other possibly non-pure face collections are represented
//! by [`FaceSet`], which is always closed under taking faces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::orient;
use crate::rank::{self, SparseRow};

pub type Vertex = u32;
pub type Face = Vec<Vertex>;

/// Face counts `f_0, ..., f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// Number of `i`-dimensional faces, zero beyond the top dimension.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.0)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Ranks of rational homology `β_0, ..., β_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.0)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

fn write_tuple(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

/// `C(n, k)` on machine integers.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A face-closed collection of simplices, stored by dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceSet {
    by_dim: Vec<Vec<Face>>,
}

impl FaceSet {
    /// Closes the given faces under taking nonempty subsets.
    pub fn closure<'a, I>(generators: I) -> Self
    where
        I: IntoIterator<Item = &'a [Vertex]>,
    {
        let mut by_dim: Vec<BTreeSet<Face>> = Vec::new();
        for face in generators {
            let len = face.len();
            assert!(len < 32, "faces with more than 31 vertices are not supported");
            if by_dim.len() < len {
                by_dim.resize_with(len, BTreeSet::new);
            }
            for mask in 1u32..(1u32 << len) {
                let sub: Face = (0..len)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| face[i])
                    .collect();
                by_dim[sub.len() - 1].insert(sub);
            }
        }
        FaceSet {
            by_dim: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// Largest face dimension, `None` for the empty set.
    pub fn dimension(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// Sorted faces of dimension `dim`.
    pub fn faces(&self, dim: usize) -> &[Face] {
        self.by_dim.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Face> {
        self.by_dim.iter().flatten()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.faces(0).iter().map(|f| f[0]).collect()
    }

    pub fn contains(&self, face: &[Vertex]) -> bool {
        match face.len() {
            0 => false,
            n => self
                .faces(n - 1)
                .binary_search_by(|f| f.as_slice().cmp(face))
                .is_ok(),
        }
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.by_dim.iter().map(Vec::len).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Induced subcomplex on `vertices`: all faces whose vertices lie in the set.
    pub fn restrict(&self, vertices: &BTreeSet<Vertex>) -> FaceSet {
        let mut by_dim: Vec<Vec<Face>> = self
            .by_dim
            .iter()
            .map(|faces| {
                faces
                    .iter()
                    .filter(|f| f.iter().all(|v| vertices.contains(v)))
                    .cloned()
                    .collect()
            })
            .collect();
        while by_dim.last().is_some_and(Vec::is_empty) {
            by_dim.pop();
        }
        FaceSet { by_dim }
    }

    /// Rational Betti numbers from exact ranks of the boundary matrices.
    pub fn betti_numbers(&self) -> BettiVector {
        let top = self.by_dim.len();
        // ranks[k] = rank of the boundary map from k-chains to (k-1)-chains.
        let mut ranks = vec![0usize; top + 1];
        for (k, r) in ranks.iter_mut().enumerate().take(top).skip(1) {
            *r = rank::rank(&self.boundary_rows(k));
        }
        BettiVector(
            (0..top)
                .map(|k| self.by_dim[k].len() - ranks[k] - ranks[k + 1])
                .collect(),
        )
    }

    /// One sparse row per `k`-face, columns indexed by `(k-1)`-faces.
    fn boundary_rows(&self, k: usize) -> Vec<SparseRow> {
        let lower = &self.by_dim[k - 1];
        self.by_dim[k]
            .iter()
            .map(|face| {
                let mut row: SparseRow = (0..face.len())
                    .map(|i| {
                        let mut facet = face.clone();
                        facet.remove(i);
                        let col = lower
                            .binary_search(&facet)
                            .expect("face set is closed under subsets");
                        (col, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect()
    }
}

/// Result of propagating a coherent orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

/// Coarse classification of a dimension-3 complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ManifoldVerdict {
    /// Closed combinatorial 3-manifold: every link is a 2-sphere.
    Closed,
    /// Combinatorial 3-manifold with boundary: interior links are spheres,
    /// boundary links are disks.
    Bounded,
    /// Closed pseudomanifold whose links are closed connected surfaces, not all spheres.
    PseudomanifoldOnly,
    No,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkDefect {
    NotSurface,
    Disconnected,
    /// Closed link surface with the given Euler characteristic (not 2).
    ClosedEuler(i64),
    /// Link with boundary whose Euler characteristic is not 1.
    BoundaryEuler(i64),
}

/// Names the face or vertex that decides a non-`Closed` verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Ridge { ridge: Face, degree: usize },
    Link { vertex: Vertex, defect: LinkDefect },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldCheck {
    pub verdict: ManifoldVerdict,
    pub certificate: Option<Certificate>,
}

/// Lower Bound Theorem and Dehn–Sommerville residuals of a 3-complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LbtDsReport {
    pub f_vector: FVector,
    /// `4 f_0 - 10`
    pub lbt_lower: i64,
    /// `C(f_0, 2)`
    pub edge_upper: i64,
    pub lbt_holds: bool,
    pub lbt_equality: bool,
    pub edge_upper_holds: bool,
    /// `f_0 - f_1 + f_2 - f_3`
    pub euler_residual: i64,
    /// `2 f_2 - 4 f_3`
    pub ridge_residual: i64,
    /// Set when the complex is not a closed combinatorial 3-manifold.
    pub precondition: Option<String>,
}

impl LbtDsReport {
    pub fn holds(&self) -> bool {
        self.lbt_holds && self.edge_upper_holds && self.euler_residual == 0 && self.ridge_residual == 0
    }
}

/// A pure simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from facets. Each facet is sorted; repeated labels
    /// inside a facet, label 0, mixed cardinalities and duplicate facets are errors.
    pub fn new<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<Vec<Vertex>>,
    {
        let mut set = BTreeSet::new();
        let mut arity = None;
        for facet in facets {
            let mut facet: Face = facet.into();
            facet.sort_unstable();
            if facet.is_empty() {
                return Err(Error::EmptyComplex);
            }
            if facet[0] == 0 {
                return Err(Error::ZeroLabel(facet));
            }
            if facet.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex(facet));
            }
            let expected = *arity.get_or_insert(facet.len());
            if facet.len() != expected {
                let found = facet.len();
                return Err(Error::NotPure { facet, expected, found });
            }
            if let Some(dup) = set.replace(facet) {
                return Err(Error::DuplicateFacet(dup));
            }
        }
        if set.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let vertices: BTreeSet<Vertex> = set.iter().flatten().copied().collect();
        Ok(SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets: set.into_iter().collect(),
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Sorted facets.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dimension(&self) -> usize {
        self.facets[0].len() - 1
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// All faces, closed under subsets.
    pub fn faces(&self) -> FaceSet {
        FaceSet::closure(self.facets.iter().map(Vec::as_slice))
    }

    pub fn f_vector(&self) -> FVector {
        self.faces().f_vector()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn betti_numbers(&self) -> BettiVector {
        self.faces().betti_numbers()
    }

    /// Faces `F` with `v ∉ F` and `F ∪ {v}` a face.
    pub fn link(&self, v: Vertex) -> Result<SimplicialComplex> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        if self.dimension() == 0 {
            return Err(Error::WrongDimension { expected: 1, found: 0 });
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| f.iter().copied().filter(|&u| u != v).collect::<Face>());
        SimplicialComplex::new(facets)
    }

    /// Induced subcomplex on `vertices`; may be empty or non-pure.
    pub fn span(&self, vertices: &BTreeSet<Vertex>) -> FaceSet {
        self.faces().restrict(vertices)
    }

    /// `f_{k-1} = C(f_0, k)`.
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        assert!(k >= 1, "neighborliness is defined for k >= 1");
        let f = self.f_vector();
        f.get(k - 1) == binomial(f.get(0), k)
    }

    /// Number of facets containing each ridge (codimension-one face).
    pub fn ridge_degrees(&self) -> BTreeMap<Face, usize> {
        let mut degrees = BTreeMap::new();
        for facet in &self.facets {
            for i in 0..facet.len() {
                let mut ridge = facet.clone();
                ridge.remove(i);
                *degrees.entry(ridge).or_insert(0) += 1;
            }
        }
        degrees
    }

    /// Every ridge lies in exactly two facets.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        self.dimension() >= 1 && self.ridge_degrees().values().all(|&d| d == 2)
    }

    /// Ridges lying in exactly one facet, as a complex; `None` if there are none.
    pub fn boundary(&self) -> Option<SimplicialComplex> {
        let ridges: Vec<Face> = self
            .ridge_degrees()
            .into_iter()
            .filter(|&(_, d)| d == 1)
            .map(|(r, _)| r)
            .collect();
        if ridges.is_empty() || self.dimension() == 0 {
            None
        } else {
            SimplicialComplex::new(ridges).ok()
        }
    }

    pub fn is_connected(&self) -> bool {
        let index: BTreeMap<Vertex, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(self.vertices.len());
        for facet in &self.facets {
            for w in facet.windows(2) {
                uf.union(index[&w[0]], index[&w[1]]);
            }
        }
        uf.components() == 1
    }

    /// Greedy propagation of a coherent orientation across ridges.
    pub fn orientability(&self) -> Result<Orientability> {
        if !self.is_closed_pseudomanifold() {
            return Err(Error::NotClosed);
        }
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut hinges: BTreeMap<Face, Vec<(usize, i8)>> = BTreeMap::new();
        for (cell, facet) in self.facets.iter().enumerate() {
            for i in 0..facet.len() {
                let mut ridge = facet.clone();
                ridge.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                hinges.entry(ridge).or_default().push((cell, sign));
            }
        }
        match orient::coherently_orientable(self.facets.len(), hinges.values().map(Vec::as_slice)) {
            Some(true) => Ok(Orientability::Orientable),
            Some(false) => Ok(Orientability::NonOrientable),
            None => Err(Error::NotClosed),
        }
    }

    /// Classifies a 3-complex by ridge degrees and vertex links. Links are
    /// recognised as 2-spheres by being closed connected surfaces with χ = 2
    /// and as disks by being connected surfaces with boundary and χ = 1.
    pub fn manifold_check(&self) -> Result<ManifoldCheck> {
        let dim = self.dimension();
        if dim != 3 {
            return Err(Error::WrongDimension { expected: 3, found: dim });
        }
        let degrees = self.ridge_degrees();
        if let Some((ridge, &degree)) = degrees.iter().find(|&(_, &d)| d > 2) {
            return Ok(ManifoldCheck {
                verdict: ManifoldVerdict::No,
                certificate: Some(Certificate::Ridge { ridge: ridge.clone(), degree }),
            });
        }
        let bounded = degrees.values().any(|&d| d == 1);
        let fail = |vertex, defect| {
            Ok(ManifoldCheck {
                verdict: ManifoldVerdict::No,
                certificate: Some(Certificate::Link { vertex, defect }),
            })
        };
        let mut exotic = None;
        for &v in &self.vertices {
            let link = self.link(v)?;
            let shape = SurfaceShape::of(&link);
            match shape.kind {
                SurfaceKind::NotSurface => return fail(v, LinkDefect::NotSurface),
                _ if !shape.connected => return fail(v, LinkDefect::Disconnected),
                SurfaceKind::Closed if shape.chi != 2 => {
                    if bounded {
                        return fail(v, LinkDefect::ClosedEuler(shape.chi));
                    }
                    exotic.get_or_insert((v, shape.chi));
                }
                SurfaceKind::WithBoundary if shape.chi != 1 => {
                    return fail(v, LinkDefect::BoundaryEuler(shape.chi));
                }
                _ => {}
            }
        }
        Ok(match (exotic, bounded) {
            (Some((vertex, chi)), _) => ManifoldCheck {
                verdict: ManifoldVerdict::PseudomanifoldOnly,
                certificate: Some(Certificate::Link { vertex, defect: LinkDefect::ClosedEuler(chi) }),
            },
            (None, true) => ManifoldCheck {
                verdict: ManifoldVerdict::Bounded,
                certificate: degrees
                    .iter()
                    .find(|&(_, &d)| d == 1)
                    .map(|(r, &d)| Certificate::Ridge { ridge: r.clone(), degree: d }),
            },
            (None, false) => ManifoldCheck { verdict: ManifoldVerdict::Closed, certificate: None },
        })
    }

    /// Closed combinatorial 3-manifold.
    pub fn is_combinatorial_3_manifold(&self) -> bool {
        matches!(
            self.manifold_check(),
            Ok(ManifoldCheck { verdict: ManifoldVerdict::Closed, .. })
        )
    }

    pub fn lbt_ds_check(&self) -> LbtDsReport {
        let f = self.f_vector();
        let fi = |i| f.get(i) as i64;
        let lbt_lower = 4 * fi(0) - 10;
        let edge_upper = binomial(f.get(0), 2) as i64;
        let precondition = match self.manifold_check() {
            Ok(ManifoldCheck { verdict: ManifoldVerdict::Closed, .. }) => None,
            Ok(check) => Some(format!("not a closed combinatorial 3-manifold ({:?})", check.verdict)),
            Err(e) => Some(e.to_string()),
        };
        LbtDsReport {
            lbt_lower,
            edge_upper,
            lbt_holds: lbt_lower <= fi(1),
            lbt_equality: lbt_lower == fi(1),
            edge_upper_holds: fi(1) <= edge_upper,
            euler_residual: fi(0) - fi(1) + fi(2) - fi(3),
            ridge_residual: 2 * fi(2) - 4 * fi(3),
            precondition,
            f_vector: f,
        }
    }

    /// Applies `map` to every label.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<SimplicialComplex> {
        SimplicialComplex::new(
            self.facets
                .iter()
                .map(|f| f.iter().map(|&v| map(v)).collect::<Face>()),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SurfaceKind {
    Closed,
    WithBoundary,
    NotSurface,
}

struct SurfaceShape {
    kind: SurfaceKind,
    chi: i64,
    connected: bool,
}

impl SurfaceShape {
    /// Every edge in one or two triangles and every vertex link a single path or cycle.
    fn of(complex: &SimplicialComplex) -> Self {
        let chi = complex.euler_characteristic();
        let connected = complex.is_connected();
        if complex.dimension() != 2 {
            return SurfaceShape { kind: SurfaceKind::NotSurface, chi, connected };
        }
        let degrees = complex.ridge_degrees();
        let mut kind = SurfaceKind::Closed;
        for &d in degrees.values() {
            match d {
                2 => {}
                1 => kind = SurfaceKind::WithBoundary,
                _ => return SurfaceShape { kind: SurfaceKind::NotSurface, chi, connected },
            }
        }
        for &v in complex.vertices() {
            let edges: Vec<[Vertex; 2]> = complex
                .facets()
                .iter()
                .filter(|f| f.contains(&v))
                .map(|f| {
                    let rest: Vec<Vertex> = f.iter().copied().filter(|&u| u != v).collect();
                    [rest[0], rest[1]]
                })
                .collect();
            if !is_path_or_cycle(&edges) {
                return SurfaceShape { kind: SurfaceKind::NotSurface, chi, connected };
            }
        }
        SurfaceShape { kind, chi, connected }
    }
}

/// A nonempty connected graph with maximum degree two.
fn is_path_or_cycle(edges: &[[Vertex; 2]]) -> bool {
    let nodes: BTreeSet<Vertex> = edges.iter().flatten().copied().collect();
    let index: BTreeMap<Vertex, usize> = nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut degree = vec![0usize; nodes.len()];
    let mut uf = UnionFind::new(nodes.len());
    for [a, b] in edges {
        let (a, b) = (index[a], index[b]);
        degree[a] += 1;
        degree[b] += 1;
        uf.union(a, b);
    }
    !edges.is_empty() && degree.iter().all(|&d| d <= 2) && uf.components() == 1
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}
