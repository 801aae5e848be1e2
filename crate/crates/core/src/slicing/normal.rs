//! Normal coordinates of a slicing and the matching equations.
//!
//! Each tetrahedron `[v0, v1, v2, v3]` (sorted) carries seven counts: four
//! triangle types, indexed by the vertex they cut off, and three
//! quadrilateral types `{v0 v1 | v2 v3}`, `{v0 v2 | v1 v3}`, `{v0 v3 | v1 v2}`.

use std::collections::BTreeMap;
use std::ops::Add;

use super::{FacetKind, Slicing};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Pairs of tetrahedron positions for quadrilateral types 4, 5, 6.
const QUAD_PAIRS: [[[usize; 2]; 2]; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalCoordinates {
    tetrahedra: Vec<Face>,
    coordinates: Vec<[u32; 7]>,
}

/// An ambient triangle where the two incident tetrahedra disagree on the
/// number of normal arcs cutting off `corner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcMismatch {
    pub triangle: Face,
    pub corner: Vertex,
    pub counts: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    /// Three per ambient triangle.
    pub equations: usize,
    pub violations: Vec<ArcMismatch>,
}

impl CompatibilityReport {
    pub fn is_compatible(&self) -> bool {
        self.violations.is_empty()
    }
}

impl NormalCoordinates {
    /// All-zero coordinates on the tetrahedra of a 3-complex.
    pub fn zero(complex: &SimplicialComplex) -> Result<Self> {
        if complex.dimension() != 3 {
            return Err(Error::WrongDimension { expected: 3, found: complex.dimension() });
        }
        Ok(NormalCoordinates {
            tetrahedra: complex.facets().to_vec(),
            coordinates: vec![[0; 7]; complex.facets().len()],
        })
    }

    pub fn of_slicing(complex: &SimplicialComplex, slicing: &Slicing) -> Result<Self> {
        let mut coords = NormalCoordinates::zero(complex)?;
        for facet in slicing.facets() {
            let tet = coords
                .tetrahedra
                .binary_search(&facet.tetrahedron)
                .map_err(|_| Error::InvalidArgument(format!("{:?} is not a tetrahedron", facet.tetrahedron)))?;
            let labels: Vec<_> = facet.boundary.iter().map(|&i| slicing.vertices()[i]).collect();
            let position = |v: Vertex| coords.tetrahedra[tet].iter().position(|&u| u == v).expect("vertex of tetrahedron");
            let piece = match facet.kind {
                FacetKind::Triangle => {
                    let corner = if labels.iter().all(|l| l.upper == labels[0].upper) {
                        labels[0].upper
                    } else {
                        labels[0].lower
                    };
                    position(corner)
                }
                FacetKind::Quadrilateral => {
                    let mut uppers: Vec<usize> = labels.iter().map(|l| position(l.upper)).collect();
                    uppers.sort_unstable();
                    uppers.dedup();
                    let partner_of_first = if uppers.contains(&0) {
                        uppers.iter().copied().find(|&p| p != 0)
                    } else {
                        (1..4).find(|p| !uppers.contains(p))
                    };
                    3 + partner_of_first.expect("quadrilateral splits 2|2")
                }
            };
            coords.coordinates[tet][piece] += 1;
        }
        Ok(coords)
    }

    pub fn tetrahedra(&self) -> &[Face] {
        &self.tetrahedra
    }

    pub fn coordinates(&self) -> &[[u32; 7]] {
        &self.coordinates
    }

    /// At most one quadrilateral type per tetrahedron.
    pub fn satisfies_quadrilateral_constraint(&self) -> bool {
        self.coordinates
            .iter()
            .all(|c| c[4..].iter().filter(|&&x| x > 0).count() <= 1)
    }

    /// At most one piece per tetrahedron, as for a slicing.
    pub fn is_single_sheeted(&self) -> bool {
        self.coordinates.iter().all(|c| c.iter().sum::<u32>() <= 1)
    }

    /// Normal arcs inside `triangle` (a face of tetrahedron `tet`) cutting off `corner`.
    fn arcs(&self, tet: usize, triangle: &[Vertex], corner: Vertex) -> u32 {
        let vertices = &self.tetrahedra[tet];
        let c = &self.coordinates[tet];
        let omitted = vertices.iter().position(|v| !triangle.contains(v)).expect("triangle of tetrahedron");
        let corner_pos = vertices.iter().position(|&v| v == corner).expect("corner of tetrahedron");
        let mut count = c[corner_pos];
        for (t, pairs) in QUAD_PAIRS.iter().enumerate() {
            let pair = pairs.iter().find(|p| p.contains(&omitted)).expect("pairs cover positions");
            let partner = if pair[0] == omitted { pair[1] } else { pair[0] };
            if partner == corner_pos {
                count += c[4 + t];
            }
        }
        count
    }

    /// Evaluates the matching equations: three per triangle of `complex`. A
    /// triangle in two tetrahedra must see equal arc counts from both sides;
    /// a boundary triangle must carry no arcs.
    pub fn compatibility(&self, complex: &SimplicialComplex) -> CompatibilityReport {
        let mut incident: BTreeMap<Face, Vec<usize>> = BTreeMap::new();
        for (t, tet) in self.tetrahedra.iter().enumerate() {
            for skip in 0..4 {
                let mut tri = tet.clone();
                tri.remove(skip);
                incident.entry(tri).or_default().push(t);
            }
        }
        debug_assert_eq!(incident.len(), complex.f_vector().get(2));
        let mut violations = Vec::new();
        for (triangle, tets) in &incident {
            for &corner in triangle {
                let counts: Vec<u32> = tets.iter().map(|&t| self.arcs(t, triangle, corner)).collect();
                let consistent = match counts.as_slice() {
                    [single] => *single == 0,
                    several => several.windows(2).all(|w| w[0] == w[1]),
                };
                if !consistent {
                    violations.push(ArcMismatch { triangle: triangle.clone(), corner, counts });
                }
            }
        }
        CompatibilityReport { equations: 3 * incident.len(), violations }
    }
}

impl Add for &NormalCoordinates {
    type Output = NormalCoordinates;

    /// Componentwise sum over the same tetrahedra.
    fn add(self, other: &NormalCoordinates) -> NormalCoordinates {
        assert_eq!(self.tetrahedra, other.tetrahedra, "coordinates over different complexes");
        NormalCoordinates {
            tetrahedra: self.tetrahedra.clone(),
            coordinates: self
                .coordinates
                .iter()
                .zip(&other.coordinates)
                .map(|(a, b)| std::array::from_fn(|i| a[i] + b[i]))
                .collect(),
        }
    }
}
