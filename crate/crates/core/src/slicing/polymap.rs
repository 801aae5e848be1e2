use std::collections::BTreeMap;

use crate::complex::UnionFind;
use crate::orient;

/// A polygonal surface given by vertex count and faces in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonalMap {
    vertex_count: usize,
    faces: Vec<Vec<usize>>,
}

impl PolygonalMap {
    pub fn new(vertex_count: usize, faces: Vec<Vec<usize>>) -> Self {
        assert!(
            faces.iter().flatten().all(|&v| v < vertex_count),
            "face index out of range"
        );
        PolygonalMap { vertex_count, faces }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// For each undirected edge `[a, b]` (`a < b`): the faces containing it,
    /// with `+1` when the face traverses it from `a` to `b`.
    pub fn edge_incidences(&self) -> BTreeMap<[usize; 2], Vec<(usize, i8)>> {
        let mut incidences: BTreeMap<[usize; 2], Vec<(usize, i8)>> = BTreeMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            for (i, &a) in face.iter().enumerate() {
                let b = face[(i + 1) % face.len()];
                let (key, dir) = if a < b { ([a, b], 1) } else { ([b, a], -1) };
                incidences.entry(key).or_default().push((f, dir));
            }
        }
        incidences
    }

    pub fn edges(&self) -> Vec<[usize; 2]> {
        self.edge_incidences().into_keys().collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges().len() as i64 + self.faces.len() as i64
    }

    /// Every edge lies in exactly two faces.
    pub fn is_closed(&self) -> bool {
        self.edge_incidences().values().all(|v| v.len() == 2)
    }

    /// `None` unless the map is closed.
    pub fn orientable(&self) -> Option<bool> {
        let incidences = self.edge_incidences();
        orient::coherently_orientable(self.faces.len(), incidences.values().map(Vec::as_slice))
    }

    /// Connected components of the vertex-edge graph, isolated vertices included.
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for face in &self.faces {
            for w in face.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.components()
    }

    /// Every pair of vertices lies in a common face.
    pub fn is_weakly_neighborly(&self) -> bool {
        let n = self.vertex_count;
        let mut covered = vec![false; n * n];
        for face in &self.faces {
            for &a in face {
                for &b in face {
                    covered[a * n + b] = true;
                }
            }
        }
        (0..n).all(|a| (a + 1..n).all(|b| covered[a * n + b]))
    }
}
