//! Example complexes: permutation orbits, cyclic 4-polytopes and a small
//! library of named triangulations.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::complex::{binomial, Face, ManifoldVerdict, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// A permutation of `{1, ..., degree}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<Vertex>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (1..=degree as Vertex).collect() }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<Vertex>]) -> Result<Self> {
        let mut images: Vec<Vertex> = (1..=degree as Vertex).collect();
        let mut seen = BTreeSet::new();
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v == 0 || v as usize > degree {
                    return Err(Error::LabelOutOfRange { label: v, degree });
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidPermutation(format!(
                        "label {v} appears in more than one cycle position"
                    )));
                }
                images[v as usize - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The same permutation on `{1, ..., degree}`, fixing the added labels.
    pub fn with_degree(&self, degree: usize) -> Result<Self> {
        if degree < self.degree() {
            return Err(Error::InvalidPermutation(format!("{self} does not fit in degree {degree}")));
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as Vertex + 1..=degree as Vertex);
        Ok(Permutation { images })
    }

    pub fn apply(&self, v: Vertex) -> Result<Vertex> {
        match v.checked_sub(1).and_then(|i| self.images.get(i as usize)) {
            Some(&image) => Ok(image),
            None => Err(Error::LabelOutOfRange { label: v, degree: self.degree() }),
        }
    }

    /// Image of a face, re-sorted.
    pub fn apply_face(&self, face: &[Vertex]) -> Result<Face> {
        let mut image = face.iter().map(|&v| self.apply(v)).collect::<Result<Face>>()?;
        image.sort_unstable();
        Ok(image)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest label.
    pub fn cycles(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 1..=self.images.len() as Vertex {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut next = self.images[start as usize - 1];
            while next != start {
                seen[next as usize - 1] = true;
                cycle.push(next);
                next = self.images[next as usize - 1];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// Parses cycle notation such as `(1,4,7,6,9,2)(3,10)(5,8)`. The degree is the
/// largest label mentioned.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPermutation(format!("{msg} in '{s}'"));
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let cycle = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<Vertex>().map_err(|_| bad("non-integer label")))
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        Permutation::from_cycles(degree, &cycles)
    }
}

/// Closure of `sorted(seed)` under the generators, found breadth-first.
pub fn orbit(generators: &[Permutation], seed: &[Vertex]) -> Result<BTreeSet<Face>> {
    let mut start = seed.to_vec();
    start.sort_unstable();
    for g in generators {
        g.apply_face(&start)?;
    }
    let mut orbit = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(face) = queue.pop_front() {
        for g in generators {
            let image = g.apply_face(&face)?;
            if orbit.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Ok(orbit)
}

/// An orbit `(seed)_length` under a permutation group.
#[derive(Clone, Debug)]
pub struct OrbitSpec {
    pub generators: Vec<Permutation>,
    pub seed: Face,
    pub expected_length: Option<usize>,
}

impl OrbitSpec {
    /// Generates the orbit; a length differing from `expected_length` is an error.
    pub fn generate(&self) -> Result<BTreeSet<Face>> {
        let faces = orbit(&self.generators, &self.seed)?;
        match self.expected_length {
            Some(expected) if expected != faces.len() => Err(Error::OrbitLength {
                seed: self.seed.clone(),
                expected,
                found: faces.len(),
            }),
            _ => Ok(faces),
        }
    }
}

/// Union of orbits; a facet produced by two different orbits is an error.
pub fn union_of_orbits(specs: &[OrbitSpec]) -> Result<SimplicialComplex> {
    let mut facets = BTreeSet::new();
    for spec in specs {
        for face in spec.generate()? {
            if !facets.insert(face.clone()) {
                return Err(Error::DuplicateFacet(face));
            }
        }
    }
    SimplicialComplex::new(facets)
}

/// Generators of the dihedral group acting on `{1, ..., 2k}`:
/// the rotation `(1, ..., 2k)` and the reflection `(2k,2)(2k-1,3)...(k+2,k)`.
pub fn dihedral_generators(k: usize) -> Vec<Permutation> {
    let n = 2 * k;
    let rotation = Permutation::from_cycles(n, &[(1..=n as Vertex).collect()]).expect("valid rotation");
    let pairs: Vec<Vec<Vertex>> = (2..=k as Vertex)
        .map(|j| vec![n as Vertex + 2 - j, j])
        .collect();
    let reflection = Permutation::from_cycles(n, &pairs).expect("valid reflection");
    vec![rotation, reflection]
}

/// Boundary complex of the cyclic 4-polytope with `2k` vertices, as the union
/// of the dihedral orbits `(1,2,j,j+1)_{2k}` for `j = 3..=k` and
/// `(1,2,k+1,k+2)_k`.
pub fn cyclic_polytope_boundary(k: usize) -> Result<SimplicialComplex> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "cyclic 4-polytope boundary needs k >= 3, got {k}"
        )));
    }
    let generators = dihedral_generators(k);
    let k32 = k as Vertex;
    let mut specs: Vec<OrbitSpec> = (3..=k32)
        .map(|j| OrbitSpec {
            generators: generators.clone(),
            seed: vec![1, 2, j, j + 1],
            expected_length: Some(2 * k),
        })
        .collect();
    specs.push(OrbitSpec {
        generators,
        seed: vec![1, 2, k32 + 1, k32 + 2],
        expected_length: Some(k),
    });
    let complex = union_of_orbits(&specs)?;
    debug_assert_eq!(complex.facets().len(), binomial(2 * k, 2) - 2 * k);
    Ok(complex)
}

/// Facets of the cyclic 4-polytope on `n` vertices via Gale's evenness
/// condition: a 4-set `S` is a facet iff every two labels outside `S` are
/// separated by an even number of elements of `S`.
pub fn gale_evenness_facets(n: usize) -> Result<BTreeSet<Face>> {
    if n % 2 == 1 || n < 6 {
        return Err(Error::InvalidArgument(format!(
            "Gale evenness enumeration needs an even n >= 6, got {n}"
        )));
    }
    let n = n as Vertex;
    let mut facets = BTreeSet::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let s = [a, b, c, d];
                    let outside: Vec<Vertex> = (1..=n).filter(|v| !s.contains(v)).collect();
                    let even = outside.iter().enumerate().all(|(i, &lo)| {
                        outside[i + 1..].iter().all(|&hi| {
                            s.iter().filter(|&&x| lo < x && x < hi).count() % 2 == 0
                        })
                    });
                    if even {
                        facets.insert(s.to_vec());
                    }
                }
            }
        }
    }
    Ok(facets)
}

/// Boundary of the `d`-simplex on labels `1..=d+1`.
pub fn boundary_of_simplex(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::InvalidArgument("boundary of a 0-simplex is empty".into()));
    }
    let all: Vec<Vertex> = (1..=d as Vertex + 1).collect();
    SimplicialComplex::new((0..=d).map(|skip| {
        all.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect::<Face>()
    }))
}

const CYLINDER_C1: [[Vertex; 4]; 12] = [
    [1, 2, 3, 5], [1, 2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 6], [2, 3, 5, 6], [2, 4, 5, 6],
    [3, 4, 5, 7], [3, 4, 6, 7], [3, 5, 6, 7], [4, 5, 6, 8], [4, 5, 7, 8], [4, 6, 7, 8],
];

const CYLINDER_C2: [[Vertex; 4]; 14] = [
    [1, 2, 3, 7], [1, 2, 4, 5], [1, 2, 5, 7], [1, 3, 4, 6], [1, 3, 6, 7], [1, 4, 5, 6],
    [1, 5, 6, 7], [2, 3, 4, 8], [2, 3, 7, 8], [2, 4, 5, 8], [2, 5, 7, 8], [3, 4, 6, 8],
    [3, 6, 7, 8], [4, 5, 6, 8],
];

/// Named complexes available without an input file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Boundary of the `d`-simplex.
    BoundarySimplex(usize),
    /// Boundary of the cyclic 4-polytope with `2k` vertices.
    CyclicPolytope(usize),
    /// 12-tetrahedron cylinder `S² × [0,1]` on 8 vertices.
    CylinderC1,
    /// 14-tetrahedron cylinder with the same boundary as `C1`.
    CylinderC2,
    /// Grünbaum's centrally symmetric 10-vertex 3-sphere, one orbit of length 30.
    GruenbaumSphere10,
    /// 15-vertex triangulation with cyclic symmetry, five orbits of length 15.
    TwistedS2xS1_15,
}

impl Builtin {
    pub const NAMES: &'static str =
        "boundary-simplex:D, delta4, bdC4:K, C1, C2, gruenbaum-sphere-10, s2xs1-15";

    pub fn name(&self) -> String {
        match self {
            Builtin::BoundarySimplex(4) => "delta4".into(),
            Builtin::BoundarySimplex(d) => format!("boundary-simplex:{d}"),
            Builtin::CyclicPolytope(k) => format!("bdC4:{k}"),
            Builtin::CylinderC1 => "C1".into(),
            Builtin::CylinderC2 => "C2".into(),
            Builtin::GruenbaumSphere10 => "gruenbaum-sphere-10".into(),
            Builtin::TwistedS2xS1_15 => "s2xs1-15".into(),
        }
    }

    fn orbit_specs(&self) -> Option<Vec<OrbitSpec>> {
        match self {
            Builtin::GruenbaumSphere10 => Some(vec![OrbitSpec {
                generators: self.symmetry(),
                seed: vec![1, 2, 3, 4],
                expected_length: Some(30),
            }]),
            Builtin::TwistedS2xS1_15 => Some(
                [[1, 2, 3, 5], [1, 2, 3, 12], [1, 2, 4, 6], [1, 2, 5, 7], [1, 2, 6, 7]]
                    .into_iter()
                    .map(|seed| OrbitSpec {
                        generators: self.symmetry(),
                        seed: seed.to_vec(),
                        expected_length: Some(15),
                    })
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Generators of a symmetry group of the complex, for orbit reduction.
    pub fn symmetry(&self) -> Vec<Permutation> {
        match self {
            Builtin::BoundarySimplex(d) => {
                let n = d + 1;
                vec![
                    Permutation::from_cycles(n, &[(1..=n as Vertex).collect()]).expect("cycle"),
                    Permutation::from_cycles(n, &[vec![1, 2]]).expect("transposition"),
                ]
            }
            Builtin::CyclicPolytope(k) => dihedral_generators(*k),
            Builtin::CylinderC1 | Builtin::CylinderC2 => Vec::new(),
            Builtin::GruenbaumSphere10 => ["(1,4,7,6,9,2)(3,10)(5,8)", "(1,7,3,9)(2,8,4,6)"]
                .iter()
                .map(|g| g.parse::<Permutation>().and_then(|p| p.with_degree(10)).expect("generator"))
                .collect(),
            Builtin::TwistedS2xS1_15 => {
                vec![Permutation::from_cycles(15, &[(1..=15).collect()]).expect("cycle")]
            }
        }
    }

    /// Builds the complex and verifies its manifold type.
    pub fn build(&self) -> Result<SimplicialComplex> {
        let complex = match self {
            Builtin::BoundarySimplex(d) => boundary_of_simplex(*d)?,
            Builtin::CyclicPolytope(k) => cyclic_polytope_boundary(*k)?,
            Builtin::CylinderC1 => SimplicialComplex::new(CYLINDER_C1.iter().map(|f| f.to_vec()))?,
            Builtin::CylinderC2 => SimplicialComplex::new(CYLINDER_C2.iter().map(|f| f.to_vec()))?,
            Builtin::GruenbaumSphere10 | Builtin::TwistedS2xS1_15 => {
                union_of_orbits(&self.orbit_specs().expect("orbit complex"))?
            }
        };
        if complex.dimension() == 3 {
            let expected = match self {
                Builtin::CylinderC1 | Builtin::CylinderC2 => ManifoldVerdict::Bounded,
                _ => ManifoldVerdict::Closed,
            };
            let check = complex.manifold_check()?;
            if check.verdict != expected {
                return Err(Error::BuiltinVerification {
                    name: self.name(),
                    reason: format!("expected {expected:?}, found {check:?}"),
                });
            }
        }
        Ok(complex)
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownBuiltin(s.to_string());
        let number = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        Ok(match s {
            "delta4" => Builtin::BoundarySimplex(4),
            "C1" => Builtin::CylinderC1,
            "C2" => Builtin::CylinderC2,
            "gruenbaum-sphere-10" => Builtin::GruenbaumSphere10,
            "s2xs1-15" => Builtin::TwistedS2xS1_15,
            _ => {
                if let Some(d) = s.strip_prefix("boundary-simplex:") {
                    Builtin::BoundarySimplex(number(d)?)
                } else if let Some(k) = s.strip_prefix("bdC4:") {
                    Builtin::CyclicPolytope(number(k)?)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

/// Builds a named complex; see [`Builtin`] for the accepted names.
pub fn builtin(name: &str) -> Result<SimplicialComplex> {
    name.parse::<Builtin>()?.build()
}
