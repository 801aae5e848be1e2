//! Exhaustive enumeration of slicings.
//!
//! Partitions are bitmasks over the sorted vertex list. Each partition is
//! visited once up to complementation, with the part holding the smallest
//! vertex taken as `V1`. Optional symmetry generators reduce further to one
//! representative per orbit: the orbit member with the smallest mask.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::bounds::{AmbientProfile, BoundReport, Verdict};
use crate::complex::{SimplicialComplex, Vertex};
use crate::constructors::Permutation;
use crate::error::{Error, Result};
use crate::slicing::{Slicer, SlicingStats, VertexPartition};
use crate::Rational;

/// Largest vertex count enumerated without a size filter.
pub const MAX_UNFILTERED_VERTICES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    /// Inclusive range for `min(|V1|, |V2|)`; all sizes when `None`.
    pub sizes: Option<(usize, usize)>,
    pub connected_only: bool,
    pub genus_range: Option<(Rational, Rational)>,
    pub quad_range: Option<(usize, usize)>,
    pub weakly_neighborly_only: bool,
    pub symmetry: Vec<Permutation>,
    pub jobs: usize,
}

impl Default for SearchSpec {
    fn default() -> Self {
        SearchSpec {
            sizes: None,
            connected_only: false,
            genus_range: None,
            quad_range: None,
            weakly_neighborly_only: false,
            symmetry: Vec::new(),
            jobs: 1,
        }
    }
}

impl SearchSpec {
    pub fn weakly_neighborly() -> Self {
        SearchSpec { weakly_neighborly_only: true, ..SearchSpec::default() }
    }

    fn admits(&self, stats: &SlicingStats, weakly_neighborly: bool) -> bool {
        if self.connected_only && !stats.is_connected() {
            return false;
        }
        if self.weakly_neighborly_only && !weakly_neighborly {
            return false;
        }
        if let Some((lo, hi)) = self.genus_range {
            if stats.genus < lo || stats.genus > hi {
                return false;
            }
        }
        if let Some((lo, hi)) = self.quad_range {
            if stats.q < lo || stats.q > hi {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchEntry {
    pub partition: VertexPartition,
    pub stats: SlicingStats,
    pub weakly_neighborly: bool,
    pub report: BoundReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchResult {
    /// Sorted by partition.
    pub entries: Vec<SearchEntry>,
    /// Canonical partitions evaluated.
    pub examined: usize,
    /// Partitions whose slicing would cross the boundary.
    pub skipped: usize,
}

/// `(n, e, t, q, χ, orientable)`.
pub type Signature = (usize, usize, usize, usize, i64, bool);

impl SearchResult {
    /// Number of entries per signature.
    pub fn classify(&self) -> BTreeMap<Signature, usize> {
        let mut classes = BTreeMap::new();
        for e in &self.entries {
            let s = &e.stats;
            *classes.entry((s.n, s.e, s.t, s.q, s.chi, s.orientable)).or_insert(0) += 1;
        }
        classes
    }

    pub fn alarms(&self) -> impl Iterator<Item = &SearchEntry> {
        self.entries.iter().filter(|e| e.report.has_alarm())
    }
}

/// All `k`-subsets of `bits` low bits, by Gosper's hack.
fn subsets(bits: usize, k: usize) -> Vec<u64> {
    if k > bits {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = 1u64 << bits;
    let mut out = Vec::new();
    let mut x: u64 = (1 << k) - 1;
    while x < limit {
        out.push(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// Canonical masks (bit 0 set, not full) whose smaller part has a size in range.
fn canonical_masks(n: usize, sizes: Option<(usize, usize)>) -> Result<Vec<u64>> {
    if !(2..=63).contains(&n) {
        return Err(Error::SpecOutOfRange(format!("cannot enumerate partitions of {n} vertices")));
    }
    let half = n / 2;
    let (lo, hi) = match sizes {
        Some((lo, hi)) => {
            if lo == 0 || lo > hi || hi >= n {
                return Err(Error::SpecOutOfRange(format!("part sizes {lo}:{hi} outside 1..{}", n - 1)));
            }
            (lo, hi.min(half))
        }
        None if n > MAX_UNFILTERED_VERTICES => {
            return Err(Error::SpecOutOfRange(format!(
                "{n} vertices exceed {MAX_UNFILTERED_VERTICES}; a size filter is required"
            )))
        }
        None => (1, half),
    };
    let mut masks = Vec::new();
    for s in lo..=hi {
        let mut part_sizes = vec![s];
        if n - s != s {
            part_sizes.push(n - s);
        }
        for k in part_sizes {
            masks.extend(subsets(n - 1, k - 1).into_iter().map(|rest| (rest << 1) | 1));
        }
    }
    masks.sort_unstable();
    Ok(masks)
}

/// Generators as permutations of vertex indices; each must map facets to facets.
fn index_generators(complex: &SimplicialComplex, generators: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    let vertices = complex.vertices();
    let index = |v: Vertex| vertices.binary_search(&v).ok();
    generators
        .iter()
        .map(|g| {
            let images = vertices
                .iter()
                .map(|&v| {
                    let image = if (v as usize) <= g.degree() { g.apply(v)? } else { v };
                    index(image).ok_or_else(|| Error::InvalidPermutation(format!("{g} moves vertex {v} off the complex")))
                })
                .collect::<Result<Vec<usize>>>()?;
            for facet in complex.facets() {
                let mut image: Vec<Vertex> = facet.iter().map(|&v| vertices[images[index(v).expect("own vertex")]]).collect();
                image.sort_unstable();
                if complex.facets().binary_search(&image).is_err() {
                    return Err(Error::InvalidPermutation(format!("{g} is not a symmetry of the complex")));
                }
            }
            Ok(images)
        })
        .collect()
}

fn apply_mask(images: &[usize], mask: u64) -> u64 {
    images
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .fold(0, |acc, (_, &j)| acc | 1 << j)
}

fn normalize(mask: u64, full: u64) -> u64 {
    if mask & 1 == 1 {
        mask
    } else {
        full & !mask
    }
}

/// Whether `mask` is the smallest canonical mask in its orbit.
fn is_orbit_minimum(mask: u64, generators: &[Vec<usize>], full: u64) -> bool {
    let mut seen = HashSet::from([mask]);
    let mut queue = vec![mask];
    while let Some(m) = queue.pop() {
        for g in generators {
            let image = normalize(apply_mask(g, m), full);
            if image < mask {
                return false;
            }
            if seen.insert(image) {
                queue.push(image);
            }
        }
    }
    true
}

enum Outcome {
    Kept(Box<SearchEntry>),
    Filtered,
    Skipped,
}

/// Slices every canonical partition admitted by `spec` and evaluates the
/// bound checks on each survivor. Output order does not depend on `jobs`.
pub fn enumerate_slicings(complex: &SimplicialComplex, spec: &SearchSpec) -> Result<SearchResult> {
    let slicer = Slicer::new(complex)?;
    let profile = AmbientProfile::analyze(complex)?;
    let n = complex.num_vertices();
    let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let generators = index_generators(complex, &spec.symmetry)?;
    let masks: Vec<u64> = canonical_masks(n, spec.sizes)?
        .into_iter()
        .filter(|&m| generators.is_empty() || is_orbit_minimum(m, &generators, full))
        .collect();
    let vertices = complex.vertices();

    let evaluate = |&mask: &u64| -> Result<Outcome> {
        let (v1, v2): (Vec<Vertex>, Vec<Vertex>) = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (mask >> i & 1 == 1, v))
            .fold((Vec::new(), Vec::new()), |(mut a, mut b), (inside, v)| {
                if inside {
                    a.push(v)
                } else {
                    b.push(v)
                }
                (a, b)
            });
        let partition = VertexPartition::new(v1, v2)?;
        let slicing = match slicer.slice(&partition) {
            Ok(s) => s,
            Err(Error::MixedBoundaryTriangle(_)) => return Ok(Outcome::Skipped),
            Err(e) => return Err(e),
        };
        let stats = slicing.stats()?;
        let weakly_neighborly = slicing.is_weakly_neighborly();
        if !spec.admits(&stats, weakly_neighborly) {
            return Ok(Outcome::Filtered);
        }
        let report = BoundReport::evaluate(&profile, &slicer, &slicing, &stats);
        Ok(Outcome::Kept(Box::new(SearchEntry { partition, stats, weakly_neighborly, report })))
    };

    let outcomes: Vec<Result<Outcome>> = if spec.jobs <= 1 {
        masks.iter().map(evaluate).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        pool.install(|| masks.par_iter().map(evaluate).collect())
    };

    let mut result = SearchResult { examined: masks.len(), ..SearchResult::default() };
    for outcome in outcomes {
        match outcome? {
            Outcome::Kept(entry) => result.entries.push(*entry),
            Outcome::Filtered => {}
            Outcome::Skipped => result.skipped += 1,
        }
    }
    result.entries.sort_by(|a, b| a.partition.cmp(&b.partition));
    Ok(result)
}

/// Enumeration restricted to weakly neighborly slicings.
pub fn find_weakly_neighborly(complex: &SimplicialComplex, spec: &SearchSpec) -> Result<SearchResult> {
    let spec = SearchSpec { weakly_neighborly_only: true, ..spec.clone() };
    enumerate_slicings(complex, &spec)
}

/// A row of a published table of slicings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub v1: &'static [Vertex],
    pub genus: i64,
    pub n: usize,
    pub q: usize,
}

/// Published rows for the 10-vertex sphere `gruenbaum-sphere-10`.
pub const SPHERE_10_REFERENCE: &[ReferenceRow] = &[
    ReferenceRow { v1: &[1], genus: 0, n: 1, q: 0 },
    ReferenceRow { v1: &[1, 3], genus: 0, n: 2, q: 3 },
    ReferenceRow { v1: &[1, 3, 5], genus: 1, n: 3, q: 9 },
    ReferenceRow { v1: &[1, 3, 5, 7], genus: 4, n: 3, q: 18 },
    ReferenceRow { v1: &[1, 3, 5, 7, 9], genus: 5, n: 6, q: 30 },
];

/// Published rows for the 15-vertex complex `s2xs1-15`.
pub const S2XS1_15_REFERENCE: &[ReferenceRow] = &[
    ReferenceRow { v1: &[1, 4, 7], genus: 1, n: 3, q: 9 },
    ReferenceRow { v1: &[1, 4, 7, 10], genus: 3, n: 4, q: 18 },
    ReferenceRow { v1: &[1, 4, 7, 10, 13], genus: 6, n: 5, q: 30 },
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub partition: VertexPartition,
    pub genus: Rational,
    /// `|V_i|` of the side selected by the span bound, `|V1|` if it does not apply.
    pub n: usize,
    pub q: usize,
    pub orientable: bool,
    pub span_bound: Verdict,
    pub reference: Option<ReferenceRow>,
    /// Columns where the computed value differs from the reference.
    pub diffs: Vec<&'static str>,
}

/// Computes `(g, n, q)` for each partition and diffs against `reference`
/// rows matched by `V1`. Discrepancies are reported, never corrected.
pub fn extremal_table(complex: &SimplicialComplex, partitions: &[VertexPartition], reference: &[ReferenceRow]) -> Result<Vec<TableRow>> {
    let slicer = Slicer::new(complex)?;
    let profile = AmbientProfile::analyze(complex)?;
    partitions
        .iter()
        .map(|p| {
            let slicing = slicer.slice(p)?;
            let stats = slicing.stats()?;
            let report = BoundReport::evaluate(&profile, &slicer, &slicing, &stats);
            let record = report.get("span-quads").expect("span bound is always evaluated");
            let n = match record.note.as_deref() {
                Some(note) if record.applicable() && note.starts_with("V2") => p.v2().len(),
                _ => p.v1().len(),
            };
            let reference = reference
                .iter()
                .find(|r| r.v1.iter().copied().eq(p.v1().iter().copied()))
                .copied();
            let mut diffs = Vec::new();
            if let Some(r) = reference {
                if Rational::from_integer(r.genus) != stats.genus {
                    diffs.push("g");
                }
                if r.n != n {
                    diffs.push("n");
                }
                if r.q != stats.q {
                    diffs.push("q");
                }
            }
            Ok(TableRow {
                partition: p.clone(),
                genus: stats.genus,
                n,
                q: stats.q,
                orientable: stats.orientable,
                span_bound: record.verdict,
                reference,
                diffs,
            })
        })
        .collect()
}

/// Partitions with `V1` running through the prefixes of `chain`.
pub fn nested_family(complex: &SimplicialComplex, chain: &[Vertex]) -> Result<Vec<VertexPartition>> {
    (1..=chain.len())
        .map(|k| VertexPartition::with_complement(complex, chain[..k].iter().copied()))
        .collect()
}
