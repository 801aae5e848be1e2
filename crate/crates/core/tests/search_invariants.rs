use std::collections::{BTreeMap, BTreeSet};

use normslice_core::constructors::{builtin, dihedral_generators};
use normslice_core::search::{enumerate_slicings, SearchSpec};
use normslice_core::{Permutation, SimplicialComplex, Slicer, VertexPartition};

type Signature = (usize, usize, usize, usize, i64, bool);

fn all_ordered_partitions(k: &SimplicialComplex) -> Vec<VertexPartition> {
    let vs = k.vertices();
    (1..(1u32 << vs.len()) - 1)
        .map(|mask| {
            let (a, b): (Vec<u32>, Vec<u32>) = vs.iter().enumerate().fold((vec![], vec![]), |(mut a, mut b), (i, &v)| {
                if mask >> i & 1 == 1 {
                    a.push(v)
                } else {
                    b.push(v)
                }
                (a, b)
            });
            VertexPartition::new(a, b).unwrap()
        })
        .collect()
}

#[test]
fn canonical_enumeration_loses_nothing() {
    for name in ["delta4", "bdC4:3", "bdC4:4"] {
        let k = builtin(name).unwrap();
        let slicer = Slicer::new(&k).unwrap();
        let canonical: BTreeMap<VertexPartition, _> = enumerate_slicings(&k, &SearchSpec::default())
            .unwrap()
            .entries
            .into_iter()
            .map(|e| (e.partition, e.stats))
            .collect();
        let ordered = all_ordered_partitions(&k);
        assert_eq!(ordered.len(), 2 * canonical.len());
        for p in ordered {
            let stats = slicer.slice(&p).unwrap().stats().unwrap();
            let key = if p.v1().contains(&k.vertices()[0]) { p.clone() } else { p.swapped() };
            assert_eq!(canonical[&key], stats, "{name} {p}");
        }
    }
}

fn orbit_size(p: &VertexPartition, generators: &[Permutation]) -> usize {
    let canon = |v1: BTreeSet<u32>, v2: BTreeSet<u32>| if v1.contains(&1) { (v1, v2) } else { (v2, v1) };
    let start = canon(p.v1().clone(), p.v2().clone());
    let mut seen = BTreeSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some((a, b)) = stack.pop() {
        for g in generators {
            let image = |s: &BTreeSet<u32>| s.iter().map(|&v| g.apply(v).unwrap()).collect::<BTreeSet<u32>>();
            let next = canon(image(&a), image(&b));
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen.len()
}

#[test]
fn symmetry_reduction_is_sound() {
    let k = builtin("bdC4:3").unwrap();
    let generators = dihedral_generators(3);
    let sig = |s: &normslice_core::SlicingStats| -> Signature { (s.n, s.e, s.t, s.q, s.chi, s.orientable) };
    let mut full: BTreeMap<Signature, usize> = BTreeMap::new();
    for e in enumerate_slicings(&k, &SearchSpec::default()).unwrap().entries {
        *full.entry(sig(&e.stats)).or_default() += 1;
    }
    let reduced = enumerate_slicings(&k, &SearchSpec { symmetry: generators.clone(), ..SearchSpec::default() }).unwrap();
    let mut weighted: BTreeMap<Signature, usize> = BTreeMap::new();
    for e in &reduced.entries {
        *weighted.entry(sig(&e.stats)).or_default() += orbit_size(&e.partition, &generators);
    }
    assert_eq!(full, weighted);
}

#[test]
fn symmetry_reduction_on_fifteen_vertices() {
    let k = builtin("s2xs1-15").unwrap();
    let spec = SearchSpec { sizes: Some((3, 3)), jobs: 2, ..SearchSpec::default() };
    let full = enumerate_slicings(&k, &spec).unwrap();
    let rotation = Permutation::from_cycles(15, &[(1..=15).collect()]).unwrap();
    let reduced = enumerate_slicings(&k, &SearchSpec { symmetry: vec![rotation], ..spec }).unwrap();
    assert_eq!(full.entries.len(), 455);
    let full_sigs: BTreeSet<_> = full.classify().into_keys().collect();
    let reduced_sigs: BTreeSet<_> = reduced.classify().into_keys().collect();
    assert_eq!(full_sigs, reduced_sigs);
    assert!(reduced.entries.len() * 15 >= full.entries.len());
}
