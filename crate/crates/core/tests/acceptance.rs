//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Expected values are computed here from independent oracles (binomials,
//! brute-force isomorphism, rational homology of a triangulated copy of the
//! surface) or taken from published tables. A criterion listed in
//! `KNOWN_DEVIATIONS` still prints FAIL but does not fail the run.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use normslice_core::bounds::{check_betti_relation, AmbientProfile, BoundReport, Verdict};
use normslice_core::constructors::{builtin, cyclic_polytope_boundary, gale_evenness_facets};
use normslice_core::io::render_search_tsv;
use normslice_core::search::{enumerate_slicings, find_weakly_neighborly, SearchSpec};
use normslice_core::slicing::{genus_via_span, NormalCoordinates};
use normslice_core::{FaceSet, Rational, SimplicialComplex, Slicer, Slicing, VertexPartition};

/// Criteria whose published claim disagrees with the computed ground truth.
const KNOWN_DEVIATIONS: &[u32] = &[6];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn partition(k: &SimplicialComplex, v1: &[u32]) -> VertexPartition {
    VertexPartition::with_complement(k, v1.iter().copied()).unwrap()
}

fn odd(k: usize) -> Vec<u32> {
    (1..=2 * k as u32).step_by(2).collect()
}

/// Rational Betti numbers of the surface with every quadrilateral coned off.
fn surface_betti(s: &Slicing) -> Vec<usize> {
    let mut next = s.vertices().len() as u32 + 1;
    let mut triangles: Vec<Vec<u32>> = Vec::new();
    for f in s.facets() {
        let b: Vec<u32> = f.boundary.iter().map(|&i| i as u32 + 1).collect();
        if b.len() == 3 {
            triangles.push(b);
        } else {
            for i in 0..b.len() {
                triangles.push(vec![b[i], b[(i + 1) % b.len()], next]);
            }
            next += 1;
        }
    }
    for t in &mut triangles {
        t.sort_unstable();
    }
    FaceSet::closure(triangles.iter().map(Vec::as_slice)).betti_numbers().0
}

/// Faces as vertex cycles, canonical up to rotation and reflection.
fn canonical_faces(faces: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = faces
        .iter()
        .map(|f| {
            let mapped: Vec<usize> = f.iter().map(|&v| perm[v]).collect();
            let k = mapped.len();
            let mut best: Option<Vec<usize>> = None;
            for start in 0..k {
                for dir in [1, k - 1] {
                    let cand: Vec<usize> = (0..k).map(|i| mapped[(start + i * dir) % k]).collect();
                    if best.as_ref().is_none_or(|b| cand < *b) {
                        best = Some(cand);
                    }
                }
            }
            best.unwrap()
        })
        .collect();
    out.sort();
    out
}

/// Brute-force isomorphism of polygonal maps by vertex bijection.
fn isomorphic(a: &[Vec<usize>], b: &[Vec<usize>], n: usize) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let identity: Vec<usize> = (0..n).collect();
    let target = canonical_faces(b, &identity);
    let mut perm = identity.clone();
    let mut found = false;
    permute(&mut perm, 0, &mut |p| {
        if !found && canonical_faces(a, p) == target {
            found = true;
        }
    });
    found
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

fn reference_maps() -> Vec<(&'static str, usize, Vec<Vec<usize>>)> {
    let tetrahedron = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    let prism = vec![
        vec![0, 1, 2],
        vec![3, 4, 5],
        vec![0, 1, 4, 3],
        vec![1, 2, 5, 4],
        vec![2, 0, 3, 5],
    ];
    let grid = (0..3)
        .flat_map(|i| {
            (0..3).map(move |j| {
                let at = |a: usize, b: usize| 3 * (a % 3) + b % 3;
                vec![at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)]
            })
        })
        .collect();
    vec![("4-triangle sphere", 4, tetrahedron), ("2+3 prism", 6, prism), ("3x3 grid torus", 9, grid)]
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let k = builtin("bdC4:3").unwrap();
    let slicer = Slicer::new(&k).unwrap();
    let profile = AmbientProfile::analyze(&k).unwrap();
    let s = slicer.slice(&partition(&k, &[1, 3, 5])).unwrap();
    let st = s.stats().unwrap();
    let report = BoundReport::evaluate(&profile, &slicer, &s, &st);
    let main = report.get("neighborly-quads").unwrap();
    let elapsed = start.elapsed();
    let pass = st.f_vector() == [9, 18, 0, 9]
        && st.chi == 0
        && st.orientable
        && st.genus == Rational::from_integer(1)
        && s.is_weakly_neighborly()
        && main.verdict == Verdict::Equality
        && main.lhs == Some(Rational::from_integer(9))
        && elapsed < Duration::from_secs(1);
    outcome(
        pass,
        format!(
            "f={:?} chi={} orientable={} g={} wn={} main {} {} {}",
            st.f_vector(),
            st.chi,
            st.orientable,
            st.genus,
            s.is_weakly_neighborly(),
            main.lhs.unwrap(),
            main.verdict,
            main.rhs.unwrap()
        ),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for k in 3..=6usize {
        let m = cyclic_polytope_boundary(k).unwrap();
        let slicer = Slicer::new(&m).unwrap();
        let profile = AmbientProfile::analyze(&m).unwrap();
        let p = partition(&m, &odd(k));
        let s = slicer.slice(&p).unwrap();
        let st = s.stats().unwrap();
        let r = BoundReport::evaluate(&profile, &slicer, &s, &st);
        let n = 2 * k as i64;
        let expect_q = binom(n, 2) - n;
        let expect_g = binom(k as i64 - 1, 2);
        let main = r.get("neighborly-quads").unwrap();
        let good = st.q as i64 == expect_q
            && st.t == 0
            && st.genus == Rational::from_integer(expect_g)
            && p.balance() == Rational::from_integer(0)
            && main.verdict == Verdict::Equality;
        ok &= good;
        detail.push(format!("k={k}: q={} t={} g={}", st.q, st.t, st.genus));
    }
    let elapsed = start.elapsed();
    outcome(ok && elapsed < Duration::from_secs(5), detail.join("; "))
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    for k in 3..=6 {
        let orbit: BTreeSet<Vec<u32>> = cyclic_polytope_boundary(k).unwrap().facets().iter().cloned().collect();
        ok &= orbit == gale_evenness_facets(2 * k).unwrap();
    }
    outcome(ok, "k = 3..6")
}

fn criterion_4() -> Outcome {
    let c1 = builtin("C1").unwrap();
    let c2 = builtin("C2").unwrap();
    let s1 = Slicer::new(&c1).unwrap().slice(&partition(&c1, &[1, 2, 3, 4])).unwrap().stats().unwrap();
    let s2 = Slicer::new(&c2).unwrap().slice(&partition(&c2, &[1, 2, 3, 4])).unwrap().stats().unwrap();
    let pass = s1.t == 8 && s1.q == 4 && s1.chi == 2 && s2.t == 8 && s2.q == 6 && s2.n == 12 && s2.e == 24;
    outcome(pass, format!("C1 f={:?} chi={}; C2 f={:?} chi={}", s1.f_vector(), s1.chi, s2.f_vector(), s2.chi))
}

fn criterion_5() -> Outcome {
    let m = builtin("gruenbaum-sphere-10").unwrap();
    let slicer = Slicer::new(&m).unwrap();
    let profile = AmbientProfile::analyze(&m).unwrap();
    let chain = [1, 3, 5, 7, 9];
    let table_genus = [0, 0, 1, 4, 5];
    let expected_genus: [Option<i64>; 5] = [None, None, None, Some(3), Some(6)];
    let mut ok = true;
    let mut quads = Vec::new();
    let mut genera = Vec::new();
    let mut diffs = Vec::new();
    for (row, k) in (1..=5).enumerate() {
        let p = partition(&m, &chain[..k]);
        let s = slicer.slice(&p).unwrap();
        let st = s.stats().unwrap();
        let r = BoundReport::evaluate(&profile, &slicer, &s, &st);
        quads.push(st.q);
        genera.push(st.genus.to_string());
        if row >= 2 {
            ok &= r.verdict("span-quads") == Some(Verdict::Equality);
        }
        for rec in check_betti_relation(&profile, &slicer, &p, &st) {
            ok &= rec.verdict == Verdict::Equality;
        }
        if st.genus != Rational::from_integer(table_genus[row]) {
            diffs.push(format!("row {} listed g={} computed {}", row + 1, table_genus[row], st.genus));
        }
        if let Some(c) = expected_genus[row] {
            if st.genus != Rational::from_integer(c) {
                diffs.push(format!("row {} expected g={c} computed {}", row + 1, st.genus));
            }
        }
    }
    ok &= quads == [0, 3, 9, 18, 30];
    let agrees = diffs.iter().all(|d| !d.contains("expected"));
    outcome(
        ok,
        format!(
            "q={quads:?} g=[{}]; matches expected: {agrees}; diffs: {}",
            genera.join(","),
            if diffs.is_empty() { "none".into() } else { diffs.join("; ") }
        ),
    )
}

fn criterion_6() -> Outcome {
    let m = builtin("s2xs1-15").unwrap();
    let slicer = Slicer::new(&m).unwrap();
    let profile = AmbientProfile::analyze(&m).unwrap();
    let chain = [1, 4, 7, 10, 13];
    let expected = [(3, 9, 1), (4, 18, 3), (5, 30, 6)];
    let mut ok = true;
    let mut detail = Vec::new();
    for (k, (_, q, g)) in (3..=5).zip(expected) {
        let s = slicer.slice(&partition(&m, &chain[..k])).unwrap();
        let st = s.stats().unwrap();
        let r = BoundReport::evaluate(&profile, &slicer, &s, &st);
        let betti = surface_betti(&s);
        let homology_orientable = betti.get(2) == Some(&1);
        ok &= st.q == q
            && st.genus == Rational::from_integer(g)
            && r.verdict("span-quads") == Some(Verdict::Equality)
            && !st.orientable
            && homology_orientable == st.orientable;
        detail.push(format!(
            "{:?}: q={} g={} orientable={} (rational betti {:?})",
            &chain[..k],
            st.q,
            st.genus,
            st.orientable,
            betti
        ));
    }
    outcome(ok, detail.join("; "))
}

fn classification_complexes() -> Vec<(&'static str, SimplicialComplex)> {
    ["delta4", "bdC4:3", "bdC4:4", "gruenbaum-sphere-10", "s2xs1-15"]
        .into_iter()
        .map(|n| (n, builtin(n).unwrap()))
        .collect()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let refs = reference_maps();
    let mut types: BTreeMap<&str, usize> = BTreeMap::new();
    let mut unmatched = Vec::new();
    for (name, m) in classification_complexes() {
        let slicer = Slicer::new(&m).unwrap();
        let found = find_weakly_neighborly(&m, &SearchSpec { jobs: 4, ..SearchSpec::default() }).unwrap();
        for e in &found.entries {
            let s = slicer.slice(&e.partition).unwrap();
            let faces: Vec<Vec<usize>> = s.facets().iter().map(|f| f.boundary.clone()).collect();
            match refs.iter().find(|(_, n, r)| *n == s.vertices().len() && isomorphic(&faces, r, *n)) {
                Some((label, _, _)) => *types.entry(label).or_insert(0) += 1,
                None => unmatched.push(format!("{name} {}", e.partition)),
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = types.len() == 3 && unmatched.is_empty() && elapsed < Duration::from_secs(60);
    outcome(pass, format!("types {types:?}, unmatched {unmatched:?}, {:.1}s", elapsed.as_secs_f64()))
}

/// Every slicing of the complexes used by criteria 1-7.
fn property_complexes() -> Vec<(&'static str, SimplicialComplex)> {
    let mut out = classification_complexes();
    for n in ["bdC4:5", "bdC4:6", "C1", "C2"] {
        out.push((n, builtin(n).unwrap()));
    }
    out
}

fn criterion_8() -> Outcome {
    let mut failures: Vec<String> = Vec::new();
    let mut findings: Vec<String> = Vec::new();
    let mut checked = 0usize;
    for (name, m) in property_complexes() {
        let slicer = Slicer::new(&m).unwrap();
        let profile = AmbientProfile::analyze(&m).unwrap();
        let closed_orientable = profile.is_closed_manifold() && profile.orientable == Some(true);
        let f2 = m.f_vector().get(2);
        let result = enumerate_slicings(&m, &SearchSpec { jobs: 4, ..SearchSpec::default() }).unwrap();
        let edges: BTreeSet<Vec<u32>> = m.faces().faces(1).iter().cloned().collect();
        for e in &result.entries {
            checked += 1;
            let mut fail = |what: &str| failures.push(format!("{name} {}: {what}", e.partition));
            let s = slicer.slice(&e.partition).unwrap();
            let st = &e.stats;
            if 2 * st.e != 3 * st.t + 4 * st.q {
                fail("2e != 3t+4q");
            }
            if st.chi != s.map().euler_characteristic() || Rational::new(2 - st.chi, 2) != st.genus {
                fail("euler characteristic");
            }
            if let Err(v) = s.validate_structure() {
                fail(&format!("structure: {v}"));
            }
            let normal = NormalCoordinates::of_slicing(&m, &s).unwrap();
            let compat = normal.compatibility(&m);
            if compat.equations != 3 * f2 || !compat.is_compatible() || !normal.is_single_sheeted() {
                fail("normal coordinates");
            }
            let rep = &e.report;
            if st.orientable && rep.verdict("seven-halves") == Some(Verdict::Violated) {
                fail("seven-halves violated");
            }
            if rep.verdict("conjectured-quads") == Some(Verdict::Violated) {
                findings.push(format!("{name} {}: q={} chi={}", e.partition, st.q, st.chi));
            }
            if closed_orientable && st.is_connected() {
                match genus_via_span(&m, &e.partition) {
                    Ok(g) if g == st.genus => {}
                    other => fail(&format!("span genus {other:?} vs {}", st.genus)),
                }
            }
            let cross = e.partition.v1().len() * e.partition.v2().len();
            let all_cross_adjacent = e
                .partition
                .v1()
                .iter()
                .all(|&a| e.partition.v2().iter().all(|&b| edges.contains(&vec![a.min(b), a.max(b)])));
            if st.n > cross || (st.n == cross) != all_cross_adjacent || (profile.two_neighborly && st.n != cross) {
                fail("n <= |V1||V2|");
            }
            for r in &rep.records {
                if r.verdict == Verdict::Violated && r.name != "conjectured-quads" {
                    fail(&format!("{} violated", r.name));
                }
            }
        }
    }
    for f in &findings {
        println!("FINDING conjectured-quads violated: {f}");
    }
    let pass = failures.is_empty() && findings.is_empty();
    let mut detail = format!("{checked} slicings, {} failures, {} conjecture findings", failures.len(), findings.len());
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first: {first}"));
    }
    outcome(pass, detail)
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut products = BTreeSet::new();
    let mut disagreements = 0;
    for (_, m) in property_complexes() {
        let result = enumerate_slicings(&m, &SearchSpec { jobs: 4, ..SearchSpec::default() }).unwrap();
        for e in &result.entries {
            let wn = e.report.weak_neighborliness;
            if !wn.agree() {
                disagreements += 1;
            }
            if wn.pairs_covered {
                let r = e.report.get("wn-boundary-product").unwrap();
                ok &= r.verdict == Verdict::Equality;
                products.insert((r.lhs.unwrap().to_integer(), r.rhs.unwrap().to_integer()));
            }
        }
    }
    ok &= disagreements == 0 && products == BTreeSet::from([(0, 0), (24, 24)]);
    outcome(ok, format!("product sides {products:?}, condition disagreements {disagreements}"))
}

fn criterion_10() -> Outcome {
    let m = builtin("bdC4:4").unwrap();
    let run = |jobs| render_search_tsv(&enumerate_slicings(&m, &SearchSpec { jobs, ..SearchSpec::default() }).unwrap());
    let (a, b) = (run(1), run(8));
    outcome(a == b && a.lines().count() > 1, format!("{} bytes, {} rows", a.len(), a.lines().count() - 1))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "grid torus in bdC4:3", criterion_1),
        (2, "odd|even equality family", criterion_2),
        (3, "orbit and evenness constructions agree", criterion_3),
        (4, "cylinder separating spheres", criterion_4),
        (5, "10-vertex sphere nested family", criterion_5),
        (6, "15-vertex non-orientable family", criterion_6),
        (7, "weakly neighborly classification", criterion_7),
        (8, "property suites over all enumerated slicings", criterion_8),
        (9, "boundary product identity and characterisation agreement", criterion_9),
        (10, "enumeration output independent of parallelism", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut unexpected = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        let status = if result.pass { "PASS" } else { "FAIL" };
        let known = !result.pass && KNOWN_DEVIATIONS.contains(&id);
        println!(
            "{status} criterion {id}: {title} [{ms} ms] {}{}",
            result.detail,
            if known { " (known deviation)" } else { "" }
        );
        if !result.pass && !known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
