//! Exact evaluation of the inequalities relating genus, quadrilateral count
//! and vertex counts of a slicing.
//!
//! Every check yields a [`BoundRecord`] holding both sides as rationals and a
//! [`Verdict`]. A violated theorem or identity on a verified slicing of a
//! verified manifold is an alarm: either a bug or a counterexample.

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{binomial, ManifoldVerdict, Orientability, SimplicialComplex, Vertex};
use crate::error::Result;
use crate::slicing::{Slicer, Slicing, SlicingStats, VertexPartition};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Equality,
    Violated,
    PreconditionUnmet,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::Violated => "violated",
            Verdict::PreconditionUnmet => "precondition-unmet",
        }
    }

    /// Holds or equality.
    pub fn is_satisfied(&self) -> bool {
        matches!(self, Verdict::Holds | Verdict::Equality)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "==",
        }
    }

    fn judge(&self, lhs: Rational, rhs: Rational) -> Verdict {
        let ok = match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        };
        match (ok, lhs == rhs) {
            (true, true) => Verdict::Equality,
            (true, false) => Verdict::Holds,
            (false, _) => Verdict::Violated,
        }
    }
}

/// How a violation is to be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// Proven statement: a violation contradicts it.
    Theorem,
    /// Open conjecture: a violation is a counterexample.
    Conjecture,
    /// Counting identity: a violation is a bug.
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRecord {
    pub name: &'static str,
    /// Human-readable statement, e.g. `q >= 3(n+g-1)`.
    pub statement: &'static str,
    pub kind: BoundKind,
    pub relation: Relation,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub verdict: Verdict,
    /// Why the check does not apply, or which parameter was chosen.
    pub note: Option<String>,
}

impl BoundRecord {
    fn evaluate(
        name: &'static str,
        statement: &'static str,
        kind: BoundKind,
        relation: Relation,
        lhs: Rational,
        rhs: Rational,
    ) -> Self {
        BoundRecord {
            name,
            statement,
            kind,
            relation,
            lhs: Some(lhs),
            rhs: Some(rhs),
            verdict: relation.judge(lhs, rhs),
            note: None,
        }
    }

    fn unmet(name: &'static str, statement: &'static str, kind: BoundKind, relation: Relation, reason: impl Into<String>) -> Self {
        BoundRecord {
            name,
            statement,
            kind,
            relation,
            lhs: None,
            rhs: None,
            verdict: Verdict::PreconditionUnmet,
            note: Some(reason.into()),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn applicable(&self) -> bool {
        self.verdict != Verdict::PreconditionUnmet
    }

    pub fn is_alarm(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

fn int(x: impl TryInto<i64>) -> Rational {
    Rational::from_integer(x.try_into().ok().expect("count fits in i64"))
}

/// Properties of the ambient complex that the checks depend on, computed once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientProfile {
    pub f0: usize,
    pub f3: usize,
    pub verdict: ManifoldVerdict,
    pub connected: bool,
    /// `None` unless the complex is a closed connected pseudomanifold.
    pub orientable: Option<bool>,
    pub two_neighborly: bool,
}

impl AmbientProfile {
    pub fn analyze(complex: &SimplicialComplex) -> Result<Self> {
        let check = complex.manifold_check()?;
        let f = complex.f_vector();
        Ok(AmbientProfile {
            f0: f.get(0),
            f3: f.get(3),
            verdict: check.verdict,
            connected: complex.is_connected(),
            orientable: complex
                .orientability()
                .ok()
                .map(|o| o == Orientability::Orientable),
            two_neighborly: complex.is_k_neighborly(2),
        })
    }

    pub fn is_closed_manifold(&self) -> bool {
        self.verdict == ManifoldVerdict::Closed
    }
}

/// `g <= C(n-1, 2)` with `f0 ∈ {2n, 2n+1}`.
pub fn check_genus_upper(profile: &AmbientProfile, stats: &SlicingStats) -> BoundRecord {
    const NAME: &str = "genus-upper";
    const STATEMENT: &str = "g <= C(n-1,2), n = floor(f0/2)";
    if !profile.is_closed_manifold() || !profile.connected || profile.orientable != Some(true) {
        return BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Le, "ambient is not a closed connected orientable manifold");
    }
    if !stats.is_connected() {
        return BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Le, "slicing is disconnected");
    }
    let n = profile.f0 / 2;
    let rhs = int(binomial(n.saturating_sub(1), 2));
    BoundRecord::evaluate(NAME, STATEMENT, BoundKind::Theorem, Relation::Le, stats.genus, rhs).with_note(format!("n = {n}"))
}

/// `g <= 7q/2` for closed oriented connected normal surfaces.
pub fn check_seven_halves(stats: &SlicingStats) -> BoundRecord {
    const NAME: &str = "seven-halves";
    const STATEMENT: &str = "g <= 7q/2";
    if !stats.orientable {
        return BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Le, "slicing is non-orientable");
    }
    if !stats.is_connected() {
        return BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Le, "slicing is disconnected");
    }
    BoundRecord::evaluate(NAME, STATEMENT, BoundKind::Theorem, Relation::Le, stats.genus, Rational::new(7 * stats.q as i64, 2))
}

/// `q >= 4g + 3n/2 - (4 + 2c^2)` in a 2-neighborly manifold, `n = f0`,
/// `c = (|V2| - |V1|)/2`.
pub fn check_main_bound(profile: &AmbientProfile, partition: &VertexPartition, stats: &SlicingStats) -> BoundRecord {
    const NAME: &str = "neighborly-quads";
    const STATEMENT: &str = "q >= 4g + 3n/2 - (4 + 2c^2), n = f0";
    if !profile.is_closed_manifold() {
        return BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Ge, "ambient is not a closed combinatorial manifold");
    }
    if !profile.two_neighborly {
        return BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Ge, "ambient is not 2-neighborly");
    }
    let c = partition.balance();
    let rhs = Rational::from_integer(4) * stats.genus + Rational::new(3 * profile.f0 as i64, 2)
        - (Rational::from_integer(4) + Rational::from_integer(2) * c * c);
    BoundRecord::evaluate(NAME, STATEMENT, BoundKind::Theorem, Relation::Ge, int(stats.q), rhs).with_note(format!("c = {c}"))
}

/// `q >= 3(n + g - 1)` where `span(V_i)` is a graph with at least one edge
/// and `n = |V_i|`. If both sides qualify the larger right-hand side is kept.
pub fn check_quadrangulated_bound(
    profile: &AmbientProfile,
    partition: &VertexPartition,
    span_dimensions: [Option<usize>; 2],
    stats: &SlicingStats,
) -> BoundRecord {
    const NAME: &str = "span-quads";
    const STATEMENT: &str = "q >= 3(n+g-1), n = |V_i| with dim span(V_i) = 1";
    if !profile.is_closed_manifold() {
        return BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Ge, "ambient is not a closed combinatorial manifold");
    }
    if !stats.is_connected() {
        return BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Ge, "slicing is disconnected");
    }
    let sizes = [partition.v1().len(), partition.v2().len()];
    let best = (0..2)
        .filter(|&i| span_dimensions[i] == Some(1))
        .map(|i| (i, int(3) * (int(sizes[i]) + stats.genus - int(1))))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    match best {
        None => BoundRecord::unmet(NAME, STATEMENT, BoundKind::Theorem, Relation::Ge, "neither span is 1-dimensional"),
        Some((i, rhs)) => BoundRecord::evaluate(NAME, STATEMENT, BoundKind::Theorem, Relation::Ge, int(stats.q), rhs)
            .with_note(format!("V{}, n = {}", i + 1, sizes[i])),
    }
}

/// Conjectured `q >= 3 - 3χ/2`.
pub fn check_conjecture(stats: &SlicingStats) -> BoundRecord {
    let rhs = int(3) - Rational::new(3 * stats.chi, 2);
    BoundRecord::evaluate("conjectured-quads", "q >= 3 - 3chi/2", BoundKind::Conjecture, Relation::Ge, int(stats.q), rhs)
}

/// The four characterisations of a weakly neighborly map with `t` triangles
/// and `q` quadrilaterals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeakNeighborliness {
    /// Every vertex pair lies in a common facet.
    pub pairs_covered: bool,
    /// `e = C(n,2) - 2q`.
    pub edge_count: bool,
    /// `2n >= 7` and `(2n-7)^2 = 49 + 8q - 24χ`.
    pub vertex_count: bool,
    /// `q = (n-3)(n-4)/2 + 3χ - 6`.
    pub quad_count: bool,
}

impl WeakNeighborliness {
    pub fn evaluate(slicing: &Slicing, stats: &SlicingStats) -> Self {
        let (n, e, q, chi) = (stats.n as i64, stats.e as i64, stats.q as i64, stats.chi);
        let pairs = n * (n - 1) / 2;
        WeakNeighborliness {
            pairs_covered: slicing.is_weakly_neighborly(),
            edge_count: e == pairs - 2 * q,
            vertex_count: 2 * n >= 7 && (2 * n - 7).pow(2) == 49 + 8 * q - 24 * chi,
            quad_count: 2 * q == (n - 3) * (n - 4) + 6 * chi - 12,
        }
    }

    pub fn as_array(&self) -> [bool; 4] {
        [self.pairs_covered, self.edge_count, self.vertex_count, self.quad_count]
    }

    pub fn agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }

    pub fn holds(&self) -> bool {
        self.pairs_covered
    }
}

/// Vertices of each part that are an endpoint of some cut edge.
pub fn boundary_vertex_counts(slicing: &Slicing) -> (usize, usize) {
    let upper: BTreeSet<Vertex> = slicing.vertices().iter().map(|v| v.upper).collect();
    let lower: BTreeSet<Vertex> = slicing.vertices().iter().map(|v| v.lower).collect();
    (upper.len(), lower.len())
}

/// Checks that only apply to weakly neighborly or quadrangulated maps.
pub fn check_wn_conditions(slicing: &Slicing, stats: &SlicingStats) -> (WeakNeighborliness, Vec<BoundRecord>) {
    let wn = WeakNeighborliness::evaluate(slicing, stats);
    let mut records = Vec::new();

    const PRODUCT: &str = "wn-boundary-product";
    const PRODUCT_STATEMENT: &str = "n1 n2 (15 - n1 n2 - n1 - n2) = 12chi";
    if wn.holds() {
        let (n1, n2) = boundary_vertex_counts(slicing);
        let (a, b) = (n1 as i64, n2 as i64);
        records.push(
            BoundRecord::evaluate(
                PRODUCT,
                PRODUCT_STATEMENT,
                BoundKind::Theorem,
                Relation::Eq,
                int(a * b * (15 - a * b - a - b)),
                int(12 * stats.chi),
            )
            .with_note(format!("n1 = {n1}, n2 = {n2}")),
        );
    } else {
        records.push(BoundRecord::unmet(PRODUCT, PRODUCT_STATEMENT, BoundKind::Theorem, Relation::Eq, "slicing is not weakly neighborly"));
    }

    const HEAWOOD: &str = "quad-heawood";
    const HEAWOOD_STATEMENT: &str = "2n >= 9 + sqrt(81 - 32chi), checked as (2n-9)|2n-9| >= 81 - 32chi";
    const SHARP: &str = "quad-heawood-sharp";
    const SHARP_STATEMENT: &str = "equality in quad-heawood iff weakly neighborly";
    if stats.t == 0 && stats.is_connected() {
        let d = 2 * stats.n as i64 - 9;
        let heawood = BoundRecord::evaluate(
            HEAWOOD,
            HEAWOOD_STATEMENT,
            BoundKind::Theorem,
            Relation::Ge,
            int(d * d.abs()),
            int(81 - 32 * stats.chi),
        );
        let tight = heawood.verdict == Verdict::Equality;
        records.push(heawood);
        records.push(BoundRecord::evaluate(
            SHARP,
            SHARP_STATEMENT,
            BoundKind::Theorem,
            Relation::Eq,
            int(tight as i64),
            int(wn.holds() as i64),
        ));
    } else {
        let reason = if stats.t > 0 { "slicing has triangles" } else { "slicing is disconnected" };
        records.push(BoundRecord::unmet(HEAWOOD, HEAWOOD_STATEMENT, BoundKind::Theorem, Relation::Ge, reason));
        records.push(BoundRecord::unmet(SHARP, SHARP_STATEMENT, BoundKind::Theorem, Relation::Eq, reason));
    }
    (wn, records)
}

/// Counting identities every slicing satisfies.
pub fn check_identities(complex: &SimplicialComplex, slicing: &Slicing, stats: &SlicingStats) -> Vec<BoundRecord> {
    let partition = slicing.partition();
    let inside = complex
        .facets()
        .iter()
        .filter(|tet| tet.iter().all(|v| partition.v1().contains(v)) || tet.iter().all(|v| partition.v2().contains(v)))
        .count();
    vec![
        BoundRecord::evaluate("ds-edges", "2e = 3t + 4q", BoundKind::Identity, Relation::Eq, int(2 * stats.e), int(3 * stats.t + 4 * stats.q)),
        BoundRecord::evaluate(
            "cut-edges",
            "n <= |V1||V2|",
            BoundKind::Identity,
            Relation::Le,
            int(stats.n),
            int(partition.v1().len() * partition.v2().len()),
        ),
        BoundRecord::evaluate(
            "spare-tets",
            "f3 - t - q = tetrahedra inside span(V1) or span(V2)",
            BoundKind::Identity,
            Relation::Eq,
            int(complex.facets().len() as i64 - (stats.t + stats.q) as i64),
            int(inside),
        ),
    ]
}

/// `β1 - β2` of both spans against the genus; needs homology, so it is not
/// part of [`BoundReport::evaluate`].
pub fn check_betti_relation(profile: &AmbientProfile, slicer: &Slicer<'_>, partition: &VertexPartition, stats: &SlicingStats) -> Vec<BoundRecord> {
    const NAMES: [&str; 2] = ["betti-v1", "betti-v2"];
    const STATEMENT: &str = "b1 - b2 of span(V_i) = g";
    let reason = if !profile.is_closed_manifold() || !profile.connected || profile.orientable != Some(true) {
        Some("ambient is not a closed connected orientable manifold")
    } else if !stats.is_connected() {
        Some("slicing is disconnected")
    } else {
        None
    };
    [partition.v1(), partition.v2()]
        .into_iter()
        .zip(NAMES)
        .map(|(part, name)| match reason {
            Some(r) => BoundRecord::unmet(name, STATEMENT, BoundKind::Theorem, Relation::Eq, r),
            None => {
                let betti = slicer.span(part).betti_numbers();
                let lhs = betti.get(1) as i64 - betti.get(2) as i64;
                BoundRecord::evaluate(name, STATEMENT, BoundKind::Theorem, Relation::Eq, int(lhs), stats.genus)
                    .with_note(format!("betti {betti}"))
            }
        })
        .collect()
}

/// Every check on one slicing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub records: Vec<BoundRecord>,
    pub weak_neighborliness: WeakNeighborliness,
}

impl BoundReport {
    pub fn evaluate(profile: &AmbientProfile, slicer: &Slicer<'_>, slicing: &Slicing, stats: &SlicingStats) -> Self {
        let partition = slicing.partition();
        let dims = [slicer.span(partition.v1()).dimension(), slicer.span(partition.v2()).dimension()];
        let mut records = vec![
            check_genus_upper(profile, stats),
            check_seven_halves(stats),
            check_main_bound(profile, partition, stats),
            check_quadrangulated_bound(profile, partition, dims, stats),
            check_conjecture(stats),
        ];
        let (wn, extra) = check_wn_conditions(slicing, stats);
        records.extend(extra);
        records.extend(check_identities(slicer.complex(), slicing, stats));
        BoundReport { records, weak_neighborliness: wn }
    }

    /// Adds the span homology checks.
    pub fn with_homology(mut self, profile: &AmbientProfile, slicer: &Slicer<'_>, stats: &SlicingStats, partition: &VertexPartition) -> Self {
        self.records.extend(check_betti_relation(profile, slicer, partition, stats));
        self
    }

    pub fn get(&self, name: &str) -> Option<&BoundRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn verdict(&self, name: &str) -> Option<Verdict> {
        self.get(name).map(|r| r.verdict)
    }

    /// Violated records, plus a pseudo-alarm if the weak neighborliness
    /// characterisations disagree.
    pub fn alarms(&self) -> Vec<String> {
        let mut alarms: Vec<String> = self
            .records
            .iter()
            .filter(|r| r.is_alarm())
            .map(|r| format!("{} violated ({:?})", r.name, r.kind))
            .collect();
        if !self.weak_neighborliness.agree() {
            alarms.push(format!("weak neighborliness characterisations disagree: {:?}", self.weak_neighborliness.as_array()));
        }
        alarms
    }

    pub fn has_alarm(&self) -> bool {
        !self.alarms().is_empty()
    }

    /// Compact summary: `ALARM:...` or the list of equality cases.
    pub fn digest(&self) -> String {
        let alarms: Vec<&str> = self.records.iter().filter(|r| r.is_alarm()).map(|r| r.name).collect();
        if !alarms.is_empty() || !self.weak_neighborliness.agree() {
            let mut names = alarms.join(",");
            if !self.weak_neighborliness.agree() {
                if !names.is_empty() {
                    names.push(',');
                }
                names.push_str("wn-agreement");
            }
            return format!("ALARM:{names}");
        }
        let equal: Vec<&str> = self
            .records
            .iter()
            .filter(|r| r.verdict == Verdict::Equality && r.kind != BoundKind::Identity && r.name != "quad-heawood-sharp")
            .map(|r| r.name)
            .collect();
        if equal.is_empty() {
            "ok".into()
        } else {
            format!("eq:{}", equal.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{boundary_of_simplex, builtin, cyclic_polytope_boundary};

    fn report(complex: &SimplicialComplex, v1: &[Vertex]) -> (SlicingStats, BoundReport) {
        let slicer = Slicer::new(complex).unwrap();
        let profile = AmbientProfile::analyze(complex).unwrap();
        let p = VertexPartition::with_complement(complex, v1.iter().copied()).unwrap();
        let s = slicer.slice(&p).unwrap();
        let stats = s.stats().unwrap();
        let r = BoundReport::evaluate(&profile, &slicer, &s, &stats).with_homology(&profile, &slicer, &stats, &p);
        (stats, r)
    }

    fn sides(r: &BoundReport, name: &str) -> (Rational, Rational) {
        let rec = r.get(name).unwrap();
        (rec.lhs.unwrap(), rec.rhs.unwrap())
    }

    #[test]
    fn grid_torus_report() {
        let k = cyclic_polytope_boundary(3).unwrap();
        let (_, r) = report(&k, &[1, 3, 5]);
        assert_eq!(r.verdict("genus-upper"), Some(Verdict::Equality));
        assert_eq!(r.verdict("seven-halves"), Some(Verdict::Holds));
        assert_eq!(sides(&r, "seven-halves").1, Rational::new(63, 2));
        assert_eq!(r.verdict("neighborly-quads"), Some(Verdict::Equality));
        assert_eq!(r.verdict("span-quads"), Some(Verdict::Equality));
        assert_eq!(r.verdict("conjectured-quads"), Some(Verdict::Holds));
        assert_eq!(r.verdict("wn-boundary-product"), Some(Verdict::Equality));
        assert_eq!(r.verdict("quad-heawood"), Some(Verdict::Equality));
        assert_eq!(r.verdict("quad-heawood-sharp"), Some(Verdict::Equality));
        assert_eq!(r.verdict("betti-v1"), Some(Verdict::Equality));
        assert_eq!(r.weak_neighborliness.as_array(), [true; 4]);
        assert!(!r.has_alarm());
    }

    #[test]
    fn vertex_figure_is_tight_everywhere_trivial() {
        let k = boundary_of_simplex(4).unwrap();
        let (_, r) = report(&k, &[1]);
        assert_eq!(r.verdict("genus-upper"), Some(Verdict::Equality));
        assert_eq!(r.verdict("seven-halves"), Some(Verdict::Equality));
        assert_eq!(r.verdict("conjectured-quads"), Some(Verdict::Equality));
        assert_eq!(sides(&r, "neighborly-quads"), (Rational::from_integer(0), Rational::from_integer(-1)));
        assert_eq!(r.verdict("span-quads"), Some(Verdict::PreconditionUnmet));
        assert_eq!(r.weak_neighborliness.as_array(), [true; 4]);
        assert_eq!(sides(&r, "wn-boundary-product"), (Rational::from_integer(24), Rational::from_integer(24)));
    }

    #[test]
    fn prism_product_identity() {
        let k = boundary_of_simplex(4).unwrap();
        let (stats, r) = report(&k, &[1, 2]);
        assert_eq!(stats.f_vector(), [6, 9, 2, 3]);
        assert_eq!(r.get("wn-boundary-product").unwrap().note.as_deref(), Some("n1 = 2, n2 = 3"));
        assert_eq!(r.verdict("wn-boundary-product"), Some(Verdict::Equality));
    }

    #[test]
    fn cuboctahedron_is_consistently_not_weakly_neighborly() {
        let c2 = builtin("C2").unwrap();
        let (_, r) = report(&c2, &[1, 2, 3, 4]);
        let wn = r.weak_neighborliness;
        assert!(!wn.pairs_covered && !wn.edge_count);
        assert!(wn.agree());
        assert_eq!(r.verdict("genus-upper"), Some(Verdict::PreconditionUnmet));
        assert_eq!(r.verdict("neighborly-quads"), Some(Verdict::PreconditionUnmet));
    }

    #[test]
    fn unbalanced_partition_of_cyclic_polytope() {
        let k = cyclic_polytope_boundary(4).unwrap();
        let (_, r) = report(&k, &[1, 3, 5, 7]);
        assert_eq!(r.verdict("neighborly-quads"), Some(Verdict::Equality));
        assert_eq!(sides(&r, "neighborly-quads").0, Rational::from_integer(20));
        let (_, r) = report(&k, &[1]);
        assert_eq!(r.get("neighborly-quads").unwrap().note.as_deref(), Some("c = 3"));
        assert!(!r.has_alarm());
    }

    #[test]
    fn non_orientable_slicing_skips_seven_halves() {
        let k = builtin("s2xs1-15").unwrap();
        let (stats, r) = report(&k, &[1, 4, 7, 10]);
        assert!(!stats.orientable);
        assert_eq!(r.verdict("seven-halves"), Some(Verdict::PreconditionUnmet));
        assert_eq!(r.verdict("span-quads"), Some(Verdict::Equality));
        assert_eq!(r.verdict("betti-v1"), Some(Verdict::PreconditionUnmet));
    }

    #[test]
    fn relation_judgement() {
        let one = Rational::from_integer(1);
        let two = Rational::from_integer(2);
        assert_eq!(Relation::Le.judge(one, two), Verdict::Holds);
        assert_eq!(Relation::Ge.judge(one, two), Verdict::Violated);
        assert_eq!(Relation::Ge.judge(two, two), Verdict::Equality);
        assert_eq!(Relation::Eq.judge(one, two), Verdict::Violated);
    }

    #[test]
    fn fabricated_counterexample_raises_alarm() {
        let stats = SlicingStats {
            n: 10,
            e: 20,
            t: 0,
            q: 2,
            chi: -8,
            orientable: true,
            genus: Rational::from_integer(5),
            components: 1,
            vertex_linking_components: 0,
        };
        assert_eq!(check_conjecture(&stats).verdict, Verdict::Violated);
        assert_eq!(check_seven_halves(&stats).verdict, Verdict::Holds);
    }
}
