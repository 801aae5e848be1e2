//! Facet-list documents, OFF export and plain-text report rendering.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::bounds::{AmbientProfile, BoundReport};
use crate::complex::{Certificate, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::search::{SearchResult, TableRow};
use crate::slicing::{Slicing, SlicingStats};

/// A parsed complex plus non-fatal remarks (duplicate facets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedComplex {
    pub complex: SimplicialComplex,
    pub warnings: Vec<String>,
}

/// Reads one facet per line as whitespace-separated positive labels. Blank
/// lines and lines starting with `#` are ignored. Duplicate facets are
/// dropped with a warning.
pub fn parse_complex(text: &str) -> Result<ParsedComplex> {
    let mut facets: Vec<Face> = Vec::new();
    let mut seen: BTreeSet<Face> = BTreeSet::new();
    let mut warnings = Vec::new();
    let mut arity: Option<(usize, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut facet = trimmed
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse { line, message: format!("`{tok}` is not a vertex label") })
                    .and_then(|v| {
                        if v == 0 {
                            Err(Error::Parse { line, message: "vertex labels start at 1".into() })
                        } else {
                            Ok(v)
                        }
                    })
            })
            .collect::<Result<Face>>()?;
        match arity {
            None => arity = Some((facet.len(), line)),
            Some((k, first)) if k != facet.len() => {
                return Err(Error::Parse {
                    line,
                    message: format!("facet has {} vertices but line {first} has {k}", facet.len()),
                })
            }
            _ => {}
        }
        facet.sort_unstable();
        if facet.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse { line, message: "repeated vertex in facet".into() });
        }
        if !seen.insert(facet.clone()) {
            warnings.push(format!("line {line}: duplicate facet {facet:?} dropped"));
            continue;
        }
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(Error::EmptyComplex);
    }
    Ok(ParsedComplex { complex: SimplicialComplex::new(facets)?, warnings })
}

/// One facet per line, in the complex's sorted order.
pub fn render_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for facet in complex.facets() {
        let labels: Vec<String> = facet.iter().map(u32::to_string).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// Positions the vertices of `complex` (in sorted order) on the unit sphere
/// using the first three nontrivial Laplacian eigenvectors of the 1-skeleton.
/// Each eigenvector is signed so its largest-magnitude entry is positive.
pub fn spectral_layout(complex: &SimplicialComplex) -> Vec<[f64; 3]> {
    let vertices = complex.vertices();
    let n = vertices.len();
    let index = |v| vertices.binary_search(&v).expect("vertex of complex");
    let mut laplacian = DMatrix::<f64>::zeros(n, n);
    for edge in complex.faces().faces(1) {
        let (a, b) = (index(edge[0]), index(edge[1]));
        laplacian[(a, b)] = -1.0;
        laplacian[(b, a)] = -1.0;
        laplacian[(a, a)] += 1.0;
        laplacian[(b, b)] += 1.0;
    }
    let eigen = SymmetricEigen::new(laplacian);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eigen.eigenvalues[i].total_cmp(&eigen.eigenvalues[j]).then(i.cmp(&j)));
    let mut coords = vec![[0.0; 3]; n];
    for (axis, &col) in order.iter().skip(1).take(3).enumerate() {
        let v = eigen.eigenvectors.column(col);
        let pivot = (0..n)
            .max_by(|&i, &j| v[i].abs().total_cmp(&v[j].abs()).then(j.cmp(&i)))
            .expect("nonempty");
        let sign = if v[pivot] < 0.0 { -1.0 } else { 1.0 };
        for (row, c) in coords.iter_mut().enumerate() {
            c[axis] = sign * v[row];
        }
    }
    for c in &mut coords {
        let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            c.iter_mut().for_each(|x| *x /= norm);
        }
    }
    coords
}

fn fixed(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Polygonal OFF: slicing vertices at the midpoints of their ambient edges,
/// one face per triangle or quadrilateral in cyclic order.
pub fn off_string(complex: &SimplicialComplex, slicing: &Slicing) -> Result<String> {
    slicing.check_closed()?;
    let layout = spectral_layout(complex);
    let vertices = complex.vertices();
    let at = |v| {
        vertices
            .binary_search(&v)
            .map(|i| layout[i])
            .map_err(|_| Error::UnknownVertex(v))
    };
    let mut out = String::from("OFF\n");
    let _ = writeln!(out, "{} {} 0", slicing.vertices().len(), slicing.facets().len());
    for v in slicing.vertices() {
        let (a, b) = (at(v.upper)?, at(v.lower)?);
        let mid: Vec<String> = (0..3).map(|i| fixed((a[i] + b[i]) / 2.0)).collect();
        let _ = writeln!(out, "{}", mid.join(" "));
    }
    for facet in slicing.facets() {
        let idx: Vec<String> = facet.boundary.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{} {}", facet.boundary.len(), idx.join(" "));
    }
    Ok(out)
}

pub fn write_off(complex: &SimplicialComplex, slicing: &Slicing, path: &Path) -> Result<()> {
    let text = off_string(complex, slicing)?;
    std::fs::write(path, text)?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_info(complex: &SimplicialComplex) -> Result<String> {
    let mut out = String::new();
    let f = complex.f_vector();
    let _ = writeln!(out, "vertices: {}", complex.num_vertices());
    let _ = writeln!(out, "dimension: {}", complex.dimension());
    let _ = writeln!(out, "f-vector: {f}");
    let _ = writeln!(out, "euler characteristic: {}", f.euler_characteristic());
    let _ = writeln!(out, "connected: {}", yes_no(complex.is_connected()));
    if complex.dimension() == 3 {
        let check = complex.manifold_check()?;
        let _ = writeln!(out, "manifold: {:?}", check.verdict);
        match check.certificate {
            Some(Certificate::Ridge { ridge, degree }) => {
                let _ = writeln!(out, "certificate: ridge {ridge:?} in {degree} facets");
            }
            Some(Certificate::Link { vertex, defect }) => {
                let _ = writeln!(out, "certificate: link of {vertex}: {defect:?}");
            }
            None => {}
        }
        let profile = AmbientProfile::analyze(complex)?;
        let orientable = match profile.orientable {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        let _ = writeln!(out, "orientable: {orientable}");
    }
    let neighborly = (1..=complex.dimension() + 1)
        .take_while(|&k| complex.is_k_neighborly(k))
        .last()
        .unwrap_or(0);
    let _ = writeln!(out, "neighborly: {neighborly}");
    if complex.dimension() == 3 {
        let lbt = complex.lbt_ds_check();
        let _ = writeln!(
            out,
            "lower bound: f1 = {} >= 4f0 - 10 = {}: {}{}",
            f.get(1),
            lbt.lbt_lower,
            yes_no(lbt.lbt_holds),
            if lbt.lbt_equality { " (equality)" } else { "" }
        );
        let _ = writeln!(out, "edge bound: f1 <= C(f0,2) = {}: {}", lbt.edge_upper, yes_no(lbt.edge_upper_holds));
        let _ = writeln!(out, "dehn-sommerville residuals: {} {}", lbt.euler_residual, lbt.ridge_residual);
        if let Some(p) = lbt.precondition {
            let _ = writeln!(out, "note: {p}");
        }
    }
    Ok(out)
}

pub fn render_stats(slicing: &Slicing, stats: &SlicingStats) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "partition: {}", slicing.partition());
    let _ = writeln!(out, "f-vector (n,e,t,q): ({},{},{},{})", stats.n, stats.e, stats.t, stats.q);
    let _ = writeln!(out, "euler characteristic: {}", stats.chi);
    let _ = writeln!(out, "orientable: {}", yes_no(stats.orientable));
    let _ = writeln!(out, "genus: {}", stats.genus);
    let _ = writeln!(out, "components: {}", stats.components);
    let _ = writeln!(out, "vertex-linking components: {}", stats.vertex_linking_components);
    let _ = writeln!(out, "weakly neighborly: {}", yes_no(slicing.is_weakly_neighborly()));
    out
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    out.push_str(&line(header.to_vec()));
    out.push('\n');
    out.push_str(&line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn render_bound_report(report: &BoundReport) -> String {
    let rows: Vec<Vec<String>> = report
        .records
        .iter()
        .map(|r| {
            vec![
                r.name.to_string(),
                r.verdict.to_string(),
                r.lhs.map(|x| x.to_string()).unwrap_or_else(|| "-".into()),
                r.relation.symbol().to_string(),
                r.rhs.map(|x| x.to_string()).unwrap_or_else(|| "-".into()),
                r.note.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let mut out = table(&["check", "verdict", "lhs", "rel", "rhs", "note"], &rows);
    let wn = report.weak_neighborliness;
    let _ = writeln!(
        out,
        "weak neighborliness (pairs, edges, vertices, quads): {} {} {} {}",
        yes_no(wn.pairs_covered),
        yes_no(wn.edge_count),
        yes_no(wn.vertex_count),
        yes_no(wn.quad_count)
    );
    for alarm in report.alarms() {
        let _ = writeln!(out, "ALARM: {alarm}");
    }
    out
}

fn labels(set: &BTreeSet<u32>) -> String {
    set.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn search_rows(result: &SearchResult) -> Vec<Vec<String>> {
    result
        .entries
        .iter()
        .map(|e| {
            let s = &e.stats;
            vec![
                labels(e.partition.v1()),
                labels(e.partition.v2()),
                s.n.to_string(),
                s.e.to_string(),
                s.t.to_string(),
                s.q.to_string(),
                s.chi.to_string(),
                yes_no(s.orientable).to_string(),
                s.genus.to_string(),
                s.components.to_string(),
                yes_no(e.weakly_neighborly).to_string(),
                e.report.digest(),
            ]
        })
        .collect()
}

const SEARCH_HEADER: [&str; 12] = ["v1", "v2", "n", "e", "t", "q", "chi", "orientable", "genus", "components", "wn", "bounds"];

/// Tab-separated, one slicing per line, with a header.
pub fn render_search_tsv(result: &SearchResult) -> String {
    let mut out = SEARCH_HEADER.join("\t");
    out.push('\n');
    for row in search_rows(result) {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

pub fn render_search_table(result: &SearchResult) -> String {
    let mut out = table(&SEARCH_HEADER, &search_rows(result));
    let _ = writeln!(
        out,
        "{} slicings, {} partitions examined, {} skipped",
        result.entries.len(),
        result.examined,
        result.skipped
    );
    out
}

pub fn render_extremal_table(rows: &[TableRow]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let reference = r
                .reference
                .map(|x| format!("{} {} {}", x.genus, x.n, x.q))
                .unwrap_or_else(|| "-".into());
            vec![
                labels(r.partition.v1()),
                r.genus.to_string(),
                r.n.to_string(),
                r.q.to_string(),
                yes_no(r.orientable).to_string(),
                r.span_bound.to_string(),
                reference,
                if r.diffs.is_empty() { "-".into() } else { r.diffs.join(",") },
            ]
        })
        .collect();
    table(&["v1", "g", "n", "q", "orientable", "span-quads", "reference g n q", "diff"], &body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{builtin, cyclic_polytope_boundary, Builtin};
    use crate::slicing::{slice, VertexPartition};

    const BDC4_6: &str = "\
# boundary of the cyclic 4-polytope with 6 vertices
1 2 3 4
1 2 3 6
1 2 4 5
1 2 5 6
1 3 4 6
1 4 5 6
2 3 4 5
2 3 5 6
3 4 5 6
";

    #[test]
    fn parses_listing() {
        let parsed = parse_complex(BDC4_6).unwrap();
        assert!(parsed.warnings.is_empty());
        assert_eq!(parsed.complex, cyclic_polytope_boundary(3).unwrap());
    }

    #[test]
    fn single_tetrahedron() {
        let k = parse_complex("1 2 3 4").unwrap().complex;
        assert_eq!(k.facets().len(), 1);
        assert!(k.boundary().is_some());
    }

    #[test]
    fn ragged_arity_names_line() {
        let err = parse_complex("1 2 3 4\n# c\n2 3 4 5\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(parse_complex("# nothing\n\n"), Err(Error::EmptyComplex)));
        assert!(matches!(parse_complex("1 2 x 4"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("0 1 2 3"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("1 -2 3 4"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("1 2 2 4"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn duplicates_warn() {
        let parsed = parse_complex("1 2 3 4\n4 3 2 1\n").unwrap();
        assert_eq!(parsed.complex.facets().len(), 1);
        assert_eq!(parsed.warnings.len(), 1);
    }

    #[test]
    fn builtins_round_trip() {
        for name in ["delta4", "bdC4:3", "bdC4:5", "C1", "C2", "gruenbaum-sphere-10", "s2xs1-15"] {
            let k: SimplicialComplex = name.parse::<Builtin>().unwrap().build().unwrap();
            assert_eq!(parse_complex(&render_complex(&k)).unwrap().complex, k, "{name}");
        }
    }

    #[test]
    fn layout_is_on_unit_sphere() {
        let k = builtin("gruenbaum-sphere-10").unwrap();
        for c in spectral_layout(&k) {
            let norm: f64 = c.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-9);
        }
    }

    fn off_for(k: &SimplicialComplex, v1: &[u32]) -> String {
        let p = VertexPartition::with_complement(k, v1.iter().copied()).unwrap();
        off_string(k, &slice(k, &p).unwrap()).unwrap()
    }

    fn arities(off: &str) -> Vec<usize> {
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        let counts: Vec<usize> = lines.next().unwrap().split(' ').map(|x| x.parse().unwrap()).collect();
        let faces: Vec<&str> = lines.skip(counts[0]).collect();
        assert_eq!(faces.len(), counts[1]);
        assert_eq!(counts[2], 0);
        faces.iter().map(|f| f.split(' ').next().unwrap().parse().unwrap()).collect()
    }

    #[test]
    fn off_grid_torus() {
        let k = cyclic_polytope_boundary(3).unwrap();
        let off = off_for(&k, &[1, 3, 5]);
        assert!(off.starts_with("OFF\n9 9 0\n"));
        assert_eq!(arities(&off), vec![4; 9]);
        assert_eq!(off, off_for(&k, &[1, 3, 5]));
        assert!(!off.contains("-0.000000"));
    }

    #[test]
    fn off_vertex_figure_and_cuboctahedron() {
        let d = builtin("delta4").unwrap();
        assert_eq!(arities(&off_for(&d, &[1])), vec![3; 4]);
        let c2 = builtin("C2").unwrap();
        let a = arities(&off_for(&c2, &[1, 2, 3, 4]));
        assert_eq!(a.len(), 14);
        assert_eq!(a.iter().filter(|&&x| x == 3).count(), 8);
        assert_eq!(a.iter().filter(|&&x| x == 4).count(), 6);
        assert!(off_for(&c2, &[1, 2, 3, 4]).contains("\n12 14 0\n"));
    }

    #[test]
    fn negative_zero_is_normalised() {
        assert_eq!(fixed(-0.0000001), "0.000000");
        assert_eq!(fixed(-0.5), "-0.500000");
    }

    #[test]
    fn renders_reports() {
        let k = cyclic_polytope_boundary(3).unwrap();
        let p = VertexPartition::with_complement(&k, [1, 3, 5]).unwrap();
        let s = slice(&k, &p).unwrap();
        let stats = s.stats().unwrap();
        let text = render_stats(&s, &stats);
        assert!(text.contains("(9,18,0,9)"));
        assert!(text.contains("genus: 1"));
        let info = render_info(&k).unwrap();
        assert!(info.contains("f-vector: (6,15,18,9)"));
        assert!(info.contains("manifold: Closed"));
        assert!(info.contains("neighborly: 2"));
    }
}
