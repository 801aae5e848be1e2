use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use normslice_core::bounds::{AmbientProfile, BoundReport};
use normslice_core::constructors::Builtin;
use normslice_core::io::{
    parse_complex, render_bound_report, render_complex, render_extremal_table, render_info,
    render_search_table, render_search_tsv, render_stats, write_off,
};
use normslice_core::search::{
    enumerate_slicings, extremal_table, nested_family, SearchSpec, S2XS1_15_REFERENCE, SPHERE_10_REFERENCE,
};
use normslice_core::{Error, Permutation, SimplicialComplex, Slicer, Vertex, VertexPartition};

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_ALARM: u8 = 3;

/// Slicings of combinatorial 3-manifolds.
///
/// COMPLEX arguments are facet-list files or `builtin:NAME`.
#[derive(Parser)]
#[command(name = "normslice", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the facet list of a built-in complex.
    Construct {
        /// delta4, boundary-simplex:D, bdC4:K, C1, C2, gruenbaum-sphere-10, s2xs1-15
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// f-vector, manifold verdict, neighborliness and edge-count checks.
    Info { complex: String },
    /// Slice along a vertex partition.
    Slice {
        complex: String,
        /// Comma-separated labels of V1; V2 is the complement.
        #[arg(long, value_delimiter = ',', required = true)]
        v1: Vec<Vertex>,
        /// Write the slicing as a polygonal OFF mesh.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Append the bound report.
        #[arg(long)]
        report: bool,
    },
    /// Enumerate slicings over all vertex partitions.
    Enumerate {
        complex: String,
        /// Range for the smaller part size, as `lo:hi`.
        #[arg(long, value_parser = parse_range)]
        sizes: Option<(usize, usize)>,
        #[arg(long)]
        wn_only: bool,
        #[arg(long)]
        connected_only: bool,
        /// File with one symmetry generator per line in cycle notation.
        #[arg(long)]
        sym: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Full bound report; exits 3 if any check is violated.
    Verify {
        complex: String,
        #[arg(long, value_delimiter = ',', required = true)]
        v1: Vec<Vertex>,
    },
    /// Genus, span size and quadrilateral count along a nested chain of V1 sets.
    Table {
        complex: String,
        /// V1 runs through the prefixes of this list.
        #[arg(long, value_delimiter = ',', required = true)]
        chain: Vec<Vertex>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Table,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once(':').unwrap_or((s, s));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a size"));
    Ok((num(lo)?, num(hi)?))
}

fn load_complex(arg: &str) -> Result<(SimplicialComplex, Option<Builtin>), Error> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        let b: Builtin = name.parse()?;
        return Ok((b.build()?, Some(b)));
    }
    let text = fs::read_to_string(arg)?;
    let parsed = parse_complex(&text)?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok((parsed.complex, None))
}

fn load_generators(path: &Path) -> Result<Vec<Permutation>, Error> {
    fs::read_to_string(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Construct { name, output } => {
            let complex = name.parse::<Builtin>()?.build()?;
            emit(&render_complex(&complex), output.as_deref())?;
            Ok(0)
        }
        Command::Info { complex } => {
            let (complex, _) = load_complex(&complex)?;
            print!("{}", render_info(&complex)?);
            Ok(0)
        }
        Command::Slice { complex, v1, output, report } => {
            let (complex, _) = load_complex(&complex)?;
            let slicer = Slicer::new(&complex)?;
            let partition = VertexPartition::with_complement(&complex, v1)?;
            let slicing = slicer.slice(&partition)?;
            let stats = slicing.stats()?;
            print!("{}", render_stats(&slicing, &stats));
            if let Some(path) = output {
                write_off(&complex, &slicing, &path)?;
            }
            if !report {
                return Ok(0);
            }
            let profile = AmbientProfile::analyze(&complex)?;
            let bounds = BoundReport::evaluate(&profile, &slicer, &slicing, &stats)
                .with_homology(&profile, &slicer, &stats, &partition);
            println!();
            print!("{}", render_bound_report(&bounds));
            Ok(if bounds.has_alarm() { EXIT_ALARM } else { 0 })
        }
        Command::Enumerate { complex, sizes, wn_only, connected_only, sym, jobs, format } => {
            let (complex, _) = load_complex(&complex)?;
            let symmetry = match sym {
                Some(path) => load_generators(&path)?,
                None => Vec::new(),
            };
            let spec = SearchSpec {
                sizes,
                connected_only,
                weakly_neighborly_only: wn_only,
                symmetry,
                jobs: jobs.max(1),
                ..SearchSpec::default()
            };
            let result = enumerate_slicings(&complex, &spec)?;
            match format {
                Format::Tsv => print!("{}", render_search_tsv(&result)),
                Format::Table => print!("{}", render_search_table(&result)),
            }
            let alarms = result.alarms().count();
            if alarms > 0 {
                eprintln!("{alarms} slicings raised alarms");
                return Ok(EXIT_ALARM);
            }
            Ok(0)
        }
        Command::Verify { complex, v1 } => {
            let (complex, _) = load_complex(&complex)?;
            let slicer = Slicer::new(&complex)?;
            let profile = AmbientProfile::analyze(&complex)?;
            let partition = VertexPartition::with_complement(&complex, v1)?;
            let slicing = slicer.slice(&partition)?;
            slicing
                .validate_structure()
                .map_err(|v| Error::InvalidArgument(format!("structural check failed: {v}")))?;
            let stats = slicing.stats()?;
            let bounds = BoundReport::evaluate(&profile, &slicer, &slicing, &stats)
                .with_homology(&profile, &slicer, &stats, &partition);
            print!("{}", render_stats(&slicing, &stats));
            println!();
            print!("{}", render_bound_report(&bounds));
            Ok(if bounds.has_alarm() { EXIT_ALARM } else { 0 })
        }
        Command::Table { complex, chain } => {
            let (complex, builtin) = load_complex(&complex)?;
            let reference = match builtin {
                Some(Builtin::GruenbaumSphere10) => SPHERE_10_REFERENCE,
                Some(Builtin::TwistedS2xS1_15) => S2XS1_15_REFERENCE,
                _ => &[],
            };
            let rows = extremal_table(&complex, &nested_family(&complex, &chain)?, reference)?;
            print!("{}", render_extremal_table(&rows));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DATA)
        }
    }
}
