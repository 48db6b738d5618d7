//! `hopflike`: word normalization, enumeration queries and identity sweeps.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hopflike_core::category::{parse_word, Family, Realization};
use hopflike_core::hopfverify::{self, Reading};
use hopflike_core::simplicial::verify_simplicial_identities;
use hopflike_core::symfunc::literal::print_tensor;
use hopflike_core::{
    enumerate_compositions, enumerate_matrices, Composition, EntryMode, HallTables,
    SymFuncRealization, VerificationReport,
};

#[derive(Parser)]
#[command(name = "hopflike", version, about = "Compositions, their generator category and its symmetric-function realization")]
struct Cli {
    /// Hall table cache file (defaults to $HOPFLIKE_CACHE)
    #[arg(long, global = true, env = "HOPFLIKE_CACHE")]
    cache: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Record wall-clock time in reports (otherwise `millis` is 0)
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run an identity sweep; exits 0 iff every report passes
    #[command(subcommand)]
    Verify(Verify),
    /// Exploratory computations; always exit 0
    #[command(subcommand)]
    Explore(Explore),
    /// List contingency matrices with given margins
    Matrices(MatricesArgs),
    /// List compositions of n
    Compositions(CompositionsArgs),
    /// Parse a word, print its endpoints and the matrix of its realization
    Normalize(NormalizeArgs),
    /// Inspect or delete the Hall table cache
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Subcommand)]
enum Verify {
    /// The five simplicial identity families
    Simplicial {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// A relation family under the symmetric-function realization
    Relations {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_sum: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_len: u32,
        /// How mixed instances are read
        #[arg(long, value_parser = parse_reading, default_value = "summed")]
        reading: Reading,
    },
    /// Hopf compatibility of product and coproduct
    Hopf {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
    },
    /// Margin counts, self-adjointness and Schur positivity
    Psh {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        /// Degree bound for Schur positivity (defaults to --max-degree)
        #[arg(long)]
        positivity_degree: Option<u32>,
    },
    /// The square condition between two margins
    Square {
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long, value_parser = parse_composition)]
        beta: Composition,
        #[arg(long, value_parser = parse_reading, default_value = "summed")]
        reading: Reading,
    },
    /// The bidegree (1,2) defect identity, its overlap correction and the six cases
    Bidegree12 {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_total: u32,
    },
}

#[derive(Subcommand)]
enum Explore {
    /// Both routes from A(a) ⊗ A(beta) to A ⊗ A
    Mixed {
        #[arg(long)]
        a: u32,
        #[arg(long, value_parser = parse_composition)]
        beta: Composition,
    },
}

#[derive(Args)]
struct MatricesArgs {
    #[arg(long, value_parser = parse_composition)]
    alpha: Composition,
    #[arg(long, value_parser = parse_composition)]
    beta: Composition,
    #[arg(long, value_enum, default_value_t = Mode::Nonnegative)]
    mode: Mode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Nonnegative,
    Positive,
}

#[derive(Args)]
struct CompositionsArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long)]
    max_length: Option<usize>,
}

#[derive(Args)]
struct NormalizeArgs {
    /// A word such as "(7) ; s[1,1,3]"
    word: String,
}

#[derive(Subcommand)]
enum CacheCommand {
    /// Summarize the cache file
    Stats,
    /// Delete the cache file
    Clear,
}

/// `println!` that reports write errors instead of panicking, so a closed
/// pipe ends the process quietly.
macro_rules! outln {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: hopflike_core::Error| e.to_string())
}

fn parse_reading(s: &str) -> std::result::Result<Reading, String> {
    s.parse().map_err(|e: hopflike_core::Error| e.to_string())
}

fn parse_composition(s: &str) -> std::result::Result<Composition, String> {
    s.parse().map_err(|e: hopflike_core::Error| e.to_string())
}

struct Output {
    format: Format,
    timing: bool,
    passed: bool,
}

impl Output {
    fn report(&mut self, r: &VerificationReport) -> Result<()> {
        self.passed &= r.passed();
        let mut stdout = std::io::stdout().lock();
        match self.format {
            Format::Json => writeln!(stdout, "{}", r.to_json_line(self.timing))?,
            Format::Text => write!(stdout, "{}", r.to_text(self.timing))?,
        }
        stdout.flush()?;
        Ok(())
    }
}

fn emit_json<T: Serialize>(value: &T) -> Result<()> {
    outln!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn load_cache(path: Option<&Path>) -> Result<()> {
    if let Some(path) = path {
        if path.exists() {
            HallTables::global()
                .load(path)
                .with_context(|| format!("reading cache {}", path.display()))?;
        }
    }
    Ok(())
}

fn save_cache(path: Option<&Path>) -> Result<()> {
    if let Some(path) = path {
        HallTables::global()
            .save(path)
            .with_context(|| format!("writing cache {}", path.display()))?;
    }
    Ok(())
}

fn verify(cmd: Verify, out: &mut Output) -> Result<()> {
    match cmd {
        Verify::Simplicial { max_n } => out.report(&verify_simplicial_identities(max_n as usize)?)?,
        Verify::Relations { family, max_sum, max_len, reading } => {
            out.report(&hopfverify::check_relations(family, max_sum, max_len as usize, reading)?)?
        }
        Verify::Hopf { max_degree } => out.report(&hopfverify::check_hopf_compat(max_degree)?)?,
        Verify::Psh { max_degree, positivity_degree } => {
            out.report(&hopfverify::check_margin_counts(max_degree)?)?;
            out.report(&hopfverify::check_self_adjoint(max_degree)?)?;
            out.report(&hopfverify::check_schur_positivity(positivity_degree.unwrap_or(max_degree))?)?;
        }
        Verify::Square { alpha, beta, reading } => {
            out.report(&hopfverify::check_square_condition(&alpha, &beta, reading)?)?
        }
        Verify::Bidegree12 { max_total } => {
            for r in hopfverify::check_bidegree12(max_total)? {
                out.report(&r)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct MatrixList {
    alpha: String,
    beta: String,
    mode: &'static str,
    count: usize,
    matrices: Vec<String>,
}

fn matrices(args: MatricesArgs, format: Format) -> Result<()> {
    let (mode, name) = match args.mode {
        Mode::Nonnegative => (EntryMode::NonNegative, "nonnegative"),
        Mode::Positive => (EntryMode::StrictlyPositive, "positive"),
    };
    let list: Vec<String> = enumerate_matrices(&args.alpha, &args.beta, mode)?
        .iter()
        .map(ToString::to_string)
        .collect();
    match format {
        Format::Json => emit_json(&MatrixList {
            alpha: args.alpha.to_string(),
            beta: args.beta.to_string(),
            mode: name,
            count: list.len(),
            matrices: list,
        }),
        Format::Text => {
            for m in &list {
                outln!("{m}");
            }
            outln!("count: {}", list.len());
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CompositionList {
    n: u32,
    max_length: Option<usize>,
    count: usize,
    compositions: Vec<String>,
}

fn compositions(args: CompositionsArgs, format: Format) -> Result<()> {
    if args.max_length == Some(0) {
        bail!("--max-length must be at least 1");
    }
    let list: Vec<String> = enumerate_compositions(args.n, args.max_length)
        .iter()
        .map(ToString::to_string)
        .collect();
    match format {
        Format::Json => emit_json(&CompositionList {
            n: args.n,
            max_length: args.max_length,
            count: list.len(),
            compositions: list,
        }),
        Format::Text => {
            for c in &list {
                outln!("{c}");
            }
            outln!("count: {}", list.len());
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct Normalized {
    word: String,
    source: String,
    target: String,
    /// Basis of `A(target)`; column `j` of the matrix is the image of
    /// `columns[j]`.
    columns: Vec<String>,
    /// Basis of `A(source)`.
    rows: Vec<String>,
    matrix: Vec<Vec<String>>,
}

fn normalize(args: NormalizeArgs, format: Format) -> Result<()> {
    let word = parse_word(&args.word)?;
    let r = SymFuncRealization;
    let columns = r.basis(word.target());
    let rows = r.basis(word.source());
    let images = columns
        .iter()
        .map(|x| r.realize_word(&word, x))
        .collect::<hopflike_core::Result<Vec<_>>>()?;
    let matrix: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let label = row.terms().keys().next().expect("basis vector");
            images.iter().map(|img| img.coefficient(label).to_string()).collect()
        })
        .collect();
    let n = Normalized {
        word: word.to_string(),
        source: word.source().to_string(),
        target: word.target().to_string(),
        columns: columns.iter().map(print_tensor).collect(),
        rows: rows.iter().map(print_tensor).collect(),
        matrix,
    };
    match format {
        Format::Json => emit_json(&n),
        Format::Text => {
            outln!("word: {}", n.word);
            outln!("source: {}", n.source);
            outln!("target: {}", n.target);
            outln!("realization: A{} -> A{}", n.target, n.source);
            outln!("columns:");
            for (j, c) in n.columns.iter().enumerate() {
                outln!("  {j}: {c}");
            }
            outln!("rows:");
            for (label, row) in n.rows.iter().zip(&n.matrix) {
                outln!("  {label}: {}", row.join(" "));
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CacheStats {
    path: String,
    present: bool,
    degrees: Vec<DegreeStats>,
}

#[derive(Serialize)]
struct DegreeStats {
    degree: u32,
    partitions: usize,
}

fn cache(cmd: CacheCommand, path: Option<&Path>, format: Format) -> Result<()> {
    let path = path.ok_or_else(|| anyhow!("no cache path: pass --cache or set HOPFLIKE_CACHE"))?;
    match cmd {
        CacheCommand::Clear => {
            if path.exists() {
                std::fs::remove_file(path).with_context(|| format!("removing {}", path.display()))?;
                outln!("removed {}", path.display());
            } else {
                outln!("no cache at {}", path.display());
            }
            Ok(())
        }
        CacheCommand::Stats => {
            let tables = HallTables::new();
            let present = path.exists();
            if present {
                tables.load(path).with_context(|| format!("reading cache {}", path.display()))?;
            }
            let degrees: Vec<DegreeStats> = tables
                .degrees()
                .into_iter()
                .map(|d| DegreeStats {
                    degree: d,
                    partitions: tables.table(d).partitions().len(),
                })
                .collect();
            let stats = CacheStats {
                path: path.display().to_string(),
                present,
                degrees,
            };
            match format {
                Format::Json => emit_json(&stats),
                Format::Text => {
                    if !stats.present {
                        outln!("no cache at {}", stats.path);
                        return Ok(());
                    }
                    outln!("cache {}: {} degrees", stats.path, stats.degrees.len());
                    for d in &stats.degrees {
                        outln!("  degree {}: {} partitions", d.degree, d.partitions);
                    }
                    Ok(())
                }
            }
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let cache_path = cli.cache.as_deref();
    let mut out = Output {
        format: cli.format,
        timing: cli.timing,
        passed: true,
    };
    match cli.command {
        Command::Verify(cmd) => {
            load_cache(cache_path)?;
            verify(cmd, &mut out)?;
            save_cache(cache_path)?;
        }
        Command::Explore(Explore::Mixed { a, beta }) => {
            let r = hopfverify::explore_mixed_bidegree(a, &beta)?;
            match cli.format {
                Format::Json => outln!("{}", r.to_json()),
                Format::Text => write!(std::io::stdout().lock(), "{}", r.to_text())?,
            }
        }
        Command::Matrices(args) => matrices(args, cli.format)?,
        Command::Compositions(args) => compositions(args, cli.format)?,
        Command::Normalize(args) => normalize(args, cli.format)?,
        Command::Cache(cmd) => cache(cmd, cache_path, cli.format)?,
    }
    Ok(out.passed)
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
