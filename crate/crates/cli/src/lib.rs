//! Command-line front end for the knot mosaic counters.
//!
//! Exit codes: 0 success, 2 invalid input, 3 enumeration budget exceeded,
//! 4 verification mismatch.

pub mod verify;

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use knotmosaic::mosaic::write_documents;
use knotmosaic::oracle::{complete_to_knot, enumerate_knot_mosaics, enumerate_suitably_connected};
use knotmosaic::transfer::{build_split, state_matrix};
use knotmosaic::{render, Count, EnumBudget, Error, MatrixKind, Mosaic};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "knotmosaic", version, about = "Exact counts of knot mosaics")]
pub struct Cli {
    /// Largest grid (rows * cols) the brute-force enumerator will accept.
    #[arg(long, global = true, env = "KNOTMOSAIC_MAX_CELLS", default_value_t = EnumBudget::DEFAULT_MAX_CELLS)]
    pub max_cells: usize,

    /// Largest number of search nodes the brute-force enumerator may visit.
    #[arg(long, global = true, env = "KNOTMOSAIC_MAX_NODES", default_value_t = EnumBudget::DEFAULT_MAX_NODES)]
    pub max_nodes: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of knot (m,n)-mosaics.
    Count {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = EngineChoice::Auto)]
        engine: EngineChoice,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// D(n,n) for n = 1..=max_n.
    Table {
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Cross-check the algebra against brute-force enumeration.
    Verify {
        #[arg(long)]
        full: bool,
    },
    /// Stream mosaics in `mosaic v1` format.
    Enumerate {
        m: usize,
        n: usize,
        /// Only knot mosaics (no boundary connection points).
        #[arg(long)]
        knot: bool,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// The knot mosaics obtained by framing a suitably connected mosaic.
    Complete { file: PathBuf },
    /// Draw a mosaic as ASCII art.
    Render { file: PathBuf },
    /// D(n,n)^(1/n^2) for n = 2..=max_n.
    Growth { max_n: usize },
    /// Print X_p, O_p or N^(p,q).
    DumpMatrix {
        p: u32,
        #[arg(long, value_enum, default_value_t = Kind::N)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        q: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Dense,
    Matrixfree,
    Auto,
}

impl EngineChoice {
    /// `Auto` picks the dense engine while the state matrices stay at most
    /// 64 x 64.
    pub fn resolve(self, m: usize) -> EngineChoice {
        match self {
            EngineChoice::Auto if m.saturating_sub(2) <= 6 => EngineChoice::Dense,
            EngineChoice::Auto => EngineChoice::Matrixfree,
            other => other,
        }
    }

    fn name(self) -> &'static str {
        match self {
            EngineChoice::Dense => "dense",
            EngineChoice::Matrixfree => "matrixfree",
            EngineChoice::Auto => "auto",
        }
    }

    pub fn count(self, m: usize, n: usize) -> knotmosaic::Result<Count> {
        match self.resolve(m) {
            EngineChoice::Dense => knotmosaic::count_dense(m, n),
            _ => knotmosaic::count_matrixfree(m, n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "X", alias = "x")]
    X,
    #[value(name = "O", alias = "o")]
    O,
    #[value(name = "N", alias = "n")]
    N,
}

impl From<Kind> for MatrixKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::X => MatrixKind::X,
            Kind::O => MatrixKind::O,
            Kind::N => MatrixKind::N,
        }
    }
}

/// A failed command: message plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_budget() { EXIT_BUDGET } else { EXIT_INVALID },
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs a parsed command; returns the process exit code. Errors are written
/// to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let budget = match EnumBudget::new(cli.max_cells, cli.max_nodes) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: invalid budget: {e}");
            return EXIT_INVALID;
        }
    };
    let result = match &cli.command {
        Command::Count { m, n, engine, format } => run_count(*m, *n, *engine, *format, out),
        Command::Table { max_n, format } => run_table(*max_n, *format, out),
        Command::Verify { full } => run_verify(*full, budget, out),
        Command::Enumerate { m, n, knot, limit } => run_enumerate(*m, *n, *knot, *limit, budget, out),
        Command::Complete { file } => run_complete(file, out),
        Command::Render { file } => run_render(file, out),
        Command::Growth { max_n } => run_growth(*max_n, out),
        Command::DumpMatrix { p, kind, q } => run_dump(*p, *kind, *q, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run_count(m: usize, n: usize, engine: EngineChoice, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let resolved = engine.resolve(m);
    let count = resolved.count(m, n)?;
    match format {
        OutputFormat::Plain => writeln!(out, "{count}")?,
        OutputFormat::Json => writeln!(
            out,
            "{}",
            json!({ "m": m, "n": n, "count": count.to_string(), "engine": resolved.name() })
        )?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["m", "n", "count", "engine"])?;
            w.write_record([m.to_string(), n.to_string(), count.to_string(), resolved.name().into()])?;
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

pub fn run_table(max_n: usize, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    if max_n == 0 {
        return Err(Failure::invalid("max_n must be at least 1"));
    }
    let rows = (1..=max_n)
        .map(|n| EngineChoice::Auto.count(n, n).map(|c| (n, c)))
        .collect::<knotmosaic::Result<Vec<_>>>()?;
    match format {
        OutputFormat::Plain => {
            for (n, c) in &rows {
                writeln!(out, "{n} {c}")?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows.iter().map(|(n, c)| json!({ "n": n, "count": c.to_string() })).collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "count"])?;
            for (n, c) in &rows {
                w.write_record([n.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

pub fn run_verify(full: bool, budget: EnumBudget, out: &mut dyn Write) -> CmdResult {
    let level = if full { verify::Level::Full } else { verify::Level::Quick };
    let outcomes = verify::run_checks(level, &build_split, budget);
    for o in &outcomes {
        writeln!(out, "{}", o.to_json())?;
    }
    Ok(verify::exit_code(&outcomes))
}

pub fn run_enumerate(
    m: usize,
    n: usize,
    knot: bool,
    limit: Option<u64>,
    budget: EnumBudget,
    out: &mut dyn Write,
) -> CmdResult {
    let stream = if knot {
        enumerate_knot_mosaics(m, n, budget)?
    } else {
        enumerate_suitably_connected(m, n, budget)?
    };
    let mut emitted = 0u64;
    for mosaic in stream {
        if limit.is_some_and(|l| emitted >= l) {
            break;
        }
        let mosaic = mosaic?;
        if emitted > 0 {
            writeln!(out)?;
        }
        write!(out, "{mosaic}")?;
        emitted += 1;
    }
    if emitted > 0 {
        writeln!(out)?;
    }
    writeln!(out, "count {emitted}")?;
    Ok(EXIT_OK)
}

fn read_mosaic(file: &Path) -> Result<Mosaic, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", file.display())))?;
    Ok(text.parse::<Mosaic>()?)
}

pub fn run_complete(file: &Path, out: &mut dyn Write) -> CmdResult {
    let inner = read_mosaic(file)?;
    let done = complete_to_knot(&inner)?;
    write_documents(out, &done)?;
    Ok(EXIT_OK)
}

pub fn run_render(file: &Path, out: &mut dyn Write) -> CmdResult {
    let mosaic = read_mosaic(file)?;
    write!(out, "{}", render::render(&mosaic))?;
    Ok(EXIT_OK)
}

/// Natural log of a positive big integer, without overflowing `f64`.
pub fn ln_big(x: &BigUint) -> f64 {
    let shift = x.bits().saturating_sub(64);
    let top = (x >> shift).to_f64().expect("64-bit value fits f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn run_growth(max_n: usize, out: &mut dyn Write) -> CmdResult {
    if max_n < 2 {
        return Err(Failure::invalid("max_n must be at least 2"));
    }
    for n in 2..=max_n {
        let d = knotmosaic::count_matrixfree(n, n)?;
        let ratio = (ln_big(&d) / (n * n) as f64).exp();
        writeln!(out, "{n} {ratio:.6}")?;
    }
    Ok(EXIT_OK)
}

pub fn run_dump(p: u32, kind: Kind, q: u32, out: &mut dyn Write) -> CmdResult {
    let matrix = match kind {
        Kind::X | Kind::O if q != 1 => {
            return Err(Failure::invalid("--q applies only to --kind N"));
        }
        Kind::X => build_split::<BigUint>(p).x,
        Kind::O => build_split::<BigUint>(p).o,
        Kind::N => state_matrix::<BigUint>(p, q)?,
    };
    write!(out, "{}", matrix.to_dump(kind.into()))?;
    Ok(EXIT_OK)
}
