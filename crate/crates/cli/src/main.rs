use std::collections::BTreeMap;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quartic_core::oracle::{
    brute_distinct_quartics, constant_grid, nested_grid, random_grid, tiled_grid, triangle_grid, DEFAULT_CAP,
};
use quartic_core::{enumerate, load_grid, CanonicalPair, Grid, GridFormat, Inventory, Mode, Options, QuarticKey};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const EXIT_MISMATCH: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "quartic", version, about = "Enumerate the distinct quartics of a 2D string")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// Largest side `verify` hands to the brute-force oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    oracle_cap: usize,
    /// Seed for `gen` and `bench`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = CliMode::Reference)]
    mode: CliMode,
    /// Input encoding; `auto` accepts a `rows cols` header as integer input.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    grid: InputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of distinct quartics.
    Count { input: PathBuf },
    /// Print one record per distinct quartic.
    List { input: PathBuf },
    /// Counts per size class and the ratio to n^2 log n.
    Stats { input: PathBuf },
    /// Compare against the brute-force oracle.
    Verify { input: PathBuf },
    /// Time each phase on the input or on random grids.
    Bench {
        input: Option<PathBuf>,
        /// Side of a random square grid; repeatable.
        #[arg(long = "size", default_values_t = [64usize, 128, 256])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        sigma: u32,
    },
    /// Write a grid from one of the corpus generators.
    Gen {
        #[arg(long, value_enum, default_value_t = Family::Random)]
        family: Family,
        #[arg(long, default_value_t = 16)]
        rows: usize,
        /// Defaults to `rows`.
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long, default_value_t = 2)]
        sigma: u32,
        /// Output file (standard output if absent).
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Reference,
    Tabulated,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Char,
    Int,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Random,
    Tiled,
    Nested,
    Triangle,
    Constant,
}

enum Failure {
    Mismatch,
    Io(String),
    Usage(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<quartic_core::Error> for Failure {
    fn from(e: quartic_core::Error) -> Self {
        match e {
            quartic_core::Error::OracleCap { .. } => Failure::Usage(e.to_string()),
            e => Failure::Io(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Record {
    height: usize,
    width: usize,
    witness_row: usize,
    witness_col: usize,
    fingerprint: String,
}

impl From<&QuarticKey> for Record {
    fn from(k: &QuarticKey) -> Self {
        Record {
            height: k.height,
            width: k.width,
            witness_row: k.row + 1,
            witness_col: k.col + 1,
            fingerprint: k.fingerprint_hex(),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let opts = Options {
        threads: cli.threads.map_or(0, |t| t as usize),
        mode: match cli.mode {
            CliMode::Reference => Mode::Reference,
            CliMode::Tabulated => Mode::Tabulated,
        },
    };
    match &cli.command {
        Command::Count { input } => {
            let inv = enumerate(&read_grid(input, cli.grid)?, &opts)?;
            match cli.format {
                Format::Tsv => writeln!(out, "{}", inv.quartics.len())?,
                Format::JsonLines => writeln!(out, "{}", serde_json::json!({ "count": inv.quartics.len() }))?,
            }
        }
        Command::List { input } => {
            let inv = enumerate(&read_grid(input, cli.grid)?, &opts)?;
            for k in &inv.quartics {
                write_key(out, cli.format, k)?;
            }
        }
        Command::Stats { input } => {
            let g = read_grid(input, cli.grid)?;
            let inv = enumerate(&g, &opts)?;
            write_stats(out, cli.format, &g, &inv)?;
        }
        Command::Verify { input } => {
            let g = read_grid(input, cli.grid)?;
            if g.rows().max(g.cols()) > cli.oracle_cap {
                return Err(Failure::Usage(format!(
                    "grid of size {}x{} exceeds the oracle cap of {}",
                    g.rows(),
                    g.cols(),
                    cli.oracle_cap
                )));
            }
            let inv = enumerate(&g, &opts)?;
            let want = brute_distinct_quartics(&g, cli.oracle_cap)?;
            match first_mismatch(&g, &inv.quartics, &want) {
                None => writeln!(out, "PASS {} quartics", want.len())?,
                Some((side, k)) => {
                    writeln!(out, "FAIL {side} {k}")?;
                    out.flush()?;
                    return Err(Failure::Mismatch);
                }
            }
        }
        Command::Bench { input, sizes, sigma } => {
            let grids: Vec<Grid> = match input {
                Some(p) => vec![read_grid(p, cli.grid)?],
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    sizes.iter().map(|&n| random_grid(&mut rng, n, n, (*sigma).max(1))).collect()
                }
            };
            if cli.format == Format::Tsv {
                writeln!(out, "rows\tcols\tpreprocess_s\tthin_s\tthick_s\tassembly_s\ttotal_s\tquartics")?;
            }
            for g in &grids {
                let inv = enumerate(g, &opts)?;
                write_bench(out, cli.format, g, &inv)?;
            }
        }
        Command::Gen { family, rows, cols, sigma, output } => {
            let g = generate(*family, *rows, cols.unwrap_or(*rows), (*sigma).max(1), cli.seed)?;
            let text = g.to_int_text();
            match output {
                Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
    }
    Ok(())
}

fn read_grid(path: &Path, format: InputFormat) -> Result<Grid, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let format = match format {
        InputFormat::Char => GridFormat::Char,
        InputFormat::Int => GridFormat::Int,
        InputFormat::Auto => detect_format(&text),
    };
    load_grid(text.as_bytes(), format).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Char rows cannot contain spaces, so a first line of two tokens is an
/// integer header.
fn detect_format(text: &str) -> GridFormat {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.split_whitespace().count() == 2 {
        GridFormat::Int
    } else {
        GridFormat::Char
    }
}

fn write_key(out: &mut impl Write, format: Format, k: &QuarticKey) -> io::Result<()> {
    let r = Record::from(k);
    match format {
        Format::Tsv => writeln!(out, "{}\t{}\t{}\t{}\t{}", r.height, r.width, r.witness_row, r.witness_col, r.fingerprint),
        Format::JsonLines => writeln!(out, "{}", serde_json::to_string(&r).map_err(io::Error::other)?),
    }
}

fn write_stats(out: &mut impl Write, format: Format, g: &Grid, inv: &Inventory) -> io::Result<()> {
    let mut per_class: BTreeMap<CanonicalPair, usize> = BTreeMap::new();
    for k in &inv.quartics {
        *per_class.entry(CanonicalPair::of(k.height, k.width)).or_default() += 1;
    }
    let n = g.rows().max(g.cols()).max(2) as f64;
    let ratio = inv.quartics.len() as f64 / (n * n * n.log2());
    match format {
        Format::Tsv => {
            for (c, count) in &per_class {
                writeln!(out, "{}\t{}\t{}", c.a, c.b, count)?;
            }
            writeln!(out, "total\t{}", inv.quartics.len())?;
            writeln!(out, "ratio\t{ratio:.6}")
        }
        Format::JsonLines => {
            for (c, count) in &per_class {
                writeln!(out, "{}", serde_json::json!({ "a": c.a, "b": c.b, "count": count }))?;
            }
            writeln!(out, "{}", serde_json::json!({ "total": inv.quartics.len(), "ratio": ratio }))
        }
    }
}

fn write_bench(out: &mut impl Write, format: Format, g: &Grid, inv: &Inventory) -> io::Result<()> {
    let t = &inv.timings;
    let secs = [t.index, t.thin, t.thick, t.assembly, t.total()].map(|d| d.as_secs_f64());
    match format {
        Format::Tsv => writeln!(
            out,
            "{}\t{}\t{:.4}\t{:.4}\t{:.4}\t{:.4}\t{:.4}\t{}",
            g.rows(),
            g.cols(),
            secs[0],
            secs[1],
            secs[2],
            secs[3],
            secs[4],
            inv.quartics.len()
        ),
        Format::JsonLines => writeln!(
            out,
            "{}",
            serde_json::json!({
                "rows": g.rows(), "cols": g.cols(),
                "preprocess_s": secs[0], "thin_s": secs[1], "thick_s": secs[2],
                "assembly_s": secs[3], "total_s": secs[4], "quartics": inv.quartics.len(),
            })
        ),
    }
}

/// The first quartic, in `(height, width, content)` order, listed by only
/// one side.
fn first_mismatch<'a>(g: &Grid, got: &'a [QuarticKey], want: &'a [QuarticKey]) -> Option<(&'static str, &'a QuarticKey)> {
    let index = |keys: &'a [QuarticKey]| -> BTreeMap<(usize, usize, Vec<Vec<u32>>), &'a QuarticKey> {
        keys.iter().map(|k| ((k.height, k.width, g.block(k.row, k.col, k.height, k.width)), k)).collect()
    };
    let (a, b) = (index(got), index(want));
    let extra = a.iter().find(|(c, _)| !b.contains_key(*c));
    let missing = b.iter().find(|(c, _)| !a.contains_key(*c));
    match (extra, missing) {
        (Some((ce, ke)), Some((cm, km))) => Some(if ce < cm { ("extra", *ke) } else { ("missing", *km) }),
        (Some((_, k)), None) => Some(("extra", *k)),
        (None, Some((_, k))) => Some(("missing", *k)),
        (None, None) => None,
    }
}

fn generate(family: Family, rows: usize, cols: usize, sigma: u32, seed: u64) -> Result<Grid, Failure> {
    if rows == 0 || cols == 0 {
        return Err(Failure::Usage("grid sides must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match family {
        Family::Random => random_grid(&mut rng, rows, cols, sigma),
        Family::Tiled => {
            let (bh, bw) = (rng.gen_range(1..=rows.min(4)), rng.gen_range(1..=cols.min(4)));
            tiled_grid(&mut rng, rows, cols, bh, bw, sigma, 1)
        }
        Family::Nested => nested_grid(&mut rng, rows.max(cols), sigma),
        Family::Triangle => triangle_grid(rows.max(cols)),
        Family::Constant => constant_grid(rows, cols),
    })
}
