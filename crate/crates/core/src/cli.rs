//! The `dbf` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::cache::{render_en, CacheStore};
use crate::checks::{fibonacci_shifts, run_check, Check, CheckArgs, Context};
use crate::config::{OutputFormat, RunConfig, DEFAULT_CACHE_DIR, DEFAULT_SERIES_CAP};
use crate::conjecture::{
    computed_count, eval_main_conjecture, expected_count, expected_count_shifted, CountTable, Mode,
    Status,
};
use crate::error::{Error, Result};
use crate::oracle::DEFAULT_N_BOUND;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
/// Corrupt cache, I/O failure or an internal inconsistency.
pub const EXIT_FAILURE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "dbf",
    version,
    about = "Boson-fermion diagonal coinvariant laboratory"
)]
struct Cli {
    /// Directory holding cache files.
    #[arg(long, global = true, default_value = DEFAULT_CACHE_DIR)]
    cache_dir: PathBuf,
    /// Degree cap for series-valued formulas.
    #[arg(long, global = true, default_value_t = DEFAULT_SERIES_CAP)]
    series_cap: u32,
    /// Largest n the quotient oracle will attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_N_BOUND)]
    n_bound: usize,
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args, Debug)]
struct Size {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    j: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the generic bosonic data E_n as `lambda mu coeff` lines.
    En {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate the universal formula with k bosonic and j fermionic letters.
    Eval {
        #[command(flatten)]
        size: Size,
        /// Set every letter to one.
        #[arg(long)]
        ones: bool,
    },
    /// Compute the quotient directly.
    Oracle {
        #[command(flatten)]
        size: Size,
    },
    /// Run a named check.
    Verify {
        check: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Print dimension or sign-multiplicity grids.
    Table {
        #[arg(value_enum)]
        table: TableArg,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 2)]
        jmax: usize,
        #[arg(long, default_value_t = 1)]
        nmin: usize,
    },
    /// Inspect or fill the cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableArg {
    Dims,
    Alt,
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    /// List cache files and whether they verify.
    List,
    /// Compute and store H̃ tables up to size n.
    Warm {
        #[arg(long)]
        n: usize,
    },
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceCap(_) => EXIT_RESOURCE,
        Error::Parse(_)
        | Error::InvalidPartition(_)
        | Error::Unsupported(_)
        | Error::UnfilledCell(_)
        | Error::MissingCap(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn config_of(cli: &Cli) -> RunConfig {
    RunConfig {
        cache_dir: cli.cache_dir.clone(),
        series_cap: cli.series_cap,
        n_bound: cli.n_bound,
        threads: cli.threads,
        format: match cli.format {
            Format::Text => OutputFormat::Text,
            Format::Machine => OutputFormat::Machine,
        },
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

/// Runs `dbf` with `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let first = e
                .to_string()
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ")
                .to_string();
            let _ = writeln!(err, "E_USAGE: {first}");
            return EXIT_USAGE;
        }
    };
    let config = config_of(&cli);
    let result = config.validate().and_then(|()| {
        if config.threads > 0 {
            // A pool may already exist when called repeatedly in one process.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build_global();
        }
        execute(&cli.command, &config, out)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", e.code());
            exit_code(&e)
        }
    }
}

fn execute(command: &Command, config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let store = CacheStore::new(&config.cache_dir)?;
    let ctx = Context {
        store: Some(store.clone()),
        n_bound: config.n_bound,
    };
    match command {
        Command::En { n } => {
            let (e, _) = ctx.en(*n)?;
            write!(out, "{}", render_en(&e)).map_err(io_err)?;
        }
        Command::Eval { size, ones } => {
            let (e, _) = ctx.en(size.n)?;
            let mode = if *ones { Mode::Ones } else { Mode::Symbolic };
            write!(out, "{}", eval_main_conjecture(&e, size.k, size.j, mode)).map_err(io_err)?;
        }
        Command::Oracle { size } => {
            write!(out, "{}", ctx.oracle(size.k, size.j, size.n)?).map_err(io_err)?;
        }
        Command::Verify {
            check,
            n,
            k,
            j,
            cap,
        } => {
            let check: Check = check.parse()?;
            let args = CheckArgs {
                n: *n,
                k: *k,
                j: *j,
                cap: *cap,
            };
            let reports = run_check(check, &args, &ctx)?;
            for r in &reports {
                match config.format {
                    OutputFormat::Text => writeln!(out, "{r}"),
                    OutputFormat::Machine => writeln!(out, "{}", r.machine_line()),
                }
                .map_err(io_err)?;
            }
            if reports.iter().any(|r| r.status == Status::Mismatch) {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Table {
            table,
            nmax,
            kmax,
            jmax,
            nmin,
        } => {
            let table = match table {
                TableArg::Dims => CountTable::Dims,
                TableArg::Alt => CountTable::Alt,
            };
            print_tables(
                table,
                (*nmin).max(1)..=*nmax,
                *kmax,
                *jmax,
                &ctx,
                config.format,
                out,
            )?;
        }
        Command::Cache { action } => match action {
            CacheAction::List => {
                for (key, status) in store.entries()? {
                    let s = match status {
                        Ok(()) => "ok".to_string(),
                        Err(e) => e.code().to_string(),
                    };
                    writeln!(out, "{key} {s}").map_err(io_err)?;
                }
            }
            CacheAction::Warm { n } => {
                for m in 1..=*n {
                    store.htilde(m)?;
                    writeln!(out, "{}", crate::cache::CacheKey::Htilde(m)).map_err(io_err)?;
                }
            }
        },
    }
    Ok(EXIT_OK)
}

/// A grid value and where it came from.
fn cell(
    table: CountTable,
    n: usize,
    k: usize,
    j: usize,
    ctx: &Context,
    shift: &mut Option<i64>,
) -> Result<Option<(BigRational, &'static str)>> {
    if n <= ctx.n_bound.max(crate::conjecture::EMBEDDED_MAX) {
        let (e, _) = ctx.en(n)?;
        return Ok(Some((computed_count(&e, table, n, k, j), "conjecture")));
    }
    let value = if (table, k, j) == (CountTable::Alt, 1, 3) {
        if shift.is_none() {
            *shift = fibonacci_shifts(ctx.n_bound, ctx)?.first().copied();
        }
        match shift {
            Some(s) => expected_count_shifted(table, n, k, j, *s),
            None => return Ok(None),
        }
    } else {
        expected_count(table, n, k, j)
    };
    match value {
        Ok(v) => Ok(Some((v, "formula"))),
        Err(Error::UnfilledCell(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn print_tables(
    table: CountTable,
    ns: std::ops::RangeInclusive<usize>,
    kmax: usize,
    jmax: usize,
    ctx: &Context,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<()> {
    let mut shift = None;
    for n in ns {
        let mut grid = Vec::new();
        for k in 0..=kmax {
            let mut row = Vec::new();
            for j in 0..=jmax {
                row.push(cell(table, n, k, j, ctx, &mut shift)?);
            }
            grid.push(row);
        }
        match format {
            OutputFormat::Machine => {
                for (k, row) in grid.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        let (v, src) = c
                            .as_ref()
                            .map(|(v, s)| (v.to_string(), *s))
                            .unwrap_or(("?".into(), "none"));
                        writeln!(
                            out,
                            "TABLE {table} n={n} k={k} j={j} VALUE {v} SOURCE {src}"
                        )
                        .map_err(io_err)?;
                    }
                }
            }
            OutputFormat::Text => {
                let shown: Vec<Vec<String>> = grid
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|c| c.as_ref().map_or("?".into(), |(v, _)| v.to_string()))
                            .collect()
                    })
                    .collect();
                let width = shown
                    .iter()
                    .flatten()
                    .map(String::len)
                    .max()
                    .unwrap_or(1)
                    .max(3);
                writeln!(out, "{table} n={n}").map_err(io_err)?;
                let head: Vec<String> = (0..=jmax).map(|j| format!("{j:>width$}")).collect();
                writeln!(out, "k\\j {}", head.join(" ")).map_err(io_err)?;
                for (k, row) in shown.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                    writeln!(out, "{k:>3} {}", cells.join(" ")).map_err(io_err)?;
                }
            }
        }
    }
    Ok(())
}
