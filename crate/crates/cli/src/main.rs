//! `adjprof`: adjoint rank profiles and related invariants from the command line.

/// `println!` that ends the process quietly when stdout is closed.
#[macro_export]
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            $crate::stdout_failed(e);
        }
    }};
}

#[macro_export]
macro_rules! out_raw {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = write!(std::io::stdout().lock(), $($arg)*) {
            $crate::stdout_failed(e);
        }
    }};
}

mod commands;
mod field;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use field::FieldChoice;

#[derive(Parser, Debug)]
#[command(name = "adjprof", version, about = "Adjoint operator invariants of tensors in graded extensions of sl(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory for structure-constant caches.
    #[arg(long, global = true, env = "ADJPROF_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "ADJPROF_THREADS", default_value_t = 0)]
    threads: usize,

    /// Only print warnings and errors on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, grades, block layout and cache status of an algebra.
    AlgebraInfo(AlgebraArgs),
    /// Block ranks of the powers of ad_T.
    Profile(RunArgs),
    /// tr(ad_T^k) for k = 1..k-max.
    Tracepowers {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
    },
    /// Factored characteristic polynomial of ad_T.
    Charpoly {
        #[command(flatten)]
        run: RunArgs,
        /// Root scaling `alpha^period` applied to the printed polynomial.
        #[arg(long)]
        beta: Option<String>,
        /// Period of the scaling; defaults to the polynomial's own.
        #[arg(long)]
        period: Option<usize>,
    },
    /// Nilpotent, semisimple or mixed.
    Classify(RunArgs),
    /// Separates two tensors by their invariants; exit code 2 when separated.
    Compare {
        #[command(flatten)]
        run: RunArgs,
        /// Also compare root multiplicity patterns (needs the characteristic polynomial).
        #[arg(long)]
        roots: bool,
    },
    /// Rank lower bounds from rank profiles.
    Bound {
        #[command(flatten)]
        run: RunArgs,
        /// Fixture used as the rank-one unit for the division bound.
        #[arg(long)]
        calibrate: Option<String>,
        /// Largest generic rank used for the comparison bound.
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Structure-constant cache maintenance.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// Lists the named fixtures.
    Fixtures {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    Build(AlgebraArgs),
    Clear(AlgebraArgs),
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Fraction of basis pairs recomputed.
        #[arg(long, default_value_t = 0.01)]
        fraction: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct AlgebraArgs {
    /// Number of basis vectors of C^n.
    #[arg(long)]
    n: Option<usize>,
    /// `full`, `z2`, `z3` or a grading step d.
    #[arg(long)]
    grading: Option<String>,
    /// Comma-separated part sizes: the multipartite subalgebra (and the ket layout).
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    /// Tensor levels of the multipartite algebra.
    #[arg(long, default_value = "one")]
    levels: String,
    /// Use the smaller algebra a fixture declares.
    #[arg(long)]
    restricted: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Inline tensor expressions.
    exprs: Vec<String>,
    /// Named fixture (repeatable).
    #[arg(long)]
    fixture: Vec<String>,
    /// Tensor file with an `# algebra ...` header.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Random tensor of this rank, shaped by --parts or the tensor degree --k.
    #[arg(long)]
    random: Option<usize>,
    /// Exterior degree of --random tensors without --parts.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// wedge, ket or vinberg.
    #[arg(long, default_value = "wedge")]
    notation: String,
    /// Index of the first basis vector in inline expressions.
    #[arg(long, default_value_t = 0)]
    base: usize,
    /// Qubit layout for kets: interleaved (contiguous) or blocked (strided).
    #[arg(long, default_value = "interleaved")]
    convention: String,
    /// rational, mod:<p>, verify or auto.
    #[arg(long, default_value = "auto")]
    field: FieldChoice,
    #[arg(long)]
    power_limit: Option<usize>,
}

fn stdout_failed(e: std::io::Error) -> ! {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    eprintln!("error: writing output: {e}");
    std::process::exit(1);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let level = if cli.quiet { "warn" } else { "info" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .init();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            log::warn!("thread pool: {e}");
        }
    }
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
