mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{emit_error, CliError};

/// Environment variable overriding the worker thread count.
pub const THREADS_ENV: &str = "JONES_TWIST_THREADS";

/// Kauffman brackets, Jones polynomials and Mahler measures of braid closures
/// and their twist families.
///
/// Text arguments (`--braid`, `--poly`) accept `@path` to read from a file.
#[derive(Parser, Debug)]
#[command(name = "jones-twist", version)]
pub struct Cli {
    /// Cauchy tolerance for the iterative Mahler measure methods.
    #[arg(long, global = true, value_name = "EPS")]
    pub tolerance: Option<f64>,

    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct BraidArg {
    /// Braid word, e.g. "strands=3 1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub braid: BraidArg,
    /// Twist region `s:n`: first strand `s`, width `n`.
    #[arg(long)]
    pub region: String,
    /// Letter index where the twists go (default: end of word).
    #[arg(long)]
    pub insert: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kauffman bracket of the closure.
    Bracket(BraidArg),
    /// Jones polynomial of the closure and its Mahler measure.
    Jones(BraidArg),
    /// Mahler measure of a JSON polynomial or of the Jones polynomial of a closure.
    Mahler {
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "braid",
            required_unless_present = "braid"
        )]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        braid: Option<String>,
        /// Bivariate method.
        #[arg(long, value_enum, default_value_t = output::Method::BoydLawton)]
        method: output::Method,
    },
    /// Jones polynomials along a twist family.
    Twist {
        #[command(flatten)]
        family: FamilyArgs,
        /// Twist counts `a..b` (inclusive) or a single value.
        #[arg(long, default_value = "0..5")]
        m: String,
        /// Also write the series as CSV.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Limit polynomial of a twist family and its Mahler measure.
    Ptx {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Block decomposition of Jones coefficient vectors along a twist family.
    Blocks {
        #[command(flatten)]
        family: FamilyArgs,
        /// Twist counts `a..b` (inclusive) or a single value.
        #[arg(long, default_value = "19..20")]
        m: String,
        #[arg(long, default_value_t = jones_twist::twist::DEFAULT_MIN_SEPARATOR)]
        min_separator: usize,
    },
    /// Jones polynomial of the torus knot T(m, n).
    Torus { m: i64, n: i64 },
    /// Jones polynomial of the twist knot with `n` half twists.
    Twistknot { n: i64 },
    /// Jones polynomial of the pretzel link P(a1, ..., an).
    Pretzel {
        #[arg(allow_hyphen_values = true)]
        params: String,
    },
    /// Colored Jones polynomial J_N of a knot closure.
    Colored {
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long = "N", short = 'N')]
        n: usize,
    },
    /// Root statistics of a Jones polynomial or a JSON polynomial.
    Roots {
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "poly",
            required_unless_present = "poly"
        )]
        braid: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        /// Half-width of the annulus around the unit circle.
        #[arg(long, default_value_t = 0.2)]
        epsilon: f64,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value.trim().parse().map_err(|_| {
        CliError::usage(format!(
            "{THREADS_ENV} must be a positive integer, got {value:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            emit_error(&CliError::usage(e.to_string().trim_end()));
            return ExitCode::from(2);
        }
    };
    let result = configure_threads().and_then(|()| commands::run(&cli));
    match result {
        Ok(value) => {
            let mut out = std::io::stdout().lock();
            let _ = if cli.pretty {
                serde_json::to_writer_pretty(&mut out, &value)
            } else {
                serde_json::to_writer(&mut out, &value)
            };
            let _ = writeln!(out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            emit_error(&e);
            ExitCode::from(e.exit_code())
        }
    }
}
