//! `keyslide`: batch front end for key and slide polynomial computations.
//!
//! Exit codes: 0 success, 1 a verification came out false, 2 usage or
//! parse error, 3 a resource bound was exceeded.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use keyslide::{Error, Limits, WeakComposition};

use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "keyslide",
    version,
    about = "Key polynomials and their fundamental slide expansions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    /// Largest accepted sum of an index.
    #[arg(long, env = "KEYSLIDE_BOUND_SUM", global = true)]
    max_sum: Option<usize>,
    /// Largest accepted length of an index.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Remove all size bounds.
    #[arg(long, global = true)]
    unsafe_bounds: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Json,
    Text,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Slide expansion of a key polynomial.
    Expand { index: WeakComposition },
    /// Monomial expansion of a key polynomial.
    Key { index: WeakComposition },
    /// Monomial expansion of a fundamental slide polynomial.
    Slide { index: WeakComposition },
    /// Kohnert tableaux of a given content.
    Tableaux {
        index: WeakComposition,
        /// Quasi-Yamanouchi tableaux only (default).
        #[arg(long, conflicts_with = "kt")]
        qkt: bool,
        /// All Kohnert tableaux.
        #[arg(long)]
        kt: bool,
    },
    /// Decide multiplicity freeness from closed-form criteria.
    Classify {
        index: WeakComposition,
        /// Enumerate when no criterion applies.
        #[arg(long)]
        brute: bool,
    },
    /// Check that the slide expansion sums to the key polynomial.
    Verify { index: WeakComposition },
    /// Brute-force multiplicities over every index of one length.
    Sweep {
        #[arg(long)]
        len_max: usize,
        #[arg(long)]
        entry_max: usize,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Compare truncated key polynomials with a Schur polynomial.
    Limit {
        index: WeakComposition,
        #[arg(long)]
        vars: usize,
        #[arg(long, default_value_t = 6)]
        mmax: usize,
    },
}

enum Failure {
    Usage(String),
    Bound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_limit() {
            Failure::Bound(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn limits(global: &Global) -> Limits {
    if global.unsafe_bounds {
        eprintln!("keyslide: warning: size bounds disabled, enumeration may not terminate in reasonable time");
        return Limits::unbounded();
    }
    let mut limits = Limits::default();
    if let Some(s) = global.max_sum {
        limits = limits.with_max_sum(s);
    }
    if let Some(l) = global.max_len {
        limits = limits.with_max_len(l);
    }
    limits
}

/// Returns the document to print and whether the verdict was positive.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let limits = limits(&cli.global);
    let format = match cli.global.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
        FormatArg::Latex => Format::Latex,
    };
    Ok(match &cli.command {
        Command::Expand { index } => (render::expand(index, &limits, format)?, true),
        Command::Key { index } => (render::key(index, &limits, format)?, true),
        Command::Slide { index } => (render::slide(index, &limits, format)?, true),
        Command::Tableaux { index, kt, .. } => (render::tableaux(index, *kt, &limits, format)?, true),
        Command::Classify { index, brute } => (render::classify(index, *brute, &limits, format)?, true),
        Command::Verify { index } => render::verify(index, &limits, format)?,
        Command::Sweep {
            len_max,
            entry_max,
            workers,
        } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(*workers)
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            (
                pool.install(|| render::sweep(*len_max, *entry_max, &limits, format))?,
                true,
            )
        }
        Command::Limit { index, vars, mmax } => render::limit(index, *vars, *mmax, &limits, format)?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("keyslide: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("keyslide: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Bound(msg)) => {
            eprintln!("keyslide: {msg}");
            ExitCode::from(3)
        }
    }
}
