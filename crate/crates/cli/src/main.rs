use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rrlab::session::{emit, execute, parse_session, ExecOptions, Format};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

/// Run an rrlab session file and print one report per command.
#[derive(Parser, Debug)]
#[command(name = "rrlab", version)]
struct Cli {
    /// Session file, or `-` for standard input.
    #[arg(required_unless_present = "eval")]
    session: Option<PathBuf>,
    /// Session text given inline; lines may be separated by `;`.
    #[arg(short, long, conflicts_with = "session")]
    eval: Option<String>,
    /// Characteristic of the coefficient field (0 or an odd prime).
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Seed for random searches. Defaults to $RRLAB_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    window: Option<usize>,
    #[arg(long)]
    cap: Option<usize>,
    /// Random reductions drawn by `invariance`.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    /// Run the trials of `invariance` in parallel.
    #[arg(long)]
    parallel_trials: bool,
}

fn read_source(cli: &Cli) -> io::Result<String> {
    if let Some(src) = &cli.eval {
        return Ok(src.replace(';', "\n"));
    }
    match cli.session.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let src = match read_source(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("rrlab: {e}");
            return ExitCode::from(1);
        }
    };
    let session = match parse_session(&src) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("rrlab: {e} [{}]", e.code());
            return ExitCode::from(1);
        }
    };
    let default_seed = match std::env::var("RRLAB_SEED") {
        Ok(v) => match v.trim().parse() {
            Ok(s) => Some(s),
            Err(_) => {
                eprintln!("rrlab: RRLAB_SEED must be a non-negative integer");
                return ExitCode::from(1);
            }
        },
        Err(_) => None,
    };
    let opts = ExecOptions {
        characteristic: cli.characteristic,
        seed: cli.seed,
        window: cli.window,
        cap: cli.cap,
        trials: cli.trials,
        parallel: cli.parallel_trials,
        default_seed,
    };
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Text => Format::Text,
    };
    let reports = execute(&session, &opts);
    let mut out = io::stdout().lock();
    for r in &reports {
        if out.write_all(emit(r, format).as_bytes()).is_err() {
            return ExitCode::from(2);
        }
    }
    if reports.iter().all(|r| r.ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
