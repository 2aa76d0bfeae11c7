use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pinching::experiment::{run_sweep, trace_step, write_sweep_csv, write_trace_csv, SweepConfig};
use pinching::verify::{run_all, DEFAULT_SEED};
use pinching::Error;

#[derive(Parser)]
#[command(name = "pinch", version, about = "Pinching-antenna placement experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a sweep and write one CSV row per axis value and scheme.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Defaults to the config's `output_path`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump the per-step gain curves for one placement step.
    Trace {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        step: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the acceptance checks and print a pass/fail line for each.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    Ok(BufWriter::new(File::create(path)?))
}

fn run(cli: Cli) -> Result<(), (&'static str, String)> {
    let lib = |e: Error| (e.kind(), e.to_string());
    match cli.command {
        Command::Run { config, out } => {
            let cfg = SweepConfig::load(&config).map_err(lib)?;
            let out = out
                .or_else(|| cfg.output_path.clone())
                .ok_or(("config", "no --out given and config has no output_path".to_string()))?;
            let rows = run_sweep(&cfg).map_err(lib)?;
            write_sweep_csv(&rows, create(&out).map_err(lib)?).map_err(lib)?;
            println!("wrote {} rows to {}", rows.len(), out.display());
        }
        Command::Trace { config, step, out } => {
            let cfg = SweepConfig::load(&config).map_err(lib)?;
            let trace = trace_step(&cfg, step).map_err(lib)?;
            write_trace_csv(&trace, create(&out).map_err(lib)?).map_err(lib)?;
            println!(
                "PA {} chosen at {:.6} m (G = {:.6e}); grid optimum {:.6} m",
                trace.pa, trace.chosen.0, trace.chosen.1, trace.oracle.0
            );
        }
        Command::Verify { seed } => {
            let outcomes = run_all(seed);
            for o in &outcomes {
                println!("{o}");
            }
            let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
            println!("{}/{} checks passed", outcomes.len() - failed.len(), outcomes.len());
            if !failed.is_empty() {
                return Err(("verification_failed", format!("failed checks: {}", failed.join(", "))));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err((kind, message)) => {
            eprintln!("error: {}", serde_json::json!({ "kind": kind, "message": message }));
            ExitCode::FAILURE
        }
    }
}
