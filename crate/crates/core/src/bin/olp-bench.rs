use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use olp::bench::{
    emit_schedule, list_presets, preset, run_experiment, schedule_spec, write_csv,
    ExperimentConfig,
};
use olp::{Error, Simulator};

#[derive(Parser)]
#[command(name = "olp-bench", version, about = "Regret benchmark for online LP policies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment from a JSON config or a named preset and write CSV.
    Run {
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        config: Option<PathBuf>,
        #[arg(long)]
        preset: Option<String>,
        /// Comma-separated horizons, e.g. 2500,5000.
        #[arg(long, value_delimiter = ',')]
        horizons: Option<Vec<usize>>,
        #[arg(long)]
        sims: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output CSV; stdout when omitted and the config names none.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker cap; 0 uses every core.
        #[arg(long, env = "OLP_BENCH_THREADS", default_value_t = 0)]
        threads: usize,
        /// Use the original horizons and path counts for desk-scale presets.
        #[arg(long)]
        full: bool,
    },
    /// Print a resolving schedule as comma-separated periods.
    Schedule {
        /// learning_approx, finite, known_prob, kp_finite, periodic, midpoint, midpoint_learning
        #[arg(long)]
        kind: String,
        #[arg(long = "T")]
        horizon: usize,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long = "M")]
        m: Option<usize>,
        #[arg(long)]
        omega: Option<usize>,
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// List experiment and instance presets.
    Presets,
}

fn run(cli: Cli) -> olp::Result<()> {
    match cli.command {
        Command::Run {
            config,
            preset: name,
            horizons,
            sims,
            seed,
            out,
            threads,
            full,
        } => {
            let mut cfg = match (config, name) {
                (Some(path), _) => ExperimentConfig::load(&path)?,
                (None, Some(name)) => preset(&name, full)?,
                (None, None) => unreachable!("clap requires --config or --preset"),
            };
            if let Some(h) = horizons {
                cfg.horizons = h;
            }
            if let Some(n) = sims {
                cfg.n_sims = n;
            }
            if let Some(s) = seed {
                cfg.base_seed = s;
            }
            if out.is_some() {
                cfg.output_path = out;
            }
            let rows = run_experiment(&cfg, &Simulator::with_threads(threads))?;
            if cfg.output_path.is_none() {
                write_csv(&rows, std::io::stdout().lock())?;
            }
            Ok(())
        }
        Command::Schedule {
            kind,
            horizon,
            alpha,
            beta,
            m,
            omega,
            epsilon,
        } => {
            let spec = schedule_spec(&kind, alpha, beta, epsilon, m, omega)?;
            println!("{}", emit_schedule(&spec, horizon)?);
            Ok(())
        }
        Command::Presets => {
            print!("{}", list_presets());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(2),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("olp-bench: {e}");
            ExitCode::from(if is_config_error(&e) { 2 } else { 1 })
        }
    }
}

fn is_config_error(e: &Error) -> bool {
    e.is_config()
}
