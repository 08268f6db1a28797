//! Describe an experiment as JSON, run it, and write the CSV to stdout.
//!
//! cargo run --release --example experiment_config

use olp::bench::{run_experiment, write_csv, ExperimentConfig};
use olp::Simulator;

const CONFIG: &str = r#"{
    "instance": "single_resource",
    "policies": [
        {"name": "air", "schedule": "learning_approx", "alpha": 0.7, "beta": 0.7},
        {"name": "dld"},
        {"name": "sfa", "literal_accept": true}
    ],
    "horizons": [500, 1000],
    "n_sims": 20,
    "base_seed": 1,
    "sweep": {"param": "rho", "values": [0.3, 0.6]}
}"#;

fn main() -> olp::Result<()> {
    let config = ExperimentConfig::from_json(CONFIG)?;
    let rows = run_experiment(&config, &Simulator::with_threads(2))?;
    write_csv(&rows, std::io::stdout().lock())
}
