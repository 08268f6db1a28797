//! Monte-Carlo regret of every policy on the 10-type, 2-resource instance.
//!
//! cargo run --release --example compare_policies [T] [n_sims]

use olp::bench::{multi_10x2, DEFAULT_SEED};
use olp::{PolicyKind, PolicySetup, ScheduleSpec, Simulator};

fn main() -> olp::Result<()> {
    let mut args = std::env::args().skip(1);
    let horizon = args.next().and_then(|a| a.parse().ok()).unwrap_or(2_500);
    let n_sims = args.next().and_then(|a| a.parse().ok()).unwrap_or(100);

    let setups: Vec<PolicySetup> = PolicyKind::ALL
        .into_iter()
        .map(|k| {
            let schedule = match k {
                PolicyKind::Air => Some(ScheduleSpec::LearningApprox { alpha: 0.7, beta: 0.7 }),
                PolicyKind::AirKp => Some(ScheduleSpec::KnownProb { beta: 0.7 }),
                _ => None,
            };
            PolicySetup::new(k, schedule)
        })
        .collect();

    let inst = multi_10x2(horizon);
    let ests = Simulator::new().compare_policies(&setups, &inst, n_sims, DEFAULT_SEED)?;
    println!("T = {horizon}, {n_sims} paths\n");
    println!("{:<42} {:>9} {:>8} {:>10}", "policy", "regret", "se", "lp solves");
    for (setup, e) in setups.iter().zip(&ests) {
        println!(
            "{:<42} {:>9.3} {:>8.3} {:>10.1}",
            setup.label(),
            e.mean_regret,
            e.std_error,
            e.mean_lp_solves
        );
    }
    Ok(())
}
