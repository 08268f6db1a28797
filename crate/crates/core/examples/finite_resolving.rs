//! AIR with a fixed budget of LP solves against the LP-free dual policy.
//!
//! cargo run --release --example finite_resolving

use olp::bench::multi_10x2;
use olp::{compare_policies, PolicyKind, PolicySetup, ScheduleSpec};

fn main() -> olp::Result<()> {
    let mut setups: Vec<PolicySetup> = (2..=5)
        .map(|m| {
            PolicySetup::new(
                PolicyKind::Air,
                Some(ScheduleSpec::Finite { m, beta: 0.7, epsilon: 0.01 }),
            )
        })
        .collect();
    setups.push(PolicySetup::new(PolicyKind::Sfa, None));

    for horizon in [2_500, 10_000] {
        let inst = multi_10x2(horizon);
        let ests = compare_policies(&setups, &inst, 50, 5)?;
        println!("T = {horizon}");
        for (s, e) in setups.iter().zip(&ests) {
            println!("  {:<50} regret {:>8.2}  solves {:>4.0}", s.label(), e.mean_regret, e.mean_lp_solves);
        }
    }
    Ok(())
}
