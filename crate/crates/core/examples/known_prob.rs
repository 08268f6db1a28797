//! When arrival probabilities are known: AIR-KP and ADA-KP against their learning counterparts.
//!
//! cargo run --release --example known_prob

use olp::bench::multi_10x2;
use olp::{compare_policies, PolicyKind, PolicySetup, ScheduleSpec};

fn main() -> olp::Result<()> {
    let setups = [
        PolicySetup::new(PolicyKind::AirKp, Some(ScheduleSpec::KnownProb { beta: 0.7 })),
        PolicySetup::new(PolicyKind::AirKp, Some(ScheduleSpec::KpFinite { m: 1, beta: 0.7 })),
        PolicySetup::new(PolicyKind::Air, Some(ScheduleSpec::LearningApprox { alpha: 0.7, beta: 0.7 })),
        PolicySetup::new(PolicyKind::AdaKp, None),
        PolicySetup::new(PolicyKind::Ada, None),
    ];
    let inst = multi_10x2(5_000);
    for (s, e) in setups.iter().zip(compare_policies(&setups, &inst, 50, 21)?) {
        println!("{:<40} regret {:>7.2} +- {:<5.2} solves {:>6.0}", s.label(), e.mean_regret, e.std_error, e.mean_lp_solves);
    }
    Ok(())
}
