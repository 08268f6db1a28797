//! Regret as a function of the budget ratio on the single-resource instance.
//!
//! cargo run --release --example rho_sweep

use olp::bench::single_resource;
use olp::{compare_policies, PolicyKind, PolicySetup, ScheduleSpec};

fn main() -> olp::Result<()> {
    let setups = [
        PolicySetup::new(PolicyKind::Air, Some(ScheduleSpec::LearningApprox { alpha: 0.7, beta: 0.7 })),
        PolicySetup::new(PolicyKind::Afr, None),
        PolicySetup::new(PolicyKind::Sfa, None),
        PolicySetup::new(PolicyKind::Buf, None),
    ];
    print!("{:>6}", "rho");
    for s in &setups {
        print!(" {:>8}", s.policy.label());
    }
    println!();
    for step in 1..=9 {
        let rho = step as f64 / 10.0;
        let inst = single_resource(rho, 2_000)?;
        let ests = compare_policies(&setups, &inst, 60, 11)?;
        print!("{rho:>6.1}");
        for e in &ests {
            print!(" {:>8.2}", e.mean_regret);
        }
        println!();
    }
    Ok(())
}
