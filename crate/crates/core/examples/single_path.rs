//! Run AIR on one sampled path and walk through the decision trace.
//!
//! cargo run --example single_path

use olp::bench::single_resource;
use olp::sim::run_with;
use olp::{hindsight_value, sample_path, PolicyKind, PolicySpec, ScheduleSpec};

fn main() -> olp::Result<()> {
    let inst = single_resource(0.5, 400)?;
    let schedule = ScheduleSpec::LearningApprox { alpha: 0.7, beta: 0.7 }.build(inst.horizon)?;
    let path = sample_path(&inst, 3);
    let air = PolicySpec::from(PolicyKind::Air);

    let run = run_with(&inst, &path, 4, true, |state, j, coin| {
        air.step(&inst, Some(&schedule), state, j, coin)
    })?;
    let hindsight = hindsight_value(&inst, &path)?;

    println!("schedule {schedule}");
    println!("arrivals per type {:?}", path.counts);
    println!("accepted per type {:?}", run.accepted);
    println!("revenue {:.2}  hindsight {hindsight:.2}  regret {:.2}", run.revenue, hindsight - run.revenue);
    println!("lp solves {}  final inventory {:?}", run.lp_solves, run.final_inventory);

    println!("\nresolve periods:");
    for e in run.decision_trace.iter().flatten().filter(|e| e.resolved) {
        println!("  t = {:>3}  arrival {}  accept {}", e.t, e.arrival, e.accept);
    }
    Ok(())
}
