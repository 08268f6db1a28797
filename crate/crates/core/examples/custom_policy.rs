//! Plug a hand-written policy into the simulator and score it against AIR on the same paths.
//!
//! cargo run --example custom_policy

use olp::bench::single_resource;
use olp::sim::run_with;
use olp::{hindsight_value, run_policy, sample_path, Decision, PolicyKind, ScheduleSpec};

fn main() -> olp::Result<()> {
    let inst = single_resource(0.5, 1_000)?;
    let schedule = ScheduleSpec::LearningApprox { alpha: 0.7, beta: 0.7 }.build(inst.horizon)?;

    let (mut booking, mut air) = (0.0, 0.0);
    let n = 50;
    for seed in 0..n {
        let path = sample_path(&inst, seed);
        let h = hindsight_value(&inst, &path)?;

        // Booking limit: keep enough stock for the expected remaining high-value demand.
        let run = run_with(&inst, &path, seed, false, |state, j, _coin| {
            let protect = state.remaining() * inst.probabilities[0];
            let wanted = j == 0 || state.b[0] - 1.0 >= protect;
            if !wanted || !inst.fits(j, &state.b) {
                return Ok(state.reject(j));
            }
            inst.consume(j, &mut state.b);
            state.accepted[j] += 1;
            state.counts[j] += 1;
            state.t += 1;
            Ok(Decision { accept: true, resolved_this_period: false, acceptance_probability: 1.0 })
        })?;
        booking += h - run.revenue;

        let run = run_policy(&PolicyKind::Air.into(), &inst, Some(&schedule), &path, seed)?;
        air += h - run.revenue;
    }
    println!("mean regret over {n} paths");
    println!("  static booking limit {:.2}", booking / n as f64);
    println!("  air                  {:.2}", air / n as f64);
    Ok(())
}
