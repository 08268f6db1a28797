//! Print resolving schedules of every family for a few horizons.
//!
//! cargo run --example schedules

use olp::ScheduleSpec;

fn main() -> olp::Result<()> {
    let specs = [
        ScheduleSpec::LearningApprox { alpha: 0.7, beta: 0.7 },
        ScheduleSpec::Finite { m: 3, beta: 0.7, epsilon: 0.01 },
        ScheduleSpec::KnownProb { beta: 0.7 },
        ScheduleSpec::KpFinite { m: 2, beta: 0.7 },
        ScheduleSpec::Periodic { omega: 500 },
        ScheduleSpec::Midpoint { with_learning: true },
    ];
    for spec in &specs {
        println!("{}", spec.label());
        for horizon in [2_500, 20_000] {
            let s = spec.build(horizon)?;
            println!("  T = {horizon:>6}  |S| = {:>3}  {s}", s.len());
        }
    }

    println!("\nlearning_approx(0.7, 0.7) size growth:");
    for horizon in [2_500, 10_000, 50_000, 300_000, 1_000_000] {
        let s = specs[0].build(horizon)?;
        println!("  T = {horizon:>9}  |S| = {}", s.len());
    }
    Ok(())
}
