//! Solve the fluid LP for a small two-resource instance and inspect the solution.
//!
//! cargo run --example fluid_lp

use olp::{max_coord_over_optima, solve_fluid, Instance};

fn main() -> olp::Result<()> {
    let inst = Instance::new(
        vec![4.0, 3.0, 1.0],
        vec![vec![1.0, 1.0, 0.0], vec![2.0, 0.0, 1.0]],
        vec![0.5, 0.6],
        100,
        vec![0.3, 0.3, 0.4],
    )?;
    let b = inst.initial_inventory();
    let d: Vec<f64> = inst.probabilities.iter().map(|p| p * inst.horizon as f64).collect();

    let sol = solve_fluid(&inst, &b, &d)?;
    println!("b = {b:?}");
    println!("d = {d:?}");
    println!("objective      {:.4}", sol.objective);
    println!("primal         {:?}", sol.primal);
    println!("resource duals {:?}", sol.resource_duals());
    println!("demand duals   {:?}", sol.demand_duals());
    println!("pivots         {}", sol.pivots);

    let cert = sol.certificate(&inst, &b, &d);
    println!("worst KKT violation {:.2e}", cert.worst());

    for j in 0..inst.n() {
        let v = max_coord_over_optima(&inst, &b, &d, j)?;
        println!("max y_{j} over optimal solutions: {v:.4}");
    }
    Ok(())
}
