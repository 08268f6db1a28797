//! Adaptive allocation: resolve every period and accept a fitting request with
//! probability `y*_j / ((T-t+1) p_j)`.

use super::{Decision, PolicyState};
use crate::error::Result;
use crate::instance::Instance;
use crate::lp::solve_fluid;

fn randomized_step(
    instance: &Instance,
    state: &mut PolicyState,
    arrival: usize,
    coin: f64,
    probabilities: Vec<f64>,
) -> Result<Decision> {
    state.check(instance, arrival)?;
    let remaining = state.remaining();
    let demand: Vec<f64> = probabilities.iter().map(|p| remaining * p).collect();
    let sol = solve_fluid(instance, &state.b, &demand)?;
    state.lp_solves += 1;
    state.last_resolve = Some(state.t);

    let j = arrival;
    state.counts[j] += 1;
    // 0/0 when the type has never been seen is read as "never accept".
    let prob = if probabilities[j] > 0.0 && demand[j] > 0.0 {
        (sol.primal[j] / demand[j]).clamp(0.0, 1.0)
    } else {
        0.0
    };
    state.u = sol.primal;
    state.d = demand;

    let fits = instance.fits(j, &state.b);
    let accept = fits && coin < prob;
    if accept {
        state.take(instance, j);
    }
    state.t += 1;
    Ok(Decision {
        accept,
        resolved_this_period: true,
        acceptance_probability: if fits { prob } else { 0.0 },
    })
}

/// ADA with empirical frequencies. `coin` is a uniform draw in `[0, 1)`.
pub fn ada_step(
    instance: &Instance,
    state: &mut PolicyState,
    arrival: usize,
    coin: f64,
) -> Result<Decision> {
    let p = state.empirical_probabilities();
    randomized_step(instance, state, arrival, coin, p)
}

/// ADA with the true arrival probabilities.
pub fn ada_kp_step(
    instance: &Instance,
    state: &mut PolicyState,
    arrival: usize,
    coin: f64,
) -> Result<Decision> {
    randomized_step(instance, state, arrival, coin, instance.probabilities.clone())
}
