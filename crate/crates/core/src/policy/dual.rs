//! LP-free bid-price policies driven by projected or unprojected subgradient steps
//! on the resource prices.

use super::{AcceptRule, Decision, PolicyState};
use crate::error::Result;
use crate::instance::Instance;
use crate::schedule::guarded_floor;

/// Price update `q <- q + step (A_j x - target)`, optionally projected onto `q >= 0`.
fn price_step(
    instance: &Instance,
    prices: &mut [f64],
    j: usize,
    x: bool,
    target: &[f64],
    step: f64,
    project: bool,
) {
    let xf = if x { 1.0 } else { 0.0 };
    for (i, q) in prices.iter_mut().enumerate() {
        let next = *q + step * (instance.a(i, j) * xf - target[i]);
        *q = if project { next.max(0.0) } else { next };
    }
}

fn gated(rule: AcceptRule, wants: bool, fits: bool) -> bool {
    match rule {
        AcceptRule::Gated => wants && fits,
        AcceptRule::Literal => fits,
    }
}

fn finish(instance: &Instance, state: &mut PolicyState, j: usize, accept: bool) -> Decision {
    if accept {
        state.take(instance, j);
    }
    state.counts[j] += 1;
    state.t += 1;
    Decision::deterministic(accept, false)
}

/// SFA: bid prices with stepsize `1/sqrt(t)`.
pub fn sfa_step(
    instance: &Instance,
    state: &mut PolicyState,
    arrival: usize,
    rule: AcceptRule,
) -> Result<Decision> {
    state.check(instance, arrival)?;
    let j = arrival;
    let wants = instance.rewards[j] > instance.priced(j, &state.q);
    let step = 1.0 / (state.t as f64).sqrt();
    price_step(instance, &mut state.q, j, wants, &instance.budget_rate, step, true);
    let accept = gated(rule, wants, instance.fits(j, &state.b));
    Ok(finish(instance, state, j, accept))
}

/// DLD's phase lengths and stepsizes for horizon `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DldParams {
    /// End of the learning phase, `floor(T^{2/3})`.
    pub learning_end: usize,
    /// Decision stepsize during learning, `T^{-1/3}`.
    pub explore_step: f64,
    /// Decision stepsize afterwards, `T^{-2/3}`.
    pub exploit_step: f64,
}

impl DldParams {
    pub fn for_horizon(horizon: usize) -> Self {
        let t = horizon as f64;
        DldParams {
            learning_end: guarded_floor(t.powf(2.0 / 3.0)),
            explore_step: t.powf(-1.0 / 3.0),
            exploit_step: t.powf(-2.0 / 3.0),
        }
    }
}

/// DLD: decision prices `q` and learning prices `q_learn` run side by side until
/// `T_e`; then the decision prices restart from the learned ones with a smaller step.
pub fn dld_step(
    instance: &Instance,
    state: &mut PolicyState,
    arrival: usize,
    rule: AcceptRule,
) -> Result<Decision> {
    state.check(instance, arrival)?;
    let params = DldParams::for_horizon(state.horizon());
    let j = arrival;
    let t = state.t;
    if t == params.learning_end + 1 {
        state.q.clone_from(&state.q_learn);
    }

    let wants = instance.rewards[j] > instance.priced(j, &state.q);
    let step = if t <= params.learning_end {
        params.explore_step
    } else {
        params.exploit_step
    };
    price_step(instance, &mut state.q, j, wants, &instance.budget_rate, step, true);
    let accept = gated(rule, wants, instance.fits(j, &state.b));

    if t <= params.learning_end {
        let learn = instance.rewards[j] > instance.priced(j, &state.q_learn);
        let step = 1.0 / t as f64;
        price_step(instance, &mut state.q_learn, j, learn, &instance.budget_rate, step, true);
    }
    Ok(finish(instance, state, j, accept))
}

/// BUF: bid prices against a per-period budget target that is reset to
/// `b / (T - t)` at geometrically spaced checkpoints. Prices are not projected.
pub fn buf_step(instance: &Instance, state: &mut PolicyState, arrival: usize) -> Result<Decision> {
    state.check(instance, arrival)?;
    let j = arrival;
    let t = state.t;
    let wants = instance.rewards[j] > instance.priced(j, &state.q);
    let accept = wants && instance.fits(j, &state.b);
    if accept {
        state.take(instance, j);
    }
    if state.is_budget_checkpoint(t + 1) {
        state.last_budget_update = t + 1;
        let left = (state.horizon() - t) as f64;
        state.d_rate = state.b.iter().map(|b| b / left).collect();
    }
    let step = 1.0 / (t + 2 - state.last_budget_update) as f64;
    let target = state.d_rate.clone();
    price_step(instance, &mut state.q, j, wants, &target, step, false);
    state.counts[j] += 1;
    state.t += 1;
    Ok(Decision::deterministic(accept, false))
}
