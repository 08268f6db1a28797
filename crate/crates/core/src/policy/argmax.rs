//! Argmax policies: AIR and AIR-KP resolve on a schedule and track the plan with
//! first-order updates in between; AFR resolves every period.

use super::{Decision, PolicyState};
use crate::error::Result;
use crate::instance::Instance;
use crate::lp::solve_fluid;
use crate::schedule::Schedule;

fn resolve(instance: &Instance, state: &mut PolicyState, demand: Vec<f64>) -> Result<()> {
    let sol = solve_fluid(instance, &state.b, &demand)?;
    state.u = sol.primal;
    state.d = demand;
    state.lp_solves += 1;
    state.last_resolve = Some(state.t);
    Ok(())
}

/// Shared tail of AIR and AIR-KP after an optional resolve.
fn argmax_tail(
    instance: &Instance,
    state: &mut PolicyState,
    arrival: usize,
    resolved: bool,
) -> Decision {
    let j = arrival;
    state.counts[j] += 1;
    let u = state.u[j];
    let accept = instance.fits(j, &state.b) && u > 1.0 && u >= state.d[j] - u;
    if accept {
        state.take(instance, j);
        state.u[j] -= 1.0;
    }
    state.d[j] -= 1.0;
    state.t += 1;
    Decision::deterministic(accept, resolved)
}

/// One period of AIR: resolve with empirical frequencies if `t` is scheduled,
/// then accept iff the request fits, `u_j > 1` and `u_j >= d_j - u_j`.
pub fn air_step(
    instance: &Instance,
    schedule: &Schedule,
    state: &mut PolicyState,
    arrival: usize,
) -> Result<Decision> {
    state.check(instance, arrival)?;
    let resolved = schedule.contains(state.t);
    if resolved {
        let remaining = state.remaining();
        let demand = state
            .empirical_probabilities()
            .into_iter()
            .map(|p| remaining * p)
            .collect();
        resolve(instance, state, demand)?;
    }
    Ok(argmax_tail(instance, state, arrival, resolved))
}

/// AIR with the true arrival probabilities in the resolve.
pub fn air_kp_step(
    instance: &Instance,
    schedule: &Schedule,
    state: &mut PolicyState,
    arrival: usize,
) -> Result<Decision> {
    state.check(instance, arrival)?;
    let resolved = schedule.contains(state.t);
    if resolved {
        let remaining = state.remaining();
        let demand = instance
            .probabilities
            .iter()
            .map(|p| remaining * p)
            .collect();
        resolve(instance, state, demand)?;
    }
    Ok(argmax_tail(instance, state, arrival, resolved))
}

/// One period of AFR: resolve every period and accept iff the request fits and
/// `y*_j >= (T-t+1) p_j - y*_j`.
pub fn afr_step(instance: &Instance, state: &mut PolicyState, arrival: usize) -> Result<Decision> {
    state.check(instance, arrival)?;
    let remaining = state.remaining();
    let demand: Vec<f64> = state
        .empirical_probabilities()
        .into_iter()
        .map(|p| remaining * p)
        .collect();
    resolve(instance, state, demand)?;

    let j = arrival;
    state.counts[j] += 1;
    let y = state.u[j];
    let accept = instance.fits(j, &state.b) && y >= state.d[j] - y;
    if accept {
        state.take(instance, j);
    }
    state.t += 1;
    Ok(Decision::deterministic(accept, true))
}

#[cfg(test)]
mod tests {
    use super::super::test_support::single_resource;
    use super::*;
    use crate::schedule::Schedule;

    #[test]
    fn accepts_when_plan_dominates() {
        let inst = single_resource(0.5, 100);
        let sched = Schedule::custom([90], 100).unwrap();
        let mut st = PolicyState::new(&inst);
        st.u = vec![3.0, 0.0];
        st.d = vec![5.0, 0.0];
        let dec = air_step(&inst, &sched, &mut st, 0).unwrap();
        assert!(dec.accept && !dec.resolved_this_period);
        assert_eq!(st.u[0], 2.0);
        assert_eq!(st.d[0], 4.0);
        assert_eq!(st.b, vec![49.0]);
        assert_eq!(st.counts, vec![1, 0]);
    }

    #[test]
    fn rejects_with_empty_plan() {
        let inst = single_resource(0.5, 100);
        let sched = Schedule::custom([90], 100).unwrap();
        let mut st = PolicyState::new(&inst);
        st.d = vec![-4.0, 7.0];
        let dec = air_step(&inst, &sched, &mut st, 0).unwrap();
        assert!(!dec.accept);
        assert_eq!(st.d[0], -5.0);
        assert_eq!(st.u[0], 0.0);
    }

    #[test]
    fn resolve_at_midpoint() {
        // t = 50, b = 30, N = (25, 24): d = 51 N / 49, y* fills type 1 then type 2.
        let inst = single_resource(0.5, 100);
        let sched = Schedule::custom([50], 100).unwrap();
        let mut st = PolicyState::new(&inst);
        st.t = 50;
        st.b = vec![30.0];
        st.counts = vec![25, 24];
        let before = st.clone();
        let dec = air_step(&inst, &sched, &mut st, 1).unwrap();
        assert!(dec.resolved_this_period);
        assert_eq!(st.lp_solves, 1);

        // Expected values from the greedy single-resource oracle.
        let d1: f64 = 51.0 * 25.0 / 49.0;
        let d2: f64 = 51.0 * 24.0 / 49.0;
        let y1 = d1.min(30.0);
        let y2 = (30.0 - y1).min(d2);
        assert!((d1 - 26.020408).abs() < 1e-6 && (y2 - 3.979592).abs() < 1e-6);
        let phi = 2.0 * y1 + y2;
        assert!((phi - 56.020408).abs() < 1e-6);

        // Arrival was type 2: u_2 = 3.98 > 1 but 3.98 < 24.98 - 3.98, so reject.
        assert!(!dec.accept);
        assert!((st.u[0] - y1).abs() < 1e-9 && (st.u[1] - y2).abs() < 1e-9);
        assert!((st.d[1] - (d2 - 1.0)).abs() < 1e-9);
        assert_eq!(st.b, before.b);
    }

    #[test]
    fn kp_first_resolve_plans_only_high_type() {
        let inst = single_resource(0.5, 100);
        let sched = Schedule::custom([1], 100).unwrap();
        let mut st = PolicyState::new(&inst);
        let dec = air_kp_step(&inst, &sched, &mut st, 1).unwrap();
        assert!(dec.resolved_this_period && !dec.accept);
        assert_eq!(st.u, vec![50.0, 0.0]);
        let dec = air_kp_step(&inst, &sched, &mut st, 0).unwrap();
        assert!(dec.accept);
    }

    #[test]
    fn kp_unit_plan_rejects() {
        let inst = single_resource(0.5, 100);
        let sched = Schedule::custom([100], 100).unwrap();
        let mut st = PolicyState::new(&inst);
        st.u = vec![1.0, 0.0];
        st.d = vec![1.0, 0.0];
        assert!(!air_kp_step(&inst, &sched, &mut st, 0).unwrap().accept);
    }

    #[test]
    fn air_resolve_at_first_period_plans_nothing() {
        let inst = single_resource(0.5, 20);
        let sched = Schedule::custom([1], 20).unwrap();
        let mut st = PolicyState::new(&inst);
        let dec = air_step(&inst, &sched, &mut st, 0).unwrap();
        assert!(dec.resolved_this_period && !dec.accept);
        assert_eq!(st.u, vec![0.0, 0.0]);
        for _ in 0..5 {
            assert!(!air_step(&inst, &sched, &mut st, 0).unwrap().accept);
        }
    }

    #[test]
    fn afr_first_period_accepts_anything_feasible() {
        let inst = single_resource(0.5, 100);
        let mut st = PolicyState::new(&inst);
        assert!(afr_step(&inst, &mut st, 1).unwrap().accept);
        let mut empty = PolicyState::new(&inst);
        empty.b = vec![0.5];
        assert!(!afr_step(&inst, &mut empty, 1).unwrap().accept);
    }

    #[test]
    fn afr_accepts_when_demand_bound_tight() {
        // Plenty of inventory: y* = d, so y* >= d - y* holds for every type.
        let inst = single_resource(0.9, 50);
        let mut st = PolicyState::new(&inst);
        st.t = 11;
        st.counts = vec![5, 5];
        assert!(afr_step(&inst, &mut st, 1).unwrap().accept);
        assert_eq!(st.u[1], st.d[1]);
    }

    #[test]
    fn afr_solves_every_period() {
        let inst = single_resource(0.5, 30);
        let mut st = PolicyState::new(&inst);
        for t in 0..30 {
            afr_step(&inst, &mut st, t % 2).unwrap();
        }
        assert_eq!(st.lp_solves, 30);
    }
}
