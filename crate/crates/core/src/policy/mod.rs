//! Online accept/reject policies.
//!
//! Every policy is a step function over a [`PolicyState`]: call it once per period
//! with the arriving type and it returns a [`Decision`], updating inventory, counts
//! and its own internal estimates. The state starts at period 1 with inventory `T rho`.

mod ada;
mod argmax;
mod dual;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::schedule::{halving_checkpoints, Schedule};

pub use ada::{ada_kp_step, ada_step};
pub use argmax::{afr_step, air_kp_step, air_step};
pub use dual::{buf_step, dld_step, sfa_step, DldParams};

/// Per-path mutable state shared by all policies.
#[derive(Debug, Clone, PartialEq)]
pub struct PolicyState {
    /// Remaining inventory `b^t`.
    pub b: Vec<f64>,
    /// Acceptance plan `u^t` (argmax policies), or the last fluid solution (AFR/ADA).
    pub u: Vec<f64>,
    /// Demand estimate `d^t`; may go negative between resolves.
    pub d: Vec<f64>,
    /// Arrival counts through period `t - 1`.
    pub counts: Vec<u64>,
    /// Current period, starting at 1.
    pub t: usize,
    pub lp_solves: usize,
    /// Dual prices (SFA, BUF) or DLD's decision prices.
    pub q: Vec<f64>,
    /// DLD's learning prices.
    pub q_learn: Vec<f64>,
    /// BUF's last budget-reset period `l`.
    pub last_budget_update: usize,
    /// BUF's per-period budget target.
    pub d_rate: Vec<f64>,
    /// Accepted requests per type.
    pub accepted: Vec<u64>,
    /// Period of the most recent resolve, if any.
    pub last_resolve: Option<usize>,
    horizon: usize,
    checkpoints: Vec<usize>,
}

impl PolicyState {
    pub fn new(instance: &Instance) -> Self {
        let m = instance.m();
        let n = instance.n();
        PolicyState {
            b: instance.initial_inventory(),
            u: vec![0.0; n],
            d: vec![0.0; n],
            counts: vec![0; n],
            t: 1,
            lp_solves: 0,
            q: vec![0.0; m],
            q_learn: vec![0.0; m],
            last_budget_update: 1,
            d_rate: instance.budget_rate.clone(),
            accepted: vec![0; n],
            last_resolve: None,
            horizon: instance.horizon,
            checkpoints: halving_checkpoints(instance.horizon),
        }
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Periods remaining including the current one, `T - t + 1`.
    pub fn remaining(&self) -> f64 {
        (self.horizon + 1 - self.t) as f64
    }

    /// Empirical arrival frequencies `N / (t - 1)`, zero at `t = 1`.
    pub fn empirical_probabilities(&self) -> Vec<f64> {
        if self.t <= 1 {
            return vec![0.0; self.counts.len()];
        }
        let seen = (self.t - 1) as f64;
        self.counts.iter().map(|&c| c as f64 / seen).collect()
    }

    /// Checks that `arrival` is a valid type and the path is not exhausted.
    pub(crate) fn check(&self, instance: &Instance, arrival: usize) -> Result<()> {
        if arrival >= instance.n() {
            return Err(Error::input(format!(
                "arrival type {arrival} out of range for n = {}",
                instance.n()
            )));
        }
        if self.t > self.horizon {
            return Err(Error::input(format!(
                "period {} beyond horizon {}",
                self.t, self.horizon
            )));
        }
        Ok(())
    }

    /// Accepts `arrival`, consuming its column from inventory.
    pub(crate) fn take(&mut self, instance: &Instance, arrival: usize) {
        instance.consume(arrival, &mut self.b);
        self.accepted[arrival] += 1;
    }

    /// Records a rejection of `arrival` and moves to the next period.
    /// Useful for hand-written policies driven through [`crate::sim::run_with`].
    pub fn reject(&mut self, arrival: usize) -> Decision {
        self.counts[arrival] += 1;
        self.t += 1;
        Decision::reject()
    }

    fn is_budget_checkpoint(&self, t: usize) -> bool {
        self.checkpoints.binary_search(&t).is_ok()
    }
}

/// Outcome of one period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decision {
    pub accept: bool,
    pub resolved_this_period: bool,
    /// 1 or 0 for deterministic rules; the Bernoulli parameter for randomized ones.
    pub acceptance_probability: f64,
}

impl Decision {
    pub fn reject() -> Self {
        Decision {
            accept: false,
            resolved_this_period: false,
            acceptance_probability: 0.0,
        }
    }

    fn deterministic(accept: bool, resolved: bool) -> Self {
        Decision {
            accept,
            resolved_this_period: resolved,
            acceptance_probability: if accept { 1.0 } else { 0.0 },
        }
    }
}

/// How SFA and DLD combine their price signal with the inventory check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AcceptRule {
    /// Accept iff the reward beats the priced consumption and the request fits.
    #[default]
    Gated,
    /// Accept whenever the request fits; prices are updated but never consulted.
    Literal,
}

/// Stable policy names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolicyKind {
    Air,
    AirKp,
    Afr,
    Ada,
    AdaKp,
    Sfa,
    Dld,
    Buf,
}

impl PolicyKind {
    pub const ALL: [PolicyKind; 8] = [
        PolicyKind::Air,
        PolicyKind::AirKp,
        PolicyKind::Afr,
        PolicyKind::Ada,
        PolicyKind::AdaKp,
        PolicyKind::Sfa,
        PolicyKind::Dld,
        PolicyKind::Buf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolicyKind::Air => "air",
            PolicyKind::AirKp => "air-kp",
            PolicyKind::Afr => "afr",
            PolicyKind::Ada => "ada",
            PolicyKind::AdaKp => "ada-kp",
            PolicyKind::Sfa => "sfa",
            PolicyKind::Dld => "dld",
            PolicyKind::Buf => "buf",
        }
    }

    /// AIR and AIR-KP resolve on a schedule; everything else ignores one.
    pub fn needs_schedule(self) -> bool {
        matches!(self, PolicyKind::Air | PolicyKind::AirKp)
    }
}

impl fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolicyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolicyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::config(format!("unknown policy `{s}`")))
    }
}

/// A policy with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolicySpec {
    pub kind: PolicyKind,
    /// Only read by SFA and DLD.
    pub accept_rule: AcceptRule,
}

impl From<PolicyKind> for PolicySpec {
    fn from(kind: PolicyKind) -> Self {
        PolicySpec {
            kind,
            accept_rule: AcceptRule::Gated,
        }
    }
}

impl PolicySpec {
    pub fn label(&self) -> String {
        match (self.kind, self.accept_rule) {
            (PolicyKind::Sfa | PolicyKind::Dld, AcceptRule::Literal) => {
                format!("{}(literal_accept)", self.kind)
            }
            _ => self.kind.to_string(),
        }
    }

    /// Advances `state` by one period.
    pub fn step(
        &self,
        instance: &Instance,
        schedule: Option<&Schedule>,
        state: &mut PolicyState,
        arrival: usize,
        coin: f64,
    ) -> Result<Decision> {
        let needs = || {
            schedule.ok_or_else(|| {
                Error::input(format!("policy `{}` requires a resolving schedule", self.kind))
            })
        };
        match self.kind {
            PolicyKind::Air => air_step(instance, needs()?, state, arrival),
            PolicyKind::AirKp => air_kp_step(instance, needs()?, state, arrival),
            PolicyKind::Afr => afr_step(instance, state, arrival),
            PolicyKind::Ada => ada_step(instance, state, arrival, coin),
            PolicyKind::AdaKp => ada_kp_step(instance, state, arrival, coin),
            PolicyKind::Sfa => sfa_step(instance, state, arrival, self.accept_rule),
            PolicyKind::Dld => dld_step(instance, state, arrival, self.accept_rule),
            PolicyKind::Buf => buf_step(instance, state, arrival),
        }
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use crate::instance::Instance;

    /// One resource, two unit-consumption types with rewards 2 and 1, equal arrival odds.
    pub fn single_resource(rho: f64, horizon: usize) -> Instance {
        Instance::new(
            vec![2.0, 1.0],
            vec![vec![1.0, 1.0]],
            vec![rho],
            horizon,
            vec![0.5, 0.5],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in PolicyKind::ALL {
            assert_eq!(k.name().parse::<PolicyKind>().unwrap(), k);
        }
        assert!("nope".parse::<PolicyKind>().is_err());
    }

    #[test]
    fn schedule_required_for_air() {
        let inst = test_support::single_resource(0.5, 10);
        let mut state = PolicyState::new(&inst);
        let spec = PolicySpec::from(PolicyKind::Air);
        assert!(spec.step(&inst, None, &mut state, 0, 0.5).is_err());
        let spec = PolicySpec::from(PolicyKind::Sfa);
        assert!(spec.step(&inst, None, &mut state, 0, 0.5).is_ok());
    }

    #[test]
    fn bad_arrival_and_exhausted_path() {
        let inst = test_support::single_resource(0.5, 2);
        let mut state = PolicyState::new(&inst);
        let spec = PolicySpec::from(PolicyKind::Buf);
        assert!(spec.step(&inst, None, &mut state, 2, 0.5).is_err());
        spec.step(&inst, None, &mut state, 0, 0.5).unwrap();
        spec.step(&inst, None, &mut state, 0, 0.5).unwrap();
        assert!(spec.step(&inst, None, &mut state, 0, 0.5).is_err());
    }

    #[test]
    fn empirical_probabilities_start_at_zero() {
        let inst = test_support::single_resource(0.5, 10);
        let mut state = PolicyState::new(&inst);
        assert_eq!(state.empirical_probabilities(), vec![0.0, 0.0]);
        state.reject(0);
        state.reject(0);
        state.reject(1);
        assert_eq!(state.t, 4);
        let p = state.empirical_probabilities();
        assert!((p[0] - 2.0 / 3.0).abs() < 1e-15 && (p[1] - 1.0 / 3.0).abs() < 1e-15);
    }
}
