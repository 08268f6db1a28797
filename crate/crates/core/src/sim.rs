//! Sample paths, policy runs, the hindsight benchmark and Monte-Carlo regret.
//!
//! Path `i` of an experiment uses seed `split(base_seed, i)`; the decision coins
//! of every policy on that path come from `split(path_seed, 1)`. All policies in a
//! comparison therefore see identical arrivals (common random numbers), and the
//! result does not depend on how many workers run the paths.

use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::lp::fluid_value;
use crate::policy::{Decision, PolicySpec, PolicyState};
use crate::rng::{split, stream};
use crate::schedule::{Schedule, ScheduleSpec};

/// Slack allowed when checking revenue against the hindsight value.
pub const DOMINANCE_TOL: f64 = 1e-9;

/// One realization of the arrival sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePath {
    /// Arriving type in each period `1..=T`.
    pub arrivals: Vec<usize>,
    pub seed: u64,
    /// Total arrivals per type.
    pub counts: Vec<u64>,
}

impl SamplePath {
    /// Builds a path from explicit arrivals.
    pub fn from_arrivals(arrivals: Vec<usize>, n: usize, seed: u64) -> Result<Self> {
        let mut counts = vec![0; n];
        for &j in &arrivals {
            *counts
                .get_mut(j)
                .ok_or_else(|| Error::input(format!("arrival type {j} out of range")))? += 1;
        }
        Ok(SamplePath {
            arrivals,
            seed,
            counts,
        })
    }

    /// Arrivals per type in periods `t..=T` (1-based).
    pub fn suffix_counts(&self, t: usize) -> Vec<u64> {
        let mut out = vec![0; self.counts.len()];
        for &j in self.arrivals.iter().skip(t.saturating_sub(1)) {
            out[j] += 1;
        }
        out
    }
}

/// Draws `T` i.i.d. arrivals by inverse CDF.
pub fn sample_path(instance: &Instance, seed: u64) -> SamplePath {
    let n = instance.n();
    let mut cumulative = Vec::with_capacity(n);
    let mut acc = 0.0;
    for &p in &instance.probabilities {
        acc += p;
        cumulative.push(acc);
    }
    // Rounding can leave the last cumulative value just under 1.
    let fallback = instance
        .probabilities
        .iter()
        .rposition(|&p| p > 0.0)
        .unwrap_or(n - 1);

    let mut rng = stream(seed);
    let mut counts = vec![0; n];
    let arrivals = (0..instance.horizon)
        .map(|_| {
            let u: f64 = rng.random();
            let j = (0..n)
                .find(|&j| instance.probabilities[j] > 0.0 && u < cumulative[j])
                .unwrap_or(fallback);
            counts[j] += 1;
            j
        })
        .collect();
    SamplePath {
        arrivals,
        seed,
        counts,
    }
}

/// `phi(T rho, Z)` with `Z` the realized arrival counts.
pub fn hindsight_value(instance: &Instance, path: &SamplePath) -> Result<f64> {
    let demand: Vec<f64> = path.counts.iter().map(|&c| c as f64).collect();
    fluid_value(instance, &instance.initial_inventory(), &demand)
}

/// One period of a recorded run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceEntry {
    pub t: usize,
    pub arrival: usize,
    pub accept: bool,
    pub resolved: bool,
    pub acceptance_probability: f64,
}

/// Outcome of running a policy over one path.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    /// `r . accepted`.
    pub revenue: f64,
    pub accepted: Vec<u64>,
    pub final_inventory: Vec<f64>,
    pub lp_solves: usize,
    pub decision_trace: Option<Vec<TraceEntry>>,
    pub wall_time: Duration,
}

/// Drives an arbitrary step function over a path. The step receives the state,
/// the arriving type and a uniform coin, and must advance the state by one period.
pub fn run_with<F>(
    instance: &Instance,
    path: &SamplePath,
    decision_seed: u64,
    record_trace: bool,
    mut step: F,
) -> Result<RunResult>
where
    F: FnMut(&mut PolicyState, usize, f64) -> Result<Decision>,
{
    if path.arrivals.len() != instance.horizon {
        return Err(Error::input(format!(
            "path has {} periods, instance horizon is {}",
            path.arrivals.len(),
            instance.horizon
        )));
    }
    let start = Instant::now();
    let mut coins = stream(decision_seed);
    let mut state = PolicyState::new(instance);
    let mut trace = record_trace.then(|| Vec::with_capacity(instance.horizon));
    for &j in &path.arrivals {
        let t = state.t;
        // One coin per period whether or not the policy uses it.
        let coin: f64 = coins.random();
        let dec = step(&mut state, j, coin)?;
        if let Some(trace) = trace.as_mut() {
            trace.push(TraceEntry {
                t,
                arrival: j,
                accept: dec.accept,
                resolved: dec.resolved_this_period,
                acceptance_probability: dec.acceptance_probability,
            });
        }
    }
    let accepted_f: Vec<f64> = state.accepted.iter().map(|&a| a as f64).collect();
    Ok(RunResult {
        revenue: instance.revenue_of(&accepted_f),
        accepted: state.accepted,
        final_inventory: state.b,
        lp_solves: state.lp_solves,
        decision_trace: trace,
        wall_time: start.elapsed(),
    })
}

fn check_schedule(
    policy: &PolicySpec,
    instance: &Instance,
    schedule: Option<&Schedule>,
) -> Result<()> {
    match schedule {
        None if policy.kind.needs_schedule() => Err(Error::input(format!(
            "policy `{}` requires a resolving schedule",
            policy.kind
        ))),
        Some(s) if policy.kind.needs_schedule() && s.horizon() != instance.horizon => {
            Err(Error::input(format!(
                "schedule built for T = {} but instance horizon is {}",
                s.horizon(),
                instance.horizon
            )))
        }
        _ => Ok(()),
    }
}

/// Runs a named policy over `path`.
pub fn run_policy(
    policy: &PolicySpec,
    instance: &Instance,
    schedule: Option<&Schedule>,
    path: &SamplePath,
    decision_seed: u64,
) -> Result<RunResult> {
    check_schedule(policy, instance, schedule)?;
    run_with(instance, path, decision_seed, false, |state, j, coin| {
        policy.step(instance, schedule, state, j, coin)
    })
}

/// A policy paired with the schedule family it resolves on, if any.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolicySetup {
    pub policy: PolicySpec,
    pub schedule: Option<ScheduleSpec>,
}

impl PolicySetup {
    pub fn new(policy: impl Into<PolicySpec>, schedule: Option<ScheduleSpec>) -> Self {
        PolicySetup {
            policy: policy.into(),
            schedule,
        }
    }

    /// E.g. `air[learning_approx(alpha=0.7,beta=0.7)]` or `sfa`.
    pub fn label(&self) -> String {
        match (&self.schedule, self.policy.kind.needs_schedule()) {
            (Some(s), true) => format!("{}[{}]", self.policy.label(), s.label()),
            _ => self.policy.label(),
        }
    }

    /// The concrete schedule for a horizon, or `None` for schedule-free policies.
    pub fn schedule_for(&self, horizon: usize) -> Result<Option<Schedule>> {
        if !self.policy.kind.needs_schedule() {
            return Ok(None);
        }
        let spec = self.schedule.ok_or_else(|| {
            Error::input(format!(
                "policy `{}` requires a resolving schedule",
                self.policy.kind
            ))
        })?;
        spec.build(horizon).map(Some)
    }
}

/// Monte-Carlo summary for one policy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegretEstimate {
    pub mean_hindsight: f64,
    pub mean_revenue: f64,
    pub mean_regret: f64,
    /// Sample standard deviation of per-path regret over `sqrt(n_sims)`; 0 for one path.
    pub std_error: f64,
    pub n_sims: usize,
    pub mean_lp_solves: f64,
    /// Sum of per-path run times.
    pub total_wall_time: f64,
    /// Paths on which revenue exceeded the hindsight value by more than [`DOMINANCE_TOL`].
    pub dominance_violations: usize,
    /// Largest `revenue - hindsight` seen on any path.
    pub max_dominance_excess: f64,
}

/// Sum in a fixed binary-tree order, independent of how the values were produced.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 8 {
        return values.iter().sum();
    }
    let (a, b) = values.split_at(values.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    revenue: f64,
    lp_solves: usize,
    seconds: f64,
}

struct PathOutcome {
    hindsight: f64,
    runs: Vec<Sample>,
}

fn summarize(hindsight: &[f64], runs: &[Sample]) -> RegretEstimate {
    let n = hindsight.len();
    let nf = n as f64;
    let revenue: Vec<f64> = runs.iter().map(|s| s.revenue).collect();
    let regret: Vec<f64> = hindsight.iter().zip(&revenue).map(|(h, r)| h - r).collect();
    let mean_hindsight = pairwise_sum(hindsight) / nf;
    let mean_revenue = pairwise_sum(&revenue) / nf;
    let mean_regret = mean_hindsight - mean_revenue;
    let std_error = if n > 1 {
        let centered: Vec<f64> = regret.iter().map(|r| (r - mean_regret).powi(2)).collect();
        (pairwise_sum(&centered) / (nf - 1.0)).sqrt() / nf.sqrt()
    } else {
        0.0
    };
    let lp: Vec<f64> = runs.iter().map(|s| s.lp_solves as f64).collect();
    let secs: Vec<f64> = runs.iter().map(|s| s.seconds).collect();
    let excess = regret.iter().map(|r| -r).fold(f64::NEG_INFINITY, f64::max);
    RegretEstimate {
        mean_hindsight,
        mean_revenue,
        mean_regret,
        std_error,
        n_sims: n,
        mean_lp_solves: pairwise_sum(&lp) / nf,
        total_wall_time: pairwise_sum(&secs),
        dominance_violations: regret.iter().filter(|&&r| r < -DOMINANCE_TOL).count(),
        max_dominance_excess: excess,
    }
}

/// Runs experiments on a rayon pool, optionally capped at a worker count.
#[derive(Debug, Clone, Copy, Default)]
pub struct Simulator {
    threads: Option<usize>,
}

impl Simulator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Caps the worker count; `0` means the rayon default.
    pub fn with_threads(threads: usize) -> Self {
        Simulator {
            threads: (threads > 0).then_some(threads),
        }
    }

    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R> {
        match self.threads {
            None => Ok(f()),
            Some(k) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build()
                    .map_err(|e| Error::input(format!("cannot build thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }

    /// Evaluates every setup on the same `n_sims` paths.
    pub fn compare_policies(
        &self,
        setups: &[PolicySetup],
        instance: &Instance,
        n_sims: usize,
        base_seed: u64,
    ) -> Result<Vec<RegretEstimate>> {
        if setups.is_empty() {
            return Err(Error::input("at least one policy is required"));
        }
        if n_sims == 0 {
            return Err(Error::input("n_sims must be at least 1"));
        }
        instance.validate()?;
        let schedules = setups
            .iter()
            .map(|s| s.schedule_for(instance.horizon))
            .collect::<Result<Vec<_>>>()?;

        let outcomes: Vec<PathOutcome> = self.install(|| {
            (0..n_sims)
                .into_par_iter()
                .map(|i| {
                    let path_seed = split(base_seed, i as u64);
                    let path = sample_path(instance, path_seed);
                    let hindsight = hindsight_value(instance, &path)?;
                    let decision_seed = split(path_seed, 1);
                    let runs = setups
                        .iter()
                        .zip(&schedules)
                        .map(|(setup, schedule)| {
                            let run = run_policy(
                                &setup.policy,
                                instance,
                                schedule.as_ref(),
                                &path,
                                decision_seed,
                            )?;
                            Ok(Sample {
                                revenue: run.revenue,
                                lp_solves: run.lp_solves,
                                seconds: run.wall_time.as_secs_f64(),
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(PathOutcome { hindsight, runs })
                })
                .collect::<Result<Vec<_>>>()
        })??;

        let hindsight: Vec<f64> = outcomes.iter().map(|o| o.hindsight).collect();
        Ok((0..setups.len())
            .map(|k| {
                let runs: Vec<Sample> = outcomes.iter().map(|o| o.runs[k]).collect();
                summarize(&hindsight, &runs)
            })
            .collect())
    }

    pub fn estimate_regret(
        &self,
        setup: &PolicySetup,
        instance: &Instance,
        n_sims: usize,
        base_seed: u64,
    ) -> Result<RegretEstimate> {
        self.compare_policies(std::slice::from_ref(setup), instance, n_sims, base_seed)
            .map(|mut v| v.remove(0))
    }
}

/// [`Simulator::estimate_regret`] on the default pool.
pub fn estimate_regret(
    setup: &PolicySetup,
    instance: &Instance,
    n_sims: usize,
    base_seed: u64,
) -> Result<RegretEstimate> {
    Simulator::new().estimate_regret(setup, instance, n_sims, base_seed)
}

/// [`Simulator::compare_policies`] on the default pool.
pub fn compare_policies(
    setups: &[PolicySetup],
    instance: &Instance,
    n_sims: usize,
    base_seed: u64,
) -> Result<Vec<RegretEstimate>> {
    Simulator::new().compare_policies(setups, instance, n_sims, base_seed)
}
