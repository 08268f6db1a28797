//! Resolving schedules: the periods at which a policy re-solves the fluid LP.
//!
//! Every generator evaluates its real-valued formula in double precision, rounds
//! up last, then sorts and merges duplicates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which family a schedule was generated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScheduleKind {
    LearningApprox,
    FiniteM,
    KnownProb,
    KnownProbFiniteM,
    Periodic,
    MidpointKp,
    MidpointFull,
    Custom,
}

/// Strictly increasing set of resolving periods within `[1, T]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Schedule {
    times: Vec<usize>,
    kind: ScheduleKind,
    horizon: usize,
}

impl Schedule {
    fn build(mut times: Vec<usize>, kind: ScheduleKind, horizon: usize) -> Self {
        times.retain(|&t| (1..=horizon).contains(&t));
        times.sort_unstable();
        times.dedup();
        Schedule {
            times,
            kind,
            horizon,
        }
    }

    /// A user-supplied schedule; every period must lie in `[1, horizon]`.
    pub fn custom(times: impl IntoIterator<Item = usize>, horizon: usize) -> Result<Self> {
        let times: Vec<usize> = times.into_iter().collect();
        if let Some(&bad) = times.iter().find(|&&t| t == 0 || t > horizon) {
            return Err(Error::input(format!("period {bad} outside [1, {horizon}]")));
        }
        Ok(Self::build(times, ScheduleKind::Custom, horizon))
    }

    pub fn times(&self) -> &[usize] {
        &self.times
    }

    pub fn kind(&self) -> ScheduleKind {
        self.kind
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn contains(&self, t: usize) -> bool {
        self.times.binary_search(&t).is_ok()
    }

    /// Ascending comma-separated periods, e.g. `1,4,7,10`.
    pub fn to_csv_field(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.times.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Ceiling that snaps values within `1e-9` of an integer onto that integer first.
pub(crate) fn guarded_ceil(x: f64) -> usize {
    let r = x.round();
    let v = if (x - r).abs() < 1e-9 { r } else { x.ceil() };
    v.max(0.0) as usize
}

/// Floor with the same integer snapping as [`guarded_ceil`].
pub(crate) fn guarded_floor(x: f64) -> usize {
    let r = x.round();
    let v = if (x - r).abs() < 1e-9 { r } else { x.floor() };
    v.max(0.0) as usize
}

fn check_horizon(t: usize, min: usize) -> Result<()> {
    if t < min {
        return Err(Error::input(format!("horizon {t} below minimum {min}")));
    }
    Ok(())
}

fn check_open(name: &str, v: f64, lo: f64, hi: f64) -> Result<()> {
    if !(v > lo && v < hi) {
        return Err(Error::input(format!("{name} = {v} must lie in ({lo}, {hi})")));
    }
    Ok(())
}

/// `ceil(log_{1/rate}(log_3 T))`, the number of geometric levels in a log-log schedule.
fn loglog_levels(t: usize, rate: f64) -> u32 {
    let l3 = (t as f64).ln() / 3f64.ln();
    let k = l3.ln() / (1.0 / rate).ln();
    k.ceil().max(0.0) as u32
}

/// `ceil(T^{e})`.
fn ceil_pow(t: usize, exponent: f64) -> usize {
    guarded_ceil((t as f64).powf(exponent))
}

/// `ceil(T - T^{e})`.
fn ceil_tail(t: usize, exponent: f64) -> usize {
    let tf = t as f64;
    guarded_ceil(tf - tf.powf(exponent))
}

fn half(t: usize) -> usize {
    t.div_ceil(2)
}

/// Learning points `ceil(T^{alpha^k})` for `k = 1..K_L`, the midpoint `ceil(T/2)`,
/// and approximation points `ceil(T - T^{beta^k})` for `k = 1..K_A`.
pub fn learning_approx_schedule(t: usize, alpha: f64, beta: f64) -> Result<Schedule> {
    check_horizon(t, 9)?;
    check_open("alpha", alpha, 0.0, 1.0)?;
    check_open("beta", beta, 0.5, 1.0)?;
    let kl = loglog_levels(t, alpha);
    let ka = loglog_levels(t, beta);
    let mut times: Vec<usize> = (1..=kl).map(|k| ceil_pow(t, alpha.powi(k as i32))).collect();
    times.push(half(t));
    times.extend((1..=ka).map(|k| ceil_tail(t, beta.powi(k as i32))));
    Ok(Schedule::build(times, ScheduleKind::LearningApprox, t))
}

/// At most `M` resolves: `ceil(T^{(1/2+eps) beta^{M-2}})`, `ceil(T/2)` and
/// `ceil(T - T^{beta^k})` for `k = 1..M-2`.
pub fn finite_schedule(t: usize, m: usize, beta: f64, epsilon: f64) -> Result<Schedule> {
    check_horizon(t, 9)?;
    if m < 2 {
        return Err(Error::input(format!("M = {m} must be at least 2")));
    }
    check_open("beta", beta, 0.5, 1.0)?;
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::input(format!("epsilon = {epsilon} must be positive")));
    }
    let first_exp = (0.5 + epsilon) * beta.powi(m as i32 - 2);
    let mut times = vec![ceil_pow(t, first_exp), half(t)];
    times.extend((1..=m - 2).map(|k| ceil_tail(t, beta.powi(k as i32))));
    Ok(Schedule::build(times, ScheduleKind::FiniteM, t))
}

/// Known-probability schedule: period 1 plus the approximation points.
pub fn known_prob_schedule(t: usize, beta: f64) -> Result<Schedule> {
    check_horizon(t, 9)?;
    check_open("beta", beta, 0.5, 1.0)?;
    let ka = loglog_levels(t, beta);
    let mut times = vec![1];
    times.extend((1..=ka).map(|k| ceil_tail(t, beta.powi(k as i32))));
    Ok(Schedule::build(times, ScheduleKind::KnownProb, t))
}

/// Known-probability schedule capped at `M` resolves: period 1 plus the
/// first `M-1` approximation points.
pub fn known_prob_finite_schedule(t: usize, m: usize, beta: f64) -> Result<Schedule> {
    check_horizon(t, 9)?;
    if m < 1 {
        return Err(Error::input("M must be at least 1"));
    }
    check_open("beta", beta, 0.5, 1.0)?;
    let mut times = vec![1];
    times.extend((1..m).map(|k| ceil_tail(t, beta.powi(k as i32))));
    Ok(Schedule::build(times, ScheduleKind::KnownProbFiniteM, t))
}

/// `{1, 1+omega, ..., 1+K omega}` with `K = floor((T-1)/omega)`.
pub fn periodic_schedule(t: usize, omega: usize) -> Result<Schedule> {
    check_horizon(t, 1)?;
    if omega < 1 {
        return Err(Error::input("omega must be at least 1"));
    }
    let times = (0..=(t - 1) / omega).map(|k| 1 + k * omega).collect();
    Ok(Schedule::build(times, ScheduleKind::Periodic, t))
}

/// Midpoint schedule `{1} U {ceil(T - T/2^k)}` for `k = 1..ceil(log2 T)`;
/// `with_learning` adds `ceil(T/2^k)` for `k = 2..ceil(log2 T)`.
pub fn midpoint_schedule(t: usize, with_learning: bool) -> Result<Schedule> {
    check_horizon(t, 4)?;
    let km = usize::BITS - (t - 1).leading_zeros();
    let tf = t as f64;
    let mut times = vec![1];
    times.extend((1..=km).map(|k| guarded_ceil(tf - tf / 2f64.powi(k as i32))));
    let kind = if with_learning {
        times.extend((2..=km).map(|k| guarded_ceil(tf / 2f64.powi(k as i32))));
        ScheduleKind::MidpointFull
    } else {
        ScheduleKind::MidpointKp
    };
    Ok(Schedule::build(times, kind, t))
}

/// BUF's budget-reset periods `{T - ceil(T/2^k) : k = 1..ceil(log2 T)}`.
pub fn halving_checkpoints(t: usize) -> Vec<usize> {
    if t < 2 {
        return Vec::new();
    }
    let km = usize::BITS - (t - 1).leading_zeros();
    let mut out: Vec<usize> = (1..=km).map(|k| t - t.div_ceil(1 << k)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// A schedule request, resolvable against a horizon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScheduleSpec {
    LearningApprox { alpha: f64, beta: f64 },
    Finite { m: usize, beta: f64, epsilon: f64 },
    KnownProb { beta: f64 },
    KpFinite { m: usize, beta: f64 },
    Periodic { omega: usize },
    Midpoint { with_learning: bool },
}

impl ScheduleSpec {
    pub fn build(&self, horizon: usize) -> Result<Schedule> {
        match *self {
            ScheduleSpec::LearningApprox { alpha, beta } => {
                learning_approx_schedule(horizon, alpha, beta)
            }
            ScheduleSpec::Finite { m, beta, epsilon } => finite_schedule(horizon, m, beta, epsilon),
            ScheduleSpec::KnownProb { beta } => known_prob_schedule(horizon, beta),
            ScheduleSpec::KpFinite { m, beta } => known_prob_finite_schedule(horizon, m, beta),
            ScheduleSpec::Periodic { omega } => periodic_schedule(horizon, omega),
            ScheduleSpec::Midpoint { with_learning } => midpoint_schedule(horizon, with_learning),
        }
    }

    /// Short label with parameters, e.g. `learning_approx(alpha=0.7,beta=0.7)`.
    pub fn label(&self) -> String {
        match *self {
            ScheduleSpec::LearningApprox { alpha, beta } => {
                format!("learning_approx(alpha={alpha},beta={beta})")
            }
            ScheduleSpec::Finite { m, beta, epsilon } => {
                format!("finite(M={m},beta={beta},epsilon={epsilon})")
            }
            ScheduleSpec::KnownProb { beta } => format!("known_prob(beta={beta})"),
            ScheduleSpec::KpFinite { m, beta } => format!("kp_finite(M={m},beta={beta})"),
            ScheduleSpec::Periodic { omega } => format!("periodic(omega={omega})"),
            ScheduleSpec::Midpoint { with_learning } => {
                format!("midpoint(with_learning={with_learning})")
            }
        }
    }
}
