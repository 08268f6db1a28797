//! Experiment configs, named presets and CSV output for the benchmark front end.

use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::policy::{AcceptRule, PolicyKind, PolicySpec};
use crate::rng::stream;
use crate::schedule::ScheduleSpec;
use crate::sim::{PolicySetup, RegretEstimate, Simulator};

/// CSV header, in column order.
pub const CSV_COLUMNS: [&str; 14] = [
    "policy",
    "T",
    "sweep_param",
    "sweep_value",
    "mean_regret",
    "std_error",
    "mean_revenue",
    "mean_hindsight",
    "mean_lp_solves",
    "n_sims",
    "wall_time_s",
    "schedule",
    "base_seed",
    "instance",
];

/// Base seed used by every preset.
pub const DEFAULT_SEED: u64 = 20_240_601;
const FIG6_GENERATOR_SEED: u64 = 50;

// ---------------------------------------------------------------------------
// Instances

/// Ten resources, two customer types, with the budget placed on a degenerate vertex.
pub fn multi_10x2(horizon: usize) -> Instance {
    let columns = [
        [0.226, 0.146],
        [0.957, 0.916],
        [0.005, 0.876],
        [0.457, 0.790],
        [0.285, 0.960],
        [0.572, 0.736],
        [0.701, 0.206],
        [0.093, 0.642],
        [0.903, 0.923],
        [0.743, 0.789],
    ];
    Instance {
        rewards: vec![0.689, 0.710],
        consumption: columns.iter().map(|row| row.to_vec()).collect(),
        budget_rate: vec![
            0.128, 0.805, 0.770, 0.695, 0.844, 0.647, 0.181, 0.564, 0.812, 0.694,
        ],
        horizon,
        probabilities: vec![0.121, 0.879],
    }
}

/// One resource, two unit-consumption types with rewards 2 and 1 arriving with
/// equal probability. Degenerate at `rho = 0.5`.
pub fn single_resource(rho: f64, horizon: usize) -> Result<Instance> {
    Instance::new(
        vec![2.0, 1.0],
        vec![vec![1.0, 1.0]],
        vec![rho],
        horizon,
        vec![0.5, 0.5],
    )
}

/// Random `m x n` instance: `A` and `r` uniform on `[0, 1]`, `p` a normalized
/// uniform draw, and `rho = xi * A p` for a uniform `xi`, so the fluid optimum at
/// the start accepts the same fraction of every type and every resource binds.
pub fn random_instance(m: usize, n: usize, seed: u64, horizon: usize) -> Result<Instance> {
    if m == 0 || n == 0 {
        return Err(Error::input("random instance needs m, n >= 1"));
    }
    let mut rng = stream(seed);
    let consumption: Vec<Vec<f64>> = (0..m)
        .map(|_| (0..n).map(|_| rng.random::<f64>()).collect())
        .collect();
    let rewards: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    let raw: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    let total: f64 = raw.iter().sum();
    let mut probabilities: Vec<f64> = raw.iter().map(|w| w / total).collect();
    // Push rounding into the largest entry so the sum is 1 to the last bit possible.
    let drift = 1.0 - probabilities.iter().sum::<f64>();
    let k = (0..n)
        .max_by(|&a, &b| probabilities[a].total_cmp(&probabilities[b]))
        .unwrap_or(0);
    probabilities[k] += drift;
    let xi: f64 = rng.random();
    let budget_rate = consumption
        .iter()
        .map(|row| xi * row.iter().zip(&probabilities).map(|(a, p)| a * p).sum::<f64>())
        .collect();
    Instance::new(rewards, consumption, budget_rate, horizon, probabilities)
}

/// Looks up a named instance: `multi_10x2`, `single_resource`, `single_resource(RHO)`
/// or `fig6_10x50`. The horizon is a placeholder that experiments override.
pub fn instance_preset(name: &str) -> Result<Instance> {
    const HORIZON: usize = 1000;
    let name = name.trim();
    if name == "multi_10x2" {
        return Ok(multi_10x2(HORIZON));
    }
    if name == "fig6_10x50" {
        return random_instance(10, 50, FIG6_GENERATOR_SEED, HORIZON);
    }
    if name == "single_resource" {
        return single_resource(0.5, HORIZON);
    }
    if let Some(arg) = name
        .strip_prefix("single_resource(")
        .and_then(|s| s.strip_suffix(')'))
    {
        let rho: f64 = arg
            .trim()
            .parse()
            .map_err(|_| Error::config(format!("bad rho in instance preset `{name}`")))?;
        return single_resource(rho, HORIZON).map_err(|e| Error::config(e.to_string()));
    }
    Err(Error::config(format!("unknown instance preset `{name}`")))
}

/// An instance given by preset name or inline data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceRef {
    Preset(String),
    Inline(Instance),
}

impl InstanceRef {
    pub fn resolve(&self) -> Result<Instance> {
        match self {
            InstanceRef::Preset(name) => instance_preset(name),
            InstanceRef::Inline(inst) => {
                inst.validate().map_err(|e| Error::config(e.to_string()))?;
                Ok(inst.clone())
            }
        }
    }

    fn label(&self) -> String {
        match self {
            InstanceRef::Preset(name) => name.clone(),
            InstanceRef::Inline(_) => "inline".into(),
        }
    }
}

// ---------------------------------------------------------------------------
// Policies and schedules

/// Builds a schedule spec from flat parameters, filling defaults
/// `alpha = beta = 0.7` and `epsilon = 0.01`.
pub fn schedule_spec(
    kind: &str,
    alpha: Option<f64>,
    beta: Option<f64>,
    epsilon: Option<f64>,
    m: Option<usize>,
    omega: Option<usize>,
) -> Result<ScheduleSpec> {
    let alpha = alpha.unwrap_or(0.7);
    let beta = beta.unwrap_or(0.7);
    let epsilon = epsilon.unwrap_or(0.01);
    let need_m = || m.ok_or_else(|| Error::config(format!("schedule `{kind}` needs M")));
    Ok(match kind {
        "learning_approx" => ScheduleSpec::LearningApprox { alpha, beta },
        "finite" => ScheduleSpec::Finite {
            m: need_m()?,
            beta,
            epsilon,
        },
        "known_prob" => ScheduleSpec::KnownProb { beta },
        "kp_finite" => ScheduleSpec::KpFinite { m: need_m()?, beta },
        "periodic" => ScheduleSpec::Periodic {
            omega: omega.ok_or_else(|| Error::config("schedule `periodic` needs omega"))?,
        },
        "midpoint" => ScheduleSpec::Midpoint {
            with_learning: false,
        },
        "midpoint_learning" => ScheduleSpec::Midpoint {
            with_learning: true,
        },
        other => return Err(Error::config(format!("unknown schedule kind `{other}`"))),
    })
}

/// Prints a schedule as ascending comma-separated periods.
pub fn emit_schedule(spec: &ScheduleSpec, horizon: usize) -> Result<String> {
    Ok(spec.build(horizon)?.to_string())
}

/// A policy as written in a config file.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicyConfig {
    pub name: String,
    /// Schedule kind for `air` / `air-kp`; defaults to `learning_approx` / `known_prob`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schedule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(default, rename = "M", skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    /// SFA/DLD: accept whenever the request fits, ignoring the price signal.
    #[serde(default, alias = "sfa_literal_accept", skip_serializing_if = "is_false")]
    pub literal_accept: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl PolicyConfig {
    pub fn named(name: &str) -> Self {
        PolicyConfig {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn setup(&self) -> Result<PolicySetup> {
        let kind: PolicyKind = self.name.parse()?;
        let policy = PolicySpec {
            kind,
            accept_rule: if self.literal_accept {
                AcceptRule::Literal
            } else {
                AcceptRule::Gated
            },
        };
        let schedule = if kind.needs_schedule() {
            let default = if kind == PolicyKind::Air {
                "learning_approx"
            } else {
                "known_prob"
            };
            Some(schedule_spec(
                self.schedule.as_deref().unwrap_or(default),
                self.alpha,
                self.beta,
                self.epsilon,
                self.m,
                self.omega,
            )?)
        } else {
            None
        };
        Ok(PolicySetup { policy, schedule })
    }

    fn set(&mut self, param: SweepParam, value: f64) {
        match param {
            SweepParam::Rho => {}
            SweepParam::Alpha => self.alpha = Some(value),
            SweepParam::Beta => self.beta = Some(value),
            SweepParam::Epsilon => self.epsilon = Some(value),
            SweepParam::M => self.m = Some(value as usize),
            SweepParam::Omega => self.omega = Some(value as usize),
        }
    }
}

/// Parameters a sweep can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepParam {
    /// Sets every component of the budget rate.
    #[serde(rename = "rho")]
    Rho,
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "beta")]
    Beta,
    #[serde(rename = "epsilon")]
    Epsilon,
    #[serde(rename = "M")]
    M,
    #[serde(rename = "omega")]
    Omega,
}

impl SweepParam {
    fn name(self) -> &'static str {
        match self {
            SweepParam::Rho => "rho",
            SweepParam::Alpha => "alpha",
            SweepParam::Beta => "beta",
            SweepParam::Epsilon => "epsilon",
            SweepParam::M => "M",
            SweepParam::Omega => "omega",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub param: SweepParam,
    pub values: Vec<f64>,
}

/// A full experiment: instance, policies, horizons, Monte-Carlo size and output.
///
/// `n_sims = 0` skips simulation and reports only the schedules.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub instance: InstanceRef,
    pub policies: Vec<PolicyConfig>,
    pub horizons: Vec<usize>,
    pub n_sims: usize,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Sweep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }

    /// Checks names, parameters and horizons without running anything.
    pub fn validate(&self) -> Result<()> {
        if self.policies.is_empty() {
            return Err(Error::config("experiment lists no policies"));
        }
        if self.horizons.is_empty() {
            return Err(Error::config("experiment lists no horizons"));
        }
        let base = self.instance.resolve()?;
        for point in self.sweep_points() {
            let inst = self.instance_at(&base, point)?;
            for cfg in self.policies_at(point) {
                let setup = cfg.setup()?;
                for &t in &self.horizons {
                    if t == 0 {
                        return Err(Error::config("horizons must be positive"));
                    }
                    inst.with_horizon(t)
                        .validate()
                        .map_err(|e| Error::config(e.to_string()))?;
                    setup
                        .schedule_for(t)
                        .map_err(|e| Error::config(format!("{}: {e}", cfg.name)))?;
                }
            }
        }
        Ok(())
    }

    fn sweep_points(&self) -> Vec<Option<(SweepParam, f64)>> {
        match &self.sweep {
            Some(s) => s.values.iter().map(|&v| Some((s.param, v))).collect(),
            None => vec![None],
        }
    }

    fn instance_at(&self, base: &Instance, point: Option<(SweepParam, f64)>) -> Result<Instance> {
        let mut inst = base.clone();
        if let Some((SweepParam::Rho, rho)) = point {
            inst.budget_rate.iter_mut().for_each(|b| *b = rho);
            inst.validate().map_err(|e| Error::config(e.to_string()))?;
        }
        Ok(inst)
    }

    fn policies_at(&self, point: Option<(SweepParam, f64)>) -> Vec<PolicyConfig> {
        let mut out = self.policies.clone();
        if let Some((param, value)) = point {
            out.iter_mut().for_each(|p| p.set(param, value));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Running

/// One result line: a policy at one horizon and sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub policy: String,
    pub horizon: usize,
    pub sweep: Option<(SweepParam, f64)>,
    /// `None` when the experiment ran with `n_sims = 0`.
    pub estimate: Option<RegretEstimate>,
    pub schedule: Option<Vec<usize>>,
    pub base_seed: u64,
    pub instance: String,
}

/// Formats a number in plain decimal notation with at most 10 significant digits.
pub fn format_number(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    let s = if mag > 9 {
        let scale = 10f64.powi(mag - 9);
        format!("{:.0}", (x / scale).round() * scale)
    } else {
        format!("{:.*}", (9 - mag).min(20) as usize, x)
    };
    if s.contains('.') {
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.into()
        }
    } else {
        s
    }
}

impl ExperimentRow {
    pub fn record(&self) -> Vec<String> {
        let num = |f: fn(&RegretEstimate) -> f64| {
            self.estimate.as_ref().map(|e| format_number(f(e))).unwrap_or_default()
        };
        let lp_solves = match (&self.estimate, &self.schedule) {
            (Some(e), _) => format_number(e.mean_lp_solves),
            (None, Some(s)) => s.len().to_string(),
            (None, None) => String::new(),
        };
        vec![
            self.policy.clone(),
            self.horizon.to_string(),
            self.sweep.map(|(p, _)| p.name().to_string()).unwrap_or_default(),
            self.sweep.map(|(_, v)| format_number(v)).unwrap_or_default(),
            num(|e| e.mean_regret),
            num(|e| e.std_error),
            num(|e| e.mean_revenue),
            num(|e| e.mean_hindsight),
            lp_solves,
            self.estimate.as_ref().map(|e| e.n_sims).unwrap_or(0).to_string(),
            num(|e| e.total_wall_time),
            self.schedule
                .as_ref()
                .map(|s| s.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","))
                .unwrap_or_default(),
            self.base_seed.to_string(),
            self.instance.clone(),
        ]
    }
}

/// Writes rows with the header to any writer.
pub fn write_csv<W: Write>(rows: &[ExperimentRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

/// Runs every (sweep point, horizon) cell with all policies on common paths.
/// Rows come out sweep-major, then by horizon, then in policy order. If the config
/// names an output path the CSV is written there; the file is created before any
/// simulation starts so an unwritable path fails fast.
pub fn run_experiment(config: &ExperimentConfig, sim: &Simulator) -> Result<Vec<ExperimentRow>> {
    config.validate()?;
    let file = match &config.output_path {
        Some(path) => Some(File::create(path).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?),
        None => None,
    };

    let base = config.instance.resolve()?;
    let mut rows = Vec::new();
    for point in config.sweep_points() {
        let inst = config.instance_at(&base, point)?;
        let setups = config
            .policies_at(point)
            .iter()
            .map(PolicyConfig::setup)
            .collect::<Result<Vec<_>>>()?;
        for &t in &config.horizons {
            let inst = inst.with_horizon(t);
            let estimates = if config.n_sims > 0 {
                sim.compare_policies(&setups, &inst, config.n_sims, config.base_seed)?
                    .into_iter()
                    .map(Some)
                    .collect()
            } else {
                vec![None; setups.len()]
            };
            for (setup, estimate) in setups.iter().zip(estimates) {
                rows.push(ExperimentRow {
                    policy: setup.label(),
                    horizon: t,
                    sweep: point,
                    estimate,
                    schedule: setup.schedule_for(t)?.map(|s| s.times().to_vec()),
                    base_seed: config.base_seed,
                    instance: config.instance.label(),
                });
            }
        }
    }

    if let (Some(file), Some(path)) = (file, &config.output_path) {
        write_csv(&rows, std::io::BufWriter::new(file)).map_err(|e| match e {
            Error::Csv(c) if c.is_io_error() => Error::Io {
                path: path.clone(),
                source: std::io::Error::other(c.to_string()),
            },
            other => other,
        })?;
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Presets

/// Experiment presets with a one-line note on what each runs.
pub const EXPERIMENT_PRESETS: [(&str, &str); 10] = [
    ("table4", "resolving schedules at alpha = beta = 0.7 for 11 horizons from 2500 to 300000; no simulation"),
    ("table3_desk", "AIR, AFR, ADA, SFA, DLD, BUF on multi_10x2 at T = 2500 and 5000, 200 paths (--full: T up to 20000)"),
    ("table3_trend", "AIR vs SFA on multi_10x2 for T from 2500 to 20000, 200 paths"),
    ("fig5_rho_sweep", "six policies on single_resource over rho = 0.1..0.8 at T = 10000 (--full: T = 50000, 2000 paths)"),
    ("fig6_10x50", "AIR (alpha = beta = 0.9) vs SFA, DLD, BUF on a seeded random 10x50 instance"),
    ("fig7_finite", "AIR with three resolves (finite, M = 3, beta = 0.7) vs SFA, DLD, BUF on multi_10x2"),
    ("fig8_known_prob", "AIR-KP (beta = 5/6) vs ADA-KP on single_resource over rho at T = 10000 (--full: 50000)"),
    ("table5_alpha", "AIR on multi_10x2 at T = 30000, alpha from 0.15 to 0.95, beta = 0.7"),
    ("table5_beta", "AIR on multi_10x2 at T = 30000, beta from 0.55 to 0.95, alpha = 0.7"),
    ("table4_kp", "known-probability schedules at beta = 5/6; T = 50000 has 14 resolves"),
];

/// Instance presets with short descriptions.
pub const INSTANCE_PRESETS: [(&str, &str); 3] = [
    ("multi_10x2", "m = 10, n = 2 degenerate instance with the A, rho, p, r printed for the multi-resource experiments"),
    ("single_resource(RHO)", "m = 1, n = 2, r = (2, 1), A = [[1, 1]], p = (0.5, 0.5); degenerate at RHO = 0.5 (default)"),
    ("fig6_10x50", "seeded random m = 10, n = 50 instance near degeneracy; generator seed 50"),
];

fn rho_grid() -> Vec<f64> {
    (1..=8).map(|k| k as f64 / 10.0).collect()
}

fn policies(names: &[&str]) -> Vec<PolicyConfig> {
    names.iter().map(|n| PolicyConfig::named(n)).collect()
}

/// Builds a named experiment. `full` switches desk-scale presets to the original
/// horizons and path counts.
pub fn preset(name: &str, full: bool) -> Result<ExperimentConfig> {
    let six = ["air", "afr", "ada", "sfa", "dld", "buf"];
    let base = |instance: &str, pols: Vec<PolicyConfig>, horizons: Vec<usize>, n_sims| {
        ExperimentConfig {
            instance: InstanceRef::Preset(instance.into()),
            policies: pols,
            horizons,
            n_sims,
            base_seed: DEFAULT_SEED,
            sweep: None,
            output_path: None,
        }
    };
    Ok(match name {
        "table4" => base(
            "multi_10x2",
            policies(&["air"]),
            vec![
                2500, 5000, 7500, 10000, 12500, 15000, 17500, 20000, 100_000, 200_000, 300_000,
            ],
            0,
        ),
        "table4_kp" => {
            let mut kp = PolicyConfig::named("air-kp");
            kp.beta = Some(5.0 / 6.0);
            base(
                "single_resource",
                vec![kp],
                vec![2500, 10000, 20000, 50000],
                0,
            )
        }
        "table3_desk" => {
            let horizons = if full {
                (1..=8).map(|k| 2500 * k).collect()
            } else {
                vec![2500, 5000]
            };
            base("multi_10x2", policies(&six), horizons, 200)
        }
        "table3_trend" => base(
            "multi_10x2",
            policies(&["air", "sfa"]),
            vec![2500, 5000, 10000, 20000],
            200,
        ),
        "fig5_rho_sweep" => {
            let (t, sims) = if full { (50000, 2000) } else { (10000, 200) };
            let mut cfg = base("single_resource", policies(&six), vec![t], sims);
            cfg.sweep = Some(Sweep {
                param: SweepParam::Rho,
                values: rho_grid(),
            });
            cfg
        }
        "fig6_10x50" => {
            let mut air = PolicyConfig::named("air");
            air.alpha = Some(0.9);
            air.beta = Some(0.9);
            let mut pols = vec![air];
            pols.extend(policies(&["sfa", "dld", "buf"]));
            let horizons = if full {
                vec![1000, 5000, 10000, 15000, 20000, 25000, 30000]
            } else {
                vec![1000, 5000, 10000]
            };
            base("fig6_10x50", pols, horizons, 200)
        }
        "fig7_finite" => {
            let mut air3 = PolicyConfig::named("air");
            air3.schedule = Some("finite".into());
            air3.m = Some(3);
            air3.beta = Some(0.7);
            let mut pols = vec![air3];
            pols.extend(policies(&["sfa", "dld", "buf"]));
            let (horizons, sims) = if full {
                ((1..=15).map(|k| 2000 * k).collect(), 2000)
            } else {
                (vec![2500, 5000, 10000], 500)
            };
            base("multi_10x2", pols, horizons, sims)
        }
        "fig8_known_prob" => {
            let mut kp = PolicyConfig::named("air-kp");
            kp.beta = Some(5.0 / 6.0);
            let (t, sims) = if full { (50000, 2000) } else { (10000, 200) };
            let mut cfg = base(
                "single_resource",
                vec![kp, PolicyConfig::named("ada-kp")],
                vec![t],
                sims,
            );
            cfg.sweep = Some(Sweep {
                param: SweepParam::Rho,
                values: rho_grid(),
            });
            cfg
        }
        "table5_alpha" | "table5_beta" => {
            let (param, values) = if name == "table5_alpha" {
                (SweepParam::Alpha, vec![0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95])
            } else {
                (SweepParam::Beta, vec![0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95])
            };
            let mut cfg = base("multi_10x2", policies(&["air"]), vec![30000], 200);
            cfg.sweep = Some(Sweep { param, values });
            cfg
        }
        other => return Err(Error::config(format!("unknown preset `{other}`"))),
    })
}

/// Human-readable list of experiment and instance presets.
pub fn list_presets() -> String {
    let mut out = String::from("experiments:\n");
    for (name, note) in EXPERIMENT_PRESETS {
        out.push_str(&format!("  {name:<16} {note}\n"));
    }
    out.push_str("instances:\n");
    for (name, note) in INSTANCE_PRESETS {
        out.push_str(&format!("  {name:<22} {note}\n"));
    }
    out
}
