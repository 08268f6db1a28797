use olp::bench::{multi_10x2, random_instance, single_resource};
use olp::schedule::{known_prob_schedule, learning_approx_schedule};
use olp::sim::run_with;
use olp::{
    fluid_value, sample_path, AcceptRule, Instance, PolicyKind, PolicySpec, PolicyState,
    SamplePath, Schedule,
};

fn schedule_for(kind: PolicyKind, inst: &Instance) -> Option<Schedule> {
    match kind {
        PolicyKind::Air => Some(learning_approx_schedule(inst.horizon, 0.7, 0.7).unwrap()),
        PolicyKind::AirKp => Some(known_prob_schedule(inst.horizon, 0.7).unwrap()),
        _ => None,
    }
}

fn all_specs() -> Vec<PolicySpec> {
    let mut out: Vec<PolicySpec> = PolicyKind::ALL.into_iter().map(PolicySpec::from).collect();
    for kind in [PolicyKind::Sfa, PolicyKind::Dld] {
        out.push(PolicySpec {
            kind,
            accept_rule: AcceptRule::Literal,
        });
    }
    out
}

#[test]
fn never_oversells() {
    let instances = [
        single_resource(0.5, 300).unwrap(),
        single_resource(0.1, 300).unwrap(),
        multi_10x2(300),
        random_instance(3, 6, 4, 300).unwrap(),
    ];
    for inst in &instances {
        for spec in all_specs() {
            let schedule = schedule_for(spec.kind, inst);
            for seed in 0..5 {
                let path = sample_path(inst, seed);
                let mut coin = 0.0;
                let mut st = PolicyState::new(inst);
                for &j in &path.arrivals {
                    let before = st.b.clone();
                    coin = (coin + 0.618_033_988_749_895) % 1.0;
                    let dec = spec.step(inst, schedule.as_ref(), &mut st, j, coin).unwrap();
                    if dec.accept {
                        assert!(inst.fits(j, &before), "{} accepted a request that does not fit", spec.label());
                    }
                    assert!(st.b.iter().all(|&b| b >= 0.0), "{}: b = {:?}", spec.label(), st.b);
                    assert!((0.0..=1.0).contains(&dec.acceptance_probability));
                    assert_eq!(st.counts.iter().sum::<u64>() as usize, st.t - 1);
                }
                let used = inst.apply(&st.accepted.iter().map(|&a| a as f64).collect::<Vec<_>>());
                for (u, cap) in used.iter().zip(inst.initial_inventory()) {
                    assert!(*u <= cap + 1e-9);
                }
            }
        }
    }
}

fn trace(spec: PolicySpec, inst: &Instance, path: &SamplePath, seed: u64) -> Vec<(bool, bool)> {
    let schedule = schedule_for(spec.kind, inst);
    run_with(inst, path, seed, true, |st, j, coin| spec.step(inst, schedule.as_ref(), st, j, coin))
        .unwrap()
        .decision_trace
        .unwrap()
        .iter()
        .map(|e| (e.accept, e.resolved))
        .collect()
}

#[test]
fn decisions_do_not_depend_on_future_arrivals() {
    let inst = multi_10x2(400);
    let a = sample_path(&inst, 1);
    let b = sample_path(&inst, 2);
    let cut = 173;
    let mut spliced = a.arrivals[..cut].to_vec();
    spliced.extend_from_slice(&b.arrivals[cut..]);
    let spliced = SamplePath::from_arrivals(spliced, inst.n(), 0).unwrap();
    for spec in all_specs() {
        let full = trace(spec, &inst, &a, 9);
        let other = trace(spec, &inst, &spliced, 9);
        assert_eq!(full[..cut], other[..cut], "{}", spec.label());
        assert_eq!(full, trace(spec, &inst, &a, 9));
    }
}

#[test]
fn air_solves_once_per_scheduled_period() {
    for inst in [multi_10x2(2500), single_resource(0.5, 2500).unwrap()] {
        for kind in [PolicyKind::Air, PolicyKind::AirKp] {
            let schedule = schedule_for(kind, &inst).unwrap();
            let spec = PolicySpec::from(kind);
            let path = sample_path(&inst, 3);
            let run = olp::run_policy(&spec, &inst, Some(&schedule), &path, 0).unwrap();
            assert_eq!(run.lp_solves, schedule.len());
        }
    }
}

#[test]
fn air_plan_stays_nonnegative() {
    let inst = multi_10x2(2000);
    let schedule = learning_approx_schedule(2000, 0.7, 0.7).unwrap();
    for seed in 0..10 {
        let path = sample_path(&inst, seed);
        let mut st = PolicyState::new(&inst);
        for &j in &path.arrivals {
            olp::policy::air_step(&inst, &schedule, &mut st, j).unwrap();
            assert!(st.u.iter().all(|&u| u >= 0.0), "u = {:?}", st.u);
        }
    }
}

/// Demand estimates only move by -1 on matching arrivals between resolves.
#[test]
fn demand_decrements_between_resolves() {
    let inst = single_resource(0.5, 500).unwrap();
    let schedule = learning_approx_schedule(500, 0.7, 0.7).unwrap();
    let path = sample_path(&inst, 8);
    let mut st = PolicyState::new(&inst);
    for &j in &path.arrivals {
        let before = st.d.clone();
        let dec = olp::policy::air_step(&inst, &schedule, &mut st, j).unwrap();
        if !dec.resolved_this_period {
            for (k, (b, a)) in before.iter().zip(&st.d).enumerate() {
                let want = if k == j { b - 1.0 } else { *b };
                assert_eq!(*a, want);
            }
        }
    }
}

#[test]
fn plan_value_tracks_the_fluid_lp() {
    let inst = single_resource(0.5, 1000).unwrap();
    let schedule = learning_approx_schedule(1000, 0.7, 0.7).unwrap();
    let mut checked = 0;
    for seed in 0..30 {
        let path = sample_path(&inst, seed);
        let mut st = PolicyState::new(&inst);
        let mut healthy = false;
        for (idx, &j) in path.arrivals.iter().enumerate() {
            let dec = olp::policy::air_step(&inst, &schedule, &mut st, j).unwrap();
            let min_d = st.d.iter().cloned().fold(f64::INFINITY, f64::min);
            if dec.resolved_this_period {
                healthy = min_d >= 2.0;
            } else {
                healthy &= min_d >= 2.0;
            }
            if healthy && st.last_resolve.is_some() && idx % 37 == 0 {
                let phi = fluid_value(&inst, &st.b, &st.d).unwrap();
                let plan = inst.revenue_of(&st.u);
                assert!((plan - phi).abs() <= 1e-6, "seed {seed} t {}: {plan} vs {phi}", st.t);
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "only {checked} checks ran");
}

#[test]
fn air_and_air_kp_agree_with_one_type() {
    let inst = Instance::new(vec![1.0], vec![vec![1.0]], vec![0.6], 500, vec![1.0]).unwrap();
    let schedule = Schedule::custom([3, 50, 200, 497], 500).unwrap();
    for seed in 0..5 {
        let path = sample_path(&inst, seed);
        let mut a = PolicyState::new(&inst);
        let mut k = PolicyState::new(&inst);
        for &j in &path.arrivals {
            let da = olp::policy::air_step(&inst, &schedule, &mut a, j).unwrap();
            let dk = olp::policy::air_kp_step(&inst, &schedule, &mut k, j).unwrap();
            assert_eq!(da, dk);
        }
        assert_eq!(a.accepted, k.accepted);
    }
}

/// Independent replay of the argmax-with-resolving loop on the single-resource
/// instance, with the fluid LP replaced by the greedy fill that is exact there.
fn scripted_air(path: &[usize], horizon: usize, rho: f64, schedule: &[usize]) -> (f64, Vec<bool>) {
    let r = [2.0, 1.0];
    let mut b = rho * horizon as f64;
    let mut u = [0.0f64; 2];
    let mut d = [0.0f64; 2];
    let mut n = [0u64; 2];
    let mut revenue = 0.0;
    let mut decisions = Vec::new();
    for (i, &j) in path.iter().enumerate() {
        let t = i + 1;
        if schedule.contains(&t) {
            let rem = (horizon - t + 1) as f64;
            for k in 0..2 {
                d[k] = if t == 1 { 0.0 } else { rem * n[k] as f64 / (t - 1) as f64 };
            }
            u[0] = d[0].min(b);
            u[1] = d[1].min(b - u[0]);
        }
        n[j] += 1;
        let accept = b >= 1.0 && u[j] > 1.0 && u[j] >= d[j] - u[j];
        if accept {
            b -= 1.0;
            u[j] -= 1.0;
            revenue += r[j];
        }
        d[j] -= 1.0;
        decisions.push(accept);
    }
    (revenue, decisions)
}

#[test]
fn air_matches_scripted_replay() {
    let times = [3, 50, 97];
    for rho in [0.3, 0.5, 0.7] {
        let inst = single_resource(rho, 100).unwrap();
        let schedule = Schedule::custom(times, 100).unwrap();
        for seed in 0..20 {
            let path = sample_path(&inst, seed);
            let (want_rev, want) = scripted_air(&path.arrivals, 100, rho, &times);
            let spec = PolicySpec::from(PolicyKind::Air);
            let run = run_with(&inst, &path, 0, true, |st, j, c| spec.step(&inst, Some(&schedule), st, j, c))
                .unwrap();
            let got: Vec<bool> = run.decision_trace.unwrap().iter().map(|e| e.accept).collect();
            assert_eq!(got, want, "rho {rho} seed {seed}");
            assert!((run.revenue - want_rev).abs() < 1e-9);
        }
    }
}
