use olp::schedule::{
    finite_schedule, halving_checkpoints, known_prob_finite_schedule, known_prob_schedule,
    learning_approx_schedule, midpoint_schedule, periodic_schedule,
};
use olp::{Schedule, ScheduleKind};

/// Resolving periods at alpha = beta = 0.7. The T = 5000 row is printed elsewhere
/// with 4621 in place of 4612; `ceil(5000 - 5000^0.7) = ceil(4611.6)` is 4612, so
/// that entry is a digit transposition and this table carries the evaluated value.
const TABLE4: [(usize, &[usize]); 11] = [
    (2500, &[3, 4, 7, 15, 47, 240, 1250, 2261, 2454, 2486, 2494, 2497, 2498]),
    (5000, &[3, 5, 8, 19, 65, 389, 2500, 4612, 4936, 4982, 4993, 4996, 4998]),
    (7500, &[3, 5, 9, 22, 80, 516, 3750, 6985, 7421, 7479, 7492, 7496, 7498]),
    (10000, &[3, 5, 10, 24, 92, 631, 5000, 9370, 9909, 9977, 9991, 9996, 9998]),
    (12500, &[3, 4, 5, 10, 26, 102, 738, 6250, 11763, 12399, 12475, 12491, 12496, 12497, 12498]),
    (15000, &[3, 4, 6, 11, 28, 112, 839, 7500, 14162, 14889, 14973, 14990, 14995, 14997, 14998]),
    (17500, &[3, 4, 6, 11, 29, 120, 934, 8750, 16567, 17381, 17472, 17490, 17495, 17497, 17498]),
    (20000, &[3, 4, 6, 11, 30, 129, 1025, 10000, 18976, 19872, 19971, 19990, 19995, 19997, 19998]),
    (100000, &[3, 4, 7, 16, 52, 282, 3163, 50000, 96838, 99719, 99949, 99985, 99994, 99997, 99998]),
    (200000, &[3, 5, 8, 19, 66, 396, 5138, 100000, 194863, 199605, 199935, 199982, 199993, 199996, 199998]),
    (300000, &[3, 5, 9, 21, 76, 483, 6824, 150000, 293177, 299518, 299925, 299980, 299992, 299996, 299998]),
];

fn well_formed(s: &Schedule, t: usize) {
    assert!(s.times().windows(2).all(|w| w[0] < w[1]), "{s}");
    assert!(s.times().iter().all(|&x| (1..=t).contains(&x)), "{s}");
}

/// `ceil(log_{1/a} log_3 T)`.
fn kl(t: usize, a: f64) -> usize {
    ((t as f64).log(3.0).ln() / (1.0 / a).ln()).ceil() as usize
}

#[test]
fn table4_rows_bit_exact() {
    for (t, want) in TABLE4 {
        let s = learning_approx_schedule(t, 0.7, 0.7).unwrap();
        assert_eq!(s.times(), want, "T = {t}");
        assert_eq!(s.kind(), ScheduleKind::LearningApprox);
    }
}

#[test]
fn transposed_entry_by_direct_evaluation() {
    let v = 5000.0 - 5000f64.powf(0.7);
    assert!((v - 4611.600195).abs() < 1e-6);
    assert_eq!(learning_approx_schedule(5000, 0.7, 0.7).unwrap().times()[7], 4612);
}

#[test]
fn table5_resolve_counts() {
    // Number of resolves at T = 30000 while one exponent varies and the other is 0.7.
    let alpha_rows = [
        (0.15, 10),
        (0.25, 10),
        (0.35, 11),
        (0.45, 11),
        (0.55, 12),
        (0.65, 14),
        (0.75, 16),
        (0.85, 22),
        (0.95, 45),
    ];
    for (alpha, n) in alpha_rows {
        assert_eq!(learning_approx_schedule(30000, alpha, 0.7).unwrap().len(), n, "alpha {alpha}");
    }
    let beta_rows = [
        (0.55, 12),
        (0.60, 13),
        (0.65, 14),
        (0.70, 15),
        (0.75, 16),
        (0.80, 18),
        (0.85, 22),
        (0.90, 28),
        (0.95, 45),
    ];
    for (beta, n) in beta_rows {
        assert_eq!(learning_approx_schedule(30000, 0.7, beta).unwrap().len(), n, "beta {beta}");
    }
}

#[test]
fn learning_part_at_alpha_half() {
    // ceil(100^(0.5^k)) for k = 1..3 is 10, 4, 2; plus ceil(T/2) = 50.
    let s = learning_approx_schedule(100, 0.5, 0.7).unwrap();
    let learning: Vec<usize> = s.times().iter().copied().filter(|&x| x <= 50).collect();
    assert_eq!(learning, vec![2, 4, 10, 50]);
}

#[test]
fn learning_approx_size_and_ends() {
    let mut t = 9;
    while t <= 1_000_000 {
        for (a, b) in [(0.7, 0.7), (0.5, 0.9), (0.9, 0.55), (0.3, 0.95)] {
            let s = learning_approx_schedule(t, a, b).unwrap();
            well_formed(&s, t);
            assert!(s.len() <= 2 * (kl(t, a) + kl(t, b) + 1), "T = {t}");
            assert!(s.times()[0] <= 3);
            assert!(*s.times().last().unwrap() >= t - 3);
        }
        t = t * 3 / 2 + 1;
    }
}

#[test]
fn rejects_bad_parameters() {
    assert!(learning_approx_schedule(8, 0.7, 0.7).is_err());
    assert!(learning_approx_schedule(100, 1.0, 0.7).is_err());
    assert!(learning_approx_schedule(100, 0.0, 0.7).is_err());
    assert!(learning_approx_schedule(100, 0.7, 0.5).is_err());
    assert!(finite_schedule(100, 1, 0.7, 0.01).is_err());
    assert!(finite_schedule(100, 3, 0.7, 0.0).is_err());
    assert!(known_prob_finite_schedule(100, 0, 0.7).is_err());
    assert!(periodic_schedule(10, 0).is_err());
    assert!(midpoint_schedule(3, false).is_err());
}

#[test]
fn finite_examples() {
    let s = finite_schedule(10000, 3, 0.7, 0.01).unwrap();
    assert_eq!(s.times(), &[27, 5000, 9370]);
    let first = (10000f64.powf(0.51)).ceil() as usize;
    assert_eq!(finite_schedule(10000, 2, 0.7, 0.01).unwrap().times(), &[first, 5000]);
}

#[test]
fn known_prob_examples() {
    assert_eq!(
        known_prob_schedule(2500, 0.7).unwrap().times(),
        &[1, 2261, 2454, 2486, 2494, 2497, 2498]
    );
    assert_eq!(known_prob_schedule(50000, 5.0 / 6.0).unwrap().len(), 14);
    let s = known_prob_schedule(9, 0.51).unwrap();
    well_formed(&s, 9);
    assert_eq!(s.times()[0], 1);

    assert_eq!(known_prob_finite_schedule(10000, 2, 0.7).unwrap().times(), &[1, 9370]);
    assert_eq!(known_prob_finite_schedule(10000, 1, 0.7).unwrap().times(), &[1]);
    assert_eq!(
        known_prob_finite_schedule(2500, 7, 0.7).unwrap().times(),
        &[1, 2261, 2454, 2486, 2494, 2497, 2498]
    );
}

#[test]
fn finite_cardinality_and_nesting() {
    for t in [9, 50, 1000, 2500, 10000, 123_457, 1_000_000] {
        for beta in [0.55, 0.7, 5.0 / 6.0, 0.95] {
            for m in 1..=12 {
                let kp = known_prob_finite_schedule(t, m, beta).unwrap();
                well_formed(&kp, t);
                assert!(kp.len() <= m);
                let next = known_prob_finite_schedule(t, m + 1, beta).unwrap();
                assert!(kp.times().iter().all(|x| next.contains(*x)), "T {t} M {m}");
                if m >= 2 {
                    if let Ok(f) = finite_schedule(t, m, beta, 0.01) {
                        well_formed(&f, t);
                        assert!(f.len() <= m);
                    }
                }
            }
        }
    }
}

#[test]
fn periodic_and_midpoint_examples() {
    assert_eq!(periodic_schedule(10, 3).unwrap().times(), &[1, 4, 7, 10]);
    assert_eq!(periodic_schedule(5, 1).unwrap().times(), &[1, 2, 3, 4, 5]);
    assert_eq!(periodic_schedule(5, 10).unwrap().times(), &[1]);
    assert_eq!(midpoint_schedule(16, false).unwrap().times(), &[1, 8, 12, 14, 15]);
    assert_eq!(midpoint_schedule(16, true).unwrap().times(), &[1, 2, 4, 8, 12, 14, 15]);
    assert_eq!(midpoint_schedule(4, false).unwrap().times(), &[1, 2, 3]);
}

#[test]
fn budget_checkpoints() {
    assert_eq!(halving_checkpoints(8), vec![4, 6, 7]);
}

#[test]
fn csv_field() {
    let s = periodic_schedule(10, 3).unwrap();
    assert_eq!(s.to_csv_field(), "1,4,7,10");
    assert_eq!(s.to_string(), "1,4,7,10");
}
