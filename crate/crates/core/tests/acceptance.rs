//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `-- --nocapture` to see them) and asserting its tolerance and
//! wall-clock budget.

use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pareto_lab::bounds::{
    cortes_confidence_term, cortes_rhs, empirical_rademacher, improved_rhs, CortesBoundParams,
    RademacherMode,
};
use pareto_lab::moo::{
    additive_shift, pareto_filter, pareto_filter_with_tolerance, strongly_dominates,
    EvaluatedHypothesis, ObjectiveVector,
};
use pareto_lab::scalarize::{argmin_scalarized, chebyshev_weights_for, Scalarization};
use pareto_lab::testbeds::{
    lasso_path, sample_segmentation_data, segmentation_erm, FiniteProblem, FiniteProblemConfig,
    LassoProblem, QuarterCircleConfig,
};
use pareto_lab::verify::{
    default_hoeffding_specs, demonstrate_impossibility, verify_lemma1, verify_pareto_backward,
    verify_pareto_forward, verify_scalarization, CheckOutcome, RayCheckConfig, SweepSpec,
    VerificationConfig,
};

fn finish(name: &str, started: Instant, budget: Duration, detail: &str) {
    let elapsed = started.elapsed();
    println!("ACCEPTANCE {name}: PASS ({detail}; {elapsed:.2?} of {budget:.0?} budget)");
    assert!(
        elapsed <= budget,
        "{name} exceeded its time budget: {elapsed:.2?} > {budget:.0?}"
    );
}

fn ov(values: Vec<f64>) -> ObjectiveVector {
    ObjectiveVector::new(values).unwrap()
}

fn random_cloud(rng: &mut ChaCha8Rng, max_points: usize, max_dim: usize) -> Vec<ObjectiveVector> {
    let n = 1 + rng.random_range(0..max_points);
    let dim = 1 + rng.random_range(0..max_dim);
    (0..n)
        .map(|_| ov((0..dim).map(|_| rng.random::<f64>()).collect()))
        .collect()
}

/// Textbook all-pairs dominance oracle, independent of the library's
/// sum-presorted sweep.
fn naive_pareto_members(points: &[ObjectiveVector]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| {
            !points
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && strongly_dominates(q, &points[i]).unwrap())
        })
        .collect()
}

/// Criterion 1: pareto_filter equals the naive oracle on 1000 random
/// instances (n <= 1000, N <= 5), exact index sets, under 10 s.
#[test]
fn a01_pareto_filter_matches_allpairs_oracle() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut total_points = 0usize;
    for _ in 0..1000 {
        let points = random_cloud(&mut rng, 1000, 5);
        total_points += points.len();
        let fast = pareto_filter(&points).unwrap();
        assert_eq!(fast.member_ids, naive_pareto_members(&points));
    }
    finish(
        "01 pareto-oracle-equivalence",
        started,
        Duration::from_secs(10),
        &format!("1000 instances, {total_points} points"),
    );
}

/// Criterion 2: Pareto membership is invariant under additive shifts on 200
/// random problems, exactly, under 5 s.
#[test]
fn a02_shift_invariance() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..200 {
        let points = random_cloud(&mut rng, 300, 5);
        let dim = points[0].len();
        let shifts: Vec<f64> = (0..dim).map(|_| rng.random::<f64>() * 20.0 - 10.0).collect();
        let before = pareto_filter(&points).unwrap();
        let shifted: Vec<ObjectiveVector> = points
            .iter()
            .map(|p| additive_shift(p, &shifts).unwrap())
            .collect();
        let after = pareto_filter(&shifted).unwrap();
        assert_eq!(before.member_ids, after.member_ids);
    }
    finish(
        "02 shift-invariance",
        started,
        Duration::from_secs(5),
        "200 problems",
    );
}

/// Criterion 3: on 100 random problems with strictly positive fronts, every
/// Pareto-optimal point minimizes its reciprocal-weight Chebyshev
/// scalarization and all co-minimizers share its vector to 1e-12; under 10 s.
#[test]
fn a03_chebyshev_construction() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut checked = 0usize;
    for _ in 0..100 {
        let count = 3 + rng.random_range(0..78);
        let dim = 2 + rng.random_range(0..3);
        let points: Vec<ObjectiveVector> = (0..count)
            .map(|_| ov((0..dim).map(|_| 0.05 + rng.random::<f64>()).collect()))
            .collect();
        let hypotheses: Vec<EvaluatedHypothesis> = points
            .iter()
            .enumerate()
            .map(|(i, p)| EvaluatedHypothesis::new(i, Some(p.clone()), None).unwrap())
            .collect();
        let pareto = pareto_filter(&points).unwrap();
        for &star in &pareto.member_ids {
            let s = Scalarization::chebyshev(chebyshev_weights_for(&points[star]).unwrap());
            let minimizers = argmin_scalarized(&s, &hypotheses, false).unwrap();
            assert!(minimizers.contains(&star), "pareto point lost its argmin");
            for other in minimizers {
                for (a, b) in points[other].values().iter().zip(points[star].values()) {
                    assert!((a - b).abs() <= 1e-12, "co-minimizer differs from source");
                }
            }
            checked += 1;
        }
    }
    finish(
        "03 chebyshev-construction",
        started,
        Duration::from_secs(10),
        &format!("{checked} pareto points across 100 problems"),
    );
}

fn standard_problem() -> FiniteProblem {
    FiniteProblem::random(&FiniteProblemConfig::default(), 2024).unwrap()
}

/// Criterion 4: uniform-deviation violation frequency on the standard
/// problem (|H|=100, |Z|=64, N=2, n=500, delta=0.1, T=1000) stays below the
/// binomial ceiling; under 60 s.
#[test]
fn a04_lemma1_frequency() {
    let started = Instant::now();
    let problem = standard_problem();
    let specs = default_hoeffding_specs(&problem);
    let cfg = VerificationConfig::new(500, 0.1, 1000, 42).unwrap();
    let report = verify_lemma1(&problem, &specs, &cfg).unwrap();
    assert_eq!(report.outcome, CheckOutcome::Pass, "{}", report.summary_line());
    assert!(report.frequency <= 0.1 + 2.0 * (0.09f64 / 1000.0).sqrt());
    finish(
        "04 lemma1-frequency",
        started,
        Duration::from_secs(60),
        &report.summary_line(),
    );
}

/// Criterion 5: sweep sizes 100 and 10000 both stay below the delta ceiling
/// and the larger sweep's frequency exceeds the smaller's by less than 0.02;
/// under 5 min.
#[test]
fn a05_scalarization_uniformity() {
    let started = Instant::now();
    let problem = standard_problem();
    let specs = default_hoeffding_specs(&problem);
    let cfg = VerificationConfig::new(500, 0.1, 1000, 42).unwrap();
    let run = |count: usize| {
        let sweep = SweepSpec {
            count,
            ..Default::default()
        };
        verify_scalarization(&problem, &specs, &cfg, &sweep).unwrap()
    };
    let small = run(100);
    let large = run(10_000);
    assert_eq!(small.outcome, CheckOutcome::Pass, "{}", small.summary_line());
    assert_eq!(large.outcome, CheckOutcome::Pass, "{}", large.summary_line());
    assert!(
        large.frequency - small.frequency < 0.02,
        "confidence degraded with sweep size: {} vs {}",
        large.frequency,
        small.frequency
    );
    finish(
        "05 scalarization-uniformity",
        started,
        Duration::from_secs(300),
        &format!(
            "freq {:.4} at sweep 100, {:.4} at sweep 10000",
            small.frequency, large.frequency
        ),
    );
}

/// Criterion 6: forward Pareto matching frequency on the standard problem,
/// T=1000, below the delta ceiling; under 2 min.
#[test]
fn a06_pareto_forward_frequency() {
    let started = Instant::now();
    let problem = standard_problem();
    let specs = default_hoeffding_specs(&problem);
    let cfg = VerificationConfig::new(500, 0.1, 1000, 42).unwrap();
    let report = verify_pareto_forward(&problem, &specs, &cfg).unwrap();
    assert_eq!(report.outcome, CheckOutcome::Pass, "{}", report.summary_line());
    finish(
        "06 pareto-forward-frequency",
        started,
        Duration::from_secs(120),
        &report.summary_line(),
    );
}

/// Criterion 7: backward Pareto matching on the dense quarter-circle front
/// (ray completeness fraction exactly 1.0 at 0.02 rad), T=500, below the
/// delta ceiling; under 2 min.
#[test]
fn a07_pareto_backward_on_ray_complete_front() {
    let started = Instant::now();
    let problem = FiniteProblem::quarter_circle(&QuarterCircleConfig::default(), 2024).unwrap();
    let specs = default_hoeffding_specs(&problem);
    let cfg = VerificationConfig::new(500, 0.1, 500, 42).unwrap();
    let report = verify_pareto_backward(&problem, &specs, &cfg, &RayCheckConfig::default()).unwrap();
    assert_eq!(report.outcome, CheckOutcome::Pass, "{}", report.summary_line());
    assert_eq!(
        report.notes["ray_completeness_fraction"].as_f64().unwrap(),
        1.0,
        "true front must cover the whole ray grid"
    );
    finish(
        "07 pareto-backward-ray-complete",
        started,
        Duration::from_secs(120),
        &report.summary_line(),
    );
}

/// Criterion 8: the counterexample demonstration at n=200, K=20, C=10,
/// T=100 reaches the 0.5 floor, and in practice at least 0.9; under 30 s.
#[test]
fn a08_impossibility_demonstration() {
    let started = Instant::now();
    let report = demonstrate_impossibility(200, 20, 10, 100, 42).unwrap();
    assert_eq!(report.outcome, CheckOutcome::Pass, "{}", report.summary_line());
    assert!(report.frequency >= 0.5);
    assert!(
        report.frequency >= 0.9,
        "regression guard: expected >= 0.9 at this size, got {}",
        report.frequency
    );
    finish(
        "08 impossibility-demonstration",
        started,
        Duration::from_secs(30),
        &report.summary_line(),
    );
}

/// Exhaustive segment-placement oracle for tiny instances.
fn exhaustive_min_errors(samples: &[(f64, bool)], max_jumps: usize) -> usize {
    let n = samples.len();
    let mut best = usize::MAX;
    for mask in 0u32..(1 << (n - 1)) {
        if mask.count_ones() as usize > max_jumps {
            continue;
        }
        let mut errors = 0;
        let mut start = 0;
        for gap in 0..n {
            if gap == n - 1 || (mask >> gap) & 1 == 1 {
                let segment = &samples[start..=gap];
                let ones = segment.iter().filter(|(_, y)| *y).count();
                errors += ones.min(segment.len() - ones);
                start = gap + 1;
            }
        }
        best = best.min(errors);
    }
    best
}

/// Criterion 9: the segmentation DP equals exhaustive search on 200 random
/// instances with n <= 12, k <= 4; exact; under 30 s.
#[test]
fn a09_segmentation_dp_equals_exhaustive() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    for instance in 0..200u64 {
        let n = 2 + rng.random_range(0..11);
        let samples = sample_segmentation_data(n, instance);
        for k in 0..=4usize {
            let (hypothesis, errors) = segmentation_erm(&samples, k).unwrap();
            assert_eq!(
                errors,
                exhaustive_min_errors(&samples, k),
                "instance {instance}, n {n}, k {k}"
            );
            assert!(hypothesis.jump_count() <= k);
            assert_eq!(hypothesis.empirical_errors(&samples), errors);
        }
    }
    finish(
        "09 segmentation-dp-exhaustive",
        started,
        Duration::from_secs(30),
        "200 instances, k = 0..4",
    );
}

/// Criterion 10: on 50 random problems (n=100, d=10) the path is monotone in
/// both objectives within 1e-8 along decreasing lambda and every point
/// survives the dominance filter at 1e-6; under 60 s.
#[test]
fn a10_lasso_path_properties() {
    let started = Instant::now();
    for seed in 0..50u64 {
        let noise = if seed % 2 == 0 { 0.0 } else { 0.5 };
        let (problem, _truth) = LassoProblem::random_linear(100, 10, 5, noise, seed).unwrap();
        let mut grid = vec![problem.lambda_max() * 1.0001];
        grid.extend(problem.default_lambda_grid(50, 1e-3).unwrap());
        let path = lasso_path(&problem, &grid, 1e-10, 200_000).unwrap();
        for w in path.windows(2) {
            assert!(
                w[1].l1_norm >= w[0].l1_norm - 1e-8,
                "l1 norm not monotone at seed {seed}"
            );
            assert!(
                w[1].empirical_loss <= w[0].empirical_loss + 1e-8,
                "fit not anti-monotone at seed {seed}"
            );
        }
        let pairs: Vec<ObjectiveVector> = path
            .iter()
            .map(|p| ov(vec![p.empirical_loss, p.l1_norm]))
            .collect();
        let front = pareto_filter_with_tolerance(&pairs, 1e-6).unwrap();
        assert_eq!(
            front.len(),
            path.len(),
            "path point dominated at seed {seed}"
        );
    }
    finish(
        "10 lasso-path-properties",
        started,
        Duration::from_secs(60),
        "50 problems, 51-point paths",
    );
}

/// Criterion 11: across N in {2,4,8,16} at epsilon 0.01 the cover-based
/// confidence term divided by sqrt(N) is constant within +-10%, and the
/// cover-free bound is strictly smaller everywhere; under 1 s.
#[test]
fn a11_bound_comparison_scaling() {
    let started = Instant::now();
    let base = CortesBoundParams {
        beta: 1.0,
        diameter: 1.0,
        loss_bound: 1.0,
        n: 10_000,
        num_objectives: 2,
        epsilon: 0.01,
        rademacher: 0.05,
        delta: 0.05,
    };
    let mut normalized = Vec::new();
    for num_objectives in [2usize, 4, 8, 16] {
        let p = CortesBoundParams {
            num_objectives,
            ..base
        };
        assert!(
            improved_rhs(&p).unwrap() < cortes_rhs(&p).unwrap(),
            "cover-free bound not smaller at N={num_objectives}"
        );
        normalized.push(cortes_confidence_term(&p).unwrap() / (num_objectives as f64).sqrt());
    }
    let mean: f64 = normalized.iter().sum::<f64>() / normalized.len() as f64;
    for (ix, value) in normalized.iter().enumerate() {
        assert!(
            (value - mean).abs() / mean <= 0.10,
            "confidence/sqrt(N) deviates {:.1}% at index {ix}",
            100.0 * (value - mean).abs() / mean
        );
    }
    finish(
        "11 bound-comparison-scaling",
        started,
        Duration::from_secs(1),
        &format!("normalized confidence terms {normalized:?}"),
    );
}

/// Criterion 12: Monte Carlo Rademacher estimates land within 3 standard
/// errors of exact enumeration on 10 random instances (n=10, |H|=8);
/// under 10 s.
#[test]
fn a12_rademacher_monte_carlo_vs_exact() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1212);
    let mut max_sigma = 0.0f64;
    for instance in 0..10u64 {
        let losses: Vec<Vec<f64>> = (0..8)
            .map(|_| (0..10).map(|_| rng.random::<f64>()).collect())
            .collect();
        let exact = empirical_rademacher(&losses, RademacherMode::Exact).unwrap();
        let mc = empirical_rademacher(
            &losses,
            RademacherMode::MonteCarlo {
                draws: 20_000,
                seed: 7000 + instance,
            },
        )
        .unwrap();
        let sigmas = (mc.value - exact.value).abs() / mc.std_error;
        max_sigma = max_sigma.max(sigmas);
        assert!(
            sigmas <= 3.0,
            "instance {instance}: estimate off by {sigmas:.2} standard errors"
        );
    }
    finish(
        "12 rademacher-monte-carlo",
        started,
        Duration::from_secs(10),
        &format!("worst deviation {max_sigma:.2} standard errors"),
    );
}

/// Criterion 13: tilted risk stays within [min, max], is non-decreasing over
/// a 20-point tilt grid, and is 1-Lipschitz in the max-norm, all to 1e-9 on
/// 1000 random vectors; under 5 s.
#[test]
fn a13_tilted_risk_properties() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1313);
    let t_grid: Vec<f64> = (0..20).map(|k| -10.0 + k as f64 * 20.0 / 19.0).collect();
    for _ in 0..1000 {
        let dim = 2 + rng.random_range(0..7);
        let x: Vec<f64> = (0..dim).map(|_| rng.random::<f64>() * 5.0).collect();
        let y: Vec<f64> = (0..dim).map(|_| rng.random::<f64>() * 5.0).collect();
        let lo = x.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let sup_diff = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let mut previous = f64::NEG_INFINITY;
        for &t in &t_grid {
            let s = Scalarization::tilted(t).unwrap();
            let value = s.evaluate(&x).unwrap();
            assert!(value >= lo - 1e-9 && value <= hi + 1e-9);
            assert!(value >= previous - 1e-9, "not monotone in t at t={t}");
            previous = value;
            let other = s.evaluate(&y).unwrap();
            assert!(
                (value - other).abs() <= sup_diff + 1e-9,
                "max-norm Lipschitz violated at t={t}"
            );
        }
    }
    finish(
        "13 tilted-risk-properties",
        started,
        Duration::from_secs(5),
        "1000 vectors, 20-point tilt grid",
    );
}
