use tricolor::search::{exhaustive_min, minimize, random_coloring, SearchParams, DEFAULT_EXHAUSTIVE_BUDGET};
use tricolor::{triangle_count, Color, EdgeColoring, Error};

/// Goodman's minimum for two colors: C(n,3) - floor(n/2 * floor(((n-1)/2)^2)).
fn goodman(n: usize) -> usize {
    let half = (n - 1) as f64 / 2.0;
    let inner = (half * half).floor();
    triangle_count(n) - (n as f64 / 2.0 * inner).floor() as usize
}

/// Plain enumeration of every coloring with the brute-force census.
fn enumerate_min(n: usize, k: usize) -> usize {
    let m = n * (n - 1) / 2;
    (0..k.pow(m as u32))
        .map(|mut idx| {
            let colors = (0..m)
                .map(|_| {
                    let c = Color::ALL[idx % k];
                    idx /= k;
                    c
                })
                .collect();
            EdgeColoring::new(n, colors).unwrap().census().total_mono()
        })
        .min()
        .unwrap()
}

#[test]
fn exhaustive_matches_goodman_for_two_colors() {
    for n in 3..=7 {
        let (min, witness) = exhaustive_min(n, 2, DEFAULT_EXHAUSTIVE_BUDGET).unwrap();
        assert_eq!(min, goodman(n), "n = {n}");
        assert_eq!(witness.census().total_mono(), min);
        assert!(witness.colors().iter().all(|&c| c != Color::Yellow));
    }
}

#[test]
fn exhaustive_matches_plain_enumeration() {
    for (n, k) in [(4, 2), (5, 2), (4, 3), (5, 3)] {
        assert_eq!(exhaustive_min(n, k, DEFAULT_EXHAUSTIVE_BUDGET).unwrap().0, enumerate_min(n, k));
    }
}

#[test]
fn exhaustive_budget_is_enforced() {
    assert!(matches!(exhaustive_min(7, 3, DEFAULT_EXHAUSTIVE_BUDGET), Err(Error::OverBudget { .. })));
    assert!(exhaustive_min(5, 2, 1 << 9).is_err());
    assert!(exhaustive_min(5, 2, 1 << 10).is_ok());
}

#[test]
fn random_mono_frequency_matches_expectation() {
    // E[mono] = C(6,3) * 2 * (1/2)^3 = 5 for n = 6, k = 2; per-sample
    // variance is below 20, so the standard error of a 10k-sample mean is < 0.05.
    let samples = 10_000u64;
    let total: usize = (0..samples).map(|s| random_coloring(6, 2, s).unwrap().census().total_mono()).sum();
    let mean = total as f64 / samples as f64;
    assert!((mean - 5.0).abs() < 0.25, "mean {mean}");
}

#[test]
fn minimize_is_deterministic() {
    let p = SearchParams { restarts: 5, steps_per_restart: 2_000, sideways_limit: 300, ..SearchParams::new(12, 3, 42) };
    assert_eq!(minimize(&p).unwrap(), minimize(&p).unwrap());
}

#[test]
fn first_restart_starts_from_random_coloring() {
    let p = SearchParams { restarts: 1, ..SearchParams::new(10, 3, 9) };
    let r = minimize(&p).unwrap();
    let start = random_coloring(10, 3, 9).unwrap().census().total_mono();
    assert_eq!(r.trace[0].start, start);
}

#[test]
fn minimize_never_beats_exhaustive() {
    for (n, k) in [(5, 2), (6, 2), (7, 2), (5, 3), (6, 3)] {
        let exact = exhaustive_min(n, k, DEFAULT_EXHAUSTIVE_BUDGET).unwrap().0;
        for seed in 0..5 {
            let p = SearchParams { restarts: 10, steps_per_restart: 2_000, sideways_limit: 200, ..SearchParams::new(n, k, seed) };
            let r = minimize(&p).unwrap();
            assert!(r.best_count >= exact);
            assert_eq!(r.best.census().total_mono(), r.best_count);
        }
        let p = SearchParams { restarts: 20, steps_per_restart: 2_000, sideways_limit: 200, ..SearchParams::new(n, k, 0) };
        assert_eq!(minimize(&p).unwrap().best_count, exact, "n = {n}, k = {k}");
    }
}

#[test]
fn traces_decrease_within_each_restart() {
    let p = SearchParams { restarts: 8, steps_per_restart: 5_000, sideways_limit: 500, ..SearchParams::new(17, 3, 1) };
    let r = minimize(&p).unwrap();
    for t in &r.trace {
        let mut last = t.start;
        for &v in &t.improvements {
            assert!(v < last);
            last = v;
        }
        assert_eq!(t.best, last);
        assert!(t.steps <= p.steps_per_restart);
    }
    let min = r.trace.iter().map(|t| t.best).min().unwrap();
    assert_eq!(r.best_count, min);
    assert_eq!(r.trace[r.best_restart].best, min);
    assert!(r.evaluations > 0);
}
