use partword::analysis::{
    compare, degree_histogram, fit, normal_cdf, parts_histogram, partition_count,
    zero_count_histogram, Family,
};
use partword::graphs::build;
use partword::words::{enumerate, Dim};
use proptest::prelude::*;

#[test]
fn parts_histogram_totals_and_shift() {
    let dim = Dim::new(1).unwrap();
    for n in 1..=40 {
        let parts = parts_histogram(n).unwrap();
        assert_eq!(parts.total(), partition_count(n).unwrap());
        if n <= 30 {
            let zeros = zero_count_histogram(&enumerate(dim, n).unwrap());
            assert_eq!(zeros.shifted(1), parts, "n = {n}");
        }
    }
}

/// Inverse of the normal CDF by bisection, accurate well below the
/// tolerances used here.
fn normal_quantile(p: f64) -> f64 {
    let (mut lo, mut hi) = (-10.0, 10.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if normal_cdf(mid) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn ks_shrinks_on_quantile_samples() {
    let ks_at = |size: usize| {
        let samples: Vec<f64> = (0..size)
            .map(|i| (1.5 + 0.4 * normal_quantile((i as f64 + 0.5) / size as f64)).exp())
            .collect();
        let f = fit(&samples, Family::Lognormal).unwrap();
        assert!((f.mu - 1.5).abs() < 0.01);
        f.ks
    };
    let (small, large) = (ks_at(100), ks_at(1000));
    assert!(small < 0.02, "{small}");
    assert!(large < small);
    assert!(large < 0.005, "{large}");
}

#[test]
fn degree_comparison_report_is_deterministic() {
    let g = build(Dim::new(1).unwrap(), 25, true).unwrap();
    let samples = degree_histogram(&g).samples();
    let a = compare(&samples).unwrap();
    assert_eq!(a, compare(&samples).unwrap());
    assert_eq!(a.len(), 2);
    assert_eq!(a[0].sample_size, 1958);
}

proptest! {
    #[test]
    fn lognormal_fit_is_scale_equivariant(
        samples in prop::collection::vec(0.01f64..1000.0, 2..60),
        scale in 0.001f64..1000.0,
    ) {
        prop_assume!(samples.iter().any(|&x| x != samples[0]));
        let base = fit(&samples, Family::Lognormal).unwrap();
        let scaled: Vec<f64> = samples.iter().map(|x| x * scale).collect();
        let moved = fit(&scaled, Family::Lognormal).unwrap();
        prop_assert!((moved.mu - base.mu - scale.ln()).abs() < 1e-9);
        prop_assert!((moved.sigma - base.sigma).abs() < 1e-9 * base.sigma.max(1.0));
        prop_assert!((moved.ks - base.ks).abs() < 1e-9);
    }

    #[test]
    fn ks_statistic_in_unit_interval(samples in prop::collection::vec(-50.0f64..50.0, 2..80)) {
        prop_assume!(samples.iter().any(|&x| x != samples[0]));
        let f = fit(&samples, Family::Normal).unwrap();
        prop_assert!((0.0..=1.0).contains(&f.ks));
        prop_assert!(f.sigma > 0.0);
    }
}
