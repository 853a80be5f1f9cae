use hardy_dirichlet::mollifier::{BumpFunction, PEAK_CEILING, SUPPORT};
use hardy_dirichlet::Complex64;
use proptest::prelude::*;

/// Midpoint rule for `∫Φ(t)e^(−ixt)dt`. `Φ` is smooth with compact support,
/// so the rule converges faster than any power of the step.
fn transform_oracle(b: &BumpFunction, x: f64, n: usize) -> Complex64 {
    let h = SUPPORT / n as f64;
    (0..n)
        .map(|i| {
            let t = (i as f64 + 0.5) * h;
            Complex64::from_polar(b.phi(t) * h, -x * t)
        })
        .sum()
}

/// Composite Simpson with `n` (even) steps.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

#[test]
fn transform_matches_direct_quadrature() {
    let b = BumpFunction::default();
    for x in [0.0, 1.0, 40.0, 175.0, 900.0, 5e3, 3e4] {
        let oracle = transform_oracle(&b, x, 200_000);
        let v = b.phi_hat(x);
        assert!((v - oracle).norm() < 1e-10, "x={x}: {v} vs {oracle}");
    }
}

#[test]
fn derivative_matches_central_differences() {
    let b = BumpFunction::default();
    let h = 1e-2;
    for x in [0.0, 3.0, 150.0, 1234.0, 2e4] {
        let fd = (b.phi_hat(x + h) - b.phi_hat(x - h)) / (2.0 * h);
        let d = b.phi_hat_derivative(x);
        assert!((d - fd).norm() < 1e-10, "x={x}: {d} vs {fd}");
    }
    // Centre of mass sits at the middle of the support.
    assert!((b.phi_hat_derivative(0.0) - Complex64::new(0.0, -0.5 * SUPPORT)).norm() < 1e-12);
}

#[test]
fn bump_shape() {
    let b = BumpFunction::default();
    assert!(b.peak() <= PEAK_CEILING);
    let n = 100_000;
    let h = SUPPORT / n as f64;
    let mut mass = 0.0;
    let mut max = 0.0f64;
    for i in 0..n {
        let v = b.phi((i as f64 + 0.5) * h);
        assert!(v >= 0.0);
        mass += v * h;
        max = max.max(v);
    }
    assert!((mass - 1.0).abs() < 1e-10);
    assert!(max <= b.peak() + 1e-9);
    let sq: f64 = (0..n).map(|i| b.phi((i as f64 + 0.5) * h).powi(2) * h).sum();
    assert!((sq - b.l2_sq()).abs() < 1e-8 * sq);
    assert!(BumpFunction::new(0.0).is_err() && BumpFunction::new(0.5).is_err());
}

#[test]
fn plancherel_on_the_half_line() {
    let b = BumpFunction::default();
    let direct = simpson(|y| b.phi_hat(y).norm_sqr(), 0.0, 4e6, 200_000);
    let expected = b.half_line_hat_l2_sq();
    assert!((direct - expected).abs() < 2e-4 * expected, "{direct} vs {expected}");
}

#[test]
fn weighted_square_sum_against_direct_sum() {
    let b = BumpFunction::default();
    let (alpha, delta) = (1.0, 0.04);
    // Direct sum to N, then Σ_{n≥N} by ∫_N^∞ = δ⁻¹∫_Y^∞|Φ̂|² and the
    // Euler–Maclaurin end correction.
    let big_n = 100_000usize;
    let f = |x: f64| b.phi_hat(delta * ((x + alpha) / alpha).ln()).norm_sqr() / (x + alpha);
    let direct: f64 = (1..big_n).map(|n| f(n as f64)).sum();
    let y = delta * ((big_n as f64 + alpha) / alpha).ln();
    let tail = simpson(|t| b.phi_hat(t).norm_sqr(), y, 4e6, 200_000) / delta + 0.5 * f(big_n as f64);
    let oracle = direct + tail;
    let w = b.weighted_square_sum(alpha, delta, 10_000).unwrap();
    assert!((w.value - oracle).abs() < 2e-4 * oracle, "{} vs {oracle}", w.value);
    // Frozen value.
    assert!((w.value - 13_788.79).abs() < 0.05, "{}", w.value);
    // The sum is not within 90/δ.
    assert!(w.value > 90.0 / delta);
}

#[test]
fn weighted_square_sum_rejects_bad_input() {
    let b = BumpFunction::default();
    assert!(b.weighted_square_sum(0.0, 0.04, 100).is_err());
    assert!(b.weighted_square_sum(1.5, 0.04, 100).is_err());
    assert!(b.weighted_square_sum(0.5, 0.0, 100).is_err());
}

#[test]
fn mollified_series_evaluates_as_product() {
    let b = BumpFunction::default();
    let s = hardy_dirichlet::series::GeneralizedDirichletSeries::classical(&[1.0, -0.5, 0.25, 1.0], 0.5).unwrap();
    let m = b.mollify(&s, 0.04).unwrap();
    for n in 1..4 {
        let expected = s.coefficients()[n] * b.phi_hat(0.04 * s.lambda(n));
        assert!((m.coefficients()[n] - expected).norm() < 1e-15);
        assert!(m.coefficients()[n].norm() <= s.coefficients()[n].norm() + 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transform_bounds(x in -1e5f64..1e5) {
        let b = BumpFunction::default();
        prop_assert!(b.phi_hat(x).norm() <= 1.0 + 1e-12);
        prop_assert!(b.phi_hat_derivative(x).norm() <= SUPPORT + 1e-15);
        prop_assert!((b.phi_hat(-x) - b.phi_hat(x).conj()).norm() < 1e-13);
    }

    #[test]
    fn peak_scales_with_edge(edge in 0.001f64..0.4) {
        let b = BumpFunction::new(edge).unwrap();
        prop_assert!((b.phi_hat(0.0).re - 1.0).abs() < 1e-12);
        prop_assert!((b.peak() - 175.0 / (1.0 - edge)).abs() < 1e-9);
        prop_assert!((b.phi(0.5 * SUPPORT) - b.peak()).abs() < 1e-9 * b.peak());
    }
}
