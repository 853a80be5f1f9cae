use std::f64::consts::{LN_2, PI};

use hardy_dirichlet::quadrature::{
    adaptive_simpson, gauss_legendre, integrate_abs_pow, integrate_log, interval_sup, poisson_log_integral, LogSign,
};
use hardy_dirichlet::series::{ExponentSequence, GeneralizedDirichletSeries};
use hardy_dirichlet::special::riemann_zeta;
use hardy_dirichlet::{Complex64, Result};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn zeta_ev(s: Complex64) -> Result<Complex64> {
    riemann_zeta(s)
}

/// Clausen function `Cl₂(θ) = Σ sin(nθ)/n²`, summed directly.
fn clausen2(theta: f64, n: usize) -> f64 {
    (1..=n).map(|k| (k as f64 * theta).sin() / (k as f64 * k as f64)).sum()
}

#[test]
fn zeta_window_against_midpoint_rule() {
    let (a, b) = (10.0, 10.05);
    let n = 100_000;
    let h = (b - a) / n as f64;
    let midpoint: f64 = (0..n).map(|i| riemann_zeta(c(1.0, a + (i as f64 + 0.5) * h)).unwrap().norm() * h).sum();
    let r = integrate_abs_pow(&zeta_ev, 1.0, a, b, 1.0, 1e-12).unwrap();
    assert!((r.value - midpoint).abs() < 1e-9, "{} vs {midpoint}", r.value);
}

#[test]
fn log_minus_of_one_minus_two_power() {
    // On σ = 0, |1 − 2^(−it)| = 2|sin(t log2 / 2)|. Over one period P = 2π/log 2 the
    // log⁻ part integrates to 2Cl₂(π/3)/log 2 and log⁺ − log⁻ integrates to 0.
    let s = GeneralizedDirichletSeries::classical(&[1.0, -1.0], 0.0).unwrap();
    let p = 2.0 * PI / LN_2;
    let (a, b) = (-p / 3.0, 2.0 * p / 3.0);
    let expected = 2.0 * clausen2(PI / 3.0, 2_000_000) / LN_2;
    let minus = integrate_log(&s, 0.0, a, b, LogSign::Minus, 1e-9).unwrap();
    let plus = integrate_log(&s, 0.0, a, b, LogSign::Plus, 1e-9).unwrap();
    assert!((minus.value - expected).abs() < 1e-5, "{} vs {expected}", minus.value);
    assert!((plus.value - minus.value).abs() < 1e-5);
}

#[test]
fn mean_square_of_zeta_on_the_one_line() {
    // (1/D)∫₀^D |ζ(1+it)|² dt → ζ(2).
    let d = 1000.0;
    let r = integrate_abs_pow(&zeta_ev, 1.0, 0.5, d, 2.0, 1e-6).unwrap();
    let mean = r.value / d;
    assert!((mean - PI * PI / 6.0).abs() < 0.03 * PI * PI / 6.0, "{mean}");
}

#[test]
fn poisson_integral_reproduces_anchor() {
    // 1 + ½·2^(−s) has no zeros in Re s ≥ 0, so the Poisson-weighted log|L|
    // over Re s = 0 equals log|L(D)|.
    let s = GeneralizedDirichletSeries::classical(&[1.0, 0.5], 0.0).unwrap();
    for d in [0.5, 1.0, 3.0] {
        let plus = poisson_log_integral(&s, 0.0, d, LogSign::Plus, 1e-8, 1.5f64.ln()).unwrap();
        let minus = poisson_log_integral(&s, 0.0, d, LogSign::Minus, 1e-8, -(0.5f64.ln())).unwrap();
        let anchor = s.eval_head(c(d, 0.0)).norm().ln();
        let diff = plus.value - minus.value;
        // The omitted tails of log⁺ and log⁻ largely cancel, so the difference
        // is far more accurate than either reported tail.
        assert!((diff - anchor).abs() < 1e-7, "D={d}: {diff} vs {anchor}");
        assert!(plus.truncation_tail < 1e-3 && minus.truncation_tail < 1e-3);
    }
}

#[test]
fn sup_of_known_function() {
    let s = GeneralizedDirichletSeries::classical(&[1.0, -1.0], 0.0).unwrap();
    let p = 2.0 * PI / LN_2;
    let r = interval_sup(&s, 0.0, 0.0, p, 64).unwrap();
    assert!((r.value - 2.0).abs() < 1e-12);
    assert!((r.argmax - p / 2.0).abs() < 1e-5);
    // Monotone on a short interval: the sup sits at the right end.
    let r = interval_sup(&s, 0.0, 0.0, 0.1, 16).unwrap();
    assert!((r.value - s.eval_head(c(0.0, 0.1)).norm()).abs() < 1e-14);
}

#[test]
fn gauss_legendre_exact_for_polynomials() {
    let (x, w) = gauss_legendre(20);
    for k in 0..40 {
        let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(k)).sum();
        let exact = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
        assert!((q - exact).abs() < 1e-14, "k={k}");
    }
}

#[test]
fn simpson_errors() {
    assert!(adaptive_simpson(Ok, 1.0, 1.0, 1e-8, 4, None).is_err());
    assert!(adaptive_simpson(Ok, 0.0, 1.0, 0.0, 4, None).is_err());
    assert!(integrate_abs_pow(&zeta_ev, 1.0, 1.0, 2.0, 0.5, 1e-8).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn parseval_for_linear_exponents(
        a in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..10),
        sigma in 0.0f64..1.0,
    ) {
        // Exponents n: period 2π, ∫|L|² = 2π Σ|aₙ|² e^(−2nσ).
        let coeffs: Vec<Complex64> = a.iter().map(|&(x, y)| c(x, y)).collect();
        let s = GeneralizedDirichletSeries::new(ExponentSequence::linear(1.0).unwrap(), coeffs, sigma).unwrap();
        let exact = 2.0 * PI * s.weighted_l2_sq(sigma).unwrap().upper;
        let r = integrate_abs_pow(&s, sigma, 0.0, 2.0 * PI, 2.0, 1e-11).unwrap();
        prop_assert!((r.value - exact).abs() < 1e-8 * (1.0 + exact));
    }

    #[test]
    fn log_parts_reassemble(a in prop::collection::vec(-1.0f64..1.0, 2..6), t0 in 0.0f64..20.0) {
        let s = GeneralizedDirichletSeries::classical(&a, 0.5).unwrap();
        let plus = integrate_log(&s, 0.5, t0, t0 + 0.3, LogSign::Plus, 1e-10).unwrap().value;
        let minus = integrate_log(&s, 0.5, t0, t0 + 0.3, LogSign::Minus, 1e-10).unwrap().value;
        prop_assert!(plus >= 0.0 && minus >= 0.0);
        let max = s.l1_norm().unwrap().upper;
        prop_assert!(plus <= 0.3 * max.ln().max(0.0) + 1e-9);
    }
}
