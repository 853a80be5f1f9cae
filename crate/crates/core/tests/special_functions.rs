use std::f64::consts::{LN_2, PI, SQRT_2};

use hardy_dirichlet::bounds::lambda1_floor;
use hardy_dirichlet::special::{
    hurwitz_zeta, hurwitz_zeta_with, lambert_w0, lerch_phi, riemann_zeta, ZetaEvalConfig, CLASSICAL_SEPARATION,
};
use hardy_dirichlet::{Complex64, Error};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Direct summation to `n` plus the first two correction terms of the tail,
/// `u^(1−s)/(s−1) + u^(−s)/2 + s u^(−s−1)/12` at `u = n + α`.
fn hurwitz_oracle(s: Complex64, alpha: f64, n: usize) -> Complex64 {
    let mut sum = c(0.0, 0.0);
    for k in 0..n {
        sum += (-s * (k as f64 + alpha).ln()).exp();
    }
    let u = c(n as f64 + alpha, 0.0);
    sum + u.powc(1.0 - s) / (s - 1.0) + u.powc(-s) * 0.5 + s * u.powc(-s - 1.0) / 12.0
}

/// Cesàro-style average of the partial sums of `Σ e^(2πinα)(n+β)^(−s)` over
/// one full period of the twist, which cancels the leading oscillation.
fn lerch_oracle(alpha_num: usize, alpha_den: usize, beta: f64, s: Complex64, n: usize) -> Complex64 {
    let alpha = alpha_num as f64 / alpha_den as f64;
    let mut partial = c(0.0, 0.0);
    let mut avg = c(0.0, 0.0);
    let total = n + alpha_den;
    for k in 0..total {
        partial += Complex64::from_polar(1.0, 2.0 * PI * alpha * k as f64) * (-s * (k as f64 + beta).ln()).exp();
        if k >= n {
            avg += partial;
        }
    }
    avg / alpha_den as f64
}

#[test]
fn even_zeta_values() {
    assert!((riemann_zeta(c(2.0, 0.0)).unwrap().re - PI * PI / 6.0).abs() < 1e-12);
    assert!((riemann_zeta(c(4.0, 0.0)).unwrap().re - PI.powi(4) / 90.0).abs() < 1e-12);
    assert!((riemann_zeta(c(1.7378, 0.0)).unwrap().re - 1.983_572_335).abs() < 1e-8);
}

#[test]
fn hurwitz_against_direct_summation() {
    for (s, alpha) in [(c(1.0, 1.0), 0.3), (c(1.0, 10.0), 1.0), (c(0.5, 3.0), 0.7), (c(2.5, -4.0), 0.05)] {
        let oracle = hurwitz_oracle(s, alpha, 20_000);
        let v = hurwitz_zeta(s, alpha).unwrap();
        assert!((v - oracle).norm() < 1e-10 * (1.0 + oracle.norm()), "s={s} alpha={alpha}: {v} vs {oracle}");
    }
    let frozen = c(1.366_670_162_179_56, 2.077_131_832_602_09);
    assert!((hurwitz_zeta(c(1.0, 1.0), 0.3).unwrap() - frozen).norm() < 1e-12);
}

#[test]
fn lerch_against_averaged_partial_sums() {
    let s = c(1.0, 2.0);
    let oracle = lerch_oracle(3, 10, 0.7, s, 400_000);
    let v = lerch_phi(0.3, 0.7, s).unwrap();
    assert!((v - oracle).norm() < 1e-6, "{v} vs {oracle}");
    let frozen = c(1.204_619_262_900_44, 1.598_325_821_032_27);
    assert!((v - frozen).norm() < 1e-11);
    // Half twist at β = 1: alternating zeta (1 − 2^(1−s))ζ(s).
    let z = c(2.0, 0.0);
    let eta = (1.0 - 2f64.powf(1.0 - 2.0)) * PI * PI / 6.0;
    assert!((lerch_phi(0.5, 1.0, z).unwrap().re - eta).abs() < 1e-12);
    // Σ(−1)ⁿ/(n+½) = π/2.
    let direct = lerch_oracle(1, 2, 0.5, c(1.0, 0.0), 1_000_000);
    assert!((lerch_phi(0.5, 0.5, c(1.0, 0.0)).unwrap() - direct).norm() < 1e-9);
    assert!((direct.re - PI / 2.0).abs() < 1e-9);
}

#[test]
fn lerch_half_twist_at_two() {
    // Σ(−1)ⁿ/(n+1) = log 2.
    let v = lerch_phi(0.5, 1.0, c(1.0, 0.0)).unwrap();
    assert!((v.re - LN_2).abs() < 1e-12 && v.im.abs() < 1e-12);
}

#[test]
fn special_cases_of_hurwitz() {
    for i in 0..50 {
        let s = c(1.1 + 0.09 * i as f64, -20.0 + 0.8 * i as f64);
        let z = riemann_zeta(s).unwrap();
        assert!((hurwitz_zeta(s, 1.0).unwrap() - z).norm() < 1e-10);
        let two_s = (s * LN_2).exp();
        assert!((hurwitz_zeta(s, 0.5).unwrap() - (two_s - 1.0) * z).norm() < 1e-10 * (1.0 + z.norm() * two_s.norm()));
    }
}

#[test]
fn doubled_cutoff_is_stable() {
    for s in [c(1.0, 50.0), c(0.6, 5.0), c(1.0, 1e3)] {
        let a = hurwitz_zeta_with(s, 0.4, &ZetaEvalConfig::new(40, 20, 1e-13).unwrap()).unwrap();
        let b = hurwitz_zeta_with(s, 0.4, &ZetaEvalConfig::new(80, 20, 1e-13).unwrap()).unwrap();
        assert!((a.value - b.value).norm() <= a.error_bound + b.error_bound + 1e-13);
    }
}

#[test]
fn domain_errors() {
    assert!(matches!(riemann_zeta(c(1.0, 0.0)), Err(Error::Pole(_))));
    assert!(matches!(hurwitz_zeta(c(-1.0, 0.0), 0.5), Err(Error::Domain(_))));
    assert!(matches!(hurwitz_zeta(c(2.0, 0.0), 0.0), Err(Error::Domain(_))));
    assert!(lerch_phi(1.5, 0.5, c(2.0, 0.0)).is_err());
    assert!(lambert_w0(-1.0).is_err());
}

#[test]
fn lambert_classical_floor() {
    assert!((lambert_w0(1.0).unwrap() - 0.567_143_290_409_783_8).abs() < 1e-14);
    assert!((lambert_w0(LN_2 / SQRT_2).unwrap() - LN_2 / 2.0).abs() < 1e-14);
    assert!((lambda1_floor(CLASSICAL_SEPARATION, 0.5).unwrap() - LN_2).abs() < 1e-13);
}

#[test]
fn lambert_residual_on_log_grid() {
    for i in 0..=400 {
        let x = 10f64.powf(-12.0 + 24.0 * i as f64 / 400.0);
        let w = lambert_w0(x).unwrap();
        assert!((w * w.exp() - x).abs() <= 1e-12 * x.max(1.0), "x={x}");
    }
}

proptest! {
    #[test]
    fn hurwitz_shift_identity(re in 0.3f64..4.0, im in -60.0f64..60.0, alpha in 0.05f64..1.0) {
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 1e-3);
        let a = hurwitz_zeta(s, alpha).unwrap();
        let b = hurwitz_zeta(s, alpha + 1.0).unwrap();
        let head = (-s * alpha.ln()).exp();
        prop_assert!((a - b - head).norm() < 1e-9 * (1.0 + head.norm()));
    }

    #[test]
    fn lambert_inverts(x in 0.0f64..1e6) {
        let w = lambert_w0(x).unwrap();
        prop_assert!(w >= 0.0);
        prop_assert!((w * w.exp() - x).abs() <= 1e-12 * x.max(1.0));
    }
}
