use std::f64::consts::{LN_2, PI};

use hardy_dirichlet::bounds::{
    dirichlet_window_assembly, hurwitz_lower_bound, l1_tail_from_l2, local_l2_bound, nonvanishing_abscissa,
    short_interval_log_bounds, supnorm_lp_lower_bounds, HurwitzVariant, IntervalInputs, LowerVariant,
    NonvanishingVariant, ShortVariant,
};
use hardy_dirichlet::quadrature::integrate_abs_pow;
use hardy_dirichlet::series::GeneralizedDirichletSeries;
use hardy_dirichlet::special::{c0, kappa_constants, riemann_zeta, CLASSICAL_SEPARATION};
use hardy_dirichlet::{Complex64, Error};
use proptest::prelude::*;

fn classical_inputs(l1: f64, l2: f64) -> IntervalInputs {
    IntervalInputs { l1: Some(l1), l2: Some(l2), c: CLASSICAL_SEPARATION, lambda1: LN_2, k: LN_2 }
}

#[test]
fn mean_square_of_two_terms_in_closed_form() {
    // |a + b 2^(−σ−it)|² integrates to (a² + b²4^(−σ))D + 2ab2^(−σ) sin(D log 2)/log 2.
    let (a, b, sigma) = (1.0, -0.8, 0.5);
    let s = GeneralizedDirichletSeries::classical(&[a, b], sigma).unwrap();
    let w = 2f64.powf(-sigma);
    for d in [0.3, 1.0, 10.0, 37.5] {
        let exact = (a * a + b * b * w * w) * d + 2.0 * a * b * w * (d * LN_2).sin() / LN_2;
        let q = integrate_abs_pow(&s, sigma, 0.0, d, 2.0, 1e-12).unwrap().value;
        assert!((q - exact).abs() < 1e-9 * exact.max(1.0), "D={d}: {q} vs {exact}");
        let bound = local_l2_bound(s.l2_norm(), CLASSICAL_SEPARATION, d).unwrap();
        assert!(exact <= bound.bound_value);
        assert!((bound.bound_value - (d + 3.0 * PI * CLASSICAL_SEPARATION) * (a * a + b * b)).abs() < 1e-12);
    }
}

#[test]
fn bounded_coefficient_constants() {
    let inp = IntervalInputs { l1: None, l2: Some(1.0), c: CLASSICAL_SEPARATION, lambda1: LN_2, k: LN_2 };
    let (m, plus) = short_interval_log_bounds(&inp, 0.05, ShortVariant::BoundedH2 { alt_d: false }).unwrap();
    assert!(plus.is_none());
    // D = max(C, log 4/K) = 2 here.
    assert!((m.constants["D"] - 2.0).abs() < 1e-12);
    let k0 = PI * (2.0 + 0.05f64.powi(2) / (4.0 * CLASSICAL_SEPARATION));
    assert!((m.constants["K0"] - k0).abs() < 1e-12);
    assert!((m.constants["K0"] - 6.285).abs() < 2e-3);
    assert!((m.constants["K1"] - c0() * k0).abs() < 1e-12);
    assert!((m.constants["K1"] - 19.95).abs() < 1e-2);
    assert!((c0() - 3.174_092_008).abs() < 1e-8);
    assert!((c0().exp() - 23.9).abs() < 0.01);
    let (alt, _) = short_interval_log_bounds(&inp, 0.05, ShortVariant::BoundedH2 { alt_d: true }).unwrap();
    assert!((alt.constants["K0"] - PI * (2.0 + 0.05f64.powi(2) / 8.0)).abs() < 1e-12);
}

#[test]
fn kappa_values() {
    let k = kappa_constants();
    assert!((k.full - ((PI.tanh()) + 1.0 / PI).ln()).abs() < 1e-15);
    assert!((k.full - 0.273_518_715_5).abs() < 1e-9);
    assert!((k.half - 0.5 * k.full).abs() < 1e-15);
    assert!((k.alt_full - 0.279_184_892_70).abs() < 1e-9);
}

#[test]
fn assembled_constant_of_the_dirichlet_bound() {
    let zeta = riemann_zeta(Complex64::new(1.7378, 0.0)).unwrap().re;
    assert!((zeta - 1.98357).abs() < 2e-5);
    let anchor = 2.0 - zeta;
    assert!(anchor >= 0.01642);
    let a = dirichlet_window_assembly(0.7378, 0.05, CLASSICAL_SEPARATION, anchor).unwrap();
    assert!((a.product - 15.976).abs() < 0.05, "{a:?}");
    assert!((a.prefactor - PI * (0.7378 + 0.0025 / (4.0 * 0.7378))).abs() < 1e-14);
}

#[test]
fn hurwitz_bounds_stay_in_log_space() {
    let r = hurwitz_lower_bound(0.5, 1e-4, HurwitzVariant::HurwitzLerch).unwrap();
    assert!(r.bound_value.is_finite() && r.bound_value < -1e5);
    assert!(r.linear_value().is_none());
    let u = hurwitz_lower_bound(0.5, 0.05, HurwitzVariant::Uniform).unwrap();
    let expected = 7.0 / (6.0 * 0.05) * 0.05f64.ln() - 180.0 * 10f64.ln();
    assert!((u.bound_value - expected).abs() < 1e-10);
    assert!(matches!(hurwitz_lower_bound(0.5, 0.1, HurwitzVariant::Uniform), Err(Error::OutOfValidity(_))));
    assert!(hurwitz_lower_bound(1.2, 0.05, HurwitzVariant::Uniform).is_err());
}

#[test]
fn missing_norms_are_reported() {
    let inp = IntervalInputs { l1: None, l2: None, c: 1.0, lambda1: 1.0, k: 1.0 };
    assert!(short_interval_log_bounds(&inp, 0.1, ShortVariant::L1).is_err());
    assert!(supnorm_lp_lower_bounds(&inp, 0.1, 2.0, LowerVariant::LpH2).is_err());
    assert!(supnorm_lp_lower_bounds(&classical_inputs(1.0, 1.0), 0.1, 0.5, LowerVariant::LpL1).is_err());
}

fn short_variants() -> [ShortVariant; 6] {
    [
        ShortVariant::L1,
        ShortVariant::H2 { xi: None },
        ShortVariant::H2 { xi: Some(0.5) },
        ShortVariant::BoundedH2 { alt_d: false },
        ShortVariant::BoundedH2 { alt_d: true },
        ShortVariant::BoundedL1,
    ]
}

proptest! {
    #[test]
    fn bounds_are_finite_in_log_space(
        l2 in 1.0f64..1e6,
        ratio in 1.0f64..1e3,
        delta in 1e-4f64..1.0,
        p in 1.0f64..4.0,
    ) {
        let inp = classical_inputs(l2 * ratio, l2);
        for v in LowerVariant::ALL {
            let r = supnorm_lp_lower_bounds(&inp, delta, p, v).unwrap();
            prop_assert!(r.log_space);
            prop_assert!(r.bound_value.is_finite() && r.bound_value <= 0.0, "{v:?}: {}", r.bound_value);
        }
        for v in short_variants() {
            let (m, plus) = short_interval_log_bounds(&inp, delta, v).unwrap();
            prop_assert!(m.bound_value.is_finite() && m.bound_value >= 0.0, "{v:?}: {}", m.bound_value);
            if let Some(plus) = plus {
                prop_assert!(plus.bound_value.is_finite() && plus.bound_value >= 0.0);
            }
        }
    }

    #[test]
    fn nonvanishing_root_respects_cap(l2 in 0.0f64..1e4, xi in 0.01f64..0.99, c in 0.01f64..5.0, rate in 0.05f64..3.0) {
        let r = nonvanishing_abscissa(NonvanishingVariant::H2 { l2_minus_1: l2 }, c, rate, xi).unwrap();
        prop_assert!(r.constants["residual"] <= 1e-10);
        prop_assert!(r.bound_value <= r.constants["cap"] + 1e-9);
        let b = nonvanishing_abscissa(NonvanishingVariant::BoundedCoeff, c, rate, xi).unwrap();
        prop_assert!(b.constants["residual"] <= 1e-10);
        prop_assert!(b.bound_value <= b.constants["cap"] + 1e-9);
    }

    #[test]
    fn series_stays_away_from_zero_beyond_abscissa(
        a in prop::collection::vec(-1.0f64..1.0, 1..16),
        xi in 0.05f64..0.95,
    ) {
        let mut coeffs = vec![1.0];
        coeffs.extend(a);
        let s = GeneralizedDirichletSeries::classical(&coeffs, 0.5).unwrap();
        let p = s.class_params().unwrap();
        let l2 = s.minus_leading().l2_norm();
        let x = nonvanishing_abscissa(NonvanishingVariant::H2 { l2_minus_1: l2 }, p.c, p.k, xi).unwrap().bound_value;
        let tail = l1_tail_from_l2(l2, p.c, p.k, x.max(1e-9)).unwrap().bound_value;
        prop_assert!(x == 0.0 || tail <= 1.0 - xi + 1e-9);
        for i in 0..=400 {
            let z = s.eval_head(Complex64::new(0.5 + x, i as f64 * 0.25)).norm();
            prop_assert!(z >= xi - 1e-9 && z <= 2.0 - xi + 1e-9, "t={}: {z}", i as f64 * 0.25);
        }
    }
}
