//! Lerch zeta `φ(α, β; s) = Σ_{n≥0} e^(2πinα) (n+β)^(−s)`.
//!
//! Euler–Maclaurin is applied to `f(x) = e^(iωx)(x+β)^(−s)` where `ω` is
//! `2πα` folded into `[−π, π]`. The tail integral `∫_N^∞ f` has no closed
//! form; it is expanded by repeated integration by parts,
//!
//! ```text
//! ∫_N^∞ e^(iωx)(x+β)^(−s) dx = −e^(iωN) Σ_j (s)_j u^(−s−j) / (iω)^(j+1),   u = N + β,
//! ```
//!
//! whose remainder after `J` terms is at most
//! `|(s)_J| u^(1−σ−J) / (|ω|^J (σ+J−1))`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::{bernoulli_2k, BERNOULLI_TERMS};
use super::zeta::{hurwitz_zeta_with, real_pow_neg, ZetaEvalConfig, ZetaValue, MAX_CUTOFF};
use crate::error::{Error, Result};

const MAX_IBP_TERMS: usize = 200;

pub fn lerch_phi(alpha: f64, beta: f64, s: Complex64) -> Result<Complex64> {
    lerch_phi_with(alpha, beta, s, &ZetaEvalConfig::default()).map(|z| z.value)
}

pub fn lerch_phi_with(alpha: f64, beta: f64, s: Complex64, cfg: &ZetaEvalConfig) -> Result<ZetaValue> {
    cfg.validate()?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!("lerch_phi requires 0 < alpha <= 1, got {alpha}")));
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Domain(format!("lerch_phi requires 0 < beta <= 1, got {beta}")));
    }
    if !(s.re > 0.0) || !s.im.is_finite() {
        return Err(Error::Domain(format!("lerch_phi requires Re(s) > 0, got {s}")));
    }
    if alpha == 1.0 {
        return hurwitz_zeta_with(s, beta, cfg);
    }
    let omega = 2.0 * PI * (alpha - alpha.round());
    let mut n = cfg
        .cutoff
        .max((4.0 * (s.norm() + 60.0) / PI).ceil() as usize)
        .max((2.0 * (s.norm() + 40.0) / omega.abs()).ceil() as usize);
    let mut best = f64::INFINITY;
    while n <= MAX_CUTOFF {
        let (value, err, terms) = euler_maclaurin(s, omega, beta, n, cfg);
        if err <= cfg.target_error * value.norm().max(1.0) {
            return Ok(ZetaValue { value, error_bound: err, cutoff: n, terms });
        }
        best = best.min(err);
        n *= 2;
    }
    Err(Error::PrecisionUnreachable { target: cfg.target_error, achieved: best })
}

fn euler_maclaurin(s: Complex64, omega: f64, beta: f64, n: usize, cfg: &ZetaEvalConfig) -> (Complex64, f64, usize) {
    let mut head = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    for k in 0..n {
        let phase = Complex64::from_polar(1.0, omega * k as f64);
        let t = phase * real_pow_neg(k as f64 + beta, s);
        abs_sum += t.norm();
        head += t;
    }
    let u = n as f64 + beta;
    let e_n = Complex64::from_polar(1.0, omega * n as f64);
    let u_s = real_pow_neg(u, s);
    let iw = Complex64::new(0.0, omega);

    let (integral, ibp_err) = tail_integral(s, iw, u, u_s, e_n);

    // g^(i)(N) = (−1)^i (s)_i u^(−s−i), enough for f^(2M−1) and one more for the estimate
    let m_max = cfg.bernoulli_terms.min(BERNOULLI_TERMS);
    let order = 2 * m_max + 1;
    let mut g = Vec::with_capacity(order + 1);
    let mut poch = Complex64::new(1.0, 0.0);
    let mut upow = u_s;
    for i in 0..=order {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        g.push(poch * upow * sign);
        poch *= s + i as f64;
        upow /= u;
    }
    let iw_pows: Vec<Complex64> = (0..=order).map(|j| iw.powu(j as u32)).collect();
    let deriv = |m: usize| -> Complex64 {
        // f^(m)(N) = e^(iωN) Σ_i C(m,i) (iω)^(m−i) g^(i)(N)
        let mut acc = Complex64::new(0.0, 0.0);
        let mut binom = 1.0;
        for i in 0..=m {
            acc += iw_pows[m - i] * g[i] * binom;
            binom = binom * (m - i) as f64 / (i + 1) as f64;
        }
        e_n * acc
    };

    let mut total = head + integral + e_n * u_s * 0.5;
    let mut fact = 2.0;
    let mut used = 0;
    let mut err = f64::INFINITY;
    for k in 1..=m_max {
        let term = -deriv(2 * k - 1) * (bernoulli_2k(k) / fact);
        total += term;
        used = k;
        let next = if k < BERNOULLI_TERMS {
            let a = (2 * k) as f64;
            (deriv(2 * k + 1) * (bernoulli_2k(k + 1) / (fact * (a + 1.0) * (a + 2.0)))).norm()
        } else {
            term.norm()
        };
        err = 2.0 * next;
        if err <= 0.25 * cfg.target_error || (next > term.norm() && k > 1) {
            break;
        }
        let a = (2 * k) as f64;
        fact *= (a + 1.0) * (a + 2.0);
    }
    let rounding = 4.0 * f64::EPSILON * abs_sum;
    (total, err + ibp_err + rounding, used)
}

fn tail_integral(s: Complex64, iw: Complex64, u: f64, u_s: Complex64, e_n: Complex64) -> (Complex64, f64) {
    let w = iw.im.abs();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut poch = Complex64::new(1.0, 0.0);
    let mut upow = u_s;
    let mut denom = iw;
    for j in 0..MAX_IBP_TERMS {
        sum += poch * upow / denom;
        poch *= s + j as f64;
        upow /= u;
        denom *= iw;
        let jj = (j + 1) as f64;
        let rem = poch.norm() * u.powf(1.0 - s.re - jj) / (w.powf(jj) * (s.re + jj - 1.0));
        if rem < 1e-17 * sum.norm().max(1e-300) || (j > 0 && rem < 1e-18) {
            return (-e_n * sum, rem);
        }
    }
    let jj = MAX_IBP_TERMS as f64;
    let rem = poch.norm() * u.powf(1.0 - s.re - jj) / (w.powf(jj) * (s.re + jj - 1.0));
    (-e_n * sum, rem)
}
