//! Hurwitz and Riemann zeta by Euler–Maclaurin summation.
//!
//! For `f(x) = (x+α)^(−s)` and cutoff `N`, with `u = N + α`:
//!
//! ```text
//! ζ(s, α) = Σ_{n<N} (n+α)^(−s) + u^(1−s)/(s−1) + u^(−s)/2
//!         + Σ_{k=1}^{M} B_2k/(2k)! · (s)_(2k−1) · u^(−s−2k+1) + R_M
//! ```
//!
//! The remainder is bounded by `max(2, |s+2M+1|/(σ+2M+1))` times the first
//! omitted term. `N` is raised until that bound closes below the target.

use num_complex::Complex64;

use super::bernoulli::{bernoulli_2k, BERNOULLI_TERMS};
use crate::error::{Error, Result};

pub(crate) const MAX_CUTOFF: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEvalConfig {
    /// Minimum cutoff `N`; raised automatically when `|s|` is large.
    pub cutoff: usize,
    /// Maximum number of Bernoulli correction terms `M`.
    pub bernoulli_terms: usize,
    /// Accepted error, relative to `max(1, |value|)`: summation rounding
    /// grows with the value, so an absolute target is not always reachable.
    pub target_error: f64,
}

impl Default for ZetaEvalConfig {
    fn default() -> Self {
        Self { cutoff: 10, bernoulli_terms: BERNOULLI_TERMS, target_error: 1e-12 }
    }
}

impl ZetaEvalConfig {
    pub fn new(cutoff: usize, bernoulli_terms: usize, target_error: f64) -> Result<Self> {
        let cfg = Self { cutoff, bernoulli_terms, target_error };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_target(target_error: f64) -> Self {
        Self { target_error, ..Self::default() }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.cutoff < 10 {
            return Err(Error::InvalidParameter(format!("cutoff {} < 10", self.cutoff)));
        }
        if !(1..=BERNOULLI_TERMS).contains(&self.bernoulli_terms) {
            return Err(Error::InvalidParameter(format!(
                "bernoulli_terms {} outside 1..={BERNOULLI_TERMS}",
                self.bernoulli_terms
            )));
        }
        if !(self.target_error > 0.0) {
            return Err(Error::InvalidParameter("target_error must be positive".into()));
        }
        Ok(())
    }
}

/// A zeta value together with its error budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaValue {
    pub value: Complex64,
    pub error_bound: f64,
    pub cutoff: usize,
    pub terms: usize,
}

pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}

pub fn riemann_zeta_with(s: Complex64, cfg: &ZetaEvalConfig) -> Result<ZetaValue> {
    hurwitz_zeta_with(s, 1.0, cfg)
}

pub fn hurwitz_zeta(s: Complex64, alpha: f64) -> Result<Complex64> {
    hurwitz_zeta_with(s, alpha, &ZetaEvalConfig::default()).map(|z| z.value)
}

/// `ζ(s, α) = Σ_{n≥0} (n+α)^(−s)` for `Re(s) > 0`, `s ≠ 1`.
///
/// `α` may exceed 1 (shifted Hurwitz families); it must be positive.
pub fn hurwitz_zeta_with(s: Complex64, alpha: f64, cfg: &ZetaEvalConfig) -> Result<ZetaValue> {
    cfg.validate()?;
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!("hurwitz_zeta requires alpha > 0, got {alpha}")));
    }
    if !(s.re > 0.0) || !s.im.is_finite() {
        return Err(Error::Domain(format!("hurwitz_zeta requires Re(s) > 0, got {s}")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("1".into()));
    }
    let mut n = cfg.cutoff.max(auto_cutoff(s));
    let mut best = f64::INFINITY;
    while n <= MAX_CUTOFF {
        let (value, err, terms) = euler_maclaurin(s, alpha, n, cfg);
        if err <= cfg.target_error * value.norm().max(1.0) {
            return Ok(ZetaValue { value, error_bound: err, cutoff: n, terms });
        }
        best = best.min(err);
        n *= 2;
    }
    Err(Error::PrecisionUnreachable { target: cfg.target_error, achieved: best })
}

fn auto_cutoff(s: Complex64) -> usize {
    (s.norm() / std::f64::consts::PI).ceil() as usize + 10
}

/// `(n+α)^(−s)` for real positive base.
#[inline]
pub(crate) fn real_pow_neg(base: f64, s: Complex64) -> Complex64 {
    let l = base.ln();
    let mag = (-s.re * l).exp();
    let (sin, cos) = (s.im * l).sin_cos();
    Complex64::new(mag * cos, -mag * sin)
}

fn euler_maclaurin(s: Complex64, alpha: f64, n: usize, cfg: &ZetaEvalConfig) -> (Complex64, f64, usize) {
    let mut head = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    for k in 0..n {
        let t = real_pow_neg(k as f64 + alpha, s);
        abs_sum += t.norm();
        head += t;
    }
    let u = n as f64 + alpha;
    let u_s = real_pow_neg(u, s);
    let one = Complex64::new(1.0, 0.0);
    let mut total = head + u_s * u / (s - one) + u_s * 0.5;

    // term_k = B_2k/(2k)! (s)_(2k−1) u^(−s−2k+1)
    let mut poch = s; // (s)_(2k−1)
    let mut upow = u_s / u; // u^(−s−2k+1)
    let mut fact = 2.0; // (2k)!
    let mut used = 0;
    let mut err = f64::INFINITY;
    for k in 1..=cfg.bernoulli_terms {
        let term = poch * upow * (bernoulli_2k(k) / fact);
        let next = next_term_norm(s, poch, upow, u, k, fact);
        total += term;
        used = k;
        let factor = 2f64.max((s + (2 * k + 1) as f64).norm() / (s.re + (2 * k + 1) as f64));
        let e = factor * next;
        err = e;
        if e <= 0.25 * cfg.target_error || k == cfg.bernoulli_terms {
            break;
        }
        if next > term.norm() && k > 1 {
            // asymptotic series started to diverge: stop here with the current bound
            break;
        }
        let a = (2 * k) as f64;
        poch = poch * (s + a) * (s + a - 1.0);
        upow /= u * u;
        fact *= (a + 1.0) * (a + 2.0);
    }
    let rounding = 4.0 * f64::EPSILON * abs_sum;
    (total, err + rounding, used)
}

fn next_term_norm(s: Complex64, poch: Complex64, upow: Complex64, u: f64, k: usize, fact: f64) -> f64 {
    if k >= BERNOULLI_TERMS {
        // no tabulated B_(2k+2): extrapolate with |B_2k+2/(2k+2)!| ≈ |B_2k/(2k)!| / (2π)²
        let a = (2 * k) as f64;
        let ratio = (s + a).norm() * (s + a - 1.0).norm() / (u * u * 4.0 * std::f64::consts::PI.powi(2));
        return (poch * upow * (bernoulli_2k(k) / fact)).norm() * ratio;
    }
    let a = (2 * k) as f64;
    let poch2 = poch * (s + a) * (s + a - 1.0);
    let upow2 = upow / (u * u);
    let fact2 = fact * (a + 1.0) * (a + 2.0);
    (poch2 * upow2 * (bernoulli_2k(k + 1) / fact2)).norm()
}
