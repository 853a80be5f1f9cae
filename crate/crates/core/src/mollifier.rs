//! Compactly supported bump `Φ` on `[0, 1/175]`, its Fourier transform
//! `Φ̂(x) = ∫ Φ(t) e^(−ixt) dt`, and the mollified coefficients
//! `bₙ = aₙ Φ̂(δλₙ)`.
//!
//! The profile is a smooth plateau: `ψ(u) = S(u/ε) S((1−u)/ε)` on `[0, 1]`
//! with the smooth step `S(v) = f(v)/(f(v) + f(1−v))`, `f(v) = e^(−1/v)`.
//! Since `S(v) + S(1−v) = 1`, `∫ψ = 1 − ε`, so `Φ(x) = 175 ψ(175x)/(1−ε)`
//! has unit mass and peak `175/(1−ε)`. With `ε = 0.004` the peak is
//! `≈ 175.70 ≤ 176`. (The classical bump `exp(−1/(u(1−u)))` normalizes to a
//! peak near 455, far above 176.)

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{adaptive_simpson, gauss_legendre_64};
use crate::series::GeneralizedDirichletSeries;

/// `1/175`, the right end of the support.
pub const SUPPORT: f64 = 1.0 / 175.0;
/// Ceiling the bump must respect.
pub const PEAK_CEILING: f64 = 176.0;
/// Default edge width of the plateau (in units of the support).
pub const DEFAULT_EDGE: f64 = 0.004;

fn smooth_step(v: f64) -> f64 {
    if v <= 0.0 {
        0.0
    } else if v >= 1.0 {
        1.0
    } else {
        let a = (-1.0 / v).exp();
        let b = (-1.0 / (1.0 - v)).exp();
        a / (a + b)
    }
}

/// Composite Gauss–Legendre on `[0, 1]` with `panels` × 64 nodes.
fn gl01<T>(panels: usize, f: impl Fn(f64) -> T) -> T
where
    T: std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T> + Default,
{
    gl(0.0, 1.0, panels, f)
}

fn gl<T>(a: f64, b: f64, panels: usize, f: impl Fn(f64) -> T) -> T
where
    T: std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T> + Default,
{
    let (x, w) = gauss_legendre_64();
    let h = (b - a) / panels as f64;
    let mut acc = T::default();
    for p in 0..panels {
        let c = a + (p as f64 + 0.5) * h;
        for (xi, wi) in x.iter().zip(w) {
            acc = acc + f(c + 0.5 * h * xi) * (0.5 * h * wi);
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BumpFunction {
    edge: f64,
    normalization: f64,
}

impl Default for BumpFunction {
    fn default() -> Self {
        BumpFunction::new(DEFAULT_EDGE).expect("default edge is valid")
    }
}

impl BumpFunction {
    pub fn new(edge: f64) -> Result<Self> {
        if !(edge > 0.0 && edge < 0.5) {
            return Err(Error::InvalidParameter(format!("edge width must lie in (0, 1/2), got {edge}")));
        }
        Ok(BumpFunction { edge, normalization: 1.0 / (1.0 - edge) })
    }

    pub fn edge(&self) -> f64 {
        self.edge
    }

    /// Factor multiplying `175·ψ(175x)`.
    pub fn normalization(&self) -> f64 {
        self.normalization
    }

    fn profile(&self, u: f64) -> f64 {
        if u <= 0.0 || u >= 1.0 {
            0.0
        } else {
            smooth_step(u / self.edge) * smooth_step((1.0 - u) / self.edge)
        }
    }

    /// `Φ(x)`.
    pub fn phi(&self, x: f64) -> f64 {
        175.0 * self.normalization * self.profile(175.0 * x)
    }

    /// `max Φ = 175/(1−ε)`, attained on the plateau.
    pub fn peak(&self) -> f64 {
        175.0 * self.normalization
    }

    /// `∫₀¹ S(v) e^(−iωv) dv`.
    fn edge_transform(&self, omega: f64) -> Complex64 {
        gl01(4, |v| Complex64::from_polar(smooth_step(v), -omega * v))
    }

    /// `Φ̂(x) = ∫ Φ(t) e^(−ixt) dt`: plateau in closed form, edges by Gauss–Legendre.
    pub fn phi_hat(&self, x: f64) -> Complex64 {
        let y = x / 175.0;
        let e = self.edge;
        let width = 1.0 - 2.0 * e;
        let z = 0.5 * y * width;
        let sinc = if z.abs() < 1e-8 { 1.0 - z * z / 6.0 } else { z.sin() / z };
        let plateau = Complex64::from_polar(width * sinc, -0.5 * y);
        let j = self.edge_transform(y * e);
        let left = j * e;
        let right = Complex64::from_polar(e, -y) * j.conj();
        (plateau + left + right) * self.normalization
    }

    /// `Φ̂′(x) = −i ∫ t Φ(t) e^(−ixt) dt`, by Gauss–Legendre on the two edges
    /// and the plateau separately.
    pub fn phi_hat_derivative(&self, x: f64) -> Complex64 {
        let y = x / 175.0;
        let e = self.edge;
        let g = |u: f64| Complex64::from_polar(u * self.profile(u), -y * u);
        let edge_panels = ((y.abs() * e / 8.0).ceil() as usize).clamp(4, 1 << 16);
        let mid_panels = ((y.abs() / 8.0).ceil() as usize).clamp(2, 1 << 16);
        let m = gl(0.0, e, edge_panels, g) + gl(e, 1.0 - e, mid_panels, g) + gl(1.0 - e, 1.0, edge_panels, g);
        m * Complex64::new(0.0, -self.normalization / 175.0)
    }

    /// `∫ Φ(t)² dt`.
    pub fn l2_sq(&self) -> f64 {
        let s2: f64 = gl01(8, |v| smooth_step(v).powi(2));
        175.0 * self.normalization.powi(2) * ((1.0 - 2.0 * self.edge) + 2.0 * self.edge * s2)
    }

    /// `∫₀^∞ |Φ̂(y)|² dy = π ∫Φ²` for this transform convention.
    pub fn half_line_hat_l2_sq(&self) -> f64 {
        PI * self.l2_sq()
    }

    /// `bₙ = aₙ Φ̂(δλₙ)` for a finite series over logarithmic exponents with `|aₙ| ≤ 1`.
    pub fn mollify(&self, series: &GeneralizedDirichletSeries, delta: f64) -> Result<GeneralizedDirichletSeries> {
        if !(delta > 0.0) {
            return Err(Error::InvalidParameter(format!("delta must be positive, got {delta}")));
        }
        if series.exponents().log_family().is_none() {
            return Err(Error::InvalidParameter("mollification needs classical or Hurwitz exponents".into()));
        }
        if !series.is_finite_polynomial() {
            return Err(Error::InvalidParameter(
                "series with an analytic tail cannot be mollified term by term; use weighted_square_sum".into(),
            ));
        }
        if series.coefficients().iter().any(|a| a.norm() > 1.0 + 1e-12) {
            return Err(Error::InvalidParameter("mollification needs |a_n| <= 1".into()));
        }
        let coefficients = series
            .coefficients()
            .iter()
            .enumerate()
            .map(|(n, a)| if n == 0 { *a } else { a * self.phi_hat(delta * series.lambda(n)) })
            .collect();
        GeneralizedDirichletSeries::new(series.exponents().clone(), coefficients, series.sigma())
    }

    /// `Σ_{n≥1} |Φ̂(δ(log(n+α) − log α))|² / (n+α)`, the weighted square
    /// sum of the mollified coefficients when `|aₙ| = 1` (an upper bound for
    /// `|aₙ| ≤ 1`).
    ///
    /// Terms `n < n_direct` are summed; the rest is
    /// `∫_N^∞ f + f(N)/2 − f'(N)/12` with
    /// `∫_N^∞ f = δ⁻¹(π∫Φ² − ∫₀^Y |Φ̂|²)`, `Y = δ(log(N+α) − log α)`.
    pub fn weighted_square_sum(&self, alpha: f64, delta: f64, n_direct: usize) -> Result<WeightedSquareSum> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParameter(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        if !(delta > 0.0) {
            return Err(Error::InvalidParameter(format!("delta must be positive, got {delta}")));
        }
        let n_direct = n_direct.max(16);
        let f = |x: f64| -> f64 {
            let u = x + alpha;
            self.phi_hat(delta * (u / alpha).ln()).norm_sqr() / u
        };
        let mut direct = 0.0;
        for n in 1..n_direct {
            direct += f(n as f64);
        }
        let nn = n_direct as f64;
        let y = delta * ((nn + alpha) / alpha).ln();
        let head = adaptive_simpson(|t| Ok(self.phi_hat(t).norm_sqr()), 0.0, y, 1e-10, 64, None)?;
        let total = self.half_line_hat_l2_sq();
        let integral = (total - head.value) / delta;
        let h = 0.5;
        let fprime = (f(nn + h) - f(nn - h)) / (2.0 * h);
        let tail = integral + 0.5 * f(nn) - fprime / 12.0;
        Ok(WeightedSquareSum { value: direct + tail, direct, tail, n_direct, plancherel_total: total })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeightedSquareSum {
    pub value: f64,
    pub direct: f64,
    pub tail: f64,
    pub n_direct: usize,
    /// `∫₀^∞ |Φ̂|²`.
    pub plancherel_total: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_mass_and_peak() {
        let b = BumpFunction::default();
        assert!((b.phi_hat(0.0).re - 1.0).abs() < 1e-12);
        assert!(b.phi_hat(0.0).im.abs() < 1e-15);
        assert!(b.peak() <= PEAK_CEILING);
        assert_eq!(b.phi(-1e-9), 0.0);
        assert_eq!(b.phi(SUPPORT + 1e-12), 0.0);
        assert!((b.phi(0.5 * SUPPORT) - b.peak()).abs() < 1e-9);
    }

    #[test]
    fn conjugate_symmetry() {
        let b = BumpFunction::default();
        for &x in &[0.3, 7.0, 150.0, 999.0] {
            let (p, m) = (b.phi_hat(x), b.phi_hat(-x));
            assert!((p - m.conj()).norm() < 1e-14);
        }
    }

    #[test]
    fn mollify_keeps_leading_coefficient() {
        let b = BumpFunction::default();
        let s = GeneralizedDirichletSeries::classical(&[1.0, 1.0, -0.5], 0.5).unwrap();
        let m = b.mollify(&s, 0.04).unwrap();
        assert_eq!(m.coefficients()[0], Complex64::new(1.0, 0.0));
        let big = GeneralizedDirichletSeries::classical(&[1.0, 2.0], 0.5).unwrap();
        assert!(b.mollify(&big, 0.04).is_err());
        let lin = GeneralizedDirichletSeries::new(
            crate::series::ExponentSequence::linear(1.0).unwrap(),
            vec![Complex64::new(1.0, 0.0)],
            0.0,
        )
        .unwrap();
        assert!(b.mollify(&lin, 0.04).is_err());
    }
}
