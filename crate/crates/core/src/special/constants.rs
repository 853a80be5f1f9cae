use std::f64::consts::{LN_2, PI, SQRT_2};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Separation constant of the classical exponents `log(n+1)` at σ = 1/2,
/// `1/(√2 log 2)`.
pub const CLASSICAL_SEPARATION: f64 = 1.0 / (SQRT_2 * LN_2);

/// κ exactly as it is printed next to the tanh formula.
pub const KAPPA_PRINTED: f64 = 0.273_518_715_5;

/// Alternative κ printed for the unsymmetric interval division.
pub const KAPPA_ALT_PRINTED: f64 = 0.279_184_892_70;

/// The logarithmic-integral constants.
///
/// `half` is `(1/2)·log(tanh π + 1/π)` and is what every bound uses; the
/// printed decimals only agree with the formulas when the 1/2 is dropped,
/// so `full` and `alt_full` are kept for reproduction checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaConstants {
    pub half: f64,
    pub full: f64,
    pub printed: f64,
    pub alt_half: f64,
    pub alt_full: f64,
    pub alt_printed: f64,
    pub c0: f64,
}

pub fn kappa_constants() -> KappaConstants {
    let full = (PI.tanh() + 1.0 / PI).ln();
    let alt_full = (1.0 / PI.tanh() + 1.0 / PI).ln();
    KappaConstants {
        half: 0.5 * full,
        full,
        printed: KAPPA_PRINTED,
        alt_half: 0.5 * alt_full,
        alt_full,
        alt_printed: KAPPA_ALT_PRINTED,
        c0: c0(),
    }
}

/// `C₀ = κ + log(1 + 3π) + log 2` with the half-κ.
pub fn c0() -> f64 {
    0.5 * (PI.tanh() + 1.0 / PI).ln() + (1.0 + 3.0 * PI).ln() + LN_2
}

/// `e^(−γ) π² δ² / 24`, the leading term of `inf_T ∫_T^{T+δ} |ζ(1+it)| dt`.
pub fn riemann_asymptotic_target(delta: f64) -> f64 {
    (-EULER_GAMMA).exp() * PI * PI * delta * delta / 24.0
}
