use super::{log_plus, non_negative, positive, BoundReport, Side, TheoremId};
use crate::error::{Error, Result};

/// Which hypothesis the nonvanishing abscissa is derived from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NonvanishingVariant {
    /// Absolutely convergent: closed form in `‖L − 1‖₁`.
    L1 { l1_minus_1: f64 },
    /// Square-summable: root of `√(1 + C/(2x)) e^(−rate·x) ‖L − 1‖₂ = 1 − ξ`.
    H2 { l2_minus_1: f64 },
    /// Bounded coefficients `|aₙ| ≤ 1`: root of `(1 + C/x) e^(−rate·x) = 1 − ξ`.
    BoundedCoeff,
}

/// Root of a strictly decreasing `f` on `(0, ∞)`, bracketed on `[1e-9, x_hi]`
/// with `x_hi` doubled until `f(x_hi) < 0`. Returns `0` if `f(1e-9) ≤ 0`.
pub fn bisect_decreasing(f: impl Fn(f64) -> f64, tol: f64) -> Result<f64> {
    let mut lo = 1e-9;
    if f(lo) <= 0.0 {
        return Ok(0.0);
    }
    let mut hi = 1.0;
    while f(hi) >= 0.0 {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::Convergence("root bracket exceeded 1e12".into()));
        }
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol * 1e-3 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Shift `x_ξ` such that `ξ ≤ |L(s)| ≤ 2 − ξ` for `Re(s) ≥ σ + x_ξ` (for `a₀ = 1`).
///
/// `rate` is `λ₁` (single series) or `K` (whole class). The report carries
/// the residual of the defining equation and the printed caps
/// `max(C, rate⁻¹ log⁺(√3‖L−1‖₂ / (√2(1−ξ))))` (H2) or
/// `max(C, rate⁻¹ log⁺(2/(1−ξ)))` (bounded coefficients).
pub fn nonvanishing_abscissa(variant: NonvanishingVariant, c: f64, rate: f64, xi: f64) -> Result<BoundReport> {
    if !(xi > 0.0 && xi < 1.0) {
        return Err(Error::InvalidParameter(format!("xi must lie in (0, 1), got {xi}")));
    }
    positive("rate", rate)?;
    non_negative("C", c)?;
    let target = 1.0 - xi;
    match variant {
        NonvanishingVariant::L1 { l1_minus_1 } => {
            non_negative("norm", l1_minus_1)?;
            let x = log_plus(l1_minus_1 / target) / rate;
            Ok(BoundReport::new(TheoremId::T13, Side::Upper, x)
                .input("norm_l1_minus_1", l1_minus_1)
                .input("rate", rate)
                .input("xi", xi)
                .constant("residual", 0.0))
        }
        NonvanishingVariant::H2 { l2_minus_1 } => {
            non_negative("norm", l2_minus_1)?;
            let g = |x: f64| (1.0 + c / (2.0 * x)).sqrt() * (-rate * x).exp() * l2_minus_1 - target;
            let x = if l2_minus_1 == 0.0 { 0.0 } else { bisect_decreasing(g, 1e-10)? };
            let residual = if x > 0.0 { g(x).abs() } else { 0.0 };
            let cap = c.max(log_plus(3f64.sqrt() * l2_minus_1 / (2f64.sqrt() * target)) / rate);
            Ok(BoundReport::new(TheoremId::T14, Side::Upper, x)
                .input("norm_l2_minus_1", l2_minus_1)
                .input("C", c)
                .input("rate", rate)
                .input("xi", xi)
                .constant("residual", residual)
                .constant("cap", cap))
        }
        NonvanishingVariant::BoundedCoeff => {
            let g = |x: f64| (1.0 + c / x) * (-rate * x).exp() - target;
            let x = bisect_decreasing(g, 1e-10)?;
            let residual = if x > 0.0 { g(x).abs() } else { 0.0 };
            let cap = c.max(log_plus(2.0 / target) / rate);
            Ok(BoundReport::new(TheoremId::L13, Side::Upper, x)
                .input("C", c)
                .input("rate", rate)
                .input("xi", xi)
                .constant("residual", residual)
                .constant("cap", cap))
        }
    }
}
