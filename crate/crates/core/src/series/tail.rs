use crate::error::{Error, Result};

/// Bounds on `Σ_{k≥0} u_k^(−p) (log u_k)^(−r)` with `u_k = u0 + k`, `u0 > 1`, `r ≥ 0`.
///
/// The summand is non-increasing on `[u0, ∞)`, so the sum is squeezed between
/// `∫_{u0}^∞ f` and `f(u0) + ∫_{u0}^∞ f`. Divergent tails return
/// [`Error::Divergent`].
pub fn power_log_tail(u0: f64, p: f64, r: f64) -> Result<(f64, f64)> {
    if !(u0 > 1.0) {
        return Err(Error::InvalidParameter(format!("tail start must exceed 1, got {u0}")));
    }
    if r < 0.0 || p < 0.0 {
        return Err(Error::Divergent(format!("tail exponents p={p}, r={r} do not decay")));
    }
    let lu = u0.ln();
    let first = (-p * lu - r * lu.ln()).exp();
    let (lo, hi) = if (p - 1.0).abs() <= 1e-14 {
        if r <= 1.0 {
            return Err(Error::Divergent(format!("tail u^-1 log^-{r} u diverges")));
        }
        let v = lu.powf(1.0 - r) / (r - 1.0);
        (v, v)
    } else if p > 1.0 {
        let pow_part = (-(p - 1.0) * lu).exp() / (p - 1.0);
        if r == 0.0 {
            (pow_part, pow_part)
        } else {
            let mut hi = pow_part * lu.powf(-r);
            if r > 1.0 {
                hi = hi.min((-(p - 1.0) * lu).exp() * lu.powf(1.0 - r) / (r - 1.0));
            }
            // Lower bound: integrate over [u0, u0²] with the log factor frozen at its minimum there.
            let lo = 2f64.powf(-r) * lu.powf(-r) * (pow_part - (-2.0 * (p - 1.0) * lu).exp() / (p - 1.0));
            (lo.max(0.0), hi)
        }
    } else {
        return Err(Error::Divergent(format!("tail u^-{p} diverges")));
    };
    Ok((lo.max(first), first + hi))
}
