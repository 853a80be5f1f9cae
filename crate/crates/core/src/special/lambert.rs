use crate::error::{Error, Result};

const MAX_ITER: usize = 100;

/// Principal branch `W₀(x)` for `x ≥ 0`: the unique `w ≥ 0` with `w·eʷ = x`.
///
/// Newton iteration from `log(1 + x)`, which lies above the root, so the
/// iterates decrease monotonically onto it. A Halley step replaces Newton
/// whenever Newton fails to shrink the step.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("lambert_w0 requires finite x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = x.ln_1p();
    let mut last_step = f64::INFINITY;
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            return Ok(w);
        }
        let fp = ew * (w + 1.0);
        let mut step = f / fp;
        if step.abs() >= last_step {
            // Halley
            let fpp = ew * (w + 2.0);
            step = f / (fp - 0.5 * f * fpp / fp);
        }
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs() {
            return Ok(w);
        }
        last_step = step.abs();
    }
    Ok(w)
}
