//! Adaptive integration of `|L|^p`, `log±|L|` and Poisson-weighted
//! logarithmic integrals along vertical lines, plus interval suprema.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::GeneralizedDirichletSeries;

/// Recursion depth limit per initial panel.
pub const MAX_DEPTH: u32 = 20;
/// Hard cap on accepted panels.
pub const MAX_PANELS: usize = 1 << 20;
/// Values of `|L|` below this are treated as zeros of `L`.
pub const ZERO_FLOOR: f64 = 1e-300;
/// `−log(ZERO_FLOOR)`, rounded up.
pub const LOG_FLOOR_CAP: f64 = 690.0;

/// Something that can be evaluated at a complex point.
pub trait Evaluator: Sync {
    fn eval(&self, s: Complex64) -> Result<Complex64>;
}

impl<F> Evaluator for F
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    fn eval(&self, s: Complex64) -> Result<Complex64> {
        self(s)
    }
}

impl Evaluator for GeneralizedDirichletSeries {
    fn eval(&self, s: Complex64) -> Result<Complex64> {
        if self.is_finite_polynomial() {
            Ok(self.eval_head(s))
        } else {
            Ok(self.evaluate(s, 1e-12)?.value)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
    pub truncation_tail: f64,
    /// Panels accepted at maximum depth or capped at a zero of `L`.
    pub flagged_panels: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogSign {
    Plus,
    Minus,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
}

/// Per-panel override `(width, samples) -> value`; see [`adaptive_simpson`].
pub type PanelCap<'a> = &'a dyn Fn(f64, &[f64]) -> Option<f64>;

/// Adaptive Simpson on `[a, b]`, started from `initial` equal panels.
///
/// A panel is accepted when `|S₂ − S₁| ≤ 15·tol`, contributing the
/// Richardson value `S₂ + (S₂ − S₁)/15`. `cap` is consulted for every
/// panel: if it returns `Some(v)` the panel contributes `v` outright and
/// is flagged (used for logarithmic singularities).
pub fn adaptive_simpson(
    mut f: impl FnMut(f64) -> Result<f64>,
    a: f64,
    b: f64,
    tol: f64,
    initial: usize,
    cap: Option<PanelCap<'_>>,
) -> Result<IntegralResult> {
    if !(b > a) {
        return Err(Error::InvalidParameter(format!("empty interval [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let initial = initial.max(1);
    let h = (b - a) / initial as f64;
    let mut value = 0.0;
    let mut err = 0.0;
    let mut panels = 0usize;
    let mut flagged = 0usize;
    let mut stack: Vec<Panel> = Vec::with_capacity(64);
    let mut f_left = f(a)?;
    for i in 0..initial {
        let pa = a + h * i as f64;
        let pb = if i + 1 == initial { b } else { a + h * (i + 1) as f64 };
        let fm = f(0.5 * (pa + pb))?;
        let fb = f(pb)?;
        stack.push(Panel {
            a: pa,
            b: pb,
            fa: f_left,
            fm,
            fb,
            whole: (pb - pa) / 6.0 * (f_left + 4.0 * fm + fb),
            tol: tol / initial as f64,
            depth: 0,
        });
        f_left = fb;
        while let Some(p) = stack.pop() {
            let m = 0.5 * (p.a + p.b);
            let flm = f(0.5 * (p.a + m))?;
            let frm = f(0.5 * (m + p.b))?;
            let w = p.b - p.a;
            if let Some(cap) = cap {
                if let Some(v) = cap(w, &[p.fa, flm, p.fm, frm, p.fb]) {
                    if p.depth >= MAX_DEPTH {
                        value += v;
                        err += v;
                        panels += 1;
                        flagged += 1;
                        continue;
                    }
                    stack.push(Panel {
                        a: m,
                        b: p.b,
                        fa: p.fm,
                        fm: frm,
                        fb: p.fb,
                        whole: f64::NAN,
                        tol: p.tol / 2.0,
                        depth: p.depth + 1,
                    });
                    stack.push(Panel {
                        a: p.a,
                        b: m,
                        fa: p.fa,
                        fm: flm,
                        fb: p.fm,
                        whole: f64::NAN,
                        tol: p.tol / 2.0,
                        depth: p.depth + 1,
                    });
                    continue;
                }
            }
            let left = w / 12.0 * (p.fa + 4.0 * flm + p.fm);
            let right = w / 12.0 * (p.fm + 4.0 * frm + p.fb);
            let whole = if p.whole.is_nan() { w / 6.0 * (p.fa + 4.0 * p.fm + p.fb) } else { p.whole };
            let s2 = left + right;
            let diff = s2 - whole;
            if diff.abs() <= 15.0 * p.tol || p.depth >= MAX_DEPTH {
                value += s2 + diff / 15.0;
                err += diff.abs() / 15.0;
                panels += 1;
                if p.depth >= MAX_DEPTH && diff.abs() > 15.0 * p.tol {
                    flagged += 1;
                }
                if panels > MAX_PANELS {
                    return Err(Error::Convergence(format!("more than {MAX_PANELS} panels on [{a}, {b}]")));
                }
            } else {
                // Right pushed first so the left half is processed first: fixed summation order.
                stack.push(Panel {
                    a: m,
                    b: p.b,
                    fa: p.fm,
                    fm: frm,
                    fb: p.fb,
                    whole: right,
                    tol: p.tol / 2.0,
                    depth: p.depth + 1,
                });
                stack.push(Panel {
                    a: p.a,
                    b: m,
                    fa: p.fa,
                    fm: flm,
                    fb: p.fm,
                    whole: left,
                    tol: p.tol / 2.0,
                    depth: p.depth + 1,
                });
            }
        }
    }
    Ok(IntegralResult {
        value,
        error_estimate: err,
        subdivisions: panels,
        truncation_tail: 0.0,
        flagged_panels: flagged,
    })
}

fn initial_panels(a: f64, b: f64) -> usize {
    // Roughly one starting panel per unit length, at least 16.
    ((b - a).abs().ceil() as usize).clamp(16, 4096)
}

/// `∫_a^b |L(σ+it)|^p dt`.
pub fn integrate_abs_pow<E: Evaluator + ?Sized>(
    ev: &E,
    sigma: f64,
    a: f64,
    b: f64,
    p: f64,
    tol: f64,
) -> Result<IntegralResult> {
    if !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!("p must be at least 1, got {p}")));
    }
    adaptive_simpson(|t| Ok(ev.eval(Complex64::new(sigma, t))?.norm().powf(p)), a, b, tol, initial_panels(a, b), None)
}

fn log_part(x: f64, sign: LogSign) -> f64 {
    let l = x.max(ZERO_FLOOR).ln();
    match sign {
        LogSign::Plus => l.max(0.0),
        LogSign::Minus => (-l).max(0.0),
    }
}

/// `∫_a^b log±|L(σ+it)| dt`. Panels touching `|L| < 10⁻³⁰⁰` are bisected to
/// maximum depth and then contribute `width · 690`.
pub fn integrate_log<E: Evaluator + ?Sized>(
    ev: &E,
    sigma: f64,
    a: f64,
    b: f64,
    sign: LogSign,
    tol: f64,
) -> Result<IntegralResult> {
    let cap = |w: f64, fs: &[f64]| -> Option<f64> {
        if sign == LogSign::Minus && fs.iter().any(|&v| v >= LOG_FLOOR_CAP) {
            Some(w * LOG_FLOOR_CAP)
        } else {
            None
        }
    };
    adaptive_simpson(
        |t| Ok(log_part(ev.eval(Complex64::new(sigma, t))?.norm(), sign)),
        a,
        b,
        tol,
        initial_panels(a, b),
        Some(&cap),
    )
}

/// Largest `|t|` the Poisson integral samples directly.
pub const POISSON_T_MAX: f64 = 20_000.0;

/// `(D/π)∫ log±|L(σ+it)| / (D² + t²) dt` over the whole line.
///
/// The range `|t| ≤ T` is integrated in `t`, with panels short enough to
/// follow the oscillation of `L`. `T` is where the omitted mass
/// `tail_cap · (1 − (2/π)arctan(T/D))` drops to `tol/2`, but at most
/// [`POISSON_T_MAX`]; whatever mass is left is reported in `truncation_tail`.
/// `tail_cap` must bound `log±|L|` for `|t| > T` (e.g. `log⁺‖L‖₁` for the
/// plus sign).
pub fn poisson_log_integral<E: Evaluator + ?Sized>(
    ev: &E,
    sigma: f64,
    d: f64,
    sign: LogSign,
    tol: f64,
    tail_cap: f64,
) -> Result<IntegralResult> {
    if !(d > 0.0) {
        return Err(Error::InvalidParameter(format!("D must be positive, got {d}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    if !(tail_cap >= 0.0) || !tail_cap.is_finite() {
        return Err(Error::Convergence(format!("tail cap {tail_cap} cannot close the truncation")));
    }
    // Mass beyond |t| ≤ D tan θ is 1 − 2θ/π.
    let theta = (0.5 * PI * (1.0 - tol / (2.0 * tail_cap.max(1e-300)))).max(0.0);
    let t_max = (d * theta.tan()).min(POISSON_T_MAX);
    let tail = tail_cap * (1.0 - 2.0 * (t_max / d).atan() / PI);
    if t_max <= 0.0 {
        return Ok(IntegralResult {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 0,
            truncation_tail: tail,
            flagged_panels: 0,
        });
    }
    let kernel = |t: f64| d / (PI * (t * t + d * d));
    // Bounded by 690·D/(π(t²+D²)), so zeros of L need no cap.
    let mut r = adaptive_simpson(
        |t| Ok(kernel(t) * log_part(ev.eval(Complex64::new(sigma, t))?.norm(), sign)),
        -t_max,
        t_max,
        0.5 * tol,
        ((2.0 * t_max).ceil() as usize).clamp(32, 1 << 17),
        None,
    )?;
    r.truncation_tail = tail;
    Ok(r)
}

/// Location and value of the largest sampled `|L(σ+it)|` on `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupResult {
    pub value: f64,
    pub argmax: f64,
}

/// Lower bound for `max_{[a,b]} |L(σ+it)|`: uniform grid, a second uniform
/// grid around the best cell, then golden-section refinement.
pub fn interval_sup<E: Evaluator + ?Sized>(ev: &E, sigma: f64, a: f64, b: f64, grid_n: usize) -> Result<SupResult> {
    if grid_n < 16 {
        return Err(Error::InvalidParameter(format!("grid must have at least 16 points, got {grid_n}")));
    }
    if !(b >= a) {
        return Err(Error::InvalidParameter(format!("empty interval [{a}, {b}]")));
    }
    let g = |t: f64| -> Result<f64> { Ok(ev.eval(Complex64::new(sigma, t))?.norm()) };
    let mut best = SupResult { value: f64::NEG_INFINITY, argmax: a };
    let scan = |lo: f64, hi: f64, best: &mut SupResult| -> Result<f64> {
        let h = (hi - lo) / grid_n as f64;
        for i in 0..=grid_n {
            let t = if i == grid_n { hi } else { lo + h * i as f64 };
            let v = g(t)?;
            if v > best.value {
                *best = SupResult { value: v, argmax: t };
            }
        }
        Ok(h)
    };
    let h = scan(a, b, &mut best)?;
    let h2 = scan((best.argmax - h).max(a), (best.argmax + h).min(b), &mut best)?;
    let (mut lo, mut hi) = ((best.argmax - h2).max(a), (best.argmax + h2).min(b));
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut f1, mut f2) = (g(x1)?, g(x2)?);
    for _ in 0..60 {
        if hi - lo <= 1e-13 * (1.0 + hi.abs()) {
            break;
        }
        if f1 > f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = g(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = g(x2)?;
        }
    }
    for (x, v) in [(x1, f1), (x2, f2)] {
        if v > best.value {
            best = SupResult { value: v, argmax: x };
        }
    }
    Ok(best)
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[−1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// The 64-point rule, computed once.
pub fn gauss_legendre_64() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(64))
}
