//! Explicit constants and right-hand sides of the mean-value,
//! logarithmic-integral, nonvanishing and short-interval bounds.
//!
//! Every bound is returned as a [`BoundReport`]; bounds that are
//! astronomically small are carried as natural logarithms (`log_space`).

pub mod hurwitz;
mod intervals;
mod nonvanishing;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::GeneralizedDirichletSeries;
use crate::special::{kappa_constants, lambert_w0};

pub use hurwitz::{dirichlet_window_assembly, hurwitz_lower_bound, DirichletWindowAssembly, HurwitzVariant};
pub use intervals::{short_interval_log_bounds, supnorm_lp_lower_bounds, IntervalInputs, LowerVariant, ShortVariant};
pub use nonvanishing::{bisect_decreasing, nonvanishing_abscissa, NonvanishingVariant};

/// Which inequality a report belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    T4,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    T15,
    T16,
    T17,
    T18,
    T19,
    T20,
    T21,
    T22,
    T23,
    T24,
    T25,
    T26,
    T27,
    T28,
    T29,
    T30,
    L5,
    L8,
    L13,
    L14,
}

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T4 => "T4",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::T10 => "T10",
            TheoremId::T11 => "T11",
            TheoremId::T12 => "T12",
            TheoremId::T13 => "T13",
            TheoremId::T14 => "T14",
            TheoremId::T15 => "T15",
            TheoremId::T16 => "T16",
            TheoremId::T17 => "T17",
            TheoremId::T18 => "T18",
            TheoremId::T19 => "T19",
            TheoremId::T20 => "T20",
            TheoremId::T21 => "T21",
            TheoremId::T22 => "T22",
            TheoremId::T23 => "T23",
            TheoremId::T24 => "T24",
            TheoremId::T25 => "T25",
            TheoremId::T26 => "T26",
            TheoremId::T27 => "T27",
            TheoremId::T28 => "T28",
            TheoremId::T29 => "T29",
            TheoremId::T30 => "T30",
            TheoremId::L5 => "L5",
            TheoremId::L8 => "L8",
            TheoremId::L13 => "L13",
            TheoremId::L14 => "L14",
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// A computed bound together with its inputs and intermediate constants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem_id: TheoremId,
    pub inputs: BTreeMap<String, f64>,
    pub constants: BTreeMap<String, f64>,
    pub bound_value: f64,
    /// `bound_value` is a natural logarithm.
    pub log_space: bool,
    pub side: Side,
    /// False when a stated precondition of the inequality fails (the value is still reported).
    pub valid: bool,
}

impl BoundReport {
    pub(crate) fn new(theorem_id: TheoremId, side: Side, bound_value: f64) -> Self {
        BoundReport {
            theorem_id,
            inputs: BTreeMap::new(),
            constants: BTreeMap::new(),
            bound_value,
            log_space: false,
            side,
            valid: true,
        }
    }

    pub(crate) fn input(mut self, k: &str, v: f64) -> Self {
        self.inputs.insert(k.to_string(), v);
        self
    }

    pub(crate) fn constant(mut self, k: &str, v: f64) -> Self {
        self.constants.insert(k.to_string(), v);
        self
    }

    pub(crate) fn in_log_space(mut self) -> Self {
        self.log_space = true;
        self
    }

    /// The bound in linear scale, if representable (`|log| < 700`).
    pub fn linear_value(&self) -> Option<f64> {
        if !self.log_space {
            Some(self.bound_value)
        } else if self.bound_value.abs() < 700.0 {
            Some(self.bound_value.exp())
        } else {
            None
        }
    }

    /// The bound as a natural logarithm.
    pub fn log_value(&self) -> f64 {
        if self.log_space {
            self.bound_value
        } else {
            self.bound_value.ln()
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")))
    }
}

fn non_negative(name: &str, v: f64) -> Result<()> {
    if v >= 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be non-negative, got {v}")))
    }
}

fn log_plus(x: f64) -> f64 {
    if x > 1.0 {
        x.ln()
    } else {
        0.0
    }
}

/// Lower bound `K` for `λ₁` implied by the separation constant:
/// `W(σ/C)/σ` for `σ > 0` and `1/C` for `σ = 0`.
pub fn lambda1_floor(c: f64, sigma: f64) -> Result<f64> {
    positive("C", c)?;
    non_negative("sigma", sigma)?;
    if sigma == 0.0 {
        return Ok(1.0 / c);
    }
    let x = sigma / c;
    if x < 1e-8 {
        // W(x)/σ = (x − x² + 3x³/2 − …)/σ, avoiding cancellation for tiny σ.
        return Ok((1.0 - x + 1.5 * x * x) / c);
    }
    Ok(lambert_w0(x)? / sigma)
}

/// `√(1 + C/(2x)) · ‖L − a₀‖₂ · e^(−rate·x)`, bounding `‖L_x − a₀‖₁`.
///
/// With `rate = λ₁` this is the single-series form, with `rate = K` the
/// class-uniform one.
pub fn l1_tail_from_l2(l2_minus_a0: f64, c: f64, rate: f64, x: f64) -> Result<BoundReport> {
    positive("x", x)?;
    non_negative("C", c)?;
    non_negative("norm", l2_minus_a0)?;
    positive("rate", rate)?;
    let v = (1.0 + c / (2.0 * x)).sqrt() * l2_minus_a0 * (-rate * x).exp();
    Ok(BoundReport::new(TheoremId::T7, Side::Upper, v)
        .input("norm_l2_minus_a0", l2_minus_a0)
        .input("C", c)
        .input("rate", rate)
        .input("x", x))
}

/// Classical specialization: `2^(−x) √(1 + 1/(x√8 log 2)) ‖L − 1‖₂`.
pub fn l1_tail_classical(l2_minus_1: f64, x: f64) -> Result<BoundReport> {
    positive("x", x)?;
    non_negative("norm", l2_minus_1)?;
    let v = 2f64.powf(-x) * (1.0 + 1.0 / (x * 8f64.sqrt() * std::f64::consts::LN_2)).sqrt() * l2_minus_1;
    Ok(BoundReport::new(TheoremId::T9, Side::Upper, v).input("norm_l2_minus_a0", l2_minus_1).input("x", x))
}

/// `e^(−λ₁x) ‖L − a₀‖₁`, bounding `‖L_x − a₀‖₁`.
pub fn l1_tail_from_l1(l1_minus_a0: f64, lambda1: f64, x: f64) -> Result<BoundReport> {
    positive("x", x)?;
    positive("lambda1", lambda1)?;
    non_negative("norm", l1_minus_a0)?;
    Ok(BoundReport::new(TheoremId::T6, Side::Upper, (-lambda1 * x).exp() * l1_minus_a0)
        .input("norm_l1_minus_a0", l1_minus_a0)
        .input("lambda1", lambda1)
        .input("x", x))
}

/// `(D + 3πC)‖L‖₂²`, bounding `∫₀^D |L(σ₁+it)|² dt` for `σ₁ ≥ σ`.
pub fn local_l2_bound(l2: f64, c: f64, d: f64) -> Result<BoundReport> {
    positive("D", d)?;
    non_negative("C", c)?;
    non_negative("norm", l2)?;
    Ok(BoundReport::new(TheoremId::T4, Side::Upper, (d + 3.0 * PI * c) * l2 * l2)
        .input("norm_l2", l2)
        .input("C", c)
        .input("D", d))
}

/// Which norm a logarithmic bound is built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormMode {
    /// Square-summable class with separation constant `c`.
    H2 { l2: f64, c: f64 },
    /// Absolutely convergent on the line.
    L1 { l1: f64 },
}

/// Bound for `(D/π)∫ log⁺|L(σ+it)| / (t² + D²) dt`.
///
/// H2 mode: `κ + ½log(1 + 3πC/D) + log‖L‖₂`, asserted only when non-negative
/// (`valid` flag); `bound_value` is the sound `max(0, ·)`. L1 mode: `log⁺‖L‖₁`.
pub fn log_plus_weighted_bound(mode: NormMode, d: f64) -> Result<BoundReport> {
    positive("D", d)?;
    match mode {
        NormMode::H2 { l2, c } => {
            positive("norm", l2)?;
            non_negative("C", c)?;
            let kappa = kappa_constants().half;
            let raw = kappa + 0.5 * (1.0 + 3.0 * PI * c / d).ln() + l2.ln();
            let mut r = BoundReport::new(TheoremId::T10, Side::Upper, raw.max(0.0))
                .input("norm_l2", l2)
                .input("C", c)
                .input("D", d)
                .constant("kappa", kappa)
                .constant("raw", raw);
            r.valid = raw >= 0.0;
            Ok(r)
        }
        NormMode::L1 { l1 } => {
            non_negative("norm", l1)?;
            Ok(BoundReport::new(TheoremId::L8, Side::Upper, log_plus(l1)).input("norm_l1", l1).input("D", d))
        }
    }
}

/// Bound for `(D/π)∫ log⁻|L(σ+it)| / (t² + D²) dt`: the log⁺ bound minus
/// `log|L(σ + D)|`.
pub fn log_minus_weighted_bound(series: &GeneralizedDirichletSeries, d: f64, mode: NormMode) -> Result<BoundReport> {
    positive("D", d)?;
    let anchor_eval = series.evaluate(Complex64::new(series.sigma() + d, 0.0), 1e-14)?;
    let anchor = anchor_eval.value.norm();
    if anchor <= 1e-12 + anchor_eval.error_bound {
        return Err(Error::NearZeroAnchor(anchor));
    }
    let plus = log_plus_weighted_bound(mode, d)?;
    // A tail error makes the anchor uncertain; use its lower end.
    let log_anchor = (anchor - anchor_eval.error_bound).ln();
    let id = match mode {
        NormMode::H2 { .. } => TheoremId::T11,
        NormMode::L1 { .. } => TheoremId::T12,
    };
    let mut r = BoundReport::new(id, Side::Upper, plus.bound_value - log_anchor)
        .input("D", d)
        .constant("log_plus_bound", plus.bound_value)
        .constant("log_anchor", log_anchor);
    r.inputs.extend(plus.inputs);
    r.valid = plus.valid;
    Ok(r)
}
