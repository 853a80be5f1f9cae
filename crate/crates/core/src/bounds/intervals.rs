use std::f64::consts::{LN_2, PI};

use super::{positive, BoundReport, Side, TheoremId};
use crate::error::{Error, Result};
use crate::special::{c0, kappa_constants};

/// Norms and class constants of a series with `a₀ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalInputs {
    pub l1: Option<f64>,
    pub l2: Option<f64>,
    pub c: f64,
    pub lambda1: f64,
    /// Rate used in place of `λ₁` for the class-uniform bounds (usually `K`).
    pub k: f64,
}

impl IntervalInputs {
    fn l1(&self) -> Result<f64> {
        let v = self.l1.ok_or_else(|| Error::InvalidParameter("this bound needs the L1 norm".into()))?;
        positive("norm_l1", v)?;
        Ok(v)
    }

    fn l2(&self) -> Result<f64> {
        let v = self.l2.ok_or_else(|| Error::InvalidParameter("this bound needs the L2 norm".into()))?;
        positive("norm_l2", v)?;
        Ok(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShortVariant {
    /// Absolutely convergent series.
    L1,
    /// Square-summable class. `xi: None` gives the closed form with
    /// `ξ = 1 − √3/(e√2)`; `Some(ξ)` assembles the bound for that `ξ` directly.
    H2 { xi: Option<f64> },
    /// Bounded coefficients, square-summable. `alt_d` replaces `δ²/(4C)` by `δ²/(4D)`.
    BoundedH2 { alt_d: bool },
    /// Bounded coefficients, absolutely convergent.
    BoundedL1,
}

fn k0(c: f64, rate: f64, delta: f64, alt_d: bool) -> (f64, f64) {
    let d = c.max(4f64.ln() / rate);
    let denom = if alt_d { 4.0 * d } else { 4.0 * c };
    (PI * (d + delta * delta / denom), d)
}

/// Right-hand sides for `∫_T^{T+δ} log⁻|L(σ+it)| dt` and, where the
/// inequality has one, `∫_T^{T+δ} log⁺|L(σ+it)| dt`.
pub fn short_interval_log_bounds(
    inp: &IntervalInputs,
    delta: f64,
    variant: ShortVariant,
) -> Result<(BoundReport, Option<BoundReport>)> {
    positive("delta", delta)?;
    match variant {
        ShortVariant::L1 => {
            let l1 = inp.l1()?;
            let lam = inp.lambda1;
            positive("lambda1", lam)?;
            let minus = PI * ((l1.ln() + LN_2).powi(2) / lam + delta * delta * lam);
            let plus = delta * l1.ln();
            let base = |r: BoundReport| r.input("norm_l1", l1).input("lambda1", lam).input("delta", delta);
            Ok((
                base(BoundReport::new(TheoremId::T15, Side::Upper, minus)),
                Some(base(BoundReport::new(TheoremId::T15, Side::Upper, plus))),
            ))
        }
        ShortVariant::H2 { xi } => {
            let l2 = inp.l2()?;
            let k = inp.k;
            positive("K", k)?;
            let c = inp.c;
            let minus = match xi {
                None => PI * ((l2.ln() + 1.0).powi(2) / k + delta * delta * k),
                Some(xi) => {
                    if !(xi > 0.0 && xi < 1.0) {
                        return Err(Error::InvalidParameter(format!("xi must lie in (0, 1), got {xi}")));
                    }
                    let ratio = 3f64.sqrt() * l2 / (2f64.sqrt() * (1.0 - xi));
                    let d = c.max(ratio.ln().max(0.0) / k).max(1e-12);
                    let kappa = kappa_constants().half;
                    PI * (d + delta * delta / (4.0 * d)) * (kappa + (1.0 + 3.0 * PI * c / d).ln() + l2.ln() - xi.ln())
                }
            };
            let plus = delta * (1.0 + 3.0 * PI * c / delta).ln() + delta * l2.ln();
            let base = |r: BoundReport| r.input("norm_l2", l2).input("C", c).input("K", k).input("delta", delta);
            let mut m = base(BoundReport::new(TheoremId::T16, Side::Upper, minus));
            if let Some(xi) = xi {
                m = m.input("xi", xi);
            }
            Ok((m, Some(base(BoundReport::new(TheoremId::T16, Side::Upper, plus)))))
        }
        ShortVariant::BoundedH2 { alt_d } => {
            let l2 = inp.l2()?;
            positive("K", inp.k)?;
            positive("C", inp.c)?;
            let (k0, d) = k0(inp.c, inp.k, delta, alt_d);
            let k1 = c0() * k0;
            let v = k0 + k1 * l2.ln();
            Ok((
                BoundReport::new(TheoremId::T21, Side::Upper, v)
                    .input("norm_l2", l2)
                    .input("C", inp.c)
                    .input("K", inp.k)
                    .input("delta", delta)
                    .input("alt_d", if alt_d { 1.0 } else { 0.0 })
                    .constant("K0", k0)
                    .constant("K1", k1)
                    .constant("D", d),
                None,
            ))
        }
        ShortVariant::BoundedL1 => {
            let l1 = inp.l1()?;
            positive("C", inp.c)?;
            positive("K", inp.k)?;
            let (k0, _) = k0(inp.c, inp.k, delta, false);
            Ok((
                BoundReport::new(TheoremId::T22, Side::Upper, k0 * (LN_2 + l1.ln()))
                    .input("norm_l1", l1)
                    .input("C", inp.c)
                    .input("K", inp.k)
                    .input("delta", delta)
                    .constant("K0", k0),
                None,
            ))
        }
    }
}

/// Lower bounds for `inf_T max_{[T,T+δ]} |L(σ+it)|` and
/// `inf_T (δ⁻¹∫_T^{T+δ} |L(σ+it)|^p dt)^(1/p)`, all as natural logarithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerVariant {
    SupL1,
    SupH2,
    LpL1,
    LpH2,
    LpBoundedH2,
    LpBoundedL1,
    SupBoundedH2,
    SupBoundedL1,
}

impl LowerVariant {
    pub const ALL: [LowerVariant; 8] = [
        LowerVariant::SupL1,
        LowerVariant::SupH2,
        LowerVariant::LpL1,
        LowerVariant::LpH2,
        LowerVariant::LpBoundedH2,
        LowerVariant::LpBoundedL1,
        LowerVariant::SupBoundedH2,
        LowerVariant::SupBoundedL1,
    ];

    pub fn theorem(&self) -> TheoremId {
        match self {
            LowerVariant::SupL1 => TheoremId::T17,
            LowerVariant::SupH2 => TheoremId::T18,
            LowerVariant::LpL1 => TheoremId::T19,
            LowerVariant::LpH2 => TheoremId::T20,
            LowerVariant::LpBoundedH2 => TheoremId::T23,
            LowerVariant::LpBoundedL1 => TheoremId::T24,
            LowerVariant::SupBoundedH2 => TheoremId::T25,
            LowerVariant::SupBoundedL1 => TheoremId::T26,
        }
    }

    pub fn is_sup(&self) -> bool {
        matches!(
            self,
            LowerVariant::SupL1 | LowerVariant::SupH2 | LowerVariant::SupBoundedH2 | LowerVariant::SupBoundedL1
        )
    }

    pub fn is_bounded(&self) -> bool {
        matches!(
            self,
            LowerVariant::LpBoundedH2
                | LowerVariant::LpBoundedL1
                | LowerVariant::SupBoundedH2
                | LowerVariant::SupBoundedL1
        )
    }
}

/// See [`LowerVariant`]. `p` is recorded but the bounds hold uniformly in `p ≥ 1`.
pub fn supnorm_lp_lower_bounds(inp: &IntervalInputs, delta: f64, p: f64, variant: LowerVariant) -> Result<BoundReport> {
    positive("delta", delta)?;
    if !variant.is_sup() && !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!("p must be at least 1, got {p}")));
    }
    let id = variant.theorem();
    let (log_bound, r) = match variant {
        LowerVariant::SupL1 | LowerVariant::LpL1 => {
            let l1 = inp.l1()?;
            let lam = inp.lambda1;
            positive("lambda1", lam)?;
            let v = -PI * ((l1.ln() + LN_2).powi(2) / (lam * delta) + lam * delta);
            (v, BoundReport::new(id, Side::Lower, v).input("norm_l1", l1).input("lambda1", lam))
        }
        LowerVariant::SupH2 | LowerVariant::LpH2 => {
            let l2 = inp.l2()?;
            let k = inp.k;
            positive("K", k)?;
            let v = -PI * ((l2.ln() + 1.0).powi(2) / (k * delta) + k * delta);
            (v, BoundReport::new(id, Side::Lower, v).input("norm_l2", l2).input("K", k))
        }
        LowerVariant::LpBoundedH2 | LowerVariant::SupBoundedH2 => {
            let l2 = inp.l2()?;
            positive("C", inp.c)?;
            positive("K", inp.k)?;
            let (k0, _) = k0(inp.c, inp.k, delta, false);
            let v = -(k0 / delta) * (24.0 * l2).ln();
            (
                v,
                BoundReport::new(id, Side::Lower, v)
                    .input("norm_l2", l2)
                    .input("C", inp.c)
                    .input("K", inp.k)
                    .constant("K0", k0),
            )
        }
        LowerVariant::LpBoundedL1 | LowerVariant::SupBoundedL1 => {
            let l1 = inp.l1()?;
            positive("C", inp.c)?;
            positive("K", inp.k)?;
            let (k0, _) = k0(inp.c, inp.k, delta, false);
            let v = -(k0 / delta) * (2.0 * l1).ln();
            (
                v,
                BoundReport::new(id, Side::Lower, v)
                    .input("norm_l1", l1)
                    .input("C", inp.c)
                    .input("K", inp.k)
                    .constant("K0", k0),
            )
        }
    };
    debug_assert!(log_bound.is_finite());
    let mut r = r.input("delta", delta).in_log_space();
    if !variant.is_sup() {
        r = r.input("p", p);
    }
    Ok(r)
}
