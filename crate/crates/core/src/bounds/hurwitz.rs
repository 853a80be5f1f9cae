use std::f64::consts::{LN_10, PI};

use serde::Serialize;

use super::{positive, BoundReport, Side, TheoremId};
use crate::error::{Error, Result};
use crate::special::kappa_constants;

/// Largest δ for which the short-interval Hurwitz/Lerch bounds are stated.
pub const DELTA_MAX: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HurwitzVariant {
    /// `α⁻¹ (1 + α/δ)^(−7/(6δ)) 10^(−9/δ)` for fixed α (Hurwitz; Lerch with β in place of α).
    HurwitzLerch,
    /// `δ^(7/(6δ)) 10^(−9/δ)`, uniform in α (and β).
    Uniform,
    /// `α⁻¹ (1 + α·S)^(−29/(25δ)) e^(−16/δ)` with `S = Σ_{n≥1} |aₙ|²/(n+α)`.
    DirichletL14 { weighted_sum: f64 },
}

/// Natural log of the lower bound for `∫_T^{T+δ} |·| dt`.
pub fn hurwitz_lower_bound(alpha: f64, delta: f64, variant: HurwitzVariant) -> Result<BoundReport> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParameter(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    positive("delta", delta)?;
    if delta > DELTA_MAX {
        return Err(Error::OutOfValidity(format!("delta = {delta} exceeds {DELTA_MAX}")));
    }
    let r = match variant {
        HurwitzVariant::HurwitzLerch => {
            let v = -alpha.ln() - 7.0 / (6.0 * delta) * (1.0 + alpha / delta).ln() - 9.0 / delta * LN_10;
            BoundReport::new(TheoremId::T27, Side::Lower, v).input("alpha", alpha)
        }
        HurwitzVariant::Uniform => {
            let v = 7.0 / (6.0 * delta) * delta.ln() - 9.0 / delta * LN_10;
            BoundReport::new(TheoremId::T29, Side::Lower, v)
        }
        HurwitzVariant::DirichletL14 { weighted_sum } => {
            if !(weighted_sum >= 0.0) {
                return Err(Error::InvalidParameter(format!("weighted sum must be non-negative, got {weighted_sum}")));
            }
            let v = -alpha.ln() - 29.0 / (25.0 * delta) * (1.0 + alpha * weighted_sum).ln() - 16.0 / delta;
            BoundReport::new(TheoremId::L14, Side::Lower, v).input("alpha", alpha).input("weighted_sum", weighted_sum)
        }
    };
    Ok(r.input("delta", delta).in_log_space())
}

/// The numeric pieces of the fixed-`D` constant behind the `16/δ` term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DirichletWindowAssembly {
    pub d: f64,
    pub delta: f64,
    /// `π(D + δ²/(4D))`.
    pub prefactor: f64,
    /// `κ + log(1 + 3πC/D) − log(anchor)`.
    pub bracket: f64,
    /// `prefactor · bracket`.
    pub product: f64,
}

/// Assemble `π(D + δ²/(4D)) (κ + log(1 + 3πC/D) − log anchor)` with the half-κ.
pub fn dirichlet_window_assembly(d: f64, delta: f64, c: f64, anchor: f64) -> Result<DirichletWindowAssembly> {
    positive("D", d)?;
    positive("delta", delta)?;
    positive("C", c)?;
    positive("anchor", anchor)?;
    let prefactor = PI * (d + delta * delta / (4.0 * d));
    let bracket = kappa_constants().half + (1.0 + 3.0 * PI * c / d).ln() - anchor.ln();
    Ok(DirichletWindowAssembly { d, delta, prefactor, bracket, product: prefactor * bracket })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_alpha_reference_value() {
        let r = hurwitz_lower_bound(1.0, 0.05, HurwitzVariant::HurwitzLerch).unwrap();
        assert!((r.bound_value + 485.5).abs() < 0.1, "{}", r.bound_value);
        assert!(r.linear_value().unwrap() < 1e-200);
        assert!(matches!(hurwitz_lower_bound(1.0, 0.06, HurwitzVariant::Uniform), Err(Error::OutOfValidity(_))));
        assert!(hurwitz_lower_bound(1.0, 0.0, HurwitzVariant::Uniform).is_err());
    }

    #[test]
    fn fixed_alpha_bound_decreases_in_alpha() {
        for &d in &[0.01, 0.03, 0.05] {
            let vals: Vec<f64> = (1..=100)
                .map(|i| hurwitz_lower_bound(i as f64 / 100.0, d, HurwitzVariant::HurwitzLerch).unwrap().bound_value)
                .collect();
            assert!(vals.windows(2).all(|w| w[1] < w[0]), "delta={d}");
        }
    }

    #[test]
    fn assembly_matches_reference_constant() {
        let a = dirichlet_window_assembly(0.7378, 0.05, 1.0 / (2f64.sqrt() * 2f64.ln()), 0.01642).unwrap();
        assert!((a.product - 15.976).abs() < 0.05, "{a:?}");
        assert!((a.prefactor - 2.3205).abs() < 1e-3);
    }
}
