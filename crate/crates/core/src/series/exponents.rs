use num_complex::Complex64;

use crate::error::{Error, Result};

/// Generator for the exponents `λₙ` of a generalized Dirichlet series.
///
/// Every variant satisfies `λ₀ = 0` and strict monotonicity. `Hurwitz`
/// accepts any `α > 0` internally because stripping `k` leading zeros from
/// a Hurwitz series yields the Hurwitz sequence with `α + k`; the public
/// constructor [`ExponentSequence::hurwitz`] restricts to `(0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub enum ExponentSequence {
    /// `λₙ = log(n + 1)`.
    Classical,
    /// `λₙ = log(n + α) − log α`.
    Hurwitz { alpha: f64 },
    /// Hurwitz exponents; `z` is the logarithmic power carried by the
    /// coefficients `(log(n+α))^(−z)` of the family built on it.
    HurwitzLog { alpha: f64, z: Complex64 },
    /// `λₙ = c·n`.
    Linear { c: f64 },
    /// A finite explicit list.
    Explicit(Vec<f64>),
    /// `λₙ = factor · base(n)`.
    Scaled { factor: f64, base: Box<ExponentSequence> },
}

impl ExponentSequence {
    pub fn hurwitz(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParameter(format!("hurwitz alpha must lie in (0, 1], got {alpha}")));
        }
        Ok(ExponentSequence::Hurwitz { alpha })
    }

    pub fn linear(c: f64) -> Result<Self> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::InvalidParameter(format!("linear step must be positive, got {c}")));
        }
        Ok(ExponentSequence::Linear { c })
    }

    pub fn explicit(values: Vec<f64>) -> Result<Self> {
        let seq = ExponentSequence::Explicit(values);
        seq.validate()?;
        Ok(seq)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ExponentSequence::Classical => Ok(()),
            ExponentSequence::Hurwitz { alpha } | ExponentSequence::HurwitzLog { alpha, .. } => {
                if *alpha > 0.0 && alpha.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidSeries(format!("hurwitz alpha must be positive, got {alpha}")))
                }
            }
            ExponentSequence::Linear { c } => {
                if *c > 0.0 && c.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidSeries(format!("linear step must be positive, got {c}")))
                }
            }
            ExponentSequence::Explicit(v) => {
                if v.is_empty() {
                    return Err(Error::InvalidSeries("explicit exponent list is empty".into()));
                }
                if v[0] != 0.0 {
                    return Err(Error::InvalidSeries(format!("first exponent must be 0, got {}", v[0])));
                }
                if v.iter().any(|x| !x.is_finite()) {
                    return Err(Error::InvalidSeries("non-finite exponent".into()));
                }
                if let Some(i) = v.windows(2).position(|w| !(w[1] > w[0])) {
                    return Err(Error::InvalidSeries(format!("exponents not strictly increasing at index {}", i + 1)));
                }
                Ok(())
            }
            ExponentSequence::Scaled { factor, base } => {
                if !(*factor > 0.0) || !factor.is_finite() {
                    return Err(Error::InvalidSeries(format!("scale factor must be positive, got {factor}")));
                }
                base.validate()
            }
        }
    }

    /// `λₙ`, or `None` past the end of an explicit list.
    pub fn lambda(&self, n: usize) -> Option<f64> {
        match self {
            ExponentSequence::Classical => Some((n as f64).ln_1p()),
            ExponentSequence::Hurwitz { alpha } | ExponentSequence::HurwitzLog { alpha, .. } => {
                Some((n as f64 / alpha).ln_1p())
            }
            ExponentSequence::Linear { c } => Some(c * n as f64),
            ExponentSequence::Explicit(v) => v.get(n).copied(),
            ExponentSequence::Scaled { factor, base } => base.lambda(n).map(|l| factor * l),
        }
    }

    /// Number of available exponents; `None` for infinite generators.
    pub fn len(&self) -> Option<usize> {
        match self {
            ExponentSequence::Explicit(v) => Some(v.len()),
            ExponentSequence::Scaled { base, .. } => base.len(),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// `(α, scale)` when `λₙ = scale·(log(n+α) − log α)`.
    pub fn log_family(&self) -> Option<(f64, f64)> {
        match self {
            ExponentSequence::Classical => Some((1.0, 1.0)),
            ExponentSequence::Hurwitz { alpha } | ExponentSequence::HurwitzLog { alpha, .. } => Some((*alpha, 1.0)),
            ExponentSequence::Scaled { factor, base } => base.log_family().map(|(a, s)| (a, s * factor)),
            _ => None,
        }
    }

    /// `λ₁` (the first nonzero exponent).
    pub fn lambda1(&self) -> Option<f64> {
        self.lambda(1)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        match self {
            ExponentSequence::Linear { c } => ExponentSequence::Linear { c: c * factor },
            ExponentSequence::Explicit(v) => ExponentSequence::Explicit(v.iter().map(|x| x * factor).collect()),
            ExponentSequence::Scaled { factor: f, base } => {
                if (f * factor - 1.0).abs() < 1e-15 {
                    (**base).clone()
                } else {
                    ExponentSequence::Scaled { factor: f * factor, base: base.clone() }
                }
            }
            other => {
                if factor == 1.0 {
                    other.clone()
                } else {
                    ExponentSequence::Scaled { factor, base: Box::new(other.clone()) }
                }
            }
        }
    }

    /// The sequence `λ_{n+k} − λ_k`.
    pub fn drop_leading(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        match self {
            ExponentSequence::Classical => ExponentSequence::Hurwitz { alpha: 1.0 + k as f64 },
            ExponentSequence::Hurwitz { alpha } => ExponentSequence::Hurwitz { alpha: alpha + k as f64 },
            ExponentSequence::HurwitzLog { alpha, z } => {
                ExponentSequence::HurwitzLog { alpha: alpha + k as f64, z: *z }
            }
            ExponentSequence::Linear { c } => ExponentSequence::Linear { c: *c },
            ExponentSequence::Explicit(v) => {
                let base = v[k];
                ExponentSequence::Explicit(v[k..].iter().map(|x| x - base).collect())
            }
            ExponentSequence::Scaled { factor, base } => {
                ExponentSequence::Scaled { factor: *factor, base: Box::new(base.drop_leading(k)) }
            }
        }
    }

    /// Materialize the first `n` exponents.
    pub fn take(&self, n: usize) -> Vec<f64> {
        (0..n).map_while(|i| self.lambda(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_and_hurwitz_agree_at_alpha_one() {
        let h = ExponentSequence::hurwitz(1.0).unwrap();
        for n in 0..50 {
            assert!((h.lambda(n).unwrap() - ExponentSequence::Classical.lambda(n).unwrap()).abs() < 1e-15);
        }
    }

    #[test]
    fn explicit_validation() {
        assert!(ExponentSequence::explicit(vec![0.0, 1.0, 2.0]).is_ok());
        assert!(ExponentSequence::explicit(vec![0.5, 1.0]).is_err());
        assert!(ExponentSequence::explicit(vec![0.0, 1.0, 1.0]).is_err());
        assert!(ExponentSequence::explicit(vec![]).is_err());
        assert!(ExponentSequence::hurwitz(1.5).is_err());
        assert!(ExponentSequence::linear(0.0).is_err());
    }

    #[test]
    fn drop_leading_matches_difference() {
        let seqs = [
            ExponentSequence::Classical,
            ExponentSequence::hurwitz(0.3).unwrap(),
            ExponentSequence::linear(2.0).unwrap(),
            ExponentSequence::Classical.scaled(3.0),
        ];
        for seq in &seqs {
            for k in 0..4 {
                let d = seq.drop_leading(k);
                for n in 0..20 {
                    let want = seq.lambda(n + k).unwrap() - seq.lambda(k).unwrap();
                    assert!((d.lambda(n).unwrap() - want).abs() < 1e-12, "{seq:?} k={k} n={n}");
                }
            }
        }
    }
}
