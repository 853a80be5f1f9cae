use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ExponentSequence, GeneralizedDirichletSeries};
use crate::error::{Error, Result};

/// Serialized form of a finite Dirichlet polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesSpec {
    pub exponents: ExponentsSpec,
    pub coefficients: Vec<[f64; 2]>,
    pub sigma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExponentsSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
}

fn reject_extra(spec: &ExponentsSpec, allowed: &[&str]) -> Result<()> {
    let present = [("alpha", spec.alpha.is_some()), ("c", spec.c.is_some()), ("values", spec.values.is_some())];
    for (name, set) in present {
        if set && !allowed.contains(&name) {
            return Err(Error::Format(format!("field `{name}` is not valid for kind `{}`", spec.kind)));
        }
    }
    Ok(())
}

pub(super) fn from_spec(spec: &SeriesSpec) -> Result<GeneralizedDirichletSeries> {
    let e = &spec.exponents;
    let exponents = match e.kind.as_str() {
        "classical" => {
            reject_extra(e, &[])?;
            ExponentSequence::Classical
        }
        "hurwitz" => {
            reject_extra(e, &["alpha"])?;
            let alpha = e.alpha.ok_or_else(|| Error::Format("hurwitz exponents need `alpha`".into()))?;
            ExponentSequence::hurwitz(alpha)?
        }
        "linear" => {
            reject_extra(e, &["c"])?;
            let c = e.c.ok_or_else(|| Error::Format("linear exponents need `c`".into()))?;
            ExponentSequence::linear(c)?
        }
        "explicit" => {
            reject_extra(e, &["values"])?;
            let v = e.values.clone().ok_or_else(|| Error::Format("explicit exponents need `values`".into()))?;
            ExponentSequence::explicit(v)?
        }
        other => return Err(Error::Format(format!("unknown exponent kind `{other}`"))),
    };
    let coefficients = spec.coefficients.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
    GeneralizedDirichletSeries::new(exponents, coefficients, spec.sigma)
}

pub(super) fn to_spec(series: &GeneralizedDirichletSeries) -> Result<SeriesSpec> {
    if series.tail().is_some() {
        return Err(Error::Format("series with an analytic tail has no finite JSON form".into()));
    }
    let n = series.coefficients().len();
    let exponents = match series.exponents() {
        ExponentSequence::Classical => ExponentsSpec { kind: "classical".into(), alpha: None, c: None, values: None },
        ExponentSequence::Hurwitz { alpha } if *alpha <= 1.0 => {
            ExponentsSpec { kind: "hurwitz".into(), alpha: Some(*alpha), c: None, values: None }
        }
        ExponentSequence::Linear { c } => {
            ExponentsSpec { kind: "linear".into(), alpha: None, c: Some(*c), values: None }
        }
        other => ExponentsSpec { kind: "explicit".into(), alpha: None, c: None, values: Some(other.take(n)) },
    };
    Ok(SeriesSpec {
        exponents,
        coefficients: series.coefficients().iter().map(|z| [z.re, z.im]).collect(),
        sigma: series.sigma(),
    })
}
