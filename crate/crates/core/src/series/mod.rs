//! Generalized Dirichlet series `L(s) = Σ aₙ e^(−λₙ s)`.

mod exponents;
mod json;
mod tail;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use exponents::ExponentSequence;
pub use json::{ExponentsSpec, SeriesSpec};
pub use tail::power_log_tail;

/// Largest truncation [`GeneralizedDirichletSeries::evaluate`] will sum.
pub const N_MAX: usize = 10_000_000;

/// Analytic description of the coefficients past the explicit list.
///
/// Only meaningful for logarithmic exponent families with base `α`: for
/// `n ≥ len`, `aₙ = factor · u^(−power) · (log u)^(−log_power)`, `u = n + α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLogTail {
    pub factor: Complex64,
    pub power: f64,
    pub log_power: Complex64,
}

impl PowerLogTail {
    fn coefficient(&self, u: f64) -> Complex64 {
        let lu = u.ln();
        let mut c = self.factor * (-self.power * lu).exp();
        if self.log_power != Complex64::new(0.0, 0.0) {
            c *= (-self.log_power * lu.ln()).exp();
        }
        c
    }
}

/// Closed interval produced by norms with a bounded analytic tail.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct NormInterval {
    pub lower: f64,
    pub upper: f64,
}

impl NormInterval {
    pub fn exact(v: f64) -> Self {
        NormInterval { lower: v, upper: v }
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        x >= self.lower - tol && x <= self.upper + tol
    }
}

/// Result of [`GeneralizedDirichletSeries::evaluate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub error_bound: f64,
    pub terms: usize,
}

/// `(C, σ, λ₁, K)` for a series' class.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ClassParams {
    pub c: f64,
    pub sigma: f64,
    pub lambda1: f64,
    pub k: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedDirichletSeries {
    exponents: ExponentSequence,
    coefficients: Vec<Complex64>,
    sigma: f64,
    tail: Option<PowerLogTail>,
}

impl GeneralizedDirichletSeries {
    pub fn new(exponents: ExponentSequence, coefficients: Vec<Complex64>, sigma: f64) -> Result<Self> {
        exponents.validate()?;
        if coefficients.is_empty() {
            return Err(Error::InvalidSeries("coefficient list is empty".into()));
        }
        if let Some(len) = exponents.len() {
            if coefficients.len() > len {
                return Err(Error::InvalidSeries(format!(
                    "{} coefficients but only {len} exponents",
                    coefficients.len()
                )));
            }
        }
        if coefficients.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidSeries("non-finite coefficient".into()));
        }
        if !sigma.is_finite() {
            return Err(Error::InvalidSeries("non-finite sigma".into()));
        }
        Ok(GeneralizedDirichletSeries { exponents, coefficients, sigma, tail: None })
    }

    /// Real coefficients over the classical exponents `log(n+1)`.
    pub fn classical(coefficients: &[f64], sigma: f64) -> Result<Self> {
        Self::new(ExponentSequence::Classical, coefficients.iter().map(|&c| Complex64::new(c, 0.0)).collect(), sigma)
    }

    /// `α^(s+offset) Σ (n+α)^(−s−offset) (log(n+α))^(−z)` over Hurwitz exponents
    /// with `terms` explicit coefficients and the remainder as an analytic tail.
    ///
    /// `z ≠ 0` requires `α < 1` (the `n = 0` logarithm vanishes at `α = 1`).
    pub fn hurwitz_family(alpha: f64, offset: f64, z: Complex64, sigma: f64, terms: usize) -> Result<Self> {
        let exponents = ExponentSequence::hurwitz(alpha)?;
        let has_log = z != Complex64::new(0.0, 0.0);
        if has_log && alpha >= 1.0 {
            return Err(Error::InvalidParameter("logarithmic family needs alpha < 1".into()));
        }
        if terms == 0 {
            return Err(Error::InvalidParameter("need at least one explicit term".into()));
        }
        let exponents = if has_log { ExponentSequence::HurwitzLog { alpha, z } } else { exponents };
        let coefficients = (0..terms)
            .map(|n| {
                let u = n as f64 + alpha;
                let mut c = Complex64::new((alpha / u).powf(offset), 0.0);
                if has_log {
                    c *= (-z * Complex64::new(u.ln(), 0.0).ln()).exp();
                }
                c
            })
            .collect();
        let mut s = Self::new(exponents, coefficients, sigma)?;
        s.tail = Some(PowerLogTail { factor: Complex64::new(alpha.powf(offset), 0.0), power: offset, log_power: z });
        Ok(s)
    }

    /// Attach an analytic tail; the exponents must be a logarithmic family.
    pub fn with_tail(mut self, tail: PowerLogTail) -> Result<Self> {
        if self.exponents.log_family().is_none() {
            return Err(Error::InvalidSeries("analytic tails need logarithmic exponents".into()));
        }
        if tail.log_power.re < 0.0 {
            return Err(Error::InvalidSeries("tail log power must have non-negative real part".into()));
        }
        self.tail = Some(tail);
        Ok(self)
    }

    pub fn exponents(&self) -> &ExponentSequence {
        &self.exponents
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn tail(&self) -> Option<&PowerLogTail> {
        self.tail.as_ref()
    }

    pub fn is_finite_polynomial(&self) -> bool {
        self.tail.is_none()
    }

    pub fn lambda(&self, n: usize) -> f64 {
        self.exponents.lambda(n).expect("exponent index within coefficient range")
    }

    pub fn lambda1(&self) -> Option<f64> {
        self.exponents.lambda1()
    }

    /// The same series with the constant term removed (`L − a₀`).
    pub fn minus_leading(&self) -> Self {
        let mut s = self.clone();
        s.coefficients[0] = Complex64::new(0.0, 0.0);
        s
    }

    /// `sup_{n≠m} e^(−σ(λₙ+λₘ)) / |λₙ − λₘ|`.
    ///
    /// Explicit lists are scanned over all pairs. Generated sequences have
    /// `λ` increasing, so `e^(−σλ)` is non-increasing for `σ ≥ 0` and for each
    /// `n` the ratio is largest at the neighbour `m = n+1`. For linear
    /// exponents that neighbour ratio decays geometrically; for logarithmic
    /// ones of scale `a` it behaves like `(n+α)^(1−2aσ)` and is
    /// non-increasing exactly when `aσ ≥ 1/2`, so the maximum sits at `n = 0`.
    pub fn separation_constant(&self) -> Result<f64> {
        let sigma = self.sigma;
        match &self.exponents {
            ExponentSequence::Explicit(v) => explicit_separation(v, sigma),
            ExponentSequence::Scaled { base, .. } if matches!(**base, ExponentSequence::Explicit(_)) => {
                explicit_separation(&self.exponents.take(self.exponents.len().unwrap_or(0)), sigma)
            }
            seq => {
                if sigma < 0.0 {
                    return Err(Error::UnboundedSeparation { sigma });
                }
                if let Some((_, scale)) = seq.log_family() {
                    if scale * sigma < 0.5 - 1e-15 {
                        return Err(Error::UnboundedSeparation { sigma });
                    }
                }
                let m = self.coefficients.len().max(2);
                let lam = seq.take(m);
                Ok(lam.windows(2).map(|w| (-sigma * (w[0] + w[1])).exp() / (w[1] - w[0])).fold(0.0, f64::max))
            }
        }
    }

    /// `(C, σ, λ₁, K)` with `K = W(σ/C)/σ` (or `1/C` at `σ = 0`).
    pub fn class_params(&self) -> Result<ClassParams> {
        let c = self.separation_constant()?;
        let lambda1 = self.lambda1().ok_or_else(|| Error::InvalidSeries("need at least two exponents".into()))?;
        let k = crate::bounds::lambda1_floor(c, self.sigma)?;
        Ok(ClassParams { c, sigma: self.sigma, lambda1, k })
    }

    fn head_sum(&self, f: impl Fn(usize, Complex64) -> f64) -> f64 {
        self.coefficients.iter().enumerate().map(|(n, &a)| f(n, a)).sum()
    }

    /// Tail bound for `Σ_{n≥start} |aₙ|^q e^(−qλₙσ₁)`, `q ∈ {1, 2}`.
    fn tail_sum(&self, start: usize, sigma1: f64, q: f64) -> Result<(f64, f64)> {
        let Some(t) = self.tail else { return Ok((0.0, 0.0)) };
        let (alpha, scale) = self.exponents.log_family().expect("tail implies log family");
        let amp = t.factor.norm().powf(q) * alpha.powf(q * scale * sigma1);
        if amp == 0.0 {
            return Ok((0.0, 0.0));
        }
        let p = q * (t.power + scale * sigma1);
        let r = q * t.log_power.re;
        let (lo, hi) = power_log_tail(start as f64 + alpha, p, r)?;
        Ok((amp * lo, amp * hi))
    }

    /// `‖L‖₂ = √Σ|aₙ|²`; an upper bound (possibly `+∞`) when a tail is attached.
    pub fn l2_norm(&self) -> f64 {
        match self.l2_norm_interval() {
            Ok(iv) => iv.upper,
            Err(_) => f64::INFINITY,
        }
    }

    pub fn l2_norm_interval(&self) -> Result<NormInterval> {
        let head = self.head_sum(|_, a| a.norm_sqr());
        let (lo, hi) = self.tail_sum(self.coefficients.len(), 0.0, 2.0)?;
        Ok(NormInterval { lower: (head + lo).sqrt(), upper: (head + hi).sqrt() })
    }

    /// `Σ |aₙ|² e^(−2λₙσ₁)`, the weighted square norm on `Re s = σ₁`.
    pub fn weighted_l2_sq(&self, sigma1: f64) -> Result<NormInterval> {
        let head = self.head_sum(|n, a| a.norm_sqr() * (-2.0 * self.lambda(n) * sigma1).exp());
        let (lo, hi) = self.tail_sum(self.coefficients.len(), sigma1, 2.0)?;
        Ok(NormInterval { lower: head + lo, upper: head + hi })
    }

    /// `Σ |aₙ| e^(−λₙσ₁)`.
    pub fn l1_norm_at(&self, sigma1: f64) -> Result<NormInterval> {
        let head = self.head_sum(|n, a| a.norm() * (-self.lambda(n) * sigma1).exp());
        let (lo, hi) = self.tail_sum(self.coefficients.len(), sigma1, 1.0)?;
        Ok(NormInterval { lower: head + lo, upper: head + hi })
    }

    /// `‖L‖₁` on the series' own abscissa.
    pub fn l1_norm(&self) -> Result<NormInterval> {
        self.l1_norm_at(self.sigma)
    }

    /// `L_x(s) = L(s + x)`.
    pub fn shift(&self, x: f64) -> Self {
        let mut s = self.clone();
        for (n, a) in s.coefficients.iter_mut().enumerate() {
            *a *= (-self.lambda(n) * x).exp();
        }
        if let (Some(t), Some((alpha, scale))) = (s.tail.as_mut(), self.exponents.log_family()) {
            t.factor *= alpha.powf(scale * x);
            t.power += scale * x;
        }
        s
    }

    /// `L(a s)`: exponents `aλₙ`, abscissa `σ/a`.
    pub fn rescale(&self, a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidParameter(format!("rescale factor must be positive, got {a}")));
        }
        let mut s = self.clone();
        s.exponents = self.exponents.scaled(a);
        s.sigma = self.sigma / a;
        Ok(s)
    }

    /// Divide by the first nonzero term so that `ã₀ = 1`, `λ̃₀ = 0`.
    pub fn normalize_leading(&self) -> Result<Self> {
        let k = self.coefficients.iter().position(|c| c.norm() > 0.0).ok_or(Error::ZeroSeries)?;
        let ak = self.coefficients[k];
        let coefficients: Vec<Complex64> = self.coefficients[k..].iter().map(|c| c / ak).collect();
        let exponents = self.exponents.drop_leading(k);
        let mut tail = self.tail;
        if let Some(t) = tail.as_mut() {
            t.factor /= ak;
        }
        Ok(GeneralizedDirichletSeries { exponents, coefficients, sigma: self.sigma, tail })
    }

    /// Value of the explicit (head) polynomial only.
    pub fn eval_head(&self, s: Complex64) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for (n, a) in self.coefficients.iter().enumerate() {
            if a.re != 0.0 || a.im != 0.0 {
                sum += a * (-s * self.lambda(n)).exp();
            }
        }
        sum
    }

    /// Truncated evaluation with a rigorous bound on the omitted tail.
    ///
    /// Finite polynomials are summed exactly (error reported as 0). With an
    /// analytic tail the truncation `N` is doubled until the smaller of the
    /// absolute tail bound and the Cauchy–Schwarz bound
    /// `(Σ_{n≥N}|aₙ|²)^½ (Σ_{n≥N} e^(−2λₙ Re s))^½` drops below `target`.
    pub fn evaluate(&self, s: Complex64, target: f64) -> Result<Evaluation> {
        if !(target > 0.0) {
            return Err(Error::InvalidParameter(format!("target error must be positive, got {target}")));
        }
        let Some(t) = self.tail else {
            return Ok(Evaluation { value: self.eval_head(s), error_bound: 0.0, terms: self.coefficients.len() });
        };
        let (alpha, scale) = self.exponents.log_family().expect("tail implies log family");
        let len = self.coefficients.len();
        let tail_bound = |n: usize| -> f64 {
            let abs = self.tail_sum(n, s.re, 1.0).map(|x| x.1).unwrap_or(f64::INFINITY);
            let cs = match (self.tail_sum(n, 0.0, 2.0), power_log_tail(n as f64 + alpha, 2.0 * scale * s.re, 0.0)) {
                (Ok((_, a2)), Ok((_, w))) => (a2 * w).sqrt() * alpha.powf(scale * s.re),
                _ => f64::INFINITY,
            };
            abs.min(cs)
        };
        let mut n = len.max(16);
        let mut bound = tail_bound(n);
        while bound > target / 2.0 {
            if n >= N_MAX {
                return Err(Error::PrecisionUnreachable { target, achieved: bound });
            }
            n = (2 * n).min(N_MAX);
            bound = tail_bound(n);
        }
        let mut sum = Neumaier::default();
        let mut abs_sum = 0.0;
        for k in 0..n {
            let a = if k < len { self.coefficients[k] } else { t.coefficient(k as f64 + alpha) };
            let lambda = if k < len { self.lambda(k) } else { scale * ((k as f64 + alpha) / alpha).ln() };
            let term = a * (-s * lambda).exp();
            abs_sum += term.norm();
            sum.add(term);
        }
        let rounding = 4.0 * f64::EPSILON * abs_sum;
        Ok(Evaluation { value: sum.total(), error_bound: bound + rounding, terms: n })
    }

    /// Canonical JSON form (finite polynomials only).
    pub fn to_spec(&self) -> Result<SeriesSpec> {
        json::to_spec(self)
    }

    pub fn from_spec(spec: &SeriesSpec) -> Result<Self> {
        json::from_spec(spec)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SeriesSpec = serde_json::from_str(text)?;
        Self::from_spec(&spec)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_spec()?)?)
    }
}

fn explicit_separation(v: &[f64], sigma: f64) -> Result<f64> {
    if v.len() < 2 {
        return Err(Error::InvalidSeries("separation constant needs at least two exponents".into()));
    }
    if v.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidSeries("exponents not strictly increasing".into()));
    }
    let mut best = 0.0f64;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            best = best.max((-sigma * (v[i] + v[j])).exp() / (v[j] - v[i]));
        }
    }
    Ok(best)
}

/// Compensated complex summation.
#[derive(Default)]
struct Neumaier {
    sum: Complex64,
    comp: Complex64,
}

impl Neumaier {
    fn add(&mut self, x: Complex64) {
        let (s, c) = (two_sum(self.sum.re, x.re), two_sum(self.sum.im, x.im));
        self.sum = Complex64::new(s.0, c.0);
        self.comp += Complex64::new(s.1, c.1);
    }

    fn total(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}
