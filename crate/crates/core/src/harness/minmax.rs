//! Witness family `(1 − 2^(1−s))ⁿ` and a random-restart search for
//! polynomials that are small on a short interval.

use std::collections::BTreeMap;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use super::random::{self, unit_disc};
use super::{fmt_inputs, ExperimentConfig, ExperimentResult, Record};
use crate::bounds::{supnorm_lp_lower_bounds, IntervalInputs, LowerVariant};
use crate::error::{Error, Result};
use crate::par;
use crate::quadrature::interval_sup;
use crate::series::{ExponentSequence, GeneralizedDirichletSeries};

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `(1 − 2^(1−s))ⁿ = Σ_k C(n,k)(−2)^k 2^(−ks)` as a classical series (term
/// `2^(−ks)` sits at index `2^k − 1`).
pub fn witness_series(n: u32, sigma: f64) -> Result<GeneralizedDirichletSeries> {
    if n == 0 || n > 20 {
        return Err(Error::InvalidParameter(format!("witness order must lie in 1..=20, got {n}")));
    }
    let mut a = vec![0.0; 1 << n];
    for k in 0..=n {
        a[(1usize << k) - 1] = binomial(n, k) * (-2.0f64).powi(k as i32);
    }
    GeneralizedDirichletSeries::classical(&a, sigma)
}

/// `√Σ_k C(n,k)² 4^k`.
pub fn witness_norm(n: u32) -> f64 {
    (0..=n).map(|k| binomial(n, k).powi(2) * 4f64.powi(k as i32)).sum::<f64>().sqrt()
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Best polynomial found by one search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinMaxOutcome {
    pub norm: f64,
    pub delta: f64,
    pub restart: usize,
    pub best_value: f64,
    pub coefficients: Vec<[f64; 2]>,
    pub sweeps: usize,
    pub converged: bool,
}

const GRID: usize = 32;
const MAX_SWEEPS: usize = 40;
const MIN_STEP: f64 = 1e-3;

fn project(a: &mut [Complex64], norm: f64) {
    a[0] = Complex64::new(1.0, 0.0);
    let target = (norm * norm - 1.0).sqrt();
    let cur: f64 = a[1..].iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if cur > 0.0 {
        a[1..].iter_mut().for_each(|x| *x *= target / cur);
    } else {
        a[1] = Complex64::new(target, 0.0);
    }
}

fn objective(a: &[Complex64], delta: f64) -> Result<f64> {
    let s = GeneralizedDirichletSeries::new(ExponentSequence::Classical, a.to_vec(), 0.5)?;
    Ok(interval_sup(&s, 0.5, 0.0, delta, GRID)?.value)
}

/// Coordinate descent on `max_{[0,δ]} |L(1/2+it)|` over `a₀ = 1`, `‖L‖₂ = norm`.
fn search(seed: u64, restart: usize, terms: usize, norm: f64, delta: f64) -> Result<MinMaxOutcome> {
    let mut r = random::rng(seed ^ (restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut a: Vec<Complex64> = (0..terms).map(|_| unit_disc(&mut r)).collect();
    project(&mut a, norm);
    let mut best = objective(&a, delta)?;
    let mut step = 0.5 * (norm * norm - 1.0).sqrt() / ((terms - 1) as f64).sqrt();
    let dirs =
        [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)];
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && step >= MIN_STEP {
        sweeps += 1;
        let mut improved = false;
        for n in 1..terms {
            for d in dirs {
                let mut trial = a.clone();
                trial[n] += d * step;
                project(&mut trial, norm);
                let v = objective(&trial, delta)?;
                if v < best {
                    best = v;
                    a = trial;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    Ok(MinMaxOutcome {
        norm,
        delta,
        restart,
        best_value: best,
        coefficients: a.iter().map(|c| [c.re, c.im]).collect(),
        sweeps,
        converged: step < MIN_STEP,
    })
}

pub(super) fn run(config: &ExperimentConfig) -> Result<ExperimentResult> {
    let started = Instant::now();
    let mut records = Vec::new();
    let mut empirical = BTreeMap::new();
    let mut notes = Vec::new();
    let deltas = config.deltas();
    if deltas.len() < 2 {
        return Err(Error::InvalidParameter("slope fit needs at least two deltas".into()));
    }
    let tol = config.tolerance();

    for n in 1..=3u32 {
        let a = witness_series(n, 1.0)?;
        let computed = a.l2_norm();
        let formula = witness_norm(n);
        let claimed = 3f64.powi(n as i32);
        records.push(
            Record::equal("witness/norm", fmt_inputs(&[("n", n as f64)]), computed, formula, 1e-12 * formula)
                .with_note(format!("3^n would give {claimed}")),
        );
        empirical.insert(format!("witness_norm/n={n}"), computed);
        if (computed - claimed).abs() > 1e-9 {
            notes.push(format!("n = {n}: computed norm {computed:.12} differs from 3^n = {claimed}"));
        }
        let sups: Vec<f64> =
            deltas.iter().map(|&d| interval_sup(&a, 1.0, 0.0, d, 64).map(|r| r.value)).collect::<Result<_>>()?;
        let xs: Vec<f64> = deltas.iter().map(|d| d.ln()).collect();
        let ys: Vec<f64> = sups.iter().map(|s| s.ln()).collect();
        let slope = least_squares_slope(&xs, &ys);
        records.push(Record::equal("witness/slope", fmt_inputs(&[("n", n as f64)]), slope, n as f64, tol));
        empirical.insert(format!("witness_slope/n={n}"), slope);
    }

    let delta = deltas[0];
    let terms = config.max_terms().max(2);
    let restarts = config.series_count();
    for &m in &config.norms() {
        if !(m > 1.0) {
            return Err(Error::InvalidParameter(format!("target norm must exceed 1, got {m}")));
        }
        let outcomes = par::map_range(config.exec(), restarts, |i| search(config.seed, i, terms, m, delta));
        let probe =
            GeneralizedDirichletSeries::new(ExponentSequence::Classical, vec![Complex64::new(1.0, 0.0); terms], 0.5)?;
        let p = probe.class_params()?;
        let inp = IntervalInputs { l1: None, l2: Some(m), c: p.c, lambda1: p.lambda1, k: p.k };
        let log_bound = supnorm_lp_lower_bounds(&inp, delta, 1.0, LowerVariant::SupH2)?.bound_value;
        let mut best = f64::INFINITY;
        for o in outcomes {
            let o = o?;
            if !o.converged {
                notes.push(format!(
                    "M = {m}, restart {}: stopped after {} sweeps before the step floor",
                    o.restart, o.sweeps
                ));
            }
            best = best.min(o.best_value);
            let inputs = fmt_inputs(&[("M", m), ("delta", delta), ("restart", o.restart as f64)]);
            let coeffs = serde_json::to_string(&o.coefficients)?;
            records.push(
                Record::lower_log("T18", inputs, o.best_value, log_bound, 0.0)
                    .with_note(format!("coefficients={coeffs}")),
            );
        }
        empirical.insert(format!("search_best/M={m}"), best);
        empirical.insert(format!("search_log_bound/M={m}"), log_bound);
    }
    Ok(ExperimentResult::assemble(config, records, empirical, notes, started))
}
