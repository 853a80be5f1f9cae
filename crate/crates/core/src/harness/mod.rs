//! Seeded verification experiments.
//!
//! An [`ExperimentConfig`] (JSON) selects an experiment and its grids; the
//! result is a list of [`Record`]s (one per checked inequality instance,
//! written as CSV) plus a [`Summary`] (written as JSON). Records are
//! produced in grid order regardless of the worker count, so reruns with
//! the same config are byte-identical.

mod constants;
mod minmax;
pub mod random;
mod scans;
mod sweeps;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Exec};

pub use constants::constant_records;
pub use minmax::{witness_norm, witness_series, MinMaxOutcome};
pub use scans::{window_integrals, WindowScan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Constants,
    LocalL2Sweep,
    NonvanishingSweep,
    LogBoundSweep,
    HurwitzScan,
    LerchScan,
    RiemannAsymptotic,
    MinMax,
}

impl ExperimentKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExperimentKind::Constants => "constants",
            ExperimentKind::LocalL2Sweep => "local_l2_sweep",
            ExperimentKind::NonvanishingSweep => "nonvanishing_sweep",
            ExperimentKind::LogBoundSweep => "log_bound_sweep",
            ExperimentKind::HurwitzScan => "hurwitz_scan",
            ExperimentKind::LerchScan => "lerch_scan",
            ExperimentKind::RiemannAsymptotic => "riemann_asymptotic",
            ExperimentKind::MinMax => "min_max",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::Format(format!("unknown experiment `{s}`")))
    }
}

/// Experiment configuration. Unset grid fields take per-experiment defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub alphas: Option<Vec<f64>>,
    #[serde(default)]
    pub betas: Option<Vec<f64>>,
    #[serde(default)]
    pub deltas: Option<Vec<f64>>,
    /// Poisson-kernel / mean-square window lengths `D`.
    #[serde(default)]
    pub ds: Option<Vec<f64>>,
    #[serde(default)]
    pub xis: Option<Vec<f64>>,
    #[serde(default)]
    pub t_start: Option<f64>,
    #[serde(default)]
    pub t_end: Option<f64>,
    #[serde(default)]
    pub t_step: Option<f64>,
    /// Pass threshold on margins (`pass ⇔ margin ≥ −tolerance`).
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub series_count: Option<usize>,
    #[serde(default)]
    pub max_terms: Option<usize>,
    /// Target `‖L‖₂` values for the min-max search.
    #[serde(default)]
    pub norms: Option<Vec<f64>>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub threads: Option<usize>,
}

fn default_seed() -> u64 {
    42
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentKind) -> Self {
        ExperimentConfig {
            experiment,
            seed: default_seed(),
            alphas: None,
            betas: None,
            deltas: None,
            ds: None,
            xis: None,
            t_start: None,
            t_end: None,
            t_step: None,
            tolerance: None,
            series_count: None,
            max_terms: None,
            norms: None,
            output: None,
            threads: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: ExperimentConfig = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("alphas", &self.alphas),
            ("betas", &self.betas),
            ("deltas", &self.deltas),
            ("ds", &self.ds),
            ("xis", &self.xis),
            ("norms", &self.norms),
        ] {
            if let Some(v) = v {
                if v.is_empty() {
                    return Err(Error::InvalidParameter(format!("grid `{name}` is empty")));
                }
                if v.iter().any(|x| !x.is_finite()) {
                    return Err(Error::InvalidParameter(format!("grid `{name}` has a non-finite entry")));
                }
            }
        }
        if self.ds().iter().chain(self.deltas().iter()).any(|&d| !(d > 0.0)) {
            return Err(Error::InvalidParameter("D and delta values must be positive".into()));
        }
        if self.xis().iter().any(|&x| !(x > 0.0 && x < 1.0)) {
            return Err(Error::InvalidParameter("xi values must lie in (0, 1)".into()));
        }
        if self.norms().iter().any(|&p| !(p >= 1.0)) {
            return Err(Error::InvalidParameter("norm sizes must be at least 1".into()));
        }
        if self.series_count == Some(0) || self.max_terms == Some(0) {
            return Err(Error::InvalidParameter("series_count and max_terms must be positive".into()));
        }
        if matches!(
            self.experiment,
            ExperimentKind::HurwitzScan | ExperimentKind::LerchScan | ExperimentKind::RiemannAsymptotic
        ) {
            if self.deltas().iter().any(|&d| !(d > 0.0 && d <= crate::bounds::hurwitz::DELTA_MAX)) {
                return Err(Error::InvalidParameter("scan deltas must lie in (0, 0.05]".into()));
            }
            if self.alphas().iter().chain(self.betas().iter()).any(|&a| !(a > 0.0 && a <= 1.0)) {
                return Err(Error::InvalidParameter("alpha/beta must lie in (0, 1]".into()));
            }
            let (a, b) = (self.t_start(), self.t_end());
            if !(b >= a) {
                return Err(Error::InvalidParameter(format!("empty T range [{a}, {b}]")));
            }
            if let Some(s) = self.t_step {
                if !(s > 0.0) {
                    return Err(Error::InvalidParameter("t_step must be positive".into()));
                }
            }
        }
        if let Some(t) = self.tolerance {
            if !(t >= 0.0) {
                return Err(Error::InvalidParameter("tolerance must be non-negative".into()));
            }
        }
        Ok(())
    }

    pub fn alphas(&self) -> Vec<f64> {
        self.alphas.clone().unwrap_or_else(|| match self.experiment {
            ExperimentKind::LerchScan => vec![0.3, 0.7],
            ExperimentKind::RiemannAsymptotic => vec![1.0],
            _ => vec![0.3, 0.5, 1.0],
        })
    }

    pub fn betas(&self) -> Vec<f64> {
        self.betas.clone().unwrap_or_else(|| vec![0.3, 0.7])
    }

    pub fn deltas(&self) -> Vec<f64> {
        self.deltas.clone().unwrap_or_else(|| match self.experiment {
            ExperimentKind::LogBoundSweep => vec![0.05, 0.2],
            ExperimentKind::MinMax => vec![0.1, 0.05, 0.025],
            ExperimentKind::RiemannAsymptotic => vec![0.05, 0.025],
            _ => vec![0.05],
        })
    }

    pub fn ds(&self) -> Vec<f64> {
        self.ds.clone().unwrap_or_else(|| match self.experiment {
            ExperimentKind::LogBoundSweep => vec![1.0],
            _ => vec![1.0, 10.0],
        })
    }

    pub fn xis(&self) -> Vec<f64> {
        self.xis.clone().unwrap_or_else(|| vec![0.25, 0.5])
    }

    pub fn t_start(&self) -> f64 {
        self.t_start.unwrap_or(0.0)
    }

    pub fn t_end(&self) -> f64 {
        self.t_end.unwrap_or(match self.experiment {
            ExperimentKind::RiemannAsymptotic => 200.0,
            _ => 1000.0,
        })
    }

    /// Default `δ/2` (overlapping windows) for Hurwitz scans, `1` for the Lerch spot grid.
    pub fn t_step(&self, delta: f64) -> f64 {
        self.t_step.unwrap_or(match self.experiment {
            ExperimentKind::LerchScan => 1.0,
            _ => delta / 2.0,
        })
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(match self.experiment {
            ExperimentKind::LogBoundSweep => 1e-3,
            ExperimentKind::NonvanishingSweep => 1e-6,
            ExperimentKind::MinMax => 0.1,
            _ => 1e-9,
        })
    }

    pub fn series_count(&self) -> usize {
        self.series_count.unwrap_or(match self.experiment {
            ExperimentKind::LocalL2Sweep => 200,
            ExperimentKind::MinMax => 4,
            _ => 50,
        })
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms.unwrap_or(match self.experiment {
            ExperimentKind::MinMax => 16,
            _ => 20,
        })
    }

    pub fn norms(&self) -> Vec<f64> {
        self.norms.clone().unwrap_or_else(|| vec![3.0])
    }

    pub fn exec(&self) -> Exec {
        Exec::from_threads(self.threads)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckSide {
    /// `measured ≤ bound`; margin `bound − measured`.
    Upper,
    /// `measured ≥ bound`; margin `log(measured) − log_bound`.
    Lower,
    /// `|measured − bound|` small; margin `−|measured − bound|`.
    Equal,
}

/// One checked instance of an inequality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub theorem: String,
    pub side: CheckSide,
    pub inputs: String,
    pub measured: f64,
    pub bound: f64,
    pub log_bound: f64,
    pub margin: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub note: String,
}

impl Record {
    pub fn upper(theorem: &str, inputs: String, measured: f64, bound: f64, tolerance: f64) -> Self {
        let margin = bound - measured;
        Record {
            theorem: theorem.into(),
            side: CheckSide::Upper,
            inputs,
            measured,
            bound,
            log_bound: if bound > 0.0 { bound.ln() } else { f64::NEG_INFINITY },
            margin,
            tolerance,
            pass: margin >= -tolerance,
            note: String::new(),
        }
    }

    /// `log_bound` is a natural logarithm; `measured` is linear.
    pub fn lower_log(theorem: &str, inputs: String, measured: f64, log_bound: f64, tolerance: f64) -> Self {
        let margin = measured.max(f64::MIN_POSITIVE).ln() - log_bound;
        Record {
            theorem: theorem.into(),
            side: CheckSide::Lower,
            inputs,
            measured,
            bound: log_bound.exp(),
            log_bound,
            margin,
            tolerance,
            pass: margin >= -tolerance,
            note: String::new(),
        }
    }

    pub fn equal(theorem: &str, inputs: String, measured: f64, target: f64, tolerance: f64) -> Self {
        let margin = -(measured - target).abs();
        Record {
            theorem: theorem.into(),
            side: CheckSide::Equal,
            inputs,
            measured,
            bound: target,
            log_bound: if target > 0.0 { target.ln() } else { f64::NAN },
            margin,
            tolerance,
            pass: margin >= -tolerance,
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// Attach a replayable description when the check failed.
    pub(crate) fn replay_on_fail(mut self, replay: impl FnOnce() -> String) -> Self {
        if !self.pass {
            let r = replay();
            self.note = if self.note.is_empty() { r } else { format!("{}; {r}", self.note) };
        }
        self
    }
}

/// Aggregate view of an experiment run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub experiment: String,
    pub seed: u64,
    pub records: usize,
    pub failures: usize,
    pub pass: bool,
    pub min_margin: f64,
    pub min_margin_by_theorem: BTreeMap<String, f64>,
    /// Experiment-specific measurements (empirical minima, ratios, slopes, ...).
    pub empirical: BTreeMap<String, f64>,
    pub notes: Vec<String>,
    pub runtime_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentResult {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl ExperimentResult {
    pub(crate) fn assemble(
        config: &ExperimentConfig,
        records: Vec<Record>,
        empirical: BTreeMap<String, f64>,
        notes: Vec<String>,
        started: Instant,
    ) -> Self {
        let failures = records.iter().filter(|r| !r.pass).count();
        let mut by_thm: BTreeMap<String, f64> = BTreeMap::new();
        for r in &records {
            let e = by_thm.entry(r.theorem.clone()).or_insert(f64::INFINITY);
            *e = e.min(r.margin);
        }
        let min_margin = records.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
        ExperimentResult {
            summary: Summary {
                experiment: config.experiment.as_str().into(),
                seed: config.seed,
                records: records.len(),
                failures,
                pass: failures == 0,
                min_margin,
                min_margin_by_theorem: by_thm,
                empirical,
                notes,
                runtime_seconds: started.elapsed().as_secs_f64(),
            },
            records,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// Records as CSV (deterministic).
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.records {
            w.serialize(r)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
    }

    /// Write `path` (CSV) and the summary next to it (`<stem>.summary.json`).
    pub fn write(&self, path: &Path) -> Result<PathBuf> {
        if let Some(dir) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, self.to_csv()?)?;
        let summary_path = summary_path(path);
        std::fs::write(&summary_path, serde_json::to_string_pretty(&self.summary)?)?;
        Ok(summary_path)
    }
}

pub fn summary_path(csv_path: &Path) -> PathBuf {
    let stem = csv_path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "result".into());
    csv_path.with_file_name(format!("{stem}.summary.json"))
}

/// Run the configured experiment.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    log::info!("running {} (seed {})", config.experiment.as_str(), config.seed);
    let result = par::with_threads(config.threads, || match config.experiment {
        ExperimentKind::Constants => constants::run(config),
        ExperimentKind::LocalL2Sweep => sweeps::run_local_l2(config),
        ExperimentKind::NonvanishingSweep => sweeps::run_nonvanishing(config),
        ExperimentKind::LogBoundSweep => sweeps::run_log_bounds(config),
        ExperimentKind::HurwitzScan => scans::run_hurwitz_scan(config),
        ExperimentKind::LerchScan => scans::run_lerch_scan(config),
        ExperimentKind::RiemannAsymptotic => scans::run_riemann_asymptotic(config),
        ExperimentKind::MinMax => minmax::run(config),
    })?;
    log::info!(
        "{}: {} records, {} failures, {:.2}s",
        result.summary.experiment,
        result.summary.records,
        result.summary.failures,
        result.summary.runtime_seconds
    );
    Ok(result)
}

/// Soundness sweeps: the three seeded random-series experiments.
pub fn run_soundness_sweep(config: &ExperimentConfig) -> Result<ExperimentResult> {
    match config.experiment {
        ExperimentKind::LocalL2Sweep | ExperimentKind::NonvanishingSweep | ExperimentKind::LogBoundSweep => {
            run_experiment(config)
        }
        other => Err(Error::InvalidParameter(format!("{} is not a soundness sweep", other.as_str()))),
    }
}

pub fn run_hurwitz_scan(config: &ExperimentConfig) -> Result<ExperimentResult> {
    run_experiment(config)
}

pub fn run_minmax_explorer(config: &ExperimentConfig) -> Result<ExperimentResult> {
    run_experiment(config)
}

pub(crate) fn fmt_inputs(pairs: &[(&str, f64)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let c =
            ExperimentConfig::from_json(r#"{"experiment":"hurwitz_scan","alphas":[1.0],"deltas":[0.05],"t_end":2}"#)
                .unwrap();
        assert_eq!(c.experiment, ExperimentKind::HurwitzScan);
        assert_eq!(c.t_step(0.05), 0.025);
        assert!(ExperimentConfig::from_json(r#"{"experiment":"hurwitz_scan","bogus":1}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"experiment":"hurwitz_scan","deltas":[0.1]}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"experiment":"local_l2_sweep","alphas":[]}"#).is_err());
        assert_eq!(ExperimentKind::parse("min_max").unwrap(), ExperimentKind::MinMax);
    }

    #[test]
    fn record_margins() {
        let u = Record::upper("T4", String::new(), 1.0, 2.0, 0.0);
        assert!(u.pass && u.margin == 1.0);
        let l = Record::lower_log("T27", String::new(), 1e-3, -485.5, 0.0);
        assert!(l.pass && l.margin.is_finite());
        let e = Record::equal("L1", String::new(), 1.02, 1.0, 0.01);
        assert!(!e.pass);
    }
}
