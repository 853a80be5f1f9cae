use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hardy_dirichlet::bounds::{
    hurwitz_lower_bound, l1_tail_classical, l1_tail_from_l1, l1_tail_from_l2, local_l2_bound, log_minus_weighted_bound,
    log_plus_weighted_bound, nonvanishing_abscissa, short_interval_log_bounds, supnorm_lp_lower_bounds, BoundReport,
    HurwitzVariant, IntervalInputs, LowerVariant, NonvanishingVariant, NormMode, ShortVariant,
};
use hardy_dirichlet::harness::{
    constant_records, run_experiment, CheckSide, ExperimentConfig, ExperimentKind, ExperimentResult,
};
use hardy_dirichlet::quadrature::{integrate_abs_pow, integrate_log, interval_sup, poisson_log_integral, LogSign};
use hardy_dirichlet::series::GeneralizedDirichletSeries;
use hardy_dirichlet::special::{kappa_constants, riemann_asymptotic_target, riemann_zeta, CLASSICAL_SEPARATION};
use hardy_dirichlet::{Complex64, Error};
use serde_json::json;

/// Explicit bounds for generalized Dirichlet series, and their numerical verification.
///
/// Bracketed labels such as [T4] name the inequality a variant or flag feeds;
/// the same labels appear in the `theorem` column of experiment CSVs.
#[derive(Parser)]
#[command(name = "hardy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// ‖L‖₂, ‖L‖₁ on a line, and the class constants C, λ₁, K of a series.
    Norms(NormsArgs),
    /// Table of the named numerical constants.
    Constants(OutArgs),
    /// Evaluate one explicit bound for a series (or for α, δ alone).
    Bound(BoundArgs),
    /// Nonvanishing abscissa x_ξ, checked by sampling |L| on Re s = σ + x_ξ.
    Nonvanishing(NonvanishingArgs),
    /// Integrals of |L|^p, log±|L|, the Poisson-weighted log integrals, and interval suprema.
    Integrate(IntegrateArgs),
    /// Windowed integrals of |ζ(1+it, α)| or |φ(α, β; 1+it)| against the log-space lower bounds.
    Scan(ScanArgs),
    /// Min-max explorer: witness norms and slopes, coordinate search against [T18].
    Minmax(ExperimentArgs),
    /// Run a verification experiment; exits 1 if any record fails.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SeriesArg {
    /// Series JSON: {"exponents": {"kind": ...}, "coefficients": [[re, im], ...], "sigma": σ}.
    #[arg(long, value_name = "PATH")]
    series: PathBuf,
}

#[derive(Args)]
struct OutArgs {
    /// Write machine-readable output (JSON) here.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NormsArgs {
    #[command(flatten)]
    series: SeriesArg,
    /// Line Re s = σ₁ for the L¹ norm (default: the series' σ).
    #[arg(long)]
    sigma: Option<f64>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundVariant {
    /// [T4] (D + 3πC)‖L‖₂² for ∫₀^D |L(σ₁+it)|² dt. Uses --d.
    LocalL2,
    /// [T6] e^(−λ₁x)‖L − a₀‖₁. --d is the shift x.
    TailL1,
    /// [T7] √(1 + C/2x) e^(−λ₁x)‖L − a₀‖₂. --d is the shift x.
    TailL2,
    /// [T9] classical form 2^(−x)√(1 + 1/(x√8 log 2))‖L − 1‖₂. --d is the shift x.
    TailClassical,
    /// [T10] Poisson-weighted log⁺ integral from ‖L‖₂ and C. Uses --d.
    LogPlusH2,
    /// [L8] Poisson-weighted log⁺ integral from ‖L‖₁. Uses --d.
    LogPlusL1,
    /// [T11] Poisson-weighted log⁻ integral, square-summable form. Uses --d.
    LogMinusH2,
    /// [T12] Poisson-weighted log⁻ integral, absolutely convergent form. Uses --d.
    LogMinusL1,
    /// [T15] ∫ log∓ over [T, T+δ], absolutely convergent. Uses --delta.
    ShortL1,
    /// [T16] ∫ log∓ over [T, T+δ], square-summable. Uses --delta; --xi assembles the bound for that ξ.
    ShortH2,
    /// [T21] ∫ log⁻ over [T, T+δ], bounded coefficients, square-summable. Uses --delta.
    BoundedH2,
    /// [T21] as bounded-h2 with δ²/(4D) in place of δ²/(4C). Uses --delta.
    BoundedH2AltD,
    /// [T22] ∫ log⁻ over [T, T+δ], bounded coefficients, absolutely convergent. Uses --delta.
    BoundedL1,
    /// [T17] log lower bound for max over [T, T+δ] of |L|, from ‖L‖₁. Uses --delta.
    SupL1,
    /// [T18] log lower bound for the interval sup, from ‖L‖₂. Uses --delta.
    SupH2,
    /// [T19] log lower bound for the Lᵖ mean over [T, T+δ], from ‖L‖₁. Uses --delta, --p.
    LpL1,
    /// [T20] log lower bound for the Lᵖ mean, from ‖L‖₂. Uses --delta, --p.
    LpH2,
    /// [T23] Lᵖ mean, bounded coefficients, square-summable. Uses --delta, --p.
    LpBoundedH2,
    /// [T24] Lᵖ mean, bounded coefficients, absolutely convergent. Uses --delta, --p.
    LpBoundedL1,
    /// [T25] interval sup, bounded coefficients, square-summable. Uses --delta.
    SupBoundedH2,
    /// [T26] interval sup, bounded coefficients, absolutely convergent. Uses --delta.
    SupBoundedL1,
    /// [T27] log lower bound for ∫ over [T, T+δ] of |ζ(1+it, α)|; [T28] with β in place of α. Uses --alpha, --delta.
    Hurwitz,
    /// [T29] uniform-in-α form; [T30] for the Lerch zeta. Uses --delta.
    HurwitzUniform,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, value_enum)]
    variant: BoundVariant,
    /// Series JSON (not needed for hurwitz variants).
    #[arg(long, value_name = "PATH")]
    series: Option<PathBuf>,
    /// Window length D [T4], Poisson parameter D [T10–T12, L8], or shift x [T6, T7, T9].
    #[arg(long, default_value_t = 1.0)]
    d: f64,
    /// Interval length δ [T15–T30].
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
    /// ξ for the assembled square-summable short-interval bound [T16].
    #[arg(long)]
    xi: Option<f64>,
    /// Exponent p of the Lᵖ mean [T19, T20, T23, T24]; the bounds hold uniformly in p ≥ 1.
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    /// Hurwitz parameter α (or Lerch β) in (0, 1] [T27, T28].
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NonvanishingKind {
    /// [T13] closed form in ‖L − 1‖₁, rate λ₁.
    L1,
    /// [T14] root of √(1 + C/2x) e^(−Kx)‖L − 1‖₂ = 1 − ξ.
    H2,
    /// [L13] root of (1 + C/x) e^(−Kx) = 1 − ξ, for |aₙ| ≤ 1.
    Bounded,
}

#[derive(Args)]
struct NonvanishingArgs {
    #[command(flatten)]
    series: SeriesArg,
    /// Which hypothesis the abscissa is derived from.
    #[arg(long, value_enum, default_value = "h2")]
    variant: NonvanishingKind,
    /// Target ξ in (0, 1): ξ ≤ |L| ≤ 2 − ξ to the right of σ + x_ξ [T13, T14, L13].
    #[arg(long, default_value_t = 0.5)]
    xi: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IntegralKind {
    /// ∫ |L|^p over [T, T+D] (compare with [T4] for p = 2).
    AbsPow,
    /// ∫ log⁺|L| over [T, T+D] [T15, T16].
    LogPlus,
    /// ∫ log⁻|L| over [T, T+D] [T15, T16, T21, T22].
    LogMinus,
    /// (D/π)∫ log⁺|L| /(t² + D²) over the line [T10, L8].
    PoissonPlus,
    /// (D/π)∫ log⁻|L| /(t² + D²) over the line [T11, T12].
    PoissonMinus,
    /// max over [T, T+D] of |L| [T17, T18, T25, T26].
    Sup,
}

#[derive(Args)]
struct IntegrateArgs {
    #[command(flatten)]
    series: SeriesArg,
    #[arg(long, value_enum, default_value = "abs-pow")]
    variant: IntegralKind,
    /// Line Re s = σ₁ (default: the series' σ).
    #[arg(long)]
    sigma: Option<f64>,
    /// Interval start T.
    #[arg(long, default_value_t = 0.0)]
    t: f64,
    /// Interval length, or the Poisson parameter D.
    #[arg(long, default_value_t = 1.0)]
    d: f64,
    /// Exponent for abs-pow.
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    /// Absolute quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct ExperimentArgs {
    /// ExperimentConfig JSON; flags override its fields.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Interval lengths δ (repeatable) [T18, T27–T30].
    #[arg(long)]
    delta: Vec<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    threads: Option<usize>,
    /// CSV output; the summary goes to <stem>.summary.json next to it.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanKind {
    /// |ζ(1+it, α)| against [T27] and [T29].
    Hurwitz,
    /// |φ(α, β; 1+it)| against [T28] and [T30].
    Lerch,
    /// |ζ(1+it)| against [T29], with the asymptotic target e^(−γ)π²δ²/24.
    Riemann,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    variant: Option<ScanKind>,
    /// Hurwitz parameter α (repeatable) [T27, T28].
    #[arg(long)]
    alpha: Vec<f64>,
    #[command(flatten)]
    common: ExperimentArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// constants, local_l2_sweep, nonvanishing_sweep, log_bound_sweep, hurwitz_scan, lerch_scan, riemann_asymptotic, min_max.
    #[arg(long)]
    experiment: Option<String>,
    #[command(flatten)]
    common: ExperimentArgs,
}

/// Exit status: 1 verification failure, 2 usage or input error, 3 numerical failure.
enum Failure {
    Verification,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidSeries(_)
        | Error::InvalidParameter(_)
        | Error::ZeroSeries
        | Error::UnboundedSeparation { .. }
        | Error::OutOfValidity(_)
        | Error::Io(_)
        | Error::Format(_) => 2,
        Error::Divergent(_)
        | Error::PrecisionUnreachable { .. }
        | Error::Pole(_)
        | Error::Domain(_)
        | Error::NearZeroAnchor(_)
        | Error::Convergence(_) => 3,
    }
}

/// 12 significant digits.
fn num(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let e = x.abs().log10().floor();
    if (-4.0..12.0).contains(&e) {
        format!("{:.*}", (11.0 - e) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}

fn log_num(x: f64) -> String {
    format!("log:{}", num(x))
}

fn row(name: &str, value: &str) {
    println!("{name:<28} {value}");
}

fn write_json(out: &Option<PathBuf>, v: &serde_json::Value) -> CliResult {
    if let Some(p) = out {
        if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(Error::from)?;
        }
        std::fs::write(p, serde_json::to_string_pretty(v).map_err(Error::from)?).map_err(Error::from)?;
    }
    Ok(())
}

fn load_series(path: &Path) -> Result<GeneralizedDirichletSeries, Error> {
    GeneralizedDirichletSeries::from_json(&std::fs::read_to_string(path)?)
}

/// The series scaled to `a₀ = 1`, as the nonvanishing and interval bounds require.
fn normalized(s: GeneralizedDirichletSeries) -> Result<GeneralizedDirichletSeries, Error> {
    if s.coefficients()[0] == Complex64::new(1.0, 0.0) {
        Ok(s)
    } else {
        log::info!("normalizing the series to a0 = 1");
        s.normalize_leading()
    }
}

fn norms(a: NormsArgs) -> CliResult {
    let s = load_series(&a.series.series)?;
    let sigma = a.sigma.unwrap_or(s.sigma());
    let l2 = s.l2_norm();
    let l1 = s.l1_norm_at(sigma)?;
    row("l2_norm", &num(l2));
    if l1.width() > 0.0 {
        row(&format!("l1_norm(sigma={})", num(sigma)), &format!("[{}, {}]", num(l1.lower), num(l1.upper)));
    } else {
        row(&format!("l1_norm(sigma={})", num(sigma)), &num(l1.upper));
    }
    let mut out = json!({ "l2_norm": l2, "sigma1": sigma, "l1_norm": { "lower": l1.lower, "upper": l1.upper } });
    match s.class_params() {
        Ok(p) => {
            row("C", &num(p.c));
            row("sigma", &num(p.sigma));
            row("lambda1", &num(p.lambda1));
            row("K", &num(p.k));
            out["class"] = json!(p);
        }
        Err(e @ Error::UnboundedSeparation { .. }) => row("C", &format!("unbounded ({e})")),
        Err(e) => return Err(e.into()),
    }
    write_json(&a.out.out, &out)
}

fn constants(a: OutArgs) -> CliResult {
    let k = kappa_constants();
    let zeta = riemann_zeta(Complex64::new(1.7378, 0.0))?.re;
    let rows = [
        ("separation_classical", CLASSICAL_SEPARATION),
        ("kappa_half", k.half),
        ("kappa_full", k.full),
        ("kappa_printed", k.printed),
        ("kappa_alt_half", k.alt_half),
        ("kappa_alt_full", k.alt_full),
        ("kappa_alt_printed", k.alt_printed),
        ("C0", k.c0),
        ("exp_C0", k.c0.exp()),
        ("zeta(1.7378)", zeta),
        ("2-zeta(1.7378)", 2.0 - zeta),
        ("riemann_target(delta=0.05)", riemann_asymptotic_target(0.05)),
    ];
    let mut out = serde_json::Map::new();
    for (name, v) in rows {
        row(name, &num(v));
        out.insert(name.into(), json!(v));
    }
    println!();
    let mut checks = Vec::new();
    for r in constant_records()? {
        println!(
            "{:<34} {:<20} target {:<20} {}",
            r.theorem,
            num(r.measured),
            num(r.bound),
            if r.pass { "ok" } else { "MISMATCH" }
        );
        checks.push(json!(r));
    }
    out.insert("checks".into(), json!(checks));
    write_json(&a.out, &serde_json::Value::Object(out))
}

fn print_report(r: &BoundReport) {
    row("theorem", r.theorem_id.as_str());
    for (k, v) in &r.inputs {
        row(k, &num(*v));
    }
    for (k, v) in &r.constants {
        row(k, &num(*v));
    }
    row("bound", &if r.log_space { log_num(r.bound_value) } else { num(r.bound_value) });
    if !r.valid {
        row("valid", "false (a precondition of the inequality does not hold)");
    }
}

fn interval_inputs(s: &GeneralizedDirichletSeries) -> Result<IntervalInputs, Error> {
    let p = s.class_params()?;
    Ok(IntervalInputs { l1: Some(s.l1_norm()?.upper), l2: Some(s.l2_norm()), c: p.c, lambda1: p.lambda1, k: p.k })
}

fn bound(a: BoundArgs) -> CliResult {
    use BoundVariant as V;
    let series = || -> Result<GeneralizedDirichletSeries, Error> {
        let path = a.series.as_ref().ok_or_else(|| Error::InvalidParameter("this variant needs --series".into()))?;
        load_series(path)
    };
    let mut reports = Vec::new();
    match a.variant {
        V::Hurwitz => reports.push(hurwitz_lower_bound(a.alpha, a.delta, HurwitzVariant::HurwitzLerch)?),
        V::HurwitzUniform => reports.push(hurwitz_lower_bound(a.alpha, a.delta, HurwitzVariant::Uniform)?),
        V::LocalL2 => {
            let s = series()?;
            reports.push(local_l2_bound(s.l2_norm(), s.separation_constant()?, a.d)?);
        }
        V::TailL1 | V::TailL2 | V::TailClassical => {
            let s = series()?;
            let rest = s.minus_leading();
            let p = s.class_params()?;
            reports.push(match a.variant {
                V::TailL1 => l1_tail_from_l1(rest.l1_norm()?.upper, p.lambda1, a.d)?,
                V::TailL2 => l1_tail_from_l2(rest.l2_norm(), p.c, p.lambda1, a.d)?,
                _ => l1_tail_classical(rest.l2_norm(), a.d)?,
            });
        }
        V::LogPlusH2 | V::LogPlusL1 | V::LogMinusH2 | V::LogMinusL1 => {
            let s = series()?;
            let mode = match a.variant {
                V::LogPlusH2 | V::LogMinusH2 => NormMode::H2 { l2: s.l2_norm(), c: s.separation_constant()? },
                _ => NormMode::L1 { l1: s.l1_norm()?.upper },
            };
            reports.push(match a.variant {
                V::LogPlusH2 | V::LogPlusL1 => log_plus_weighted_bound(mode, a.d)?,
                _ => log_minus_weighted_bound(&s, a.d, mode)?,
            });
        }
        V::ShortL1 | V::ShortH2 | V::BoundedH2 | V::BoundedH2AltD | V::BoundedL1 => {
            let inp = interval_inputs(&normalized(series()?)?)?;
            let v = match a.variant {
                V::ShortL1 => ShortVariant::L1,
                V::ShortH2 => ShortVariant::H2 { xi: a.xi },
                V::BoundedH2 => ShortVariant::BoundedH2 { alt_d: false },
                V::BoundedH2AltD => ShortVariant::BoundedH2 { alt_d: true },
                _ => ShortVariant::BoundedL1,
            };
            let (minus, plus) = short_interval_log_bounds(&inp, a.delta, v)?;
            reports.push(minus);
            reports.extend(plus);
        }
        _ => {
            let inp = interval_inputs(&normalized(series()?)?)?;
            let v = match a.variant {
                V::SupL1 => LowerVariant::SupL1,
                V::SupH2 => LowerVariant::SupH2,
                V::LpL1 => LowerVariant::LpL1,
                V::LpH2 => LowerVariant::LpH2,
                V::LpBoundedH2 => LowerVariant::LpBoundedH2,
                V::LpBoundedL1 => LowerVariant::LpBoundedL1,
                V::SupBoundedH2 => LowerVariant::SupBoundedH2,
                _ => LowerVariant::SupBoundedL1,
            };
            reports.push(supnorm_lp_lower_bounds(&inp, a.delta, a.p, v)?);
        }
    }
    for (i, r) in reports.iter().enumerate() {
        if reports.len() > 1 {
            println!("{}", if i == 0 { "-- log- side" } else { "-- log+ side" });
        }
        print_report(r);
    }
    write_json(&a.out.out, &json!(reports))
}

fn nonvanishing(a: NonvanishingArgs) -> CliResult {
    let s = normalized(load_series(&a.series.series)?)?;
    let p = s.class_params()?;
    let rest = s.minus_leading();
    let (variant, rate) = match a.variant {
        NonvanishingKind::L1 => (NonvanishingVariant::L1 { l1_minus_1: rest.l1_norm()?.upper }, p.lambda1),
        NonvanishingKind::H2 => (NonvanishingVariant::H2 { l2_minus_1: rest.l2_norm() }, p.k),
        NonvanishingKind::Bounded => {
            if s.coefficients().iter().any(|c| c.norm() > 1.0 + 1e-12) {
                return Err(Error::InvalidParameter("the bounded variant needs |a_n| <= 1".into()).into());
            }
            (NonvanishingVariant::BoundedCoeff, p.k)
        }
    };
    let r = nonvanishing_abscissa(variant, p.c, rate, a.xi)?;
    print_report(&r);
    // Sample |L| on the shifted line over t ∈ [0, 100].
    let x = r.bound_value;
    let mut min = f64::INFINITY;
    let mut max = 0.0f64;
    for i in 0..=10_000 {
        let v = s.evaluate(Complex64::new(s.sigma() + x, i as f64 * 0.01), 1e-12)?.value.norm();
        min = min.min(v);
        max = max.max(v);
    }
    row("sampled_min", &num(min));
    row("sampled_max", &num(max));
    let ok = min >= a.xi - 1e-6 && max <= 2.0 - a.xi + 1e-6;
    row("check", if ok { "pass" } else { "FAIL" });
    write_json(&a.out.out, &json!({ "report": r, "sampled_min": min, "sampled_max": max, "pass": ok }))?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn integrate(a: IntegrateArgs) -> CliResult {
    let s = load_series(&a.series.series)?;
    let sigma = a.sigma.unwrap_or(s.sigma());
    let (lo, hi) = (a.t, a.t + a.d);
    let out = match a.variant {
        IntegralKind::Sup => {
            let r = interval_sup(&s, sigma, lo, hi, 64)?;
            row("sup", &num(r.value));
            row("argmax", &num(r.argmax));
            json!({ "sup": r.value, "argmax": r.argmax })
        }
        kind => {
            let r = match kind {
                IntegralKind::AbsPow => integrate_abs_pow(&s, sigma, lo, hi, a.p, a.tol)?,
                IntegralKind::LogPlus => integrate_log(&s, sigma, lo, hi, LogSign::Plus, a.tol)?,
                IntegralKind::LogMinus => integrate_log(&s, sigma, lo, hi, LogSign::Minus, a.tol)?,
                IntegralKind::PoissonPlus => {
                    let cap = s.l1_norm_at(sigma)?.upper.ln().max(0.0);
                    poisson_log_integral(&s, sigma, a.d, LogSign::Plus, a.tol, cap)?
                }
                _ => {
                    let rest = s.shift(sigma - s.sigma()).minus_leading().l1_norm()?.upper;
                    let floor = s.coefficients()[0].norm() - rest;
                    if floor.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
                        return Err(Error::InvalidParameter(
                            "the log- tail needs |a0| > sum of the other |a_n| on the line".into(),
                        )
                        .into());
                    }
                    poisson_log_integral(&s, sigma, a.d, LogSign::Minus, a.tol, (-floor.ln()).max(0.0))?
                }
            };
            row("value", &num(r.value));
            row("error_estimate", &num(r.error_estimate));
            row("truncation_tail", &num(r.truncation_tail));
            row("subdivisions", &r.subdivisions.to_string());
            json!({
                "value": r.value,
                "error_estimate": r.error_estimate,
                "truncation_tail": r.truncation_tail,
                "subdivisions": r.subdivisions,
                "flagged_panels": r.flagged_panels,
            })
        }
    };
    write_json(&a.out.out, &out)
}

fn configure(kind: Option<ExperimentKind>, a: &ExperimentArgs) -> Result<ExperimentConfig, Error> {
    let mut c = match (&a.config, kind) {
        (Some(p), Some(k)) => {
            let c = ExperimentConfig::load(p)?;
            if c.experiment != k {
                return Err(Error::InvalidParameter(format!(
                    "config is for {} but {} was requested",
                    c.experiment.as_str(),
                    k.as_str()
                )));
            }
            c
        }
        (Some(p), None) => ExperimentConfig::load(p)?,
        (None, Some(k)) => ExperimentConfig::new(k),
        (None, None) => return Err(Error::InvalidParameter("give --experiment or --config".into())),
    };
    if !a.delta.is_empty() {
        c.deltas = Some(a.delta.clone());
    }
    if let Some(s) = a.seed {
        c.seed = s;
    }
    if a.threads.is_some() {
        c.threads = a.threads;
    }
    if a.out.is_some() {
        c.output = a.out.clone();
    }
    c.validate()?;
    Ok(c)
}

fn report(r: &ExperimentResult, out: Option<&Path>) -> CliResult {
    let s = &r.summary;
    row("experiment", &s.experiment);
    row("seed", &s.seed.to_string());
    row("records", &s.records.to_string());
    row("failures", &s.failures.to_string());
    row("min_margin", &num(s.min_margin));
    for (k, v) in &s.min_margin_by_theorem {
        row(&format!("min_margin/{k}"), &num(*v));
    }
    for (k, v) in &s.empirical {
        row(k, &num(*v));
    }
    for n in &s.notes {
        println!("note: {n}");
    }
    for f in r.failures().take(10) {
        println!(
            "FAIL {} [{}] measured {} bound {} margin {} {}",
            f.theorem,
            f.inputs,
            num(f.measured),
            if f.side == CheckSide::Lower { log_num(f.log_bound) } else { num(f.bound) },
            num(f.margin),
            f.note
        );
    }
    if let Some(p) = out {
        let summary = r.write(p)?;
        log::info!("wrote {} and {}", p.display(), summary.display());
    }
    if s.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_configured(c: ExperimentConfig) -> CliResult {
    let r = run_experiment(&c)?;
    report(&r, c.output.as_deref())
}

fn scan(a: ScanArgs) -> CliResult {
    let kind = a.variant.map(|v| match v {
        ScanKind::Hurwitz => ExperimentKind::HurwitzScan,
        ScanKind::Lerch => ExperimentKind::LerchScan,
        ScanKind::Riemann => ExperimentKind::RiemannAsymptotic,
    });
    let kind = kind.or(if a.common.config.is_none() { Some(ExperimentKind::HurwitzScan) } else { None });
    let mut c = configure(kind, &a.common)?;
    if !matches!(
        c.experiment,
        ExperimentKind::HurwitzScan | ExperimentKind::LerchScan | ExperimentKind::RiemannAsymptotic
    ) {
        return Err(Error::InvalidParameter(format!("{} is not a scan", c.experiment.as_str())).into());
    }
    if !a.alpha.is_empty() {
        c.alphas = Some(a.alpha.clone());
        c.validate()?;
    }
    run_configured(c)
}

fn dispatch(cli: Cli) -> CliResult {
    match cli.command {
        Command::Norms(a) => norms(a),
        Command::Constants(a) => constants(a),
        Command::Bound(a) => bound(a),
        Command::Nonvanishing(a) => nonvanishing(a),
        Command::Integrate(a) => integrate(a),
        Command::Scan(a) => scan(a),
        Command::Minmax(a) => run_configured(configure(Some(ExperimentKind::MinMax), &a)?),
        Command::Verify(a) => {
            let kind = a.experiment.as_deref().map(ExperimentKind::parse).transpose()?;
            run_configured(configure(kind, &a.common)?)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("HD_LOG_LEVEL", "error")).init();
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
