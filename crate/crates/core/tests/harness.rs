use hardy_dirichlet::harness::{
    run_experiment, run_soundness_sweep, summary_path, window_integrals, ExperimentConfig, ExperimentKind,
};
use hardy_dirichlet::par::Exec;
use hardy_dirichlet::special::hurwitz_zeta;
use hardy_dirichlet::Complex64;

fn small(kind: ExperimentKind) -> ExperimentConfig {
    let mut c = ExperimentConfig::new(kind);
    c.series_count = Some(12);
    c
}

#[test]
fn csv_is_identical_across_thread_counts_and_runs() {
    let mut seq = small(ExperimentKind::LocalL2Sweep);
    seq.threads = Some(1);
    let mut par = seq.clone();
    par.threads = Some(3);
    let a = run_experiment(&seq).unwrap().to_csv().unwrap();
    let b = run_experiment(&par).unwrap().to_csv().unwrap();
    let c = run_experiment(&par).unwrap().to_csv().unwrap();
    assert_eq!(a, b);
    assert_eq!(b, c);
    assert!(a.starts_with("theorem,side,inputs,measured,bound,log_bound,margin,tolerance,pass,note"));
    let mut other = par.clone();
    other.seed = 7;
    assert_ne!(run_experiment(&other).unwrap().to_csv().unwrap(), b);
}

#[test]
fn write_creates_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("nv.csv");
    let mut cfg = small(ExperimentKind::NonvanishingSweep);
    cfg.series_count = Some(4);
    let r = run_soundness_sweep(&cfg).unwrap();
    assert!(r.summary.pass, "{:?}", r.failures().next());
    let summary = r.write(&path).unwrap();
    assert_eq!(summary, summary_path(&path));
    assert_eq!(summary.file_name().unwrap(), "nv.summary.json");
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), r.records.len() + 1);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(json["experiment"], "nonvanishing_sweep");
    assert_eq!(json["failures"], 0);
    assert_eq!(json["records"].as_u64().unwrap() as usize, r.records.len());
}

#[test]
fn config_validation() {
    let ok = ExperimentConfig::from_json(r#"{"experiment":"hurwitz_scan","alphas":[0.5],"t_end":10}"#).unwrap();
    assert_eq!(ok.seed, 42);
    assert_eq!(ok.alphas(), vec![0.5]);
    assert_eq!(ok.t_step(0.05), 0.025);
    assert!(ExperimentConfig::from_json(r#"{"experiment":"hurwitz_scan","bogus":1}"#).is_err());
    assert!(ExperimentConfig::from_json(r#"{"experiment":"nope"}"#).is_err());
    for bad in [
        r#"{"experiment":"hurwitz_scan","deltas":[0.1]}"#,
        r#"{"experiment":"hurwitz_scan","alphas":[]}"#,
        r#"{"experiment":"hurwitz_scan","alphas":[1.5]}"#,
        r#"{"experiment":"hurwitz_scan","t_start":5,"t_end":1}"#,
        r#"{"experiment":"local_l2_sweep","ds":[-1]}"#,
    ] {
        assert!(ExperimentConfig::from_json(bad).is_err(), "{bad}");
    }
    let mut cfg = ExperimentConfig::new(ExperimentKind::LocalL2Sweep);
    cfg.ds = Some(vec![f64::NAN]);
    assert!(run_experiment(&cfg).is_err());
    assert!(run_soundness_sweep(&ExperimentConfig::new(ExperimentKind::Constants)).is_err());
}

#[test]
fn window_integrals_of_a_known_function() {
    // ∫_T^{T+δ} (1 + sin t) dt = δ + cos T − cos(T+δ).
    let f = |t: f64| Ok(1.0 + t.sin());
    let scan = window_integrals(&f, 0.0, 20.0, 0.5, 0.25, Exec::Sequential).unwrap();
    assert_eq!(scan.starts.len(), 81);
    for (&t, &v) in scan.starts.iter().zip(&scan.values) {
        let exact = 0.5 + t.cos() - (t + 0.5).cos();
        assert!((v - exact).abs() < 1e-10, "T={t}");
    }
    assert!(scan.running_min.windows(2).all(|w| w[1] <= w[0]));
    assert_eq!(*scan.running_min.last().unwrap(), scan.min().unwrap().1);
    assert!(window_integrals(&f, 0.0, 1.0, 0.5, 0.3, Exec::Sequential).is_err());
}

#[test]
fn zeta_windows_near_the_pole() {
    let f = |t: f64| Ok(hurwitz_zeta(Complex64::new(1.0, t), 1.0)?.norm());
    let seq = window_integrals(&f, 0.0, 2.0, 0.05, 0.025, Exec::Sequential).unwrap();
    let par = window_integrals(&f, 0.0, 2.0, 0.05, 0.025, Exec::Parallel).unwrap();
    assert_eq!(seq, par);
    assert_eq!(seq.pole_windows, vec![0]);
    // |ζ(1+it)| ≈ 1/|t| near the pole: the first window is large.
    assert!(seq.values[0] > 1e-3 && seq.values[0] > seq.values[10]);
    assert!(seq.running_min.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn short_hurwitz_scan_passes() {
    let mut cfg = ExperimentConfig::new(ExperimentKind::HurwitzScan);
    cfg.t_end = Some(5.0);
    let r = run_experiment(&cfg).unwrap();
    assert!(r.summary.pass);
    assert_eq!(r.records.len(), 3 * 201 * 2);
    let target = r.summary.empirical["asymptotic_target/delta=0.05"];
    assert!((target - 5.772e-4).abs() < 1e-7);
    assert!(r.summary.empirical["min/alpha=1;delta=0.05"] >= target);
}

#[test]
fn lerch_scan_respects_step() {
    let mut cfg = ExperimentConfig::new(ExperimentKind::LerchScan);
    cfg.t_end = Some(4.0);
    cfg.t_step = Some(0.5);
    let r = run_experiment(&cfg).unwrap();
    assert!(r.summary.pass);
    // 2 α × 2 β × 9 starts × 2 bounds.
    assert_eq!(r.records.len(), 2 * 2 * 9 * 2);
}

#[test]
fn constants_fail_only_on_the_literal_mollifier_constant() {
    let r = run_experiment(&ExperimentConfig::new(ExperimentKind::Constants)).unwrap();
    let failed: Vec<&str> = r.failures().map(|f| f.theorem.as_str()).collect();
    assert_eq!(failed, vec!["L15/mollifier-constant"]);
    assert!(r.records.iter().any(|x| x.theorem == "L15/mollifier-constant-rescaled" && x.pass));
    assert!(r.summary.runtime_seconds < 1.0);
}

#[test]
fn minmax_explorer_reports_witness_slopes() {
    let mut cfg = ExperimentConfig::new(ExperimentKind::MinMax);
    cfg.series_count = Some(1);
    cfg.max_terms = Some(6);
    let r = run_experiment(&cfg).unwrap();
    assert!(r.summary.pass, "{:?}", r.failures().next());
    for n in 1..=3 {
        let slope = r.summary.empirical[&format!("witness_slope/n={n}")];
        assert!((slope - n as f64).abs() < 0.1);
    }
    assert!(r.summary.notes.iter().any(|n| n.contains("3^n")));
}
