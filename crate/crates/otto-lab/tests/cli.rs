use std::process::{Command, Output};

fn otto_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_otto-lab")).args(args).output().expect("spawn otto-lab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn sweep_writes_header_and_rows() {
    let out = otto_lab(&[
        "sweep", "--device", "engine", "--regime", "sc", "--quantity", "eta_omega", "--start", "0.1", "--stop",
        "0.9", "--steps", "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "eta_c,eta_omega_sc");
    assert_eq!(lines.len(), 11);
    assert!(!text.contains('\r'));
}

#[test]
fn fridge_sweep_leaves_infeasible_cells_empty() {
    let out = otto_lab(&[
        "sweep", "--device", "fridge", "--regime", "se", "--quantity", "cop_omega", "--start", "0.5", "--stop",
        "2", "--steps", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(rows[0].ends_with(','));
    assert!(!rows[3].ends_with(','));
}

#[test]
fn sweep_usage_and_domain_errors() {
    let reversed = otto_lab(&["sweep", "--device", "engine", "--start", "0.9", "--stop", "0.1", "--steps", "5"]);
    assert_eq!(reversed.status.code(), Some(1));
    let outside = otto_lab(&["sweep", "--device", "engine", "--start", "0.1", "--stop", "1.5", "--steps", "5"]);
    assert_eq!(outside.status.code(), Some(2));
}

#[test]
fn sweep_to_file() {
    let path = std::env::temp_dir().join(format!("otto-lab-sweep-{}.csv", std::process::id()));
    let out = otto_lab(&[
        "sweep", "--device", "engine", "--start", "0.2", "--stop", "0.8", "--steps", "3", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written.lines().count(), 4);
}

#[test]
fn point_engine() {
    let out = otto_lab(&["point", "--device", "engine", "--regime", "sc", "--value", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["eta_omega"].as_f64().unwrap() - 0.1780).abs() < 1e-4);
    assert!(v["trace_K"].is_number());

    let at_one = json(&otto_lab(&["point", "--device", "engine", "--regime", "sc", "--value", "0.5", "--z", "1"]));
    assert_eq!(at_one["eta"].as_f64(), Some(0.0));
}

#[test]
fn point_reports_domain_errors_as_json() {
    let out = otto_lab(&["point", "--device", "fridge", "--regime", "se", "--value", "1.0"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "infeasible_device");
}

#[test]
fn verify_fails_with_impossible_tolerance() {
    let out = otto_lab(&["verify", "--tol-omega", "1e-15"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn bad_arguments_exit_one() {
    assert_eq!(otto_lab(&["figure", "--id", "fig9"]).status.code(), Some(1));
    assert_eq!(otto_lab(&["figure", "--id", "fig2", "--steps", "10"]).status.code(), Some(1));
    assert_eq!(otto_lab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(otto_lab(&["--help"]).status.code(), Some(0));
}

#[test]
fn figures_are_deterministic() {
    let a = otto_lab(&["figure", "--id", "fig6", "--steps", "60"]);
    let b = otto_lab(&["figure", "--id", "fig6", "--steps", "60"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("zeta_c,cop_omega_adi,cop_omega_sc,cop_omega_se,cop_omega_ss\n"));
}
