use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use infsup::{BoundReport64, ReportOptions, Shape64};
use tempfile::TempDir;

fn infsup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infsup"))
        .args(args)
        .env_remove("INFSUP_GRID")
        .env_remove("INFSUP_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn shape(dir: &TempDir, name: &str, json: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, json).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Value column of the table row whose label starts with `label`.
fn row(table: &str, label: &str) -> f64 {
    let line = table
        .lines()
        .find(|l| l.starts_with(label))
        .unwrap_or_else(|| panic!("no row {label:?} in\n{table}"));
    line[label.len()..].split_whitespace().next().unwrap().parse().unwrap()
}

#[test]
fn disk_bounds() {
    let dir = TempDir::new().unwrap();
    let f = shape(&dir, "disk.json", r#"{"kind": "disk", "params": {"radius": 3}}"#);
    let o = infsup(&["bounds", s(&f)]);
    assert_eq!(code(&o), 0);
    let t = stdout(&o);
    assert!((row(&t, "M (inf sup P)") - 1.0).abs() < 1e-9);
    assert!((row(&t, "C upper") - 2.0).abs() < 1e-9);
    assert!((row(&t, "beta exact") - 0.5f64.sqrt()).abs() < 1e-9);
}

#[test]
fn ellipse_gamma_matches_axis_ratio() {
    let dir = TempDir::new().unwrap();
    let f = shape(&dir, "e.json", r#"{"kind": "ellipse", "params": {"a": 1, "b": 3}}"#);
    let t = stdout(&infsup(&["bounds", s(&f)]));
    assert!((row(&t, "Gamma upper") - 9.0).abs() < 1e-6);
    assert!((row(&t, "Gamma exact") - 9.0).abs() < 1e-12);
}

#[test]
fn square_bounds_and_polygon_formula() {
    let dir = TempDir::new().unwrap();
    let f = shape(&dir, "sq.json", r#"{"kind": "square", "params": {"side": 2}}"#);
    let t = stdout(&infsup(&["bounds", s(&f)]));
    let expect = 3.0 + 8f64.sqrt();
    assert!((row(&t, "M (inf sup P)") - expect).abs() < 1e-9);
    assert!((row(&t, "M, polygon formula") - expect).abs() < 1e-9);
    assert!((row(&t, "C lower (exact reference)") - 1.0 / (0.5 - 1.0 / std::f64::consts::PI)).abs() < 1e-9);
}

#[test]
fn json_report_matches_library() {
    let dir = TempDir::new().unwrap();
    let f = shape(&dir, "r.json", r#"{"kind": "rectangle", "params": {"width": 2, "height": 1}}"#);
    let o = infsup(&["bounds", s(&f), "--json"]);
    assert_eq!(code(&o), 0);
    let parsed: BoundReport64 = serde_json::from_str(&stdout(&o)).unwrap();
    let spec = Shape64::Rectangle { width: 2.0, height: 1.0 };
    let direct = BoundReport64::compute(&spec.build().unwrap(), &ReportOptions::default())
        .unwrap()
        .with_reference(spec.reference_constants());
    assert_eq!(parsed, direct);
}

#[test]
fn counterexample_verdicts() {
    for (args, verdict) in [
        (["counterexample", "cupid", "2.58"], "REFUTED"),
        (["counterexample", "cupid", "1.0"], "NOT-REFUTED"),
        (["counterexample", "octagon", "0.003"], "REFUTED"),
        (["counterexample", "stadium", "0.01"], "REFUTED"),
        (["counterexample", "stadium", "0.5"], "NOT-REFUTED"),
    ] {
        let o = infsup(&args);
        assert_eq!(code(&o), 0, "{args:?}");
        let last = stdout(&o).lines().last().unwrap().to_string();
        assert_eq!(last.split_whitespace().last().unwrap(), verdict, "{args:?}");
    }
}

#[test]
fn cupid_table_values() {
    let t = stdout(&infsup(&["counterexample", "cupid", "2.58"]));
    assert!((row(&t, "claimed lower beta^2 = sin^2(omega/2)") - 0.0337945).abs() < 1e-7);
    assert!((row(&t, "upper beta^2 from the cut") - 0.0332467).abs() < 1e-7);
}

#[test]
fn sweep_reports_threshold() {
    let o = infsup(&["counterexample", "cupid", "--sweep", "2.5:2.6:5"]);
    assert_eq!(code(&o), 0);
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert!(err.contains("c* = 2.57"), "{err}");
    let csv = stdout(&o);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("parameter,omega,m,M,"));
    assert!(lines[1].ends_with("NOT-REFUTED") && lines[5].ends_with(",REFUTED"));
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = shape(&dir, "o.json", r#"{"kind": "octagon", "params": {"q": 0.25}}"#);
    let a = infsup(&["sweep", s(&f), "--param", "q", "--range", "0.1:0.4:4"]);
    let b = infsup(&["sweep", s(&f), "--param", "q", "--range", "0.1:0.4:4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let a = infsup(&["bounds", s(&f), "--json"]);
    let b = infsup(&["bounds", s(&f), "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_floats_round_trip() {
    let o = infsup(&["counterexample", "stadium", "--sweep", "0.01:0.02:2"]);
    let csv = stdout(&o);
    let first = csv.lines().nth(1).unwrap().split(',').next().unwrap();
    assert_eq!(first, "1.0000000000000000e-2");
    assert_eq!(first.parse::<f64>().unwrap(), 0.01);
}

#[test]
fn check_star_off_center_disk() {
    let dir = TempDir::new().unwrap();
    let f = shape(&dir, "d.json", r#"{"kind": "disk", "params": {"radius": 1}, "center": [0.5, 0]}"#);
    let o = infsup(&["check-star", s(&f)]);
    assert_eq!(code(&o), 0);
    let t = stdout(&o);
    assert!((row(&t, "rho_max") - 0.5).abs() < 1e-9);
    assert!((row(&t, "R_min") - 1.5).abs() < 1e-9);
}

#[test]
fn check_star_square_apothem() {
    let dir = TempDir::new().unwrap();
    let f = shape(&dir, "sq.json", r#"{"kind": "square", "params": {"side": 2}}"#);
    let t = stdout(&infsup(&["check-star", s(&f)]));
    assert!((row(&t, "rho_max") - 1.0).abs() < 1e-9);
    assert!((row(&t, "R_min") - 2f64.sqrt()).abs() < 1e-9);
    assert!((row(&t, "tau") - std::f64::consts::FRAC_PI_4).abs() < 1e-9);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let sq = shape(&dir, "sq.json", r#"{"kind": "square", "params": {"side": 2}}"#);
    let bad = shape(&dir, "bad.json", r#"{"kind": "ellipse", "params": {"a": 1}}"#);
    let ell = shape(
        &dir,
        "l.json",
        r#"{"kind": "polygon", "vertices": [[0,0],[4,0],[4,1],[1,1],[1,4],[0,4]], "center": [3.5, 3.5]}"#,
    );
    let svg = dir.path().join("sq.svg");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["bounds", s(&bad)], 2),
        (vec!["bounds", "/no/such/file.json"], 2),
        (vec!["counterexample", "hexagon", "1"], 2),
        (vec!["counterexample", "cupid", "-1"], 2),
        (vec!["counterexample", "cupid"], 2),
        (vec!["--grid", "4", "bounds", s(&sq)], 2),
        (vec!["sweep", s(&sq), "--param", "side", "--range", "1:2"], 2),
        (vec!["bounds", s(&ell)], 3),
        (vec!["check-star", s(&ell)], 3),
        (vec!["check-star", s(&sq), "--center", "1", "0"], 3),
        (vec!["plot", s(&sq), "--out", "/no/such/dir/x.svg"], 4),
        (vec!["plot", s(&sq), "--out", s(&svg)], 0),
    ];
    for (args, expect) in cases {
        let o = infsup(&args);
        assert_eq!(code(&o), expect, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("c.txt");
    let o = infsup(&["counterexample", "octagon", "0.003", "--out", s(&out)]);
    assert_eq!(code(&o), 0);
    assert!(std::fs::read_to_string(&out).unwrap().contains("REFUTED"));
    let o = infsup(&["counterexample", "octagon", "0.003", "--out", "/no/such/dir/c.txt"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn grid_flag_and_env_override_file_options() {
    let dir = TempDir::new().unwrap();
    let f = shape(&dir, "sq.json", r#"{"kind": "square", "params": {"side": 1}, "options": {"grid": 8}}"#);
    assert_eq!(code(&infsup(&["bounds", s(&f)])), 2);
    assert_eq!(code(&infsup(&["--grid", "512", "bounds", s(&f)])), 0);
    let o = Command::new(env!("CARGO_BIN_EXE_infsup"))
        .args(["bounds", s(&f)])
        .env("INFSUP_GRID", "512")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}
