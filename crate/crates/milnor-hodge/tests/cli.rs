//! End-to-end tests of the milnor-hodge binary.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_milnor-hodge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn spectrum_cusp_golden() {
    assert_eq!(run_ok(&["spectrum", "--brieskorn-pham", "3,2"]), "t^(5/6) + t^(7/6)\n");
}

#[test]
fn spectrum_quasi_homogeneous_e7() {
    assert_eq!(
        run_ok(&["spectrum", "--quasi-homogeneous", "1/3,2/9"]),
        "t^(5/9) + t^(7/9) + t^(8/9) + t + t^(10/9) + t^(11/9) + t^(13/9)\n"
    );
}

#[test]
fn spectrum_suspension_matches_added_square() {
    let suspended = run_ok(&["spectrum", "--brieskorn-pham", "3,2", "--suspend", "1"]);
    let direct = run_ok(&["spectrum", "--brieskorn-pham", "3,2,2"]);
    assert_eq!(suspended, direct);
}

#[test]
fn signature_e8_golden() {
    assert_eq!(run_ok(&["signature", "--brieskorn-pham", "3,5,2"]), "-8\n");
}

#[test]
fn du_bois_golden() {
    assert_eq!(run_ok(&["du-bois", "--brieskorn-pham", "2,2"]), "true\n");
    assert_eq!(run_ok(&["du-bois", "--brieskorn-pham", "3,2"]), "false\n");
}

#[test]
fn projective_nodal_cubic_golden() {
    let sing = r#"[{"name":"p","singularity":{"brieskorn_pham":[2,2]}}]"#;
    let out = run_ok(&["projective", "--degree", "3", "--dim", "1", "--sing", sing]);
    assert!(out.contains("chi_y_virtual: 0\n"), "{out}");
    assert!(out.contains("chi_y_singular: -y\n"), "{out}");
    assert!(out.contains("degree_mt: y\n"), "{out}");
    assert!(out.contains("  at y = -1: -1\n"), "{out}");
}

#[test]
fn milnor_class_isolated_node() {
    let out = run_ok(&[
        "milnor-class",
        "--input",
        r#"{"isolated":[{"name":"x","singularity":{"brieskorn_pham":[2,2]}}]}"#,
    ]);
    assert_eq!(out, "class: y*[x]\n");
}

#[test]
fn y_eval_rows_render() {
    let out = run_ok(&["chi-y", "--brieskorn-pham", "3,2", "--y-eval", "-1,1/2"]);
    assert!(out.contains("reduced_middle: 1 - y\n"), "{out}");
    assert!(out.contains("  at y = -1: 2\n"), "{out}");
    assert!(out.contains("  at y = 1/2: 1/2\n"), "{out}");
}

#[test]
fn json_output_round_trips_to_the_same_spectrum() {
    let out = run_ok(&["spectrum", "--brieskorn-pham", "3,5,2", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    let wire: milnor_hodge::schema::SpectrumWire =
        serde_json::from_value(value["spectrum"].clone()).expect("schema round-trip");
    let back = wire.to_core().expect("valid spectrum");
    let direct = milnor_hodge::spectrum::brieskorn_pham(&[3, 5, 2]).unwrap();
    assert_eq!(back, direct);
    assert_eq!(value["milnor_number"], serde_json::json!(8));
}

#[test]
fn stratified_consistency_report() {
    let input = r#"{
        "hypersurface_dim": 2,
        "strata": [{
            "name": "p", "dim": 0, "is_singular": true,
            "milnor": {"brieskorn_pham": [2, 2, 2]},
            "t_closure": [{"symbol": "p", "coeff": [{"exponent": 0, "coeff": {"num": 1, "den": 1}}]}],
            "t_boundary": [],
            "it_closure": [{"symbol": "p", "coeff": [{"exponent": 0, "coeff": {"num": 1, "den": 1}}]}],
            "ih_cone_link_in_x": [{"exponent": 0, "coeff": {"num": 1, "den": 1}}]
        }]
    }"#;
    let out = run_ok(&["stratified", "--input", input]);
    assert!(out.contains("mt_direct: (-y)*[p]\n"), "{out}");
    assert!(out.contains("t_minus_it: 0\n"), "{out}");
    assert!(out.contains("consistency mt_direct_equals_ic: true\n"), "{out}");
    assert!(out.contains("consistency moebius_identity: true\n"), "{out}");
}

#[test]
fn stratified_reports_missing_sections_gracefully() {
    let input = r#"{
        "hypersurface_dim": 2,
        "strata": [{
            "name": "p", "dim": 0, "is_singular": true,
            "milnor": {"brieskorn_pham": [2, 2, 2]}
        }]
    }"#;
    let out = run_ok(&["stratified", "--input", input]);
    assert!(out.contains("mt_direct: unavailable"), "{out}");
    assert!(out.contains("consistency mt_direct_equals_ic: unavailable"), "{out}");
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let args = [
        "projective", "--degree", "4", "--dim", "2", "--json", "--y-eval", "-1,0,1,2/3",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_files_are_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("node.json");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, r#"{{"brieskorn_pham":[2,2]}}"#).unwrap();
    let out = run_ok(&["spectrum", "--input", path.to_str().unwrap()]);
    assert_eq!(out, "t\n");
}

#[test]
fn exit_code_ladder() {
    // Mathematical precondition: exponent below 2.
    let out = run(&["spectrum", "--brieskorn-pham", "1,2"]);
    assert_eq!(exit_code(&out), 4);
    // Non-exact quasi-homogeneous division.
    let out = run(&["spectrum", "--quasi-homogeneous", "1/2,2/5"]);
    assert_eq!(exit_code(&out), 4);
    // JSON syntax error.
    let out = run(&["chi-y", "--input", "{\"broken"]);
    assert_eq!(exit_code(&out), 2);
    // Well-formed JSON that matches no schema.
    let out = run(&["chi-y", "--input", r#"{"unknown":[1]}"#]);
    assert_eq!(exit_code(&out), 3);
    // Unknown flag.
    let out = run(&["spectrum", "--no-such-flag"]);
    assert_eq!(exit_code(&out), 2);
    // Missing input file.
    let out = run(&["chi-y", "--input", "/nonexistent/x.json"]);
    assert_eq!(exit_code(&out), 2);
    // Conflicting sources.
    let out = run(&[
        "spectrum",
        "--brieskorn-pham",
        "2,2",
        "--quasi-homogeneous",
        "1/3,1/3",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn series_order_env_does_not_change_results() {
    let base = run_ok(&["projective", "--degree", "4", "--dim", "2", "--json"]);
    let raised = bin()
        .args(["projective", "--degree", "4", "--dim", "2", "--json"])
        .env("MILNOR_HODGE_SERIES_ORDER", "12")
        .output()
        .expect("binary runs");
    assert!(raised.status.success());
    assert_eq!(base.as_bytes(), &raised.stdout[..]);
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = run(&["verify"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for i in 1..=9 {
        assert!(text.contains(&format!("criterion {i} ")), "{text}");
    }
    assert!(text.contains("result: all 9 suites passed"), "{text}");
}

#[test]
fn manual_covers_every_subcommand() {
    let out = run_ok(&["manual"]);
    for name in [
        "spectrum",
        "chi-y",
        "hodge-table",
        "signature",
        "du-bois",
        "milnor-class",
        "stratified",
        "projective",
        "verify",
    ] {
        assert!(out.contains(name), "manual is missing {name}");
    }
    assert!(out.contains("MILNOR_HODGE") || out.contains("--y-eval"), "{out}");
}
