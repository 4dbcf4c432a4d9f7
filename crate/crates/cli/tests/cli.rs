use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn teichext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_teichext")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn value_line(args: &[&str]) -> String {
    let out = teichext(args);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    stdout(&out).trim_end().to_string()
}

#[test]
fn evaluates_closed_forms() {
    assert_eq!(value_line(&["ext", "--tau", "0,1", "--fol", "1,0"]), "1");
    assert_eq!(value_line(&["dist", "--from", "0,1", "--to", "0,2"]), "0.346573590279973");
    assert_eq!(value_line(&["dist", "--from", "0,1", "--to", "0,2", "--method", "brute"]), "0.346573590279973");
    assert_eq!(value_line(&["levi", "--tau", "0,1", "--fol", "1,0", "--v", "1,0"]), "0.5");
    assert_eq!(value_line(&["eta", "--tau", "0,1", "--fol", "1,0", "--v", "1,0"]), "0,-0.5");
    assert_eq!(value_line(&["jmap", "--tau0", "0,1", "--fol", "1,0", "--tau", "0,2"]), "-0.25,0");
    assert_eq!(value_line(&["ext", "--tau", "-1,0.5", "--fol", "-1,2"]), "20");
}

#[test]
fn bad_arguments_exit_2() {
    for args in [
        vec!["ext", "--tau", "0,-1", "--fol", "1,0"],
        vec!["ext", "--tau", "0,1", "--fol", "0,0"],
        vec!["ext", "--tau", "zero", "--fol", "1,0"],
        vec!["ext", "--tau", "0,1"],
        vec!["dist", "--from", "0,1", "--to", "0,2", "--method", "brute", "--bound", "0"],
        vec!["frobnicate"],
    ] {
        let out = teichext(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(stdout(&out).is_empty(), "{args:?}");
        assert!(!stderr(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn periods_of_the_unit_pillowcase() {
    let out = teichext(&["periods", corpus("pillowcase_1x1.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cover"], "connected");
    assert_eq!(v["genus"], 0);
    assert_eq!(v["cone_angles"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(v["odd_rank"], 2);
    assert!((v["ext_bilinear"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!((v["area"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(v["slack"].as_f64().unwrap() < 1e-9);
}

#[test]
fn periods_text_report() {
    let text = value_line(&["periods", corpus("square_torus.json").to_str().unwrap()]);
    assert!(text.contains("cover: orientable"), "{text}");
    assert!(text.contains("area: 1\n"), "{text}");
    for key in ["genus", "cone_angles", "generic", "odd_rank", "periods", "ext_bilinear", "slack"] {
        assert!(text.lines().any(|l| l.starts_with(&format!("{key}: "))), "{key} missing");
    }
}

#[test]
fn periods_csv_report() {
    let out = teichext(&["periods", corpus("folded_pentagon.json").to_str().unwrap(), "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("field,value\n"));
    let angles = text.lines().find_map(|l| l.strip_prefix("cone_angles,")).unwrap();
    let mut angles: Vec<&str> = angles.split(' ').collect();
    angles.sort_unstable();
    assert_eq!(angles, ["1pi", "1pi", "1pi", "1pi", "1pi", "3pi"]);
    assert!(text.contains("area,8\n"), "{text}");
    assert!(!text.contains('\r'));
}

#[test]
fn disconnected_cover_exit_3_only_when_required() {
    let path = corpus("square_torus.json");
    assert_eq!(code(&teichext(&["periods", path.to_str().unwrap()])), 0);
    let out = teichext(&["periods", path.to_str().unwrap(), "--require-connected"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("disconnected"));
    let out = teichext(&["periods", corpus("pillowcase_1x2.json").to_str().unwrap(), "--require-connected"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn malformed_gluing_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let mismatched = dir.path().join("mismatched.json");
    std::fs::write(
        &mismatched,
        r#"{"polygons": [[[0,0],[1,0],[1,1],[0,1]]],
            "pairings": [{"a":[0,0],"b":[0,2],"flip":false},{"a":[0,1],"b":[0,2],"flip":false}]}"#,
    )
    .unwrap();
    let out = teichext(&["periods", mismatched.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("pairing 1"), "{err}");
    assert_eq!(err.lines().count(), 1, "{err}");

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"polygons\": 3}").unwrap();
    assert_eq!(code(&teichext(&["periods", garbage.to_str().unwrap()])), 2);
    assert_eq!(code(&teichext(&["periods", dir.path().join("missing.json").to_str().unwrap()])), 2);
}

fn report(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("report is valid JSON")
}

#[test]
fn minsky_suite_has_nonnegative_slack() {
    let out = teichext(&["verify", "minsky", "--samples", "10000", "--seed", "7"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = report(&out);
    assert_eq!(v["schema_version"], "1");
    let check = &v["results"][0]["checks"][0];
    assert_eq!(check["samples"], 10000);
    assert_eq!(check["seed"], 7);
    assert!(check["min_slack"].as_f64().unwrap() >= 0.0);
}

#[test]
fn impossible_tolerance_fails_and_still_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = teichext(&["verify", "log-psh", "--tol", "1e-20", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["invocation"]["config"]["tol"], 1e-20);
    assert_eq!(v["results"][0]["pass"], false);
}

#[test]
fn config_errors_exit_2() {
    for args in [
        vec!["verify", "log-psh", "--samples", "0"],
        vec!["verify", "log-psh", "--tol", "-1"],
        vec!["verify", "log-psh", "--h", "0"],
        vec!["verify", "nonsense"],
        vec!["verify", "log-psh", "--format", "xml"],
    ] {
        let out = teichext(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(stdout(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn full_run_reports_every_suite() {
    let out = teichext(&["verify", "all", "--seed", "42"]);
    let v = report(&out);
    let results = v["results"].as_array().unwrap();
    assert!(results.len() >= 8);
    let all_pass = results.iter().all(|r| r["pass"] == true);
    assert_eq!(code(&out), if all_pass { 0 } else { 1 });
    for name in ["log-psh", "reciprocal", "distance", "horoball", "currents", "minsky", "duality", "gardiner"] {
        let r = results.iter().find(|r| r["suite"] == name).unwrap_or_else(|| panic!("{name} missing"));
        assert_eq!(r["pass"], true, "{name}: {r}");
    }
}

#[test]
fn report_echoes_defaults() {
    let v = report(&teichext(&["verify", "minsky", "--samples", "10"]));
    let inv = &v["invocation"];
    assert_eq!(inv["command"], "verify");
    assert_eq!(inv["config"]["seed"], 0);
    assert_eq!(inv["config"]["h"], 1e-3);
    assert_eq!(inv["config"]["bound"], 100);
    assert_eq!(inv["config"]["grid"], 50);
    assert_eq!(inv["tolerances"]["exact"], 1e-12);
    assert_eq!(inv["tolerances"]["closed_form"], 1e-9);
    assert_eq!(inv["tolerances"]["finite_difference"], 1e-6);
}

#[test]
fn report_reproduces_the_printed_summary() {
    let out = teichext(&["verify", "currents", "--samples", "10", "--seed", "3"]);
    let v = report(&out);
    let checks: Vec<teichext::VerificationReport> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["checks"].as_array().unwrap().clone())
        .map(|c| serde_json::from_value(c).unwrap())
        .collect();
    let printed: Vec<String> =
        stderr(&out).lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).map(String::from).collect();
    let rebuilt: Vec<String> = checks.iter().map(|c| c.summary_line()).collect();
    assert_eq!(printed, rebuilt);
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["verify", "all", "--seed", "5", "--samples", "20"];
    let (a, b) = (teichext(&args), teichext(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.starts_with(b"\xEF\xBB\xBF"));
}

#[test]
fn csv_verify_report() {
    let out = teichext(&["verify", "duality", "--samples", "5", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "suite,check,samples,min_slack,tolerance,pass,seed,witness");
    assert!(lines.next().unwrap().starts_with("duality,duality/j-derivative,5,"));
    assert!(!text.contains('\r'));
}

fn grid_rows(args: &[&str]) -> Vec<Vec<f64>> {
    let out = teichext(args);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(!text.contains('\r'));
    text.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect()
}

#[test]
fn log_ext_grid_is_minus_log_height() {
    let out = teichext(&["grid", "log-ext"]);
    assert_eq!(stdout(&out).lines().next().unwrap(), "re,im,log-ext");
    let rows = grid_rows(&["grid", "log-ext", "--fol", "1,0", "--region", "-1,1,0.5,2", "--resolution", "50"]);
    assert_eq!(rows.len(), 2500);
    for r in &rows {
        assert!((r[2] + r[1].ln()).abs() < 1e-12, "{r:?}");
    }
    assert_eq!(rows[0][..2], [-1.0, 0.5]);
    assert_eq!(rows[1][..2], [-1.0 + 2.0 / 49.0, 0.5]);
}

#[test]
fn rho_grid_lies_strictly_between_minus_one_and_zero() {
    let rows = grid_rows(&["grid", "rho", "--fol", "1,0", "--fol", "0,1", "--c", "1"]);
    assert_eq!(rows.len(), 2500);
    assert!(rows.iter().all(|r| -1.0 < r[2] && r[2] < 0.0));
}

#[test]
fn single_point_grid() {
    let rows = grid_rows(&["grid", "dist", "--region", "0,0,1,1", "--resolution", "1"]);
    assert_eq!(rows, vec![vec![0.0, 1.0, 0.0]]);
    let out = teichext(&["grid", "ext", "--region", "0,0,1,1", "--resolution", "1", "--format", "json"]);
    let v = report(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
    assert_eq!(v["results"][0]["value"], 1.0);
    assert_eq!(v["invocation"]["resolution"], serde_json::json!([1, 1]));
}

#[test]
fn grid_region_must_stay_in_the_upper_half_plane() {
    for region in ["-1,1,0,2", "-1,1,-1,2"] {
        let out = teichext(&["grid", "log-ext", "--region", region]);
        assert_eq!(code(&out), 2, "{region}");
    }
    assert_eq!(code(&teichext(&["grid", "ext", "--fol", "1,0", "--fol", "0,1"])), 2);
}

#[test]
fn grid_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let out = teichext(&["grid", "ext", "--resolution", "4x3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 13);
}
