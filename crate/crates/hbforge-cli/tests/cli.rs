//! End-to-end tests of the binary: output contract, exit codes, JSON mode,
//! environment overrides and determinism.

use std::process::{Command, Output};

fn hbforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbforge"))
        .args(args)
        .env_remove("HBFORGE_FIELD")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn gb_basic() {
    let out = hbforge(&["gb", "x^2 + y, y"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("x^2"), "{text}");
    assert!(text.contains('y'), "{text}");
}

#[test]
fn gb_json_is_valid() {
    let out = hbforge(&["--json", "gb", "x*y - z^2, x^2 - y*z"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert!(v.get("basis").and_then(|b| b.as_array()).is_some(), "{v}");
}

#[test]
fn normal_form_reduces() {
    let out = hbforge(&["nf", "x^2*y + z", "x^2, y^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains('z'));
}

#[test]
fn unknown_registry_id_is_an_error() {
    let out = hbforge(&["verify", "no-such-entry"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn composite_field_is_an_error() {
    let out = hbforge(&["--field", "91", "gb", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not prime"), "{}", stderr(&out));
}

#[test]
fn field_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_hbforge"))
        .args(["gb", "x"])
        .env("HBFORGE_FIELD", "91")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // an explicit flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_hbforge"))
        .args(["--field", "32003", "gb", "x"])
        .env("HBFORGE_FIELD", "91")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn budget_exhaustion_is_an_error_not_a_fail() {
    let out = hbforge(&["--budget-deg", "1", "gb", "x^2 + y*z, x*y^2 - z^3"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).to_lowercase().contains("budget"));
}

#[test]
fn lintype_reports_both_ways() {
    // query commands always exit 0 and print the verdict
    let yes = hbforge(&["lintype", "x, y"]);
    assert_eq!(yes.status.code(), Some(0), "{}", stderr(&yes));
    assert!(stdout(&yes).contains("true"));
    let no = hbforge(&["--vars", "x,y", "lintype", "x^2, x*y, y^2"]);
    assert_eq!(no.status.code(), Some(0), "{}", stderr(&no));
    assert!(stdout(&no).contains("false"));
}

#[test]
fn rational_field_works() {
    let out = hbforge(&["--field", "Q", "gb", "2*x^2 - y^2, 3*x*y"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn points_report_runs() {
    let out = hbforge(&["points", "report", "-n", "6", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains('s'), "{text}");
}

#[test]
fn verify_single_entry_passes() {
    let out = hbforge(&["verify", "deg4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("facts pass"));
}

#[test]
fn verify_all_is_deterministic() {
    let a = hbforge(&["verify", "--all"]);
    let b = hbforge(&["verify", "--all"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    // every registered entry appears and nothing fails
    let text = stdout(&a);
    assert!(!text.contains("FAIL"), "{text}");
    for id in ["deg4", "degree6", "zaq-2", "resofj-6-3", "tight-betti-5-3"] {
        assert!(text.contains(id), "missing {id} in {text}");
    }
}

#[test]
fn hilbert_of_a_point_scheme() {
    let out = hbforge(&["--json", "hilbert", "x^2, x*y, y^2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["height"], 2);
    assert_eq!(v["multiplicity"], 3);
}
