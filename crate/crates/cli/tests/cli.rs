use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn inhomo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inhomo"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str, args: &[&str]) {
    let out = inhomo(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let want: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let got: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(got, want);
}

#[test]
fn golden_m_of_gamma_star_over_golden_ratio() {
    golden(
        "m_golden_ratio_gamma_star.json",
        &[
            "--json",
            "approx",
            "m",
            "--alpha",
            "[0;(3)*]-",
            "--gamma",
            "(0+1*sqrt(5))/5",
            "--exact",
        ],
    );
}

#[test]
fn golden_rho_search_period_two() {
    golden(
        "rho_search_3_5.json",
        &[
            "--json",
            "approx",
            "rho-search",
            "--alpha",
            "[0; (3, 5)*]-",
            "--period-mult",
            "2",
        ],
    );
}

#[test]
fn golden_bound_report() {
    golden(
        "bound_report_3.json",
        &["--json", "--digits", "6", "bound", "report", "--r", "3"],
    );
}

#[test]
fn golden_reconstruct() {
    golden(
        "reconstruct_half.json",
        &[
            "--json",
            "gamma",
            "reconstruct",
            "b: [1, (0, 2, 0)*] over [0; (3)*]-",
        ],
    );
}

#[test]
fn golden_ncf_expand() {
    golden(
        "ncf_expand_3_5.json",
        &["--json", "ncf", "expand", "(15-sqrt(165))/6"],
    );
}

#[test]
fn bound_report_text_shows_exact_and_reciprocal() {
    let out = inhomo(&["--digits", "6", "bound", "report", "--r", "3"]);
    assert!(stdout(&out).contains("C(3) = 0.054371 = 1/18.392304..."));
}

#[test]
fn bound_table_rows() {
    let text = stdout(&inhomo(&["bound", "table"]));
    assert!(text.contains(" 2  25.1592...           -"));
    assert!(text.contains(" 6   6.8120...   6.6568..."));
    let json: Value =
        serde_json::from_str(&stdout(&inhomo(&["--json", "bound", "table"]))).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 7);
}

#[test]
fn record_round_trips_through_the_library() {
    let out = inhomo(&[
        "--json",
        "approx",
        "m",
        "--alpha",
        "[0; (3)*]-",
        "--gamma",
        "1/2",
    ]);
    let rec = inhomo::Record::from_json(&stdout(&out)).unwrap();
    assert_eq!(rec.kind, "upper_bound_only");
    assert_eq!(
        rec.value().unwrap().unwrap().to_string(),
        "(0+1*sqrt(5))/20"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(inhomo(&["approx", "m", "--bogus"]).status.code(), Some(1));
    assert_eq!(
        inhomo(&["--digits", "51", "bound", "table"]).status.code(),
        Some(1)
    );
    assert_eq!(inhomo(&["verify", "nope"]).status.code(), Some(1));
    assert_eq!(inhomo(&["ncf", "value", "[0; 3,"]).status.code(), Some(2));
    assert_eq!(inhomo(&["ncf", "expand", "3/2"]).status.code(), Some(3));
    assert_eq!(
        inhomo(&["bound", "report", "--r", "2"]).status.code(),
        Some(3)
    );
    assert_eq!(inhomo(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_writes_report() {
    let path = std::env::temp_dir().join(format!("inhomo-verify-{}.txt", std::process::id()));
    let out = inhomo(&[
        "verify",
        "identities",
        "--seed",
        "7",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let log = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(log.starts_with("PASS"));
}
