//! End-to-end tests of the command-line binary.

use std::process::{Command, Output};

fn goldenbase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goldenbase"))
        .args(args)
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
fn catalog_lists_entries() {
    let out = goldenbase(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("logF/3"));
    assert!(text.contains("zero/len5"));
    assert!(text.contains("logSqrt5"));
    // deterministic sorted order
    let again = stdout(&goldenbase(&["catalog"]));
    assert_eq!(text, again);
}

#[test]
fn gen_pnotation_and_json_roundtrip() {
    let out = goldenbase(&["gen", "logF/3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "P(1, α^12, 6, (β^2, 3β^4, 4β^6, 3β^8, β^10, 0))"
    );

    let out = goldenbase(&["gen", "logF/3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let (expansion, tag) = goldenbase::pseries::deserialize(stdout(&out).trim()).unwrap();
    let entry = goldenbase::catalog::entry_for_name("logF/3").unwrap();
    assert_eq!(expansion, entry.expansion);
    assert_eq!(tag, entry.tag);
}

#[test]
fn gen_domain_and_name_errors() {
    let out = goldenbase(&["gen", "logF/0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("r ≠ 0 required"));

    let out = goldenbase(&["gen", "nonsense/3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = goldenbase(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_json_output() {
    let out = goldenbase(&["eval", "logF/3", "--digits", "40", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["name"], "logF/3");
    assert_eq!(doc["digits"], 40);
    assert!(doc["midpoint"]
        .as_str()
        .unwrap()
        .starts_with("0.693147180559945309417232121458"));
    assert!(doc["enclosure"].as_str().unwrap().contains('/'));
}

#[test]
fn verify_passes_and_reports() {
    let out = goldenbase(&["verify", "logF/3", "--digits", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass"));

    let out = goldenbase(&["verify", "atan12/1", "--digits", "50", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["status"], "pass");
    assert!(doc["agree_digits"].as_u64().unwrap() >= 45);
}

#[test]
fn verify_all_small() {
    let out = goldenbase(&["verify-all", "--rmax", "2", "--digits", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // r ≤ 2 families (11) + fixed singles (5) + zero relations (9)
    assert_eq!(text.lines().count(), 25);
    assert!(text.lines().all(|l| l.contains("pass")));
}

#[test]
fn zeros_all_vanish() {
    let out = goldenbase(&["zeros", "--digits", "30"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 9);
}

#[test]
fn combine_reproduces_zero_relation() {
    let out = goldenbase(&["combine", "2*logF(3) - logL(3)", "--digits", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let first = text.lines().next().unwrap();
    assert_eq!(first, "P(1, α^12, 6, (-β^2, 3β^4, 8β^6, 3β^8, -β^10, 0))");
    let mid = text
        .lines()
        .find(|l| l.starts_with("midpoint:"))
        .unwrap()
        .trim_start_matches("midpoint: ");
    assert!(mid.starts_with("0.0000000000"));
}

#[test]
fn combine_syntax_error() {
    let out = goldenbase(&["combine", "2*logF(3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("offset 8"));
}

#[test]
fn phidigits_renders_canonical_digits() {
    let out = goldenbase(&["phidigits", "logF/3", "--digits", "40", "--count", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out).trim().to_string();
    assert!(!text.is_empty());
    assert!(text.chars().all(|c| c == '0' || c == '1' || c == '.'));
    assert!(!text.contains("11"));
}

#[test]
fn help_exits_zero() {
    let out = goldenbase(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
