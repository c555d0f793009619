use std::process::Command;

use cosymplectic::report::{Report, Status};

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cosymplectic"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Report) {
    let (code, out) = run(args);
    (code, serde_json::from_str(&out).expect("valid report JSON"))
}

#[test]
fn verify_identities_exit_codes() {
    assert_eq!(run(&["verify-identities", "--n", "1"]).0, 0);
    assert_eq!(run(&["verify-identities", "--n", "9"]).0, 2);
    assert_eq!(run(&["verify-identities", "--n", "1", "--inject-sign-flip"]).0, 1);
}

#[test]
fn verify_identities_json_lists_each_identity_once() {
    let (code, report) = json(&["verify-identities", "--n", "1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(report.status, Status::Pass);
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(names, sorted);
    assert!(names.contains(&"L_Lambda_H"));
}

#[test]
fn so41_json_has_45_pairs() {
    let (code, report) = json(&["so41-check", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(report.so41.unwrap().pairs.len(), 45);
    assert_eq!(run(&["so41-check", "--inject-sign-flip"]).0, 1);
    assert_eq!(run(&["so41-check", "--n", "0"]).0, 2);
}

#[test]
fn betti_fixtures() {
    let (_, report) = json(&["betti", "--n", "1", "--bh", "1,0,4,0,1", "--json"]);
    assert_eq!(report.betti.unwrap().betti, vec![1, 3, 7, 13, 13, 7, 3, 1]);
    let (_, report) = json(&["betti", "--n", "1", "--bh", "1,0,22,0,1", "--json"]);
    assert!(report.betti.unwrap().series.starts_with("1 + 3t + 25t^2"));
    let (_, report) = json(&["betti", "--n", "1", "--bh", "1,4,6,4,1", "--json"]);
    assert_eq!(report.betti.unwrap().betti, vec![1, 7, 21, 35, 35, 21, 7, 1]);
    assert_eq!(run(&["betti", "--n", "2", "--bh", "1,0,4,0,1"]).0, 2);
    assert_eq!(run(&["betti", "--n", "1", "--bh", "1,0,1,0,1"]).0, 1);
}

#[test]
fn homology_text_and_json_agree() {
    let (code, text) = run(&["homology"]);
    assert_eq!(code, 0);
    assert!(text.contains("verdict: not a T^3 x hyper-Kahler product cohomology"));
    let (_, report) = json(&["homology", "--json", "--integer"]);
    let h = report.homology.unwrap();
    assert_eq!(h.degrees.len(), 8);
    assert_eq!(h.betti[2], 7);
    assert!(text.contains(&format!(
        "betti: {}",
        h.betti.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    )));
    for d in &h.degrees {
        assert!(text.contains(&format!("b_{} = {}", d.degree, d.betti)));
    }
    assert_eq!(run(&["homology", "--strict", "--inject-sign-flip"]).0, 1);
}

#[test]
fn boundary_export() {
    let (code, text) = run(&["homology", "--export-boundaries"]);
    assert_eq!(code, 0);
    assert!(text.lines().any(|l| l == "2 2 8 1" || l.starts_with("2 ")));
    let (_, out) = run(&["homology", "--export-boundaries", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["boundaries"].as_array().unwrap().len(), 7);
}

#[test]
fn report_aggregates_every_suite() {
    let (code, report) = json(&["report", "--n", "1", "--json"]);
    assert_eq!(code, 0);
    assert!(report.so41.is_some() && report.betti.is_some() && report.homology.is_some());
    assert!(!report.s_k_ranks.is_empty());
}
