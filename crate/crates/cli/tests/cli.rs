use std::process::{Command, Output};

fn absorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_absorder")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poset_json_round_trip() {
    let o = absorder(&["interval", "--group", "B", "--n", "2", "--top", "[1][2]", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 6);
    assert_eq!(v["hasse"].as_array().unwrap().len(), 8);
}

#[test]
fn exit_codes() {
    assert_eq!(absorder(&["poset", "--group", "X", "--n", "2"]).status.code(), Some(2));
    assert_eq!(absorder(&["interval", "--n", "3", "--top", "[1,2,9]"]).status.code(), Some(2));
    assert_eq!(absorder(&["interval", "--n", "2", "--top", "[1]", "--bottom", "[2]"]).status.code(), Some(2));
    assert_eq!(absorder(&["gf", "--family", "sym", "--upto", "25"]).status.code(), Some(3));
    let d4 = absorder(&["topology", "--group", "D", "--n", "4", "--top", "[1][2][3][4]", "--cm"]);
    assert_eq!(d4.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&d4)).unwrap();
    assert_eq!(v["cohen_macaulay"]["failing_face"], serde_json::json!([]));
    assert!(v["reduced_betti"][0].as_u64().unwrap() > 0);
}

#[test]
fn invariants_against_closed_forms() {
    let o = absorder(&["invariants", "--n", "3", "--compare", "ln", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["enumerated"]["cardinality"], "20");
    assert_eq!(v["mismatches"], serde_json::json!([]));
}

#[test]
fn gf_crosscheck() {
    let o = absorder(&["gf", "--family", "hyper", "--upto", "3", "--crosscheck"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>()[..4] == ["2", "-3", "-3", "-3"]));
    assert!(!out.contains("MISMATCH"));
}

#[test]
fn verify_with_fault_fails() {
    let ok = absorder(&["verify", "--profile", "quick", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = absorder(&["verify", "--profile", "quick", "--inject-fault", "literal-convention", "--format", "json"]);
    assert_eq!(bad.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&bad)).unwrap();
    let failed: Vec<&str> = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"03/lkr/k=1,r=1/cardinality"), "{failed:?}");
}

#[test]
fn check_el_and_lattice_scan() {
    assert_eq!(absorder(&["check-el", "--n", "3", "--top", "[1,2,3]"]).status.code(), Some(0));
    let o = absorder(&["lattice-scan", "--group", "B", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checked"], 48);
}

#[test]
fn dot_output() {
    let o = absorder(&["ideal", "--n", "2", "--coxeter", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("digraph"));
}
