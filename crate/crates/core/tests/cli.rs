use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lapcoef(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lapcoef"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_kinds() {
    let o = lapcoef(&["gen", "path", "--n", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"n\":1,\"edges\":[]}\n");

    let o = lapcoef(&["gen", "dary", "--d", "2", "--h", "3"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 7);

    let o = lapcoef(&["gen", "greedy", "--n", "10", "--dplus1", "3"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 10);
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);

    let o = lapcoef(&["gen", "broom", "--n", "6", "--dplus1", "3"], "");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lapcoef(&["gen", "greedy", "--n", "10"], "").status.code(), Some(2));
    assert_eq!(lapcoef(&["gen", "path", "--n", "0"], "").status.code(), Some(2));
    assert_eq!(lapcoef(&["gen", "path", "--n", "50", "--max-vertices", "10"], "").status.code(), Some(2));
    assert_eq!(lapcoef(&["gen", "hexagon", "--n", "5"], "").status.code(), Some(2));
    assert_eq!(lapcoef(&["verify", "thm99"], "").status.code(), Some(2));
    assert_eq!(lapcoef(&["verify", "thm37", "--n", "9..4"], "").status.code(), Some(2));
    assert_eq!(lapcoef(&["verify", "thm37", "--n", "6", "--x-grid", "1,-1/2"], "").status.code(), Some(2));
    assert_eq!(lapcoef(&["verify", "thm37", "--n", "6", "--jobs", "0"], "").status.code(), Some(2));
    assert_eq!(lapcoef(&["invariants"], "not json").status.code(), Some(2));
    assert_eq!(lapcoef(&["invariants"], r#"{"n":3,"edges":[[0,1],[0,1]]}"#).status.code(), Some(2));
}

#[test]
fn invariants_record() {
    let o = lapcoef(&["invariants"], r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "4", "3", "0"]));
    assert_eq!(v["matching_poly_of_subdivision"], serde_json::json!(["1", "4", "3"]));
    assert_eq!(v["hosoya_of_subdivision"], "8");
    assert_eq!(v["phi_at_grid"][2], serde_json::json!({"x": "1/1", "value": "8/1"}));
    // Floats carry exactly 12 decimals.
    assert!(text.contains("\"ie\":2.732050807569"));
    assert!(text.contains("\"coulson_energy\":5.464101615138"));
    assert!(text.contains("\"spectrum\":[3.000000000000,1.000000000000,0.000000000000]"));
}

#[test]
fn verify_examples_and_determinism() {
    let a = lapcoef(&["verify", "thm37", "--n", "4..12", "--dplus1", "3"], "");
    assert_eq!(a.status.code(), Some(0));
    let b = lapcoef(&["verify", "thm37", "--n", "4..12", "--dplus1", "3", "--jobs", "1"], "");
    assert_eq!(a.stdout, b.stdout, "output must not depend on the thread count");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["params"]["xs"], serde_json::json!(["1/4", "1/2", "1/1", "2/1", "4/1"]));
    assert!(v.get("elapsed_seconds").is_none());

    let o = lapcoef(&["verify", "conj46", "--n", "4..12", "--dplus1", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["details"].as_array().unwrap().len(), 9);

    let o = lapcoef(&["verify", "lem31", "--d", "2", "--hmax", "8"], "");
    assert_eq!(o.status.code(), Some(0));

    let a = lapcoef(&["verify", "thm25-random", "--n", "12", "--samples", "40", "--seed", "5"], "");
    let b = lapcoef(&["verify", "thm25-random", "--n", "12", "--samples", "40", "--seed", "5"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let o = lapcoef(&["verify", "thm14", "--n", "5..7", "--timing"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["elapsed_seconds"].is_number());
}

#[test]
fn verify_every_statement_runs() {
    for args in [
        &["thm13", "--n", "4..8"][..],
        &["thm14", "--n", "4..8"],
        &["thm37", "--n", "4..8", "--dplus1", "4"],
        &["thm43-lem42", "--n", "4..8"],
        &["cor45", "--n-range", "2..8"],
        &["cor39", "--n", "4..8"],
        &["lem31", "--d", "3", "--hmax", "4"],
        &["lem44", "--n", "12", "--d", "2,3"],
        &["lem24", "--n", "10", "--samples", "30"],
        &["thm25-random", "--n", "10", "--samples", "30"],
        &["conj46", "--n", "4..8"],
    ] {
        let mut full = vec!["verify"];
        full.extend_from_slice(args);
        let o = lapcoef(&full, "");
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("lapcoef-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let o = lapcoef(
        &["verify", "thm43-lem42", "--n", "4..6", "--format", "csv", "--out", path.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        "statement,n,dplus1,trees,violations,seconds\nthm43-lem42,4,3,1,0,\nthm43-lem42,5,3,1,0,\nthm43-lem42,6,3,3,0,\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enum_lines() {
    let o = lapcoef(&["enum", "--n", "10"], "");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 106);
    for l in &lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["n"], 10);
    }
    // 11 trees of order 7: one path, five of maximum degree 3, three of 4,
    // one each of 5 and 6.
    let o = lapcoef(&["enum", "--n", "7", "--dplus1", "3", "--exact"], "");
    assert_eq!(stdout(&o).lines().count(), 5);
}
