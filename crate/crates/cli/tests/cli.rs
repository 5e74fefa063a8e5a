use std::process::{Command, Output};

fn tspread(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tspread"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts_and_json() {
    let o = tspread(&["enumerate", "-n", "6", "-d", "2", "-t", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with('x')).count(), 10);
    assert!(text.contains("count: 10"));

    let o = tspread(&["enumerate", "-n", "6", "-d", "2", "-t", "2", "-f", "json"]);
    let arr: Vec<Vec<usize>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(arr.len(), 10);
    assert_eq!(arr[0], vec![1, 3]);
    assert_eq!(arr[9], vec![4, 6]);
}

#[test]
fn enumerate_infeasible_is_empty() {
    let o = tspread(&["enumerate", "-n", "2", "-d", "3", "-t", "2", "-f", "json"]);
    assert!(o.status.success());
    let arr: Vec<Vec<usize>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(arr.is_empty());
}

#[test]
fn decompose_initial_example() {
    let o = tspread(&["decompose", "-n", "7", "-d", "3", "-t", "2", "-v", "2,5,7", "--verify", "-f", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let primes: Vec<Vec<usize>> = serde_json::from_value(v["primes"].clone()).unwrap();
    assert_eq!(
        primes,
        vec![
            vec![1, 2],
            vec![1, 4, 5],
            vec![1, 4, 7],
            vec![1, 6, 7],
            vec![3, 4, 5],
            vec![3, 4, 7],
            vec![3, 6, 7],
            vec![5, 6, 7]
        ]
    );
    assert_eq!(v["provenance"].as_array().unwrap().len(), 8);
    assert_eq!(v["verify"]["match"], true);
}

#[test]
fn decompose_completely_example() {
    let o = tspread(&["decompose", "-n", "7", "-d", "3", "-t", "2", "-u", "1,4,6", "-v", "2,5,7", "--verify"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("primes: 4"));
    assert!(text.contains("MATCH"));
}

#[test]
fn decompose_non_completely_falls_back() {
    let o = tspread(&["decompose", "-n", "8", "-d", "2", "-t", "2", "-u", "1,7", "-v", "2,4", "--verify"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("route: oracle"));
    assert!(text.contains("closed form unavailable (open question)"));
    assert!(text.contains("[oracle]"));
}

#[test]
fn decompose_literal_flaw_exits_nonzero_and_repaired_matches() {
    let args = ["decompose", "-n", "4", "-d", "3", "-t", "1", "-u", "1,2,4", "--verify"];
    let o = tspread(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("MISMATCH"));
    let mut repaired = args.to_vec();
    repaired.push("--repaired");
    let o = tspread(&repaired);
    assert!(o.status.success());
    assert!(stdout(&o).contains("MATCH"));
}

#[test]
fn classify_examples() {
    let cases = [
        (["-n", "9", "-d", "2", "-t", "2", "-u", "1,9", "-v", "2,4"], true, "height-two-complete-intersection"),
        (["-n", "8", "-d", "3", "-t", "2", "-u", "1,6,8", "-v", "3,6,8"], true, "general-extremal"),
        (["-n", "7", "-d", "3", "-t", "2", "-u", "1,4,6", "-v", "2,5,7"], false, "height-two-splitting"),
    ];
    for (spec, cm, branch) in cases {
        let mut args = vec!["classify"];
        args.extend(spec);
        args.extend(["-f", "json"]);
        let o = tspread(&args);
        assert!(o.status.success());
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["is_cm"], cm, "{spec:?}");
        assert_eq!(v["branch"], branch, "{spec:?}");
    }
}

#[test]
fn invariants_report_sources() {
    let o = tspread(&["invariants", "-n", "7", "-d", "3", "-t", "2", "-u", "1,4,6", "-f", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariants"]["pd_quotient"], 3);
    assert_eq!(v["invariants"]["dim"], 5);
    assert_eq!(v["invariants"]["source"]["dim"], "final-formula");
    assert!(v["betti"]["rows"].is_array());
}

#[test]
fn verify_exit_codes() {
    let o = tspread(&["verify", "--n-max", "6", "--repaired"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("mismatches: 0"));

    let o = tspread(&["verify", "--n-min", "4", "--n-max", "4", "--d-min", "3", "--d-max", "3", "--t-max", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("MISMATCH"));

    let o = tspread(&["verify", "--n-min", "5", "--n-max", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("specs checked: 0"));

    let o = tspread(&["verify", "--n-max", "21"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("oracle cap"));
}

#[test]
fn verify_writes_json_lines() {
    let path = std::env::temp_dir().join(format!("tspread-sweep-{}.jsonl", std::process::id()));
    let o = tspread(&["verify", "--n-max", "5", "--repaired", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.lines().count() > 0);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["spec"].is_object());
    }
}

#[test]
fn conjecture_scan_reports() {
    let o = tspread(&["conjecture-scan", "--n-max", "8", "-f", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["specs"].as_u64().unwrap() > 0);
    assert!(v["counterexamples"].is_array());
}

#[test]
fn export_m2_scripts() {
    let o = tspread(&["export-m2", "-n", "7", "-d", "3", "-t", "2", "-u", "1,4,6"]);
    let s = stdout(&o);
    assert!(s.contains("R = QQ[x_1..x_7];"));
    let line = s.lines().find(|l| l.starts_with("assert(intersect(")).unwrap();
    assert_eq!(line.matches("ideal(").count(), 6);

    let o = tspread(&["export-m2", "-n", "5", "-d", "2", "-t", "2", "-u", "1,3", "-v", "1,3"]);
    let s = stdout(&o);
    assert_eq!(s.matches("assert(").count(), 1);
}

#[test]
fn bad_input_is_reported() {
    let o = tspread(&["decompose", "-n", "7", "-d", "3", "-t", "2", "-u", "1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
