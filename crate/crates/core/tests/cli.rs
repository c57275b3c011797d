use std::process::{Command, Output};

fn mckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .output()
        .expect("spawn mckay")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gamma_json_payload() {
    let o = mckay(&["gamma", "1", "1", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["arrows"].as_array().unwrap().len(), 5);
    assert_eq!(v["relations"][0]["lhs"].as_array().unwrap().len(), 2);
}

#[test]
fn gcd_violation() {
    let o = mckay(&["check", "2", "4", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd(2,4)=2 ≠ 1"));
}

#[test]
fn full_suite_passes() {
    let o = mckay(&["check", "1", "2", "3", "--suite", "all", "--kmax", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.starts_with("weights (1,2,3) seed "));
    assert!(text.ends_with("verdict: PASS\n"));
}

#[test]
fn json_suite_report() {
    let o = mckay(&[
        "check",
        "1",
        "1",
        "2",
        "--suite",
        "confluence",
        "--seed",
        "9",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 9);
    let report = &v["reports"][0];
    assert_eq!(report["check"], "confluence");
    assert_eq!(report["weights"], serde_json::json!([1, 1, 2]));
    assert_eq!(report["verdict"], "pass");
    for a in report["assertions"].as_array().unwrap() {
        assert!(a["id"].is_string() && a["status"].is_string() && a["detail"].is_string());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "check", "1", "2", "3", "--suite", "all", "--kmax", "4", "--seed", "11", "--format",
            "json",
        ][..],
        &["gamma", "2", "3", "4", "--format", "dot"],
        &["cartan", "1", "2", "3", "--format", "json"],
        &["hilbert", "1", "2", "--ring", "A", "--max", "10"],
    ] {
        assert_eq!(mckay(args).stdout, mckay(args).stdout, "{args:?}");
    }
}

#[test]
fn cartan_and_oracle_agree() {
    let a = mckay(&["cartan", "1", "2", "3", "--format", "json"]);
    let b = mckay(&["cartan", "1", "2", "3", "--format", "json", "--oracle"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["vertices"][0], "rho1");
    assert_eq!(v["matrix"][0], serde_json::json!([1, 1, 2, 3, 4]));
}

#[test]
fn hilbert_and_basis() {
    let o = mckay(&["hilbert", "2", "3", "--ring", "R", "--max", "5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ring"], "R");
    assert_eq!(v["dims"]["1"], 0);
    assert_eq!(v["dims"]["5"], 1);
    let o = mckay(&[
        "basis", "1", "2", "3", "--from", "1", "--to", "5", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
}

#[test]
fn mckay_dot() {
    let o = mckay(&["mckay", "1", "1", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(" -> ").count(), 4);
}

#[test]
fn usage_errors() {
    for args in [
        &["check", "1", "2", "--suite", "everything"][..],
        &["hilbert", "1", "2"],
        &["gamma", "1", "2", "--format", "yaml"],
        &["cartan", "1", "2", "--format", "dsl"],
        &["basis", "1", "2", "--from", "3", "--to", "1"],
    ] {
        assert_eq!(mckay(args).status.code(), Some(2), "{args:?}");
    }
}
