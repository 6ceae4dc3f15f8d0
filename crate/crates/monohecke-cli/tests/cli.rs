use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monohecke")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monohecke")).args(args).env(key, val).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&run(args))).unwrap()
}

#[test]
fn quantum_numbers() {
    assert_eq!(stdout(&run(&["qnum", "3", "x"])).trim(), "x*y - 1");
    assert_eq!(stdout(&run(&["qnum", "1", "y"])).trim(), "1");
    assert_eq!(stdout(&run(&["qbinom", "4", "0", "x"])).trim(), "1");
    assert_eq!(stdout(&run(&["qbinom", "2", "1", "2", "x"])).trim(), "x*y - 2");
}

#[test]
fn endoscopy_example() {
    let v = json(&["endoscopy", "-W", "B2", "--wset", "cosets:s,tst", "--point", "0"]);
    assert_eq!(v["endosimples"], serde_json::json!(["s", "tst"]));
    assert_eq!(v["type"], "A1×A1");
    let v = json(&["endoscopy", "-W", "A2", "--wset", "regular", "--point", "0"]);
    assert_eq!(v["order"], 1);
}

#[test]
fn zam_a3_table() {
    let v = json(&["graphs", "zam", "A3", "-r", "3", "--json"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 30);
    let ranks: Vec<&str> = rows.iter().map(|r| r["rank"].as_str().unwrap()).collect();
    assert_eq!(ranks.iter().filter(|&&r| r == "2").count(), 1);
    assert_eq!(ranks.iter().filter(|&&r| r == "1").count(), 29);
}

#[test]
fn appendix_report_is_stable_across_thread_counts() {
    let one = stdout(&run_env(&["report", "appendixA", "--json"], "HECKE_THREADS", "1"));
    let four = stdout(&run_env(&["report", "appendixA", "--json"], "HECKE_THREADS", "4"));
    assert_eq!(one, four);
    let v: Value = serde_json::from_str(&one).unwrap();
    for c in v["cases"].as_array().unwrap() {
        assert_eq!(c["agrees"], true, "{c}");
    }
    assert_eq!(v["cases"][3]["rank"], "94915");
}

#[test]
fn labelings_from_file() {
    let g = r#"{"faces": 2, "edges": [[0, 0, 1]], "vertices": [],
               "bottom": {"word": [0], "faces": [0, 1]}, "top": {"word": [0], "faces": [0, 1]}}"#;
    let path = std::env::temp_dir().join(format!("monohecke-cli-{}.json", std::process::id()));
    std::fs::write(&path, g).unwrap();
    let v = json(&["graphs", "labelings", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(v["count"], 2);
}

#[test]
fn hom_ranks() {
    assert_eq!(stdout(&run(&["homrank", "-W", "A1", "-x", "s", "-y", "s", "--Kx", "1", "--Ky", "1"])).trim(), "v^2 + 1");
    let deg0 = run(&["homrank", "--deg0", "-W", "A2", "-x", "s,t", "-y", "s,t", "--wset", "trivial", "-r", "2"]);
    assert_eq!(stdout(&deg0).trim(), "1");
}

#[test]
fn hecke_product() {
    let a = r#"{"L": 0, "terms": [{"w": "s", "coeff": "1"}]}"#;
    let v = json(&["hecke", "mul", "-W", "A1", a, a]);
    // H_s² = 1 + (v⁻¹ − v) H_s with the trivial W-set
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let bar = json(&["hecke", "bar", "-W", "A1", &serde_json::to_string(&v).unwrap()]);
    assert_eq!(bar["L"], 0);
}

#[test]
fn jones_wenzl() {
    let out = stdout(&run(&["jw", "2"]));
    assert_eq!(out.lines().count(), 2);
    assert!(out.contains("(1)/(x)"));
    let v = json(&["jw", "3", "--at", "-1", "-2"]);
    assert_eq!(v["criterion"], true);
    assert_eq!(v["rotation_scalar"], "1");
    let v = json(&["jw", "2", "--at", "2", "2"]);
    assert_eq!(v["criterion"], false);
    assert_eq!(json(&["jw", "5", "--check", "--seed", "3"])["solution_dimension"], 1);
}

#[test]
fn localization() {
    let out = stdout(&run(&["loc", "check"]));
    assert!(out.lines().all(|l| l.starts_with("ok")));
    let m = stdout(&run(&["loc", "llmat", "-x", "2", "-K", "1,2", "-e", "00"]));
    assert!(m.starts_with("degree 2"));
}

#[test]
fn realization_ladder() {
    let v = json(&["realization", "check", "B2"]);
    assert_eq!(v["reflection_stable"]["holds"], true);
    assert_eq!(v["abe"]["holds"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["qnum", "3", "z"]).status.code(), Some(2));
    assert_eq!(run(&["hecke", "bar", "-W", "A1", "{not json"]).status.code(), Some(2));
    assert_eq!(run(&["graphs", "labelings", "/definitely/missing.json"]).status.code(), Some(1));
    assert_eq!(run(&["--data", "/definitely/missing", "graphs", "zam", "A3"]).status.code(), Some(1));
    assert_eq!(run(&["homrank", "-W", "A2", "-x", "s", "-y", "t", "--wset", "regular"]).status.code(), Some(1));
}
