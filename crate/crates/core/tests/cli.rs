use std::io::Write;
use std::process::{Command, Output};

use rwl_core::report::Report;
use serde_json::Value;

fn rwl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rwl")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Report {
    let out = rwl(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    Report::parse(&String::from_utf8(out.stdout).unwrap()).expect("valid report")
}

fn row_values(r: &Report) -> Vec<&str> {
    r.rows.iter().map(|row| row.value.as_str()).collect()
}

#[test]
fn count_path_all_methods() {
    let r = report(&["count", "--family", "path", "--n", "7", "--method", "all"]);
    assert_eq!(r.value.as_deref(), Some("64"));
    assert_eq!(r.status, "ok");
    let methods: Vec<&str> = r.methods.iter().map(|m| m.method.as_str()).collect();
    assert!(methods.contains(&"dp") && methods.contains(&"formula"));
}

#[test]
fn count_king_board() {
    let r = report(&["count", "--family", "king", "--m", "2", "--n", "3", "--method", "all"]);
    assert_eq!(r.value.as_deref(), Some("480"));
    assert_eq!(r.input, "king(2,3)");
}

#[test]
fn count_graph_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# two separate edges\n4 2\n0 1\n2 3").unwrap();
    let r = report(&["count", "--graph", f.path().to_str().unwrap()]);
    assert_eq!(r.value.as_deref(), Some("0"));
    assert_eq!(r.status, "disconnected");

    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3 3\n0 1\n1 2\n2 0").unwrap();
    let r = report(&["count", "--graph", f.path().to_str().unwrap(), "--method", "all"]);
    assert_eq!(r.value.as_deref(), Some("6"));
    assert_eq!(r.methods.len(), 2);
}

#[test]
fn parse_errors_exit_2() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3 1\n0 0").unwrap();
    let out = rwl(&["count", "--graph", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(rwl(&["count", "--graph", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(rwl(&["count", "--family", "king", "--n", "3"]).status.code(), Some(2));
    assert_eq!(rwl(&["count", "--family", "path", "--n", "3", "--m", "2"]).status.code(), Some(2));
    assert_eq!(rwl(&["count", "--family", "grid", "--m", "3", "--n", "3", "--method", "formula"]).status.code(), Some(2));
    assert_eq!(rwl(&["count", "--method", "dp"]).status.code(), Some(2));
    assert_eq!(rwl(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn size_limits_exit_4() {
    assert_eq!(rwl(&["count", "--family", "path", "--n", "11", "--method", "walk"]).status.code(), Some(4));
    assert_eq!(rwl(&["count", "--family", "path", "--n", "65"]).status.code(), Some(4));
    assert_eq!(rwl(&["verify", "--claim", "oracle-equivalence", "--n-max", "11"]).status.code(), Some(4));
}

#[test]
fn large_family_uses_only_applicable_methods() {
    let r = report(&["count", "--family", "grid", "--m", "2", "--n", "40", "--method", "all"]);
    let methods: Vec<&str> = r.methods.iter().map(|m| m.method.as_str()).collect();
    assert_eq!(methods, ["formula"]);
}

#[test]
fn family_tables() {
    let out = rwl(&["family-table", "--family", "cycle", "--n-max", "5", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "family,n,value\ncycle,3,6\ncycle,4,16\ncycle,5,40\n");
    let r = report(&["family-table", "--family", "grid2", "--n-max", "3", "--format", "json"]);
    assert_eq!(row_values(&r), ["2", "16", "208"]);
    let r = report(&["family-table", "--family", "king2", "--n-max", "2", "--format", "json"]);
    assert_eq!(row_values(&r), ["2", "24"]);
    let out = rwl(&["family-table", "--family", "path", "--n-max", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "path(1) = 1\npath(2) = 2\n");
    assert_eq!(rwl(&["family-table", "--family", "king", "--n-max", "2"]).status.code(), Some(2));
    assert_eq!(rwl(&["family-table", "--family", "cycle", "--n-max", "2"]).status.code(), Some(2));
}

#[test]
fn verify_claims() {
    let r = report(&["verify", "--claim", "eq003", "--n-max", "100"]);
    assert_eq!(r.status, "pass");
    let r = report(&["verify", "--claim", "lemma37", "--n-max", "20", "--tol", "1e-8"]);
    assert_eq!(r.status, "pass");
    let max = r.params["max_residual"].as_f64().unwrap();
    assert!(max <= 1e-8);
    let r = report(&["verify", "--claim", "oracle-equivalence", "--n-max", "7"]);
    assert_eq!(r.status, "pass");
    let r = report(&["verify", "--claim", "asymptotic", "--ns", "10,20"]);
    assert_eq!(r.status, "pass");
    assert_eq!(r.verification.unwrap().values.len(), 2);
    for claim in ["eq915", "eq771", "eq900-vs-901", "egf-gg2", "ogf-a087547", "egf-a182525"] {
        assert_eq!(report(&["verify", "--claim", claim]).status, "pass", "{claim}");
    }
}

#[test]
fn verify_bad_input() {
    let out = rwl(&["verify", "--claim", "eq999"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("eq915"));
    assert_eq!(rwl(&["verify", "--claim", "lemma37", "--tol", "1e-12"]).status.code(), Some(2));
    assert_eq!(rwl(&["verify", "--claim", "asymptotic", "--ns", "20,10"]).status.code(), Some(2));
}

#[test]
fn series_terms() {
    let r = report(&["series", "--egf", "gg2", "--terms", "3"]);
    assert_eq!(row_values(&r), ["2", "16", "208"]);
    let r = report(&["series", "--egf", "a182525", "--terms", "2"]);
    assert_eq!(row_values(&r), ["1", "2", "10"]);
    let r = report(&["series", "--egf", "a087547", "--terms", "1"]);
    assert_eq!(row_values(&r), ["1"]);
    assert_eq!(r.rows[0].coefficient.as_deref(), Some("1"));
    assert_eq!(rwl(&["series", "--egf", "gg3", "--terms", "3"]).status.code(), Some(2));
}

fn without_elapsed(out: &Output) -> Value {
    fn strip(v: &mut Value) {
        match v {
            Value::Object(map) => {
                map.remove("elapsed_ms");
                map.values_mut().for_each(strip);
            }
            Value::Array(items) => items.iter_mut().for_each(strip),
            _ => {}
        }
    }
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    strip(&mut v);
    v
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["count", "--family", "grid", "--m", "2", "--n", "5", "--method", "all"][..],
        &["verify", "--claim", "oracle-equivalence", "--n-max", "6", "--random", "30"],
        &["verify", "--claim", "lemma37", "--n-max", "8"],
        &["series", "--egf", "gg2", "--terms", "10"],
    ] {
        assert_eq!(without_elapsed(&rwl(args)), without_elapsed(&rwl(args)), "{args:?}");
    }
}

#[test]
fn thread_override() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_rwl"))
            .args(["info"])
            .env("RWL_THREADS", threads)
            .output()
            .unwrap()
    };
    let out = run("1");
    assert_eq!(out.status.code(), Some(0));
    let r = Report::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.params["threads"], 1);
    assert_eq!(run("0").status.code(), Some(2));
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn info_lists_claims() {
    let r = report(&["info"]);
    let claims = r.params["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 10);
    assert!(r.params["formulas"].as_array().unwrap().len() >= 14);
}
