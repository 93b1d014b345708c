use std::process::{Command, Output};

use serde_json::Value;

fn symprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symprod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = symprod(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn assert_report_schema(v: &Value) {
    for key in [
        "spec",
        "dimension",
        "s",
        "betti",
        "c1",
        "pontrjagin",
        "w2_rank",
    ] {
        assert!(v.get(key).is_some(), "missing {key} in {v}");
    }
    for key in ["g", "k", "n", "N"] {
        assert!(v["spec"][key].is_u64(), "spec.{key}");
    }
    for term in v["c1"].as_array().unwrap() {
        assert_eq!(term["monomial"].as_array().unwrap().len(), 2);
        assert!(term["coeff"].is_i64());
    }
    assert!(v["pontrjagin"] == "zero" || v["pontrjagin"].is_array());
}

#[test]
fn report_json() {
    let v = json(&["report", "--g", "1", "--k", "2", "--n", "3"]);
    assert_report_schema(&v);
    assert_eq!(v["w2_rank"], 2);
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["betti"], serde_json::json!([1, 3, 3, 1]));
    assert_eq!(
        v["c1"],
        serde_json::json!([{"monomial": [1, 2], "coeff": -1}])
    );
    assert_eq!(v["pontrjagin"], "zero");
}

#[test]
fn report_csv() {
    let out = symprod(&[
        "report", "--g", "0", "--k", "3", "--n", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = r.headers().unwrap().clone();
    let rows: Vec<_> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    let w2 = headers.iter().position(|h| h == "w2_rank").unwrap();
    assert_eq!(&rows[0][w2], "0");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        symprod(&["report", "--g", "-1", "--k", "2", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    let out = symprod(&["report", "--g", "1", "--k", "0", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(
        symprod(&["report", "--g", "1", "--k", "1", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        symprod(&["table", "--g", "2..1", "--k", "1", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn classify_examples() {
    let v = json(&[
        "classify", "--g", "0", "--k", "5", "--n", "3", "--g2", "1", "--k2", "3", "--n2", "3",
    ]);
    assert_eq!(v["verdict"], "homotopy_equivalent_not_homeomorphic");
    assert_eq!(v["witness"], "w2_rank: 0 vs 2");
    assert_report_schema(&v["invariants_a"]);
    assert_report_schema(&v["invariants_b"]);

    let v = json(&[
        "classify", "--g", "1", "--k", "1", "--n", "2", "--g2", "1", "--k2", "1", "--n2", "2",
    ]);
    assert_eq!(v["verdict"], "homeomorphic");

    let v = json(&[
        "classify", "--g", "2", "--k", "1", "--n", "2", "--g2", "0", "--k2", "5", "--n2", "2",
    ]);
    assert_eq!(v["verdict"], "homotopy_equivalent_not_homeomorphic");

    let v = json(&[
        "classify", "--g", "0", "--k", "2", "--n", "2", "--g2", "0", "--k2", "3", "--n2", "2",
    ]);
    assert_eq!(v["verdict"], "not_homotopy_equivalent");
}

#[test]
fn table_rows() {
    let v = json(&["table", "--g", "0..2", "--k", "1..2", "--n", "2..3"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 12);
    for r in rows {
        assert_report_schema(r);
        assert_eq!(r["homotopy_class"], r["s"]);
        assert_eq!(
            r["w2_rank"].as_u64().unwrap(),
            2 * r["spec"]["g"].as_u64().unwrap()
        );
    }
    let keys: Vec<_> = rows
        .iter()
        .map(|r| ["g", "k", "n", "N"].map(|f| r["spec"][f].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);

    let out = symprod(&[
        "table", "--g", "0..2", "--k", "1..2", "--n", "2..3", "--format", "csv",
    ]);
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let p = r
        .headers()
        .unwrap()
        .iter()
        .position(|h| h == "pontrjagin")
        .unwrap();
    let rows: Vec<_> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|row| &row[p] == "0"));
}

#[test]
fn oracle_check_examples() {
    let v = json(&["oracle-check", "--g", "1", "--n", "2"]);
    assert_eq!(v["pass"], true);
    let dims: Vec<u64> = v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["invariant"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [1, 2, 2, 2, 1]);
    assert_eq!(
        json(&["oracle-check", "--g", "1", "--n", "3"])["degrees"][1]["macdonald"],
        2
    );
    assert_eq!(
        json(&["oracle-check", "--g", "2", "--n", "2"])["degrees"][1]["macdonald"],
        4
    );
}

#[test]
fn oracle_work_cap() {
    // 4! * 8^4 = 98304
    let args = [
        "oracle-check",
        "--g",
        "3",
        "--n",
        "4",
        "--max-work",
        "90000",
    ];
    assert_eq!(symprod(&args).status.code(), Some(2));
    let args = [
        "oracle-check",
        "--g",
        "3",
        "--n",
        "4",
        "--max-work",
        "100000",
    ];
    assert!(symprod(&args).status.success());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table", "--g", "0..3", "--k", "1..3", "--n", "2..4", "--N", "0..1",
    ];
    let a = symprod(&args).stdout;
    let b = symprod(&args).stdout;
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let c = symprod(&seq).stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = symprod(&[
        "report",
        "--g",
        "2",
        "--k",
        "1",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["w2_rank"], 4);
}

#[test]
fn selftest_passes() {
    let out = symprod(&["selftest", "--seed", "7", "--format", "text"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}
