use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/corpus").join(format!("{name}.json"))
}

fn homlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlie")).args(args).output().expect("binary runs")
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = homlie(args);
    let report = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().expect("exit code"), report)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_accepts_every_corpus_file() {
    for entry in fs::read_dir(corpus("hs").parent().unwrap()).unwrap() {
        let p = entry.unwrap().path();
        let (code, report) = run(&["check", path(&p)]);
        assert_eq!(code, 0, "{}", p.display());
        assert_eq!(report["verdict"], "pass");
    }
}

#[test]
fn check_reports_a_corrupted_constant() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(corpus("super22")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["brackets"][0]["result"]["1"] = "3".into();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, v.to_string()).unwrap();
    let (code, report) = run(&["check", path(&bad)]);
    assert_eq!(code, 1);
    let failures = report["checks"]["hom_jacobi"]["failures"].as_array().unwrap().len()
        + report["checks"]["graded_skew"]["failures"].as_array().unwrap().len()
        + report["checks"]["multiplicative"]["failures"].as_array().unwrap().len();
    assert!(failures > 0);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(corpus("hs")).unwrap().replacen("\"1\"", "\"1/0\"", 1);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, text).unwrap();
    assert_eq!(run(&["check", path(&bad)]).0, 2);
    assert_eq!(run(&["check", "/nonexistent.json"]).0, 2);

    let lower = fs::read_to_string(corpus("hs")).unwrap().replace("\"i\": 1", "\"i\": 2");
    fs::write(&bad, lower).unwrap();
    assert_eq!(run(&["check", path(&bad)]).0, 2);
}

#[test]
fn invariants() {
    let (code, r) = run(&["invariants", path(&corpus("hs2"))]);
    assert_eq!(code, 0);
    assert_eq!(r["center"]["dims"], serde_json::json!([2, 0]));
    assert_eq!(r["derived"]["dims"], serde_json::json!([1, 0]));
    assert_eq!(r["stem"], false);

    let (_, r) = run(&["invariants", path(&corpus("a11"))]);
    assert_eq!(r["center"]["dims"], serde_json::json!([1, 1]));
    assert_eq!(r["stem"], false);

    let (_, r) = run(&["invariants", path(&corpus("hs"))]);
    assert_eq!(r["stem"], true);
}

#[test]
fn quotient_of_hs2_by_c_is_hs() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.json");
    let (code, r) = run(&["quotient", path(&corpus("hs2")), "--ideal", "c", "--output", path(&q)]);
    assert_eq!(code, 0);
    assert_eq!(r["quotient"]["even_dim"], 1);
    let (code, r) = run(&["iso-search", path(&q), path(&corpus("hs"))]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("isomorphic")));
}

#[test]
fn quotient_by_a_non_ideal_fails() {
    let (code, r) = run(&["quotient", path(&corpus("hs")), "--ideal", "f"]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "failed");
}

#[test]
fn factorset_then_extend_recovers_hs() {
    let dir = tempfile::tempdir().unwrap();
    let fs_path = dir.path().join("r.json");
    let ext = dir.path().join("ext.json");
    let (code, r) = run(&["factorset", path(&corpus("hs")), "--output", path(&fs_path)]);
    assert_eq!(code, 0);
    assert_eq!(r["pi"]["rows"], 2);
    let (code, r) = run(&["extend", path(&fs_path), "--output", path(&ext)]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "ok");
    assert_eq!(run(&["check", path(&ext)]).0, 0);
    let (code, _) = run(&["iso-search", path(&ext), path(&corpus("hs"))]);
    assert_eq!(code, 0);
}

#[test]
fn extend_rejects_an_invalid_factor_set() {
    // Q = {x | u}, [x, u] = u, r(u, u) = z breaks the cocycle identity at (x, u, u)
    let dir = tempfile::tempdir().unwrap();
    let fs_path = dir.path().join("r.json");
    let file = serde_json::json!({
        "name": "broken",
        "field": "Q",
        "quotient": {
            "name": "q", "field": "Q", "even_dim": 1, "odd_dim": 1,
            "theta": [["1", "0"], ["0", "1"]],
            "brackets": [{ "i": 0, "j": 1, "result": { "1": "1" } }]
        },
        "center": { "even_dim": 1, "odd_dim": 0, "theta": [["1"]] },
        "coeffs": [{ "i": 1, "j": 1, "result": { "0": "1" } }]
    });
    fs::write(&fs_path, file.to_string()).unwrap();
    let (code, r) = run(&["extend", path(&fs_path)]);
    assert_eq!(code, 1);
    assert!(r["error"].as_str().unwrap().contains("factor-cocycle"));

    let mut odd = file.clone();
    odd["coeffs"][0]["i"] = 0.into();
    fs::write(&fs_path, odd.to_string()).unwrap();
    assert_eq!(run(&["extend", path(&fs_path)]).0, 2);
}

#[test]
fn stem_decompose_hs() {
    let (code, r) = run(&["stem-decompose", path(&corpus("hs"))]);
    assert_eq!(code, 0);
    assert_eq!(r["abelian"]["even_dim"], 0);
    assert_eq!(r["abelian"]["odd_dim"], 0);
    assert_eq!(
        r["stem"]["brackets"],
        serde_json::from_str::<Value>(&fs::read_to_string(corpus("hs")).unwrap()).unwrap()["brackets"]
    );
}

#[test]
fn decide_hs_hs2_and_reverify_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let (code, r) = run(&["isoclinic", path(&corpus("hs")), path(&corpus("hs2")), "--decide", "--output", path(&w)]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "isoclinic");
    assert_eq!(r["isomorphic"]["verdict"], "not-isomorphic");
    let (code, r) = run(&["isoclinic", path(&corpus("hs")), path(&corpus("hs2")), "--witness", path(&w)]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "isoclinic");
}

#[test]
fn decide_hs_against_abelian() {
    let (code, r) = run(&["isoclinic", path(&corpus("hs")), path(&corpus("a11")), "--decide"]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "not-isoclinic");
}

#[test]
fn identity_witness() {
    let (code, r) = run(&["isoclinic", path(&corpus("hs")), path(&corpus("hs")), "--witness", "identity"]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("isoclinic")));
}

#[test]
fn wrong_and_malformed_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    run(&["isoclinic", path(&corpus("hs")), path(&corpus("hs2")), "--decide", "--output", path(&w)]);
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&w).unwrap()).unwrap();
    v["nu"]["entries"][0][0] = "2".into();
    fs::write(&w, v.to_string()).unwrap();
    let (code, r) = run(&["isoclinic", path(&corpus("hs")), path(&corpus("hs2")), "--witness", path(&w)]);
    assert_eq!(code, 1);
    assert!(!r["failures"]["failures"].as_array().unwrap().is_empty());

    v["nu"]["rows"] = 3.into();
    fs::write(&w, v.to_string()).unwrap();
    assert_eq!(run(&["isoclinic", path(&corpus("hs")), path(&corpus("hs2")), "--witness", path(&w)]).0, 2);
}

#[test]
fn exhausted_budget_is_inconclusive() {
    let (code, r) = run(&["iso-search", path(&corpus("super22_f3")), path(&corpus("super22_f3")), "--budget", "1"]);
    assert_eq!(code, 3);
    assert_eq!(r["verdict"], "inconclusive");
}

#[test]
fn field_override() {
    let (code, _) = run(&["iso-search", path(&corpus("t2")), path(&corpus("t2_f3")), "--field", "Fp:3"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["check", path(&corpus("hs")), "--field", "Fp:4"]).0, 2);
}

#[test]
fn sum_hs_and_a_line_is_hs2() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.json");
    let (code, _) = run(&["sum", path(&corpus("hs")), path(&corpus("a10")), "--output", path(&s)]);
    assert_eq!(code, 0);
    assert_eq!(run(&["iso-search", path(&s), path(&corpus("hs2"))]).0, 0);
    assert_eq!(run(&["sum", path(&corpus("hs")), path(&corpus("hs_f3"))]).0, 2);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["invariants", "super22"],
        vec!["factorset", "super22"],
        vec!["isoclinic", "hs", "hs2", "--decide"],
        vec!["iso-search", "super22_f3", "super22_f3"],
    ] {
        let owned: Vec<String> = args
            .iter()
            .map(|a| {
                if a.starts_with('-') || a.contains('-') || !corpus(a).exists() {
                    a.to_string()
                } else {
                    path(&corpus(a)).to_string()
                }
            })
            .collect();
        let refs: Vec<&str> = owned.iter().map(String::as_str).collect();
        assert_eq!(homlie(&refs).stdout, homlie(&refs).stdout, "{args:?}");
    }
}

#[test]
fn text_format() {
    let out = homlie(&["invariants", path(&corpus("hs")), "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("stem: true"));
}
