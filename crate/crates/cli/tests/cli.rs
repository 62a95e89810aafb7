use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const FIXTURE: &str = "# hexagon with chord {1,4}\n6 7\n1 4\n3 4\n1 2\n2 3\n4 5\n1 6\n5 6\n";

fn edgepoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgepoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn weights(v: &Value) -> Vec<i64> {
    v["weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect()
}

#[test]
fn analyze_fixture() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fixture.g", FIXTURE);
    let o = edgepoly(&["analyze", s(&f)]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["decomposable"], true);
    let ci = &v["type_i"]["certificate"];
    let cii = &v["type_ii"]["certificate"];
    assert_eq!(ci["pattern"], "I");
    assert_eq!(cii["pattern"], "II");
    let neg = |w: Vec<i64>| w.into_iter().map(|x| -x).collect::<Vec<_>>();
    assert_eq!(neg(weights(ci)), vec![-1, -1, 1, 1, -1, 1]);
    assert_eq!(neg(weights(cii)), vec![-1, 0, 0, 1, -1, 1]);
    assert_eq!(ci["positive"], serde_json::json!([[1, 2]]));
    assert_eq!(v["type_ii"]["structure"]["passed"], true);
    assert_eq!(v["type_i"]["partition"]["pattern"], "I");
}

#[test]
fn analyze_with_oracle() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fixture.g", FIXTURE);
    let o = edgepoly(&["analyze", s(&f), "--oracle"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["oracle"]["discrepancies"], serde_json::json!([]));
    let o = edgepoly(&["analyze", s(&f), "--oracle", "--max-oracle-d", "4"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn analyze_tri_pan_and_errors() {
    let dir = TempDir::new().unwrap();
    let t4 = dir.path().join("t4.g");
    assert_eq!(
        code(&edgepoly(&["generate", "tripan", "4", "--out", s(&t4)])),
        0
    );
    let o = edgepoly(&["analyze", s(&t4)]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["decomposable"], false);

    let bad = write(&dir, "bad.g", "# no header\n");
    assert_eq!(code(&edgepoly(&["analyze", s(&bad)])), 2);
    let bad = write(&dir, "bad2.g", "1 2\n2 3\n");
    assert_eq!(code(&edgepoly(&["analyze", s(&bad)])), 2);
    let isolated = write(&dir, "iso.g", "3 1\n1 2\n");
    assert_eq!(code(&edgepoly(&["analyze", s(&isolated)])), 2);
    assert_eq!(code(&edgepoly(&["analyze", "/nonexistent/file.g"])), 2);
}

#[test]
fn generate_families() {
    let o = edgepoly(&["generate", "tripan", "5"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("12 20\n"));
    assert_eq!(text.lines().count(), 21);

    let o = edgepoly(&["generate", "complete", "4"]);
    assert_eq!(
        String::from_utf8(o.stdout).unwrap(),
        "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"
    );

    let o = edgepoly(&["generate", "multipartite", "1", "2", "3"]);
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("6 11\n"));

    let dir = TempDir::new().unwrap();
    let base = write(&dir, "base.g", FIXTURE);
    let o = edgepoly(&["generate", "attach", s(&base), "--edge", "2,3"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("8 10\n"));
    for line in ["2 7", "7 8", "3 8"] {
        assert!(text.lines().any(|l| l == line), "{line}");
    }

    assert_eq!(code(&edgepoly(&["generate", "cycle", "2"])), 2);
    assert_eq!(code(&edgepoly(&["generate", "tripan", "x"])), 2);
    assert_eq!(code(&edgepoly(&["generate", "wheel", "5"])), 2);
    assert_eq!(
        code(&edgepoly(&[
            "generate",
            "attach",
            s(&base),
            "--edge",
            "1,3"
        ])),
        2
    );
    assert_eq!(code(&edgepoly(&["generate", "attach", s(&base)])), 2);
}

#[test]
fn generate_round_trip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    for args in [
        vec!["tripan", "3"],
        vec!["complete", "5"],
        vec!["multipartite", "2", "2", "1"],
        vec!["cycle", "7"],
        vec!["path", "4"],
    ] {
        let first = dir.path().join("first.g");
        let mut cmd = vec!["generate"];
        cmd.extend(&args);
        cmd.extend(["--out", s(&first)]);
        assert_eq!(code(&edgepoly(&cmd)), 0);
        let original = std::fs::read_to_string(&first).unwrap();
        let g = edgepoly::io::parse_edge_list(&original).unwrap();
        assert_eq!(edgepoly::io::write_edge_list(&g), original);
        let e = g.edges()[0];
        let attached = edgepoly(&[
            "generate",
            "attach",
            s(&first),
            "--edge",
            &format!("{},{}", e.u(), e.v()),
        ]);
        let text = String::from_utf8(attached.stdout).unwrap();
        assert!(text.starts_with(&format!("{} {}\n", g.d() + 2, g.edge_count() + 3)));
    }
}

#[test]
fn verify_weightings() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fixture.g", FIXTURE);
    let o = edgepoly(&["verify", s(&f), "-1,-1,1,1,-1,1"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["pattern"], "I");
    assert_eq!(v["signs"].as_array().unwrap().len(), 7);

    let o = edgepoly(&["verify", s(&f), "1,1,1,1,1,1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["valid"], false);

    let k4 = dir.path().join("k4.g");
    edgepoly(&["generate", "complete", "4", "--out", s(&k4)]);
    let o = edgepoly(&["verify", s(&k4), "1,0,-1,0"]);
    assert_eq!(code(&o), 1);
    assert!(!json(&o)["incompatible"].as_array().unwrap().is_empty());

    assert_eq!(code(&edgepoly(&["verify", s(&f), "1,2,1,1,1,1"])), 2);
    assert_eq!(code(&edgepoly(&["verify", s(&f), "1,1,1"])), 2);
}

#[test]
fn sweep_small() {
    let o = edgepoly(&["sweep", "4"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["per_size"][3]["graphs"], 38);
    assert_eq!(v["violations"], serde_json::json!([]));

    let o = edgepoly(&["sweep", "1"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["totals"]["graphs"], 1);
    assert_eq!(v["totals"]["skipped"], 1);
    assert_eq!(v["totals"]["decomposable"], 0);

    assert_eq!(code(&edgepoly(&["sweep", "8"])), 2);
    assert_eq!(code(&edgepoly(&["sweep", "3", "--max-n-cap", "2"])), 2);
}

#[test]
fn sweep_is_independent_of_worker_count() {
    let outputs: Vec<Vec<u8>> = ["1", "3", "8"]
        .iter()
        .map(|j| edgepoly(&["sweep", "5", "--oracle", "--jobs", j]).stdout)
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn analyze_exit_code_tracks_verdict() {
    let dir = TempDir::new().unwrap();
    for family in [
        vec!["complete", "3"],
        vec!["complete", "4"],
        vec!["cycle", "4"],
        vec!["cycle", "5"],
        vec!["tripan", "2"],
        vec!["multipartite", "2", "3"],
    ] {
        let f = dir.path().join("g.g");
        let mut cmd = vec!["generate"];
        cmd.extend(&family);
        cmd.extend(["--out", s(&f)]);
        edgepoly(&cmd);
        let o = edgepoly(&["analyze", s(&f)]);
        let g = edgepoly::io::read_graph(&f).unwrap();
        let expected = if edgepoly::decide(&g).unwrap().decomposable {
            0
        } else {
            1
        };
        assert_eq!(code(&o), expected, "{family:?}");
        assert_eq!(json(&o)["decomposable"], expected == 0);
    }
}
