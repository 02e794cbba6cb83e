use std::path::Path;
use std::process::{Command, Output};

fn zdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json_of(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn analyze_b2_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let gen = zdg(&["gen", "b2"]);
    assert!(gen.status.success());
    let path = write(dir.path(), "b2.sgp", &stdout(&gen));
    let out = zdg(&["analyze", &path, "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["schema"], "zdg/1");
    assert_eq!(r["graph"]["vertices"], 4);
    assert_eq!(r["graph"]["diam_case"], "ii");
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "i3.sgp", &stdout(&zdg(&["gen", "i3"])));
    let a = zdg(&["analyze", &path, "--json", "-"]);
    let b = zdg(&["analyze", &path, "--json", "-"]);
    assert_eq!(a.stdout, b.stdout);
    let v1 = zdg(&["verify", "--family", "random-digraphs", "--count", "10", "--seed", "4"]);
    let v2 = zdg(&["verify", "--family", "random-digraphs", "--count", "10", "--seed", "4"]);
    assert_eq!(v1.stdout, v2.stdout);
}

#[test]
fn non_associative_table_exits_2_with_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.sgp", "elements: x y\ntable:\ny x\nx x\n");
    let out = zdg(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not associative at ("), "{err}");
}

#[test]
fn non_inverse_semigroup_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "lz.sgp", "elements: x y\ntable:\nx x\ny y\n");
    assert_eq!(zdg(&["analyze", &path]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(zdg(&["analyze", "/nonexistent/file.sgp"]).status.code(), Some(1));
    let garbage = write(dir.path(), "g.sgp", "elements: x\ntable:\nq\n");
    assert_eq!(zdg(&["analyze", &garbage]).status.code(), Some(1));
    let trivial = write(dir.path(), "t.dgf", "vertices: v\n");
    let out = zdg(&["ig", &trivial]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("single isolated vertex"));
    assert_eq!(zdg(&["verify", "--family", "nope"]).status.code(), Some(1));
    assert_eq!(zdg(&["gen", "clifford", "--orders", "2,3", "--homs", "1"]).status.code(), Some(1));
    assert_eq!(zdg(&["gen", "example512", "g9"]).status.code(), Some(1));
}

#[test]
fn trivial_semigroup_has_undefined_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "trivial.sgp", "elements: x\ntable:\nx\n");
    let out = zdg(&["analyze", &path, "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["graph"]["vertices"], 0);
    assert_eq!(r["graph"]["diameter"], serde_json::Value::Null);
    assert_eq!(r["graph"]["girth"], serde_json::Value::Null);
}

#[test]
fn ig_examples() {
    let dir = tempfile::tempdir().unwrap();
    for (which, diam, girth, v, e) in [("g1", 1, "inf", 2, 1), ("g3", 2, "3", 5, 9)] {
        let path = write(dir.path(), &format!("{which}.dgf"), &stdout(&zdg(&["gen", "example512", which])));
        let out = zdg(&["ig", &path, "--json", "-"]);
        assert_eq!(out.status.code(), Some(0));
        let r = json_of(&out);
        assert_eq!(r["digraph"]["exact"], true);
        assert_eq!(r["graph"]["vertices"], v);
        assert_eq!(r["graph"]["edges"], e);
        assert_eq!(r["prediction"]["diameter"], diam);
        assert_eq!(r["prediction"]["girth"].to_string().trim_matches('"'), girth);
    }
}

#[test]
fn loop_graph_is_truncated() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "loop.dgf", "vertices: v\nedges:\nl: v -> v\n");
    let out = zdg(&["ig", &path, "--max-len", "3", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["digraph"]["exact"], false);
    assert_eq!(r["prediction"]["diameter"], 2);
    assert_eq!(r["prediction"]["girth"], 3);
}

#[test]
fn gen_outputs() {
    let i2 = stdout(&zdg(&["gen", "i2"]));
    assert!(i2.contains("elements: [] [1>1] [1>2] [2>1] [2>2] [1>1,2>2] [1>2,2>1]"), "{i2}");
    assert!(i2.contains("zero: []"));
    let g3 = stdout(&zdg(&["gen", "example512", "g3"]));
    assert!(g3.ends_with("vertices: w1 w2\nedges:\ne: w1 -> w2\n"), "{g3}");
    let c = stdout(&zdg(&["gen", "clifford", "--orders", "2,2", "--homs", "1"]));
    assert!(c.contains("elements: a0 a1 b0 b1"));
    assert!(zdg(&["gen", "cyclic", "--n", "4"]).status.success());
}

#[test]
fn export_dot_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let sgp = write(dir.path(), "b2.sgp", &stdout(&zdg(&["gen", "b2"])));
    let out = zdg(&["export-dot", &sgp]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("graph \"b2\" {"));
    assert_eq!(dot.matches(" -- ").count(), 6);

    let dgf = write(dir.path(), "g3.dgf", &stdout(&zdg(&["gen", "example512", "g3"])));
    let target = dir.path().join("g3.dot");
    let out = zdg(&["export-dot", &dgf, "--dot", target.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(target).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 9);
    assert!(dot.contains("\"ee^-1\""));
}

#[test]
fn verify_groups_passes() {
    let out = zdg(&["verify", "--family", "groups"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("non-sigma pairs are the edges of Γ(S⁰)"));
    assert!(text.ends_with("all checks passed\n"));
}

#[test]
fn verify_writes_json_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("summary.json");
    let out = zdg(&["verify", "--family", "i2-closures", "--count", "25", "--seed", "1", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["instances"], 25);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}
