use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn dehnkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dehnkit"))
        .args(args)
        .env_remove("DEHNKIT_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = dehnkit(&full);
    let v: Value = serde_json::from_str(&stdout(&o)).expect("json output");
    assert_eq!(v["v"], 1);
    (o.status.code().unwrap(), v)
}

#[test]
fn humphries3_table1() {
    let o = dehnkit(&["complete", "--preset", "humphries3", "--verify-table1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("size 63"), "{out}");
    assert!(out.contains("245/245 cells match"), "{out}");
}

#[test]
fn humphries3_json_checks() {
    let (code, v) = json(&["complete", "--preset", "humphries3", "--verify-lemmas", "--closure", "--iso-homological"]);
    assert_eq!(code, 0);
    assert_eq!(v["size"], 63);
    assert_eq!(v["lemmas"]["holding"], v["lemmas"]["instances"]);
    assert_eq!(v["closure"]["union"], 63);
    assert_eq!(v["homological"]["isomorphic"], true);
}

#[test]
fn complete_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h2.json");
    let o = dehnkit(&["complete", "--preset", "humphries2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = dehnkit(&["quandle", "validate", "--in", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("size 15"));
    let iso = dehnkit(&["quandle", "iso", "--in", out.to_str().unwrap(), "--other", "hom:2:2"]);
    assert_eq!(iso.status.code(), Some(0));
}

#[test]
fn complete_cap_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_dehnkit"))
        .args(["complete", "--preset", "humphries3"])
        .env("DEHNKIT_CAP", "20")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("more than 20"));
}

#[test]
fn complete_from_file() {
    let f = data("trefoil.pres");
    let o = dehnkit(&["complete", "--file", f.to_str().unwrap(), "--witnesses"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "size 3\n0\tx\n1\ty\n2\tx*y\n");
}

#[test]
fn bad_quandle_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"size":2,"table":[[0,0],[0,0]]}"#).unwrap();
    let o = dehnkit(&["quandle", "validate", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("axiom violation"));
    let (code, v) = json(&["quandle", "validate", "--in", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["axiom"], "right_bijectivity");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("junk.json");
    std::fs::write(&f, "not json").unwrap();
    assert_eq!(dehnkit(&["quandle", "validate", "--in", f.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(dehnkit(&["quandle", "validate"]).status.code(), Some(2));
    assert_eq!(dehnkit(&["nonsense"]).status.code(), Some(2));
    assert_eq!(dehnkit(&["group", "generate", "--preset", "sym:x"]).status.code(), Some(2));
}

#[test]
fn lambda_check_g2_q2() {
    let o = dehnkit(&["hom", "lambda-check", "--g", "2", "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds true"));
    let (_, v) = json(&["hom", "lambda-check", "--g", "2", "--q", "2"]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["report"]["classes"], 15);
}

#[test]
fn sp_order() {
    let (code, v) = json(&["hom", "sp", "--g", "1", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 24);
}

#[test]
fn group_commands() {
    let (_, v) = json(&["group", "classes", "--preset", "sym:4"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    let (_, v) = json(&["group", "center", "--preset", "sl2:3"]);
    assert_eq!(v["center_order"], 2);
    let g = data("s3.gens");
    let (_, v) = json(&["group", "generate", "--gens", g.to_str().unwrap()]);
    assert_eq!(v["order"], 6);
}

#[test]
fn dehn_commands() {
    let (code, v) = json(&["dehn", "env-ab", "--preset", "dihedral:4"]);
    assert_eq!(code, 0);
    assert_eq!(v["free_rank"], v["classes"]);
    let (code, v) = json(&["dehn", "inn-check", "--preset", "sl2:3", "--seeds", "mod=3; 1 1 / 0 1"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["inn_order"], 12);
    let (code, _) = json(&["dehn", "witness", "--preset", "dihedral:3"]);
    assert_eq!(code, 0);
    let (code, _) = json(&["dehn", "witness", "--preset", "core:cyclic:4"]);
    assert_eq!(code, 1);
    let (code, _) = json(&["dehn", "witness", "--core", "cyclic:4"]);
    assert_eq!(code, 0);
}

#[test]
fn quandle_commands() {
    let (_, v) = json(&["quandle", "components", "--preset", "trivial:3"]);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
    let (_, v) = json(&["quandle", "inn", "--preset", "dihedral:3"]);
    assert_eq!(v["inn_order"], 6);
    let (_, v) = json(&["quandle", "aut", "--preset", "dihedral:3"]);
    assert_eq!(v["aut_order"], 6);
    let (_, v) = json(&["quandle", "exponent", "--preset", "dihedral:5"]);
    assert_eq!(v["exponent"], 2);
    for side in ["left", "right"] {
        let (_, v) = json(&["quandle", "order-search", "--preset", "dihedral:3", "--side", side]);
        assert_eq!(v["orderable"], false);
        assert!(v["braid_pair"].is_array());
    }
    let (_, v) = json(&["quandle", "order-search", "--preset", "trivial:4", "--side", "bi"]);
    assert_eq!(v["orderable"], true);
    let (code, _) = json(&["quandle", "iso", "--preset", "dihedral:3", "--other", "trivial:3"]);
    assert_eq!(code, 1);
}

#[test]
fn biorder_seeded() {
    let a = dehnkit(&["--seed", "7", "quandle", "biorder", "--matrix", "2,1,1,1"]);
    let b = dehnkit(&["--seed", "7", "quandle", "biorder", "--matrix", "2,1,1,1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = dehnkit(&["quandle", "biorder", "--matrix", "0,1,-1,0"]);
    assert_eq!(r.status.code(), Some(1));
}

#[test]
fn knot_colorings() {
    let t = data("trefoil.knot");
    let r3 = data("r3.json");
    let (_, v) = json(&["knot", "color", "--diagram", t.to_str().unwrap(), "--quandle", r3.to_str().unwrap()]);
    assert_eq!(v["colorings"], 9);
    let f = data("figure8.knot");
    let (_, v) = json(&["knot", "color", "--diagram", f.to_str().unwrap(), "--quandle", "dihedral:5"]);
    assert_eq!(v["colorings"], 25);
    let (_, v) = json(&["knot", "color", "--knot", "unknot", "--quandle", "dihedral:7"]);
    assert_eq!(v["colorings"], 7);
}

#[test]
fn trefoil_check() {
    let o = dehnkit(&["knot", "trefoil-check", "--bound", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let (code, v) = json(&["knot", "two-gen", "--x", "1,0", "--y", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["kind"], "Free");
    let (_, v) = json(&["knot", "two-gen", "--x", "1,0", "--y", "-1,0"]);
    assert_eq!(v["report"]["kind"], "Trivial");
}

#[test]
fn free_words() {
    assert_eq!(stdout(&dehnkit(&["free", "normalize", "a*b*b", "--involutory"])), "a\n");
    assert_eq!(stdout(&dehnkit(&["free", "multiply", "a*b", "c*d"])), "a*b*d*c*d\n");
    assert_eq!(stdout(&dehnkit(&["free", "core-embed", "a*b*c"])), "c b^-1 a b^-1 c\n");
    assert_eq!(dehnkit(&["free", "equal", "a*(b*c)", "a*-c*b*c"]).status.code(), Some(0));
    assert_eq!(dehnkit(&["free", "equal", "a*b", "b*a"]).status.code(), Some(1));
}

#[test]
fn deterministic_output() {
    let args = ["--json", "complete", "--preset", "humphries2"];
    assert_eq!(dehnkit(&args).stdout, dehnkit(&args).stdout);
    let args = ["--json", "hom", "mod-reduce", "--g", "1", "--n", "3"];
    let a = dehnkit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, dehnkit(&args).stdout);
}
