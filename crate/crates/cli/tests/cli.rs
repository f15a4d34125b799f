//! End-to-end runs of the `muvc` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const TREE9: &str = "# nine-vertex example tree\np 9 8\ne 1 2\ne 1 4\ne 1 6\ne 1 8\ne 1 9\ne 2 3\ne 4 5\ne 6 7\n";

fn muvc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_muvc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_tree_on_the_nine_vertex_tree() {
    let dir = tempfile::tempdir().unwrap();
    let g = file(dir.path(), "tree9.gr", TREE9);
    let o = muvc(&["solve-tree", s(&g), "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("# seed: 0, tie-break: "), "{out}");
    assert!(out.contains("opt: 2\n"), "{out}");
    assert!(out.contains("verification: ok\n"), "{out}");
}

#[test]
fn verify_reports_the_unique_cover() {
    let dir = tempfile::tempdir().unwrap();
    let g = file(dir.path(), "tree9.gr", TREE9);
    let o = muvc(&["verify", s(&g), "--delete", "8,9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "unique: true, cover: 2 4 6");
    let o = muvc(&["verify", s(&g)]);
    assert!(stdout(&o).starts_with("unique: false, cover: 1 "), "{}", stdout(&o));
}

#[test]
fn fpt_mode_reports_infeasibility_with_exit_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let e = file(dir.path(), "k2.cwx", "(eta 1 2 (union (v 1 1) (v 2 2)))\n");
    let o = muvc(&["solve-cw", "--expr", s(&e), "--fpt", "--k", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("infeasible within k=0"));
    let o = muvc(&["solve-cw", "--expr", s(&e), "--fpt", "--k", "1", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("opt: 1\n"));
}

#[test]
fn all_solvers_agree_and_json_matches_text() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("t");
    let o = muvc(&["gen-random", "--kind", "partial-ktree", "--n", "9", "--width", "2", "--p", "0.8", "--seed", "3", "--out", s(&prefix)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let g = prefix.with_extension("gr");
    let td = prefix.with_extension("td");
    let tw = muvc(&["solve-tw", s(&g), "--td", s(&td), "--verify"]);
    let oracle = muvc(&["oracle", s(&g)]);
    let opt = |o: &Output| stdout(o).lines().find(|l| l.starts_with("opt: ")).map(str::to_string);
    assert_eq!(opt(&tw), opt(&oracle));
    let json = muvc(&["solve-tw", s(&g), "--td", s(&td), "--verify", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(Some(format!("opt: {}", v["opt"])), opt(&tw));
    assert_eq!(v["verification"], "ok");

    let o = muvc(&["gen-random", "--kind", "cograph", "--n", "7", "--seed", "5", "--out", s(&prefix)]);
    assert_eq!(o.status.code(), Some(0));
    let cw = muvc(&["solve-cw", "--expr", s(&prefix.with_extension("cwx")), s(&prefix.with_extension("gr")), "--verify"]);
    let oracle = muvc(&["oracle", s(&prefix.with_extension("gr"))]);
    assert_eq!(cw.status.code(), Some(0), "{}", stderr(&cw));
    assert_eq!(opt(&cw), opt(&oracle));
}

#[test]
fn oracle_budget_and_pauvc() {
    let dir = tempfile::tempdir().unwrap();
    let g = file(dir.path(), "tree9.gr", TREE9);
    let o = muvc(&["oracle", s(&g), "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("infeasible within k=1"));
    let o = muvc(&["oracle", s(&g), "--threads", "2"]);
    assert!(stdout(&o).contains("witness: 8 9\n"), "{}", stdout(&o));
    let o = muvc(&["pauvc-oracle", s(&g)]);
    assert!(stdout(&o).contains("opt: 3\n"), "{}", stdout(&o));
}

#[test]
fn generators_write_their_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = muvc(&["gen-gk", "--k", "4"]);
    assert!(stdout(&o).starts_with("p 11 10\n"), "{}", stdout(&o));
    let f = file(dir.path(), "phi.txt", "x 2\ny 2\nx1 x2 -y1\n-x1 y1 y2\n");
    let prefix = dir.path().join("phi");
    let o = muvc(&["gen-hardness", s(&f), "--out", s(&prefix)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("vertices: 102, edges: 146, max_degree: 5"));
    let roles = fs::read_to_string(prefix.with_extension("roles")).unwrap();
    assert_eq!(roles.lines().count(), 102);
    assert!(fs::read_to_string(prefix.with_extension("gr")).unwrap().starts_with("p 102 146"));
}

#[test]
fn input_errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = file(dir.path(), "bad.gr", "p 3 2\ne 1 2\ne 1 7\n");
    let o = muvc(&["solve-tree", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("bad.gr") && err.contains("line 3"), "{err}");
    let cyc = file(dir.path(), "c3.gr", "p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let o = muvc(&["solve-tree", s(&cyc)]);
    assert_eq!(o.status.code(), Some(1));
    let o = muvc(&["solve-tw", s(&cyc)]);
    assert_eq!(o.status.code(), Some(1));
    let e = file(dir.path(), "bad.cwx", "(eta 1 2\n (union (v 1 a) (w 2 b)))\n");
    let o = muvc(&["solve-cw", "--expr", s(&e)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bad.cwx: line 2"), "{}", stderr(&o));
    let o = muvc(&["solve-tree", s(&dir.path().join("missing.gr"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(muvc(&["solve-tree", "--no-such-flag"]).status.code() != Some(0));
}

#[test]
fn bench_prints_one_line_per_size() {
    let o = muvc(&["bench", "--sizes", "1000,2000", "--repeats", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("n: 1000, opt: 1,") && out.contains("n: 2000, opt: 1,"), "{out}");
}
