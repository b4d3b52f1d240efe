use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use treebreadth::{Decomposition, Graph};

fn tbtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbtool")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, edges: &[(usize, usize)], n: usize) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, Graph::from_edges(n, edges).unwrap().to_edge_list()).unwrap();
    p
}

fn cycle(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn recognize_c4_prints_a_star_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_graph(dir.path(), "c4.el", &cycle(4), 4);
    let o = tbtool(&["recognize", "--graph", s(&c4)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("tb<=1: yes"));
    let d = Decomposition::from_json(lines.next().unwrap()).unwrap();
    let g = Graph::parse_edge_list(&fs::read_to_string(&c4).unwrap()).unwrap();
    assert!(d.evaluate(&g).unwrap().is_star);
}

#[test]
fn recognize_answers_no_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_graph(dir.path(), "c6.el", &cycle(6), 6);
    let o = tbtool(&["recognize", "--graph", s(&c6)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "tb<=1: no\n");
}

#[test]
fn recognize_refuses_other_classes_unless_asked() {
    let dir = tempfile::tempdir().unwrap();
    let k5: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    let k5 = write_graph(dir.path(), "k5.el", &k5, 5);
    assert_eq!(tbtool(&["recognize", "--graph", s(&k5)]).status.code(), Some(2));
    let o = tbtool(&["recognize", "--graph", s(&k5), "--fallback-oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("tb<=1: yes\n"));
}

#[test]
fn oracle_reports_c6() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_graph(dir.path(), "c6.el", &cycle(6), 6);
    let o = tbtool(&["oracle", "--graph", s(&c6), "--param", "tb"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "tb = 2\n");
    let o = tbtool(&["oracle", "--graph", s(&c6), "--param", "pl"]);
    assert_eq!(stdout(&o), "pl = 3\n");
    let o = tbtool(&["oracle", "--graph", s(&c6), "--param", "tb", "--limit", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generate_betweenness_chain() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.el");
    let wit = dir.path().join("w.json");
    let o = tbtool(&[
        "generate", "betweenness", "--n", "5", "--triples", "chain4", "--out", s(&out), "--witness", s(&wit),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let g = Graph::parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.n(), 26);
    let map = fs::read_to_string(dir.path().join("g.el.map")).unwrap();
    assert_eq!(map.lines().count(), 26);

    let o = tbtool(&["validate", "--graph", s(&out), "--decomposition", s(&wit)]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["valid"], true);
    assert_eq!(report["breadth"], 1);
    assert_eq!(report["length"], 2);
}

#[test]
fn generate_sandwich_and_ball() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("s.txt");
    fs::write(&inst, "4 2\n0 1\n2 3\n---\n4 4\n0 1\n2 3\n0 3\n1 2\n").unwrap();
    let out = dir.path().join("s.el");
    let wit = dir.path().join("s.json");
    let o = tbtool(&["generate", "sandwich", "--instance", s(&inst), "--out", s(&out), "--witness", s(&wit)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = tbtool(&["validate", "--graph", s(&out), "--decomposition", s(&wit)]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["is_star"], true);

    let c6 = write_graph(dir.path(), "c6.el", &cycle(6), 6);
    let out = dir.path().join("b.json");
    let wit = dir.path().join("b.dec");
    let o = tbtool(&[
        "generate", "ball", "--graph", s(&c6), "--r", "2", "--format", "json", "--out", s(&out), "--witness", s(&wit),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::parse_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.n(), 12);
    let d = Decomposition::from_json(&fs::read_to_string(&wit).unwrap()).unwrap();
    assert!(d.is_star(&g));
    let o = tbtool(&["generate", "ball", "--graph", s(&c6), "--r", "1", "--out", s(&out), "--witness", s(&wit)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_graph(dir.path(), "c4.el", &cycle(4), 4);
    let dec = dir.path().join("d.json");
    fs::write(&dec, r#"{"shape":"tree","nodes":[{"id":0,"bag":[0,1,2]}],"edges":[]}"#).unwrap();
    let o = tbtool(&["validate", "--graph", s(&c4), "--decomposition", s(&dec)]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["valid"], false);
}

#[test]
fn atoms_of_two_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "bowtie.el", &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)], 5);
    let o = tbtool(&["atoms", "--graph", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["atoms"].as_array().unwrap().len(), 2);
    assert_eq!(v["separators"][0], serde_json::json!([2]));
}

#[test]
fn convert_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let el = write_graph(dir.path(), "c5.el", &cycle(5), 5);
    let json = dir.path().join("c5.json");
    assert_eq!(tbtool(&["convert", "--graph", s(&el), "--format", "json", "--out", s(&json)]).status.code(), Some(0));
    let o = tbtool(&["convert", "--graph", s(&json), "--format", "el"]);
    assert_eq!(stdout(&o), fs::read_to_string(&el).unwrap());
    let o = tbtool(&["convert", "--graph", s(&json), "--format", "dot"]);
    assert!(stdout(&o).starts_with("graph G {"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(tbtool(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tbtool(&["recognize"]).status.code(), Some(2));
    assert_eq!(tbtool(&["recognize", "--graph", "/nonexistent/g.el"]).status.code(), Some(2));
    assert_eq!(tbtool(&["--jobs", "0", "atoms", "--graph", "x"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "3 1\n0 7\n").unwrap();
    let o = tbtool(&["convert", "--graph", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
    let two = write_graph(dir.path(), "two.el", &[(0, 1), (2, 3)], 4);
    assert_eq!(tbtool(&["recognize", "--graph", s(&two)]).status.code(), Some(2));
}
