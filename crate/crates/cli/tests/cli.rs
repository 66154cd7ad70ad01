use std::io::Write;
use std::process::{Command, Output, Stdio};

use pathgraph_core::{families, from_graph6, is_isomorphic};

fn run(args: &[&str]) -> Output {
    run_with(args, "", &[])
}

fn run_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pathgraph"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("PATHGRAPH_CAP_CLIQUES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn recognize_the_sun() {
    let o = run(&["recognize", "g2", "--class", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "g2: E}Y_ n=6 m=9\n  interval: false (asteroidal_triple)\n  directed-path: false (s_directed_triple)\n  path: true\n  chordal: true\n"
    );
}

#[test]
fn empty_input_is_an_empty_report() {
    let o = run(&["recognize"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
}

#[test]
fn both_engines_reject_g3() {
    let o = run(&["recognize", "g3", "--engine", "both", "--class", "path"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("path: false (bad_sun_system)"));
}

#[test]
fn disagreement_is_a_violation() {
    // A universal vertex over the 3-sun: no bad sun system, yet no clique-path tree.
    let o = run_with(&["recognize", "--engine", "both", "--class", "path"], "FEl~w\n", &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("disagreement"));
}

#[test]
fn certify_examples() {
    let o = run(&["certify", "f11_8", "--class", "path"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("flower {u,v,w,x,y} with core {u,v,w}"), "{s}");
    assert!(s.contains("odd cycle of length 3"), "{s}");
    assert_eq!(s.matches(": intersecting").count(), 3);

    let s = stdout(&run(&["certify", "c4", "--class", "chordal"]));
    assert!(s.contains("induced cycle of length 4"), "{s}");

    let s = stdout(&run(&["certify", "g1", "--class", "path"]));
    assert!(s.contains("path: no certificate: member"), "{s}");
}

#[test]
fn certify_key_value() {
    let s = stdout(&run(&["certify", "f11_8", "--class", "path", "--format", "kv"]));
    assert!(s.contains("    certificate=bad_sun_system\n    F={u,v,w,x,y}\n    R={r1,r2,r3}\n"), "{s}");
}

#[test]
fn gen_examples() {
    let s = stdout(&run(&["gen", "ksun", "3"]));
    assert!(is_isomorphic(&from_graph6(s.trim()).unwrap(), &families::g2()).unwrap());

    let s = stdout(&run(&["gen", "f11", "--k", "4"]));
    assert_eq!(from_graph6(s.trim()).unwrap().n(), 16);

    let s = stdout(&run(&["gen", "sdirected", "--type", "4", "--t", "1"]));
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("# endpoints u=u v=v"));
    assert_eq!(from_graph6(lines.next().unwrap()).unwrap().n(), 9);
}

#[test]
fn gen_output_feeds_recognize() {
    let corpus = stdout(&run(&["gen", "corpus", "--n-max", "5"]));
    assert_eq!(corpus.lines().count(), 1 + 1 + 2 + 5 + 15);
    let o = run_with(&["recognize", "-", "--class", "chordal"], &corpus, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("chordal: true").count(), 24);
}

#[test]
fn batch_output_is_stable_and_ordered() {
    let batch = stdout(&run(&["gen", "random", "--n", "9", "--samples", "40", "--seed", "5"]));
    let a = run_with(&["recognize", "--engine", "characterization"], &batch, &[]);
    let b = run_with(&["recognize", "--engine", "characterization"], &batch, &[]);
    assert_eq!(a.stdout, b.stdout);
    let codes: Vec<&str> = batch.lines().collect();
    let reported: Vec<String> = stdout(&a)
        .lines()
        .filter(|l| l.starts_with("stdin:"))
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(reported, codes);
}

#[test]
fn clique_cap_from_environment() {
    let o = run_with(&["recognize", "g2", "--engine", "oracle", "--class", "path"], "", &[("PATHGRAPH_CAP_CLIQUES", "2")]);
    assert!(stdout(&o).contains("path: unsupported"));
    let o = run(&["recognize", "g2", "--engine", "oracle", "--class", "path", "--cap-cliques", "4"]);
    assert!(stdout(&o).contains("path: true"));
}

#[test]
fn tree_export() {
    let s = stdout(&run(&["tree", "g2"]));
    assert!(s.contains("// clique-path tree\ngraph clique_tree {"));
    let s = stdout(&run(&["tree", "g3"]));
    assert!(s.contains("no clique-path tree exists"));
    let s = stdout(&run(&["tree", "c5"]));
    assert!(s.contains("not chordal"));
}

#[test]
fn validate_exit_codes() {
    let o = run(&["validate", "theorem", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["validate", "prop44", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["validate", "lemmas", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    // Some triples of the 5-sun based member admit no such tree.
    let o = run(&["validate", "prop44", "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first violation"));
    assert_eq!(run(&["validate", "theorem", "--n-max", "8"]).status.code(), Some(2));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run_with(&["recognize"], "not graph6 at all\n", &[]).status.code(), Some(2));
    assert_eq!(run(&["gen", "ksun"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "ksun", "2"]).status.code(), Some(2));
    assert_eq!(run(&["recognize", "--class", "tree", "g1"]).status.code(), Some(2));
}
