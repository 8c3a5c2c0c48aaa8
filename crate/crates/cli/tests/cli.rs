use std::process::Command;

use primegraph::engine::PrimeGraph;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_primegraph")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn a6_has_no_edges() {
    let (code, out, _) = run(&["--group", "A(6)"]);
    assert_eq!(code, 0);
    assert!(out.contains("vertices: [2, 3, 5]"));
    assert!(out.contains("edges: (none)"));
    assert!(out.contains("components: 3"));
}

#[test]
fn m11_graph() {
    let (code, out, _) = run(&["--group", "M11"]);
    assert_eq!(code, 0);
    assert!(out.contains("edges: 2-3\n"), "{out}");
}

#[test]
fn json_round_trip_revalidates() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["Sp(4,4)", "POmega+(8,3)", "A(10)", "Sk-x-Sn-k(7,10)", "L(2,13)"] {
        let (code, out, _) = run(&["--group", spec, "--format", "json", "--seed", "9"]);
        assert_eq!(code, 0, "{spec}");
        let path = dir.path().join("graph.json");
        std::fs::write(&path, &out).unwrap();
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["config"]["seed"], 9);
        let g: PrimeGraph = serde_json::from_value(v["graph"].clone()).unwrap();
        for (_, d) in g.edges() {
            assert!(d.revalidate().unwrap(), "{spec}: {d:?}");
        }
        assert_eq!(serde_json::to_value(&g).unwrap(), v["graph"], "{spec}");
    }
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--group", "Omega+(8,2)", "--format", "json", "--budget", "2000", "--seed", "5"];
    let a = run(&args).1;
    let b = run(&args).1;
    std::fs::write(dir.path().join("a.json"), &a).unwrap();
    std::fs::write(dir.path().join("b.json"), &b).unwrap();
    assert_eq!(std::fs::read(dir.path().join("a.json")).unwrap(), std::fs::read(dir.path().join("b.json")).unwrap());
}

#[test]
fn comparison_exit_codes() {
    assert_eq!(run(&["--group", "Sp(8,2)", "--subgroup", "O-(8,2)"]).0, 0);
    let (code, out, _) = run(&["--group", "Sp(12,2)", "--subgroup", "O-(12,2)"]);
    assert_eq!(code, 1);
    assert!(out.contains("NOT_EQUAL"));
}

#[test]
fn undecided_graph_exits_2() {
    // without a presentation or formula tier nothing decides the edges of M22
    let (code, out, _) = run(&["--group", "M22"]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("components: undecided"));
}

#[test]
fn usage_errors_exit_3() {
    let (code, _, err) = run(&["--group", "Sp(8,2"]);
    assert_eq!(code, 3);
    assert!(err.contains("position 6"), "{err}");
    assert_eq!(run(&[]).0, 3);
    assert_eq!(run(&["--verify", "nonsense"]).0, 3);
    assert_eq!(run(&["--scan", "gc2", "--range", "9..3"]).0, 3);
    assert_eq!(run(&["--group", "A(6)", "--verify", "pi-table"]).0, 3);
}

#[test]
fn pi_table_and_corollary_pass() {
    let (code, out, _) = run(&["--verify", "pi-table"]);
    assert_eq!(code, 0);
    assert!(out.contains("U(5,2) vs L(2,11): PI_EQUAL {2, 3, 5, 11}"), "{out}");
    let (code, out, _) = run(&["--verify", "corollary"]);
    assert_eq!(code, 0);
    assert!(out.contains("Direct path"));
}

#[test]
fn scans_are_worker_independent() {
    let one = run(&["--scan", "c13", "--range", "5..200"]).1;
    let three = run(&["--scan", "c13", "--range", "5..200", "--workers", "3"]).1;
    assert_eq!(one, three);
    let (code, out, _) = run(&["--scan", "gc2", "--range", "15..99", "--workers", "2"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.contains("\"agrees\":true")));
}

#[test]
fn replay_prints_witness() {
    let (code, out, _) = run(&["--replay", "3.2", "--params", "8,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("(7, 31)"), "{out}");
    assert_eq!(run(&["--replay", "3.9", "--params", "8,2"]).0, 3);
}
