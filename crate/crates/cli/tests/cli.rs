use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quandle")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("quandle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn corpus_file(name: &str) -> String {
    format!("{}/../core/corpus/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn homology_text_and_json() {
    let o = run(&["homology", "--quandle", "dihedral:3", "--theory", "Q", "--degree", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "H_3^Q = Z_3");
    let o = run(&["--json", "homology", "--quandle", "trivial:1", "--theory", "R", "--degree", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["free_rank"], 1);
    assert_eq!(v["torsion"], serde_json::json!([]));
}

#[test]
fn twisted_homology_needs_a_field() {
    let gf4 = scratch("gf4.json", r#"{"modulus": 2, "relation": [1, 1, 1]}"#);
    let o = run(&["homology", "--quandle", "dihedral:3", "--degree", "2", "--twisted", gf4.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("dim H_2^TQ"));
    let z3 = scratch("z3.json", r#"{"modulus": 3, "relation": [1, 1, 1]}"#);
    let o = run(&["homology", "--quandle", "dihedral:3", "--degree", "2", "--twisted", z3.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_exit_codes() {
    let good = scratch("d3.json", r#"{"name":"d3","order":3,"table":[[0,2,1],[2,1,0],[1,0,2]]}"#);
    let o = run(&["validate", good.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("quandle=true"));
    let bad = scratch("bad.json", r#"{"name":"bad","order":2,"table":[[1,1],[0,0]]}"#);
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("quandle=false"));
    let o = run(&["homology", "--quandle", &format!("file:{}", good.display()), "--degree", "2"]);
    assert_eq!(stdout(&o).trim(), "H_2^Q = 0");
}

#[test]
fn trefoil_colorings() {
    let o = run(&["color", "--diagram", "corpus:trefoil", "--quandle", "dihedral:3", "--orbits", "--shadow"]);
    let text = stdout(&o);
    assert!(text.starts_with("colorings: 9, orbits: 2"), "{text}");
    assert!(text.contains("orbit sizes: [3, 6]"));
    assert!(text.contains("shadow colorings: 27"));
    let o = run(&["color", "--diagram", &corpus_file("trefoil.json"), "--quandle", "dihedral:5"]);
    assert!(stdout(&o).starts_with("colorings: 5"));
}

#[test]
fn theta_state_sums() {
    let theta = corpus_file("theta_dihedral3.json");
    let o = run(&["invariant", "--diagram", "corpus:trefoil", "--quandle", "dihedral:3", "--cocycle", &theta, "--shadow"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "9*[0] + 18*[2]");
    let o = run(&["invariant", "--diagram", "corpus:unknot", "--quandle", "dihedral:3", "--cocycle", &theta, "--shadow"]);
    assert_eq!(stdout(&o).trim(), "9*[0]");
}

#[test]
fn diagram_commands() {
    let o = run(&["diagram", "list"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("figure_eight")));
    let o = run(&["--json", "diagram", "info", "corpus:hopf"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn verify_moves_reports_all_pairs() {
    let o = run(&["verify-moves", "--quandle", "dihedral:3", "--filter", "r2_"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().count() >= 6);
    assert!(text.lines().all(|l| l.starts_with("ok")));
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(run(&["homology", "--quandle", "bogus:3", "--degree", "2"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "--quandle", "dihedral:3", "--degree", "9"]).status.code(), Some(1));
    assert_eq!(run(&["color", "--diagram", "corpus:nope", "--quandle", "dihedral:3"]).status.code(), Some(2));
}

#[test]
fn selftest_single_criterion() {
    let o = run(&["selftest", "--criterion", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[PASS]  4."));
}
