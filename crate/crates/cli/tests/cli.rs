use std::io::Write;
use std::process::{Command, Output};

use quasitree::{topology, RibbonGraph};

const EXAMPLE: &str = "[-1a,2a,3a,1b,2b,-4a,3b,-5a,4b,5b]";

const THETA: &str = r#"{"vertices": [
  [{"edge": 1, "end": "a", "sign": 1}, {"edge": 2, "end": "a", "sign": 1}, {"edge": 3, "end": "a", "sign": 1}],
  [{"edge": 3, "end": "b", "sign": 1}, {"edge": 2, "end": "b", "sign": 1}, {"edge": 1, "end": "b", "sign": 1}]
]}"#;

const TWO_COMPONENTS: &str = r#"{"vertices": [
  [{"edge": 1, "end": "a", "sign": 1}, {"edge": 1, "end": "b", "sign": 1}],
  []
]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasitree"))
        .args(args)
        .env_remove("QUASITREE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_json(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn count_example() {
    for method in ["gf2", "integer", "symbolic", "oracle"] {
        let o = run(&["count", EXAMPLE, "--method", method]);
        assert!(o.status.success(), "{method}: {}", stderr(&o));
        assert_eq!(stdout(&o), "20\n");
    }
}

#[test]
fn poly_integer_example() {
    let o = run(&["poly", "--integer", EXAMPLE]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("2*x_{1 2 3 4} + 3*x_{1 2 3 4 5}"), "{out}");
    assert!(out.starts_with("mod2: x_{} + x_{1} + x_{1 2} + x_{1 2 3} + x_{1 2 3 4 5}"));
}

#[test]
fn list_mobius() {
    let o = run(&["list", "[-1a,1b]"]);
    assert_eq!(stdout(&o), "{}\n{1}\n");
}

#[test]
fn matrix_renderings() {
    let o = run(&["matrix", EXAMPLE]);
    let out = stdout(&o);
    assert!(out.contains("[ x_{11}  x_{12}  x_{13}       0       0]\n[-x_{12}       0  x_{23}       0       0]"), "{out}");
    let o = run(&["matrix", "[1a,1b]"]);
    assert_eq!(stdout(&o), "A^s =\n[0]\n\nA^u =\n[0]\n\nM =\n[0]\n");
}

#[test]
fn json_output_is_versioned() {
    let o = run(&["count", EXAMPLE, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["tau"], 20);
    assert_eq!(v["feasible"][4], serde_json::json!([1, 2, 3, 4, 5]));
}

#[test]
fn parse_error_has_caret() {
    let o = run(&["count", "[1a, 2q, 1b]"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("[1a, 2q, 1b]\n       ^"), "{err}");
    assert_eq!(run(&["count", "[1a, 2a, 1b]"]).status.code(), Some(2));
}

#[test]
fn cap_exit_code() {
    assert_eq!(run(&["count", EXAMPLE, "--cap", "4"]).status.code(), Some(3));
    assert!(run(&["count", EXAMPLE, "--cap", "4", "--force"]).status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_quasitree"))
        .args(["count", EXAMPLE])
        .env("QUASITREE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let nine = "[1a,2a,3a,4a,5a,6a,7a,8a,9a,1b,2b,3b,4b,5b,6b,7b,8b,9b]";
    assert_eq!(run(&["count", nine, "--method", "symbolic"]).status.code(), Some(3));
}

#[test]
fn ribbon_theta_matches_oracle() {
    let f = temp_json(THETA);
    let path = f.path().to_str().unwrap();
    let o = run(&["ribbon", path]);
    assert!(o.status.success(), "{}", stderr(&o));
    let g = RibbonGraph::from_json(THETA).unwrap();
    let oracle = topology::quasi_trees_oracle(&g, 20).unwrap();
    assert_eq!(oracle.len(), 3);
    let out = stdout(&o);
    assert!(out.contains(&format!("tau: {}\n", oracle.len())), "{out}");
    let listed: String = oracle.iter().map(|x| format!("{x}\n")).collect();
    assert!(out.ends_with(&listed), "{out}");
}

#[test]
fn ribbon_bouquet_passthrough() {
    let doc = r#"{"vertices": [[
      {"edge": 1, "end": "a", "sign": -1}, {"edge": 2, "end": "a", "sign": 1}, {"edge": 3, "end": "a", "sign": 1},
      {"edge": 1, "end": "b", "sign": 1}, {"edge": 2, "end": "b", "sign": 1}, {"edge": 4, "end": "a", "sign": -1},
      {"edge": 3, "end": "b", "sign": 1}, {"edge": 5, "end": "a", "sign": -1}, {"edge": 4, "end": "b", "sign": 1},
      {"edge": 5, "end": "b", "sign": 1}
    ]]}"#;
    let f = temp_json(doc);
    let o = run(&["ribbon", f.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("tau: 20\n"));
    let listed = stdout(&run(&["list", EXAMPLE]));
    assert!(out.ends_with(&listed), "{out}");
}

#[test]
fn ribbon_error_codes() {
    let f = temp_json(TWO_COMPONENTS);
    assert_eq!(run(&["ribbon", f.path().to_str().unwrap()]).status.code(), Some(5));
    let theta = temp_json(THETA);
    let o = run(&["ribbon", theta.path().to_str().unwrap(), "--quasi-tree", "{}"]);
    assert_eq!(o.status.code(), Some(6));
    assert!(stderr(&o).contains("2 boundary components"), "{}", stderr(&o));
    assert!(run(&["ribbon", theta.path().to_str().unwrap(), "--quasi-tree", "{2}"]).status.success());
    let bad = temp_json("{\"vertices\": [[{\"edge\": 1}]]}");
    assert_eq!(run(&["ribbon", bad.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn check_default_run_passes() {
    let o = run(&["check", "--seed", "1", "--count", "100", "--n", "8", "--p", "0.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("passed: 100\nfailed: 0\n"));
    let again = run(&["check", "--seed", "1", "--count", "100", "--n", "8", "--p", "0.5"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn check_edge_cases() {
    assert_eq!(run(&["check", "--count", "0"]).status.code(), Some(0));
    let o = run(&["check", "--count", "10", "--n", "6", "--corrupt"]);
    assert_eq!(o.status.code(), Some(7));
    assert!(stdout(&o).contains("first failure"));
}
