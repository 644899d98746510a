use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxkit")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

const M334: &str = r#"{"rank":3,"m":[[1,3,3],[3,1,4],[3,4,1]]}"#;
const M33INF: &str = r#"{"rank":3,"m":[[1,3,3],[3,1,0],[3,0,1]]}"#;

#[test]
fn prefixes_of_a3_reflection() {
    let v = json(&["prefixes", "--preset", "A3", "12321"]);
    assert_eq!(v["prefixes"], serde_json::json!(["123", "132", "321"]));
    assert_eq!(v["reflection"], serde_json::json!([1, 2, 3, 2, 1]));
}

#[test]
fn h3_prefix_check() {
    let v = json(&["prefixes", "--preset", "H3", "12123", "--check"]);
    assert_eq!(v["prefix"], true);
    let v = json(&["prefixes", "--preset", "A3", "121", "--check"]);
    assert_eq!(v["prefix"], false);
}

#[test]
fn dihedral_example() {
    for extra in [None, Some("--repfree")] {
        let mut args = vec!["dihedral", "--matrix", M334, "3123213", "3132313"];
        args.extend(extra);
        let v = json(&args);
        assert_eq!(v["canonical"], serde_json::json!(["1", "31213"]));
        assert_eq!(v["order"], 4);
    }
}

#[test]
fn automaton_counts() {
    let v = json(&["automaton", "--preset", "~A2", "--m", "0", "--kind", "pref", "--low"]);
    assert_eq!(v["states"].as_array().unwrap().len(), 16);
    assert_eq!(v["low_elements"].as_object().unwrap().len(), 16);
    let v = json(&["automaton", "--preset", "A3", "--kind", "pref", "--series", "--terms", "4"]);
    assert_eq!(v["series"]["coefficients"][3], "4");
    let text = stdout(&["automaton", "--preset", "U3", "--kind", "pref", "--series", "--terms", "5"]);
    assert!(text.contains("W(q) = (3q) / (1 - 2q)"), "{text}");
}

#[test]
fn affine_reports() {
    let v = json(&["affine", "~B3"]);
    assert_eq!(v["M"], 20);
    assert_eq!(v["orbits"][0]["P"], serde_json::json!(["1", "1", "2", "1", "1"]));
    let v = json(&["affine", "~G2"]);
    assert_eq!(v["M"], 15);
    let text = stdout(&["affine", "A4"]);
    assert!(text.contains("Phi+(q) = (5) / (1 - q)"), "{text}");
}

#[test]
fn roots_and_dot() {
    let v = json(&["roots", "--preset", "A2", "--max-depth", "1"]);
    assert_eq!(v["roots"].as_array().unwrap().len(), 3);
    let dot = stdout(&["roots", "--matrix", M33INF, "--max-depth", "3", "--format", "dot"]);
    assert!(dot.contains("dashed"));
    assert!(dot.contains("\"312\"") || dot.contains("312"));
    let dir = std::env::temp_dir().join(format!("coxkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("small.dot");
    stdout(&["roots", "--preset", "~A2", "--small", "1", "--dot", path.to_str().unwrap()]);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("digraph"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn reflection_census() {
    let v = json(&["reflections", "--preset", "~A2", "--max-length", "5"]);
    assert_eq!(v["census"], serde_json::json!([0, 3, 0, 3, 0, 3]));
}

#[test]
fn deterministic_output() {
    let args = ["automaton", "--preset", "H3", "--kind", "pref", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["roots", "--preset", "Q7"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--matrix", "{\"rank\":2,\"m\":[[1,1],[1,1]]}"]).status.code(), Some(2));
    assert_eq!(run(&["affine", "H3"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--preset", "A5", "--max-roots", "3"]).status.code(), Some(3));
    assert_eq!(run(&["reflections", "--preset", "~A2", "--max-length", "9", "--max-elements", "10"]).status.code(), Some(3));
    assert_eq!(run(&["prefixes", "--preset", "A3", "12"]).status.code(), Some(4));
    assert_eq!(run(&["dihedral", "--preset", "A3", "1", "1"]).status.code(), Some(4));
}

#[test]
fn memory_cap_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_coxkit"))
        .args(["reflections", "--preset", "~A2", "--max-length", "9"])
        .env("COXKIT_MAX_MEM", "2K")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
