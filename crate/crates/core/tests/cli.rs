use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigenpoints"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

const FERMAT: &str = r#"["1","0","0","1","0","0","0","0","0","1"]"#;

#[test]
fn eigen_on_fermat() {
    let out = run(&["eigen", "--input", FERMAT, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["regular"], true);
    assert_eq!(v["points"].as_array().unwrap().len(), 7);
    assert_eq!(v["report"]["label"], "C8");
    assert_eq!(v["exact_report"]["lines"].as_array().unwrap().len(), 6);
}

#[test]
fn eigen_on_a_line_component() {
    let out = run(&["eigen", "--input", r#"{"cubic":["0","1","0","0","-1","0","0","0","0","0"]}"#]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["decomposition"]["kind"], "line-component");
    assert!(v.get("points").is_none());
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["eigen", "--input", r#"["1","x","0","1","0","0","0","0","0","1"]"#],
        vec!["eigen", "--input", r#"["1","0"]"#],
        vec!["eigen", "--input", "/nonexistent/cubic.json"],
        vec!["classify", "--input", r#"{"points":[["1","0","0"]],"extra":1}"#],
        vec!["construct", "c8", "--input", r#"{"p1":["1","0","0"],"p2":["0","1","0"],"p4":["1","1","0"]}"#],
        vec!["verify-paper", "rank"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("json on stderr");
        assert!(err["error"].is_string(), "{err}");
    }
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn degenerate_inputs_exit_4_with_redirect() {
    let payload = r#"{"p1":["1","0","0"],"p2":["0","1","0"],"p4":["0","0","1"],"t5":["1","1"]}"#;
    let out = run(&["construct", "c3", "--input", payload]);
    assert_eq!(out.status.code(), Some(4));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["redirect"], "c5");
}

#[test]
fn construct_then_eigen_round_trip() {
    let payload = r#"{"p1":["1","2","3"],"p2":["2","-1","1"],"p4":["0","1","5"]}"#;
    let out = run(&["construct", "c8", "--input", payload, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let built = json_of(&out);
    assert_eq!(built["report"]["label"], "C8");
    let member = built["member"].to_string();
    let out = run(&["eigen", "--input", &member, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["report"]["label"], "C8");
    assert_eq!(v["exact_points"].as_array().unwrap().len(), 7);
}

#[test]
fn classify_and_rank() {
    let fermat = r#"{"points":[["1","0","0"],["0","1","0"],["1","1","0"],["0","0","1"],["1","0","1"],["0","1","1"],["1","1","1"]]}"#;
    let v = json_of(&run(&["classify", "--input", fermat, "--json"]));
    assert_eq!(v["label"], "C8");
    assert_eq!(v["strict"], true);

    let five = r#"{"points":[["1","0","0"],["0","i","1"],["1","i","1"],["0","-i","1"],["2","-i","1"]]}"#;
    let v = json_of(&run(&["rank", "--input", five, "--json"]));
    assert_eq!(v["rank"], 8);
    assert_eq!(v["v_configuration"]["rank8_case2"], true);
}

#[test]
fn output_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("eigenpoints-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let args = ["eigen", "--input", FERMAT, "--json", "--seed", "9"];
    let first = run(&args);
    let out = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).unwrap();
    assert_eq!(
        serde_json::from_slice::<Value>(&written).unwrap(),
        json_of(&first)
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn pencil_degree_needs_a_pencil_or_a_seed() {
    assert_eq!(run(&["pencil-degree"]).status.code(), Some(2));
    let f = FERMAT;
    let same = format!(r#"{{"f":{f},"g":{f}}}"#);
    assert_eq!(run(&["pencil-degree", "--input", &same]).status.code(), Some(2));
}
