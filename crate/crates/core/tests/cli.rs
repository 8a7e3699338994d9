use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_adjhopf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str], stdin: &str) -> i32 {
    run(args, stdin).status.code().unwrap()
}

const K2: &str = r#"{"type":"adj","rows":[[0,1],[1,0]]}"#;
const P3: &str = r#"{"type":"adj","rows":[[0,0,1],[0,0,1],[1,1,0]]}"#;
const KK: &str = r#"{"type":"adj","rows":[[0,0,0,1],[0,0,1,0],[0,1,0,0],[1,0,0,0]]}"#;

#[test]
fn canon_of_permuted_pendant() {
    let permuted = r#"{"type":"adj","rows":[[0,1,2],[1,0,0],[2,0,0]]}"#;
    assert_eq!(ok(&["canon"], permuted), std::fs::read_to_string(fixture("double_edge_pendant.json")).unwrap());
}

#[test]
fn bullet_of_two_edges() {
    let k2 = fixture("k2.json");
    let out = ok(&["bullet", &k2, &k2], "");
    assert_eq!(
        out.trim_end(),
        format!(r#"{{"terms":[{{"coeff":"1/1","graph":{KK}}},{{"coeff":"4/1","graph":{P3}}}]}}"#)
    );
}

#[test]
fn coefficients_are_normalized() {
    let input = format!(r#"{{"terms":[{{"coeff":"2/4","graph":{K2}}}]}}"#);
    assert_eq!(ok(&["canon"], &input).trim_end(), format!(r#"{{"terms":[{{"coeff":"1/2","graph":{K2}}}]}}"#));
}

#[test]
fn graph_queries() {
    let t = fixture("triangle.json");
    assert_eq!(ok(&["deg", &t], ""), "3\n");
    assert_eq!(ok(&["aut-order", &t], ""), "6\n");
    assert_eq!(ok(&["dims", "--max", "4"], ""), "[1,1,3,8,23]\n");
    assert_eq!(ok(&["basis", "--degree", "1"], ""), format!("{K2}\n"));
    let comps = ok(&["components"], KK);
    assert_eq!(comps.lines().count(), 2);
    assert!(comps.starts_with(r#"{"vertices":[1,4],"graph":"#));
}

#[test]
fn quotient_and_insert() {
    let t = fixture("triangle.json");
    assert_eq!(ok(&["quotient", "--set", "1,2", &t], "").trim_end(), r#"{"type":"adj","rows":[[0,2],[2,0]]}"#);
    let k2 = fixture("k2.json");
    assert_eq!(
        ok(&["insert", "--at", "1", "--map", "0,1", &k2, &k2], "").trim_end(),
        r#"{"type":"adj","rows":[[0,1,0],[1,0,1],[0,1,0]]}"#
    );
    let ext = fixture("k2_two_legs.json");
    assert_eq!(
        ok(&["insert", "--at", "1", "--map", "1,0", "--legs", "0,1", &k2, &ext], "").trim_end(),
        r#"{"type":"ext","rows":[[0,1,1],[1,0,0],[1,0,0]],"ext":[0,1,1]}"#
    );
    assert_eq!(code(&["insert", "--at", "1", "--map", "1,0", "--legs", "2,0", &k2, &ext], ""), 64);
}

#[test]
fn coproduct_matches_fixture() {
    let expected = std::fs::read_to_string(fixture("coproduct_triangle.json")).unwrap();
    assert_eq!(ok(&["coproduct", &fixture("triangle.json")], ""), expected);
}

#[test]
fn algebra_commands() {
    let k2 = fixture("k2.json");
    let d2 = fixture("d2.json");
    let t = r#"{"type":"adj","rows":[[0,1,1],[1,0,1],[1,1,0]]}"#;
    assert_eq!(ok(&["bracket", &k2, &d2], "").trim_end(), format!(r#"{{"terms":[{{"coeff":"2/1","graph":{t}}}]}}"#));
    assert_eq!(ok(&["pair", &fixture("triangle.json"), "-"], t), "\"1/1\"\n");
    let anti1 = ok(&["antipode1", "-"], KK);
    assert!(anti1.contains(r#""coeff":"8/1""#));
    let delta1 = ok(&["coproduct1", "-"], KK);
    assert!(delta1.starts_with(r#"{"arity":2,"#));
    let dual = ok(&["dual-bullet", &k2, &k2], "");
    assert!(dual.contains(r#""coeff":"2/1""#));
    let counts = ok(&["insertions", &k2, &fixture("p3.json")], "");
    assert!(counts.contains(r#""coeff":"6/1""#));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["canon"], r#"{"type":"adj","rows":[[0,1],[2,0]]}"#), 65);
    assert_eq!(code(&["canon"], r#"{"type":"adj","rows":[[1,0],[0,0]]}"#), 65);
    assert_eq!(code(&["canon"], "{not json"), 65);
    assert_eq!(code(&["dims", "--max", "6"], ""), 69);
    assert_eq!(code(&["nonsense"], ""), 64);
    assert_eq!(code(&["verify", "--suite", "nope"], ""), 64);
    assert_eq!(code(&["canon", "/no/such/file.json"], ""), 64);
    assert_eq!(code(&["quotient", "--set", "1"], K2), 64);
    assert_eq!(code(&["--help"], ""), 0);
    assert_eq!(code(&["duality", "--max-degree", "2"], ""), 1);
}

#[test]
fn malformed_input_names_the_byte() {
    let out = run(&["canon"], r#"{"type":"adj","rows":[[0,1],[1,0]] x"#);
    assert_eq!(out.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 35"));
}

#[test]
fn verify_reports_are_json_lines() {
    let out = ok(&["verify", "--suite", "core", "--max-degree", "2", "--seed", "3"], "");
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["seed"], 3);
        assert_eq!(v["pass"], true);
    }
}
