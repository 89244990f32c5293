use std::path::PathBuf;
use std::process::{Command, Output};

const EX1: &str = "vertices 1 2 3;\narrows a:1->2 b:2->3;\nrelations a*b;\n";
const EX2: &str = "vertices 1 2 3 4 5;\narrows a:1->2 b:2->3 c:3->4 d:4->5;\nrelations a*b, c*d;\n";
const A2: &str = "vertices 1 2;\narrows a:1->2;\n";

fn write(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tiltcheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltcheck"))
        .args(args)
        .env_remove("TILTCHECK_FIELD")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes_follow_the_verdict() {
    let cases = [("ex1.alg", EX1, 0), ("ex2.alg", EX2, 1), ("a2.alg", A2, 2)];
    for (name, text, code) in cases {
        let p = write(name, text);
        let o = run(&["check", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(code), "{name}");
    }
    let bad = write("bad.alg", "vertices 1 2;\narrows a 1->2;\n");
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:"));
}

#[test]
fn json_report_is_deterministic() {
    let p = write("ex1-json.alg", EX1);
    let a = stdout(&run(&["check", p.to_str().unwrap(), "--json"]));
    let b = stdout(&run(&["check", p.to_str().unwrap(), "--json"]));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "tilted");
    assert_eq!(v["field"], "gf(32003)");
    assert_eq!(v["tau_omega_da"][0]["dim_vector"], serde_json::json!([0, 0, 1]));
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn field_override_from_environment() {
    let p = write("ex2-env.alg", EX2);
    let o = Command::new(env!("CARGO_BIN_EXE_tiltcheck"))
        .args(["check", p.to_str().unwrap(), "--json"])
        .env("TILTCHECK_FIELD", "rationals")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["field"], "rationals");
    assert_eq!(v["pd_of_tau_omega_da"], 2);
}

#[test]
fn eval_prints_module_data() {
    let p = write("ex1-eval.alg", EX1);
    let out = stdout(&run(&["eval", p.to_str().unwrap(), "--expr", "tau(omega(DA))"]));
    assert!(out.contains("dim vector: [0,0,1]"));
    assert!(out.contains("decomposition: S(3)=P(3)"));
    assert!(out.contains("pd: 0"));
    let o = run(&["eval", p.to_str().unwrap(), "--expr", "X(1)"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn auslander_of_round_trips_through_check() {
    let a2 = write("a2-aus.alg", A2);
    let text = stdout(&run(&["auslander-of", a2.to_str().unwrap(), "--strategy", "nakayama"]));
    assert!(text.contains("# dim 5"));
    let aus = write("aus-a2.alg", &text);
    assert_eq!(run(&["check", aus.to_str().unwrap()]).status.code(), Some(0));

    let ex1 = write("ex1-aus.alg", EX1);
    let text = stdout(&run(&["auslander-of", ex1.to_str().unwrap(), "--strategy", "bounded"]));
    let aus = write("aus-ex1.alg", &text);
    assert_eq!(run(&["check", aus.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn corpus_emits_one_record_per_instance() {
    let o = run(&["corpus", "--generator", "nakayama", "--count", "12", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 12);
    for line in out.lines() {
        let r: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(r["violations"], serde_json::json!([]));
    }
}
