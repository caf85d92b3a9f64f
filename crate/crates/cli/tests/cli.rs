use std::path::PathBuf;

use recur_cli::run;

fn fx(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

#[test]
fn unknown_verb_exits_2() {
    let o = run(["frobnicate"]);
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty());
}

#[test]
fn help_exits_0() {
    let o = run(["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("certify-free"));
}

#[test]
fn missing_file_exits_2() {
    let o = run(["validate", "/nonexistent/x.cx"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.starts_with("error: /nonexistent/x.cx"));
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.cx");
    std::fs::write(&p, "{\n  \"vertices\": [,]\n}\n").unwrap();
    let o = run(["validate", p.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("bad.cx:2:"), "{}", o.stderr);
}

#[test]
fn json_report_has_digest_and_verdicts() {
    let o = run(["--json", "recurrence", &fx("barycentric-triangle.cx"), "--assert-simply-connected"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["command"], "recurrence");
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert!(verdicts.len() >= 5);
    assert!(verdicts.iter().all(|x| x["pass"] == true));
}

#[test]
fn digest_is_stable() {
    let a = run(["--json", "validate", &fx("pillow.cx")]);
    let b = run(["--json", "validate", &fx("pillow.cx")]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn failing_verdict_exits_1() {
    let o = run(["certify-free", &fx("pillow.cx")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("[FAIL]"));
    let o = run(["sc-check", &fx("b6-violator.pres"), "--condition", "B6"]);
    assert_eq!(o.code, 1);
}

#[test]
fn dot_exports_are_digraphs() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.dot");
    let o = run(["markov", &fx("pillow.cx"), "--dot", m.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(std::fs::read_to_string(&m).unwrap().starts_with("digraph"));
    let s = dir.path().join("s.dot");
    let o = run(["diagram", "strips", &fx("grid-3x3.dg"), "--dot", s.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    let text = std::fs::read_to_string(&s).unwrap();
    assert!(text.contains("graph") && text.trim_end().ends_with('}'));
}

#[test]
fn certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    let book = fx("three-page-book.cx");
    assert_eq!(run(["certify-free", &book, "-o", c.to_str().unwrap()]).code, 0);
    assert_eq!(run(["verify-cert", &book, c.to_str().unwrap()]).code, 0);
    assert_eq!(run(["certify-free", &book, "--verify", c.to_str().unwrap()]).code, 0);
}

#[test]
fn subdivided_output_validates() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.cx");
    assert_eq!(run(["subdivide", &fx("torus8.cx"), "-o", out.to_str().unwrap()]).code, 0);
    let o = run(["validate", out.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}", o.stdout);
}

#[test]
fn inline_graph_specs() {
    assert_eq!(run(["artin", "word", "edge:4", "ababABAB"]).code, 0);
    assert_eq!(run(["artin", "wall-probe", "path:3", "--radius", "4"]).code, 0);
    assert_eq!(run(["artin", "classify", "triangle:4,4,5"]).code, 0);
    assert_eq!(run(["artin", "classify", "nonsense:1"]).code, 2);
}
