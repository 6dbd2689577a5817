use std::io::Write;
use std::process::{Command, Stdio};

fn invar(args: &[&str], stdin: &str) -> (String, String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_invar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn invar");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap(), out.status.code().unwrap())
}

fn corpus(args: &[&str]) -> String {
    let mut full = vec!["corpus"];
    full.extend_from_slice(args);
    let (out, err, code) = invar(&full, "");
    assert_eq!(code, 0, "{err}");
    out
}

fn value<'a>(report: &'a str, key: &str) -> Option<&'a str> {
    report.lines().find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
}

#[test]
fn jouanolou_is_invariant() {
    let file = corpus(&["jouanolou", "--d", "4", "--p", "2"]);
    let (out, _, code) = invar(&["check-invariance"], &file);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "verdict"), Some("invariant"));
    assert_eq!(value(&out, "field_degree"), Some("2"));
}

#[test]
fn non_invariant_field_exits_one() {
    let file = "char 0\nring t0..t2\nideal L = t0\nfield X = [1, 0, 0]\n";
    let (out, _, code) = invar(&["check-invariance"], file);
    assert_eq!(code, 1);
    assert_eq!(value(&out, "verdict"), Some("not invariant"));
}

#[test]
fn unsaturated_ideal_reports_raw_failure() {
    let file = "char 0\nring t0..t3\nideal I = t0^2, t0*t1, t0*t2, t0*t3\nfield D = [0, 1, 0, 0]\n";
    let (out, _, code) = invar(&["check-invariance", "--ideal", "I", "--vfield", "D"], file);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "raw_generator_test"), Some("fail"));
    assert_eq!(value(&out, "saturation_changed"), Some("true"));
}

#[test]
fn ccf_regularity_is_five() {
    let file = corpus(&["ccf", "--d", "5"]);
    let (out, _, code) = invar(&["regularity", "--seed", "3"], &file);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "regularity"), Some("5"));
    assert_eq!(value(&out, "seed"), Some("3"));
}

#[test]
fn regularity_of_non_acm_curve_is_not_applicable() {
    let file = corpus(&["rational_curve", "--d", "4"]);
    let (out, _, code) = invar(&["regularity"], &file);
    assert_eq!(code, 2);
    assert_eq!(value(&out, "acm"), Some("false"));
    let (out, _, code) = invar(&["acm"], &file);
    assert_eq!(code, 1);
    assert_eq!(value(&out, "witness"), Some("verified"));
}

#[test]
fn twisted_cubic_projection_certificate() {
    let file = corpus(&["twisted_cubic"]);
    let (out, _, code) = invar(&["project", "--center-dim", "0", "--seed", "0"], &file);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "projected_degree"), Some("2"));
    assert_eq!(value(&out, "invariance"), Some("verified"));
    assert_eq!(value(&out, "certificate"), Some("verified"));
}

#[test]
fn reports_are_deterministic() {
    let file = corpus(&["twisted_cubic"]);
    let a = invar(&["project", "--seed", "5"], &file);
    let b = invar(&["project", "--seed", "5"], &file);
    assert_eq!(a, b);
}

#[test]
fn bound_exit_codes() {
    let (out, _, code) = invar(&["bounds", "--theorem", "18"], &corpus(&["twisted_cubic"]));
    assert_eq!(code, 0);
    assert_eq!(value(&out, "values"), Some("3 <= 4"));
    let (out, _, code) = invar(&["bounds", "--theorem", "18"], &corpus(&["ccf", "--d", "4"]));
    assert_eq!(code, 2);
    assert!(out.contains("hypothesis nodal: failed"), "{out}");
    let (_, _, code) = invar(&["bounds", "--theorem", "2"], &corpus(&["complete_intersection", "--degrees", "2,2"]));
    assert_eq!(code, 0);
    let (_, _, code) = invar(&["bounds", "--theorem", "1star"], &corpus(&["fermat", "--d", "4", "--n", "3", "--p", "3"]));
    assert_eq!(code, 3);
}

#[test]
fn surface_bound_on_a_quadric() {
    let file = "char 0\nring t0..t3\nideal C = t1*t2 - t0*t3, t1^2 - t0*t2, t2^2 - t1*t3\nideal Z = t1*t2 - t0*t3\nfield X = [3*t0, t1, -t2, -3*t3]\n";
    let (out, err, code) = invar(&["bounds", "--theorem", "3", "--ideal", "C", "--surface", "Z", "--hyperplane", "t1^2 - t0*t2"], file);
    assert_eq!(code, 0, "{err}");
    assert_eq!(value(&out, "theorem"), Some("3"));
    assert_eq!(value(&out, "values"), Some("3 <= 4"));
}

#[test]
fn q_invariants() {
    for (f, q) in [("t0^4 + t1^4 + t2^4", "3"), ("t0*t1^2 + t1^3", "0"), ("t0*t1^2 - t2^3", "1")] {
        let (out, _, code) = invar(&["q-invariant", "--poly", f], "");
        assert_eq!(code, 0);
        assert_eq!(value(&out, "q"), Some(q), "{f}");
    }
    let (out, _, _) = invar(&["q-invariant", "-i", "-", "--poly", "I"], &corpus(&["cone"]));
    assert_eq!(value(&out, "q"), Some("0"));
}

#[test]
fn singular_scheme_of_cuspidal_field() {
    let (out, _, code) = invar(&["singular-scheme"], &corpus(&["cuspidal"]));
    assert_eq!(code, 0);
    assert_eq!(value(&out, "dimension"), Some("0"));
    let (_, _, code) = invar(&["singular-scheme"], "char 0\nring t0..t2\nfield R = [t0, t1, t2]\n");
    assert_eq!(code, 2);
}

#[test]
fn input_errors_exit_three() {
    let (_, err, code) = invar(&["acm"], "char 0\nring t0..t3\nfield X = [t0, t1]\n");
    assert_eq!(code, 3);
    assert!(err.contains("line 3"), "{err}");
    let (_, err, code) = invar(&["acm"], "char 2\nring t0..t2\nideal I = 1/2*t0\n");
    assert_eq!(code, 3, "{err}");
    let (_, _, code) = invar(&["acm", "--frobnicate"], "");
    assert_eq!(code, 3);
    let (_, _, code) = invar(&["corpus", "klein"], "");
    assert_eq!(code, 3);
    let (_, _, code) = invar(&["acm", "--ideal", "missing"], "char 0\nring t0..t2\nideal I = t0\n");
    assert_eq!(code, 3);
}

#[test]
fn corpus_output_round_trips() {
    let file = corpus(&["complete_intersection", "--degrees", "2,3"]);
    let (out, _, code) = invar(&["check-invariance"], &file);
    assert_eq!(code, 0, "{out}");
    assert!(file.contains("label family = complete_intersection"));
}
