use dlcalc::cli::{run_command, CommandOutput, EXIT_OK, EXIT_REFUTED, EXIT_TRUNCATED, EXIT_USAGE};
use serde_json::Value;

fn dl(args: &[&str]) -> CommandOutput {
    run_command(std::iter::once("dl").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    let out = dl(&v);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn degree_of_theta() {
    let out = dl(&["-p", "3", "degree", "bP_1/2 bP_1 x"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), "10");
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32); 6] = [
        (&["-p", "3", "--weight-bound", "27", "--excess-bound", "40", "nilpotent", "--class", "bP_1/2 bP_1 x"], EXIT_OK),
        (&["verify-decomp", "--k", "1", "--n", "2", "--t", "1"], EXIT_OK),
        (&["verify-decomp", "--k", "1", "--n", "2", "--t", "1", "--convention", "literal"], EXIT_REFUTED),
        (&["-p", "3", "check-lemma", "mixed-term", "--n", "2"], EXIT_TRUNCATED),
        (&["bogus"], EXIT_USAGE),
        (&["-p", "4", "degree", "x"], EXIT_USAGE),
    ];
    for (args, code) in cases {
        let out = dl(args);
        assert_eq!(out.code, code, "{args:?}: {}{}", out.stdout, out.stderr);
    }
}

#[test]
fn help_is_not_an_error() {
    let out = dl(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verify-decomp"));
}

#[test]
fn errors_go_to_stderr() {
    let out = dl(&["-p", "3", "degree", "Q_1 x"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn json_and_text_agree_on_expansion() {
    let args = ["-p", "3", "expand", "v * w", "--seq", "P_1"];
    let text = dl(&args).stdout;
    let v = json(&args);
    assert_eq!(text.trim(), v["text"].as_str().unwrap());
    assert_eq!(v["value"]["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn json_and_text_agree_on_basis() {
    let args = ["basis", "--k", "2", "--t", "1", "--weight-bound", "8"];
    let text = dl(&args).stdout;
    let v = json(&args);
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), text.lines().count());
    for (g, line) in gens.iter().zip(text.lines()) {
        assert!(line.starts_with(g["class"].as_str().unwrap()));
    }
}

#[test]
fn series_falls_back_to_a_default_window() {
    let v = json(&["-p", "3", "series", "--weight-bound", "3"]);
    assert_eq!(v["W"], 3);
    assert!(v["E"].as_i64().unwrap() > 0);
}

#[test]
fn decomposition_report() {
    let v = json(&["verify-decomp", "--k", "1", "--n", "2", "--t", "1", "--convention", "literal"]);
    assert_eq!(v["match"], false);
    assert_eq!(v["first_mismatch"], serde_json::json!([2, 3]));
}

#[test]
fn nilpotence_report() {
    let v = json(&["-p", "3", "--weight-bound", "27", "--excess-bound", "40", "nilpotent", "--class", "P_1 x"]);
    assert_eq!(v["result"], "nilpotent");
    assert_eq!(v["exponent"], 3);
    assert_eq!(v["status"], "verified");
}

#[test]
fn lemma_checks() {
    let v = json(&["check-lemma", "qnilpotent", "--seq", "Q_1 Q_2", "--n", "1", "--t", "1"]);
    assert_eq!(v["status"], "verified");
    let v = json(&["-p", "5", "check-lemma", "p-power", "--index", "5", "--bockstein"]);
    assert_eq!(v["status"], "verified");
    assert_eq!(v["lhs"], "0");
}
