use std::path::Path;
use std::process::{Command, Output};

use asymfit::cli::run_with;

fn asymfit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asymfit"))
        .args(args)
        .env_remove("ASYMFIT_PRECISION")
        .output()
        .expect("binary runs")
}

fn in_process(args: &[&str], env: Option<&str>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("asymfit").chain(args.iter().copied());
    let code = run_with(argv, env, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn report_output_is_byte_identical_across_runs() {
    for format in ["text", "csv", "json"] {
        let args = ["report", "--series", "builtin:d1", "--format", format];
        let a = asymfit(&args);
        let b = asymfit(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn report_text_has_the_table_rows() {
    let out = asymfit(&["report", "--series", "builtin:d1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# precision=25 evaluator=exponential r=6\n"), "{text}");
    for (label, value) in [("k_-1", "1.3863"), ("k_0", "-1.5000"), ("k_1", "-0.12500"), ("c_0", "4")] {
        let line = text
            .lines()
            .find(|l| l.split_whitespace().next() == Some(label))
            .unwrap_or_else(|| panic!("missing {label} in\n{text}"));
        assert!(line.split_whitespace().nth(1).unwrap().starts_with(value), "{line}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(asymfit(&["report", "--series", "builtin:d1"]).status.code(), Some(0));
    assert_eq!(asymfit(&["report", "--series", "builtin:d1", "--nmax", "0"]).status.code(), Some(2));
    assert_eq!(asymfit(&["report", "--series", "d1"]).status.code(), Some(2));
    assert_eq!(asymfit(&["report", "--series", "builtin:d1", "--precision", "5"]).status.code(), Some(2));
    assert_eq!(asymfit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(asymfit(&["--help"]).status.code(), Some(0));
    assert_eq!(asymfit(&["report", "--series", "file:/nonexistent/x.series"]).status.code(), Some(1));
}

#[test]
fn check_fails_when_the_bound_is_missed() {
    // a degree-1 fit ending at 14 cannot extrapolate to 20 within 1e-6
    let out = asymfit(&["check", "--series", "builtin:d1", "--r", "1", "--nmax", "14", "--epsilon", "1e-6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("fail"));
    let ok = asymfit(&["check", "--series", "builtin:d1", "--epsilon", "1e-20"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn sign_violations_are_data_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.series");
    std::fs::write(&path, "name=bad\nsign=alternating\n1 1\n2 3\n3 5\n").unwrap();
    let arg = format!("file:{}", path.display());
    let (code, _, err) = in_process(&["fit", "--series", &arg, "--r", "1"], None);
    assert_eq!(code, 1);
    assert!(err.contains("2"), "{err}");
}

#[test]
fn gen_file_round_trips_through_report_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("d1.series");
    let gen = asymfit(&["gen", "--series", "builtin:d1", "--out", series.to_str().unwrap()]);
    assert!(gen.status.success());
    assert!(gen.stdout.is_empty());

    let from_file = format!("file:{}", series.display());
    let report_path = dir.path().join("report.csv");
    let out = asymfit(&["report", "--series", &from_file, "--format", "csv", "--out", report_path.to_str().unwrap()]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&report_path).unwrap();
    let direct = asymfit(&["report", "--series", "builtin:d1", "--format", "csv"]);
    assert_eq!(written.as_bytes(), direct.stdout.as_slice());
    assert!(Path::new(&report_path).exists());
}

#[test]
fn precision_comes_from_flag_then_environment() {
    let (_, out, _) = in_process(&["report", "--series", "builtin:d1"], Some("40"));
    assert!(out.starts_with("# precision=40 "), "{out}");
    let (_, out, _) = in_process(&["report", "--series", "builtin:d1", "--precision", "30"], Some("40"));
    assert!(out.starts_with("# precision=30 "), "{out}");
    let (_, out, _) = in_process(&["report", "--series", "builtin:d1"], None);
    assert!(out.starts_with("# precision=25 "), "{out}");
    let (code, _, _) = in_process(&["report", "--series", "builtin:d1"], Some("abc"));
    assert_eq!(code, 2);
}

#[test]
fn json_report_parses_back() {
    let out = asymfit(&["report", "--series", "builtin:d1", "--format", "json"]);
    let doc = asymfit::cli::parse_report_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(doc.precision, 25);
    assert_eq!(doc.reports.len(), 1);
    assert_eq!(doc.reports[0].report.nmax, 20);
}

#[test]
fn compare_needs_two_series() {
    assert_eq!(asymfit(&["compare", "--series", "builtin:d1"]).status.code(), Some(2));
    let out = asymfit(&["compare", "--series", "builtin:d1", "--series", "builtin:d1", "--format", "csv"]);
    assert!(out.status.success());
}

#[test]
fn scan_lists_each_degree() {
    let out = asymfit(&["scan", "--series", "builtin:d1", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("3.9947"), "{text}");
    assert_eq!(asymfit(&["report", "--series", "builtin:d1", "--r", "1,2"]).status.code(), Some(2));
}
