use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn unsharp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unsharp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_fixture(head: &[&str], name: &str, tail: &[&str]) -> Output {
    let path = fixture(name);
    let mut args: Vec<&str> = head.to_vec();
    args.push(path.to_str().unwrap());
    args.extend_from_slice(tail);
    unsharp(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn ds_verify_accepts_d_e_1() {
    let o = with_fixture(&["ds", "verify"], "p4.json", &["--system", "d,e,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("deductive system: yes"));
}

#[test]
fn ds_verify_rejects_with_witness() {
    let o = with_fixture(&["--json", "ds", "verify"], "p4.json", &["--system", "c,1"]);
    assert_eq!(o.status.code(), Some(1));
    let line: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(line["pass"], false);
    assert!(line["witness"]["elements"].is_array());
}

#[test]
fn strong_antitone_probe_fails_with_c_f() {
    let o = with_fixture(&["laws"], "p2.json", &["--suite", "neg-antitone-leq"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(c,f)"), "{}", stdout(&o));

    let o = with_fixture(
        &["--json", "laws"],
        "p2.json",
        &["--suite", "neg-antitone-leq"],
    );
    assert_eq!(o.status.code(), Some(1));
    let line: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let witnesses = line["counterexamples"].as_array().unwrap();
    assert!(witnesses
        .iter()
        .any(|w| w["elements"] == serde_json::json!(["c", "f"])));
}

#[test]
fn cycle_is_a_usage_error() {
    let o = with_fixture(&["validate"], "cycle.json", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cycle"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn missing_file_and_bad_arguments_exit_2() {
    assert_eq!(
        unsharp(&["validate", "/nonexistent.json"]).status.code(),
        Some(2)
    );
    assert_eq!(unsharp(&["sweep"]).status.code(), Some(2));
    assert_eq!(unsharp(&["sweep", "--all", "7"]).status.code(), Some(2));
    let o = with_fixture(&["table"], "p1.json", &["--op", "xor"]);
    assert_eq!(o.status.code(), Some(2));
    let o = with_fixture(&["ds", "verify"], "p4.json", &["--system", "d,q"]);
    assert_eq!(o.status.code(), Some(2));
    let o = with_fixture(&["laws"], "p1.json", &["--suite", "no-such-law"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_reports_shape() {
    let o = with_fixture(&["validate"], "p1.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "valid bounded poset: 8 elements, 13 covers, bottom 0, top 1\n"
    );
}

#[test]
fn negation_table_matches_golden() {
    let o = with_fixture(&["table"], "p1.json", &["--op", "neg"]);
    assert_eq!(stdout(&o), "x: 0 a b c d e f 1\nx⁰: 1 f ac d c 0 a 0\n");
}

#[test]
fn implication_table_matches_golden() {
    let o = with_fixture(&["table"], "p4.json", &["--op", "imp"]);
    let expected = "\
→ 0 a b c d e 1
0 1 1 1 1 1 1 1
a b 1 b 1 1 1 1
b c c 1 c 1 1 1
c b e b 1 1 e 1
d 0 a b c 1 e 1
e 0 c b c d 1 1
1 0 a b c d e 1
";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn json_table_rows() {
    let o = with_fixture(&["--json", "table"], "p3.json", &["--op", "conj"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["table"][4][5], "ab");
}

#[test]
fn human_and_json_verdicts_agree() {
    for (file, suite) in [
        ("p1.json", "all"),
        ("p2.json", "all"),
        ("p3.json", "implication"),
        ("diamond.json", "theorems"),
    ] {
        let human = with_fixture(&["laws"], file, &["--suite", suite]);
        let json = with_fixture(&["--json", "laws"], file, &["--suite", suite]);
        assert_eq!(human.status.code(), json.status.code(), "{file}");
        let human_verdicts: Vec<bool> = stdout(&human)
            .lines()
            .filter(|l| !l.starts_with(' '))
            .map(|l| l.starts_with("pass"))
            .collect();
        let json_verdicts: Vec<bool> = stdout(&json)
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["pass"] == true)
            .collect();
        assert_eq!(human_verdicts, json_verdicts, "{file}");
    }
}

#[test]
fn theorem_suite_passes_on_fixtures() {
    for file in ["p1.json", "p2.json", "p3.json", "p4.json", "diamond.json"] {
        let o = with_fixture(&["laws"], file, &[]);
        assert_eq!(o.status.code(), Some(0), "{file}: {}", stdout(&o));
    }
}

#[test]
fn theta_prints_classes() {
    let o = with_fixture(&["theta"], "p4.json", &["--system", "d,e,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("Θ(D) ∩ P² classes: {0} {ac} {b} {de1}"),
        "{}",
        stdout(&o)
    );
    let o = with_fixture(&["theta"], "p4.json", &["--system", "c,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn ds_search_lists_systems() {
    let o = with_fixture(&["ds", "search"], "p4.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "{1}"));
    assert!(out.lines().any(|l| l == "{d, e, 1}"));
    let o = with_fixture(&["ds", "search"], "p1.json", &["--cap", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweeps() {
    let o = unsharp(&["sweep", "--all", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("36 poset(s), 31 law(s), 0 failure(s)\n"));

    let o = unsharp(&[
        "--json", "sweep", "--random", "8", "--seeds", "5", "--prob", "0.4", "--laws", "adjoint",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let last: serde_json::Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    assert_eq!(last["posets"], 5);
    assert_eq!(last["pass"], true);

    // Probe failures make the sweep exit 1, each with a loadable poset.
    let o = unsharp(&["--json", "sweep", "--all", "5", "--laws", "probes"]);
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let summary = lines.last().unwrap();
    let failures = summary["failures"].as_u64().unwrap();
    assert_eq!(o.status.code(), Some(if failures == 0 { 0 } else { 1 }));
    assert_eq!(lines.len() as u64, failures + 1);
}

#[test]
fn dot_export() {
    let o = with_fixture(&["export-dot"], "p4.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("digraph poset {"));
    assert_eq!(out.matches("->").count(), 9);
    assert!(out.contains("\"c\" -> \"d\""));
}
