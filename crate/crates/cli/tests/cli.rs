use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_colorconn"))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_code(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"].as_str().unwrap().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

#[test]
fn exact_on_two_color_fixture() {
    let out = run(&["exact", "--input", &data("fix_a.cdp"), "--source", "0", "--target", "1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["algorithm"], "exact");
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["paths"].as_array().unwrap().len(), 2);
    assert!(v["elapsed_ms"].is_null());
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn lcdp3_uses_default_query_line() {
    let out = run(&["lcdp3", "--input", &data("fix_c.cdp")]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["params"]["max_len"], "3");
}

#[test]
fn length_bound_changes_the_answer() {
    let two = json(&run(&["oracle", "--input", &data("fix_c.cdp"), "--max-len", "2"]));
    assert_eq!(two["kappa"], 1);
    let lcdp = json(&run(&["lcdp3", "--input", &data("fix_c.cdp"), "--max-len", "2"]));
    assert_eq!(lcdp["kappa"], 1);
}

#[test]
fn generated_tight_graph_round_trips_through_exact() {
    let file = scratch("t3.cdp");
    let gen = run(&["gen", "--family", "tight", "--colors", "3", "--out", file.to_str().unwrap()]);
    assert!(gen.status.success());
    let v = json(&run(&["exact", "--input", file.to_str().unwrap()]));
    assert_eq!(v["kappa"], 3);
    let g = json(&run(&["greedy", "--input", file.to_str().unwrap()]));
    assert!(g["kappa"].as_u64().unwrap() >= 1);
}

#[test]
fn sat_families() {
    let cdp = scratch("xor-cdp.cdp");
    assert!(run(&["gen", "--family", "sat-cdp", "--cnf", &data("xor.cnf"), "--out", cdp.to_str().unwrap()])
        .status
        .success());
    assert_eq!(json(&run(&["exact", "--input", cdp.to_str().unwrap()]))["kappa"], 2);

    let unsat = scratch("contra-cdp.cdp");
    assert!(run(&[
        "gen",
        "--family",
        "sat-cdp",
        "--cnf",
        &data("contradiction.cnf"),
        "--out",
        unsat.to_str().unwrap()
    ])
    .status
    .success());
    assert!(json(&run(&["exact", "--input", unsat.to_str().unwrap()]))["kappa"].as_u64().unwrap() <= 1);

    let l4 = scratch("xor-l4.cdp");
    assert!(run(&["gen", "--family", "sat-lcdp4", "--cnf", &data("xor.cnf"), "--out", l4.to_str().unwrap()])
        .status
        .success());
    assert_eq!(json(&run(&["oracle", "--input", l4.to_str().unwrap(), "--max-len", "4"]))["kappa"], 4);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for algo in ["exact", "greedy", "lcdp3", "lcdp4", "lsearch", "oracle"] {
        let args = ["--input", &data("fix_c.cdp")];
        let a = run(&[&[algo][..], &args[..]].concat());
        let b = run(&[&[algo][..], &args[..]].concat());
        assert!(a.status.success(), "{algo}");
        assert_eq!(a.stdout, b.stdout, "{algo}");
    }
}

#[test]
fn timing_is_opt_in() {
    let v = json(&run(&["lcdp4", "--input", &data("fix_a.cdp"), "--source", "0", "--target", "1", "--timing"]));
    assert!(v["elapsed_ms"].as_f64().unwrap() >= 0.0);
}

#[test]
fn text_format_and_out_file() {
    let file = scratch("report.txt");
    let out = run(&["greedy", "--input", &data("fix_c.cdp"), "--format", "text", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(file).unwrap();
    assert!(text.contains("kappa 2"));
    assert!(text.lines().any(|l| l.starts_with("path 1 0 ")));
}

#[test]
fn lsearch_parameters() {
    let base = ["lsearch", "--input", &data("fix_c.cdp")];
    let eps = json(&run(&[&base[..], &["--eps", "0.25"]].concat()));
    assert_eq!(eps["params"]["eps"], "1/4");
    assert_eq!(eps["kappa"], 2);
    let swap = json(&run(&[&base[..], &["--swap", "2", "--max-len", "3"]].concat()));
    assert_eq!(swap["params"]["swap"], "2");
    assert_eq!(swap["params"]["max_len"], "3");
    assert_eq!(error_code(&run(&[&base[..], &["--eps", "nope"]].concat())), "usage");
}

#[test]
fn exit_codes() {
    let usage = run(&["exact"]);
    assert_eq!(usage.status.code(), Some(2));
    assert_eq!(error_code(&usage), "usage");

    let no_query = run(&["exact", "--input", &data("fix_a.cdp")]);
    assert_eq!(no_query.status.code(), Some(2));

    let missing = run(&["exact", "--input", "/nonexistent/graph.cdp", "--source", "0", "--target", "1"]);
    assert_eq!(missing.status.code(), Some(3));
    assert_eq!(error_code(&missing), "parse");

    let broken = scratch("broken.cdp");
    std::fs::write(&broken, "p cdp 3 1\ne 0 9 1\n").unwrap();
    let parse = run(&["exact", "--input", broken.to_str().unwrap(), "--source", "0", "--target", "1"]);
    assert_eq!(parse.status.code(), Some(3));

    let refusal = run(&["exact", "--input", &data("fix_c.cdp"), "--budget", "0", "--no-pin"]);
    assert_eq!(refusal.status.code(), Some(4));
    assert_eq!(error_code(&refusal), "refusal");

    let bound = run(&["exact", "--input", &data("fix_c.cdp"), "--max-len", "3"]);
    assert_eq!(bound.status.code(), Some(4));
}

#[test]
fn verify_exact_passes() {
    let out = run(&["verify", "--algo", "exact", "--n-max", "9", "--trials", "300"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["trials"], 300);
    assert!(v["mismatches"].as_array().unwrap().is_empty());
}

#[test]
fn bench_reports_timings() {
    let out = run(&["bench", "--algo", "lcdp4", "--nodes", "2000", "--edges-per-color", "6000", "--repeat", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["runs_ms"].as_array().unwrap().len(), 2);
    assert_eq!(v["nodes"], 2000);
}
