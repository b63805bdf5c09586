mod common;

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use sha2::{Digest, Sha256};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gdgcat(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gdgcat")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn out_path(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn example() -> String {
    common::example_path().to_str().unwrap().to_string()
}

fn lines(s: &str) -> Vec<&str> {
    s.lines().map(str::trim).collect()
}

#[test]
fn h0_on_example() {
    let r = gdgcat(&["h0", &example()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let l = lines(&r.stdout);
    assert!(l.contains(&"dimension: 5"));
    assert!(l.contains(&"basis: e1 e2 e3 b c"));
    assert!(l.contains(&"b · c = 0"));
    assert!(l.contains(&"rule: bc -> 0"));
}

#[test]
fn orbit_a3_m2() {
    let r = gdgcat(&["orbit", "--type", "A", "--n", "3", "--m", "2", "--checks", "cy,tilting"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("objects: 15\n"));
    assert!(r.stdout.contains("0 violations"));
    assert!(r.stdout.contains("dim End(T): 6\n"));
}

#[test]
fn orbit_input_errors() {
    assert_eq!(gdgcat(&["orbit", "--type", "D", "--n", "4", "--m", "1"]).code, 3);
    assert_eq!(gdgcat(&["orbit", "--type", "A", "--n", "3", "--m", "0"]).code, 3);
    assert_eq!(gdgcat(&["orbit", "--type", "A", "--n", "3", "--m", "1", "--checks", "cy,bogus"]).code, 3);
}

#[test]
fn wrong_degree_potential_fails_check() {
    let f = scratch(
        "wrong.qp",
        "vertex 1; vertex 2; vertex 3;\narrow a : 1 -> 2 deg 0;\narrow b : 3 -> 1 deg 0;\narrow c : 2 -> 3 deg 0;\nn = 4;\npotential = a b c;\n",
    );
    let r = gdgcat(&["check", f.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("potential term abc has degree 0, expected -1"), "{}", r.stdout);
}

#[test]
fn parse_errors_carry_positions_and_exit_3() {
    let f = scratch("bad.qp", "vertex 1;\narrow a : 1 -> 9 deg 0;\nn = 3;\n");
    let r = gdgcat(&["check", f.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains(":2:"), "{}", r.stderr);
    assert_eq!(gdgcat(&["check", "/nonexistent/file.qp"]).code, 3);
}

#[test]
fn argument_errors_exit_3_and_help_exits_0() {
    assert_eq!(gdgcat(&["frobnicate"]).code, 3);
    assert_eq!(gdgcat(&["h0", &example(), "--max-steps", "many"]).code, 3);
    assert_eq!(gdgcat(&[]).code, 3);
    let h = gdgcat(&["--help"]);
    assert_eq!(h.code, 0);
    assert!(h.stdout.contains("orbit"));
    assert_eq!(gdgcat(&["--version"]).code, 0);
}

#[test]
fn free_loop_is_infinite() {
    let f = scratch("loop.qp", "vertex x;\narrow l : x -> x deg 0;\nn = 3;\npotential = 0;\n");
    let r = gdgcat(&["h0", f.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("witness cycle: l"));
}

#[test]
fn exhausted_bounds_are_undetermined() {
    let f = scratch(
        "hard.qp",
        "vertex 1;\narrow x0 : 1 -> 1 deg 0;\narrow x1 : 1 -> 1 deg 0;\narrow x2 : 1 -> 1 deg 0;\nn = 3;\n\
         potential = 3 x2 x2 x2 x1 - 3 x1 x0 x0 x0 - 3 x1 x0 x2 x0;\n",
    );
    let r = gdgcat(&["h0", f.to_str().unwrap(), "--max-steps", "5"]);
    assert_eq!(r.code, 2, "{}", r.stdout);
    assert!(r.stdout.contains("H0: undetermined"));
}

#[test]
fn arrows_outside_scope_are_input_errors() {
    let f = scratch("scope.qp", "vertex 1; vertex 2;\narrow a : 1 -> 2 deg -3;\nn = 4;\npotential = 0;\n");
    let r = gdgcat(&["h0", f.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("outside"));
}

#[test]
fn json_report_fields() {
    let f = scratch(
        "half.qp",
        "vertex 1; vertex 2; vertex 3;\narrow a : 1 -> 2 deg -1;\narrow b : 3 -> 1 deg 0;\narrow c : 2 -> 3 deg 0;\nn = 4;\npotential = 1/2 a b c;\n",
    );
    let out = out_path("half.json");
    let r = gdgcat(&["report", f.to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let text = std::fs::read_to_string(&out).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "report");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    let digest: String = Sha256::digest(std::fs::read(&f).unwrap()).iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(v["input_sha256"], digest.as_str());
    assert_eq!(v["bounds"]["max_steps"], 10000);
    assert_eq!(v["flags"]["diagrammatic"], false);
    assert_eq!(v["verdicts"]["h0"]["dimension"], 5);
    let gens = v["verdicts"]["gamma"]["generators"].as_array().unwrap();
    let astar = gens.iter().find(|g| g["name"] == "a^*").unwrap();
    assert_eq!(astar["d"][0]["coefficient"], "1/2");
    // keys are emitted in sorted order
    let top: Vec<&str> = ["\"bounds\"", "\"command\"", "\"flags\"", "\"input_sha256\"", "\"schema\"", "\"verdicts\"", "\"version\""]
        .into_iter()
        .collect();
    let positions: Vec<usize> = top.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn report_requires_json() {
    assert_eq!(gdgcat(&["report", &example()]).code, 3);
}

#[test]
fn option_statements_and_flags_set_bounds() {
    let body = std::fs::read_to_string(common::example_path()).unwrap();
    let f = scratch("opts.qp", &format!("{body}option max_steps = 7;\noption max_basis = 50;\n"));
    let out = out_path("opts.json");
    let r = gdgcat(&["h0", f.to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["bounds"]["max_steps"], 7);
    assert_eq!(v["bounds"]["max_basis"], 50);
    let r = gdgcat(&["h0", f.to_str().unwrap(), "--max-steps", "9", "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["bounds"]["max_steps"], 9);
    assert_eq!(v["bounds"]["max_basis"], 50);
}

#[test]
fn diagrammatic_words_are_reversed() {
    let f = scratch(
        "diag.qp",
        "vertex 1; vertex 2; vertex 3;\narrow a : 1 -> 2 deg -1;\narrow b : 3 -> 1 deg 0;\narrow c : 2 -> 3 deg 0;\nn = 4;\npotential = c b a;\n",
    );
    let diag = gdgcat(&["gamma", f.to_str().unwrap(), "--diagrammatic"]);
    let plain = gdgcat(&["gamma", &example()]);
    assert_eq!(diag.code, 0);
    assert_eq!(diag.stdout, plain.stdout);
}

#[test]
fn reruns_are_byte_identical() {
    let (a, b) = (out_path("det-a.json"), out_path("det-b.json"));
    for args in [vec!["report", example().leak()], vec!["gamma", example().leak()]] {
        let mut x = args.clone();
        x.extend(["--json", a.to_str().unwrap()]);
        let mut y = args.clone();
        y.extend(["--json", b.to_str().unwrap()]);
        let (rx, ry) = (gdgcat(&x), gdgcat(&y));
        assert_eq!(rx.stdout, ry.stdout);
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
}

#[test]
fn in_process_runner_matches_binary() {
    let inv = gdgcat::frontend::cli::run(["gdgcat", "h0", &example()]);
    let bin = gdgcat(&["h0", &example()]);
    assert_eq!(inv.exit_code(), bin.code);
    assert_eq!(inv.stdout, bin.stdout);
}
