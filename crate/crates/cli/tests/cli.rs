use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_truemper"));
    cmd.env_remove("TRUEMPER_THREADS");
    cmd
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("truemper-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const K23_EDGELIST: &str = "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n";

#[test]
fn detect_reports_theta_on_k23() {
    let path = write_temp("k23", K23_EDGELIST);
    let v = json(&run(&["detect", path.to_str().unwrap()]));
    assert_eq!(v["schema"], "truemper/detect/1");
    assert_eq!(v["contains_k23"], true);
    assert_eq!(v["stage"], "theta");
    assert_eq!(v["witness"]["kind"], "theta");
    assert!(v["model"]["x_u"].is_array());
    assert!(v.get("precondition_violation").is_none());
    let stages: Vec<&str> = v["timings_ms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["stage"].as_str().unwrap())
        .collect();
    assert_eq!(stages, ["pyramid", "theta"]);
}

#[test]
fn detect_reports_none_on_cycles() {
    let edges: String = (0..10).map(|i| format!("{i} {}\n", (i + 1) % 10)).collect();
    let v = json(&run_stdin(&["detect", "-"], &format!("10 10\n{edges}")));
    assert_eq!(v["contains_k23"], false);
    assert_eq!(v["stage"], "none");
    assert!(v.get("witness").is_none());
    assert!(v.get("model").is_none());
}

#[test]
fn detect_flags_suppress_witness_and_model() {
    let path = write_temp("k23-flags", K23_EDGELIST);
    let p = path.to_str().unwrap();
    let v = json(&run(&["detect", p, "--witness", "false", "--model", "false"]));
    assert_eq!(v["contains_k23"], true);
    assert!(v.get("witness").is_none());
    assert!(v.get("model").is_none());
    let v = json(&run(&["detect", p, "--witness", "--model", "false"]));
    assert!(v.get("witness").is_some());
    assert!(v.get("model").is_none());
}

#[test]
fn detect_single_stage_on_cube_finds_the_wheel() {
    let cube = json(&run_stdin(
        &["detect", "-", "--stage", "broken-wheel"],
        &gen_text(&["gen", "cube"]),
    ));
    assert_eq!(cube["contains_k23"], true);
    assert_eq!(cube["stage"], "broken-wheel");
    assert!(cube.get("precondition_violation").is_none());
}

#[test]
fn detect_single_stage_reports_precondition_violations() {
    let path = write_temp("k23-stage", K23_EDGELIST);
    let v = json(&run(&[
        "detect",
        path.to_str().unwrap(),
        "--stage",
        "broken-wheel",
    ]));
    assert_eq!(v["contains_k23"], true);
    assert_eq!(v["stage"], "theta");
    assert_eq!(v["precondition_violation"], "theta present");
    assert_eq!(v["witness"]["kind"], "theta");
}

#[test]
fn detect_single_stage_negative_on_short_prism() {
    let v = json(&run_stdin(
        &["detect", "-", "--stage", "long-prism"],
        &gen_text(&["gen", "prism", "1", "1", "1"]),
    ));
    assert_eq!(v["contains_k23"], false);
    assert_eq!(v["stage"], "none");
    assert!(v.get("precondition_violation").is_none());
}

#[test]
fn detect_rejects_malformed_input_with_exit_3() {
    let path = write_temp("bad", "3 1\n0 0\n");
    let out = run(&["detect", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));

    let out = run(&["detect", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["detect"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["gen", "heptagram"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["gen", "theta", "2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["gen", "theta", "1", "2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["xcheck", "--n", "6", "--count", "many"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_methods_and_size_guard() {
    let path = write_temp("k23-oracle", K23_EDGELIST);
    let v = json(&run(&[
        "oracle",
        path.to_str().unwrap(),
        "--method",
        "separators",
    ]));
    assert_eq!(v["schema"], "truemper/oracle/1");
    assert_eq!(v["contains"], true);
    assert_eq!(v["separator"].as_array().unwrap().len(), 3);

    let tree = "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n";
    let v = json(&run_stdin(&["oracle", "-", "--method", "model"], tree));
    assert_eq!(v["contains"], false);
    assert!(v.get("model").is_none());

    let big = gen_text(&["gen", "random", "15", "--p", "0.3", "--seed", "1"]);
    let out = run_stdin(&["oracle", "-", "--method", "model"], &big);
    assert_eq!(out.status.code(), Some(4));
    let out = run_stdin(&["oracle", "-", "--method", "model", "--force"], &big);
    assert_eq!(out.status.code(), Some(0));
    let out = run_stdin(&["oracle", "-", "--method", "separators"], &big);
    assert_eq!(out.status.code(), Some(0), "separators allow n <= 20");
}

fn gen_text(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "gen failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_gk_1_is_the_4_cycle() {
    assert_eq!(gen_text(&["gen", "gk", "1"]), "4 4\n0 1\n0 2\n1 3\n2 3\n");
}

#[test]
fn gen_theta_2_2_2_detects_as_theta() {
    let v = json(&run_stdin(&["detect", "-"], &gen_text(&["gen", "theta", "2", "2", "2"])));
    assert_eq!(v["stage"], "theta");
}

#[test]
fn gen_is_deterministic_per_seed() {
    let a = gen_text(&["gen", "random", "12", "--p", "0.4", "--seed", "9"]);
    let b = gen_text(&["gen", "random", "12", "--p", "0.4", "--seed", "9"]);
    let c = gen_text(&["gen", "random", "12", "--p", "0.4", "--seed", "10"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn gen_formats_agree_through_detect() {
    for pattern in [&["gen", "cube"][..], &["gen", "pyramid", "2", "2", "1"][..]] {
        let el = gen_text(pattern);
        let mut g6_args = pattern.to_vec();
        g6_args.extend(["--format", "graph6"]);
        let g6 = gen_text(&g6_args);
        let via_el = json(&run_stdin(&["detect", "-"], &el));
        let via_g6 = json(&run_stdin(&["detect", "-"], &g6));
        assert_eq!(via_el["stage"], via_g6["stage"]);
        assert_eq!(via_el["witness"], via_g6["witness"]);
    }
}

#[test]
fn gen_writes_output_files() {
    let path = std::env::temp_dir().join(format!("truemper-gen-{}.g6", std::process::id()));
    let out = run(&["gen", "net", "--format", "graph6", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v = json(&run_stdin(&["detect", "-", "--format", "graph6"], &text));
    assert_eq!(v["contains_k23"], false);
}

#[test]
fn gen_plants_configurations_into_backgrounds() {
    let text = gen_text(&[
        "gen",
        "broken-wheel",
        "1",
        "2",
        "2",
        "--background",
        "6",
        "--p",
        "0.3",
        "--seed",
        "42",
    ]);
    assert!(text.starts_with("12 "));
    let v = json(&run_stdin(&["detect", "-"], &text));
    assert_eq!(v["contains_k23"], true);
}

#[test]
fn xcheck_random_sweep_agrees() {
    let v = json(&run(&[
        "xcheck", "--n", "10", "--count", "60", "--p", "0.3", "--seed", "7",
    ]));
    assert_eq!(v["schema"], "truemper/xcheck/1");
    assert_eq!(v["checked"], 60);
    assert_eq!(v["agreements"], 60);
    assert_eq!(v["disagreements"], 0);
    assert!(v.get("counterexample").is_none());
}

#[test]
fn xcheck_exhaustive_six_vertices_agrees() {
    let v = json(&run(&["xcheck", "--n", "6", "--count", "exhaustive"]));
    assert_eq!(v["checked"], 32768);
    assert_eq!(v["agreements"], 32768);
    assert_eq!(v["disagreements"], 0);
    assert!(v.get("p").is_none());
}

#[test]
fn xcheck_refuses_oversized_sweeps() {
    let out = run(&["xcheck", "--n", "8", "--count", "exhaustive"]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["xcheck", "--n", "20", "--count", "2"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn bench_reports_both_modes() {
    let v = json(&run(&["bench", "--n", "12", "--p", "0.2", "--reps", "2"]));
    assert_eq!(v["schema"], "truemper/bench/1");
    let modes: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["mode"].as_str().unwrap())
        .collect();
    assert_eq!(modes, ["parallel", "sequential"]);
    assert_eq!(v["results"][0]["runs_ms"].as_array().unwrap().len(), 2);
}

#[test]
fn thread_env_var_is_validated() {
    let path = write_temp("k23-threads", K23_EDGELIST);
    let out = bin()
        .env("TRUEMPER_THREADS", "2")
        .args(["detect", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());

    let out = bin()
        .env("TRUEMPER_THREADS", "zero")
        .args(["detect", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    let path = write_temp("k23-det", K23_EDGELIST);
    let strip = |out: Output| -> String {
        let mut v = json(&out);
        v.as_object_mut().unwrap().remove("timings_ms");
        v.to_string()
    };
    let a = strip(run(&["detect", path.to_str().unwrap()]));
    let b = strip(run(&["detect", path.to_str().unwrap()]));
    assert_eq!(a, b);
}
