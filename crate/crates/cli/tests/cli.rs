//! End-to-end runs of the `rvc` binary: file round trips and exit codes
//! (0 success, 1 verification failure, 2 inconclusive, 64 usage).

use std::path::PathBuf;
use std::process::{Command, Output};

use rvc_core::io::parse_edge_list;

fn rvc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rvc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rvc-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn gen_writes_a_parsable_chain() {
    let out = scratch("chain.edges");
    let result = rvc(&[
        "gen",
        "--family",
        "caro",
        "--params",
        "3,1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");
    let g = parse_edge_list(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.n(), 14);
    assert_eq!(g.min_degree(), 3);
    assert!(stdout_of(&result).contains("caro,14"));
}

#[test]
fn exact_subcommand_prints_the_optimum() {
    let out = scratch("c6.edges");
    rvc(&["gen", "--family", "classic", "--params", "cycle,6", "--out", out.to_str().unwrap()]);
    let result = rvc(&["exact", "--in", out.to_str().unwrap()]);
    assert!(result.status.success());
    assert_eq!(stdout_of(&result).trim(), "2");
}

#[test]
fn exact_subcommand_refuses_large_inputs_as_usage() {
    let out = scratch("c9.edges");
    rvc(&["gen", "--family", "classic", "--params", "cycle,9", "--out", out.to_str().unwrap()]);
    let result = rvc(&["exact", "--in", out.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(64));
}

#[test]
fn color_then_verify_round_trip() {
    let graph = scratch("roundtrip.edges");
    let coloring = scratch("roundtrip.colors");
    rvc(&["gen", "--family", "caro", "--params", "3,1", "--out", graph.to_str().unwrap()]);
    let result = rvc(&[
        "color",
        "--in",
        graph.to_str().unwrap(),
        "--delta",
        "3",
        "--seed",
        "1",
        "--out-coloring",
        coloring.to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");
    assert!(stdout_of(&result).starts_with("family,n,delta,seed,strategy"));

    let verify = rvc(&[
        "verify",
        "--in",
        graph.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
        "--mode",
        "exact",
    ]);
    assert!(verify.status.success(), "{verify:?}");
    assert_eq!(stdout_of(&verify).trim(), "ok");
}

#[test]
fn structural_verify_accepts_a_high_pipeline_coloring() {
    let graph = scratch("high.edges");
    let coloring = scratch("high.colors");
    rvc(&[
        "gen", "--family", "random", "--params", "40,7", "--seed", "5", "--out",
        graph.to_str().unwrap(),
    ]);
    let color = rvc(&[
        "color",
        "--in",
        graph.to_str().unwrap(),
        "--delta",
        "7",
        "--seed",
        "5",
        "--strategy",
        "high",
        "--out-coloring",
        coloring.to_str().unwrap(),
    ]);
    assert!(color.status.success(), "{color:?}");
    let verify = rvc(&[
        "verify",
        "--in",
        graph.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
        "--mode",
        "structural",
        "--delta",
        "7",
    ]);
    assert!(verify.status.success(), "{verify:?}");
}

#[test]
fn verify_flags_an_invalid_coloring_with_exit_one() {
    let graph = scratch("bad.edges");
    let coloring = scratch("bad.colors");
    rvc(&["gen", "--family", "classic", "--params", "cycle,6", "--out", graph.to_str().unwrap()]);
    // One color on a diameter-3 cycle cannot be rainbow vertex-connected.
    std::fs::write(&coloring, "0 0\n1 0\n2 0\n3 0\n4 0\n5 0\n").unwrap();
    let verify = rvc(&[
        "verify",
        "--in",
        graph.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(verify.status.code(), Some(1));
    assert!(stdout_of(&verify).contains("not rainbow vertex-connected"));
}

#[test]
fn sparsify_and_dominate_report_csv() {
    let graph = scratch("k6.edges");
    let sparse = scratch("k6-sparse.edges");
    rvc(&["gen", "--family", "classic", "--params", "complete,6", "--out", graph.to_str().unwrap()]);
    let result = rvc(&[
        "sparsify",
        "--in",
        graph.to_str().unwrap(),
        "--delta",
        "2",
        "--out",
        sparse.to_str().unwrap(),
    ]);
    assert!(result.status.success());
    assert!(stdout_of(&result).contains("within_budget"));
    let g = parse_edge_list(&std::fs::read_to_string(&sparse).unwrap()).unwrap();
    assert!(g.is_connected());
    assert!(g.min_degree() >= 2);
    assert!(g.m() < 15);

    let dominate = rvc(&["dominate", "--in", graph.to_str().unwrap(), "--delta", "5"]);
    assert!(dominate.status.success());
    let text = stdout_of(&dominate);
    assert!(text.contains("s_size"));
    assert!(text.lines().nth(1).unwrap().starts_with("6,5,0,1,0,0"));
}

#[test]
fn bounds_subcommand_reports_the_regime() {
    let result = rvc(&["bounds", "--n", "290", "--delta", "17"]);
    assert!(result.status.success());
    let text = stdout_of(&result);
    assert!(text.contains("high"));
    assert!(text.contains("53.3333"));

    let usage = rvc(&["bounds", "--n", "5", "--delta", "9"]);
    assert_eq!(usage.status.code(), Some(64));
}

#[test]
fn usage_errors_exit_sixty_four() {
    let bogus_family = rvc(&["gen", "--family", "moon", "--params", "3", "--out", "/dev/null"]);
    assert_eq!(bogus_family.status.code(), Some(64));

    let missing_arg = rvc(&["color", "--delta", "3"]);
    assert_eq!(missing_arg.status.code(), Some(64));

    let bogus_mode = rvc(&["verify", "--in", "x", "--coloring", "y", "--mode", "psychic"]);
    assert_eq!(bogus_mode.status.code(), Some(64));

    let help = rvc(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn experiment_runs_a_config_file() {
    let config = scratch("sweep.conf");
    let csv_out = scratch("sweep.csv");
    std::fs::write(
        &config,
        "families = caro\ncaro.delta = 3,4\ncaro.m = 1\ntrials = 1\nbase_seed = 2\n",
    )
    .unwrap();
    let result = rvc(&[
        "experiment",
        "--config",
        config.to_str().unwrap(),
        "--out",
        csv_out.to_str().unwrap(),
        "--threads",
        "2",
    ]);
    assert!(result.status.success(), "{result:?}");
    let csv = std::fs::read_to_string(&csv_out).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("family,n,delta,seed,strategy"));
    assert_eq!(lines.count(), 2);

    let bad = rvc(&["experiment", "--set", "families=caro"]);
    assert_eq!(bad.status.code(), Some(64));
}
