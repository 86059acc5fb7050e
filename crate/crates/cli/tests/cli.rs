//! End-to-end runs of the `kempe` binary with schema-checked output.

mod common;

use std::fs;

use kempe_core::generators::{petersen_star, woodall_j};
use kempe_core::library::pattern;
use kempe_core::Graph;
use serde_json::Value;
use tempfile::TempDir;

use common::{assert_report, assert_valid, kempe, pattern_file};

fn workdir() -> TempDir {
    let dir = TempDir::new().unwrap();
    let files: Vec<(&str, String)> = vec![
        ("pstar.txt", petersen_star().emit()),
        ("c5.txt", "0: 1 4\n1: 0 2\n2: 1 3\n3: 2 4\n4: 3 0\n".into()),
        (
            "k4.txt",
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
                .unwrap()
                .emit(),
        ),
        ("split.txt", "0: 1\n1: 0\n2: 3\n3: 2\n".into()),
        ("fig3host.txt", fig3_host().emit()),
    ];
    for (name, text) in files {
        fs::write(dir.path().join(name), text).unwrap();
    }
    for k in 1..=4 {
        fs::write(
            dir.path().join(format!("j{k}.txt")),
            woodall_j(k).unwrap().emit(),
        )
        .unwrap();
    }
    dir
}

/// A host containing the three-component pattern whose middle vertex has
/// type (0,4,4).
fn fig3_host() -> Graph {
    let cfg = pattern("fig4").unwrap().unwrap();
    let mut edges = cfg.resolve().unwrap().graph.edges().to_vec();
    edges.extend([
        (7, 15),
        (1, 15),
        (12, 15),
        (5, 16),
        (13, 16),
        (6, 17),
        (14, 17),
        (16, 17),
    ]);
    Graph::from_edges(18, &edges).unwrap()
}

#[test]
fn chi_of_c5_is_three() {
    let dir = workdir();
    let run = kempe(&["chi", "c5.txt"], dir.path());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = assert_report(&run);
    assert_eq!(report["payload"]["chi"], 3);
    assert_eq!(report["subcommand"], "chi");
}

#[test]
fn critical_exit_codes() {
    let dir = workdir();
    let run = kempe(&["critical", "pstar.txt"], dir.path());
    assert_eq!(run.code, 0);
    assert_eq!(assert_report(&run)["payload"]["critical"], true);

    let run = kempe(&["critical", "k4.txt"], dir.path());
    assert_eq!(run.code, 1);
    let report = assert_report(&run);
    assert_eq!(report["payload"]["critical"], false);
    assert_eq!(report["payload"]["chromatic_index"], 3);

    let run = kempe(&["critical", "c5.txt"], dir.path());
    assert_eq!(run.code, 1);
    assert_eq!(assert_report(&run)["payload"]["critical"], false);

    let run = kempe(&["critical", "split.txt"], dir.path());
    assert_eq!(run.code, 2);
    assert!(run.stdout.is_empty());
    assert!(run.stderr.contains("disconnected"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = workdir();
    for args in [
        vec!["frobnicate"],
        vec!["chi"],
        vec!["chi", "missing.txt"],
        vec!["discharge", "j1.txt", "--alpha", "1/2"],
        vec![
            "discharge",
            "j1.txt",
            "--alpha",
            "1/2",
            "--beta",
            "1/4",
            "--type-sum",
            "3",
        ],
        vec!["fix", "prove", "c5.txt", "--mode", "clever"],
    ] {
        let run = kempe(&args, dir.path());
        assert_eq!(run.code, 2, "{args:?}");
        assert!(run.stdout.is_empty(), "{args:?}");
        assert!(!run.stderr.is_empty(), "{args:?}");
    }
    let run = kempe(&["frobnicate"], dir.path());
    assert!(run.stderr.contains("Usage"));
}

#[test]
fn gen_emits_parseable_graphs() {
    let dir = workdir();
    let run = kempe(&["gen", "jk", "2"], dir.path());
    assert_eq!(run.code, 0);
    let g = Graph::parse(&run.stdout).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (25, 34));

    let run = kempe(&["gen", "enumerate", "4"], dir.path());
    assert_eq!(run.code, 0);
    let graphs: Vec<Graph> = run
        .stdout
        .split("\n---\n")
        .map(|t| Graph::parse(t).unwrap())
        .collect();
    assert_eq!(graphs.len(), 6);

    let run = kempe(&["gen", "p-star"], dir.path());
    assert_eq!(Graph::parse(&run.stdout).unwrap(), petersen_star());
}

#[test]
fn solve_params_prints_the_pair() {
    let run = kempe(&["solve-params", "11"], &std::env::temp_dir());
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.trim(), "26/37 1/37");
    let run = kempe(&["solve-params", "9"], &std::env::temp_dir());
    assert_eq!(run.stdout.trim(), "22/31 1/31");
}

#[test]
fn audit_reports() {
    let dir = workdir();
    let run = kempe(&["audit", "fig3host.txt", "--strict"], dir.path());
    assert_eq!(run.code, 1);
    let report = assert_report(&run);
    let flags = report["payload"]["rich_flags"].as_array().unwrap();
    assert!(flags.iter().any(|f| f["vertex"] == 7));

    let run = kempe(&["audit", "k4.txt"], dir.path());
    assert_eq!(run.code, 1);
    let report = assert_report(&run);
    assert!(report["payload"]["basic"]
        .as_array()
        .unwrap()
        .iter()
        .any(|v| v["kind"] == "triangle"));

    let run = kempe(&["audit", "pstar.txt"], dir.path());
    assert_report(&run);
}

#[test]
fn discharge_defaults_and_explicit_parameters_agree() {
    let dir = workdir();
    let default = kempe(&["discharge", "j1.txt"], dir.path());
    assert_eq!(default.code, 0, "{}", default.stderr);
    let explicit = kempe(
        &["discharge", "j1.txt", "--alpha", "26/37", "--beta", "1/37"],
        dir.path(),
    );
    let by_sum = kempe(&["discharge", "j1.txt", "--type-sum", "11"], dir.path());
    let d = assert_report(&default);
    assert_eq!(d["payload"], assert_report(&explicit)["payload"]);
    assert_eq!(d["payload"], assert_report(&by_sum)["payload"]);
    assert_eq!(d["payload"]["target"], "100/37");
    assert_eq!(d["payload"]["meets_target"], true);
    let totals: Vec<&Value> = d["payload"]["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| &s["total"])
        .collect();
    assert!(totals.iter().all(|t| *t == "46"));

    let run = kempe(&["discharge", "k4.txt"], dir.path());
    assert_eq!(run.code, 2);
}

#[test]
fn fix_boards_counts() {
    let dir = workdir();
    let run = kempe(&["fix", "boards", "6"], dir.path());
    assert_eq!(run.code, 0);
    let report = assert_report(&run);
    assert_eq!(report["payload"]["count"], 122);
}

#[test]
fn prove_then_verify_round_trip() {
    let dir = workdir();
    let cfg = pattern_file("fig2b");
    for mode in ["basic", "stateful"] {
        let run = kempe(&["fix", "prove", &cfg, "--mode", mode], dir.path());
        assert_eq!(run.code, 0, "{}", run.stderr);
        let report = assert_report(&run);
        assert_eq!(report["payload"]["proved"], true);
        assert_valid("certificate", &report["payload"]["certificate"]);
    }

    let run = kempe(&["fix", "prove", &cfg, "-o", "cert.json"], dir.path());
    assert_eq!(run.code, 0);
    assert!(assert_report(&run)["payload"]["certificate"].is_null());
    let cert: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("cert.json")).unwrap()).unwrap();
    assert_valid("certificate", &cert);

    let run = kempe(&["fix", "verify", &cfg, "cert.json"], dir.path());
    assert_eq!(run.code, 0);
    assert_eq!(assert_report(&run)["payload"]["valid"], true);
}

#[test]
fn corrupted_certificate_is_rejected_with_a_path() {
    let dir = workdir();
    let cfg = pattern_file("fig2a");
    let run = kempe(&["fix", "prove", &cfg], dir.path());
    let mut cert = assert_report(&run)["payload"]["certificate"].clone();
    let entries = cert["boards"].as_array_mut().unwrap();
    let colored = entries
        .iter_mut()
        .find(|e| e["action"]["kind"] == "color")
        .unwrap();
    let len = colored["action"]["coloring"].as_str().unwrap().len();
    colored["action"]["coloring"] = Value::String("x".repeat(len));
    fs::write(
        dir.path().join("bad.json"),
        serde_json::to_string(&cert).unwrap(),
    )
    .unwrap();

    let run = kempe(&["fix", "verify", &cfg, "bad.json"], dir.path());
    assert_eq!(run.code, 1);
    let report = assert_report(&run);
    assert_eq!(report["payload"]["valid"], false);
    assert!(report["payload"]["diagnostic"].is_string());
    assert!(!report["payload"]["path"].as_array().unwrap().is_empty());
}

#[test]
fn unprovable_configuration_exits_one() {
    let dir = workdir();
    let run = kempe(&["fix", "prove", &pattern_file("fig6-half")], dir.path());
    assert_eq!(run.code, 1);
    let report = assert_report(&run);
    assert_eq!(report["payload"]["proved"], false);
    assert_eq!(
        report["payload"]["losing_boards"],
        serde_json::json!(["XXYY", "XYYX"])
    );
}

#[test]
fn repeated_runs_give_identical_payloads() {
    let dir = workdir();
    for args in [
        vec!["critical", "j1.txt"],
        vec!["audit", "fig3host.txt"],
        vec!["fix", "prove", &pattern_file("fig2c")],
    ] {
        let a = kempe(&args, dir.path()).json();
        let b = kempe(&args, dir.path()).json();
        assert_eq!(a["payload"].to_string(), b["payload"].to_string());
        assert_eq!(a["input_digest"], b["input_digest"]);
    }
}

#[test]
fn digest_follows_content_not_path() {
    let dir = workdir();
    fs::copy(dir.path().join("c5.txt"), dir.path().join("copy.txt")).unwrap();
    let a = kempe(&["chi", "c5.txt"], dir.path()).json();
    let b = kempe(&["chi", "copy.txt"], dir.path()).json();
    let c = kempe(&["chi", "k4.txt"], dir.path()).json();
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert_ne!(a["input_digest"], c["input_digest"]);
}

#[test]
fn batch_of_woodall_criticality_checks_passes() {
    let dir = workdir();
    fs::write(
        dir.path().join("m.txt"),
        "# criticality\ncritical j1.txt\ncritical j2.txt\n\ncritical j3.txt\ncritical j4.txt\n",
    )
    .unwrap();
    let run = kempe(&["batch", "m.txt"], dir.path());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = assert_report(&run);
    let tasks = report["payload"]["tasks"].as_array().unwrap();
    let lines: Vec<u64> = tasks.iter().map(|t| t["line"].as_u64().unwrap()).collect();
    assert_eq!(lines, vec![2, 3, 5, 6]);
    assert!(tasks.iter().all(|t| t["payload"]["critical"] == true));
    assert_eq!(report["payload"]["passed"], 4);
}

#[test]
fn batch_with_failing_strict_audit_exits_one() {
    let dir = workdir();
    fs::write(
        dir.path().join("m.txt"),
        "chi c5.txt\naudit fig3host.txt --strict\nsolve-params 11\n",
    )
    .unwrap();
    let run = kempe(&["batch", "m.txt"], dir.path());
    assert_eq!(run.code, 1);
    let report = assert_report(&run);
    let codes: Vec<i64> = report["payload"]["tasks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["exit_code"].as_i64().unwrap())
        .collect();
    assert_eq!(codes, vec![0, 1, 0]);
    assert_eq!(report["payload"]["failed"], 1);
}

#[test]
fn empty_batch_passes() {
    let dir = workdir();
    fs::write(dir.path().join("m.txt"), "# nothing\n\n").unwrap();
    let run = kempe(&["batch", "m.txt"], dir.path());
    assert_eq!(run.code, 0);
    let report = assert_report(&run);
    assert_eq!(report["payload"]["total"], 0);
    assert!(report["payload"]["tasks"].as_array().unwrap().is_empty());
}

#[test]
fn batch_parse_failure_fails_fast() {
    let dir = workdir();
    fs::write(
        dir.path().join("m.txt"),
        "fix prove c5.txt -o side-effect.json\nchi\n",
    )
    .unwrap();
    let run = kempe(&["batch", "m.txt"], dir.path());
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 2"));
    assert!(!dir.path().join("side-effect.json").exists());

    fs::write(dir.path().join("n.txt"), "batch m.txt\n").unwrap();
    assert_eq!(kempe(&["batch", "n.txt"], dir.path()).code, 2);
}

#[test]
fn batch_runtime_error_is_reported_per_task() {
    let dir = workdir();
    fs::write(dir.path().join("m.txt"), "chi c5.txt\nchi missing.txt\n").unwrap();
    let run = kempe(&["batch", "m.txt"], dir.path());
    assert_eq!(run.code, 2);
    let report = assert_report(&run);
    let tasks = report["payload"]["tasks"].as_array().unwrap();
    assert_eq!(tasks[0]["exit_code"], 0);
    assert!(tasks[1]["error"].as_str().unwrap().contains("missing.txt"));
}

#[test]
fn batch_matches_individual_runs_at_any_thread_count() {
    let dir = workdir();
    let lines = [
        "critical j1.txt",
        "chi pstar.txt",
        "audit j2.txt",
        "discharge j1.txt --type-sum 9",
        "fix boards 5",
        "solve-params 4",
        "gen jk 3",
    ];
    fs::write(dir.path().join("m.txt"), lines.join("\n")).unwrap();
    let one = kempe(&["batch", "m.txt", "--threads", "1"], dir.path()).json();
    let four = kempe(&["--threads", "4", "batch", "m.txt"], dir.path()).json();
    assert_eq!(one["payload"].to_string(), four["payload"].to_string());
    for (task, line) in one["payload"]["tasks"]
        .as_array()
        .unwrap()
        .iter()
        .zip(lines)
    {
        let args: Vec<&str> = line.split_whitespace().collect();
        let solo = kempe(&args, dir.path());
        assert_eq!(task["exit_code"], solo.code);
        if solo.stdout.trim_start().starts_with('{') {
            let solo = solo.json();
            assert_eq!(task["payload"], solo["payload"]);
            assert_eq!(task["input_digest"], solo["input_digest"]);
        }
    }
}

#[test]
fn schemas_reject_malformed_payloads() {
    let compile = |name: &str| jsonschema::JSONSchema::compile(&common::schema(name)).unwrap();
    let chi = compile("chi");
    assert!(chi.is_valid(
        &serde_json::json!({"vertices": 5, "edges": 5, "chi": 3, "witness": [0, 1, 0, 1, 2]})
    ));
    assert!(!chi.is_valid(
        &serde_json::json!({"vertices": 5, "edges": 5, "chi": 3, "witness": [0, 1, 0, 1, 7]})
    ));
    assert!(!chi.is_valid(&serde_json::json!({"vertices": 5, "edges": 5, "chi": 3})));
    let cert = compile("certificate");
    assert!(!cert.is_valid(&serde_json::json!({"format": "other"})));
    let boards = compile("fix-boards");
    assert!(!boards.is_valid(&serde_json::json!({"slot_count": 2, "count": 1, "boards": ["YX"]})));
}
