//! End-to-end tests over the compiled binary: exact output bytes, exit
//! codes, and the embed → verify round trip.

use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pancake-embed"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const ORDER_FOUR_LIST: &str = "1234\n2134\n3124\n1324\n2314\n3214\n4123\n1423\n2413\n4213\n1243\n2143\n3412\n4312\n1342\n3142\n4132\n1432\n2341\n3241\n4231\n2431\n3421\n4321\n";

#[test]
fn hamilton_order_four_is_byte_exact() {
    let start = std::time::Instant::now();
    let out = run(&["hamilton", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(out.stdout, ORDER_FOUR_LIST.as_bytes());
    assert!(start.elapsed().as_secs() < 1);
}

#[test]
fn hamilton_check_reports_pass() {
    let out = run(&["hamilton", "--n", "4", "--check"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("check: PASS"));

    let out = run(&["hamilton", "--n", "5", "--k", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 6);
}

#[test]
fn gen_prints_counts_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("p4.csv");
    let out = run(&[
        "gen",
        "--topology",
        "pancake",
        "--n",
        "4",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "pancake(4): 24 vertices, 36 edges\n");
    let body = fs::read_to_string(&csv).unwrap();
    assert!(body.starts_with("u,v\n"));
    assert_eq!(body.lines().count(), 37);

    let out = run(&["gen", "--topology", "star", "--n", "4"]);
    assert!(stdout(&out).contains("star(4): 24 vertices, 36 edges"));

    let out = run(&["gen", "--topology", "ghc", "--n", "3"]);
    assert!(stdout(&out).contains("ghc(3): 6 vertices, 9 edges"));

    let dot = dir.path().join("g.dot");
    let out = run(&[
        "gen",
        "--topology",
        "grid2d(2x3)",
        "--format",
        "dot",
        "--out",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(fs::read_to_string(&dot)
        .unwrap()
        .starts_with("graph \"grid2d(2x3)\""));

    // Above the cap without an override.
    let out = run(&["gen", "--topology", "pancake", "--n", "9"]);
    assert!(!out.status.success());
}

#[test]
fn rep_worked_examples() {
    let out = run(&["rep", "--mode", "rule-r", "encode", "27351864"]);
    assert_eq!(stdout(&out), "0200353\n");
    let out = run(&["rep", "--mode", "rule-r", "decode", "0200353"]);
    assert_eq!(stdout(&out), "27351864\n");
    let out = run(&["rep", "--mode", "left-count", "encode", "42153"]);
    assert_eq!(stdout(&out), "0203\n");
    let out = run(&["rep", "--mode", "left-count", "decode", "0203"]);
    assert_eq!(stdout(&out), "42153\n");

    let out = run(&["rep", "--mode", "left-count", "encode", "11234"]);
    assert!(!out.status.success());
    let out = run(&["rep", "--mode", "rule-r", "decode", "09"]);
    assert!(!out.status.success());
}

#[test]
fn embed_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let emb = dir.path().join("ring.json");
    let rep = dir.path().join("report.json");

    let out = run(&[
        "embed",
        "--guest",
        "ring",
        "--host",
        "pancake",
        "--n",
        "4",
        "--k",
        "4",
        "--out",
        emb.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&emb).unwrap()).unwrap();
    assert_eq!(doc["map"].as_array().unwrap().len(), 24);
    assert_eq!(doc["routes"].as_array().unwrap().len(), 24);

    let out = run(&[
        "verify",
        emb.to_str().unwrap(),
        "--out",
        rep.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "verify must exit 0 for a clean ring");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(report["dilation"], 1);
    assert_eq!(report["congestion"], 1);
    assert_eq!(report["expansion"]["numerator"], 1);

    // The report agrees with the in-process measurement exactly.
    let e = pancake_embed::embed_ring(4, 4).unwrap();
    let table = pancake_embed::bfs_from_identity(&e.host()).unwrap();
    let direct = pancake_embed::measure(&e, &table).unwrap();
    assert_eq!(report["dilation"].as_u64().unwrap() as u32, direct.dilation);
    assert_eq!(report["congestion"].as_u64(), direct.congestion);

    // Histogram CSV flavour.
    let hist = dir.path().join("hist.csv");
    let out = run(&[
        "verify",
        emb.to_str().unwrap(),
        "--format",
        "csv",
        "--out",
        hist.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&hist).unwrap(), "distance,edges\n1,24\n");
}

#[test]
fn verify_flags_a_corrupted_map() {
    let dir = tempfile::tempdir().unwrap();
    let emb = dir.path().join("ring.json");
    run(&[
        "embed",
        "--guest",
        "ring",
        "--host",
        "pancake",
        "--n",
        "4",
        "--k",
        "4",
        "--out",
        emb.to_str().unwrap(),
    ]);
    // Swap two far-apart images; the map stays injective but the ring
    // adjacency is broken, so bounds must be violated. Routes are
    // dropped because they no longer join the images.
    let mut doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&emb).unwrap()).unwrap();
    let map = doc["map"].as_array_mut().unwrap();
    let a = map[1][1].clone();
    let b = map[12][1].clone();
    map[1][1] = b;
    map[12][1] = a;
    doc["routes"] = serde_json::Value::Null;
    fs::write(&emb, serde_json::to_string(&doc).unwrap()).unwrap();

    let out = run(&["verify", emb.to_str().unwrap(), "--out", "/dev/null"]);
    assert!(!out.status.success(), "shuffled map must exit nonzero");
    assert!(String::from_utf8_lossy(&out.stderr).contains("violation"));
}

#[test]
fn verify_rejects_malformed_documents() {
    let dir = tempfile::tempdir().unwrap();
    let emb = dir.path().join("bad.json");
    fs::write(&emb, "{\"format_version\": \"9.0\"}").unwrap();
    let out = run(&["verify", emb.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn embed_rejects_unsupported_combination() {
    let out = run(&["embed", "--guest", "ring", "--host", "star", "--n", "4"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("unsupported"));
    assert!(
        err.contains("supported:"),
        "must list supported combinations"
    );
}

#[test]
fn embed_ghc_star_has_short_routes() {
    let dir = tempfile::tempdir().unwrap();
    let emb = dir.path().join("ghc.json");
    let out = run(&[
        "embed",
        "--guest",
        "ghc",
        "--host",
        "star",
        "--n",
        "5",
        "--out",
        emb.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&emb).unwrap()).unwrap();
    assert_eq!(doc["map"].as_array().unwrap().len(), 120);
    for entry in doc["routes"].as_array().unwrap() {
        let path = entry[1].as_array().unwrap();
        assert!(
            path.len() <= 5,
            "route of {} vertices exceeds 4 hops",
            path.len()
        );
    }
    let out = run(&["verify", emb.to_str().unwrap(), "--out", "/dev/null"]);
    assert!(out.status.success());
}

#[test]
fn suite_range_runs_and_exits_clean() {
    let out = run(&["suite", "--n", "3..4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ring(k!) dilation & congestion"));
    assert!(text.contains("pass"));
    assert!(!text.contains("FAIL"));

    let out = run(&["suite", "--n", "2..3"]);
    assert_eq!(out.status.code(), Some(2), "range below 3 is an error");
}
