use std::process::Command;

use serde_json::Value;
use spectraham_cli::{run_command, EXIT_OK, EXIT_REFUTED, EXIT_USAGE};

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spectraham").chain(args.iter().copied());
    let code = run_command(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str], stdin: &str) -> (i32, Value) {
    let (code, out, err) = run(args, stdin);
    let doc: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} / {err}"));
    assert_eq!(doc["schema_version"], "spectraham/1");
    (code, doc)
}

const K9: &str = "H~~~~~~\n";

#[test]
fn gen_cnk_reports_edge_count_and_parts() {
    let (code, doc) = report(&["gen", "--family", "Cnk", "--n", "6", "--k", "2"], "");
    assert_eq!(code, EXIT_OK);
    let g = &doc["results"][0];
    assert_eq!(g["edges"], 22);
    assert_eq!(g["x_size"], 5);
    assert_eq!(g["part_mask"], "XXXXXYYYYYY");
    assert!(doc["input_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn check_k9_certifies_hamilton_connectivity() {
    let (code, doc) = report(&["check", "--theorem", "T2_10", "--k", "2"], K9);
    assert_eq!(code, EXIT_OK, "{doc}");
    let r = &doc["results"][0];
    assert_eq!(r["verdict"]["conclusion"]["kind"], "Certified");
    assert_eq!(r["verdict"]["conclusion"]["property"], "HamiltonConnected");
    assert_eq!(r["cross_validation"]["status"], "Agree");
}

#[test]
fn exceptional_verdict_exits_one() {
    let (_, gen) = report(&["gen", "--family", "K2JoinSplit", "--n", "9", "--k", "2"], "");
    let g6 = gen["results"][0]["graph6"].as_str().unwrap().to_string();
    let (code, doc) = report(&["check", "--theorem", "T2_10", "--k", "2"], &g6);
    assert_eq!(code, EXIT_REFUTED);
    assert_eq!(doc["results"][0]["verdict"]["conclusion"]["kind"], "Exception");
}

#[test]
fn bipartite_input_via_x_size() {
    let (_, gen) = report(&["gen", "--family", "Cnk", "--n", "4", "--k", "1"], "");
    let g6 = gen["results"][0]["graph6"].as_str().unwrap().to_string();
    let (code, doc) = report(&["check", "--theorem", "T3_9", "--k", "1", "--x-size", "3"], &g6);
    assert_eq!(code, EXIT_REFUTED);
    assert_eq!(doc["results"][0]["verdict"]["conclusion"]["family"]["family"], "Cnk");
    let (code, doc) = report(&["check", "--theorem", "T3_9", "--k", "1"], &g6);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["results"][0]["verdict"]["hypothesis"]["status"], "NotMet");
}

#[test]
fn spectral_commands() {
    let (code, doc) = report(&["mu"], "Bw");
    assert_eq!(code, EXIT_OK);
    assert!((doc["results"][0]["value"].as_f64().unwrap() - 2.0).abs() < 1e-10);
    let (_, doc) = report(&["q"], "Bw");
    assert!((doc["results"][0]["value"].as_f64().unwrap() - 4.0).abs() < 1e-10);
    let (_, doc) = report(&["bounds"], "C~");
    assert!(doc["results"][0]["bounds"]["hong_shu_upper"].as_f64().unwrap() >= 3.0 - 1e-12);
}

#[test]
fn oracle_and_closure() {
    let (code, doc) = report(&["oracle", "--property", "hamiltonian"], "Bg");
    assert_eq!(code, EXIT_REFUTED);
    assert_eq!(doc["results"][0]["answer"]["holds"], false);
    let (code, _) = report(&["oracle", "--property", "traceable"], "Bg");
    assert_eq!(code, EXIT_OK);
    // C5 with threshold 4: every nonadjacent pair has degree sum 4.
    let (_, doc) = report(&["closure", "--k", "4"], "Dhc");
    assert_eq!(doc["results"][0]["closed"], "D~{");
    let (code, doc) = report(&["closure", "--bipartite", "--x-size", "2"], r#"{"order":4,"edges":[[0,2],[1,3]]}"#);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["results"][0]["threshold"], 3);
}

#[test]
fn sharpness_and_remark() {
    let (code, doc) = report(&["sharpness", "--lemma", "L2_9", "--n", "9", "--k", "2"], "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["results"][0]["all_strict"], true);
    let (code, _, err) = run(&["sharpness", "--lemma", "L2_9", "--n", "8", "--k", "2"], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("2k²"));
    let (code, doc) = report(&["remark", "--n", "9", "--k", "2"], "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["results"][0]["f_factored"], "-4725");
    let (code, _) = report(&["remark", "--n", "4", "--k", "1"], "");
    assert_eq!(code, EXIT_REFUTED);
}

#[test]
fn survey_is_reproducible() {
    let args = ["survey", "--n", "10", "--samples", "200", "--k", "2", "--seed", "42"];
    let (code, a, table) = run(&args, "");
    assert_eq!(code, EXIT_OK);
    assert!(table.contains("certified"));
    let (_, b, _) = run(&[&args[..], &["--threads", "2"]].concat(), "");
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v["command"] = Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&b));
    let (_, c, _) = run(&args, "");
    assert_eq!(a, c);
    let doc: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(doc["seed"], 42);
    assert_eq!(doc["results"][0]["generated"], 200);
}

#[test]
fn convert_formats() {
    let (code, out, _) = run(&["convert", "--format", "json"], "Bw");
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 3);
    let (_, out, _) = run(&["convert", "--format", "graph6"], &out);
    assert_eq!(out, "Bw\n");
    let (_, out, _) = run(&["convert", "--format", "dot"], "Bw");
    assert!(out.starts_with("graph G {"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["mu"], "B").0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"], "").0, EXIT_USAGE);
    assert_eq!(run(&["mu", "--bogus"], "Bw").0, EXIT_USAGE);
    assert_eq!(run(&["check", "--theorem", "T9_9", "--k", "2"], "Bw").0, EXIT_USAGE);
    assert_eq!(run(&["gen", "--family", "Cnk", "--n", "3", "--k", "2"], "").0, EXIT_USAGE);
    let (code, out, _) = run(&["--help"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("survey"));
}

#[test]
fn binary_exit_codes_and_files() {
    let dir = std::env::temp_dir().join(format!("spectraham-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let k9 = dir.join("k9.g6");
    std::fs::write(&k9, K9).unwrap();
    let out = dir.join("report.json");
    let bin = env!("CARGO_BIN_EXE_spectraham");
    let status = Command::new(bin)
        .args(["check", "--theorem", "T2_10", "--k", "2", "--in"])
        .arg(&k9)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_OK));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["results"][0]["verdict"]["conclusion"]["kind"], "Certified");
    let status = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
    assert!(!status.stderr.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}
