//! End-to-end checks of the command-line interface: exit codes, format
//! contracts, round trips and byte-for-byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn sdlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("sdlab-cli-{}-{name}", std::process::id()));
    p
}

#[test]
fn qcoeffs_json_payload() {
    let out = sdlab(&["qcoeffs", "--n", "2"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["payload"]["q"], serde_json::json!(["1/2", "3/2", "1"]));
}

#[test]
fn qcoeffs_methods_agree() {
    let a = stdout(&sdlab(&["qcoeffs", "--n", "5", "--method", "solve", "--format", "csv"]));
    let b = stdout(&sdlab(&[
        "qcoeffs", "--n", "5", "--method", "partition", "--format", "csv",
    ]));
    assert_eq!(a, b);
}

#[test]
fn fvector_csv_of_subdivided_triangle() {
    let path = tmp("delta2.json");
    let out = sdlab(&["corpus", "emit", "delta-2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let out = sdlab(&[
        "fvector",
        "--input",
        path.to_str().unwrap(),
        "--depth",
        "1",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "7,12,6");
}

#[test]
fn verify_exit_codes() {
    let octa = tmp("octa.json");
    sdlab(&["corpus", "emit", "cross-polytope-2", "--output", octa.to_str().unwrap()]);
    let ok = sdlab(&["verify", "--claim", "macdonald", "--input", octa.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));

    let delta2 = tmp("delta2-neg.json");
    sdlab(&["corpus", "emit", "delta-2", "--output", delta2.to_str().unwrap()]);
    let bad = sdlab(&["verify", "--claim", "macdonald", "--input", delta2.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1), "false claim must exit 1");

    let usage = sdlab(&["verify", "--claim", "macdonald"]);
    assert_eq!(usage.status.code(), Some(2), "missing input must exit 2");

    let unknown = sdlab(&["no-such-command"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn resource_cap_exit_code() {
    let d3 = tmp("delta3.json");
    sdlab(&["corpus", "emit", "delta-3", "--output", d3.to_str().unwrap()]);
    let out = sdlab(&[
        "fvector",
        "--input",
        d3.to_str().unwrap(),
        "--depth",
        "4",
        "--max-cells",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("cap"), "actionable message, got: {msg}");
}

#[test]
fn corpus_round_trip() {
    // every emitted complex re-ingests to the identical canonical form
    let path = tmp("rt.json");
    for name in ["delta-2", "boundary-delta-3", "cross-polytope-2", "torus-7"] {
        sdlab(&["corpus", "emit", name, "--output", path.to_str().unwrap()]);
        let text = std::fs::read_to_string(&path).unwrap();
        let doc: sdlab::json::ComplexJson = serde_json::from_str(&text).unwrap();
        let k = doc.to_complex().unwrap();
        let again = sdlab::json::ComplexJson::from_parts(&k, doc.coordinate_table().unwrap().as_ref());
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            serde_json::to_string(&again).unwrap(),
            "{name} round trip"
        );
    }
}

#[test]
fn reports_are_deterministic() {
    let a = stdout(&sdlab(&[
        "sample", "--n", "2", "--depth", "5", "--samples", "500", "--seed", "99",
    ]));
    let b = stdout(&sdlab(&[
        "sample", "--n", "2", "--depth", "5", "--samples", "500", "--seed", "99",
    ]));
    assert_eq!(a, b, "same config and seed must give identical bytes");
    let c = stdout(&sdlab(&[
        "sample", "--n", "2", "--depth", "5", "--samples", "500", "--seed", "100",
    ]));
    assert_ne!(a, c);
}

#[test]
fn converge_csv_header_and_rows() {
    let path = tmp("delta2-conv.json");
    sdlab(&["corpus", "emit", "delta-2", "--output", path.to_str().unwrap()]);
    let out = sdlab(&[
        "converge",
        "--harness",
        "gamma",
        "--input",
        path.to_str().unwrap(),
        "--p",
        "1",
        "--dmax",
        "3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines[0], "d,value,target,error,ratio");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("1,2.000000000000,1.500000000000,0.500000000000"));
}

#[test]
fn subdivide_emits_reingestible_complex() {
    let path = tmp("delta2-sd.json");
    sdlab(&["corpus", "emit", "delta-2", "--output", path.to_str().unwrap()]);
    let out = sdlab(&[
        "subdivide",
        "--input",
        path.to_str().unwrap(),
        "--depth",
        "1",
        "--emit",
        "faces",
    ]);
    assert!(out.status.success());
    let doc: sdlab::json::ComplexJson = serde_json::from_str(&stdout(&out)).unwrap();
    let k = doc.to_complex().unwrap();
    assert_eq!(k.face_count(0), 7);
    assert_eq!(k.face_count(2), 6);
    // carried coordinates stay exact
    let coords = doc.coordinate_table().unwrap().unwrap();
    assert_eq!(coords.len(), 7);
    let embedded = doc.to_embedded().unwrap();
    assert_eq!(embedded.ambient_dim(), 2);
}

#[test]
fn lambda_csv_matches_known_rows() {
    let out = sdlab(&["lambda", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&out).trim(), "1,0,0\n1,2,0\n1,6,6");
}
