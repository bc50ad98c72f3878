//! Drives the installed binary as a real subprocess: exit statuses through
//! the OS, stdout/stderr separation, file round-trips. In-process behaviour
//! is covered by the unit tests next to the implementation.

use std::process::Command;

use midproof::ks::{check_certificate, emit_doc, CertificateDoc, EmitFormat};
use midproof::multipoly::{parse_poly, Poly, VarTable};

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_midproof"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
    )
}

#[test]
fn data_goes_to_stdout_diagnostics_to_stderr() {
    let (code, out, err) = bin(&["unitfrac", "--terms", "3", "--target", "1", "--min", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2 3 6\n2 4 4\n3 3 3\n");
    assert_eq!(err, "3 decompositions\n");
}

#[test]
fn an_empty_enumeration_is_still_a_success() {
    // two unit fractions with denominators >= 3 sum to at most 2/3
    let (code, out, err) = bin(&["unitfrac", "--terms", "2", "--target", "3/4", "--min", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "");
    assert_eq!(err, "0 decompositions\n");
}

#[test]
fn usage_problems_exit_2_with_stderr_only() {
    let (code, out, err) = bin(&["frobnicate"]);
    assert_eq!(code, 2);
    assert_eq!(out, "");
    assert!(!err.is_empty());

    let (code, out, err) = bin(&["unitfrac", "--terms", "3", "--target", "0"]);
    assert_eq!(code, 2);
    assert_eq!(out, "");
    assert!(err.contains("error"), "{err}");
}

#[test]
fn help_and_version_exit_0_on_stdout() {
    let (code, out, err) = bin(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.contains("certificate schema 1"), "{out}");
    assert_eq!(err, "");

    let (code, out, _) = bin(&["ks", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("--dataset"), "{out}");
}

#[test]
fn emitted_json_is_self_contained_and_re_renders() {
    let (code, json, _) = bin(&["ks", "--dataset", "peres33", "--emit", "json"]);
    assert_eq!(code, 1);
    let doc = CertificateDoc::from_json(&json).unwrap();

    // the document alone reproduces the emitted bytes in every format
    assert_eq!(emit_doc(&doc, EmitFormat::Json).unwrap(), json);
    let (_, text, _) = bin(&["ks", "--dataset", "peres33"]);
    assert_eq!(emit_doc(&doc, EmitFormat::Text).unwrap(), text);
    let (_, dot, _) = bin(&["ks", "--dataset", "peres33", "--emit", "dot"]);
    assert_eq!(emit_doc(&doc, EmitFormat::Dot).unwrap(), dot);

    // and it carries everything needed to re-check the proof
    let graph = doc.graph().unwrap();
    let cert = doc.certificate().unwrap();
    check_certificate(&graph, &[], &cert).unwrap();
}

#[test]
fn out_flag_writes_the_same_bytes_the_terminal_would_get() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let (code, out, err) = bin(&[
        "ks", "--dataset", "peres33", "--emit", "json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert_eq!(out, "");
    assert!(err.contains("wrote "), "{err}");
    let written = std::fs::read_to_string(&path).unwrap();
    let (_, direct, _) = bin(&["ks", "--dataset", "peres33", "--emit", "json"]);
    assert_eq!(written, direct);
}

#[test]
fn ray_and_assumption_files_drive_the_greedy_mode() {
    let dir = tempfile::tempdir().unwrap();
    let rays = dir.path().join("rays.txt");
    std::fs::write(&rays, "# a basis and one diagonal\n1 0 0\n0 1 0\n0 0 1\n1 1 0\n").unwrap();
    let assume = dir.path().join("assume.txt");
    std::fs::write(&assume, "0 0 1 green\n").unwrap();

    // one green propagates reds across the whole file
    let (code, out, _) = bin(&[
        "ks", "--file", rays.to_str().unwrap(),
        "--assume", assume.to_str().unwrap(), "--mode", "greedy",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: colourable"), "{out}");

    // without assumptions nothing propagates
    let (code, out, _) = bin(&["ks", "--file", rays.to_str().unwrap(), "--mode", "greedy"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: inconclusive"), "{out}");

    // search settles the same file without help
    let (code, out, _) = bin(&["ks", "--file", rays.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: colourable"), "{out}");
}

#[test]
fn broken_ks_inputs_exit_2_with_a_located_message() {
    let (code, _, err) = bin(&["ks", "--file", "/nonexistent/rays.txt"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let rays = dir.path().join("rays.txt");
    std::fs::write(&rays, "1 0 0\n0 1\n").unwrap();
    let (code, _, err) = bin(&["ks", "--file", rays.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    let assume = dir.path().join("assume.txt");
    std::fs::write(&rays, "1 0 0\n0 1 0\n").unwrap();
    std::fs::write(&assume, "0 0 1 green\n").unwrap();
    let (code, _, err) = bin(&[
        "ks", "--file", rays.to_str().unwrap(), "--assume", assume.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("error"), "{err}");
}

#[test]
fn groebner_witness_printed_by_the_cli_re_expands() {
    let dir = tempfile::tempdir().unwrap();
    let gens_path = dir.path().join("gens.txt");
    std::fs::write(&gens_path, "x^2 + y^2 - 1\nx - y\n").unwrap();
    let (code, out, _) = bin(&[
        "groebner", "--vars", "x,y", "--gens", gens_path.to_str().unwrap(),
        "--goal", "x^2 - x*y", "--witness", "--json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["member"], serde_json::Value::Bool(true));

    // parse the printed cofactors back and expand them against the file
    let vars = VarTable::new(["x", "y"]).unwrap();
    let gens = [
        parse_poly("x^2 + y^2 - 1", &vars).unwrap(),
        parse_poly("x - y", &vars).unwrap(),
    ];
    let goal = parse_poly("x^2 - x*y", &vars).unwrap();
    let mut sum = Poly::zero(&vars);
    for (c, g) in doc["witness"].as_array().unwrap().iter().zip(&gens) {
        let c = parse_poly(c.as_str().unwrap(), &vars).unwrap();
        sum = sum.checked_add(&c.checked_mul(g).unwrap()).unwrap();
    }
    assert_eq!(sum, goal);

    // a non-member answers 1 and carries no witness field
    let (code, out, _) = bin(&[
        "groebner", "--vars", "x,y", "--gens", gens_path.to_str().unwrap(),
        "--goal", "x + 1", "--witness", "--json",
    ]);
    assert_eq!(code, 1);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["member"], serde_json::Value::Bool(false));
    assert!(doc.get("witness").is_none(), "{out}");
}

#[test]
fn chebyshev_surfaces_combine_in_one_call() {
    let (code, out, _) = bin(&["chebyshev", "--n", "4", "--verify-mult", "2", "3", "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["poly"], serde_json::Value::String("8*x^4 - 8*x^2 + 1".into()));
    assert_eq!(doc["verify_mult"]["holds"], serde_json::Value::Bool(true));

    let (code, out, _) = bin(&["chebyshev", "--n", "4", "--verify-mult", "2", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "T4 = 8*x^4 - 8*x^2 + 1\n2*T2*T5 == T7 + T3: true\n");
}

#[test]
fn selftest_passes_with_timings_on_stderr() {
    let (code, out, err) = bin(&["self-test"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("[PASS]").count(), 3, "{out}");
    assert!(err.contains(" ms"), "{err}");

    let (code, out, _) = bin(&["self-test", "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let legs = doc["legs"].as_array().unwrap();
    assert_eq!(legs.len(), 3);
    assert!(legs.iter().all(|l| l["passed"] == serde_json::Value::Bool(true)), "{out}");
}
