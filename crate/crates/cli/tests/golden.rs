//! Golden-file tests for every `weylcent` subcommand and exit path.
//!
//! Each case compares stdout with `tests/golden/<name>.out`. Run with
//! `UPDATE_GOLDEN=1` to rewrite the files after an intended output change.

use std::path::PathBuf;
use std::process::Command;

const AIRY_P: &str = "d^2 - x";
const AIRY_Q: &str = "d^3 - 3/2*x*d - 3/4";

/// (golden file name, expected exit code, arguments)
const CASES: &[(&str, i32, &[&str])] = &[
    ("comm_d_x", 0, &["comm", "d", "x"]),
    ("comm_neg_operand", 0, &["comm", "-x", "d"]),
    ("comm_json", 0, &["comm", "x1*d2", "d1", "--vars", "2", "--json"]),
    ("mul_q", 0, &["mul", "d^3", "x^2"]),
    ("mul_mod3", 0, &["mul", "d^3", "x^2", "--mod", "3"]),
    ("mul_flag_first", 0, &["--mod", "3", "mul", "d^3", "x^2"]),
    ("mul_rational", 0, &["mul", "1/2*d", "x - 2/3"]),
    ("mul_json", 0, &["mul", "d", "x", "--mod", "5", "--json"]),
    ("mul_parse_error", 2, &["mul", "x +", "d"]),
    ("mul_unknown_variable", 2, &["mul", "x3", "d", "--vars", "2"]),
    ("mul_fraction_mod_p", 2, &["mul", "1/2*x", "d", "--mod", "3"]),
    ("mul_not_prime", 2, &["mul", "x", "d", "--mod", "9"]),
    ("centralizer_x_p3", 0, &["centralizer", "x", "--mod", "3", "--degree", "6"]),
    ("centralizer_default_degree", 0, &["centralizer", "x", "--mod", "2"]),
    ("centralizer_x_p3_json", 0, &["centralizer", "x", "--mod", "3", "--degree", "6", "--json"]),
    ("centralizer_x1_a2", 3, &["centralizer", "x1", "--mod", "3", "--degree", "2", "--vars", "2"]),
    ("centralizer_x1_a2_json", 3, &["centralizer", "x1", "--mod", "3", "--degree", "2", "--vars", "2", "--json"]),
    ("centralizer_zero", 2, &["centralizer", "0", "--mod", "3", "--degree", "2"]),
    ("centralizer_missing_mod", 2, &["centralizer", "x"]),
    ("centralizer_parse_error", 2, &["centralizer", "x^", "--mod", "3"]),
    ("decompose_x3_p2", 0, &["decompose", "x^3", "--mod", "2"]),
    ("decompose_mixed_p3", 0, &["decompose", "x^4*d^3 + 2*x + d^5", "--mod", "3"]),
    ("decompose_json", 0, &["decompose", "x^4*d^3 + 2*x + d^5", "--mod", "3", "--json"]),
    ("decompose_zero", 0, &["decompose", "0", "--mod", "5"]),
    ("decompose_two_vars", 2, &["decompose", "x1", "--mod", "3", "--vars", "2"]),
    ("decompose_missing_mod", 2, &["decompose", "x"]),
    ("fraction_witness_d2_d", 0, &["fraction-witness", "d^2", "d", "--mod", "3", "--degree", "3"]),
    ("fraction_witness_json", 0, &["fraction-witness", "d^2", "d", "--mod", "3", "--degree", "3", "--json"]),
    ("fraction_witness_central", 2, &["fraction-witness", "x^3", "d", "--mod", "3", "--degree", "3"]),
    ("fraction_witness_not_found", 5, &["fraction-witness", "d", "x^3", "--mod", "3", "--degree", "2"]),
    ("fraction_witness_not_commuting", 2, &["fraction-witness", "x", "d", "--mod", "3"]),
    ("certify_x_d", 1, &["certify", "x", "d"]),
    ("certify_x_d_json", 1, &["certify", "x", "d", "--json"]),
    ("certify_airy", 1, &["certify", AIRY_P, AIRY_Q]),
    ("certify_dixmier", 0, &["certify", "(d^2 + x^3)^2 + 2*x", "(d^2 + x^3)^3 + 3/2*(x*(d^2 + x^3) + (d^2 + x^3)*x)"]),
    ("certify_no_cross_check", 1, &["certify", "x^2", "d^2", "--no-cross-check"]),
    ("certify_prime_cap", 4, &["certify", "x", "x^2", "--max-primes", "1"]),
    ("certify_rejects_mod", 2, &["certify", "x", "d", "--mod", "3"]),
    ("certify_two_vars", 2, &["certify", "x1", "d2", "--vars", "2"]),
    ("theorem_airy", 4, &["theorem", AIRY_P, AIRY_P, AIRY_Q]),
    ("theorem_polynomials_in_a", 0, &["theorem", "d^2 - x", "(d^2 - x)^2", "(d^2 - x)^3 + 2*(d^2 - x)"]),
    ("theorem_json", 0, &["theorem", "d^2 - x", "(d^2 - x)^2", "(d^2 - x)^3 + 2*(d^2 - x)", "--json"]),
    ("theorem_constant_a", 4, &["theorem", "5", "x", "d"]),
    ("theorem_not_commute", 4, &["theorem", "x", "x^2", "x*d"]),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for &(name, exit, args) in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_weylcent")).args(args).output().expect("run weylcent");
        let stdout = String::from_utf8(out.stdout).expect("utf-8 stdout");
        let stderr = String::from_utf8(out.stderr).expect("utf-8 stderr");
        let code = out.status.code().expect("exit code");
        if code != exit {
            failures.push(format!("{}: exit {code}, expected {} (stderr: {stderr})", name, exit));
        }
        if code == 2 {
            if !stdout.is_empty() || !stderr.starts_with("error: ") {
                failures.push(format!("{}: errors belong on stderr only", name));
            }
        } else if stdout.is_empty() && code != 5 {
            failures.push(format!("{}: empty report", name));
        }
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &stdout).expect("write golden file");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == stdout => {}
            Ok(expected) => {
                failures.push(format!("{}: stdout differs\n--- expected\n{expected}--- actual\n{stdout}", name))
            }
            Err(e) => failures.push(format!("{}: missing golden file {}: {e}", name, path.display())),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_weylcent")).args(args).output().expect("run weylcent");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn documented_examples() {
    assert_eq!(run(&["comm", "d", "x"]), ("1\n".into(), 0));
    assert_eq!(run(&["mul", "d^3", "x^2"]), ("x^2*d^3 + 6*x*d^2 + 6*d\n".into(), 0));
    assert_eq!(run(&["mul", "d^3", "x^2", "--mod", "3"]), ("x^2*d^3\n".into(), 0));
    assert_eq!(run(&["decompose", "x^3", "--mod", "2"]), ("(1,0): x^2\n".into(), 0));

    let (out, code) = run(&["centralizer", "x", "--mod", "3", "--degree", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| !l.starts_with("commutative")).count(), 12);

    let (out, code) = run(&["fraction-witness", "d^2", "d", "--mod", "3", "--degree", "3"]);
    assert_eq!((out.as_str(), code), ("z1 = d^3\nz2 = d^2\n", 0));
}

#[test]
fn centralizer_json_schema() {
    let (out, code) = run(&["centralizer", "x1", "--mod", "3", "--degree", "2", "--vars", "2", "--json"]);
    assert_eq!(code, 3);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["basis", "commutative", "degree", "nvars", "p", "witness"]);
    assert_eq!(v["p"], 3);
    assert_eq!(v["nvars"], 2);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["commutative"], false);
    let basis: Vec<&str> = v["basis"].as_array().unwrap().iter().map(|b| b.as_str().unwrap()).collect();
    assert!(basis.contains(&"x2") && basis.contains(&"d2"));
    let witness = v["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 2);

    // The witness must not commute; check it through the binary itself.
    let (comm, _) =
        run(&["comm", witness[0].as_str().unwrap(), witness[1].as_str().unwrap(), "--vars", "2", "--mod", "3"]);
    assert_ne!(comm.trim(), "0");

    let (out, code) = run(&["centralizer", "x", "--mod", "3", "--degree", "6", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.get("witness").is_none());
    assert_eq!(v["basis"].as_array().unwrap().len(), 12);
}
