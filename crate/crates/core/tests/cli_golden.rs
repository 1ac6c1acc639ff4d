use std::path::PathBuf;
use std::process::Command;

use hqforms::{HermitianForm, RationalMap};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/examples").join(name)
}

fn hqforms(args: &[&str]) -> (i32, String, String) {
    let args: Vec<String> = args
        .iter()
        .map(|a| {
            let p = data(a);
            if p.exists() {
                p.display().to_string()
            } else {
                a.to_string()
            }
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_hqforms")).args(&args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn after_first_line(s: &str) -> &str {
    &s[s.find('\n').unwrap() + 1..]
}

#[test]
fn verify_whitney() {
    let (code, out, _) = hqforms(&["verify", "whitney.map"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ok: Q(2,0) -> Q(3,0), degree 2\n"));
    let q = HermitianForm::parse(after_first_line(&out)).unwrap();
    assert_eq!(q, HermitianForm::linear(hqforms::MatrixK::identity(3)).unwrap());
}

#[test]
fn quotient_of_non_map_is_negative() {
    let (code, out, err) = hqforms(&["quotient", "bad.map"]);
    assert_eq!(code, 1);
    assert_eq!(out, "not divisible\n");
    assert!(err.is_empty());
}

#[test]
fn inertia_of_map_form() {
    let (code, out, _) = hqforms(&["inertia", "whitney.map"]);
    assert_eq!((code, out.as_str()), (0, "(3, 1, 2)\n"));
    let (code, out, _) = hqforms(&["inertia", "sphere.form"]);
    assert_eq!((code, out.as_str()), (0, "(2, 1, 0)\n"));
}

#[test]
fn multiply_parses_back() {
    let (code, out, _) = hqforms(&["multiply", "j_delta.form", "a_delta.form"]);
    assert_eq!(code, 0);
    let b = HermitianForm::parse(&out).unwrap();
    assert_eq!(b.d(), 2);
    assert_eq!(b.inertia().to_string(), "(2, 2, 2)");
}

#[test]
fn canonical_nilpotent_block() {
    let (code, out, _) = hqforms(&["canonical", "j_delta.form", "a_delta.form"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("delta3 + alpha=0\n# witness columns\n"));
}

#[test]
fn canonical_against() {
    let (code, out, _) = hqforms(&["canonical", "sphere.form", "a_first.form", "--against", "sphere.form", "a_first.form"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("congruent\n"));
    let (code, out, _) = hqforms(&["canonical", "sphere.form", "a_first.form", "--against", "j_delta.form", "a_delta.form"]);
    assert_eq!(code, 1);
    assert!(out.ends_with("not congruent\n"));
}

#[test]
fn diagonalizability() {
    let (code, out, _) = hqforms(&["diag", "j_delta.form", "a_delta.form"]);
    assert_eq!((code, out.as_str()), (1, "not diagonalizable\n"));
    let (code, out, _) = hqforms(&["diag", "sphere.form", "a_first.form"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("diagonalizable\n# witness columns\n"));
}

#[test]
fn classify_deg2_and_q21() {
    let (code, out, _) = hqforms(&["classify-deg2", "deg2_01.map"]);
    assert_eq!((code, out.as_str()), (0, "t = (0, 1)\n"));
    let (code, out, _) = hqforms(&["classify-q21", "q21_iii.map"]);
    assert_eq!((code, out.as_str()), (0, "6.1(iii)\n"));
}

#[test]
fn decompose_parses_back() {
    let (code, out, _) = hqforms(&["decompose", "sphere.form", "--chart", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# inertia (2, 1, 0)\n"));
    let map = RationalMap::parse(&out).unwrap();
    map.verify().unwrap();
    assert!(out.contains("# chart 2: component 3 = 1\n"));
}

#[test]
fn enumerate_fewnomials_small() {
    let (code, out, _) = hqforms(&["enumerate-fewnomials", "--max-degree", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.starts_with("(3, 0) x + y + t\n"));
}

#[test]
fn catalog_commands() {
    let (code, out, _) = hqforms(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("R4.2")));
    let (code, out, _) = hqforms(&["catalog", "verify", "--id", "T1.1.iii"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("0 failed\n"));
    let (code, _, err) = hqforms(&["catalog", "verify", "--id", "nope"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: unknown catalog id"));
}

#[test]
fn input_errors() {
    let (code, out, err) = hqforms(&["verify", "missing.map"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error: cannot read"));
    let (code, _, _) = hqforms(&["verify", "sphere.form"]);
    assert_eq!(code, 2);
    let (code, _, _) = hqforms(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn run_in_process() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let path = data("whitney.map");
    let code = hqforms::cli::run(["hqforms", "inertia", path.to_str().unwrap()], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "(3, 1, 2)\n");
}
