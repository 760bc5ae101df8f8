mod common;

use std::fs;
use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relsolve::oracle::brute_force_solutions;
use relsolve::relcore::io;
use relsolve::semiring::compose;

use common::*;

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    fs::read_to_string(data(name)).unwrap()
}

#[test]
fn count_example() {
    assert_eq!(
        cli(&["count", &path("ex1_r.mat"), &path("ex1_s.mat")]),
        (0, "4\n".into(), String::new())
    );
}

#[test]
fn explain_golden() {
    let (code, out, _) = cli(&["solve", &path("ex1_r.mat"), &path("ex1_s.mat"), "--explain"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("ex2_explain.golden"));
}

#[test]
fn enumerate_pairs_golden() {
    let args = [
        "enumerate",
        &path("ex1_r.mat"),
        &path("ex1_s.mat"),
        "--format",
        "pairs",
    ];
    let (code, out, _) = cli(&args);
    assert_eq!(code, 0);
    assert_eq!(out, golden("ex1_enumerate_pairs.golden"));
    assert_eq!(cli(&args).1, out, "output is byte-stable");
    let (_, limited, _) = cli(&[
        "enumerate",
        &path("ex1_r.mat"),
        &path("ex1_s.mat"),
        "--limit",
        "1",
    ]);
    assert_eq!(limited, "0 0 0\n1 1 0\n0 0 0\n");
}

#[test]
fn identity_solve_golden() {
    let (code, out, _) = cli(&["solve", &path("id3.mat"), &path("id3.mat")]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("id3_solve.golden"));
}

#[test]
fn product_golden() {
    let (code, out, _) = cli(&["product", &path("prod_r.mat"), &path("prod_s.mat")]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("product.golden"));
}

#[test]
fn functional_and_inverse_commands() {
    let (code, out, _) = cli(&[
        "solve-functional",
        &path("thm2_r.pairs"),
        &path("thm2_s.pairs"),
    ]);
    assert_eq!(code, 0);
    assert!(
        out.ends_with("unique solution:\n0 0 1\n1 1 0\n0 0 1\n"),
        "{out}"
    );
    let (code, out, _) = cli(&["invert", &path("thm2_r.pairs")]);
    assert_eq!((code, out.as_str()), (0, "0 0 1\n1 0 0\n0 1 0\n"));
    let (code, out, _) = cli(&["invert", &path("ex1_r.mat")]);
    assert_eq!((code, out.as_str()), (2, "NOT INVERTIBLE\n"));
    let (code, out, _) = cli(&["solve-functional", &path("ex1_r.mat"), &path("ex1_s.mat")]);
    assert_eq!((code, out.as_str()), (2, "NOT FUNCTIONAL row=3\n"));
}

#[test]
fn verdict_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.pairs");
    fs::write(&x, "elements: 1 2 3\n2 1\n2 2\n").unwrap();
    let x = x.to_string_lossy().into_owned();
    assert_eq!(
        cli(&["verify", &path("ex1_r.mat"), &x, &path("ex1_s.mat")]).1,
        "OK\n"
    );
    let (code, out, _) = cli(&[
        "verify",
        &path("ex1_r.mat"),
        &path("id3.mat"),
        &path("ex1_s.mat"),
    ]);
    assert_eq!((code, out.as_str()), (2, "FAIL\n"));

    let zero = dir.path().join("zero.mat");
    fs::write(&zero, "0 0 0\n0 0 0\n0 0 0\n").unwrap();
    let zero = zero.to_string_lossy().into_owned();
    let (code, out, _) = cli(&["solve", &zero, &path("ex1_s.mat")]);
    assert_eq!((code, out.as_str()), (2, "UNSOLVABLE\nTHEOREM4 k=1 i=1\n"));
    let (code, out, _) = cli(&["diagnose", &zero, &path("ex1_s.mat")]);
    assert_eq!(code, 2);
    assert!(
        out.starts_with("LEMMA(i) k=1 p=1\nLEMMA(i) k=3 p=1\n"),
        "{out}"
    );
    assert_eq!(cli(&["count", &zero, &path("ex1_s.mat")]).0, 2);
    let (code, out, _) = cli(&["diagnose", &path("ex1_r.mat"), &path("ex1_s.mat")]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (code, out, _) = cli(&["shortcut", &path("id3.mat"), &path("ex1_s.mat")]);
    assert_eq!(
        (code, out.as_str()),
        (2, "NOT APPLICABLE: R is not a subset of S\n")
    );
}

#[test]
fn parse_errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mat");
    fs::write(&bad, "0 1\n1 0 1\n").unwrap();
    let (code, out, err) = cli(&["compose", &bad.to_string_lossy(), &path("id3.mat")]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("bad.mat:2:"), "{err}");
    let (code, _, err) = cli(&["compose", &path("ex1_r.mat"), &path("prod_r.mat")]);
    assert_eq!(code, 1);
    assert!(err.contains("different index sets"), "{err}");
    let (code, _, err) = cli(&["compose", &path("nope.mat"), &path("id3.mat")]);
    assert_eq!(code, 1);
    assert!(err.contains("nope.mat"), "{err}");
    // arity is checked before anything is read
    assert_eq!(cli(&["verify", &path("nope.mat")]).0, 1);
    assert_eq!(cli(&["frobnicate"]).0, 1);
}

#[test]
fn solve_right_and_oracle_commands() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: String| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };
    let r = io::parse_matrix(&golden("ex1_r.mat")).unwrap();
    let s = io::parse_matrix(&golden("ex1_s.mat")).unwrap();
    let rt = write("rt.mat", io::write_matrix(&r.converse()));
    let st = write("st.mat", io::write_matrix(&s.converse()));
    let (code, out, _) = cli(&["solve-right", &rt, &st]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("SOLVABLE\nrow 1: zero={1} constraints=[{2}]\n"),
        "{out}"
    );
    assert!(out.ends_with("solutions: 4\n"));
    let (code, out, _) = cli(&["oracle", &path("ex1_r.mat"), &path("ex1_s.mat")]);
    assert_eq!(code, 0);
    assert_eq!(out.split("\n\n").count(), 4);
    let (code, out, _) = cli(&["oracle", &rt, &st, "--right", "--format", "pairs"]);
    assert_eq!(code, 0);
    assert_eq!(out.split("\n\n").count(), 4);
}

#[test]
fn exit_two_iff_oracle_finds_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let dir = tempfile::tempdir().unwrap();
    for round in 0..150 {
        let n = 1 + round % 3;
        let r = random_relation(n, 0.4, &mut rng);
        let s = if round % 2 == 0 {
            compose(&r, &random_relation(n, 0.4, &mut rng)).unwrap()
        } else {
            random_relation(n, 0.4, &mut rng)
        };
        let rp = dir.path().join("r.mat");
        let sp = dir.path().join("s.mat");
        fs::write(&rp, io::write_matrix(&r)).unwrap();
        fs::write(&sp, io::write_matrix(&s)).unwrap();
        let (code, _, _) = cli(&["solve", &rp.to_string_lossy(), &sp.to_string_lossy()]);
        let none = brute_force_solutions(&r, &s).unwrap().is_empty();
        assert_eq!(code == 2, none, "R={r:?} S={s:?}");
        assert!(code == 0 || code == 2);
    }
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_relsolve");
    let out = Command::new(bin)
        .args(["count", &path("ex1_r.mat"), &path("ex1_s.mat")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"4\n");
    let out = Command::new(bin)
        .args(["invert", &path("ex1_r.mat")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
