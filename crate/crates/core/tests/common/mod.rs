#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use rand::Rng;
use relsolve::relcore::{IndexSet, Relation};

pub fn random_relation<R: Rng>(n: usize, density: f64, rng: &mut R) -> Relation {
    let rows: Vec<Vec<u8>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_bool(density) as u8).collect())
        .collect();
    Relation::from_matrix(&rows, None).unwrap()
}

/// The relation on `1..=n` whose row-major bit pattern is `pattern`.
pub fn relation_from_pattern(n: usize, pattern: u64) -> Relation {
    let rows: Vec<Vec<u8>> = (0..n)
        .map(|i| (0..n).map(|j| (pattern >> (i * n + j) & 1) as u8).collect())
        .collect();
    Relation::from_matrix(&rows, None).unwrap()
}

pub fn all_relations(n: usize) -> impl Iterator<Item = Relation> {
    (0..1u64 << (n * n)).map(move |p| relation_from_pattern(n, p))
}

pub fn numbered(n: usize) -> std::sync::Arc<IndexSet> {
    IndexSet::numbered(n)
}

pub fn as_set(rels: impl IntoIterator<Item = Relation>) -> HashSet<Relation> {
    rels.into_iter().collect()
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}

/// Runs the CLI in-process and returns (exit code, stdout, stderr).
pub fn cli(args: &[&str]) -> (u8, String, String) {
    let argv: Vec<String> = std::iter::once("relsolve")
        .chain(args.iter().copied())
        .map(str::to_string)
        .collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = relsolve::cli::run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}
