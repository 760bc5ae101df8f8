//! Brute-force reference implementations.
//!
//! Nothing here goes through the word-parallel kernel: relations are read
//! entry by entry into plain `bool` grids and the set-level definition of
//! composition (`∃m: (k,m) ∈ R ∧ (m,l) ∈ S`) is checked directly.

use crate::error::{Error, Result};
use crate::relcore::Relation;

/// Default carrier size limit for [`brute_force_solutions`]: `2^16` candidates.
pub const DEFAULT_CAP: usize = 4;

fn grid(r: &Relation) -> Vec<Vec<bool>> {
    let n = r.size();
    (0..n)
        .map(|i| (0..n).map(|j| r.get(i, j)).collect())
        .collect()
}

fn from_grid(template: &Relation, g: &[Vec<bool>]) -> Relation {
    let rows: Vec<Vec<u8>> = g
        .iter()
        .map(|row| row.iter().map(|&b| b as u8).collect())
        .collect();
    Relation::from_matrix(&rows, Some(template.index_set().labels().to_vec()))
        .expect("square 0/1 grid")
}

/// Set-level composition by triple loop.
pub fn naive_compose(r: &Relation, s: &Relation) -> Result<Relation> {
    if r.index_set().labels() != s.index_set().labels() {
        return Err(Error::IndexSetMismatch);
    }
    let (a, b) = (grid(r), grid(s));
    let n = a.len();
    let mut c = vec![vec![false; n]; n];
    for k in 0..n {
        for l in 0..n {
            for m in 0..n {
                if a[k][m] && b[m][l] {
                    c[k][l] = true;
                }
            }
        }
    }
    Ok(from_grid(r, &c))
}

/// Reflexive-free transitive closure by Warshall's algorithm.
pub fn transitive_closure(r: &Relation) -> Relation {
    let mut g = grid(r);
    let n = g.len();
    for m in 0..n {
        let via = g[m].clone();
        for row in g.iter_mut().filter(|row| row[m]) {
            for (cell, &hop) in row.iter_mut().zip(&via) {
                *cell |= hop;
            }
        }
    }
    from_grid(r, &g)
}

#[derive(Clone, Copy)]
enum Side {
    /// `R∘X = S`
    Left,
    /// `X∘R = S`
    Right,
}

fn check(side: Side, a: &[Vec<bool>], b: &[Vec<bool>], pattern: u64) -> bool {
    let n = a.len();
    let x = |i: usize, j: usize| pattern >> (i * n + j) & 1 == 1;
    for i in 0..n {
        for j in 0..n {
            let related = (0..n).any(|m| match side {
                Side::Left => a[i][m] && x(m, j),
                Side::Right => x(i, m) && a[m][j],
            });
            if related != b[i][j] {
                return false;
            }
        }
    }
    true
}

fn search(side: Side, r: &Relation, s: &Relation, cap: usize) -> Result<Vec<Relation>> {
    if r.index_set().labels() != s.index_set().labels() {
        return Err(Error::IndexSetMismatch);
    }
    let n = r.size();
    if n > cap || n * n >= 64 {
        return Err(Error::TooLarge { size: n, cap });
    }
    let (a, b) = (grid(r), grid(s));
    let candidates = 1u64 << (n * n);
    #[cfg(feature = "parallel")]
    let hits: Vec<u64> = {
        use rayon::prelude::*;
        (0..candidates)
            .into_par_iter()
            .filter(|&p| check(side, &a, &b, p))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let hits: Vec<u64> = (0..candidates)
        .filter(|&p| check(side, &a, &b, p))
        .collect();
    Ok(hits
        .into_iter()
        .map(|p| {
            let g: Vec<Vec<bool>> = (0..n)
                .map(|i| (0..n).map(|j| p >> (i * n + j) & 1 == 1).collect())
                .collect();
            from_grid(r, &g)
        })
        .collect())
}

/// Every X with `R∘X = S`, by trying all `2^(n²)` candidates. Results are
/// in increasing order of the row-major bit pattern.
pub fn brute_force_solutions(r: &Relation, s: &Relation) -> Result<Vec<Relation>> {
    search(Side::Left, r, s, DEFAULT_CAP)
}

pub fn brute_force_solutions_capped(
    r: &Relation,
    s: &Relation,
    cap: usize,
) -> Result<Vec<Relation>> {
    search(Side::Left, r, s, cap)
}

/// Every X with `X∘R = S`.
pub fn brute_force_right_solutions(
    r: &Relation,
    s: &Relation,
    cap: usize,
) -> Result<Vec<Relation>> {
    search(Side::Right, r, s, cap)
}
