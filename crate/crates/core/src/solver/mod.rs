//! Solving `R∘X = S` (and the dual `X∘R = S`).
//!
//! With `A_i` the row support of R, `B_k` the zero rows of column `k` of S
//! and `C_k = ∪_{l ∈ B_k} A_l`, a relation X solves `R∘X = S` iff for every
//! column `k`:
//!
//! * `x_jk = 0` for all `j ∈ C_k`, and
//! * for every `i ∉ B_k` some `j ∈ A_i ∖ C_k` has `x_jk = 1`.
//!
//! The equation is solvable iff no such `A_i ∖ C_k` is empty. Columns are
//! independent, so the whole family is stored as one [`ColumnSpace`] per
//! column and counted or enumerated from there.

mod count;
mod diagnose;
mod enumerate;
mod space;
mod special;
mod witness;

use num_bigint::BigUint;

pub use diagnose::diagnose_unsolvable;
pub use enumerate::Solutions;
pub use space::{ColumnSpace, Orientation, SolutionSpace, SolverConfig};
pub use special::{
    invert, shortcut_refl_trans, solve_functional, solve_via_inverse, FunctionalOutcome,
    Precondition, Shortcut,
};
pub use witness::{UnsolvabilityWitness, WitnessKind};

use crate::bits::BitSet;
use crate::error::Result;
use crate::relcore::{IndexSubset, Relation};
use crate::semiring;

/// Outcome of deciding an equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solvability {
    Solvable(SolutionSpace),
    Unsolvable(UnsolvabilityWitness),
}

impl Solvability {
    pub fn is_solvable(&self) -> bool {
        matches!(self, Solvability::Solvable(_))
    }

    pub fn space(&self) -> Option<&SolutionSpace> {
        match self {
            Solvability::Solvable(space) => Some(space),
            Solvability::Unsolvable(_) => None,
        }
    }

    pub fn into_space(self) -> Option<SolutionSpace> {
        match self {
            Solvability::Solvable(space) => Some(space),
            Solvability::Unsolvable(_) => None,
        }
    }
}

/// The sets `A_i`, `B_k` and `C_k` for a pair `(R, S)`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// `A_i = {j | a_ij = 1}`
    pub a: Vec<IndexSubset>,
    /// `B_k = {i | b_ik = 0}`
    pub b: Vec<IndexSubset>,
    /// `C_k = ∪_{l ∈ B_k} A_l`
    pub c: Vec<IndexSubset>,
}

fn zero_rows_of_columns(s: &Relation) -> Vec<BitSet> {
    s.converse().rows().iter().map(BitSet::complement).collect()
}

fn cover(r: &Relation, rows: &BitSet) -> BitSet {
    let mut c = BitSet::new(r.size());
    for l in rows.ones() {
        c.union_with(r.row(l));
    }
    c
}

pub fn decomposition_sets(r: &Relation, s: &Relation) -> Result<Decomposition> {
    r.same_index(s)?;
    let ix = r.index_set();
    let wrap = |b: BitSet| IndexSubset::new(ix.clone(), b);
    let b_sets = zero_rows_of_columns(s);
    Ok(Decomposition {
        a: r.rows().iter().cloned().map(wrap).collect(),
        c: b_sets.iter().map(|b| wrap(cover(r, b))).collect(),
        b: b_sets.into_iter().map(wrap).collect(),
    })
}

fn build_column(
    r: &Relation,
    k: usize,
    zero_rows: &BitSet,
) -> std::result::Result<ColumnSpace, UnsolvabilityWitness> {
    let forced = cover(r, zero_rows);
    let mut constraints = Vec::new();
    for i in zero_rows.complement().ones() {
        let mut d = r.row(i).clone();
        d.difference_with(&forced);
        if d.is_empty() {
            return Err(UnsolvabilityWitness::Theorem4 { k, i });
        }
        constraints.push(d);
    }
    Ok(ColumnSpace::new(r.index_set(), k, forced, constraints))
}

/// Decides `R∘X = S` and, when solvable, describes every solution.
///
/// An unsolvable instance reports the first failing `(k, i)` in column-major
/// order as a [`UnsolvabilityWitness::Theorem4`].
pub fn solution_space(r: &Relation, s: &Relation) -> Result<Solvability> {
    r.same_index(s)?;
    let zero_rows = zero_rows_of_columns(s);
    let build = |(k, z): (usize, &BitSet)| build_column(r, k, z);
    #[cfg(feature = "parallel")]
    let columns: Vec<_> = {
        use rayon::prelude::*;
        zero_rows.par_iter().enumerate().map(build).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let columns: Vec<_> = zero_rows.iter().enumerate().map(build).collect();
    let columns: std::result::Result<Vec<_>, _> = columns.into_iter().collect();
    Ok(match columns {
        Ok(columns) => Solvability::Solvable(SolutionSpace::new(
            r.index_set().clone(),
            columns,
            Orientation::Left,
        )),
        Err(w) => Solvability::Unsolvable(w),
    })
}

/// Exact number of solutions in `space`.
pub fn count_solutions(space: &SolutionSpace) -> BigUint {
    space.count()
}

/// Every solution in `space`, in canonical order.
pub fn enumerate_solutions(space: &SolutionSpace) -> Solutions<'_> {
    space.solutions()
}

/// The solution containing every other solution.
pub fn greatest_solution(space: &SolutionSpace) -> Relation {
    space.greatest()
}

/// Whether `R∘X = S`.
pub fn verify(r: &Relation, x: &Relation, s: &Relation) -> Result<bool> {
    r.same_index(x)?;
    r.same_index(s)?;
    Ok(semiring::compose(r, x)? == *s)
}

/// Solves `X∘R = S` through `R'∘Y = S'`, `X = Y'` (primes denote converses).
///
/// The returned space yields relations X directly. A witness refers to the
/// transposed problem `(R', S')`.
pub fn solve_right(r: &Relation, s: &Relation) -> Result<Solvability> {
    Ok(match solution_space(&r.converse(), &s.converse())? {
        Solvability::Solvable(space) => {
            Solvability::Solvable(space.with_orientation(Orientation::Right))
        }
        unsolvable => unsolvable,
    })
}
