//! Fast paths: functional left factors, invertible left factors, and the
//! reflexive/transitive shortcut.

use std::fmt;

use super::space::{ColumnSpace, Orientation, SolutionSpace};
use super::witness::UnsolvabilityWitness;
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::relcore::Relation;
use crate::semiring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionalOutcome {
    Solved(SolutionSpace),
    Unsolvable(UnsolvabilityWitness),
    /// Row `row` of R does not contain exactly one 1.
    NotFunctional {
        row: usize,
    },
}

/// The map `f` with `a_ij = δ_{j,f(i)}`, or the first row that breaks it.
fn as_function(r: &Relation) -> std::result::Result<Vec<usize>, usize> {
    r.rows()
        .iter()
        .enumerate()
        .map(|(i, row)| match (row.count(), row.first()) {
            (1, Some(j)) => Ok(j),
            _ => Err(i),
        })
        .collect()
}

/// Solves `R∘X = S` when R is the graph of a map `f`.
///
/// Solvable iff rows `k`, `l` of S agree whenever `f(k) = f(l)`; the
/// solutions are exactly the X whose row `f(i)` equals row `i` of S, with
/// rows outside the image of `f` unconstrained. A disagreement is reported
/// as a [`UnsolvabilityWitness::LemmaII`] (equal rows of R).
pub fn solve_functional(r: &Relation, s: &Relation) -> Result<FunctionalOutcome> {
    r.same_index(s)?;
    let f = match as_function(r) {
        Ok(f) => f,
        Err(row) => return Ok(FunctionalOutcome::NotFunctional { row }),
    };
    let n = r.size();
    let mut preimage: Vec<Option<usize>> = vec![None; n];
    for (i, &fi) in f.iter().enumerate() {
        match preimage[fi] {
            None => preimage[fi] = Some(i),
            Some(k) if s.row(k) != s.row(i) => {
                let p = (0..n)
                    .find(|&p| s.get(k, p) != s.get(i, p))
                    .expect("rows differ");
                return Ok(FunctionalOutcome::Unsolvable(
                    UnsolvabilityWitness::LemmaII { k, l: i, p },
                ));
            }
            Some(_) => {}
        }
    }
    // Column k of X: x_{f(i),k} = b_ik for every i, everything else free.
    let columns = (0..n)
        .map(|k| {
            let mut zero = BitSet::new(n);
            let mut ones = Vec::new();
            for (i, &fi) in f.iter().enumerate() {
                if s.get(i, k) {
                    ones.push(BitSet::from_indices(n, [fi]));
                } else {
                    zero.insert(fi);
                }
            }
            ColumnSpace::new(r.index_set(), k, zero, ones)
        })
        .collect();
    Ok(FunctionalOutcome::Solved(SolutionSpace::new(
        r.index_set().clone(),
        columns,
        Orientation::Left,
    )))
}

/// The `⊙`-inverse of a permutation matrix (its transpose).
///
/// Fails with [`Error::NotInvertible`] unless every row and every column
/// holds exactly one 1.
pub fn invert(r: &Relation) -> Result<Relation> {
    let t = r.converse();
    let single = |rows: &[BitSet]| rows.iter().all(|row| row.count() == 1);
    if single(r.rows()) && single(t.rows()) {
        Ok(t)
    } else {
        Err(Error::NotInvertible)
    }
}

/// The unique solution `R⁻¹ ⊙ S` for invertible R.
pub fn solve_via_inverse(r: &Relation, s: &Relation) -> Result<Relation> {
    r.same_index(s)?;
    semiring::compose(&invert(r)?, s)
}

/// The hypothesis of the reflexive/transitive shortcut that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    NotSubset,
    NotReflexive,
    NotTransitive,
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Precondition::NotSubset => "R is not a subset of S",
            Precondition::NotReflexive => "R is not reflexive",
            Precondition::NotTransitive => "S is not transitive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shortcut {
    Solved(Relation),
    NotApplicable(Precondition),
}

/// For reflexive `R ⊆ S` with S transitive, `X = Δ ∪ (S ∖ R)` solves
/// `R∘X = S`.
pub fn shortcut_refl_trans(r: &Relation, s: &Relation) -> Result<Shortcut> {
    r.same_index(s)?;
    if !r.is_subset(s) {
        return Ok(Shortcut::NotApplicable(Precondition::NotSubset));
    }
    if !r.is_reflexive() {
        return Ok(Shortcut::NotApplicable(Precondition::NotReflexive));
    }
    if !semiring::compose(s, s)?.is_subset(s) {
        return Ok(Shortcut::NotApplicable(Precondition::NotTransitive));
    }
    let rows = s
        .rows()
        .iter()
        .zip(r.rows())
        .enumerate()
        .map(|(i, (srow, rrow))| {
            let mut x = srow.clone();
            x.difference_with(rrow);
            x.insert(i);
            x
        })
        .collect();
    Ok(Shortcut::Solved(Relation::from_rows(
        r.index_set().clone(),
        rows,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcore::IndexSet;
    use crate::solver::{solution_space, verify};

    fn thm2_example() -> (Relation, Relation) {
        let ix = IndexSet::numbered(3);
        let r =
            Relation::from_label_pairs(ix.clone(), [("1", "2"), ("2", "3"), ("3", "1")]).unwrap();
        let s = Relation::from_label_pairs(ix, [("1", "1"), ("1", "2"), ("2", "3"), ("3", "3")])
            .unwrap();
        (r, s)
    }

    fn expected_x(ix: &std::sync::Arc<IndexSet>) -> Relation {
        Relation::from_label_pairs(ix.clone(), [("1", "3"), ("2", "1"), ("2", "2"), ("3", "3")])
            .unwrap()
    }

    #[test]
    fn functional_example_has_unique_solution() {
        let (r, s) = thm2_example();
        let FunctionalOutcome::Solved(space) = solve_functional(&r, &s).unwrap() else {
            panic!("expected a solution space");
        };
        let x = expected_x(r.index_set());
        assert_eq!(
            x.to_matrix(),
            vec![vec![0, 0, 1], vec![1, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(space.unique_solution(), Some(x.clone()));
        assert_eq!(solve_via_inverse(&r, &s).unwrap(), x);
        assert_eq!(solution_space(&r, &s).unwrap().into_space().unwrap(), space);
    }

    #[test]
    fn functional_rejects_non_functional() {
        let r = Relation::from_matrix(&[[0u8, 1], [1, 1]], None).unwrap();
        assert_eq!(
            solve_functional(&r, &r).unwrap(),
            FunctionalOutcome::NotFunctional { row: 1 }
        );
    }

    #[test]
    fn functional_conflict_is_lemma_ii() {
        // f(1) = f(2) = 1 but rows 1, 2 of S differ in column 2.
        let r = Relation::from_matrix(&[[1u8, 0], [1, 0]], None).unwrap();
        let s = Relation::from_matrix(&[[1u8, 1], [1, 0]], None).unwrap();
        let got = solve_functional(&r, &s).unwrap();
        let w = UnsolvabilityWitness::LemmaII { k: 0, l: 1, p: 1 };
        assert_eq!(got, FunctionalOutcome::Unsolvable(w));
        assert!(w.holds(&r, &s));
    }

    #[test]
    fn non_surjective_map_leaves_rows_free() {
        // f = (1 ↦ 1, 2 ↦ 1): row 2 of X is unconstrained.
        let r = Relation::from_matrix(&[[1u8, 0], [1, 0]], None).unwrap();
        let s = Relation::from_matrix(&[[0u8, 1], [0, 1]], None).unwrap();
        let FunctionalOutcome::Solved(space) = solve_functional(&r, &s).unwrap() else {
            panic!()
        };
        assert_eq!(space.count(), num_bigint::BigUint::from(4u32));
    }

    #[test]
    fn invert_cases() {
        let (r, _) = thm2_example();
        let inv = invert(&r).unwrap();
        let expected =
            Relation::from_label_pairs(r.index_set().clone(), [("2", "1"), ("3", "2"), ("1", "3")])
                .unwrap();
        assert_eq!(inv, expected);
        let id = Relation::identity(r.index_set().clone());
        assert_eq!(semiring::compose(&r, &inv).unwrap(), id);
        assert_eq!(semiring::compose(&inv, &r).unwrap(), id);
        assert_eq!(invert(&id).unwrap(), id);
        let ex1 = Relation::from_matrix(&[[0u8, 1, 0], [1, 0, 0], [0, 1, 1]], None).unwrap();
        assert_eq!(invert(&ex1).unwrap_err(), Error::NotInvertible);
        assert_eq!(
            solve_via_inverse(&ex1, &ex1).unwrap_err(),
            Error::NotInvertible
        );
        assert_eq!(solve_via_inverse(&id, &ex1).unwrap(), ex1);
    }

    #[test]
    fn shortcut_cases() {
        let ix = IndexSet::numbered(3);
        let id = Relation::identity(ix.clone());
        let full = Relation::full(ix.clone());
        assert_eq!(
            shortcut_refl_trans(&id, &full).unwrap(),
            Shortcut::Solved(full.clone())
        );
        assert_eq!(
            shortcut_refl_trans(&id, &id).unwrap(),
            Shortcut::Solved(id.clone())
        );
        assert!(verify(&id, &full, &full).unwrap());
        assert_eq!(
            shortcut_refl_trans(&full, &id).unwrap(),
            Shortcut::NotApplicable(Precondition::NotSubset)
        );
        let empty = Relation::empty(ix.clone());
        assert_eq!(
            shortcut_refl_trans(&empty, &full).unwrap(),
            Shortcut::NotApplicable(Precondition::NotReflexive)
        );
        // 1→2, 2→3 without 1→3
        let chain = Relation::from_label_pairs(
            ix,
            [("1", "1"), ("2", "2"), ("3", "3"), ("1", "2"), ("2", "3")],
        )
        .unwrap();
        assert_eq!(
            shortcut_refl_trans(&id, &chain).unwrap(),
            Shortcut::NotApplicable(Precondition::NotTransitive)
        );
    }
}
