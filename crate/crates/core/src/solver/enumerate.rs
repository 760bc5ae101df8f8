//! Ordered enumeration of a [`SolutionSpace`].
//!
//! Per column, valid assignments come in increasing order of the column
//! read as a binary number with position 0 least significant. Columns are
//! combined odometer-style with column 0 varying fastest.

use super::space::{ColumnSpace, SolutionSpace, SolverConfig};
use crate::bits::BitSet;
use crate::relcore::Relation;

/// Cursor over the valid assignments of one column.
pub(crate) trait ColumnWalk {
    fn first_valid(&self, config: &SolverConfig) -> Option<BitSet>;
    fn next_valid(&self, current: &BitSet, config: &SolverConfig) -> Option<BitSet>;
}

fn use_counting(col: &ColumnSpace, config: &SolverConfig) -> bool {
    col.free_positions().len() <= config.enumeration_threshold.min(63)
}

impl ColumnWalk for ColumnSpace {
    fn first_valid(&self, config: &SolverConfig) -> Option<BitSet> {
        if use_counting(self, config) {
            counting_from(self, 0)
        } else {
            successor(self, None)
        }
    }

    fn next_valid(&self, current: &BitSet, config: &SolverConfig) -> Option<BitSet> {
        if use_counting(self, config) {
            let mask = to_mask(self, current);
            counting_from(self, mask + 1)
        } else {
            successor(self, Some(current))
        }
    }
}

fn from_mask(col: &ColumnSpace, mask: u64) -> BitSet {
    let free = col.free_positions();
    let len = col.free().members().len();
    BitSet::from_indices(
        len,
        free.iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p),
    )
}

fn to_mask(col: &ColumnSpace, y: &BitSet) -> u64 {
    col.free_positions()
        .iter()
        .enumerate()
        .filter(|(_, &p)| y.contains(p))
        .fold(0, |m, (b, _)| m | 1 << b)
}

/// Binary counting over subsets of the free cells, filtered by the
/// constraints.
fn counting_from(col: &ColumnSpace, start: u64) -> Option<BitSet> {
    let end = 1u64 << col.free_positions().len();
    (start..end)
        .map(|mask| from_mask(col, mask))
        .find(|y| col.constraint_bits().all(|d| y.intersects(d)))
}

/// Every constraint meets `chosen ∪ open`.
fn extendable(col: &ColumnSpace, chosen: &BitSet, open: &BitSet) -> bool {
    let mut reach = chosen.clone();
    reach.union_with(open);
    col.constraint_bits().all(|d| d.intersects(&reach))
}

/// Smallest valid extension of `chosen` where the free cells
/// `free[0..upto]` are still undecided. Requires `extendable`.
fn minimal_completion(col: &ColumnSpace, mut chosen: BitSet, upto: usize) -> BitSet {
    let free = col.free_positions();
    let mut open = BitSet::from_indices(chosen.len(), free[..upto].iter().copied());
    for q in (0..upto).rev() {
        open.remove(free[q]);
        if !extendable(col, &chosen, &open) {
            chosen.insert(free[q]);
        }
    }
    chosen
}

/// The least valid assignment greater than `current` (or the least valid
/// assignment overall). The next larger number keeps all bits above some
/// 0-bit of `current`, raises that bit, and minimises the bits below it; the
/// lowest raisable bit gives the smallest result.
fn successor(col: &ColumnSpace, current: Option<&BitSet>) -> Option<BitSet> {
    let free = col.free_positions();
    let len = col.free().members().len();
    let Some(current) = current else {
        let open = col.free().members().clone();
        let none = BitSet::new(len);
        return extendable(col, &none, &open).then(|| minimal_completion(col, none, free.len()));
    };
    let mut below = BitSet::new(len);
    for (idx, &p) in free.iter().enumerate() {
        if !current.contains(p) {
            let mut high = current.clone();
            high.difference_with(&below);
            high.insert(p);
            if extendable(col, &high, &below) {
                return Some(minimal_completion(col, high, idx));
            }
        }
        below.insert(p);
    }
    None
}

/// Iterator over every member of a [`SolutionSpace`], each exactly once.
pub struct Solutions<'a> {
    space: &'a SolutionSpace,
    config: SolverConfig,
    cursors: Vec<BitSet>,
    state: State,
}

enum State {
    Fresh,
    Running,
    Done,
}

impl<'a> Solutions<'a> {
    pub(crate) fn new(space: &'a SolutionSpace, config: SolverConfig) -> Self {
        Solutions {
            space,
            config,
            cursors: Vec::new(),
            state: State::Fresh,
        }
    }
}

impl Iterator for Solutions<'_> {
    type Item = Relation;

    fn next(&mut self) -> Option<Relation> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                let firsts: Option<Vec<BitSet>> = self
                    .space
                    .columns()
                    .iter()
                    .map(|c| c.first_valid(&self.config))
                    .collect();
                match firsts {
                    Some(c) => self.cursors = c,
                    None => {
                        self.state = State::Done;
                        return None;
                    }
                }
                self.state = State::Running;
            }
            State::Running => {
                let mut k = 0;
                loop {
                    if k == self.cursors.len() {
                        self.state = State::Done;
                        return None;
                    }
                    let col = &self.space.columns()[k];
                    if let Some(next) = col.next_valid(&self.cursors[k], &self.config) {
                        self.cursors[k] = next;
                        break;
                    }
                    self.cursors[k] = col.first_valid(&self.config).expect("column had a value");
                    k += 1;
                }
            }
        }
        Some(self.space.assemble(&self.cursors))
    }
}
