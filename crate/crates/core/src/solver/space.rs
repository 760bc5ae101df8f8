use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use super::{count, enumerate};
use crate::bits::BitSet;
use crate::relcore::{IndexSet, IndexSubset, Relation};

/// Tuning knobs for counting and enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Columns with at most this many non-forced cells are enumerated by
    /// plain binary counting; larger ones by successor search.
    pub enumeration_threshold: usize,
    /// Columns with at most this many constraints are counted by
    /// inclusion–exclusion; larger ones by memoized branching.
    pub inclusion_exclusion_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            enumeration_threshold: 20,
            inclusion_exclusion_limit: 30,
        }
    }
}

/// Whether a space describes solutions of `R∘X = S` or of `X∘R = S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `R∘X = S`; columns are columns of X.
    Left,
    /// `X∘R = S`, solved as `R'∘Y = S'` with `X = Y'`; columns of Y are rows of X.
    Right,
}

/// All valid assignments of one column `k` of X.
///
/// A column vector `Y ⊆ I` is valid iff it avoids `forced_zero` (= `C_k`)
/// and meets every constraint set (each some `A_i ∖ C_k` with `b_ik = 1`).
#[derive(Clone, PartialEq, Eq)]
pub struct ColumnSpace {
    column: usize,
    forced_zero: IndexSubset,
    constraints: Vec<IndexSubset>,
    free: IndexSubset,
    free_positions: Vec<usize>,
}

fn lex_cmp(a: &BitSet, b: &BitSet) -> Ordering {
    a.ones().cmp(b.ones())
}

/// Removes duplicates and any set that contains another member of the
/// family, then sorts by element sequence.
pub(crate) fn absorb(mut sets: Vec<BitSet>) -> Vec<BitSet> {
    sets.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| lex_cmp(a, b)));
    sets.dedup();
    let mut kept: Vec<BitSet> = Vec::with_capacity(sets.len());
    for d in sets {
        // `kept` holds only sets no larger than `d`.
        if !kept.iter().any(|k| k.is_subset(&d)) {
            kept.push(d);
        }
    }
    kept.sort_by(lex_cmp);
    kept
}

impl ColumnSpace {
    /// Normalizes the constraint family: duplicates removed, supersets of
    /// other constraints absorbed, remainder sorted by element sequence.
    pub(crate) fn new(
        index: &Arc<IndexSet>,
        column: usize,
        forced_zero: BitSet,
        constraints: Vec<BitSet>,
    ) -> Self {
        let kept = absorb(constraints);
        let free = forced_zero.complement();
        let free_positions = free.ones().collect();
        let wrap = |b: BitSet| IndexSubset::new(index.clone(), b);
        ColumnSpace {
            column,
            forced_zero: wrap(forced_zero),
            constraints: kept.into_iter().map(wrap).collect(),
            free: wrap(free),
            free_positions,
        }
    }

    pub fn column(&self) -> usize {
        self.column
    }

    /// `C_k`: cells of this column that every solution leaves 0.
    pub fn forced_zero(&self) -> &IndexSubset {
        &self.forced_zero
    }

    /// The absorbed cover constraints; a valid column meets each of them.
    pub fn constraints(&self) -> &[IndexSubset] {
        &self.constraints
    }

    /// `I ∖ C_k`: cells not forced to 0.
    pub fn free(&self) -> &IndexSubset {
        &self.free
    }

    pub(crate) fn free_positions(&self) -> &[usize] {
        &self.free_positions
    }

    pub(crate) fn constraint_bits(&self) -> impl Iterator<Item = &BitSet> + '_ {
        self.constraints.iter().map(IndexSubset::members)
    }

    /// Whether `y` (a column of X) is a valid assignment.
    pub fn accepts(&self, y: &BitSet) -> bool {
        !y.intersects(self.forced_zero.members()) && self.constraint_bits().all(|d| y.intersects(d))
    }

    /// Number of valid assignments.
    pub fn count(&self, config: &SolverConfig) -> BigUint {
        count::column_count(self, config)
    }
}

impl fmt::Debug for ColumnSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColumnSpace")
            .field("column", &self.column)
            .field("forced_zero", &self.forced_zero)
            .field("constraints", &self.constraints)
            .finish()
    }
}

/// The complete solution family of a relational equation, as independent
/// per-column spaces. Any choice of one valid assignment per column is a
/// solution, and every solution arises this way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    index: Arc<IndexSet>,
    columns: Vec<ColumnSpace>,
    orientation: Orientation,
}

impl SolutionSpace {
    pub(crate) fn new(
        index: Arc<IndexSet>,
        columns: Vec<ColumnSpace>,
        orientation: Orientation,
    ) -> Self {
        debug_assert_eq!(columns.len(), index.size());
        SolutionSpace {
            index,
            columns,
            orientation,
        }
    }

    pub(crate) fn with_orientation(mut self, orientation: Orientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn index_set(&self) -> &Arc<IndexSet> {
        &self.index
    }

    pub fn columns(&self) -> &[ColumnSpace] {
        &self.columns
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Assembles a relation from one assignment per column, honouring the
    /// orientation.
    pub(crate) fn assemble(&self, columns: &[BitSet]) -> Relation {
        let n = self.index.size();
        let rows = match self.orientation {
            Orientation::Right => columns.to_vec(),
            Orientation::Left => {
                let mut rows = vec![BitSet::new(n); n];
                for (k, col) in columns.iter().enumerate() {
                    for j in col.ones() {
                        rows[j].insert(k);
                    }
                }
                rows
            }
        };
        Relation::from_rows(self.index.clone(), rows)
    }

    fn split(&self, x: &Relation) -> Vec<BitSet> {
        match self.orientation {
            Orientation::Right => x.rows().to_vec(),
            Orientation::Left => x.converse().rows().to_vec(),
        }
    }

    /// Whether `x` belongs to the family, checked against the stored
    /// constraints only.
    pub fn contains(&self, x: &Relation) -> bool {
        x.size() == self.index.size()
            && self
                .split(x)
                .iter()
                .zip(&self.columns)
                .all(|(y, col)| col.accepts(y))
    }

    /// The entrywise-largest solution: every cell outside the forced zeros set.
    pub fn greatest(&self) -> Relation {
        let cols: Vec<BitSet> = self
            .columns
            .iter()
            .map(|c| c.free().members().clone())
            .collect();
        self.assemble(&cols)
    }

    pub fn count(&self) -> BigUint {
        self.count_with(&SolverConfig::default())
    }

    pub fn count_with(&self, config: &SolverConfig) -> BigUint {
        count::space_count(self, config)
    }

    pub fn solutions(&self) -> enumerate::Solutions<'_> {
        enumerate::Solutions::new(self, SolverConfig::default())
    }

    pub fn solutions_with(&self, config: SolverConfig) -> enumerate::Solutions<'_> {
        enumerate::Solutions::new(self, config)
    }

    /// The sole solution, if the family has exactly one member.
    pub fn unique_solution(&self) -> Option<Relation> {
        let mut it = self.solutions();
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }
}

impl fmt::Display for SolutionSpace {
    /// One line per column: `col k: zero={..} constraints=[{..},..]`.
    /// Spaces of `X∘R = S` label their lines `row k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.orientation {
            Orientation::Left => "col",
            Orientation::Right => "row",
        };
        for col in &self.columns {
            write!(
                f,
                "{tag} {}: zero={} constraints=[",
                self.index.label(col.column),
                col.forced_zero
            )?;
            for (n, d) in col.constraints.iter().enumerate() {
                if n > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{d}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
