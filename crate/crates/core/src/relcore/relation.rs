use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::index::{IndexSet, IndexSubset};
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A binary relation on a finite [`IndexSet`], held as its incidence matrix.
///
/// Row `i` is a bit vector whose bit `j` is set iff `(label_i, label_j)`
/// belongs to the relation. Values are immutable once built.
#[derive(Clone)]
pub struct Relation {
    index: Arc<IndexSet>,
    rows: Vec<BitSet>,
}

impl Relation {
    /// Builds the relation on `elements` containing the listed pairs.
    /// Repeated pairs collapse.
    pub fn from_pairs<E, S, P, A, B>(elements: E, pairs: P) -> Result<Self>
    where
        E: IntoIterator<Item = S>,
        S: Into<String>,
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let index = IndexSet::new(elements)?;
        Relation::from_label_pairs(index, pairs)
    }

    pub fn from_label_pairs<P, A, B>(index: Arc<IndexSet>, pairs: P) -> Result<Self>
    where
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut rel = Relation::empty(index);
        for (a, b) in pairs {
            let i = rel.index.position(a.as_ref())?;
            let j = rel.index.position(b.as_ref())?;
            rel.rows[i].insert(j);
        }
        Ok(rel)
    }

    /// Builds a relation from a square 0/1 grid. Labels default to `"1".."n"`.
    pub fn from_matrix<R, T>(rows: &[R], elements: Option<Vec<String>>) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Copy + Into<u64>,
    {
        let n = rows.len();
        let index = match elements {
            Some(labels) => IndexSet::new(labels)?,
            None => IndexSet::numbered(n),
        };
        if index.size() != n {
            return Err(Error::NonSquare {
                row: 0,
                found: index.size(),
                expected: n,
            });
        }
        let mut bits = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NonSquare {
                    row: i,
                    found: row.len(),
                    expected: n,
                });
            }
            let mut b = BitSet::new(n);
            for (j, &v) in row.iter().enumerate() {
                match v.into() {
                    0 => {}
                    1 => b.insert(j),
                    other => {
                        return Err(Error::NonBinaryEntry {
                            row: i,
                            entry: other.to_string(),
                        })
                    }
                }
            }
            bits.push(b);
        }
        Ok(Relation { index, rows: bits })
    }

    pub(crate) fn from_rows(index: Arc<IndexSet>, rows: Vec<BitSet>) -> Self {
        debug_assert_eq!(rows.len(), index.size());
        debug_assert!(rows.iter().all(|r| r.len() == index.size()));
        Relation { index, rows }
    }

    /// The empty relation, incidence matrix `[0]`.
    pub fn empty(index: Arc<IndexSet>) -> Self {
        let n = index.size();
        Relation {
            index,
            rows: vec![BitSet::new(n); n],
        }
    }

    /// The diagonal relation, incidence matrix `[δ_ij]`.
    pub fn identity(index: Arc<IndexSet>) -> Self {
        let n = index.size();
        let rows = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        Relation { index, rows }
    }

    pub fn full(index: Arc<IndexSet>) -> Self {
        let n = index.size();
        Relation {
            index,
            rows: vec![BitSet::full(n); n],
        }
    }

    pub fn index_set(&self) -> &Arc<IndexSet> {
        &self.index
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    /// Entry `a_ij` by position.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Membership of the labelled pair.
    pub fn contains(&self, i: &str, j: &str) -> Result<bool> {
        Ok(self.get(self.index.position(i)?, self.index.position(j)?))
    }

    /// `{j | a_ij = 1}`.
    pub fn row_set(&self, i: usize) -> Result<IndexSubset> {
        if i >= self.size() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.size(),
            });
        }
        Ok(IndexSubset::new(self.index.clone(), self.rows[i].clone()))
    }

    /// `{i | a_ik = 1}`, gathered on demand.
    pub fn column(&self, k: usize) -> BitSet {
        let n = self.size();
        let mut col = BitSet::new(n);
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(k) {
                col.insert(i);
            }
        }
        col
    }

    /// The transposed relation `{(j, i) | (i, j) ∈ R}`.
    pub fn converse(&self) -> Relation {
        let rows = (0..self.size()).map(|k| self.column(k)).collect();
        Relation {
            index: self.index.clone(),
            rows,
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|i| self.get(i, i))
    }

    /// Number of pairs.
    pub fn cardinality(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(BitSet::is_empty)
    }

    /// Positional pairs in row-major order.
    pub fn position_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().map(move |j| (i, j)))
    }

    /// Labelled pairs in row-major order.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        self.position_pairs()
            .map(|(i, j)| {
                (
                    self.index.label(i).to_string(),
                    self.index.label(j).to_string(),
                )
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.size();
        self.rows
            .iter()
            .map(|row| (0..n).map(|j| row.contains(j) as u8).collect())
            .collect()
    }

    pub(crate) fn same_index(&self, other: &Relation) -> Result<()> {
        if IndexSet::same(&self.index, &other.index) {
            Ok(())
        } else {
            Err(Error::IndexSetMismatch)
        }
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        IndexSet::same(&self.index, &other.index) && self.rows == other.rows
    }
}

impl Eq for Relation {}

impl Hash for Relation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.index.labels().hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.to_pairs().iter().map(|(a, b)| format!("({a},{b})")))
            .finish()
    }
}
