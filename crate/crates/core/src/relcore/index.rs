use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A finite carrier set with a fixed order of distinct text labels.
#[derive(Clone)]
pub struct IndexSet {
    labels: Vec<String>,
    positions: HashMap<String, usize>,
}

impl IndexSet {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut positions = HashMap::with_capacity(labels.len());
        for (p, label) in labels.iter().enumerate() {
            if positions.insert(label.clone(), p).is_some() {
                return Err(Error::DuplicateElement(label.clone()));
            }
        }
        Ok(Arc::new(IndexSet { labels, positions }))
    }

    /// Labels `"1"..="n"`.
    pub fn numbered(n: usize) -> Arc<Self> {
        IndexSet::new((1..=n).map(|i| i.to_string())).expect("numeric labels are distinct")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> &str {
        &self.labels[pos]
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.positions
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// True when the labels are exactly `"1"..="n"` in order.
    pub fn is_numbered(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(p, l)| *l == (p + 1).to_string())
    }

    pub(crate) fn same(a: &Arc<IndexSet>, b: &Arc<IndexSet>) -> bool {
        Arc::ptr_eq(a, b) || a.labels == b.labels
    }
}

impl PartialEq for IndexSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for IndexSet {}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

/// A subset of an [`IndexSet`], stored as a bit vector over its positions.
#[derive(Clone, PartialEq, Eq)]
pub struct IndexSubset {
    parent: Arc<IndexSet>,
    members: BitSet,
}

impl IndexSubset {
    pub fn new(parent: Arc<IndexSet>, members: BitSet) -> Self {
        assert_eq!(parent.size(), members.len());
        IndexSubset { parent, members }
    }

    pub fn parent(&self) -> &Arc<IndexSet> {
        &self.parent
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.members.contains(pos)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.members.ones().map(|p| self.parent.label(p))
    }
}

impl fmt::Display for IndexSubset {
    /// `{a,b,c}` in index order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, label) in self.labels().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            f.write_str(label)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
