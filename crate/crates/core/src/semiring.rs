//! The unitary semiring of incidence matrices: `⊕` (union), `⊙` (max-product
//! composition), `M_0` (empty) and `M_1` (identity), plus the Cartesian
//! product of relations over different carriers.

use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::relcore::{IndexSet, Relation};

/// `M_0`, the all-zero matrix.
pub fn empty(index: Arc<IndexSet>) -> Relation {
    Relation::empty(index)
}

/// `M_1 = [δ_ij]`.
pub fn identity(index: Arc<IndexSet>) -> Relation {
    Relation::identity(index)
}

#[inline]
fn compose_row(a_row: &BitSet, s: &Relation) -> BitSet {
    let mut acc = BitSet::new(s.size());
    for k in a_row.ones() {
        acc.union_with(s.row(k));
    }
    acc
}

/// `R ⊙ S`: entry `(i, j)` is `max_k a_ik b_kj`, so `(i, j) ∈ R∘S` iff some
/// `m` has `(i, m) ∈ R` and `(m, j) ∈ S`.
///
/// Row `i` of the result is the OR of the rows `k` of `s` selected by the set
/// bits of row `i` of `r`. With the `parallel` feature rows are computed on
/// the rayon pool.
pub fn compose(r: &Relation, s: &Relation) -> Result<Relation> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        r.same_index(s)?;
        let rows = r
            .rows()
            .par_iter()
            .with_min_len(16)
            .map(|row| compose_row(row, s))
            .collect();
        Ok(Relation::from_rows(r.index_set().clone(), rows))
    }
    #[cfg(not(feature = "parallel"))]
    compose_sequential(r, s)
}

/// Single-threaded `⊙`, identical in result to [`compose`].
pub fn compose_sequential(r: &Relation, s: &Relation) -> Result<Relation> {
    r.same_index(s)?;
    let rows = r.rows().iter().map(|row| compose_row(row, s)).collect();
    Ok(Relation::from_rows(r.index_set().clone(), rows))
}

/// `R ⊕ S`, the entrywise maximum.
pub fn union(r: &Relation, s: &Relation) -> Result<Relation> {
    r.same_index(s)?;
    let rows = r
        .rows()
        .iter()
        .zip(s.rows())
        .map(|(a, b)| {
            let mut row = a.clone();
            row.union_with(b);
            row
        })
        .collect();
    Ok(Relation::from_rows(r.index_set().clone(), rows))
}

/// The carrier `I_1 × ... × I_m` of a product relation.
///
/// Tuples are ordered lexicographically with the first factor most
/// significant. Tuple labels are written `(a,b,c)`; a factor label that is
/// itself a tuple is spliced in, so nested products flatten left-first.
#[derive(Debug, Clone)]
pub struct ProductIndexSet {
    factors: Vec<Arc<IndexSet>>,
    index: Arc<IndexSet>,
}

impl ProductIndexSet {
    pub fn new(factors: Vec<Arc<IndexSet>>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyFactorList);
        }
        let size: usize = factors.iter().map(|f| f.size()).product();
        let mut labels = Vec::with_capacity(size);
        let mut tuple = vec![0; factors.len()];
        for p in 0..size {
            decode_into(&factors, p, &mut tuple);
            let parts: Vec<&str> = tuple
                .iter()
                .zip(&factors)
                .map(|(&c, f)| flatten(f.label(c)))
                .collect();
            labels.push(format!("({})", parts.join(",")));
        }
        // Distinct factor labels give distinct tuples, except when flattening
        // collides; fall back to unflattened labels in that case.
        let index = match IndexSet::new(labels) {
            Ok(ix) => ix,
            Err(_) => {
                let labels = (0..size).map(|p| {
                    decode_into(&factors, p, &mut tuple);
                    let parts: Vec<&str> = tuple
                        .iter()
                        .zip(&factors)
                        .map(|(&c, f)| f.label(c))
                        .collect();
                    format!("({})", parts.join(","))
                });
                IndexSet::new(labels.collect::<Vec<_>>())?
            }
        };
        Ok(ProductIndexSet { factors, index })
    }

    pub fn factors(&self) -> &[Arc<IndexSet>] {
        &self.factors
    }

    pub fn index_set(&self) -> &Arc<IndexSet> {
        &self.index
    }

    pub fn size(&self) -> usize {
        self.index.size()
    }

    /// Component positions of the tuple at position `p`.
    pub fn decode(&self, p: usize) -> Vec<usize> {
        let mut tuple = vec![0; self.factors.len()];
        decode_into(&self.factors, p, &mut tuple);
        tuple
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        encode(&self.factors, tuple)
    }
}

fn flatten(label: &str) -> &str {
    label
        .strip_prefix('(')
        .and_then(|l| l.strip_suffix(')'))
        .unwrap_or(label)
}

fn decode_into(factors: &[Arc<IndexSet>], mut p: usize, tuple: &mut [usize]) {
    for (slot, f) in tuple.iter_mut().zip(factors).rev() {
        let n = f.size();
        *slot = p % n;
        p /= n;
    }
}

fn encode(factors: &[Arc<IndexSet>], tuple: &[usize]) -> usize {
    tuple
        .iter()
        .zip(factors)
        .fold(0, |acc, (&c, f)| acc * f.size() + c)
}

/// `∏ R_k`: the pair of tuples `(u, v)` is related iff every factor relates
/// `u_k` to `v_k`, i.e. the entry is `min_k a_{u_k v_k}`.
pub fn cartesian_product(factors: &[Relation]) -> Result<(ProductIndexSet, Relation)> {
    let carrier = ProductIndexSet::new(factors.iter().map(|f| f.index_set().clone()).collect())?;
    let size = carrier.size();
    let row_of = |u: usize| {
        let tuple = carrier.decode(u);
        let mut row = BitSet::new(size);
        // Odometer over the per-factor column choices of this row.
        let choices: Vec<Vec<usize>> = factors
            .iter()
            .zip(&tuple)
            .map(|(f, &c)| f.row(c).ones().collect())
            .collect();
        if choices.iter().any(Vec::is_empty) {
            return row;
        }
        let mut digit = vec![0usize; choices.len()];
        let mut target = vec![0usize; choices.len()];
        loop {
            for (t, (d, c)) in target.iter_mut().zip(digit.iter().zip(&choices)) {
                *t = c[*d];
            }
            row.insert(carrier.encode(&target));
            let mut k = choices.len();
            loop {
                if k == 0 {
                    return row;
                }
                k -= 1;
                digit[k] += 1;
                if digit[k] < choices[k].len() {
                    break;
                }
                digit[k] = 0;
            }
        }
    };
    #[cfg(feature = "parallel")]
    let rows: Vec<BitSet> = {
        use rayon::prelude::*;
        (0..size).into_par_iter().map(row_of).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<BitSet> = (0..size).map(row_of).collect();
    let rel = Relation::from_rows(carrier.index_set().clone(), rows);
    Ok((carrier, rel))
}

/// Binary convenience form of [`cartesian_product`].
pub fn product(r: &Relation, s: &Relation) -> Result<Relation> {
    cartesian_product(&[r.clone(), s.clone()]).map(|(_, rel)| rel)
}
