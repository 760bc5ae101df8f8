use std::fmt;

use crate::relcore::{IndexSet, Relation};

/// Which unsolvability criterion fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessKind {
    LemmaI,
    LemmaII,
    LemmaIII,
    Theorem4,
}

/// Positions showing that `R∘X = S` has no solution.
///
/// All indices are 0-based positions in the shared index set. Use
/// [`UnsolvabilityWitness::display`] to print them with the original labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnsolvabilityWitness {
    /// Row `k` of R is zero while `b_kp = 1`.
    LemmaI { k: usize, p: usize },
    /// Rows `k` and `l` of R agree while `b_kp != b_lp`.
    LemmaII { k: usize, l: usize, p: usize },
    /// Row `k` of R is the singleton `{l}`, `a_nl = b_km = 1` and `b_nm = 0`.
    LemmaIII {
        k: usize,
        l: usize,
        m: usize,
        n: usize,
    },
    /// In column `k`, row `i` has `b_ik = 1` but `A_i ⊆ C_k`.
    Theorem4 { k: usize, i: usize },
}

impl UnsolvabilityWitness {
    pub fn kind(&self) -> WitnessKind {
        match self {
            Self::LemmaI { .. } => WitnessKind::LemmaI,
            Self::LemmaII { .. } => WitnessKind::LemmaII,
            Self::LemmaIII { .. } => WitnessKind::LemmaIII,
            Self::Theorem4 { .. } => WitnessKind::Theorem4,
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        match *self {
            Self::LemmaI { k, p } => vec![k, p],
            Self::LemmaII { k, l, p } => vec![k, l, p],
            Self::LemmaIII { k, l, m, n } => vec![k, l, m, n],
            Self::Theorem4 { k, i } => vec![k, i],
        }
    }

    /// Re-checks the cited condition against `r` and `s`.
    pub fn holds(&self, r: &Relation, s: &Relation) -> bool {
        let size = r.size();
        if s.size() != size || self.indices().iter().any(|&x| x >= size) {
            return false;
        }
        match *self {
            Self::LemmaI { k, p } => r.row(k).is_empty() && s.get(k, p),
            Self::LemmaII { k, l, p } => r.row(k) == r.row(l) && s.get(k, p) != s.get(l, p),
            Self::LemmaIII { k, l, m, n } => {
                r.row(k).count() == 1 && r.get(k, l) && r.get(n, l) && s.get(k, m) && !s.get(n, m)
            }
            Self::Theorem4 { k, i } => {
                if !s.get(i, k) {
                    return false;
                }
                // A_i ⊆ C_k = ∪ { A_l : b_lk = 0 }
                let mut c = crate::bits::BitSet::new(size);
                for l in (0..size).filter(|&l| !s.get(l, k)) {
                    c.union_with(r.row(l));
                }
                r.row(i).is_subset(&c)
            }
        }
    }

    /// Renders with the labels of `index`, e.g. `LEMMA(ii) k=1 l=3 p=2`.
    pub fn display<'a>(&'a self, index: &'a IndexSet) -> impl fmt::Display + 'a {
        WitnessDisplay {
            witness: self,
            index,
        }
    }
}

struct WitnessDisplay<'a> {
    witness: &'a UnsolvabilityWitness,
    index: &'a IndexSet,
}

impl fmt::Display for WitnessDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lb = |p: usize| self.index.label(p);
        match *self.witness {
            UnsolvabilityWitness::LemmaI { k, p } => write!(f, "LEMMA(i) k={} p={}", lb(k), lb(p)),
            UnsolvabilityWitness::LemmaII { k, l, p } => {
                write!(f, "LEMMA(ii) k={} l={} p={}", lb(k), lb(l), lb(p))
            }
            UnsolvabilityWitness::LemmaIII { k, l, m, n } => write!(
                f,
                "LEMMA(iii) k={} l={} m={} n={}",
                lb(k),
                lb(l),
                lb(m),
                lb(n)
            ),
            UnsolvabilityWitness::Theorem4 { k, i } => {
                write!(f, "THEOREM4 k={} i={}", lb(k), lb(i))
            }
        }
    }
}
