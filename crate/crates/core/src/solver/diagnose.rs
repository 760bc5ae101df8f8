use super::witness::UnsolvabilityWitness;
use crate::error::Result;
use crate::relcore::Relation;

/// Scans for the three local obstructions to `R∘X = S`:
///
/// * (i) a zero row `k` of R against a nonzero row `k` of S;
/// * (ii) equal rows `k < l` of R against unequal rows of S;
/// * (iii) a singleton row `k = {l}` of R with `a_nl = b_km = 1`, `b_nm = 0`.
///
/// Every returned witness proves unsolvability, but an empty result does not
/// prove solvability; use [`super::solution_space`] to decide.
pub fn diagnose_unsolvable(r: &Relation, s: &Relation) -> Result<Vec<UnsolvabilityWitness>> {
    r.same_index(s)?;
    let n = r.size();
    let mut out = Vec::new();

    for k in 0..n {
        if r.row(k).is_empty() {
            if let Some(p) = s.row(k).first() {
                out.push(UnsolvabilityWitness::LemmaI { k, p });
            }
        }
    }

    for k in 0..n {
        for l in k + 1..n {
            if r.row(k) == r.row(l) && s.row(k) != s.row(l) {
                let p = (0..n)
                    .find(|&p| s.get(k, p) != s.get(l, p))
                    .expect("rows differ");
                out.push(UnsolvabilityWitness::LemmaII { k, l, p });
            }
        }
    }

    for k in 0..n {
        let row = r.row(k);
        if row.count() != 1 {
            continue;
        }
        let l = row.first().expect("singleton");
        for nn in (0..n).filter(|&nn| r.get(nn, l)) {
            for m in s.row(k).ones().filter(|&m| !s.get(nn, m)) {
                out.push(UnsolvabilityWitness::LemmaIII { k, l, m, n: nn });
            }
        }
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcore::IndexSet;

    #[test]
    fn equal_rows_of_r_against_unequal_rows_of_s() {
        let r = Relation::from_matrix(&[[0u8, 1, 0], [1, 0, 0], [0, 1, 0]], None).unwrap();
        let s = Relation::from_matrix(&[[1u8, 1, 0], [0, 0, 0], [1, 0, 0]], None).unwrap();
        let found = diagnose_unsolvable(&r, &s).unwrap();
        let w = UnsolvabilityWitness::LemmaII { k: 0, l: 2, p: 1 };
        assert!(found.contains(&w), "{found:?}");
        assert_eq!(
            w.display(r.index_set()).to_string(),
            "LEMMA(ii) k=1 l=3 p=2"
        );
        assert!(found.iter().all(|w| w.holds(&r, &s)));
    }

    #[test]
    fn solvable_example_has_no_witness() {
        let r = Relation::from_matrix(&[[0u8, 1, 0], [1, 0, 0], [0, 1, 1]], None).unwrap();
        let s = Relation::from_matrix(&[[1u8, 1, 0], [0, 0, 0], [1, 1, 0]], None).unwrap();
        assert!(diagnose_unsolvable(&r, &s).unwrap().is_empty());
    }

    #[test]
    fn empty_r_flags_each_nonzero_row() {
        let ix = IndexSet::numbered(3);
        let r = Relation::empty(ix.clone());
        let s = Relation::from_label_pairs(ix, [("1", "2"), ("3", "1"), ("3", "3")]).unwrap();
        let lemma_i: Vec<_> = diagnose_unsolvable(&r, &s)
            .unwrap()
            .into_iter()
            .filter(|w| matches!(w, UnsolvabilityWitness::LemmaI { .. }))
            .collect();
        assert_eq!(
            lemma_i,
            vec![
                UnsolvabilityWitness::LemmaI { k: 0, p: 1 },
                UnsolvabilityWitness::LemmaI { k: 2, p: 0 },
            ]
        );
    }

    #[test]
    fn singleton_row_condition() {
        // row 1 of R = {2}; a_32 = 1; b_11 = 1 but b_31 = 0.
        let r = Relation::from_matrix(&[[0u8, 1, 0], [0, 0, 1], [0, 1, 1]], None).unwrap();
        let s = Relation::from_matrix(&[[1u8, 0, 0], [0, 0, 0], [0, 0, 1]], None).unwrap();
        let found = diagnose_unsolvable(&r, &s).unwrap();
        let w = UnsolvabilityWitness::LemmaIII {
            k: 0,
            l: 1,
            m: 0,
            n: 2,
        };
        assert!(found.contains(&w), "{found:?}");
        assert_eq!(
            w.display(r.index_set()).to_string(),
            "LEMMA(iii) k=1 l=2 m=1 n=3"
        );
    }
}
