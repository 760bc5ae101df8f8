//! Exact solution counts.
//!
//! A column with non-forced cells `F` and constraint family `D_1..D_c`
//! has as many valid assignments as there are subsets of `F` meeting every
//! `D_i`. Small families use inclusion–exclusion,
//! `Σ_{T ⊆ {1..c}} (-1)^|T| 2^|F ∖ ∪T|`; large ones branch on the most
//! frequent element with memoization.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::space::{absorb, ColumnSpace, SolutionSpace, SolverConfig};
use crate::bits::BitSet;

pub(crate) fn space_count(space: &SolutionSpace, config: &SolverConfig) -> BigUint {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let counts: Vec<BigUint> = space
            .columns()
            .par_iter()
            .map(|c| column_count(c, config))
            .collect();
        counts.into_iter().product()
    }
    #[cfg(not(feature = "parallel"))]
    space
        .columns()
        .iter()
        .map(|c| column_count(c, config))
        .product()
}

pub(crate) fn column_count(col: &ColumnSpace, config: &SolverConfig) -> BigUint {
    let sets: Vec<BitSet> = col.constraint_bits().cloned().collect();
    let free = col.free_positions().len();
    if sets.len() <= config.inclusion_exclusion_limit {
        inclusion_exclusion(&sets, free)
    } else {
        branching(sets, free)
    }
}

/// Number of subsets of a `free`-element ground set meeting every set in
/// `sets`, by inclusion–exclusion. Terms are grouped by exponent so the big
/// integer work is one pass over `0..=free`.
pub(crate) fn inclusion_exclusion(sets: &[BitSet], free: usize) -> BigUint {
    let mut coeff = vec![0i128; free + 1];
    let len = sets.first().map_or(0, BitSet::len);
    let mut stack = vec![(0usize, BitSet::new(len), 1i128)];
    while let Some((next, covered, sign)) = stack.pop() {
        coeff[free - covered.count()] += sign;
        for (idx, d) in sets.iter().enumerate().skip(next) {
            let mut u = covered.clone();
            u.union_with(d);
            stack.push((idx + 1, u, -sign));
        }
    }
    let total: BigInt = coeff
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| BigInt::from(c) << e)
        .sum();
    debug_assert!(!total.is_negative());
    total.to_biguint().unwrap_or_default()
}

/// Same quantity as [`inclusion_exclusion`], by memoized branching.
pub(crate) fn branching(sets: Vec<BitSet>, free: usize) -> BigUint {
    let sets = absorb(sets);
    let covered = union_count(&sets);
    let mut memo = HashMap::new();
    hitting(sets, &mut memo) << (free - covered)
}

fn union_count(sets: &[BitSet]) -> usize {
    match sets.first() {
        None => 0,
        Some(first) => {
            let mut u = BitSet::new(first.len());
            for d in sets {
                u.union_with(d);
            }
            u.count()
        }
    }
}

/// Subsets of `∪ sets` meeting every member of the absorbed family `sets`.
fn hitting(sets: Vec<BitSet>, memo: &mut HashMap<Vec<BitSet>, BigUint>) -> BigUint {
    if sets.is_empty() {
        return BigUint::one();
    }
    if sets.iter().any(BitSet::is_empty) {
        return BigUint::zero();
    }
    if let Some(hit) = memo.get(&sets) {
        return hit.clone();
    }
    let len = sets[0].len();
    let mut freq = vec![0usize; len];
    let mut universe = BitSet::new(len);
    for d in &sets {
        universe.union_with(d);
        for e in d.ones() {
            freq[e] += 1;
        }
    }
    let u = universe.count();
    let e = (0..len)
        .max_by_key(|&e| (freq[e], std::cmp::Reverse(e)))
        .unwrap();

    // e chosen: every set containing e is met.
    let rest: Vec<BitSet> = sets.iter().filter(|d| !d.contains(e)).cloned().collect();
    let rest_cover = union_count(&rest);
    let with_e = hitting(rest, memo) << (u - 1 - rest_cover);

    // e left out: drop it from every set.
    let reduced: Vec<BitSet> = sets
        .iter()
        .map(|d| {
            let mut d = d.clone();
            d.remove(e);
            d
        })
        .collect();
    let without_e = if reduced.iter().any(BitSet::is_empty) {
        BigUint::zero()
    } else {
        let reduced = absorb(reduced);
        let cover = union_count(&reduced);
        hitting(reduced, memo) << (u - 1 - cover)
    };

    let total = with_e + without_e;
    memo.insert(sets, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Direct count over all subsets of the ground set `0..n`.
    fn brute(sets: &[BitSet], n: usize) -> BigUint {
        let hits = (0u32..1 << n)
            .filter(|&mask| {
                let y = BitSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
                sets.iter().all(|d| y.intersects(d))
            })
            .count();
        BigUint::from(hits)
    }

    fn family(n: usize) -> impl Strategy<Value = Vec<BitSet>> {
        prop::collection::vec(prop::collection::vec(0..n, 1..4), 0..8).prop_map(move |sets| {
            sets.into_iter()
                .map(|v| BitSet::from_indices(n, v))
                .collect()
        })
    }

    #[test]
    fn no_constraints_is_power_of_two() {
        assert_eq!(inclusion_exclusion(&[], 5), BigUint::from(32u32));
        assert_eq!(branching(vec![], 5), BigUint::from(32u32));
        assert_eq!(inclusion_exclusion(&[], 0), BigUint::one());
    }

    #[test]
    fn large_free_set_does_not_overflow() {
        let n = 200;
        let sets = vec![
            BitSet::from_indices(n, [0]),
            BitSet::from_indices(n, [1, 2]),
        ];
        // 2^197 * 1 * 3
        let expected = BigUint::from(3u32) << 197;
        assert_eq!(inclusion_exclusion(&sets, n), expected);
        assert_eq!(branching(sets, n), expected);
    }

    proptest! {
        #[test]
        fn both_counts_match_brute_force(sets in family(7)) {
            let expected = brute(&sets, 7);
            prop_assert_eq!(inclusion_exclusion(&sets, 7), expected.clone());
            prop_assert_eq!(branching(sets, 7), expected);
        }
    }
}
