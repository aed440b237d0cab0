//! Bitset helpers over `u64` supports.

use super::{canonical_key, low_bits};

/// Indices of set bits, ascending.
pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros();
        mask &= mask - 1;
        Some(i)
    })
}

/// All submasks of `mask`, including `0` and `mask` itself, in decreasing order.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            Some((current - 1) & mask)
        };
        Some(current)
    })
}

/// All `k`-element subsets of `{0, .., len-1}` in increasing numeric order
/// (Gosper's hack).
pub fn k_subsets(len: u32, k: u32) -> impl Iterator<Item = u64> {
    let limit = low_bits(len);
    let mut next = if k > len { None } else { Some(low_bits(k)) };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            let c = current & current.wrapping_neg();
            let r = current.checked_add(c);
            match r {
                Some(r) => {
                    let candidate = (((r ^ current) >> 2) / c) | r;
                    (candidate & !limit == 0 && candidate != 0).then_some(candidate)
                }
                None => None,
            }
        };
        Some(current)
    })
}

/// Inclusion-minimal sets meeting every member of `family` (Berge's
/// incremental algorithm). An empty family yields `[0]`; a family that
/// contains the empty set yields nothing.
pub fn minimal_transversals(family: &[u64]) -> Vec<u64> {
    let mut current = vec![0u64];
    for &edge in family {
        let mut next = Vec::with_capacity(current.len());
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                next.extend(iter_bits(edge).map(|v| t | (1 << v)));
            }
        }
        current = minimal_sets(next);
    }
    current
}

/// Removes every set that strictly contains (or duplicates) another; sorted
/// canonically.
pub(crate) fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|&s| canonical_key(s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

/// Removes every set contained in another; sorted by decreasing size, then
/// value.
pub(crate) fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|&s| (std::cmp::Reverse(s.count_ones()), s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}
