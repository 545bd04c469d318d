use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::SolveError;
use crate::graph::{ColorGraph, Query};
use crate::path::{Path, PathSet};

use super::enumerate::enumerate_paths;
use super::packing::{hs_ratio, set_packing_local_search, PackingInstance};

/// Largest swap parameter tried by [`lcdp_local_search`].
pub const MAX_SWAP: usize = 16;

/// The smallest swap parameter whose guaranteed ratio for `k`-sets is at
/// most `k/2 + eps`.
pub fn choose_swap(k: usize, eps: &BigRational) -> Option<usize> {
    let goal = BigRational::new(BigInt::from(k), BigInt::from(2)) + eps;
    (1..=MAX_SWAP).find(|&s| hs_ratio(k.max(2), s) <= goal)
}

/// Disjoint uni-color st-paths of length at most `l` by set-packing local
/// search, within a factor `(l-1)/2 + eps` of optimal.
pub fn lcdp_local_search(g: &ColorGraph, q: &Query, l: usize, eps: &BigRational) -> Result<PathSet, SolveError> {
    let k = l.saturating_sub(1).max(2);
    let swap = choose_swap(k, eps).ok_or(SolveError::SwapTooLarge { max: MAX_SWAP })?;
    lcdp_local_search_with_swap(g, q, l, swap)
}

/// [`lcdp_local_search`] with an explicit swap parameter (at least 1).
pub fn lcdp_local_search_with_swap(g: &ColorGraph, q: &Query, l: usize, swap: usize) -> Result<PathSet, SolveError> {
    let (g, mut out) = g.strip_st_edges(q);
    let mut by_set: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut paths: Vec<Path> = Vec::new();
    let mut sets = Vec::new();
    for path in enumerate_paths(&g, q, l)? {
        let mut key = path.internal().to_vec();
        key.sort_unstable();
        if !by_set.contains_key(&key) {
            by_set.insert(key.clone(), paths.len());
            sets.push(key);
            paths.push(path);
        }
    }
    let inst = PackingInstance::new(sets, swap.max(1));
    for idx in set_packing_local_search(&inst) {
        out.push(paths[idx].clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fixtures;
    use crate::path::validate_solution;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn swap_choice() {
        assert_eq!(choose_swap(3, &r(1, 2)), Some(1));
        assert_eq!(choose_swap(3, &r(1, 5)), Some(3));
        assert_eq!(choose_swap(2, &r(1, 1)), Some(1));
        assert_eq!(choose_swap(3, &r(1, 1_000_000)), None);
    }

    #[test]
    fn examples() {
        let (a, q) = fixtures::fix_a();
        assert_eq!(lcdp_local_search(&a, &q, 4, &r(1, 2)).unwrap().len(), 2);
        let (c, q) = fixtures::fix_c();
        let sol = lcdp_local_search(&c, &q, 3, &r(1, 1)).unwrap();
        assert_eq!(sol.len(), 2);
        assert_eq!(validate_solution(&c, &q.with_length_bound(3), &sol), Ok(()));
        assert_eq!(lcdp_local_search(&c, &q, 4, &r(1, 1_000_000)), Err(SolveError::SwapTooLarge { max: MAX_SWAP }));
    }
}
