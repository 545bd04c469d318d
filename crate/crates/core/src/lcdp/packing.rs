//! Local search for set packing with bounded set size.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

/// A family of small sets to pack, and the local-search depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingInstance {
    /// Each set is nonempty; elements are arbitrary ids.
    pub sets: Vec<Vec<usize>>,
    /// Upper bound on set size.
    pub k: usize,
    /// Largest number of chosen sets a single move may give up.
    pub swap_param: usize,
}

impl PackingInstance {
    /// `k` is taken as the largest set size.
    ///
    /// # Panics
    /// On an empty set.
    pub fn new(sets: Vec<Vec<usize>>, swap_param: usize) -> Self {
        assert!(sets.iter().all(|s| !s.is_empty()), "packing sets must be nonempty");
        let k = sets.iter().map(Vec::len).max().unwrap_or(0);
        PackingInstance { sets, k, swap_param }
    }
}

/// The worst-case ratio of local search with depth `s` on sets of size at
/// most `k`:
///
/// ```text
/// (k (k-1)^r - k) / (2 (k-1)^r - k)   for even s, r = s/2 + 1
/// (k (k-1)^r - 2) / (2 (k-1)^r - 2)   for odd s,  r = (s+1)/2
/// ```
///
/// At `k = 2` both forms are `0/0`; their common limit `(s+2)/(s+1)` is
/// returned.
///
/// # Panics
/// When `k < 2` or `s < 1`.
pub fn hs_ratio(k: usize, s: usize) -> BigRational {
    assert!(k >= 2 && s >= 1, "hs_ratio needs k >= 2 and s >= 1");
    if k == 2 {
        return BigRational::new(BigInt::from(s + 2), BigInt::from(s + 1));
    }
    let (r, sub) = if s.is_multiple_of(2) { (s / 2 + 1, k) } else { (s.div_ceil(2), 2) };
    let k = BigInt::from(k);
    let sub = BigInt::from(sub);
    let power: BigInt = Pow::pow(&(&k - BigInt::one()), r as u32);
    BigRational::new(&k * &power - &sub, BigInt::from(2) * &power - &sub)
}

/// A move: drop the chosen sets at positions `remove` (ascending), then add
/// the sets `add`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Improvement {
    pub remove: Vec<usize>,
    pub add: Vec<usize>,
}

/// Runs local search from the empty packing. Returns indices into
/// `inst.sets`.
pub fn set_packing_local_search(inst: &PackingInstance) -> Vec<usize> {
    set_packing_local_search_from(inst, Vec::new())
}

/// Runs local search from the pairwise disjoint sets `start`.
pub fn set_packing_local_search_from(inst: &PackingInstance, start: Vec<usize>) -> Vec<usize> {
    let mut chosen = start;
    while let Some(step) = find_improvement(inst, &chosen) {
        for &pos in step.remove.iter().rev() {
            chosen.remove(pos);
        }
        chosen.extend(step.add);
    }
    chosen
}

/// The first move that replaces `i <= swap_param` chosen sets by `i + 1`
/// pairwise disjoint sets, scanning `i` upward and the subsets of `chosen`
/// in lexicographic order of positions.
pub fn find_improvement(inst: &PackingInstance, chosen: &[usize]) -> Option<Improvement> {
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (pos, &set) in chosen.iter().enumerate() {
        for &e in &inst.sets[set] {
            owner.insert(e, pos);
        }
    }
    for i in 0..=inst.swap_param.min(chosen.len()) {
        let mut combo: Vec<usize> = (0..i).collect();
        loop {
            if let Some(add) = replacement(inst, &owner, &combo) {
                return Some(Improvement { remove: combo, add });
            }
            if !next_combination(&mut combo, chosen.len()) {
                break;
            }
        }
    }
    None
}

/// `i + 1` pairwise disjoint sets using only elements that are free or owned
/// by the positions in `released`. With `released` nonempty each set must
/// touch a released element, since otherwise a smaller move exists.
fn replacement(inst: &PackingInstance, owner: &HashMap<usize, usize>, released: &[usize]) -> Option<Vec<usize>> {
    let need = released.len() + 1;
    let candidates: Vec<usize> = (0..inst.sets.len())
        .filter(|&idx| {
            let set = &inst.sets[idx];
            let usable = set.iter().all(|e| owner.get(e).is_none_or(|p| released.contains(p)));
            let touches = released.is_empty() || set.iter().any(|e| owner.get(e).is_some_and(|p| released.contains(p)));
            usable && touches
        })
        .collect();
    let mut picked = Vec::with_capacity(need);
    let mut used: Vec<usize> = Vec::new();
    pick(inst, &candidates, 0, need, &mut picked, &mut used).then_some(picked)
}

fn pick(
    inst: &PackingInstance,
    candidates: &[usize],
    from: usize,
    need: usize,
    picked: &mut Vec<usize>,
    used: &mut Vec<usize>,
) -> bool {
    if picked.len() == need {
        return true;
    }
    for idx in from..candidates.len() {
        if candidates.len() - idx < need - picked.len() {
            return false;
        }
        let set = &inst.sets[candidates[idx]];
        if set.iter().any(|e| used.contains(e)) {
            continue;
        }
        picked.push(candidates[idx]);
        used.extend(set);
        if pick(inst, candidates, idx + 1, need, picked, used) {
            return true;
        }
        used.truncate(used.len() - set.len());
        picked.pop();
    }
    false
}

/// Advances `combo` to the next `combo.len()`-subset of `0..n` in
/// lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn ratio_values() {
        assert_eq!(hs_ratio(3, 1), ratio(2, 1));
        assert_eq!(hs_ratio(3, 2), ratio(9, 5));
        assert_eq!(hs_ratio(5, 1), ratio(3, 1));
        assert_eq!(hs_ratio(4, 1), ratio(5, 2));
        assert_eq!(hs_ratio(2, 1), ratio(3, 2));
        assert_eq!(hs_ratio(2, 4), ratio(6, 5));
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn local_search_examples() {
        let inst = PackingInstance::new(vec![vec![1, 2], vec![3, 4]], 1);
        assert_eq!(set_packing_local_search(&inst), vec![0, 1]);

        let inst = PackingInstance::new(vec![vec![1, 2], vec![2, 3], vec![3, 4]], 1);
        assert_eq!(set_packing_local_search(&inst).len(), 2);
        let improved = set_packing_local_search_from(&inst, vec![1]);
        assert_eq!(improved, vec![0, 2]);

        let inst = PackingInstance::new(vec![], 1);
        assert!(set_packing_local_search(&inst).is_empty());
    }

    #[test]
    fn result_is_locally_optimal() {
        let sets = vec![vec![1, 2, 3], vec![1, 4], vec![2, 5], vec![3, 6], vec![4, 5, 6], vec![7]];
        for swap in 1..=3 {
            let inst = PackingInstance::new(sets.clone(), swap);
            let out = set_packing_local_search(&inst);
            assert!(find_improvement(&inst, &out).is_none());
            let mut seen = Vec::new();
            for &i in &out {
                for e in &inst.sets[i] {
                    assert!(!seen.contains(e));
                    seen.push(*e);
                }
            }
        }
    }
}
