//! Exhaustive reference solvers for small inputs. They share no search code
//! with the solvers they check.

use std::collections::HashMap;

use crate::error::SolveError;
use crate::graph::{ColorGraph, NodeId, Query};
use crate::instances::CnfFormula;
use crate::lcdp::PackingInstance;
use crate::path::{Path, PathSet};

/// Up to this many nodes, path enumeration is allowed to run to the hard
/// cap; beyond it the softer cap applies.
pub const SMALL_GRAPH: usize = 14;
pub const SOFT_PATH_CAP: usize = 10_000;
pub const HARD_PATH_CAP: usize = 5_000_000;
pub const MAX_PACKING_SETS: usize = 24;
pub const MAX_SAT_VARIABLES: usize = 20;

/// Largest set of internally disjoint uni-color st-paths, honoring
/// `q.length_bound`, found by listing every simple uni-color st-path and
/// searching all disjoint subfamilies.
pub fn brute_force_max_disjoint(g: &ColorGraph, q: &Query) -> Result<PathSet, SolveError> {
    let n = g.node_count();
    if n > 128 {
        return Err(SolveError::OracleGuard(format!("{n} nodes exceed the 128-node limit")));
    }
    let cap = if n <= SMALL_GRAPH { HARD_PATH_CAP } else { SOFT_PATH_CAP };
    let max_len = q.length_bound.unwrap_or(n);

    // One representative path per internal node set.
    let mut by_mask: HashMap<u128, Path> = HashMap::new();
    let mut count = 0usize;
    for color in g.colors() {
        let layer = g.layer(color);
        let mut stack: Vec<(Vec<NodeId>, u128)> = vec![(vec![q.source], 0)];
        while let Some((path, mask)) = stack.pop() {
            let u = *path.last().unwrap();
            if path.len() > max_len {
                continue;
            }
            for &w in layer.neighbors(u).iter().rev() {
                if w == q.target {
                    count += 1;
                    if count > cap {
                        return Err(SolveError::OracleGuard(format!("more than {cap} uni-color paths")));
                    }
                    let mut full = path.clone();
                    full.push(w);
                    by_mask.entry(mask).or_insert_with(|| Path::new(color, full));
                } else if w != q.source && mask & (1u128 << w) == 0 && path.len() < max_len {
                    let mut next = path.clone();
                    next.push(w);
                    stack.push((next, mask | (1u128 << w)));
                }
            }
        }
    }

    let mut masks: Vec<u128> = by_mask.keys().copied().collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let direct: Vec<u128> = masks.iter().copied().filter(|&m| m == 0).collect();
    let mut candidates: Vec<u128> = masks.iter().copied().filter(|&m| m != 0).collect();
    if candidates.len() <= 20_000 {
        let all = candidates.clone();
        candidates.retain(|&m| !all.iter().any(|&o| o != m && o & m == o));
    }

    let near = |v: NodeId| {
        g.colors()
            .flat_map(|c| g.layer(c).neighbors(v).to_vec())
            .filter(|&w| !q.is_endpoint(w))
            .fold(0u128, |acc, w| acc | (1u128 << w))
    };
    let mut best = Vec::new();
    pack(&candidates, (near(q.source), near(q.target)), &mut Vec::new(), &mut best);

    let mut out = PathSet::new();
    for m in direct.iter().chain(best.iter()) {
        out.push(by_mask[m].clone());
    }
    // Paths with the same internal set in several colors were merged above;
    // a direct edge is the only empty set, and one per color is allowed.
    for color in g.colors() {
        if g.layer(color).has_edge(q.source, q.target) && !out.iter().any(|p| p.len() == 1 && p.color() == color) {
            out.push(Path::new(color, vec![q.source, q.target]));
        }
    }
    Ok(out)
}

/// Maximum subfamily of pairwise disjoint masks by include/exclude
/// branching. Every path spends a distinct neighbor of `s` and of `t`,
/// which bounds what the remaining candidates can add.
fn pack(cands: &[u128], ends: (u128, u128), current: &mut Vec<u128>, best: &mut Vec<u128>) {
    let union = cands.iter().fold(0u128, |acc, m| acc | m);
    let bound = cands.len().min((union & ends.0).count_ones() as usize).min((union & ends.1).count_ones() as usize);
    if current.len() + bound <= best.len() {
        return;
    }
    let Some((&first, rest)) = cands.split_first() else {
        *best = current.clone();
        return;
    };
    let compatible: Vec<u128> = rest.iter().copied().filter(|&m| m & first == 0).collect();
    current.push(first);
    pack(&compatible, ends, current, best);
    current.pop();
    pack(rest, ends, current, best);
}

/// Largest pairwise disjoint subfamily, as indices into `inst.sets`.
pub fn brute_force_set_packing(inst: &PackingInstance) -> Result<Vec<usize>, SolveError> {
    let m = inst.sets.len();
    if m > MAX_PACKING_SETS {
        return Err(SolveError::OracleGuard(format!("{m} sets exceed the limit of {MAX_PACKING_SETS}")));
    }
    let mut best: Vec<usize> = Vec::new();
    for subset in 0u32..(1 << m) {
        if subset.count_ones() as usize <= best.len() {
            continue;
        }
        let chosen: Vec<usize> = (0..m).filter(|&i| subset >> i & 1 == 1).collect();
        let mut seen = Vec::new();
        let disjoint = chosen.iter().all(|&i| {
            inst.sets[i].iter().all(|e| {
                let fresh = !seen.contains(e);
                seen.push(*e);
                fresh
            })
        });
        if disjoint {
            best = chosen;
        }
    }
    Ok(best)
}

/// A satisfying assignment (`result[i]` is `x_{i+1}`), or `None`.
pub fn brute_force_sat(f: &CnfFormula) -> Result<Option<Vec<bool>>, SolveError> {
    let r = f.variable_count;
    if r > MAX_SAT_VARIABLES {
        return Err(SolveError::OracleGuard(format!("{r} variables exceed the limit of {MAX_SAT_VARIABLES}")));
    }
    for bits in 0u32..(1 << r) {
        let assignment: Vec<bool> = (0..r).map(|i| bits >> i & 1 == 1).collect();
        if f.evaluate(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{fixtures, tight_example};
    use crate::path::validate_solution;

    #[test]
    fn max_disjoint_examples() {
        let (a, q) = fixtures::fix_a();
        assert_eq!(brute_force_max_disjoint(&a, &q).unwrap().len(), 2);
        let (b, q) = fixtures::fix_b();
        assert_eq!(brute_force_max_disjoint(&b, &q).unwrap().len(), 0);
        let (t4, q) = tight_example(4);
        let sol = brute_force_max_disjoint(&t4, &q).unwrap();
        assert_eq!(sol.len(), 4);
        assert_eq!(validate_solution(&t4, &q, &sol), Ok(()));
    }

    #[test]
    fn direct_edges_in_several_colors() {
        let (mut a, q) = fixtures::fix_a();
        a.add_edge(0, 1, 1).unwrap();
        a.add_edge(0, 1, 2).unwrap();
        let sol = brute_force_max_disjoint(&a, &q).unwrap();
        assert_eq!(sol.len(), 4);
        assert_eq!(validate_solution(&a, &q, &sol), Ok(()));
    }

    #[test]
    fn length_bound_is_honored() {
        let (c, q) = fixtures::fix_c();
        assert_eq!(brute_force_max_disjoint(&c, &q.with_length_bound(2)).unwrap().len(), 1);
        assert_eq!(brute_force_max_disjoint(&c, &q.with_length_bound(3)).unwrap().len(), 2);
    }

    #[test]
    fn packing_examples() {
        let sets = |v: Vec<Vec<usize>>| PackingInstance::new(v, 1);
        assert_eq!(brute_force_set_packing(&sets(vec![vec![1, 2], vec![2, 3], vec![3, 4]])).unwrap().len(), 2);
        assert!(brute_force_set_packing(&sets(vec![])).unwrap().is_empty());
        assert_eq!(brute_force_set_packing(&sets(vec![vec![1, 2], vec![1, 3], vec![1, 4]])).unwrap().len(), 1);
        assert!(brute_force_set_packing(&sets((0..25).map(|i| vec![i]).collect())).is_err());
    }

    #[test]
    fn sat_examples() {
        assert!(brute_force_sat(&CnfFormula::new(2, vec![vec![1, 2]])).unwrap().is_some());
        assert!(brute_force_sat(&CnfFormula::new(1, vec![vec![1], vec![-1]])).unwrap().is_none());
        assert!(brute_force_sat(&CnfFormula::new(1, vec![vec![1], vec![]])).unwrap().is_none());
        assert!(brute_force_sat(&CnfFormula::new(21, vec![])).is_err());
    }
}
