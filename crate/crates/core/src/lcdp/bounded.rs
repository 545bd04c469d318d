//! Length-bounded search primitives on one color layer.
//!
//! All helpers ignore a direct `(s,t)` edge, never route through the far
//! terminal, and treat nodes flagged in `blocked` as deleted.

use std::collections::VecDeque;

use crate::graph::{NodeId, UniGraph};

pub(crate) const FAR: u32 = u32::MAX;

/// Distances from `from` up to `bound`, without entering `other` or any
/// blocked node. `other` gets the length of its best approach from a node
/// other than `from`; everything else beyond `bound` stays at [`FAR`].
pub(crate) fn reach(g: &UniGraph, from: NodeId, other: NodeId, blocked: &[bool], bound: usize) -> Vec<u32> {
    let mut dist = vec![FAR; g.node_count()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        if du as usize + 1 > bound {
            continue;
        }
        for &w in g.neighbors(u) {
            if w == other {
                if u != from && du + 1 < dist[other] {
                    dist[other] = du + 1;
                }
            } else if dist[w] == FAR && !blocked[w] {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `d(s,t)` if it is at most `bound`.
pub(crate) fn distance(g: &UniGraph, s: NodeId, t: NodeId, blocked: &[bool], bound: usize) -> Option<usize> {
    let d = reach(g, s, t, blocked, bound)[t];
    (d != FAR).then_some(d as usize)
}

/// A shortest st-path of length at most `bound`. Ties prefer the smallest
/// node id at each step back from `t`.
pub(crate) fn shortest_path(g: &UniGraph, s: NodeId, t: NodeId, blocked: &[bool], bound: usize) -> Option<Vec<NodeId>> {
    let ds = reach(g, s, t, blocked, bound);
    let d = ds[t];
    if d == FAR {
        return None;
    }
    let mut path = vec![t];
    let mut cur = t;
    for step in (1..d).rev() {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| w != s && w != t && ds[w] == step)
            .expect("distance labels form a path");
        path.push(cur);
    }
    path.push(s);
    path.reverse();
    Some(path)
}

/// Calls `visit` on every simple st-path of length in `2..=bound` avoiding
/// blocked nodes, shortest first, until it returns `true`. Returns whether
/// it was stopped.
pub(crate) fn for_each_path<F>(g: &UniGraph, s: NodeId, t: NodeId, blocked: &[bool], bound: usize, mut visit: F) -> bool
where
    F: FnMut(&[NodeId]) -> bool,
{
    let dt = reach(g, t, s, blocked, bound);
    if dt[s] == FAR {
        return false;
    }
    let mut on_path = vec![false; g.node_count()];
    on_path[s] = true;
    let mut path = vec![s];
    for len in dt[s] as usize..=bound {
        if extend(g, t, &dt, len, &mut path, &mut on_path, &mut visit) {
            return true;
        }
    }
    false
}

fn extend<F>(
    g: &UniGraph,
    t: NodeId,
    dt: &[u32],
    len: usize,
    path: &mut Vec<NodeId>,
    on_path: &mut [bool],
    visit: &mut F,
) -> bool
where
    F: FnMut(&[NodeId]) -> bool,
{
    let u = *path.last().unwrap();
    let depth = path.len() - 1;
    if depth + 1 == len && depth > 0 && g.has_edge(u, t) {
        path.push(t);
        let stop = visit(path);
        path.pop();
        return stop;
    }
    for &w in g.neighbors(u) {
        if w == t || on_path[w] || dt[w] == FAR || depth + 1 + dt[w] as usize > len {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        let stop = extend(g, t, dt, len, path, on_path, visit);
        path.pop();
        on_path[w] = false;
        if stop {
            return true;
        }
    }
    false
}

/// Nodes whose deletion pushes `d(s,t)` beyond `bound`. Empty when `s` and
/// `t` are already that far apart. Every such node lies on each short
/// path, so only the internals of one shortest path are tried.
pub(crate) fn cut_nodes(g: &UniGraph, s: NodeId, t: NodeId, blocked: &[bool], bound: usize) -> Vec<NodeId> {
    let Some(path) = shortest_path(g, s, t, blocked, bound) else {
        return Vec::new();
    };
    let mut scratch = blocked.to_vec();
    let mut cuts = Vec::new();
    for &x in &path[1..path.len() - 1] {
        scratch[x] = true;
        if distance(g, s, t, &scratch, bound).is_none() {
            cuts.push(x);
        }
        scratch[x] = false;
    }
    cuts.sort_unstable();
    cuts
}

/// The shortest path `q` in `g` that avoids the internals of `p`.
pub(crate) fn path_avoiding(
    g: &UniGraph,
    s: NodeId,
    t: NodeId,
    blocked: &[bool],
    p: &[NodeId],
    bound: usize,
) -> Option<Vec<NodeId>> {
    let mut scratch = blocked.to_vec();
    for &v in &p[1..p.len() - 1] {
        scratch[v] = true;
    }
    shortest_path(g, s, t, &scratch, bound)
}

/// Two internally disjoint st-paths of length at most `bound` in one
/// layer. For `bound <= 4` the absence of a length-bounded cut node is
/// sufficient for two such paths to exist, which settles the negative case
/// without enumeration.
pub(crate) fn two_in_layer(
    g: &UniGraph,
    s: NodeId,
    t: NodeId,
    blocked: &[bool],
    bound: usize,
) -> Option<(Vec<NodeId>, Vec<NodeId>)> {
    distance(g, s, t, blocked, bound)?;
    if bound <= 4 && !cut_nodes(g, s, t, blocked, bound).is_empty() {
        return None;
    }
    let mut found = None;
    for_each_path(g, s, t, blocked, bound, |p| {
        if let Some(q) = path_avoiding(g, s, t, blocked, p, bound) {
            found = Some((p.to_vec(), q));
            true
        } else {
            false
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> UniGraph {
        UniGraph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn direct_edge_is_ignored() {
        let g = UniGraph::from_edges(3, &[(0, 1), (0, 2), (2, 1)]);
        let none = vec![false; 3];
        assert_eq!(distance(&g, 0, 1, &none, 4), Some(2));
        assert_eq!(shortest_path(&g, 0, 1, &none, 4), Some(vec![0, 2, 1]));
        let mut all = Vec::new();
        for_each_path(&g, 0, 1, &none, 4, |p| {
            all.push(p.to_vec());
            false
        });
        assert_eq!(all, vec![vec![0, 2, 1]]);
    }

    #[test]
    fn bounded_distance_and_paths() {
        // s = 0, t = 5 along a chain of length 5
        let g = chain(6);
        let none = vec![false; 6];
        assert_eq!(distance(&g, 0, 5, &none, 4), None);
        assert_eq!(distance(&g, 0, 5, &none, 5), Some(5));
        assert_eq!(cut_nodes(&g, 0, 5, &none, 5), vec![1, 2, 3, 4]);
    }

    #[test]
    fn paths_come_shortest_first() {
        // s=0, t=1; s-2-1 and s-3-4-1
        let g = UniGraph::from_edges(5, &[(0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]);
        let none = vec![false; 5];
        let mut lens = Vec::new();
        for_each_path(&g, 0, 1, &none, 4, |p| {
            lens.push(p.len() - 1);
            false
        });
        assert_eq!(lens, vec![2, 3]);
        let (p, q) = two_in_layer(&g, 0, 1, &none, 3).unwrap();
        assert_eq!((p, q), (vec![0, 2, 1], vec![0, 3, 4, 1]));
        assert!(two_in_layer(&g, 0, 1, &none, 2).is_none());
    }
}
