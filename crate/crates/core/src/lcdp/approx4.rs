//! 2-approximation for paths of length at most four.
//!
//! Local search over path sets with swap depth 1: add a short path that
//! avoids everything chosen, or give up one chosen path for two. Both moves
//! are answered by graph queries on the region within distance four of
//! `s` and `t`, never by listing all short paths.

use std::collections::{HashMap, HashSet};

use crate::graph::{Color, ColorGraph, NodeId, Query};
use crate::path::{Path, PathSet};

use super::bounded::{reach, shortest_path, FAR};
use super::two_path::find_two_paths;

const BOUND: usize = 4;

/// The part of a graph that can carry an st-path of length at most
/// [`BOUND`], relabeled with `s = 0` and `t = 1`.
struct LocalView {
    graph: ColorGraph,
    to_global: Vec<NodeId>,
    to_local: HashMap<NodeId, usize>,
}

impl LocalView {
    /// `g` must carry no `(s,t)` edge.
    fn build(g: &ColorGraph, q: &Query) -> Self {
        let (s, t) = (q.source, q.target);
        let none = vec![false; g.node_count()];
        let mut to_global = vec![s, t];
        let mut to_local: HashMap<NodeId, usize> = HashMap::from([(s, 0), (t, 1)]);
        let mut kept: Vec<HashSet<NodeId>> = Vec::new();
        for color in g.colors() {
            let layer = g.layer(color);
            let ds = reach(layer, s, t, &none, BOUND);
            let dt = reach(layer, t, s, &none, BOUND);
            let mut set = HashSet::new();
            if ds[t] != FAR {
                for v in 0..g.node_count() {
                    if v != s && v != t && ds[v] != FAR && dt[v] != FAR && (ds[v] + dt[v]) as usize <= BOUND {
                        set.insert(v);
                    }
                }
            }
            let mut members: Vec<NodeId> = set.iter().copied().collect();
            members.sort_unstable();
            for v in members {
                to_local.entry(v).or_insert_with(|| {
                    to_global.push(v);
                    to_global.len() - 1
                });
            }
            kept.push(set);
        }
        let mut graph = ColorGraph::new(to_global.len(), g.color_count());
        for (color, set) in g.colors().zip(&kept) {
            let inside = |v: NodeId| v == s || v == t || set.contains(&v);
            let mut members: Vec<NodeId> = set.iter().copied().collect();
            members.sort_unstable();
            for v in members {
                for &w in g.layer(color).neighbors(v) {
                    if inside(w) {
                        let _ = graph.add_edge(to_local[&v], to_local[&w], color.get());
                    }
                }
            }
        }
        LocalView { graph, to_global, to_local }
    }

    fn globalize(&self, color: Color, nodes: &[usize]) -> Path {
        Path::new(color, nodes.iter().map(|&v| self.to_global[v]).collect())
    }
}

type LocalPath = (Color, Vec<usize>);

enum Move {
    Add(LocalPath),
    Swap(usize, [LocalPath; 2]),
}

fn scan(view: &LocalView, chosen: &[LocalPath], used: &[bool]) -> Option<Move> {
    let g = &view.graph;
    let add = g
        .colors()
        .filter_map(|c| shortest_path(g.layer(c), 0, 1, used, BOUND).map(|p| (c, p)))
        .min_by_key(|(c, p)| (p.len(), *c));
    if let Some(found) = add {
        return Some(Move::Add(found));
    }
    let mut blocked = used.to_vec();
    for (idx, (_, nodes)) in chosen.iter().enumerate() {
        let internal = &nodes[1..nodes.len() - 1];
        for &v in internal {
            blocked[v] = false;
        }
        let found = find_two_paths(g, 0, 1, &blocked);
        for &v in internal {
            blocked[v] = true;
        }
        if let Some(pair) = found {
            return Some(Move::Swap(idx, pair));
        }
    }
    None
}

fn mark(used: &mut [bool], nodes: &[usize], value: bool) {
    for &v in &nodes[1..nodes.len() - 1] {
        used[v] = value;
    }
}

/// Disjoint uni-color st-paths of length at most four, at least half as
/// many as an optimal set.
pub fn lcdp4_two_approx(g: &ColorGraph, q: &Query) -> PathSet {
    let (stripped, mut out) = g.strip_st_edges(q);
    let view = LocalView::build(&stripped, q);
    let mut used = vec![false; view.graph.node_count()];
    let mut chosen: Vec<LocalPath> = Vec::new();
    while let Some(step) = scan(&view, &chosen, &used) {
        match step {
            Move::Add(p) => {
                mark(&mut used, &p.1, true);
                chosen.push(p);
            }
            Move::Swap(idx, pair) => {
                let old = chosen.remove(idx);
                mark(&mut used, &old.1, false);
                for p in pair {
                    mark(&mut used, &p.1, true);
                    chosen.push(p);
                }
            }
        }
    }
    for (color, nodes) in &chosen {
        out.push(view.globalize(*color, nodes));
    }
    out
}

/// A move available to the local search from a given solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lcdp4Improvement {
    /// A short path disjoint from every path of the solution.
    Add(Path),
    /// Two disjoint short paths that only conflict with the solution's path
    /// at index `remove`.
    Swap { remove: usize, add: [Path; 2] },
}

/// The first 1-for-0 or 2-for-1 improvement of `sol`, if any. Direct `(s,t)`
/// paths in `sol` are ignored.
pub fn lcdp4_find_improvement(g: &ColorGraph, q: &Query, sol: &PathSet) -> Option<Lcdp4Improvement> {
    let (stripped, _) = g.strip_st_edges(q);
    let view = LocalView::build(&stripped, q);
    let mut used = vec![false; view.graph.node_count()];
    let mut chosen = Vec::new();
    let mut positions = Vec::new();
    for (pos, p) in sol.iter().enumerate() {
        if p.len() < 2 {
            continue;
        }
        let nodes: Vec<usize> = p.nodes().iter().filter_map(|v| view.to_local.get(v).copied()).collect();
        if nodes.len() >= 2 {
            mark(&mut used, &nodes, true);
            chosen.push((p.color(), nodes));
            positions.push(pos);
        }
    }
    match scan(&view, &chosen, &used)? {
        Move::Add((c, p)) => Some(Lcdp4Improvement::Add(view.globalize(c, &p))),
        Move::Swap(idx, [(ca, a), (cb, b)]) => Some(Lcdp4Improvement::Swap {
            remove: positions[idx],
            add: [view.globalize(ca, &a), view.globalize(cb, &b)],
        }),
    }
}
