//! Unit-capacity st vertex connectivity for single-relation graphs.
//!
//! Every node other than `s` and `t` is split into an in-copy and an
//! out-copy joined by a unit arc, and each undirected edge `{u, w}` becomes
//! the arcs `u_out -> w_in` and `w_out -> u_in`. Each internal node
//! carries at most one unit, so flow is stored as successor/predecessor
//! links per node. Augmenting paths are found by
//! breadth-first search over the residual graph with neighbors visited in
//! ascending order, so witnesses are deterministic and short.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{Color, NodeId, UniGraph};
use crate::path::{Path, PathSet};

/// Maximum number of internally disjoint st-paths, with the paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// Node sequences from `s` to `t`, sorted by their first hop.
    pub paths: Vec<Vec<NodeId>>,
}

impl ConnectivityResult {
    pub fn into_path_set(self, color: Color) -> PathSet {
        self.paths.into_iter().map(|nodes| Path::new(color, nodes)).collect()
    }
}

/// `kappa(s,t)` of `g` by unit-capacity max flow with node splitting.
///
/// A direct `(s,t)` edge counts as one extra length-1 path.
pub fn vertex_connectivity(g: &UniGraph, s: NodeId, t: NodeId) -> ConnectivityResult {
    let mut flow = Flow::new(g.node_count(), s, t);
    flow.saturate(g);
    let mut paths = Vec::new();
    if g.has_edge(s, t) {
        paths.push(vec![s, t]);
    }
    paths.extend(flow.paths(g));
    ConnectivityResult { kappa: paths.len(), paths }
}

/// Unweighted shortest-path lengths from `from`; `None` marks unreachable.
pub fn bfs_distances(g: &UniGraph, from: NodeId) -> Vec<Option<usize>> {
    g.bfs_distances(from)
}

/// Whether `t` is reachable from `s` without entering any node in `blocked`.
pub fn connected_avoiding(g: &UniGraph, s: NodeId, t: NodeId, blocked: &[NodeId]) -> bool {
    let mut seen = vec![false; g.node_count()];
    for &b in blocked {
        seen[b] = true;
    }
    if seen[s] || seen[t] {
        return false;
    }
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            return true;
        }
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Nodes other than `s`, `t` whose removal disconnects `s` from `t`.
///
/// Empty when `s` and `t` are disconnected or `kappa(s,t) >= 2`. Only the
/// internal nodes of one witness path are candidates, since a cut node lies
/// on every st-path.
pub fn st_cut_nodes(g: &UniGraph, s: NodeId, t: NodeId) -> BTreeSet<NodeId> {
    let conn = vertex_connectivity(g, s, t);
    if conn.kappa != 1 {
        return BTreeSet::new();
    }
    let path = &conn.paths[0];
    path[1..path.len() - 1].iter().copied().filter(|&v| !connected_avoiding(g, s, t, &[v])).collect()
}

/// A maximum flow that can be repaired after the edges around one node
/// change, instead of being recomputed.
#[derive(Clone, Debug)]
pub struct FlowState {
    graph: UniGraph,
    flow: Flow,
    last_augmentations: usize,
}

impl FlowState {
    /// Computes a maximum flow on `graph`. A direct `(s,t)` edge is ignored.
    pub fn new(graph: UniGraph, s: NodeId, t: NodeId) -> Self {
        let mut flow = Flow::new(graph.node_count(), s, t);
        let last_augmentations = flow.saturate(&graph);
        FlowState { graph, flow, last_augmentations }
    }

    pub fn graph(&self) -> &UniGraph {
        &self.graph
    }

    pub fn kappa(&self) -> usize {
        self.flow.value
    }

    pub fn result(&self) -> ConnectivityResult {
        let paths = self.flow.paths(&self.graph);
        ConnectivityResult { kappa: paths.len(), paths }
    }

    /// Successful augmentations performed by the last update.
    pub fn last_augmentations(&self) -> usize {
        self.last_augmentations
    }

    /// Replaces the graph with `new_graph`, which may differ from the current
    /// one only in edges incident to `changed`, and restores maximality.
    pub fn reconnect(&mut self, changed: NodeId, new_graph: UniGraph) -> ConnectivityResult {
        debug_assert!(self.differs_only_at(changed, &new_graph));
        self.flow.drop_path_through(changed);
        self.graph = new_graph;
        self.last_augmentations = self.flow.saturate(&self.graph);
        self.result()
    }

    /// Like [`FlowState::reconnect`], but edits the neighborhood of `changed`
    /// in place. Returns the new `kappa`.
    pub fn replace_neighbors(&mut self, changed: NodeId, neighbors: &[NodeId]) -> usize {
        self.flow.drop_path_through(changed);
        self.graph.set_neighbors(changed, neighbors);
        self.last_augmentations = self.flow.saturate(&self.graph);
        self.flow.value
    }

    fn differs_only_at(&self, changed: NodeId, other: &UniGraph) -> bool {
        let strip = |g: &UniGraph| {
            let mut g = g.clone();
            g.isolate(changed);
            g
        };
        other.node_count() == self.graph.node_count() && strip(&self.graph) == strip(other)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    In,
    Out,
}

#[derive(Clone, Debug)]
struct Flow {
    s: NodeId,
    t: NodeId,
    /// Node receiving this node's unit of flow (internal nodes only).
    next: Vec<Option<NodeId>>,
    /// Node sending flow into this node (internal nodes only).
    prev: Vec<Option<NodeId>>,
    value: usize,
}

impl Flow {
    fn new(n: usize, s: NodeId, t: NodeId) -> Self {
        Flow { s, t, next: vec![None; n], prev: vec![None; n], value: 0 }
    }

    fn saturated(&self, v: NodeId) -> bool {
        self.next[v].is_some()
    }

    /// Flow on the arc `u_out -> w_in`.
    fn carries(&self, u: NodeId, w: NodeId) -> bool {
        if w == self.t {
            u != self.s && self.next[u] == Some(w)
        } else {
            self.prev[w] == Some(u)
        }
    }

    /// Augments until no augmenting path is left; returns how many succeeded.
    fn saturate(&mut self, g: &UniGraph) -> usize {
        let mut count = 0;
        while self.augment(g) {
            count += 1;
        }
        if count > 0 {
            self.normalize(g);
        }
        count
    }

    fn augment(&mut self, g: &UniGraph) -> bool {
        let (s, t) = (self.s, self.t);
        let n = g.node_count();
        let idx = |v: NodeId, side: Side| 2 * v + (side == Side::Out) as usize;
        // parent state for each split node; usize::MAX = unvisited
        let mut parent = vec![usize::MAX; 2 * n];
        let root = idx(s, Side::Out);
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        let mut sink_parent = None;
        'search: while let Some(state) = queue.pop_front() {
            let (v, side) = (state / 2, if state % 2 == 1 { Side::Out } else { Side::In });
            match side {
                Side::Out => {
                    for &w in g.neighbors(v) {
                        if w == s || (v == s && w == t) || self.carries(v, w) {
                            continue;
                        }
                        if w == t {
                            sink_parent = Some(state);
                            break 'search;
                        }
                        let next = idx(w, Side::In);
                        if parent[next] == usize::MAX {
                            parent[next] = state;
                            queue.push_back(next);
                        }
                    }
                    if v != s && self.saturated(v) {
                        let back = idx(v, Side::In);
                        if parent[back] == usize::MAX {
                            parent[back] = state;
                            queue.push_back(back);
                        }
                    }
                }
                Side::In => {
                    if !self.saturated(v) {
                        let out = idx(v, Side::Out);
                        if parent[out] == usize::MAX {
                            parent[out] = state;
                            queue.push_back(out);
                        }
                    } else if let Some(p) = self.prev[v] {
                        let back = idx(p, Side::Out);
                        if p != s && parent[back] == usize::MAX {
                            parent[back] = state;
                            queue.push_back(back);
                        }
                    }
                }
            }
        }
        let Some(last) = sink_parent else {
            return false;
        };
        let mut states = vec![2 * t];
        let mut cur = last;
        while cur != root {
            states.push(cur);
            cur = parent[cur];
        }
        states.push(root);
        states.reverse();
        // Apply arcs in path order. Cancellations only clear a link that still
        // points at the cancelled arc, so an earlier assignment survives.
        for pair in states.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let (u, w) = (a / 2, b / 2);
            let (a_out, b_out) = (a % 2 == 1, b % 2 == 1);
            if u == w {
                continue; // internal arc, implicit
            }
            if a_out && !b_out {
                if u != s {
                    self.next[u] = Some(w);
                }
                if w != t {
                    self.prev[w] = Some(u);
                }
            } else {
                // in(u) -> out(w): cancel w_out -> u_in
                if self.prev[u] == Some(w) {
                    self.prev[u] = None;
                }
                if self.next[w] == Some(u) {
                    self.next[w] = None;
                }
            }
        }
        self.value += 1;
        true
    }

    /// Drops circulations so that every saturated node lies on an st-path.
    fn normalize(&mut self, g: &UniGraph) {
        let mut on_path = vec![false; self.next.len()];
        for &w in g.neighbors(self.s) {
            if w == self.t || self.prev[w] != Some(self.s) {
                continue;
            }
            let mut v = w;
            while v != self.t {
                on_path[v] = true;
                v = self.next[v].expect("flow path ends before t");
            }
        }
        for (v, _) in on_path.iter().enumerate().filter(|(_, &on)| !on) {
            self.next[v] = None;
            self.prev[v] = None;
        }
        debug_assert_eq!(self.paths(g).len(), self.value);
    }

    fn drop_path_through(&mut self, v: NodeId) {
        if v == self.s || v == self.t || !self.saturated(v) {
            return;
        }
        let mut forward = self.next[v];
        let mut u = v;
        loop {
            let p = self.prev[u].take();
            self.next[u] = None;
            match p {
                Some(p) if p != self.s => u = p,
                _ => break,
            }
        }
        while let Some(x) = forward {
            if x == self.t {
                break;
            }
            forward = self.next[x].take();
            self.prev[x] = None;
        }
        self.value -= 1;
    }

    fn paths(&self, g: &UniGraph) -> Vec<Vec<NodeId>> {
        let mut paths = Vec::with_capacity(self.value);
        for &w in g.neighbors(self.s) {
            if w == self.t || self.prev[w] != Some(self.s) {
                continue;
            }
            let mut path = vec![self.s, w];
            let mut v = w;
            while v != self.t {
                v = self.next[v].expect("broken flow path");
                path.push(v);
            }
            paths.push(path);
        }
        paths
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;
    use crate::instances::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Minimum st vertex separator by exhaustive search over node subsets.
    fn min_separator(g: &UniGraph, s: NodeId, t: NodeId) -> usize {
        if g.has_edge(s, t) {
            let mut h = g.clone();
            h.remove_edge(s, t);
            return 1 + min_separator(&h, s, t);
        }
        let others: Vec<NodeId> = (0..g.node_count()).filter(|&v| v != s && v != t).collect();
        let mut best = others.len();
        for mask in 0u32..(1 << others.len()) {
            let size = mask.count_ones() as usize;
            if size >= best {
                continue;
            }
            let blocked: Vec<NodeId> =
                others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            if !connected_avoiding(g, s, t, &blocked) {
                best = size;
            }
        }
        best
    }

    fn random_uni(rng: &mut ChaCha8Rng, n: usize, p: f64) -> UniGraph {
        let mut g = UniGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    fn assert_witness(g: &UniGraph, s: NodeId, t: NodeId, r: &ConnectivityResult) {
        assert_eq!(r.kappa, r.paths.len());
        let mut used = vec![false; g.node_count()];
        for p in &r.paths {
            assert_eq!((p[0], *p.last().unwrap()), (s, t));
            for w in p.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
            for &v in &p[1..p.len() - 1] {
                assert!(!used[v], "node {v} reused");
                used[v] = true;
            }
        }
    }

    #[test]
    fn examples() {
        let (g, _) = fixtures::fix_a();
        let r = vertex_connectivity(g.layer(Color::new(1)), 0, 1);
        assert_eq!(r, ConnectivityResult { kappa: 1, paths: vec![vec![0, 2, 1]] });

        let fan = UniGraph::from_edges(4, &[(0, 2), (0, 3), (2, 1), (3, 1)]);
        assert_eq!(vertex_connectivity(&fan, 0, 1).kappa, 2);

        let (b, _) = fixtures::fix_b();
        assert_eq!(vertex_connectivity(b.layer(Color::new(1)), 0, 1).kappa, 0);
    }

    #[test]
    fn menger_against_brute_force_separators() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..400 {
            let n = rng.gen_range(2..=8);
            let p = [0.2, 0.4, 0.6][trial % 3];
            let g = random_uni(&mut rng, n, p);
            let r = vertex_connectivity(&g, 0, 1);
            assert_witness(&g, 0, 1, &r);
            assert_eq!(r.kappa, min_separator(&g, 0, 1), "trial {trial}: {g:?}");
        }
    }

    #[test]
    fn cut_node_examples() {
        let chain = UniGraph::from_edges(4, &[(0, 2), (2, 3), (3, 1)]);
        assert_eq!(st_cut_nodes(&chain, 0, 1), BTreeSet::from([2, 3]));
        let fan = UniGraph::from_edges(4, &[(0, 2), (0, 3), (2, 1), (3, 1)]);
        assert!(st_cut_nodes(&fan, 0, 1).is_empty());
        let split = UniGraph::from_edges(4, &[(0, 2), (3, 1)]);
        assert!(st_cut_nodes(&split, 0, 1).is_empty());
    }

    #[test]
    fn cut_nodes_match_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(3..=8);
            let g = random_uni(&mut rng, n, 0.35);
            let cuts = st_cut_nodes(&g, 0, 1);
            let kappa = vertex_connectivity(&g, 0, 1).kappa;
            let expected: BTreeSet<NodeId> = if connected_avoiding(&g, 0, 1, &[]) {
                (2..n).filter(|&v| !connected_avoiding(&g, 0, 1, &[v])).collect()
            } else {
                BTreeSet::new()
            };
            assert_eq!(cuts, expected);
            if kappa >= 1 && !g.has_edge(0, 1) {
                assert_eq!(kappa == 1, !cuts.is_empty());
            }
        }
    }

    #[test]
    fn reconnect_examples() {
        // FIX-A collapsed to one color: s-a-t and s-b-t.
        let g = UniGraph::from_edges(4, &[(0, 2), (2, 1), (0, 3), (3, 1)]);
        let mut state = FlowState::new(g.clone(), 0, 1);
        assert_eq!(state.kappa(), 2);
        let mut h = g.clone();
        h.isolate(2);
        assert_eq!(state.reconnect(2, h.clone()).kappa, 1);

        // Node 4 is unused by the witness.
        let g = UniGraph::from_edges(5, &[(0, 2), (2, 1), (4, 2)]);
        let mut state = FlowState::new(g.clone(), 0, 1);
        let before = state.result();
        let mut h = g.clone();
        h.isolate(4);
        assert_eq!(state.reconnect(4, h), before);
    }

    #[test]
    fn incremental_matches_from_scratch() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let n = rng.gen_range(4..=12);
            let full = random_uni(&mut rng, n, 0.4);
            let mut current = full.clone();
            let mut state = FlowState::new(current.clone(), 0, 1);
            for _ in 0..100 {
                let v = rng.gen_range(2..n);
                let nbrs: Vec<NodeId> = full.neighbors(v).iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                current.set_neighbors(v, &nbrs);
                let kappa = state.replace_neighbors(v, &nbrs);
                assert!(state.last_augmentations() <= 2);
                let scratch = vertex_connectivity(&current, 0, 1);
                let direct = usize::from(current.has_edge(0, 1));
                assert_eq!(kappa + direct, scratch.kappa);
                assert_witness(&current, 0, 1, &state.result());
            }
        }
    }
}
