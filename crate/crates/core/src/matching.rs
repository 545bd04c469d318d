//! Maximum-cardinality matching in general graphs, and the pair graph whose
//! matchings are sets of disjoint length-3 st-paths.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{Color, ColorGraph, NodeId, Query};
use crate::path::Path;

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching of the simple undirected graph on
/// `0..node_count` given by `edges`. Returns pairs `(u, v)` with `u < v`,
/// sorted.
///
/// Edmonds' blossom algorithm with union-find blossom bases; each exposed
/// vertex roots at most one search, so the total is `O(n (n + m))`. The
/// search is iterative.
pub fn max_matching(node_count: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); node_count];
    for &(u, v) in edges {
        if u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
        nbrs.dedup();
    }
    let mut blossom = Blossom::new(adj);
    blossom.solve();
    let mut out: Vec<(usize, usize)> = (0..node_count)
        .filter(|&u| blossom.mate[u] != NONE && u < blossom.mate[u])
        .map(|u| (u, blossom.mate[u]))
        .collect();
    out.sort_unstable();
    out
}

struct Blossom {
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    /// -1 unlabeled, 0 odd (inner), 1 even (outer)
    label: Vec<i8>,
    link: Vec<usize>,
    base: Vec<usize>,
    depth: Vec<usize>,
    queue: VecDeque<usize>,
    touched: Vec<usize>,
}

impl Blossom {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            label: vec![-1; n],
            link: vec![NONE; n],
            base: (0..n).collect(),
            depth: vec![0; n],
            queue: VecDeque::new(),
            touched: Vec::new(),
        }
    }

    fn solve(&mut self) {
        let n = self.adj.len();
        // greedy start
        for u in 0..n {
            if self.mate[u] == NONE {
                if let Some(&v) = self.adj[u].iter().find(|&&v| self.mate[v] == NONE) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                self.augment_from(root);
            }
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.base[x] != x {
            self.base[x] = self.base[self.base[x]];
            x = self.base[x];
        }
        x
    }

    fn lca(&mut self, u: usize, v: usize) -> usize {
        let mut u = self.find(u);
        let mut v = self.find(v);
        while u != v {
            if self.depth[u] < self.depth[v] {
                std::mem::swap(&mut u, &mut v);
            }
            let next = self.link[self.mate[u]];
            u = self.find(next);
        }
        u
    }

    fn contract(&mut self, mut u: usize, mut v: usize, top: usize) {
        while self.find(u) != top {
            self.link[u] = v;
            v = self.mate[u];
            if self.label[v] == 0 {
                self.label[v] = 1;
                self.queue.push_back(v);
            }
            self.base[u] = top;
            self.base[v] = top;
            u = self.link[v];
        }
    }

    fn visit(&mut self, v: usize) {
        if self.label[v] == -1 {
            self.touched.push(v);
        }
    }

    fn augment_from(&mut self, root: usize) -> bool {
        for v in self.touched.drain(..) {
            self.label[v] = -1;
            self.link[v] = NONE;
            self.base[v] = v;
        }
        self.queue.clear();
        self.touched.push(root);
        self.label[root] = 1;
        self.depth[root] = 0;
        self.queue.push_back(root);
        while let Some(u) = self.queue.pop_front() {
            for i in 0..self.adj[u].len() {
                let v = self.adj[u][i];
                if self.label[v] == -1 {
                    self.visit(v);
                    self.label[v] = 0;
                    self.link[v] = u;
                    self.depth[v] = self.depth[u] + 1;
                    if self.mate[v] == NONE {
                        // flip the alternating path ending at v
                        let (mut x, mut y) = (v, u);
                        while y != NONE {
                            let next = self.mate[y];
                            self.mate[x] = y;
                            self.mate[y] = x;
                            x = next;
                            y = if x == NONE { NONE } else { self.link[x] };
                        }
                        return true;
                    }
                    let w = self.mate[v];
                    self.visit(w);
                    self.label[w] = 1;
                    self.depth[w] = self.depth[u] + 2;
                    self.queue.push_back(w);
                } else if self.label[v] == 1 && self.find(v) != self.find(u) {
                    let top = self.lca(u, v);
                    self.contract(u, v, top);
                    self.contract(v, u, top);
                }
            }
        }
        false
    }
}

/// The pair graph `H`: an arc `<u,v>` for each color `i` with
/// `(s,u), (u,v), (v,t)` all in `E_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairGraph {
    arcs: BTreeMap<(NodeId, NodeId), BTreeSet<Color>>,
}

impl PairGraph {
    /// Ordered pairs with the colors realizing them.
    pub fn arcs(&self) -> &BTreeMap<(NodeId, NodeId), BTreeSet<Color>> {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Underlying undirected edges `(min, max)`, ascending.
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        let set: BTreeSet<(NodeId, NodeId)> = self.arcs.keys().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        set.into_iter().collect()
    }

    /// The length-3 path realizing the undirected edge `{a, b}`: the smallest
    /// `(color, u, v)` among its arcs.
    pub fn realize(&self, a: NodeId, b: NodeId, query: &Query) -> Option<Path> {
        [(a, b), (b, a)]
            .iter()
            .filter_map(|&(u, v)| self.arcs.get(&(u, v)).map(|cs| (*cs.iter().next().unwrap(), u, v)))
            .min()
            .map(|(color, u, v)| Path::new(color, vec![query.source, u, v, query.target]))
    }
}

pub fn build_pair_graph(g: &ColorGraph, query: &Query) -> PairGraph {
    let (s, t) = (query.source, query.target);
    let mut arcs: BTreeMap<(NodeId, NodeId), BTreeSet<Color>> = BTreeMap::new();
    for color in g.colors() {
        let layer = g.layer(color);
        for &u in layer.neighbors(s) {
            if u == t {
                continue;
            }
            for &v in layer.neighbors(u) {
                if v != s && v != t && layer.has_edge(v, t) {
                    arcs.entry((u, v)).or_default().insert(color);
                }
            }
        }
    }
    PairGraph { arcs }
}
