//! Exact colored connectivity by enumerating node colorings.
//!
//! A node coloring assigns one color to every node except `s` and `t`.
//! `G[δ]` keeps an edge of color `i` only when both endpoints are colored
//! `i` (`s` and `t` match every color), so every st-path of `G[δ]` is a
//! uni-color path of the input, and the optimum is the largest st vertex
//! connectivity of `G[δ]` over all colorings. Colorings are visited in
//! reflected Gray-code order, so consecutive colorings differ at one node
//! and the flow can be repaired rather than recomputed.

use std::collections::BTreeMap;

use crate::error::SolveError;
use crate::flow::{vertex_connectivity, FlowState};
use crate::graph::{Color, ColorGraph, NodeId, Query, UniGraph};
use crate::path::{Path, PathSet};

/// Default limit on the number of colorings enumerated.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// A color for each node other than `s` and `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodeColoring(BTreeMap<NodeId, Color>);

impl NodeColoring {
    pub fn new() -> Self {
        NodeColoring::default()
    }

    pub fn set(&mut self, v: NodeId, color: Color) {
        self.0.insert(v, color);
    }

    pub fn get(&self, v: NodeId) -> Option<Color> {
        self.0.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, Color)> + '_ {
        self.0.iter().map(|(&v, &c)| (v, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(NodeId, Color)> for NodeColoring {
    fn from_iter<I: IntoIterator<Item = (NodeId, Color)>>(iter: I) -> Self {
        NodeColoring(iter.into_iter().collect())
    }
}

/// `G[δ]`: edges of color `i` whose endpoints are both colored `i`, with
/// `s` and `t` compatible with every color. Uncolored nodes keep no edges.
pub fn induced_by_coloring(g: &ColorGraph, q: &Query, coloring: &NodeColoring) -> UniGraph {
    let compatible = |v: NodeId, color: Color| q.is_endpoint(v) || coloring.get(v) == Some(color);
    let mut out = UniGraph::new(g.node_count());
    for (u, v, color) in g.edges() {
        if compatible(u, color) && compatible(v, color) {
            out.insert_edge(u, v);
        }
    }
    out
}

/// Reflected mixed-radix Gray code over `len` digits in `0..radix`. The last
/// digit moves fastest.
#[derive(Clone, Debug)]
struct GrayCursor {
    digits: Vec<usize>,
    dirs: Vec<bool>,
    radix: usize,
}

impl GrayCursor {
    fn new(len: usize, radix: usize) -> Self {
        GrayCursor { digits: vec![0; len], dirs: vec![true; len], radix }
    }

    /// Moves to the next code and returns the changed position.
    fn advance(&mut self) -> Option<usize> {
        for j in (0..self.digits.len()).rev() {
            let d = self.digits[j];
            if self.dirs[j] && d + 1 < self.radix {
                self.digits[j] = d + 1;
                return Some(j);
            }
            if !self.dirs[j] && d > 0 {
                self.digits[j] = d - 1;
                return Some(j);
            }
            self.dirs[j] = !self.dirs[j];
        }
        None
    }
}

fn coloring_count(radix: usize, len: usize) -> Option<u64> {
    (radix as u64).checked_pow(u32::try_from(len).ok()?)
}

fn check_budget(radix: usize, len: usize, budget: u64) -> Result<(), SolveError> {
    match coloring_count(radix, len) {
        Some(needed) if needed <= budget => Ok(()),
        Some(needed) => Err(SolveError::BudgetExceeded { needed: needed.to_string(), budget }),
        None => Err(SolveError::BudgetExceeded { needed: format!("{radix}^{len}"), budget }),
    }
}

/// All `c^k` colorings of `free_nodes` in Gray-code order, starting from the
/// all-1 coloring. Each item carries the node that changed from the previous
/// coloring (`None` for the first).
pub fn gray_colorings(free_nodes: &[NodeId], color_count: usize, budget: u64) -> Result<GrayColorings, SolveError> {
    assert!(color_count >= 1);
    check_budget(color_count, free_nodes.len(), budget)?;
    Ok(GrayColorings {
        nodes: free_nodes.to_vec(),
        cursor: GrayCursor::new(free_nodes.len(), color_count),
        started: false,
    })
}

pub struct GrayColorings {
    nodes: Vec<NodeId>,
    cursor: GrayCursor,
    started: bool,
}

impl GrayColorings {
    fn snapshot(&self) -> NodeColoring {
        self.nodes.iter().zip(&self.cursor.digits).map(|(&v, &d)| (v, Color::from_index(d))).collect()
    }
}

impl Iterator for GrayColorings {
    type Item = (NodeColoring, Option<NodeId>);

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            return Some((self.snapshot(), None));
        }
        let j = self.cursor.advance()?;
        Some((self.snapshot(), Some(self.nodes[j])))
    }
}

/// How each coloring's connectivity is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FlowMode {
    /// Repair the previous maximum flow after the one-node change.
    #[default]
    Incremental,
    /// Solve a fresh maximum flow per coloring.
    Recompute,
}

#[derive(Clone, Debug)]
pub struct ExactConfig {
    pub budget: u64,
    pub mode: FlowMode,
    /// Pin nodes whose edges all carry one color to that color instead of
    /// enumerating them. Any other color isolates such a node, so the
    /// optimum is unchanged.
    pub fix_single_color_nodes: bool,
    /// Worker threads; above 1 the colorings are split by the first free
    /// node's color. The witness is then deterministic per thread count only.
    pub threads: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig { budget: DEFAULT_BUDGET, mode: FlowMode::Incremental, fix_single_color_nodes: true, threads: 1 }
    }
}

/// Maximum set of internally disjoint uni-color st-paths.
pub fn max_cdp_exact(g: &ColorGraph, q: &Query) -> Result<PathSet, SolveError> {
    max_cdp_exact_with(g, q, &ExactConfig::default())
}

pub fn max_cdp_exact_with(g: &ColorGraph, q: &Query, config: &ExactConfig) -> Result<PathSet, SolveError> {
    if let Some(bound) = q.length_bound {
        return Err(SolveError::UnsupportedLengthBound { algorithm: "exact", bound });
    }
    let (g, mut solution) = g.strip_st_edges(q);
    let c = g.color_count();
    let mut base = vec![Color::new(1); g.node_count()];
    let mut free = Vec::new();
    for (v, slot) in base.iter_mut().enumerate() {
        if q.is_endpoint(v) {
            continue;
        }
        let present: Vec<Color> = g.colors().filter(|&col| g.layer(col).degree(v) > 0).collect();
        match present.as_slice() {
            [] if config.fix_single_color_nodes => {}
            [only] if config.fix_single_color_nodes => *slot = *only,
            _ => free.push(v),
        }
    }
    check_budget(c, free.len(), config.budget)?;

    let search = Search { g: &g, q, free: &free, mode: config.mode, upper: upper_bound(&g, q) };
    let (_, paths) = if config.threads > 1 && !free.is_empty() && c > 1 {
        search.run_partitioned(&base, config.threads)
    } else {
        search.run(base, 0)
    };
    for p in paths {
        solution.push(p);
    }
    Ok(solution)
}

/// Distinct neighbors of `s` (resp. `t`) over all colors bound the answer.
fn upper_bound(g: &ColorGraph, q: &Query) -> usize {
    let distinct = |v: NodeId| {
        let mut all: Vec<NodeId> = g.colors().flat_map(|col| g.layer(col).neighbors(v).to_vec()).collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    distinct(q.source).min(distinct(q.target))
}

struct Search<'a> {
    g: &'a ColorGraph,
    q: &'a Query,
    free: &'a [NodeId],
    mode: FlowMode,
    upper: usize,
}

impl Search<'_> {
    fn compatible(&self, colors: &[Color], v: NodeId, color: Color) -> bool {
        self.q.is_endpoint(v) || colors[v] == color
    }

    fn neighbors_under(&self, colors: &[Color], v: NodeId) -> Vec<NodeId> {
        let color = colors[v];
        self.g.layer(color).neighbors(v).iter().copied().filter(|&w| self.compatible(colors, w, color)).collect()
    }

    fn induced(&self, colors: &[Color]) -> UniGraph {
        let mut out = UniGraph::new(self.g.node_count());
        for (u, v, color) in self.g.edges() {
            if self.compatible(colors, u, color) && self.compatible(colors, v, color) {
                out.insert_edge(u, v);
            }
        }
        out
    }

    fn label(&self, colors: &[Color], paths: Vec<Vec<NodeId>>) -> Vec<Path> {
        paths.into_iter().map(|nodes| Path::new(colors[nodes[1]], nodes)).collect()
    }

    /// Enumerates colorings of `free[skip..]` starting from `colors`.
    fn run(&self, mut colors: Vec<Color>, skip: usize) -> (usize, Vec<Path>) {
        let (s, t) = (self.q.source, self.q.target);
        let free = &self.free[skip..];
        let c = self.g.color_count();
        let start = |colors: &mut Vec<Color>| {
            for &v in free {
                colors[v] = Color::new(1);
            }
        };
        start(&mut colors);
        let mut cursor = GrayCursor::new(free.len(), c);
        let mut graph = self.induced(&colors);
        let mut state = match self.mode {
            FlowMode::Incremental => Some(FlowState::new(graph.clone(), s, t)),
            FlowMode::Recompute => None,
        };
        let mut best_kappa = 0;
        let mut best_paths = Vec::new();
        loop {
            let (kappa, paths) = match &state {
                Some(state) => (state.kappa(), None),
                None => {
                    let r = vertex_connectivity(&graph, s, t);
                    (r.kappa, Some(r.paths))
                }
            };
            if kappa > best_kappa {
                best_kappa = kappa;
                let paths = paths.unwrap_or_else(|| state.as_ref().unwrap().result().paths);
                best_paths = self.label(&colors, paths);
                if best_kappa >= self.upper {
                    break;
                }
            }
            let Some(j) = cursor.advance() else { break };
            let v = free[j];
            colors[v] = Color::from_index(cursor.digits[j]);
            let nbrs = self.neighbors_under(&colors, v);
            match &mut state {
                Some(state) => {
                    state.replace_neighbors(v, &nbrs);
                }
                None => graph.set_neighbors(v, &nbrs),
            }
        }
        (best_kappa, best_paths)
    }

    fn run_partitioned(&self, base: &[Color], threads: usize) -> (usize, Vec<Path>) {
        let c = self.g.color_count();
        let first = self.free[0];
        let workers = threads.min(c);
        let results: Vec<(usize, usize, Vec<Path>)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        (w..c)
                            .step_by(workers)
                            .map(|k| {
                                let mut colors = base.to_vec();
                                colors[first] = Color::from_index(k);
                                let (kappa, paths) = self.run(colors, 1);
                                (k, kappa, paths)
                            })
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        });
        results
            .into_iter()
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .map(|(_, kappa, paths)| (kappa, paths))
            .unwrap_or_default()
    }
}
