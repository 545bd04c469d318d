//! Edge-colored undirected graphs and the graph surgery shared by the solvers.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Dense node identifier in `0..n`.
pub type NodeId = usize;

/// A relation (edge color). Colors are 1-based, matching the file format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(u32);

impl Color {
    /// Wraps a 1-based color number. Panics on zero.
    pub fn new(color: u32) -> Self {
        assert!(color >= 1, "colors are 1-based");
        Color(color)
    }

    /// Color from a 0-based layer index.
    pub fn from_index(index: usize) -> Self {
        Color(index as u32 + 1)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// 0-based layer index.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A single-relation undirected simple graph with sorted adjacency lists.
///
/// Node ids are never renumbered: removing a node only isolates it.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniGraph {
    adj: Vec<Vec<NodeId>>,
}

impl UniGraph {
    pub fn new(node_count: usize) -> Self {
        UniGraph { adj: vec![Vec::new(); node_count] }
    }

    /// Builds a graph from an edge list, ignoring duplicates. Panics on
    /// self-loops or out-of-range ids.
    pub fn from_edges(node_count: usize, edges: &[(NodeId, NodeId)]) -> Self {
        let mut g = UniGraph::new(node_count);
        for &(u, v) in edges {
            assert!(u != v, "self-loop {u}");
            g.insert_edge(u, v);
        }
        g
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    pub fn insert_edge(&mut self, u: NodeId, v: NodeId) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    /// Removes `{u, v}`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: NodeId, v: NodeId) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("adjacency out of sync");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Drops every edge incident to `v`.
    pub fn isolate(&mut self, v: NodeId) {
        let nbrs = std::mem::take(&mut self.adj[v]);
        for w in nbrs {
            if let Ok(pos) = self.adj[w].binary_search(&v) {
                self.adj[w].remove(pos);
            }
        }
    }

    /// Replaces the neighborhood of `v` with `neighbors` (any order, no `v`).
    pub fn set_neighbors(&mut self, v: NodeId, neighbors: &[NodeId]) {
        self.isolate(v);
        for &w in neighbors {
            self.insert_edge(v, w);
        }
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Unweighted shortest-path lengths from `from`; `None` is unreachable.
    pub fn bfs_distances(&self, from: NodeId) -> Vec<Option<usize>> {
        self.bfs_distances_stopping_at(from, None)
    }

    /// Like [`UniGraph::bfs_distances`], but `wall` is labeled and never
    /// expanded, so every reported walk ends there if it touches it.
    pub fn bfs_distances_stopping_at(&self, from: NodeId, wall: Option<NodeId>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    if Some(w) != wall {
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }
}

/// An undirected multi-relation graph: `n` nodes and `c` edge sets.
///
/// The same node pair may be joined in several colors; within one color
/// there are no duplicates and no self-loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorGraph {
    node_count: usize,
    layers: Vec<UniGraph>,
}

impl ColorGraph {
    pub fn new(node_count: usize, color_count: usize) -> Self {
        assert!(color_count >= 1, "a color graph has at least one color");
        ColorGraph { node_count, layers: vec![UniGraph::new(node_count); color_count] }
    }

    /// Builds a graph from `(u, v, color)` triples, rejecting invalid edges.
    pub fn from_edges(
        node_count: usize,
        color_count: usize,
        edges: &[(NodeId, NodeId, u32)],
    ) -> Result<Self, GraphError> {
        let mut g = ColorGraph::new(node_count, color_count);
        for &(u, v, color) in edges {
            g.add_edge(u, v, color)?;
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn color_count(&self) -> usize {
        self.layers.len()
    }

    /// Total number of edges over all colors (`m`).
    pub fn edge_count(&self) -> usize {
        self.layers.iter().map(UniGraph::edge_count).sum()
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        (0..self.layers.len()).map(Color::from_index)
    }

    pub fn check_color(&self, color: u32) -> Result<Color, GraphError> {
        if color == 0 || color as usize > self.layers.len() {
            return Err(GraphError::ColorOutOfRange { color, colors: self.layers.len() });
        }
        Ok(Color(color))
    }

    pub fn check_node(&self, v: NodeId) -> Result<(), GraphError> {
        if v >= self.node_count {
            return Err(GraphError::NodeOutOfRange { node: v, nodes: self.node_count });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId, color: u32) -> Result<(), GraphError> {
        let color = self.check_color(color)?;
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { node: u });
        }
        if !self.layers[color.index()].insert_edge(u, v) {
            return Err(GraphError::DuplicateEdge { u, v, color: color.get() });
        }
        Ok(())
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId, color: Color) -> bool {
        color.index() < self.layers.len()
            && u < self.node_count
            && v < self.node_count
            && self.layers[color.index()].has_edge(u, v)
    }

    /// Borrowed view of `G_i`.
    pub fn layer(&self, color: Color) -> &UniGraph {
        &self.layers[color.index()]
    }

    pub(crate) fn layer_mut(&mut self, color: Color) -> &mut UniGraph {
        &mut self.layers[color.index()]
    }

    /// The single-relation graph of one color.
    pub fn color_subgraph(&self, color: u32) -> Result<UniGraph, GraphError> {
        let color = self.check_color(color)?;
        Ok(self.layers[color.index()].clone())
    }

    /// Edges in canonical order: by color, then `min(u,v)`, then `max(u,v)`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, Color)> + '_ {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(i, layer)| layer.edges().map(move |(u, v)| (u, v, Color::from_index(i))))
    }

    /// Whether `v` has an edge of any color.
    pub fn is_isolated(&self, v: NodeId) -> bool {
        self.layers.iter().all(|l| l.degree(v) == 0)
    }

    /// The subgraph induced on `V \ drop`. Dropped nodes keep their ids and
    /// become isolated.
    pub fn remove_nodes<I>(&self, drop: I) -> ColorGraph
    where
        I: IntoIterator<Item = NodeId>,
    {
        let mut g = self.clone();
        for v in drop {
            for layer in &mut g.layers {
                layer.isolate(v);
            }
        }
        g
    }

    /// Per color, strips the edges of every node `v` with
    /// `d_i(s,v) + d_i(v,t) > bound`, where the first distance never passes
    /// through `t` and the second never through `s`. Unreachable counts as
    /// beyond the bound.
    /// Every uni-color st-path of length at most `bound` survives.
    pub fn prune_by_distance(&self, query: &Query, bound: usize) -> ColorGraph {
        let mut g = self.clone();
        for layer in &mut g.layers {
            let ds = layer.bfs_distances_stopping_at(query.source, Some(query.target));
            let dt = layer.bfs_distances_stopping_at(query.target, Some(query.source));
            for v in 0..self.node_count {
                let keep = matches!((ds[v], dt[v]), (Some(a), Some(b)) if a + b <= bound);
                if !keep {
                    layer.isolate(v);
                }
            }
        }
        g
    }

    /// Removes every `(s,t)` edge and returns the length-1 paths it
    /// contributed, one per color that had one. Such a path is part of every
    /// optimal solution, so solvers work on the stripped graph.
    pub fn strip_st_edges(&self, query: &Query) -> (ColorGraph, crate::path::PathSet) {
        let (s, t) = (query.source, query.target);
        let mut g = self.clone();
        let mut paths = Vec::new();
        for color in self.colors() {
            if g.layer_mut(color).remove_edge(s, t) {
                paths.push(crate::path::Path::new(color, vec![s, t]));
            }
        }
        (g, crate::path::PathSet::from(paths))
    }
}

/// An st-query with an optional bound on the number of edges per path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Query {
    pub source: NodeId,
    pub target: NodeId,
    pub length_bound: Option<usize>,
}

impl Query {
    /// Validates `s != t` and both ids against `graph`.
    pub fn new(graph: &ColorGraph, source: NodeId, target: NodeId) -> Result<Self, GraphError> {
        graph.check_node(source)?;
        graph.check_node(target)?;
        if source == target {
            return Err(GraphError::SameEndpoints { node: source });
        }
        Ok(Query { source, target, length_bound: None })
    }

    pub fn with_length_bound(mut self, bound: usize) -> Self {
        self.length_bound = Some(bound);
        self
    }

    pub fn unbounded(mut self) -> Self {
        self.length_bound = None;
        self
    }

    pub fn is_endpoint(&self, v: NodeId) -> bool {
        v == self.source || v == self.target
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fixtures;

    #[test]
    fn multi_relation_edges_are_legal() {
        let mut g = ColorGraph::new(3, 2);
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 0, 2).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.add_edge(1, 0, 1), Err(GraphError::DuplicateEdge { u: 1, v: 0, color: 1 }));
        assert_eq!(g.add_edge(2, 2, 1), Err(GraphError::SelfLoop { node: 2 }));
        assert!(matches!(g.add_edge(0, 1, 3), Err(GraphError::ColorOutOfRange { .. })));
    }

    #[test]
    fn color_subgraph_of_fix_a() {
        let (g, _) = fixtures::fix_a();
        let g1 = g.color_subgraph(1).unwrap();
        assert_eq!(g1.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        let g2 = g.color_subgraph(2).unwrap();
        assert_eq!(g2.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 3)]);
        assert_eq!(ColorGraph::new(4, 1).color_subgraph(1).unwrap().edge_count(), 0);
        assert!(g.color_subgraph(3).is_err());
        assert!(g.color_subgraph(0).is_err());
    }

    #[test]
    fn strip_st_edges_returns_single_edge_paths() {
        let mut g = ColorGraph::new(4, 2);
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(0, 1, 2).unwrap();
        let q = Query::new(&g, 0, 1).unwrap();
        let (stripped, paths) = g.strip_st_edges(&q);
        assert_eq!(stripped.edge_count(), 0);
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|p| p.nodes() == [0, 1]));

        let (fix_a, q) = fixtures::fix_a();
        let (same, none) = fix_a.strip_st_edges(&q);
        assert_eq!(same, fix_a);
        assert!(none.is_empty());
    }

    #[test]
    fn remove_nodes_keeps_ids() {
        let (g, _) = fixtures::fix_a();
        let h = g.remove_nodes([2]);
        assert_eq!(h.node_count(), 4);
        assert_eq!(h.layer(Color::new(1)).edge_count(), 0);
        assert_eq!(h.layer(Color::new(2)).edge_count(), 2);
        assert_eq!(g.remove_nodes([]), g);
    }

    #[test]
    fn prune_by_distance_examples() {
        let (g, q) = fixtures::fix_a();
        assert_eq!(g.prune_by_distance(&q, 4), g);

        // s-a-b-c-d-t: every internal node has d(s,v)+d(v,t) = 5.
        let chain = ColorGraph::from_edges(6, 1, &[(0, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 1, 1)]).unwrap();
        let q = Query::new(&chain, 0, 1).unwrap();
        assert_eq!(chain.prune_by_distance(&q, 4).edge_count(), 0);

        // x hangs off s only.
        let hang = ColorGraph::from_edges(4, 1, &[(0, 2, 1), (2, 1, 1), (0, 3, 1)]).unwrap();
        let q = Query::new(&hang, 0, 1).unwrap();
        let pruned = hang.prune_by_distance(&q, 4);
        assert_eq!(pruned.layer(Color::new(1)).degree(3), 0);
        assert_eq!(pruned.edge_count(), 2);
    }

    #[test]
    fn bfs_distances_examples() {
        let chain = UniGraph::from_edges(5, &[(0, 2), (2, 3), (3, 1)]);
        assert_eq!(chain.bfs_distances(0), vec![Some(0), Some(3), Some(1), Some(2), None]);
        let (g, _) = fixtures::fix_a();
        let d = g.layer(Color::new(1)).bfs_distances(1);
        assert_eq!((d[1], d[2], d[0]), (Some(0), Some(1), Some(2)));
    }

    #[test]
    fn query_validation() {
        let g = ColorGraph::new(3, 1);
        assert!(Query::new(&g, 0, 0).is_err());
        assert!(Query::new(&g, 0, 3).is_err());
        assert!(Query::new(&g, 0, 2).is_ok());
    }
}
