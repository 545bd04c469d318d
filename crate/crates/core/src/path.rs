//! Uni-color st-paths, solution sets and solution validation.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Color, ColorGraph, NodeId, Query};

/// A simple path whose edges all carry one color.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Path {
    color: Color,
    nodes: Vec<NodeId>,
}

impl Path {
    pub fn new(color: Color, nodes: Vec<NodeId>) -> Self {
        Path { color, nodes }
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.len() < 2
    }

    /// Nodes strictly between the endpoints.
    pub fn internal(&self) -> &[NodeId] {
        if self.nodes.len() <= 2 {
            &[]
        } else {
            &self.nodes[1..self.nodes.len() - 1]
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.nodes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ";{})", self.color)
    }
}

/// A set of st-paths; a solution when the paths are internally disjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathSet {
    paths: Vec<Path>,
}

impl PathSet {
    pub fn new() -> Self {
        PathSet::default()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn push(&mut self, path: Path) {
        self.paths.push(path);
    }

    pub fn extend(&mut self, other: PathSet) {
        self.paths.extend(other.paths);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Path> {
        self.paths.iter()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    /// Internal nodes of all paths.
    pub fn internal_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.paths.iter().flat_map(|p| p.internal().iter().copied())
    }
}

impl From<Vec<Path>> for PathSet {
    fn from(paths: Vec<Path>) -> Self {
        PathSet { paths }
    }
}

impl FromIterator<Path> for PathSet {
    fn from_iter<I: IntoIterator<Item = Path>>(iter: I) -> Self {
        PathSet { paths: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a PathSet {
    type Item = &'a Path;
    type IntoIter = std::slice::Iter<'a, Path>;

    fn into_iter(self) -> Self::IntoIter {
        self.paths.iter()
    }
}

/// The first rule a candidate solution breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooShort { path: usize },
    WrongEndpoints { path: usize },
    NotSimple { path: usize, node: NodeId },
    ColorOutOfRange { path: usize, color: Color },
    MissingEdge { path: usize, u: NodeId, v: NodeId, color: Color },
    TooLong { path: usize, length: usize, bound: usize },
    NotDisjoint { node: NodeId, first: usize, second: usize },
}

impl Violation {
    /// Short name of the violated rule.
    pub fn rule(&self) -> &'static str {
        match self {
            Violation::TooShort { .. } => "length",
            Violation::WrongEndpoints { .. } => "endpoints",
            Violation::NotSimple { .. } => "simple",
            Violation::ColorOutOfRange { .. } => "color",
            Violation::MissingEdge { .. } => "edge-color",
            Violation::TooLong { .. } => "length-bound",
            Violation::NotDisjoint { .. } => "disjointness",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooShort { path } => write!(f, "path {path} has no edge"),
            Violation::WrongEndpoints { path } => write!(f, "path {path} does not run from s to t"),
            Violation::NotSimple { path, node } => write!(f, "path {path} repeats node {node}"),
            Violation::ColorOutOfRange { path, color } => {
                write!(f, "path {path} uses unknown color {color}")
            }
            Violation::MissingEdge { path, u, v, color } => {
                write!(f, "path {path} uses ({u},{v}) which is not an edge of color {color}")
            }
            Violation::TooLong { path, length, bound } => {
                write!(f, "path {path} has length {length} > {bound}")
            }
            Violation::NotDisjoint { node, first, second } => {
                write!(f, "paths {first} and {second} share internal node {node}")
            }
        }
    }
}

/// Checks that `sol` is a set of pairwise internally disjoint, simple,
/// uni-color st-paths of `g` within `q.length_bound`.
pub fn validate_solution(g: &ColorGraph, q: &Query, sol: &PathSet) -> Result<(), Violation> {
    let mut owner: std::collections::HashMap<NodeId, usize> = Default::default();
    for (i, path) in sol.iter().enumerate() {
        let nodes = path.nodes();
        if nodes.len() < 2 {
            return Err(Violation::TooShort { path: i });
        }
        if nodes[0] != q.source || nodes[nodes.len() - 1] != q.target {
            return Err(Violation::WrongEndpoints { path: i });
        }
        let mut seen = HashSet::with_capacity(nodes.len());
        for &v in nodes {
            if !seen.insert(v) {
                return Err(Violation::NotSimple { path: i, node: v });
            }
        }
        if path.color().index() >= g.color_count() {
            return Err(Violation::ColorOutOfRange { path: i, color: path.color() });
        }
        for w in nodes.windows(2) {
            if !g.has_edge(w[0], w[1], path.color()) {
                return Err(Violation::MissingEdge { path: i, u: w[0], v: w[1], color: path.color() });
            }
        }
        if let Some(bound) = q.length_bound {
            if path.len() > bound {
                return Err(Violation::TooLong { path: i, length: path.len(), bound });
            }
        }
        for &v in path.internal() {
            if let Some(&first) = owner.get(&v) {
                return Err(Violation::NotDisjoint { node: v, first, second: i });
            }
            owner.insert(v, i);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fixtures;

    fn c(i: u32) -> Color {
        Color::new(i)
    }

    #[test]
    fn fix_a_both_paths_valid() {
        let (g, q) = fixtures::fix_a();
        let sol = PathSet::from(vec![Path::new(c(1), vec![0, 2, 1]), Path::new(c(2), vec![0, 3, 1])]);
        assert_eq!(validate_solution(&g, &q, &sol), Ok(()));
    }

    #[test]
    fn shared_internal_node_is_rejected() {
        let (g, q) = fixtures::fix_a();
        let sol = PathSet::from(vec![Path::new(c(1), vec![0, 2, 1]), Path::new(c(1), vec![0, 2, 1])]);
        let err = validate_solution(&g, &q, &sol).unwrap_err();
        assert_eq!(err.rule(), "disjointness");
    }

    #[test]
    fn wrong_color_is_rejected() {
        let (g, q) = fixtures::fix_a();
        let sol = PathSet::from(vec![Path::new(c(2), vec![0, 2, 1])]);
        assert_eq!(validate_solution(&g, &q, &sol), Err(Violation::MissingEdge { path: 0, u: 0, v: 2, color: c(2) }));
    }

    #[test]
    fn other_rules() {
        let (g, q) = fixtures::fix_a();
        let bad = |p: Path| validate_solution(&g, &q, &PathSet::from(vec![p])).unwrap_err().rule();
        assert_eq!(bad(Path::new(c(1), vec![0])), "length");
        assert_eq!(bad(Path::new(c(1), vec![2, 1])), "endpoints");
        assert_eq!(bad(Path::new(c(1), vec![0, 2, 0, 2, 1])), "simple");
        assert_eq!(bad(Path::new(c(3), vec![0, 2, 1])), "color");
        let q2 = q.with_length_bound(1);
        let sol = PathSet::from(vec![Path::new(c(1), vec![0, 2, 1])]);
        assert_eq!(validate_solution(&g, &q2, &sol).unwrap_err().rule(), "length-bound");
    }

    #[test]
    fn internal_nodes() {
        assert!(Path::new(c(1), vec![0, 1]).internal().is_empty());
        assert_eq!(Path::new(c(1), vec![0, 5, 6, 1]).internal(), &[5, 6]);
        assert_eq!(Path::new(c(2), vec![0, 5, 1]).to_string(), "(0,5,1;2)");
    }
}
