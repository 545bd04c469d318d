//! SAT to two disjoint uni-color paths in a two-color graph.
//!
//! Every literal occurrence becomes a node shared by both colors. Color 1 is
//! a layered graph with one layer per clause, so an `s1 t1` path picks at
//! least one occurrence from every clause. Color 2 strings the occurrences of
//! each literal into a chain and joins consecutive variables by complete
//! bipartite switches, so an `s2 t2` path runs through every occurrence of
//! `x_i` or every occurrence of `!x_i` for each variable. The two paths are
//! disjoint exactly when the literals chosen by color 1 can all be true.

use std::collections::BTreeMap;

use super::{CnfFormula, Reduction};
use crate::error::ReductionError;
use crate::graph::{ColorGraph, NodeId, Query};

/// Two terminal pairs: `pair1` must be joined in color 1 and `pair2` in
/// color 2, by internally disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mcdp2Instance {
    pub graph: ColorGraph,
    pub pair1: (NodeId, NodeId),
    pub pair2: (NodeId, NodeId),
    /// Occurrence nodes of each literal, in clause order.
    pub literal_nodes: BTreeMap<i64, Vec<NodeId>>,
}

/// Two-pair gadget for `f`; see the module docs.
pub fn sat_to_mcdp2(f: &CnfFormula) -> Result<Mcdp2Instance, ReductionError> {
    if f.clauses.is_empty() {
        return Err(ReductionError::NoClauses);
    }
    let (s1, t1, s2, t2) = (0, 1, 2, 3);
    let mut next = 4;
    let mut stages: Vec<Vec<NodeId>> = vec![vec![s1]];
    let mut literal_nodes: BTreeMap<i64, Vec<NodeId>> = BTreeMap::new();
    for (j, clause) in f.clauses.iter().enumerate() {
        if clause.is_empty() {
            return Err(ReductionError::EmptyClause { clause: j + 1 });
        }
        let mut stage = Vec::new();
        let mut seen = Vec::new();
        for &lit in clause {
            if seen.contains(&lit) {
                continue;
            }
            seen.push(lit);
            literal_nodes.entry(lit).or_default().push(next);
            stage.push(next);
            next += 1;
        }
        stages.push(stage);
    }
    stages.push(vec![t1]);

    let mut edges = Vec::new();
    for pair in stages.windows(2) {
        for &u in &pair[0] {
            for &v in &pair[1] {
                edges.push((u, v, 1));
            }
        }
    }

    let mut previous_ends = vec![s2];
    for var in 1..=f.variable_count as i64 {
        let mut starts = Vec::new();
        let mut ends = Vec::new();
        for lit in [var, -var] {
            let chain = literal_nodes.get(&lit).cloned().unwrap_or_else(|| {
                next += 1;
                vec![next - 1]
            });
            for w in chain.windows(2) {
                edges.push((w[0], w[1], 2));
            }
            starts.push(chain[0]);
            ends.push(*chain.last().unwrap());
        }
        for &e in &previous_ends {
            for &st in &starts {
                edges.push((e, st, 2));
            }
        }
        previous_ends = ends;
    }
    for &e in &previous_ends {
        edges.push((e, t2, 2));
    }

    let graph = ColorGraph::from_edges(next, 2, &edges).expect("gadget edges are valid");
    Ok(Mcdp2Instance { graph, pair1: (s1, t1), pair2: (s2, t2), literal_nodes })
}

/// Joins the two terminal pairs through new nodes `s` and `t`: `s-s1` and
/// `t1-t` in color 1, `s-s2` and `t2-t` in color 2. When the pairs share a
/// terminal, a duplicate carrying the same edges stands in for it on the
/// color-2 side. The result has two disjoint uni-color st-paths iff the
/// two-pair instance is solvable.
pub fn mcdp2_to_cdp22(inst: &Mcdp2Instance) -> (ColorGraph, Query) {
    let base = &inst.graph;
    let (s1, t1) = inst.pair1;
    let (mut s2, mut t2) = inst.pair2;
    let n0 = base.node_count();
    let (s, t) = (n0, n0 + 1);
    let mut n = n0 + 2;
    let mut duplicates = Vec::new();
    if s2 == s1 {
        duplicates.push((n, s1));
        s2 = n;
        n += 1;
    }
    if t2 == t1 {
        duplicates.push((n, t1));
        t2 = n;
        n += 1;
    }
    let mut g = ColorGraph::new(n, base.color_count());
    for (u, v, color) in base.edges() {
        g.add_edge(u, v, color.get()).unwrap();
    }
    for &(dup, orig) in &duplicates {
        for (u, v, color) in base.edges() {
            if u == orig || v == orig {
                let other = if u == orig { v } else { u };
                let _ = g.add_edge(dup, other, color.get());
            }
        }
    }
    g.add_edge(s, s1, 1).unwrap();
    g.add_edge(t1, t, 1).unwrap();
    g.add_edge(s, s2, 2).unwrap();
    g.add_edge(t2, t, 2).unwrap();
    let q = Query::new(&g, s, t).unwrap();
    (g, q)
}

/// `f` is satisfiable iff the colored connectivity of the result is at
/// least `target = 2`.
pub fn sat_to_cdp22(f: &CnfFormula) -> Result<Reduction, ReductionError> {
    let inst = sat_to_mcdp2(f)?;
    let (graph, query) = mcdp2_to_cdp22(&inst);
    Ok(Reduction { graph, query, target: 2 })
}
