use crate::error::SolveError;
use crate::graph::{ColorGraph, Query};
use crate::matching::{build_pair_graph, max_matching};
use crate::path::{Path, PathSet};

/// Optimal set of disjoint uni-color st-paths of length at most
/// `q.length_bound` (3 when unset; larger bounds are rejected).
///
/// Direct edges come first. Then every common neighbor of `s` and `t` in
/// some color is taken as a length-2 path, which some optimum always
/// contains. The remaining length-3 paths are chosen by a maximum matching
/// on their middle edges.
pub fn lcdp3_exact(g: &ColorGraph, q: &Query) -> Result<PathSet, SolveError> {
    let bound = q.length_bound.unwrap_or(3);
    if bound == 0 || bound > 3 {
        return Err(SolveError::UnsupportedLengthBound { algorithm: "lcdp3", bound });
    }
    let (s, t) = (q.source, q.target);
    let (mut g, mut out) = g.strip_st_edges(q);
    if bound == 1 {
        return Ok(out);
    }
    let mut used = Vec::new();
    for v in 0..g.node_count() {
        if q.is_endpoint(v) {
            continue;
        }
        if let Some(color) = g.colors().find(|&c| g.has_edge(s, v, c) && g.has_edge(v, t, c)) {
            out.push(Path::new(color, vec![s, v, t]));
            used.push(v);
        }
    }
    if bound == 2 {
        return Ok(out);
    }
    g = g.remove_nodes(used);
    let pairs = build_pair_graph(&g, q);
    let matching = max_matching(g.node_count(), &pairs.edges());
    for (a, b) in matching {
        out.push(pairs.realize(a, b, q).expect("matched edges come from the pair graph"));
    }
    Ok(out)
}
