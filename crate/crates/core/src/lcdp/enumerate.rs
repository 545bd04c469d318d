use crate::error::SolveError;
use crate::graph::{ColorGraph, Query};
use crate::path::Path;

use super::bounded::for_each_path;

/// Default refusal threshold for [`enumerate_paths`].
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// Every simple uni-color st-path with at most `l` edges, once each.
///
/// Paths are grouped by color, shortest first within a color. Nodes that
/// cannot lie on a short enough path are never expanded.
pub fn enumerate_paths(g: &ColorGraph, q: &Query, l: usize) -> Result<Vec<Path>, SolveError> {
    enumerate_paths_capped(g, q, l, DEFAULT_PATH_CAP)
}

/// [`enumerate_paths`] with an explicit cap; more than `cap` paths is an
/// error.
pub fn enumerate_paths_capped(g: &ColorGraph, q: &Query, l: usize, cap: usize) -> Result<Vec<Path>, SolveError> {
    let (s, t) = (q.source, q.target);
    let blocked = vec![false; g.node_count()];
    let mut out = Vec::new();
    for color in g.colors() {
        let layer = g.layer(color);
        if l >= 1 && layer.has_edge(s, t) {
            out.push(Path::new(color, vec![s, t]));
        }
        let overflow = for_each_path(layer, s, t, &blocked, l, |p| {
            out.push(Path::new(color, p.to_vec()));
            out.len() > cap
        });
        if overflow || out.len() > cap {
            return Err(SolveError::PathCapExceeded { cap });
        }
    }
    Ok(out)
}
