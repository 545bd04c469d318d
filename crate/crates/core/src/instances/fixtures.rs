//! Small named instances used throughout the tests and docs. In each, `s = 0`
//! and `t = 1`.

use crate::graph::{ColorGraph, Query};

fn build(n: usize, c: usize, edges: &[(usize, usize, u32)]) -> (ColorGraph, Query) {
    let g = ColorGraph::from_edges(n, c, edges).expect("fixture edges are valid");
    let q = Query::new(&g, 0, 1).expect("fixture query is valid");
    (g, q)
}

/// Color 1 path `s-a-t` and color 2 path `s-b-t` with `a = 2`, `b = 3`.
pub fn fix_a() -> (ColorGraph, Query) {
    build(4, 2, &[(0, 2, 1), (2, 1, 1), (0, 3, 2), (3, 1, 2)])
}

/// `s-a` in color 1 and `a-t` in color 2, so no uni-color path exists.
pub fn fix_b() -> (ColorGraph, Query) {
    build(3, 2, &[(0, 2, 1), (2, 1, 2)])
}

/// One color: `s-x-t` and `s-a-b-t` with `x = 2`, `a = 3`, `b = 4`.
pub fn fix_c() -> (ColorGraph, Query) {
    build(5, 1, &[(0, 2, 1), (2, 1, 1), (0, 3, 1), (3, 4, 1), (4, 1, 1)])
}
