use crate::graph::{ColorGraph, NodeId, Query};

/// The family on which greedy can be off by a factor of `c`.
///
/// Nodes are `s = 0`, `t = 1`, `u_i = 1 + i` and `v_i = c + 1 + i` for
/// `i` in `1..=c`. Color `i` holds the path `s-u_i-v_i-t`, and color 1
/// additionally holds the chain `u_1-u_2-...-u_c-t`. Together with `(s,u_1)`
/// that chain is a color-1 st-path through every `u_i`, so committing it
/// leaves nothing else, while the `c` short paths are pairwise disjoint.
///
/// # Panics
/// When `c < 2`.
pub fn tight_example(c: usize) -> (ColorGraph, Query) {
    assert!(c >= 2, "tight example needs at least two colors");
    let u = |i: usize| 1 + i;
    let v = |i: usize| c + 1 + i;
    let mut g = ColorGraph::new(2 * c + 2, c);
    for i in 1..=c {
        let color = i as u32;
        g.add_edge(0, u(i), color).unwrap();
        g.add_edge(u(i), v(i), color).unwrap();
        g.add_edge(v(i), 1, color).unwrap();
    }
    for j in 1..c {
        g.add_edge(u(j), u(j + 1), 1).unwrap();
    }
    g.add_edge(u(c), 1, 1).unwrap();
    let q = Query::new(&g, 0, 1).unwrap();
    (g, q)
}

/// Node sequence of the color-1 chain `s-u_1-...-u_c-t` in [`tight_example`].
pub fn tight_example_bold_chain(c: usize) -> Vec<NodeId> {
    std::iter::once(0).chain((1..=c).map(|i| 1 + i)).chain(std::iter::once(1)).collect()
}
