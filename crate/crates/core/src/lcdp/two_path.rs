//! Deciding whether two internally disjoint uni-color st-paths of length at
//! most four exist, without listing all short paths.
//!
//! A single color settles the question through its length-bounded cut
//! nodes. For two colors `i` and `j` that each admit exactly one such path
//! at a time, each graph's cut nodes are deleted from the other until
//! nothing changes; a common cut node or a lost connection means no pair
//! exists. Otherwise a pair is found by trying the short paths of `G_i`
//! shortest first against `G_j`. When `d_i(s,t) <= 3` the very first
//! attempt succeeds.

use crate::graph::{Color, ColorGraph, NodeId, Query, UniGraph};

use super::bounded::{cut_nodes, distance, for_each_path, path_avoiding, two_in_layer};

const BOUND: usize = 4;

/// `min(kappa^l(s,t), 2)` for one color layer.
///
/// A direct `(s,t)` edge counts as one path. For `l <= 4` the decision uses
/// length-bounded cut nodes; larger bounds fall back to enumeration.
pub fn kappa_l_capped(g: &UniGraph, q: &Query, l: usize) -> usize {
    let (s, t) = (q.source, q.target);
    let blocked = vec![false; g.node_count()];
    let direct = usize::from(l >= 1 && g.has_edge(s, t));
    let rest = if distance(g, s, t, &blocked, l).is_none() {
        0
    } else if direct == 1 || two_in_layer(g, s, t, &blocked, l).is_none() {
        1
    } else {
        2
    };
    (direct + rest).min(2)
}

/// Whether `gi` and `gj` hold internally disjoint st-paths of length at most
/// four, one in each.
pub fn test_pair(gi: &UniGraph, gj: &UniGraph, q: &Query) -> bool {
    let (s, t) = (q.source, q.target);
    let blocked = vec![false; gi.node_count()];
    let short = |g: &UniGraph| g.has_edge(s, t) || distance(g, s, t, &blocked, BOUND).is_some();
    if gi.has_edge(s, t) || gj.has_edge(s, t) {
        return short(gi) && short(gj);
    }
    pair_witness(gi, gj, s, t, &blocked).is_some()
}

/// Whether the colored graph has two internally disjoint uni-color
/// st-paths of length at most four.
pub fn two_path_test(g: &ColorGraph, q: &Query) -> bool {
    let (stripped, direct) = g.strip_st_edges(q);
    let blocked = vec![false; g.node_count()];
    match direct.len() {
        0 => find_two_paths(&stripped, q.source, q.target, &blocked).is_some(),
        1 => stripped.colors().any(|c| distance(stripped.layer(c), q.source, q.target, &blocked, BOUND).is_some()),
        _ => true,
    }
}

/// Two disjoint short paths in `g` avoiding `blocked`, each tagged with its
/// color. `g` must carry no `(s,t)` edge.
pub(crate) fn find_two_paths(
    g: &ColorGraph,
    s: NodeId,
    t: NodeId,
    blocked: &[bool],
) -> Option<[(Color, Vec<NodeId>); 2]> {
    let mut single = Vec::new();
    for color in g.colors() {
        let layer = g.layer(color);
        if distance(layer, s, t, blocked, BOUND).is_none() {
            continue;
        }
        if let Some((p, q)) = two_in_layer(layer, s, t, blocked, BOUND) {
            return Some([(color, p), (color, q)]);
        }
        single.push(color);
    }
    for (a, &ci) in single.iter().enumerate() {
        for &cj in &single[a + 1..] {
            if let Some((p, q)) = pair_witness(g.layer(ci), g.layer(cj), s, t, blocked) {
                return Some([(ci, p), (cj, q)]);
            }
        }
    }
    None
}

/// Disjoint paths `(p, q)` with `p` in `gi` and `q` in `gj`, both of length
/// at most four.
fn pair_witness(
    gi: &UniGraph,
    gj: &UniGraph,
    s: NodeId,
    t: NodeId,
    blocked: &[bool],
) -> Option<(Vec<NodeId>, Vec<NodeId>)> {
    let mut bi = blocked.to_vec();
    let mut bj = blocked.to_vec();
    loop {
        distance(gi, s, t, &bi, BOUND)?;
        distance(gj, s, t, &bj, BOUND)?;
        let xi = cut_nodes(gi, s, t, &bi, BOUND);
        let xj = cut_nodes(gj, s, t, &bj, BOUND);
        if xi.iter().any(|x| xj.contains(x)) {
            return None;
        }
        let mut changed = false;
        for &x in &xj {
            changed |= !std::mem::replace(&mut bi[x], true);
        }
        for &x in &xi {
            changed |= !std::mem::replace(&mut bj[x], true);
        }
        if !changed {
            break;
        }
    }
    let mut found = None;
    for_each_path(gi, s, t, &bi, BOUND, |p| {
        if let Some(q) = path_avoiding(gj, s, t, &bj, p, BOUND) {
            found = Some((p.to_vec(), q));
            true
        } else {
            false
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const S: NodeId = 0;
    const T: NodeId = 1;

    fn uni(n: usize, edges: &[(usize, usize)]) -> UniGraph {
        UniGraph::from_edges(n, edges)
    }

    fn query(n: usize) -> Query {
        Query::new(&ColorGraph::new(n, 1), S, T).unwrap()
    }

    /// Exhaustive check: some short path of `gi` is disjoint from some short
    /// path of `gj`.
    fn pair_by_enumeration(gi: &UniGraph, gj: &UniGraph) -> bool {
        let none = vec![false; gi.node_count()];
        let mut pi = Vec::new();
        for_each_path(gi, S, T, &none, BOUND, |p| {
            pi.push(p.to_vec());
            false
        });
        pi.iter().any(|p| path_avoiding(gj, S, T, &none, p, BOUND).is_some())
    }

    #[test]
    fn kappa_examples() {
        let (a, q) = fixtures::fix_a();
        assert_eq!(kappa_l_capped(a.layer(Color::new(1)), &q, 4), 1);
        let fan = uni(4, &[(0, 2), (0, 3), (2, 1), (3, 1)]);
        assert_eq!(kappa_l_capped(&fan, &query(4), 2), 2);
        let chain = uni(6, &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        assert_eq!(kappa_l_capped(&chain, &query(6), 4), 0);
        assert_eq!(kappa_l_capped(&chain, &query(6), 5), 1);
        let with_edge = uni(3, &[(0, 1), (0, 2), (2, 1)]);
        assert_eq!(kappa_l_capped(&with_edge, &query(3), 4), 2);
        assert_eq!(kappa_l_capped(&with_edge, &query(3), 1), 1);
    }

    #[test]
    fn pair_examples() {
        let q = query(5);
        let sat = uni(5, &[(0, 2), (2, 1)]);
        let sbt = uni(5, &[(0, 3), (3, 1)]);
        assert!(test_pair(&sat, &sbt, &q));
        assert!(!test_pair(&sat, &sat, &q));

        let q = query(8);
        let a = uni(8, &[(0, 2), (2, 3), (3, 4), (4, 1)]);
        let b = uni(8, &[(0, 5), (5, 6), (6, 7), (7, 1)]);
        assert!(test_pair(&a, &b, &q));
    }

    #[test]
    fn many_long_paths_can_still_all_collide() {
        // gi: s-x-p1-q1-t and s-x-p2-q2-t. gj: s-y, then {p1,q1} and
        // {p2,q2} as consecutive layers joined completely, then t. Every gj
        // path meets both of gi's paths although gj has four of them.
        let (x, p1, q1, p2, q2, y) = (2, 3, 4, 5, 6, 7);
        let gi = uni(8, &[(S, x), (x, p1), (p1, q1), (q1, T), (x, p2), (p2, q2), (q2, T)]);
        let mut ej = vec![(S, y), (y, p1), (y, q1), (p2, T), (q2, T)];
        for a in [p1, q1] {
            for b in [p2, q2] {
                ej.push((a, b));
            }
        }
        let gj = uni(8, &ej);
        assert!(!test_pair(&gi, &gj, &query(8)));
        assert!(!pair_by_enumeration(&gi, &gj));
    }

    #[test]
    fn pair_agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..3000 {
            let n = rng.gen_range(3..=9);
            let p = rng.gen_range(0.15..0.5);
            let mut random_layer = || {
                let mut g = UniGraph::new(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if (u, v) != (S, T) && rng.gen_bool(p) {
                            g.insert_edge(u, v);
                        }
                    }
                }
                g
            };
            let gi = random_layer();
            let gj = random_layer();
            let q = query(n);
            let expected = pair_by_enumeration(&gi, &gj);
            assert_eq!(test_pair(&gi, &gj, &q), expected, "{gi:?} {gj:?}");
            let none = vec![false; n];
            if let Some((a, b)) = pair_witness(&gi, &gj, S, T, &none) {
                assert!(a[1..a.len() - 1].iter().all(|v| !b.contains(v)));
                assert!(a.len() <= 5 && b.len() <= 5);
            }
        }
    }

    #[test]
    fn two_path_examples() {
        let (a, q) = fixtures::fix_a();
        assert!(two_path_test(&a, &q));
        let (b, q) = fixtures::fix_b();
        assert!(!two_path_test(&b, &q));
        let same = ColorGraph::from_edges(3, 2, &[(0, 2, 1), (2, 1, 1), (0, 2, 2), (2, 1, 2)]).unwrap();
        assert!(!two_path_test(&same, &Query::new(&same, 0, 1).unwrap()));
        let edges = ColorGraph::from_edges(2, 2, &[(0, 1, 1), (0, 1, 2)]).unwrap();
        assert!(two_path_test(&edges, &Query::new(&edges, 0, 1).unwrap()));
    }
}
