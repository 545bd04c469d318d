use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::ColorGraph;

/// Each unordered pair gets a color-`i` edge with probability `edge_prob`,
/// independently per color. The output depends only on the arguments.
pub fn random_color_graph(n: usize, c: usize, edge_prob: f64, seed: u64) -> ColorGraph {
    assert!((0.0..=1.0).contains(&edge_prob), "edge probability must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = ColorGraph::new(n, c);
    for color in 1..=c as u32 {
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(edge_prob) {
                    g.add_edge(u, v, color).unwrap();
                }
            }
        }
    }
    g
}

/// About `edges_per_color` uniformly random edges in each color; repeated
/// draws of the same pair are discarded, so counts can fall slightly short.
pub fn random_sparse_graph(n: usize, c: usize, edges_per_color: usize, seed: u64) -> ColorGraph {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = ColorGraph::new(n, c);
    for color in 1..=c as u32 {
        for _ in 0..edges_per_color {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                let _ = g.add_edge(u, v, color);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::vertex_connectivity;
    use crate::format::write_graph;
    use crate::graph::Color;

    #[test]
    fn extremes_and_determinism() {
        assert_eq!(random_color_graph(7, 3, 0.0, 1).edge_count(), 0);
        let k = random_color_graph(7, 1, 1.0, 1);
        assert_eq!(k.edge_count(), 21);
        assert_eq!(vertex_connectivity(k.layer(Color::new(1)), 0, 1).kappa, 6);
        assert_eq!(
            write_graph(&random_color_graph(9, 2, 0.4, 77), None),
            write_graph(&random_color_graph(9, 2, 0.4, 77), None)
        );
        assert_ne!(random_color_graph(9, 2, 0.4, 77), random_color_graph(9, 2, 0.4, 78));
    }

    #[test]
    fn sparse_counts() {
        let g = random_sparse_graph(1000, 2, 500, 3);
        assert!(g.edge_count() > 950 && g.edge_count() <= 1000);
    }
}
