//! Greedy `c`-approximation: take all disjoint paths of the best color,
//! delete their internal nodes, and repeat until no color connects `s` and
//! `t`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::flow::{vertex_connectivity, ConnectivityResult};
use crate::graph::{Color, ColorGraph, NodeId, Query, UniGraph};
use crate::path::{Path, PathSet};

/// Which color wins when several share the largest connectivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestColor,
    HighestColor,
    /// Uniformly random among the tied colors, from a seeded generator.
    Seeded(u64),
}

/// Supplies the disjoint paths for one color in one round.
pub trait WitnessSource {
    fn witness(&mut self, layer: &UniGraph, s: NodeId, t: NodeId, color: Color, round: usize) -> ConnectivityResult;
}

/// Maximum-flow witnesses.
#[derive(Clone, Copy, Debug, Default)]
pub struct FlowWitness;

impl WitnessSource for FlowWitness {
    fn witness(&mut self, layer: &UniGraph, s: NodeId, t: NodeId, _color: Color, _round: usize) -> ConnectivityResult {
        vertex_connectivity(layer, s, t)
    }
}

pub fn greedy_c_approx(g: &ColorGraph, q: &Query, tie_break: TieBreak) -> PathSet {
    greedy_c_approx_with(g, q, tie_break, &mut FlowWitness)
}

/// Greedy with a caller-supplied witness for each color and round. The
/// witness paths must be internally disjoint st-paths of the given layer.
pub fn greedy_c_approx_with(
    g: &ColorGraph,
    q: &Query,
    tie_break: TieBreak,
    witnesses: &mut dyn WitnessSource,
) -> PathSet {
    let (s, t) = (q.source, q.target);
    let (mut g, mut out) = g.strip_st_edges(q);
    let mut rng = match tie_break {
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    for round in 0.. {
        let results: Vec<(Color, ConnectivityResult)> =
            g.colors().map(|c| (c, witnesses.witness(g.layer(c), s, t, c, round))).collect();
        let best = results.iter().map(|(_, r)| r.paths.len()).max().unwrap_or(0);
        if best == 0 {
            break;
        }
        let tied: Vec<usize> = (0..results.len()).filter(|&i| results[i].1.paths.len() == best).collect();
        let pick = match (&mut rng, tie_break) {
            (Some(rng), _) => *tied.choose(rng).unwrap(),
            (None, TieBreak::HighestColor) => *tied.last().unwrap(),
            _ => tied[0],
        };
        let (color, result) = &results[pick];
        let mut drop = Vec::new();
        for nodes in &result.paths {
            drop.extend_from_slice(&nodes[1..nodes.len() - 1]);
            out.push(Path::new(*color, nodes.clone()));
        }
        g = g.remove_nodes(drop);
    }
    out
}
