//! Instance generators: hand-built fixtures, the greedy tightness family,
//! SAT reduction gadgets and seeded random graphs.

mod cnf;
pub mod fixtures;
mod random;
mod sat_cdp;
mod sat_lcdp4;
mod tight;

pub use cnf::CnfFormula;
pub use random::{random_color_graph, random_sparse_graph};
pub use sat_cdp::{mcdp2_to_cdp22, sat_to_cdp22, Mcdp2Instance};
pub use sat_lcdp4::sat3occ_to_lcdp4;
pub use tight::{tight_example, tight_example_bold_chain};

use crate::graph::{ColorGraph, Query};

/// A generated decision instance: the formula is satisfiable iff the
/// optimum for `query` reaches `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: ColorGraph,
    pub query: Query,
    pub target: usize,
}
