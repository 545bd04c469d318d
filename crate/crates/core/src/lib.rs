//! Disjoint uni-color st-paths in edge-colored graphs.
//!
//! An edge-colored graph carries one edge set per color. A uni-color path
//! uses edges of a single color, and the colored connectivity of `s` and
//! `t` is the largest number of internally disjoint uni-color st-paths.
//! This crate provides an exact solver, a greedy approximation, exact and
//! approximate solvers for the length-bounded variant, instance generators
//! and a brute-force oracle.
//!
//! ```
//! use colorconn::{max_cdp_exact, parse_graph, Query};
//!
//! let g = parse_graph("p cdp 4 2\ne 0 2 1\ne 2 1 1\ne 0 3 2\ne 3 1 2").unwrap();
//! let q = Query::new(&g, 0, 1).unwrap();
//! assert_eq!(max_cdp_exact(&g, &q).unwrap().len(), 2);
//! ```

pub mod error;
pub mod exact;
pub mod flow;
pub mod format;
pub mod graph;
pub mod greedy;
pub mod instances;
pub mod lcdp;
pub mod matching;
pub mod oracle;
pub mod path;
pub mod report;
pub mod verify;

pub use error::{GraphError, ParseError, ParseErrorKind, ReductionError, SolveError};
pub use exact::{
    gray_colorings, induced_by_coloring, max_cdp_exact, max_cdp_exact_with, ExactConfig, FlowMode, NodeColoring,
};
pub use flow::{bfs_distances, st_cut_nodes, vertex_connectivity, ConnectivityResult, FlowState};
pub use format::{parse_graph, parse_graph_file, write_graph, GraphFile};
pub use graph::{Color, ColorGraph, NodeId, Query, UniGraph};
pub use greedy::{greedy_c_approx, greedy_c_approx_with, FlowWitness, TieBreak, WitnessSource};
pub use instances::{
    mcdp2_to_cdp22, random_color_graph, random_sparse_graph, sat3occ_to_lcdp4, sat_to_cdp22, tight_example, CnfFormula,
    Reduction,
};
pub use lcdp::{
    enumerate_paths, enumerate_paths_capped, hs_ratio, kappa_l_capped, lcdp3_exact, lcdp4_find_improvement,
    lcdp4_two_approx, lcdp_local_search, lcdp_local_search_with_swap, set_packing_local_search, test_pair,
    two_path_test, PackingInstance,
};
pub use matching::{build_pair_graph, max_matching, PairGraph};
pub use oracle::{brute_force_max_disjoint, brute_force_sat, brute_force_set_packing};
pub use path::{validate_solution, Path, PathSet, Violation};
pub use report::{RunReport, SCHEMA_VERSION};
