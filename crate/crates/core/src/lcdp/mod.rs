//! Solvers for the length-bounded variant, where every path may use at most
//! `l` edges.

mod approx4;
mod bounded;
mod enumerate;
mod length3;
mod local;
mod packing;
mod two_path;

pub use approx4::{lcdp4_find_improvement, lcdp4_two_approx, Lcdp4Improvement};
pub use enumerate::{enumerate_paths, enumerate_paths_capped, DEFAULT_PATH_CAP};
pub use length3::lcdp3_exact;
pub use local::{choose_swap, lcdp_local_search, lcdp_local_search_with_swap, MAX_SWAP};
pub use packing::{
    find_improvement, hs_ratio, set_packing_local_search, set_packing_local_search_from, Improvement, PackingInstance,
};
pub use two_path::{kappa_l_capped, test_pair, two_path_test};
