//! Randomized cross-checks of each solver against the brute-force oracle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::SolveError;
use crate::exact::max_cdp_exact;
use crate::flow::vertex_connectivity;
use crate::graph::{ColorGraph, Query};
use crate::greedy::{greedy_c_approx, TieBreak};
use crate::instances::random_color_graph;
use crate::lcdp::{
    choose_swap, hs_ratio, lcdp3_exact, lcdp4_find_improvement, lcdp4_two_approx, lcdp_local_search_with_swap,
    two_path_test,
};
use crate::oracle::brute_force_max_disjoint;
use crate::path::validate_solution;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Exact,
    Greedy,
    Lcdp3,
    Lcdp4,
    Lsearch,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] =
        [Algorithm::Exact, Algorithm::Greedy, Algorithm::Lcdp3, Algorithm::Lcdp4, Algorithm::Lsearch];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Greedy => "greedy",
            Algorithm::Lcdp3 => "lcdp3",
            Algorithm::Lcdp4 => "lcdp4",
            Algorithm::Lsearch => "lsearch",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub algorithm: Algorithm,
    /// Instances have between 3 and `n_max` nodes.
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
}

/// A generated instance on which a solver broke its contract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub trial: usize,
    pub nodes: usize,
    pub colors: usize,
    pub instance_seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifySummary {
    pub trials: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The `trial`-th instance of the stream selected by `seed`: `s = 0`,
/// `t = 1`, up to three colors, edge probability 0.2 or 0.4.
pub fn random_instance(seed: u64, trial: usize, n_max: usize) -> (ColorGraph, Query, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = rng.gen_range(3..=n_max.max(3));
    let c = rng.gen_range(1..=3);
    let p = if rng.gen_bool(0.5) { 0.2 } else { 0.4 };
    let instance_seed = rng.gen();
    let g = random_color_graph(n, c, p, instance_seed);
    let q = Query::new(&g, 0, 1).unwrap();
    (g, q, instance_seed)
}

pub fn verify(config: &VerifyConfig) -> VerifySummary {
    let mut summary = VerifySummary { trials: config.trials, mismatches: Vec::new() };
    for trial in 0..config.trials {
        let (g, q, instance_seed) = random_instance(config.seed, trial, config.n_max);
        if let Err(detail) = check(config.algorithm, &g, &q) {
            summary.mismatches.push(Mismatch {
                trial,
                nodes: g.node_count(),
                colors: g.color_count(),
                instance_seed,
                detail,
            });
        }
    }
    summary
}

/// Checks one solver's contract on one instance.
pub fn check(algorithm: Algorithm, g: &ColorGraph, q: &Query) -> Result<(), String> {
    let fail = |e: SolveError| e.to_string();
    let opt = |bound: Option<usize>| {
        let q = Query { length_bound: bound, ..*q };
        brute_force_max_disjoint(g, &q).map(|p| p.len()).map_err(fail)
    };
    match algorithm {
        Algorithm::Exact => {
            let sol = max_cdp_exact(g, q).map_err(fail)?;
            validate_solution(g, q, &sol).map_err(|v| v.to_string())?;
            let best = opt(None)?;
            ensure(sol.len() == best, format!("exact found {} paths, oracle {best}", sol.len()))
        }
        Algorithm::Greedy => {
            let sol = greedy_c_approx(g, q, TieBreak::LowestColor);
            validate_solution(g, q, &sol).map_err(|v| v.to_string())?;
            let best = opt(None)?;
            let first =
                g.colors().map(|c| vertex_connectivity(g.layer(c), q.source, q.target).kappa).max().unwrap_or(0);
            ensure(sol.len() >= first, format!("greedy found {} paths, below max kappa_i {first}", sol.len()))?;
            ensure(
                g.color_count() * sol.len() >= best,
                format!("greedy found {} paths with {} colors, oracle {best}", sol.len(), g.color_count()),
            )
        }
        Algorithm::Lcdp3 => {
            let q3 = q.with_length_bound(3);
            let sol = lcdp3_exact(g, &q3).map_err(fail)?;
            validate_solution(g, &q3, &sol).map_err(|v| v.to_string())?;
            let best = opt(Some(3))?;
            ensure(sol.len() == best, format!("lcdp3 found {} paths, oracle {best}", sol.len()))
        }
        Algorithm::Lcdp4 => {
            let q4 = q.with_length_bound(4);
            let sol = lcdp4_two_approx(g, q);
            validate_solution(g, &q4, &sol).map_err(|v| v.to_string())?;
            let best = opt(Some(4))?;
            ensure(2 * sol.len() >= best, format!("lcdp4 found {} paths, oracle {best}", sol.len()))?;
            ensure(two_path_test(g, q) == (best >= 2), format!("two-path test disagrees with oracle {best}"))?;
            ensure(lcdp4_find_improvement(g, q, &sol).is_none(), "lcdp4 output admits an improvement".into())
        }
        Algorithm::Lsearch => {
            let eps = BigRational::new(BigInt::from(1), BigInt::from(2));
            let swap = choose_swap(3, &eps).expect("a swap parameter exists for eps = 1/2");
            let q4 = q.with_length_bound(4);
            let sol = lcdp_local_search_with_swap(g, q, 4, swap).map_err(fail)?;
            validate_solution(g, &q4, &sol).map_err(|v| v.to_string())?;
            let best = opt(Some(4))?;
            let bound = hs_ratio(3, swap) * BigInt::from(sol.len());
            ensure(
                bound >= BigRational::from_integer(BigInt::from(best)),
                format!("local search found {} paths, oracle {best}", sol.len()),
            )
        }
    }
}

fn ensure(ok: bool, detail: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("nope".parse::<Algorithm>().is_err());
    }

    #[test]
    fn every_algorithm_passes_a_short_run() {
        for algorithm in Algorithm::ALL {
            let summary = verify(&VerifyConfig { algorithm, n_max: 8, trials: 40, seed: 3 });
            assert!(summary.passed(), "{algorithm}: {:?}", summary.mismatches);
        }
    }
}
