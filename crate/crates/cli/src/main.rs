mod args;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path as FsPath;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use sha2::{Digest, Sha256};

use colorconn::exact::{ExactConfig, FlowMode};
use colorconn::verify::{verify, VerifyConfig};
use colorconn::{
    brute_force_max_disjoint, greedy_c_approx, lcdp3_exact, lcdp4_two_approx, lcdp_local_search,
    lcdp_local_search_with_swap, max_cdp_exact_with, parse_graph_file, random_color_graph, random_sparse_graph,
    sat3occ_to_lcdp4, sat_to_cdp22, tight_example, validate_solution, write_graph, CnfFormula, ColorGraph, PathSet,
    Query, RunReport, SolveError, TieBreak,
};

use args::{AlgoArg, Cli, Command, Family, Format, GenArgs, ModeArg, SolveArgs, TieBreakArg};

/// A failure reported on standard error as one JSON object.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Refusal(String),
    Mismatch(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> (&'static str, u8) {
        match self {
            Failure::Mismatch(_) => ("mismatch", 1),
            Failure::Usage(_) => ("usage", 2),
            Failure::Parse(_) => ("parse", 3),
            Failure::Refusal(_) => ("refusal", 4),
            Failure::Internal(_) => ("internal", 5),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m)
            | Failure::Parse(m)
            | Failure::Refusal(m)
            | Failure::Mismatch(m)
            | Failure::Internal(m) => m,
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Graph(g) => Failure::Usage(g.to_string()),
            other => Failure::Refusal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report_failure(Failure::Usage(e.to_string().trim_end().to_string())),
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => report_failure(f),
    }
}

fn report_failure(f: Failure) -> ExitCode {
    let (code, exit) = f.code();
    let body = serde_json::json!({ "error": code, "exit_code": exit, "message": f.message() });
    eprintln!("{body}");
    ExitCode::from(exit)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Exact { common, budget, threads, mode, no_pin } => {
            if threads == 0 {
                return Err(Failure::Usage("--threads must be at least 1".into()));
            }
            let config = ExactConfig {
                budget,
                mode: match mode {
                    ModeArg::Incremental => FlowMode::Incremental,
                    ModeArg::Recompute => FlowMode::Recompute,
                },
                fix_single_color_nodes: !no_pin,
                threads,
            };
            let params = [
                ("budget", budget.to_string()),
                ("mode", format!("{mode:?}").to_lowercase()),
                ("pin_single_color_nodes", (!no_pin).to_string()),
                ("threads", threads.to_string()),
            ];
            solve(&common, "exact", &params, |g, q| Ok((*q, max_cdp_exact_with(g, q, &config)?)))
        }
        Command::Greedy { common, tie_break, seed } => {
            if common.max_len.is_some() {
                return Err(Failure::Usage("greedy does not take --max-len".into()));
            }
            let tie = match tie_break {
                TieBreakArg::Lowest => TieBreak::LowestColor,
                TieBreakArg::Highest => TieBreak::HighestColor,
                TieBreakArg::Seeded => TieBreak::Seeded(seed),
            };
            let mut params = vec![("tie_break", format!("{tie_break:?}").to_lowercase())];
            if tie_break == TieBreakArg::Seeded {
                params.push(("seed", seed.to_string()));
            }
            solve(&common, "greedy", &params, |g, q| Ok((*q, greedy_c_approx(g, q, tie))))
        }
        Command::Lcdp3 { common } => {
            let bound = common.max_len.unwrap_or(3);
            solve(&common, "lcdp3", &[], |g, q| {
                let q = q.with_length_bound(bound);
                let sol = lcdp3_exact(g, &q)?;
                Ok((q, sol))
            })
        }
        Command::Lcdp4 { common } => {
            if common.max_len.is_some_and(|l| l != 4) {
                return Err(Failure::Usage("lcdp4 only supports --max-len 4".into()));
            }
            solve(&common, "lcdp4", &[], |g, q| Ok((q.with_length_bound(4), lcdp4_two_approx(g, q))))
        }
        Command::Lsearch { common, eps, swap } => {
            let bound = common.max_len.unwrap_or(4);
            let mut params = Vec::new();
            let eps = match swap {
                Some(0) => return Err(Failure::Usage("--swap must be at least 1".into())),
                Some(s) => {
                    params.push(("swap", s.to_string()));
                    None
                }
                None => {
                    let e = parse_rational(&eps)?;
                    params.push(("eps", e.to_string()));
                    Some(e)
                }
            };
            solve(&common, "lsearch", &params, |g, q| {
                let q = q.with_length_bound(bound);
                let sol = match (&eps, swap) {
                    (Some(e), _) => lcdp_local_search(g, &q, bound, e)?,
                    (None, Some(s)) => lcdp_local_search_with_swap(g, &q, bound, s)?,
                    (None, None) => unreachable!(),
                };
                Ok((q, sol))
            })
        }
        Command::Oracle { common } => solve(&common, "oracle", &[], |g, q| Ok((*q, brute_force_max_disjoint(g, q)?))),
        Command::Gen(args) => generate(&args),
        Command::Verify { algo, n_max, trials, seed } => {
            if n_max < 3 {
                return Err(Failure::Usage("--n-max must be at least 3".into()));
            }
            let summary = verify(&VerifyConfig { algorithm: algo.into(), n_max, trials, seed });
            let mismatches: Vec<_> = summary
                .mismatches
                .iter()
                .map(|m| {
                    serde_json::json!({
                        "trial": m.trial,
                        "nodes": m.nodes,
                        "colors": m.colors,
                        "instance_seed": m.instance_seed,
                        "detail": m.detail,
                    })
                })
                .collect();
            let body = serde_json::json!({
                "algorithm": colorconn::verify::Algorithm::from(algo).name(),
                "n_max": n_max,
                "seed": seed,
                "trials": trials,
                "mismatches": mismatches,
            });
            println!("{}", serde_json::to_string_pretty(&body).unwrap());
            if summary.passed() {
                Ok(())
            } else {
                Err(Failure::Mismatch(format!("{} of {trials} trials failed", summary.mismatches.len())))
            }
        }
        Command::Bench { algo, input, nodes, colors, edges_per_color, seed, repeat } => {
            bench(algo, input.as_deref(), nodes, colors, edges_per_color, seed, repeat)
        }
    }
}

fn read(path: &FsPath) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

struct Loaded {
    graph: ColorGraph,
    default_query: Option<(usize, usize)>,
    digest: String,
}

fn load_graph(path: &FsPath) -> Result<Loaded, Failure> {
    let bytes = read(path)?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| Failure::Parse(format!("{} is not UTF-8", path.display())))?;
    let file = parse_graph_file(&text).map_err(|e| Failure::Parse(e.to_string()))?;
    Ok(Loaded { graph: file.graph, default_query: file.default_query, digest })
}

fn resolve_query(g: &ColorGraph, args: &SolveArgs, default: Option<(usize, usize)>) -> Result<Query, Failure> {
    let (s, t) = match (args.source, args.target, default) {
        (Some(s), Some(t), _) => (s, t),
        (s, t, Some((ds, dt))) => (s.unwrap_or(ds), t.unwrap_or(dt)),
        _ => return Err(Failure::Usage("--source and --target are required when the file has no q line".into())),
    };
    Query::new(g, s, t).map_err(|e| Failure::Usage(e.to_string()))
}

/// Runs one solver and writes its report. The closure returns the query
/// its output must satisfy, which carries the effective length bound.
fn solve(
    args: &SolveArgs,
    algorithm: &str,
    extra: &[(&str, String)],
    solver: impl FnOnce(&ColorGraph, &Query) -> Result<(Query, PathSet), Failure>,
) -> Result<(), Failure> {
    let Loaded { graph: g, default_query: default, digest } = load_graph(&args.input)?;
    let mut q = resolve_query(&g, args, default)?;
    if let Some(l) = args.max_len {
        if l == 0 {
            return Err(Failure::Usage("--max-len must be at least 1".into()));
        }
        q = q.with_length_bound(l);
    }
    let started = Instant::now();
    let (checked, paths) = solver(&g, &q)?;
    let elapsed = started.elapsed();
    validate_solution(&g, &checked, &paths)
        .map_err(|v| Failure::Internal(format!("solver output failed validation: {v}")))?;

    let mut params: BTreeMap<String, String> = extra.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    params.insert("source".into(), checked.source.to_string());
    params.insert("target".into(), checked.target.to_string());
    if let Some(l) = checked.length_bound {
        params.insert("max_len".into(), l.to_string());
    }
    let mut report = RunReport::new(algorithm, params, paths, digest);
    if args.timing {
        report.elapsed_ms = Some(elapsed.as_secs_f64() * 1e3);
    }
    let body = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Text => render_text(&report),
    };
    emit(args.out.as_deref(), &body)
}

fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algorithm {}", report.algorithm);
    for (k, v) in &report.params {
        let _ = writeln!(out, "param {k} {v}");
    }
    let _ = writeln!(out, "kappa {}", report.kappa);
    for p in report.paths.iter() {
        let nodes: Vec<String> = p.nodes().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "path {} {}", p.color().get(), nodes.join(" "));
    }
    if let Some(ms) = report.elapsed_ms {
        let _ = writeln!(out, "elapsed_ms {ms:.3}");
    }
    let _ = writeln!(out, "input_digest {}", report.input_digest);
    out
}

fn emit(out: Option<&FsPath>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, body).map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Accepts `a/b` or a decimal such as `0.25`.
fn parse_rational(text: &str) -> Result<BigRational, Failure> {
    let bad = || Failure::Usage(format!("cannot parse `{text}` as a positive rational"));
    let value = if let Some((int, frac)) = text.split_once('.') {
        if !frac.chars().all(|ch| ch.is_ascii_digit()) || !int.chars().all(|ch| ch.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32))
    } else {
        text.parse::<BigRational>().map_err(|_| bad())?
    };
    if value <= BigRational::from_integer(BigInt::from(0)) {
        return Err(bad());
    }
    Ok(value)
}

fn generate(args: &GenArgs) -> Result<(), Failure> {
    let (graph, query) = match args.family {
        Family::Tight => {
            if args.colors < 2 {
                return Err(Failure::Usage("--family tight needs --colors 2 or more".into()));
            }
            let (g, q) = tight_example(args.colors);
            (g, Some(q))
        }
        Family::Random => {
            if !(0.0..=1.0).contains(&args.prob) {
                return Err(Failure::Usage("--prob must lie in [0, 1]".into()));
            }
            if args.colors == 0 || args.nodes < 2 {
                return Err(Failure::Usage("--family random needs --colors >= 1 and --nodes >= 2".into()));
            }
            (random_color_graph(args.nodes, args.colors, args.prob, args.seed), None)
        }
        Family::SatCdp | Family::SatLcdp4 => {
            let path = args.cnf.as_deref().ok_or_else(|| Failure::Usage("SAT families need --cnf".into()))?;
            let text = String::from_utf8(read(path)?)
                .map_err(|_| Failure::Parse(format!("{} is not UTF-8", path.display())))?;
            let f = CnfFormula::parse_dimacs(&text).map_err(|e| Failure::Parse(e.to_string()))?;
            let red = if args.family == Family::SatCdp { sat_to_cdp22(&f) } else { sat3occ_to_lcdp4(&f) };
            let red = red.map_err(|e| Failure::Parse(e.to_string()))?;
            (red.graph, Some(red.query))
        }
    };
    let default = match query {
        Some(q) => Some((q.source, q.target)),
        None => Some((0, 1)),
    };
    emit(args.out.as_deref(), &write_graph(&graph, default))
}

#[derive(Serialize)]
struct BenchReport {
    algorithm: &'static str,
    nodes: usize,
    colors: usize,
    edges: usize,
    kappa: usize,
    runs_ms: Vec<f64>,
    median_ms: f64,
}

fn bench(
    algo: AlgoArg,
    input: Option<&FsPath>,
    nodes: usize,
    colors: usize,
    edges_per_color: usize,
    seed: u64,
    repeat: usize,
) -> Result<(), Failure> {
    if repeat == 0 {
        return Err(Failure::Usage("--repeat must be at least 1".into()));
    }
    let (g, q) = match input {
        Some(path) => {
            let Loaded { graph: g, default_query: default, .. } = load_graph(path)?;
            let (s, t) = default.unwrap_or((0, 1));
            let q = Query::new(&g, s, t).map_err(|e| Failure::Usage(e.to_string()))?;
            (g, q)
        }
        None => {
            if nodes < 2 || colors == 0 {
                return Err(Failure::Usage("--nodes must be at least 2 and --colors at least 1".into()));
            }
            let g = random_sparse_graph(nodes, colors, edges_per_color, seed);
            let q = Query::new(&g, 0, 1).unwrap();
            (g, q)
        }
    };
    let algorithm = colorconn::verify::Algorithm::from(algo);
    let mut runs = Vec::with_capacity(repeat);
    let mut kappa = 0;
    for _ in 0..repeat {
        let started = Instant::now();
        let sol = match algo {
            AlgoArg::Exact => max_cdp_exact_with(&g, &q, &ExactConfig::default())?,
            AlgoArg::Greedy => greedy_c_approx(&g, &q, TieBreak::LowestColor),
            AlgoArg::Lcdp3 => lcdp3_exact(&g, &q.with_length_bound(3))?,
            AlgoArg::Lcdp4 => lcdp4_two_approx(&g, &q),
            AlgoArg::Lsearch => {
                let half = BigRational::new(BigInt::from(1), BigInt::from(2));
                lcdp_local_search(&g, &q.with_length_bound(4), 4, &half)?
            }
        };
        runs.push(started.elapsed().as_secs_f64() * 1e3);
        kappa = sol.len();
    }
    let mut sorted = runs.clone();
    sorted.sort_by(f64::total_cmp);
    let report = BenchReport {
        algorithm: algorithm.name(),
        nodes: g.node_count(),
        colors: g.color_count(),
        edges: g.edge_count(),
        kappa,
        median_ms: sorted[sorted.len() / 2],
        runs_ms: runs,
    };
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(parse_rational("1/2").unwrap(), r(1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), r(1, 4));
        assert_eq!(parse_rational("2").unwrap(), r(2, 1));
        assert!(parse_rational("0").is_err());
        assert!(parse_rational("-1/2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.-5").is_err());
    }
}
