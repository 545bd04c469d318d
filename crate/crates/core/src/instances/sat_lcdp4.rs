use std::collections::BTreeMap;

use super::{CnfFormula, Reduction};
use crate::error::ReductionError;
use crate::graph::{ColorGraph, Query};

/// Reduction to the length-4 bounded problem for formulas in which every
/// variable occurs at most three times.
///
/// Variables that occur with a single polarity are set to satisfy their
/// clauses, which are dropped; this repeats until every remaining variable
/// occurs both ways, so each literal occurs at most twice. With `q` clauses
/// and `r` variables left, color 1 has a path `s-c_j-o-c'_j-t` for every
/// occurrence `o` in clause `j`, and color 2 has `s-a_i` followed by the
/// occurrence chain of `x_i` or of `!x_i` into `t`. All uni-color
/// st-paths have length at most 4, and `q + r` disjoint ones exist iff the
/// formula is satisfiable.
pub fn sat3occ_to_lcdp4(f: &CnfFormula) -> Result<Reduction, ReductionError> {
    if f.clauses.is_empty() {
        return Err(ReductionError::NoClauses);
    }
    let mut clauses: Vec<Vec<i64>> = Vec::with_capacity(f.clauses.len());
    for (j, clause) in f.clauses.iter().enumerate() {
        if clause.is_empty() {
            return Err(ReductionError::EmptyClause { clause: j + 1 });
        }
        let mut dedup = Vec::new();
        for &lit in clause {
            if !dedup.contains(&lit) {
                dedup.push(lit);
            }
        }
        clauses.push(dedup);
    }
    let mut per_variable: BTreeMap<usize, usize> = BTreeMap::new();
    for lit in clauses.iter().flatten() {
        *per_variable.entry(lit.unsigned_abs() as usize).or_default() += 1;
    }
    if let Some((&variable, &count)) = per_variable.iter().find(|(_, &count)| count > 3) {
        return Err(ReductionError::TooManyOccurrences { variable, count });
    }

    loop {
        let mut polarity: BTreeMap<u64, (bool, bool)> = BTreeMap::new();
        for &lit in clauses.iter().flatten() {
            let e = polarity.entry(lit.unsigned_abs()).or_default();
            if lit > 0 {
                e.0 = true;
            } else {
                e.1 = true;
            }
        }
        let pure: Vec<i64> = polarity
            .iter()
            .filter(|(_, &(pos, neg))| pos != neg)
            .map(|(&v, &(pos, _))| if pos { v as i64 } else { -(v as i64) })
            .collect();
        if pure.is_empty() {
            break;
        }
        clauses.retain(|clause| !clause.iter().any(|lit| pure.contains(lit)));
    }

    let mut literal_counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &lit in clauses.iter().flatten() {
        *literal_counts.entry(lit).or_default() += 1;
    }
    if let Some((&literal, &count)) = literal_counts.iter().find(|(_, &count)| count > 2) {
        return Err(ReductionError::TooManyLiteralOccurrences { literal, count });
    }

    let variables: Vec<u64> = {
        let mut v: Vec<u64> = literal_counts.keys().map(|l| l.unsigned_abs()).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (q, r) = (clauses.len(), variables.len());
    let (s, t) = (0, 1);
    let clause_in = |j: usize| 2 + j;
    let clause_out = |j: usize| 2 + q + j;
    let var_node = |i: usize| 2 + 2 * q + i;
    let mut next = 2 + 2 * q + r;
    let mut edges = Vec::new();
    let mut chains: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (j, clause) in clauses.iter().enumerate() {
        edges.push((s, clause_in(j), 1));
        edges.push((clause_out(j), t, 1));
        for &lit in clause {
            let o = next;
            next += 1;
            edges.push((clause_in(j), o, 1));
            edges.push((o, clause_out(j), 1));
            chains.entry(lit).or_default().push(o);
        }
    }
    for (i, &var) in variables.iter().enumerate() {
        edges.push((s, var_node(i), 2));
        for lit in [var as i64, -(var as i64)] {
            let chain = &chains[&lit];
            edges.push((var_node(i), chain[0], 2));
            for w in chain.windows(2) {
                edges.push((w[0], w[1], 2));
            }
            edges.push((*chain.last().unwrap(), t, 2));
        }
    }
    let graph = ColorGraph::from_edges(next, 2, &edges).expect("gadget edges are valid");
    let query = Query::new(&graph, s, t).unwrap().with_length_bound(4);
    Ok(Reduction { graph, query, target: q + r })
}
