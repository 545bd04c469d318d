use thiserror::Error;

use crate::graph::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node id {node} out of range (n = {nodes})")]
    NodeOutOfRange { node: NodeId, nodes: usize },
    #[error("color {color} out of range (c = {colors})")]
    ColorOutOfRange { color: u32, colors: usize },
    #[error("self-loop at node {node}")]
    SelfLoop { node: NodeId },
    #[error("duplicate edge ({u},{v}) in color {color}")]
    DuplicateEdge { u: NodeId, v: NodeId, color: u32 },
    #[error("source and target are both node {node}")]
    SameEndpoints { node: NodeId },
}

/// A malformed graph or CNF file, with the 1-based line it was found on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("literal {literal} out of range (variables = {variables})")]
    LiteralOutOfRange { literal: i64, variables: usize },
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: impl Into<ParseErrorKind>) -> Self {
        ParseError { line, kind: kind.into() }
    }
}

/// Explicit refusals and unsupported inputs. Solvers never truncate silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("enumeration needs {needed} colorings, over the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("more than {cap} candidate paths")]
    PathCapExceeded { cap: usize },
    #[error("instance too large for the brute-force oracle: {0}")]
    OracleGuard(String),
    #[error("length bound {bound} is not supported by {algorithm}")]
    UnsupportedLengthBound { algorithm: &'static str, bound: usize },
    #[error("no swap parameter up to {max} reaches the requested ratio")]
    SwapTooLarge { max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("formula has no clauses")]
    NoClauses,
    #[error("variable x{variable} occurs {count} times (at most 3 allowed)")]
    TooManyOccurrences { variable: usize, count: usize },
    #[error("literal {literal} occurs {count} times after normalization (at most 2 allowed)")]
    TooManyLiteralOccurrences { literal: i64, count: usize },
}
