use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};

/// A CNF formula over variables `1..=variable_count`. A literal is a signed
/// variable index; `-3` is the negation of `x3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub variable_count: usize,
    pub clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i64>>) -> Self {
        CnfFormula { variable_count, clauses }
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Truth value under `assignment`, where `assignment[i]` is `x_{i+1}`.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }

    /// Parses DIMACS CNF: `c` comment lines, a `p cnf <r> <q>` header, then
    /// `q` clauses of nonzero literals, each terminated by `0`. Clauses may
    /// span lines. A lone `0` is an empty clause.
    pub fn parse_dimacs(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let malformed = || ParseError::new(line_no, ParseErrorKind::Malformed(line.to_string()));
            if let Some(rest) = line.strip_prefix('p') {
                if header.is_some() {
                    return Err(ParseError::new(line_no, ParseErrorKind::DuplicateHeader));
                }
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() != 3 || fields[0] != "cnf" {
                    return Err(malformed());
                }
                let r = fields[1].parse().map_err(|_| malformed())?;
                let q = fields[2].parse().map_err(|_| malformed())?;
                header = Some((r, q));
                continue;
            }
            let (variables, _) = header.ok_or_else(|| ParseError::new(line_no, ParseErrorKind::MissingHeader))?;
            for token in line.split_whitespace() {
                let lit: i64 = token.parse().map_err(|_| malformed())?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() as usize > variables {
                    return Err(ParseError::new(
                        line_no,
                        ParseErrorKind::LiteralOutOfRange { literal: lit, variables },
                    ));
                } else {
                    current.push(lit);
                }
            }
        }
        let (variable_count, clause_count) =
            header.ok_or_else(|| ParseError::new(last_line.max(1), ParseErrorKind::MissingHeader))?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != clause_count {
            return Err(ParseError::new(
                last_line.max(1),
                ParseErrorKind::Malformed(format!("header declares {clause_count} clauses, found {}", clauses.len())),
            ));
        }
        Ok(CnfFormula { variable_count, clauses })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                write!(out, "{lit} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }
}
