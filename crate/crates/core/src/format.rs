//! Line-oriented graph file format.
//!
//! ```text
//! # comment
//! p cdp <n> <c>
//! e <u> <v> <color>
//! q <s> <t>          (optional default query)
//! ```
//!
//! Nodes are 0-based, colors 1-based. Serialization is canonical: edges are
//! sorted by color, then `min(u,v)`, then `max(u,v)`.

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError, ParseErrorKind};
use crate::graph::{ColorGraph, NodeId};

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: ColorGraph,
    pub default_query: Option<(NodeId, NodeId)>,
}

pub fn parse_graph(text: &str) -> Result<ColorGraph, ParseError> {
    parse_graph_file(text).map(|f| f.graph)
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, ParseError> {
    let mut graph: Option<ColorGraph> = None;
    let mut default_query = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap();
        let fields: Vec<&str> = tokens.collect();
        let malformed = || ParseError::new(line_no, ParseErrorKind::Malformed(line.to_string()));
        let nums = |want: usize| -> Result<Vec<usize>, ParseError> {
            if fields.len() != want {
                return Err(malformed());
            }
            fields.iter().map(|f| f.parse::<usize>().map_err(|_| malformed())).collect()
        };
        match tag {
            "p" => {
                if graph.is_some() {
                    return Err(ParseError::new(line_no, ParseErrorKind::DuplicateHeader));
                }
                if fields.first() != Some(&"cdp") || fields.len() != 3 {
                    return Err(malformed());
                }
                let n: usize = fields[1].parse().map_err(|_| malformed())?;
                let c: usize = fields[2].parse().map_err(|_| malformed())?;
                if c == 0 {
                    return Err(malformed());
                }
                graph = Some(ColorGraph::new(n, c));
            }
            "e" => {
                let g = graph.as_mut().ok_or_else(|| ParseError::new(line_no, ParseErrorKind::MissingHeader))?;
                let v = nums(3)?;
                let color = u32::try_from(v[2]).unwrap_or(u32::MAX);
                g.add_edge(v[0], v[1], color).map_err(|e| ParseError::new(line_no, e))?;
            }
            "q" => {
                let g = graph.as_ref().ok_or_else(|| ParseError::new(line_no, ParseErrorKind::MissingHeader))?;
                let v = nums(2)?;
                g.check_node(v[0]).map_err(|e| ParseError::new(line_no, e))?;
                g.check_node(v[1]).map_err(|e| ParseError::new(line_no, e))?;
                if v[0] == v[1] {
                    return Err(ParseError::new(line_no, GraphError::SameEndpoints { node: v[0] }));
                }
                default_query = Some((v[0], v[1]));
            }
            _ => return Err(malformed()),
        }
    }
    let graph = graph.ok_or_else(|| ParseError::new(last_line.max(1), ParseErrorKind::MissingHeader))?;
    Ok(GraphFile { graph, default_query })
}

/// Canonical text form of `g`, optionally with a default query line.
pub fn write_graph(g: &ColorGraph, default_query: Option<(NodeId, NodeId)>) -> String {
    let mut out = String::new();
    writeln!(out, "p cdp {} {}", g.node_count(), g.color_count()).unwrap();
    if let Some((s, t)) = default_query {
        writeln!(out, "q {s} {t}").unwrap();
    }
    for (u, v, color) in g.edges() {
        writeln!(out, "e {u} {v} {color}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;
    use crate::instances::fixtures;
    use proptest::prelude::*;

    #[test]
    fn parses_fix_a() {
        let g = parse_graph("p cdp 4 2\ne 0 2 1\ne 2 1 1\ne 0 3 2\ne 3 1 2").unwrap();
        assert_eq!(g, fixtures::fix_a().0);
    }

    #[test]
    fn parses_empty_graph() {
        let g = parse_graph("p cdp 2 1").unwrap();
        assert_eq!((g.node_count(), g.color_count(), g.edge_count()), (2, 1, 0));
    }

    #[test]
    fn comments_and_query_line() {
        let f = parse_graph_file("# hello\n\np cdp 3 1\nq 0 1\n# mid\ne 0 2 1\n").unwrap();
        assert_eq!(f.default_query, Some((0, 1)));
        assert!(f.graph.has_edge(2, 0, Color::new(1)));
    }

    #[test]
    fn rejects_bad_input_with_line_numbers() {
        let err = parse_graph("p cdp 4 2\ne 0 5 1").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, ParseErrorKind::Graph(GraphError::NodeOutOfRange { node: 5, .. })));

        let err = parse_graph("p cdp 4 2\ne 0 1 3").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Graph(GraphError::ColorOutOfRange { .. })));
        let err = parse_graph("p cdp 4 2\n# x\ne 1 1 1").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, ParseErrorKind::Graph(GraphError::SelfLoop { .. })));
        let err = parse_graph("p cdp 4 2\ne 0 1 1\ne 1 0 1").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Graph(GraphError::DuplicateEdge { .. })));
        assert!(matches!(parse_graph("e 0 1 1").unwrap_err().kind, ParseErrorKind::MissingHeader));
        assert!(matches!(parse_graph("p cdp 4").unwrap_err().kind, ParseErrorKind::Malformed(_)));
        assert!(matches!(parse_graph("p cdp 4 2\ne 0 x 1").unwrap_err().kind, ParseErrorKind::Malformed(_)));
        assert!(matches!(parse_graph("p cdp 4 2\np cdp 4 2").unwrap_err().kind, ParseErrorKind::DuplicateHeader));
        assert!(matches!(parse_graph("").unwrap_err().kind, ParseErrorKind::MissingHeader));
    }

    #[test]
    fn canonical_order() {
        let g = parse_graph("p cdp 4 2\ne 3 1 2\ne 2 1 1\ne 0 3 2\ne 0 2 1").unwrap();
        assert_eq!(write_graph(&g, Some((0, 1))), "p cdp 4 2\nq 0 1\ne 0 2 1\ne 1 2 1\ne 0 3 2\ne 1 3 2\n");
    }

    fn arb_graph() -> impl Strategy<Value = ColorGraph> {
        (2usize..9, 1usize..4).prop_flat_map(|(n, c)| {
            proptest::collection::vec((0..n, 0..n, 1..=c as u32), 0..30).prop_map(move |edges| {
                let mut g = ColorGraph::new(n, c);
                for (u, v, col) in edges {
                    let _ = g.add_edge(u, v, col);
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn serialization_round_trips(g in arb_graph()) {
            let text = write_graph(&g, None);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_graph(&back, None), text);
        }
    }
}
