//! The line-based graph file format and the comma-separated collection
//! syntax.
//!
//! ```text
//! # comments and blank lines are ignored
//! node 1
//! node 2
//! edge 1 2 a
//! edge 1 2 b
//! ```
//!
//! When a file has no `node` lines, the node set is the set of edge
//! endpoints. Once any `node` line is present, every endpoint must be
//! declared.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::{Collection, Member, NodeId, Pseudograph};

/// Where an item of the graph was declared in the source text (1-based).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SourceMap {
    pub nodes: BTreeMap<NodeId, usize>,
    /// Line of each `edge` statement, in file order.
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub source: String,
    pub graph: Pseudograph,
    pub locations: SourceMap,
}

type RawEdge = (NodeId, NodeId, Option<String>);

fn parse_node(tok: &str, line: usize) -> Result<NodeId, ParseError> {
    match tok.parse::<NodeId>() {
        Ok(0) => Err(ParseError::Invalid { line, source: GraphError::InvalidNode(0) }),
        Ok(v) => Ok(v),
        Err(_) => Err(ParseError::Syntax { line, message: format!("expected a positive node id, found `{tok}`") }),
    }
}

pub fn parse_graph(text: &str) -> Result<GraphDocument, ParseError> {
    let mut locations = SourceMap::default();
    let mut edges: Vec<RawEdge> = Vec::new();
    let mut label_lines: BTreeMap<String, usize> = BTreeMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            ["node", id] => {
                let v = parse_node(id, line)?;
                if locations.nodes.insert(v, line).is_some() {
                    return Err(ParseError::Invalid { line, source: GraphError::DuplicateNode(v) });
                }
            }
            ["edge", a, b, rest @ ..] if rest.len() <= 1 => {
                let (a, b) = (parse_node(a, line)?, parse_node(b, line)?);
                if a == b {
                    return Err(ParseError::Invalid { line, source: GraphError::LoopEdge(a) });
                }
                let label = rest.first().map(|l| l.to_string());
                if let Some(l) = &label {
                    if !crate::graph::valid_label(l) {
                        return Err(ParseError::Invalid { line, source: GraphError::InvalidLabel(l.clone()) });
                    }
                    if label_lines.insert(l.clone(), line).is_some() {
                        return Err(ParseError::Invalid { line, source: GraphError::DuplicateLabel(l.clone()) });
                    }
                }
                locations.edges.push(line);
                edges.push((a, b, label));
            }
            [kw, ..] if *kw == "node" || *kw == "edge" => {
                let usage = if *kw == "node" { "node <id>" } else { "edge <id> <id> [<label>]" };
                return Err(ParseError::Syntax { line, message: format!("expected `{usage}`") });
            }
            [kw, ..] => {
                return Err(ParseError::Syntax { line, message: format!("unknown statement `{kw}`") });
            }
        }
    }

    let nodes: Vec<NodeId> = if locations.nodes.is_empty() {
        let mut implicit: Vec<NodeId> = edges.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        implicit.sort_unstable();
        implicit.dedup();
        implicit
    } else {
        for (k, &(a, b, _)) in edges.iter().enumerate() {
            for v in [a, b] {
                if !locations.nodes.contains_key(&v) {
                    return Err(ParseError::UnknownNodeInEdge { line: locations.edges[k], node: v });
                }
            }
        }
        locations.nodes.keys().copied().collect()
    };

    let graph = Pseudograph::new(nodes, edges.iter().cloned()).map_err(|e| {
        let line = match &e {
            GraphError::UnlabelledBundleEdge(a, b) => edges
                .iter()
                .position(|(x, y, l)| l.is_none() && (*x.min(y), *x.max(y)) == (*a, *b))
                .map_or(0, |k| locations.edges[k]),
            _ => 0,
        };
        ParseError::Invalid { line, source: e }
    })?;
    Ok(GraphDocument { source: text.to_string(), graph, locations })
}

/// Writes `g` in the file format, declaring every node explicitly.
pub fn serialize_graph(g: &Pseudograph) -> String {
    let mut out = String::new();
    for v in g.nodes() {
        writeln!(out, "node {v}").unwrap();
    }
    for e in g.edges() {
        match &e.label {
            Some(l) => writeln!(out, "edge {} {} {l}", e.ends.0, e.ends.1).unwrap(),
            None => writeln!(out, "edge {} {}", e.ends.0, e.ends.1).unwrap(),
        }
    }
    out
}

/// Parses `1,3,a,b`. Numeric tokens are nodes; anything else must label an
/// edge of a bundle.
pub fn parse_collection(text: &str, g: &Pseudograph) -> Result<Collection, ParseError> {
    let mut members = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let m = match tok.parse::<NodeId>() {
            Ok(v) => Member::Node(v),
            Err(_) => Member::edge(tok),
        };
        if !g.contains_member(&m) {
            let on_simple_edge = g.edges().iter().any(|e| e.label.as_deref() == Some(tok));
            return Err(if on_simple_edge {
                ParseError::NotInAnyBundle(tok.to_string())
            } else {
                ParseError::UnknownMember(tok.to_string())
            });
        }
        members.push(m);
    }
    Ok(Collection::new(members))
}

/// Formats a collection for the comma syntax accepted by [`parse_collection`].
pub fn format_collection(c: &Collection) -> String {
    c.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
}
