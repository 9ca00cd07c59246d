//! Line-oriented text format for game graphs.
//!
//! ```text
//! influence v1
//! # comment
//! v <id> <L|R>
//! a <from> <to>
//! ```
//!
//! Ids may be any non-negative integers; they are re-densified in ascending
//! order on parse and restored on serialization.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{GameGraph, Side};

pub const HEADER: &str = "influence v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `{HEADER}` header")]
    MissingHeader,
    #[error("unknown record `{0}`")]
    UnknownRecord(String),
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("invalid vertex id `{0}`")]
    BadId(String),
    #[error("invalid color `{0}` (expected L or R)")]
    BadColor(String),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(u64),
    #[error("arc references undeclared vertex {0}")]
    UndeclaredVertex(u64),
    #[error("self-loop")]
    SelfLoop,
    #[error("trailing tokens")]
    Trailing,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParseErrorKind::SelfLoop => {
                write!(f, "self-loop at line {} (column {})", self.line, self.column)
            }
            _ => write!(f, "line {}, column {}: {}", self.line, self.column, self.kind),
        }
    }
}

/// A parsed graph together with the file's original vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDoc {
    pub graph: GameGraph,
    /// `ids[v]` is the id written in the file for dense vertex `v`.
    pub ids: Vec<u64>,
    /// Arcs that appeared more than once in the input.
    pub duplicate_arcs: usize,
}

impl GraphDoc {
    /// Wraps a graph whose ids are already `0..n`.
    pub fn from_graph(graph: GameGraph) -> Self {
        let ids = (0..graph.len() as u64).collect();
        GraphDoc {
            graph,
            ids,
            duplicate_arcs: 0,
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut seen_header = false;
        let mut vertices: BTreeMap<u64, Side> = BTreeMap::new();
        let mut arcs: Vec<(u64, u64, usize, usize)> = Vec::new();

        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let mut tokens = Tokens::new(line);
            let Some((col, head)) = tokens.next() else {
                continue;
            };
            let err = |column, kind| ParseError {
                line: line_no,
                column,
                kind,
            };
            if !seen_header {
                if line.trim() != HEADER {
                    return Err(err(col, ParseErrorKind::MissingHeader));
                }
                seen_header = true;
                continue;
            }
            match head {
                "v" => {
                    let (c, tok) = tokens.next().ok_or_else(|| err(line.len() + 1, ParseErrorKind::Expected("vertex id")))?;
                    let id = parse_id(tok).ok_or_else(|| err(c, ParseErrorKind::BadId(tok.into())))?;
                    let (c2, tok) = tokens.next().ok_or_else(|| err(line.len() + 1, ParseErrorKind::Expected("color")))?;
                    let color = match tok {
                        "L" => Side::Left,
                        "R" => Side::Right,
                        _ => return Err(err(c2, ParseErrorKind::BadColor(tok.into()))),
                    };
                    if let Some((c3, _)) = tokens.next() {
                        return Err(err(c3, ParseErrorKind::Trailing));
                    }
                    if vertices.insert(id, color).is_some() {
                        return Err(err(c, ParseErrorKind::DuplicateVertex(id)));
                    }
                }
                "a" => {
                    let (c1, tok) = tokens.next().ok_or_else(|| err(line.len() + 1, ParseErrorKind::Expected("arc tail")))?;
                    let from = parse_id(tok).ok_or_else(|| err(c1, ParseErrorKind::BadId(tok.into())))?;
                    let (c2, tok) = tokens.next().ok_or_else(|| err(line.len() + 1, ParseErrorKind::Expected("arc head")))?;
                    let to = parse_id(tok).ok_or_else(|| err(c2, ParseErrorKind::BadId(tok.into())))?;
                    if let Some((c3, _)) = tokens.next() {
                        return Err(err(c3, ParseErrorKind::Trailing));
                    }
                    if from == to {
                        return Err(err(c1, ParseErrorKind::SelfLoop));
                    }
                    arcs.push((from, to, line_no, c1));
                }
                other => return Err(err(col, ParseErrorKind::UnknownRecord(other.into()))),
            }
        }
        if !seen_header {
            return Err(ParseError {
                line: 1,
                column: 1,
                kind: ParseErrorKind::MissingHeader,
            });
        }

        let ids: Vec<u64> = vertices.keys().copied().collect();
        let colors: Vec<Side> = vertices.values().copied().collect();
        let dense = |id: u64| ids.binary_search(&id).ok();
        let mut dense_arcs = Vec::with_capacity(arcs.len());
        for (from, to, line, column) in arcs {
            for (id, col) in [(from, column), (to, column)] {
                if dense(id).is_none() {
                    return Err(ParseError {
                        line,
                        column: col,
                        kind: ParseErrorKind::UndeclaredVertex(id),
                    });
                }
            }
            dense_arcs.push((dense(from).unwrap(), dense(to).unwrap()));
        }
        let total = dense_arcs.len();
        let graph = GameGraph::new(colors, dense_arcs).expect("validated above");
        let duplicate_arcs = total - graph.arcs().len();
        if duplicate_arcs > 0 {
            log::warn!("ignored {duplicate_arcs} duplicate arc(s)");
        }
        Ok(GraphDoc {
            graph,
            ids,
            duplicate_arcs,
        })
    }

    /// Canonical text: vertices by ascending id, then arcs in lexicographic
    /// order of their original ids.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(HEADER);
        out.push('\n');
        let mut order: Vec<usize> = (0..self.graph.len()).collect();
        order.sort_by_key(|&v| self.ids[v]);
        for v in order {
            writeln!(out, "v {} {}", self.ids[v], self.graph.color(v)).unwrap();
        }
        let mut arcs: Vec<(u64, u64)> = self
            .graph
            .arcs()
            .iter()
            .map(|&(a, b)| (self.ids[a], self.ids[b]))
            .collect();
        arcs.sort_unstable();
        for (a, b) in arcs {
            writeln!(out, "a {a} {b}").unwrap();
        }
        out
    }
}

fn parse_id(tok: &str) -> Option<u64> {
    if tok.starts_with('+') {
        return None;
    }
    tok.parse().ok()
}

/// Whitespace tokenizer reporting 1-based columns.
struct Tokens<'a> {
    line: &'a str,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(line: &'a str) -> Self {
        Tokens { line, pos: 0 }
    }
}

impl<'a> Iterator for Tokens<'a> {
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let rest = &self.line[self.pos..];
        let start = self.pos + (rest.len() - rest.trim_start().len());
        let tail = &self.line[start..];
        if tail.is_empty() {
            return None;
        }
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        self.pos = start + len;
        Some((start + 1, &tail[..len]))
    }
}

/// Graphviz rendering; L-vertices filled, R-vertices hollow.
pub fn to_dot(doc: &GraphDoc) -> String {
    let mut out = String::from("digraph influence {\n");
    for v in 0..doc.graph.len() {
        let style = match doc.graph.color(v) {
            Side::Left => "style=filled, fillcolor=black, fontcolor=white",
            Side::Right => "style=solid, fillcolor=white",
        };
        writeln!(out, "  {} [shape=circle, {style}];", doc.ids[v]).unwrap();
    }
    for &(a, b) in doc.graph.arcs() {
        writeln!(out, "  {} -> {};", doc.ids[a], doc.ids[b]).unwrap();
    }
    out.push_str("}\n");
    out
}
