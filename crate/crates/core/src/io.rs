//! Edge-list files, DIMACS flavored.
//!
//! ```text
//! c optional comments
//! p edge 3 3
//! 1 2
//! 2 3
//! e 3 1
//! ```
//!
//! With a `p` header ids are 1-based and the declared counts are checked.
//! Without one, ids are 0-based and the vertex count is `max id + 1`. Body
//! lines may carry a leading `e`.

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListFile {
    pub graph: Graph,
    /// Offset between file ids and graph ids (1 with a header, else 0).
    pub base: usize,
}

impl EdgeListFile {
    pub fn to_file_id(&self, v: usize) -> usize {
        v + self.base
    }

    pub fn from_file_id(&self, id: usize) -> Result<usize> {
        id.checked_sub(self.base)
            .filter(|&v| v < self.graph.vertex_count())
            .ok_or(Error::UnknownVertex(id))
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} {tok:?} is not a non-negative integer"),
        )
    })
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListFile> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace().peekable();
        match toks.peek().copied() {
            None => continue,
            Some(t) if t.starts_with('c') || t.starts_with('#') => continue,
            Some("p") => {
                if header.is_some() || !pairs.is_empty() {
                    return Err(parse_err(line, "header must come first and only once"));
                }
                toks.next();
                toks.next(); // format word, e.g. "edge"
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                header = Some((n, m, line));
                continue;
            }
            Some("e") => {
                toks.next();
            }
            Some(_) => {}
        }
        let u = number(toks.next(), line, "vertex id")?;
        let v = number(toks.next(), line, "vertex id")?;
        if let Some(extra) = toks.next() {
            return Err(parse_err(line, format!("unexpected token {extra:?}")));
        }
        pairs.push((u, v, line));
    }

    let base = usize::from(header.is_some());
    let mut shifted = Vec::with_capacity(pairs.len());
    for &(u, v, line) in &pairs {
        if u < base || v < base {
            return Err(parse_err(
                line,
                "vertex ids are 1-based when a header is present",
            ));
        }
        if let Some((n, _, _)) = header {
            if u > n || v > n {
                return Err(parse_err(
                    line,
                    format!("vertex id exceeds declared count {n}"),
                ));
            }
        }
        shifted.push((u - base, v - base));
    }
    let graph = match header {
        Some((n, m, line)) => {
            if m != pairs.len() {
                return Err(parse_err(
                    line,
                    format!("header declares {m} edges, found {}", pairs.len()),
                ));
            }
            Graph::with_vertices(n, &shifted)
        }
        None => Graph::from_edge_list(&shifted),
    }
    .map_err(|e| e.offset_vertices(base))?;
    Ok(EdgeListFile { graph, base })
}

/// Header plus 1-based body lines.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
