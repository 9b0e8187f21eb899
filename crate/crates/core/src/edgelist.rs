//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! graph <name>
//! vertices <count>
//! edge <id> <tail> <head> [<label>]
//! ```
//!
//! `vertices` is optional on input; without it the vertex count is one more
//! than the largest endpoint. [`write`] always emits it, so isolated vertices
//! survive a round trip and `parse(write(g)) == g`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::multigraph::{EdgeId, GraphError, Multigraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing `graph <name>` header")]
    MissingHeader,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{tok}`")))
}

pub fn parse(text: &str) -> Result<Multigraph, ParseError> {
    let mut name: Option<String> = None;
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, u32, u32, u32, Option<String>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(kw) = toks.next() else { continue };
        match kw {
            "graph" => {
                if name.is_some() {
                    return Err(syntax(line, "duplicate `graph` header"));
                }
                let n = toks.next().ok_or_else(|| syntax(line, "missing graph name"))?;
                name = Some(n.to_string());
            }
            "vertices" => {
                if name.is_none() {
                    return Err(syntax(line, "`vertices` before `graph` header"));
                }
                declared = Some(number(toks.next(), line, "vertex count")?);
            }
            "edge" => {
                if name.is_none() {
                    return Err(syntax(line, "`edge` before `graph` header"));
                }
                let id = number(toks.next(), line, "edge id")?;
                let tail = number(toks.next(), line, "tail vertex")?;
                let head = number(toks.next(), line, "head vertex")?;
                let label = toks.next().map(str::to_string);
                edges.push((line, id, tail, head, label));
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }

    let name = name.ok_or(ParseError::MissingHeader)?;
    let implied = edges
        .iter()
        .map(|&(_, _, t, h, _)| t.max(h) as usize + 1)
        .max()
        .unwrap_or(0);
    let mut g = Multigraph::new(name, declared.unwrap_or(implied));
    for (line, id, tail, head, label) in edges {
        g.insert_edge(EdgeId(id), VertexId(tail), VertexId(head), label)
            .map_err(|source| ParseError::Graph { line, source })?;
    }
    Ok(g)
}

pub fn write(g: &Multigraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {}", g.name()).unwrap();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for e in g.edges() {
        write!(out, "edge {} {} {}", e.id, e.tail, e.head).unwrap();
        if let Some(l) = &e.label {
            write!(out, " {l}").unwrap();
        }
        out.push('\n');
    }
    out
}
