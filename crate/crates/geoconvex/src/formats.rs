//! Plain-text graph and matroid files.
//!
//! Both formats are line-oriented: `#` starts a comment, blank lines are
//! skipped, identifiers are 0-based. A graph file opens with `n m`
//! followed by m edge lines `u v`; a matroid file opens with `n r`
//! followed by one basis per line, r elements each.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::matroid::{Matroid, MatroidError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid graph")]
    InvalidGraph(#[from] GraphError),
    #[error("invalid matroid")]
    InvalidMatroid(#[from] MatroidError),
}

/// Numbered, comment-stripped, nonblank lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_fields<const K: usize>(line: usize, text: &str) -> Result<[usize; K], FormatError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != K {
        return Err(FormatError::Syntax {
            line,
            message: format!("expected {K} fields, found {}", fields.len()),
        });
    }
    let mut out = [0usize; K];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field.parse().map_err(|_| FormatError::Syntax {
            line,
            message: format!("invalid number {field:?}"),
        })?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(FormatError::Syntax {
        line: 1,
        message: "missing header".into(),
    })?;
    let [n, m] = parse_fields(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        if edges.len() == m {
            return Err(FormatError::Syntax {
                line,
                message: format!("unexpected line after {m} edges"),
            });
        }
        let [u, v] = parse_fields(line, text)?;
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(FormatError::Syntax {
            line: last_line,
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new(n, edges)?)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_matroid(text: &str) -> Result<Matroid, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(FormatError::Syntax {
        line: 1,
        message: "missing header".into(),
    })?;
    let [n, r] = parse_fields(header_line, header)?;
    let mut bases = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != r {
            return Err(FormatError::Syntax {
                line,
                message: format!("expected {r} elements, found {}", fields.len()),
            });
        }
        let mut basis = Vec::with_capacity(r);
        for field in fields {
            basis.push(field.parse().map_err(|_| FormatError::Syntax {
                line,
                message: format!("invalid number {field:?}"),
            })?);
        }
        bases.push(basis);
    }
    Ok(Matroid::from_bases(n, bases)?)
}

pub fn format_matroid(m: &Matroid) -> String {
    let mut out = format!("{} {}\n", m.ground_size(), m.rank());
    for basis in m.bases() {
        let rendered: Vec<String> = basis.iter().map(usize::to_string).collect();
        writeln!(out, "{}", rendered.join(" ")).unwrap();
    }
    out
}
