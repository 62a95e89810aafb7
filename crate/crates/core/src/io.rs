//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! d m
//! u1 v1
//! ...
//! ```
//!
//! Vertices are 1-indexed. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `d m` header".into(),
    })?;
    let [d, m] = parse_pair(header_line, header, "header `d m`")?;

    let mut pairs = Vec::with_capacity(m);
    for (line, l) in lines {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the {m} edges declared in the header"),
            });
        }
        pairs.push(parse_pair(line, l, "edge `u v`")?.into());
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(d, &pairs)
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<[usize; 2]> {
    let bad = || Error::Parse {
        line,
        msg: format!("expected {what}, got `{text}`"),
    };
    let mut fields = text.split_whitespace();
    let a = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
    let b = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
    if fields.next().is_some() {
        return Err(bad());
    }
    Ok([a, b])
}

/// Canonical serialisation: header then edges in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.d(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    std::fs::write(path, write_edge_list(g))?;
    Ok(())
}
