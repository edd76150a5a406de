// SPDX-License-Identifier: Apache-2.0

//! Edge-list input and coordinate CSV output.
//!
//! Edge lists are UTF-8 text with one edge per line, written as two
//! whitespace-separated vertex ids. Lines starting with `#` and blank lines
//! are skipped. The ids used must be exactly `0..n`.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::format::fmt_g17;
use crate::graph_lab::graph::ExplicitGraph;
use crate::graph_lab::Coordinates;

pub fn parse_edge_list(text: &str) -> Result<ExplicitGraph> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = Some(idx + 1);
        let mut fields = line.split_whitespace();
        let mut id = || -> Result<usize> {
            let tok = fields.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: "expected two vertex ids".into(),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("{tok:?} is not a non-negative integer"),
            })
        };
        let (x, y) = (id()?, id()?);
        if let Some(extra) = fields.next() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("unexpected trailing field {extra:?}"),
            });
        }
        if x == y {
            return Err(Error::SelfLoop(x));
        }
        edges.push((x, y));
    }
    let Some(max_id) = edges.iter().map(|&(x, y)| x.max(y)).max() else {
        return Err(Error::Parse {
            line: None,
            message: "edge list is empty".into(),
        });
    };
    let n = max_id + 1;
    let mut seen = vec![false; n];
    for &(x, y) in &edges {
        seen[x] = true;
        seen[y] = true;
    }
    if seen.contains(&false) {
        // an id in 0..n with no edge is an isolated vertex
        return Err(Error::Disconnected);
    }
    ExplicitGraph::from_edges(n, edges, None)
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<ExplicitGraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_edge_list(&text)
}

/// Writes `vertex,label,x0,x1,...` followed by one row per vertex.
pub fn write_coordinates_csv<W: Write>(
    mut out: W,
    coords: &Coordinates,
    labels: &[String],
) -> std::io::Result<()> {
    write!(out, "vertex,label")?;
    for j in 0..coords.dim() {
        write!(out, ",x{j}")?;
    }
    writeln!(out)?;
    for v in 0..coords.n_points() {
        let label = labels.get(v).map(String::as_str).unwrap_or("");
        write!(out, "{v},{label}")?;
        for &x in coords.row(v) {
            write!(out, ",{}", fmt_g17(x))?;
        }
        writeln!(out)?;
    }
    Ok(())
}
