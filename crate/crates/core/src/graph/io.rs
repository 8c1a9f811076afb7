use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    /// Parses the line-oriented edge-list format.
    ///
    /// Blank lines and lines starting with `#` are ignored. The first
    /// remaining line may be `p <n>` to fix the vertex count; otherwise the
    /// count is one more than the largest index seen. Every other line is
    /// an edge `u v`.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen_content = false;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let first_content = !seen_content;
            seen_content = true;

            if tokens[0] == "p" {
                if !first_content {
                    return Err(parse_err(line_no, "`p` line must come before any edge"));
                }
                if tokens.len() != 2 {
                    return Err(parse_err(line_no, "expected `p <n>`"));
                }
                declared = Some(parse_index(tokens[1], line_no)?);
                continue;
            }
            if tokens.len() != 2 {
                return Err(parse_err(
                    line_no,
                    &format!("expected two vertex indices, found {} tokens", tokens.len()),
                ));
            }
            let u = parse_index(tokens[0], line_no)?;
            let v = parse_index(tokens[1], line_no)?;
            if u == v {
                return Err(parse_err(line_no, &format!("self-loop at vertex {u}")));
            }
            if let Some(n) = declared {
                if u >= n || v >= n {
                    return Err(parse_err(
                        line_no,
                        &format!("vertex index out of range for p = {n}"),
                    ));
                }
            }
            edges.push((u, v));
        }

        let p = match declared {
            Some(n) => n,
            None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
        };
        if p == 0 {
            return Err(Error::InvalidGraph("no vertices declared".into()));
        }
        Graph::from_edges(p, edges)
    }

    /// Emits `p <n>` followed by the sorted edge list.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {}\n", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, &format!("`{tok}` is not a vertex index")))
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}
