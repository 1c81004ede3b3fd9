//! The repo's canonical text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-indexed
//! vertices. Blank lines and lines starting with `#` are ignored. A product
//! specification is two edge-list sections separated by a line containing
//! only `%`.

use crate::error::{Error, Result};
use crate::graph::Graph;

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { iter: text.lines().enumerate() }
    }

    /// Next significant line as (1-based line number, trimmed content).
    fn next_significant(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.iter.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((idx + 1, line));
        }
        None
    }
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, found {token:?}"),
    })
}

fn parse_section(lines: &mut Lines, stop_at_percent: bool) -> Result<Graph> {
    let (lineno, header) = lines.next_significant().ok_or(Error::Parse {
        line: 0,
        msg: "missing header line \"n m\"".into(),
    })?;
    let mut it = header.split_whitespace();
    let (Some(n_tok), Some(m_tok), None) = (it.next(), it.next(), it.next()) else {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("expected header \"n m\", found {header:?}"),
        });
    };
    let n = parse_usize(lineno, n_tok, "vertex count")?;
    let m = parse_usize(lineno, m_tok, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let (lineno, line) = lines.next_significant().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {m} edges, found {}", edges.len()),
        })?;
        if stop_at_percent && line == "%" {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("section ended early: expected {m} edges, found {}", edges.len()),
            });
        }
        let mut it = line.split_whitespace();
        let (Some(u_tok), Some(v_tok), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected edge \"u v\", found {line:?}"),
            });
        };
        let u = parse_usize(lineno, u_tok, "vertex id")?;
        let v = parse_usize(lineno, v_tok, "vertex id")?;
        edges.push((u, v));
    }
    Graph::new(n, &edges)
}

/// Parses a graph in the canonical edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let g = parse_section(&mut lines, false)?;
    if let Some((lineno, line)) = lines.next_significant() {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("unexpected trailing content {line:?}"),
        });
    }
    Ok(g)
}

/// Parses a product specification: section G, a `%` line, section H.
pub fn parse_product_spec(text: &str) -> Result<(Graph, Graph)> {
    let mut lines = Lines::new(text);
    let g = parse_section(&mut lines, true)?;
    match lines.next_significant() {
        Some((_, "%")) => {}
        Some((lineno, line)) => {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected \"%\" separator, found {line:?}"),
            })
        }
        None => {
            return Err(Error::Parse { line: 0, msg: "missing \"%\" separator and second section".into() })
        }
    }
    let h = parse_section(&mut lines, false)?;
    if let Some((lineno, line)) = lines.next_significant() {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("unexpected trailing content {line:?}"),
        });
    }
    Ok((g, h))
}

/// Renders a graph in the canonical edge-list format.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
