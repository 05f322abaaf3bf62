//! Text formats.
//!
//! Edge list: the first non-comment line holds `n m`, followed by exactly
//! `m` lines `u v` with `0 <= u, v < n` and `u != v`. Lines starting with
//! `#` and blank lines are ignored; duplicate edges are rejected.
//!
//! Coloring: `n` lines `vertexId colorId` with `colorId >= 0`, one line per
//! vertex. The same comment and blank-line rules apply.

use crate::colorize::VertexColoring;
use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_two(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse {
            line: lineno,
            msg: format!("expected two fields on a {what} line"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("expected a non-negative integer on a {what} line"),
        })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("trailing fields on a {what} line"),
        });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let Some((lineno, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing header line 'n m'".into(),
        });
    };
    let (n, m) = parse_two(header, lineno, "header")?;
    if n == 0 {
        return Err(Error::Parse {
            line: lineno,
            msg: "graph must have at least one vertex".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    let mut last_line = lineno;
    for (lineno, line) in lines {
        last_line = lineno;
        if edges.len() == m {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_two(line, lineno, "edge")?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("edge ({u}, {v}) out of range for n = {n}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate edge ({u}, {v})"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Canonical text form: header, then edges `u v` with `u < v` in
/// lexicographic order. Re-parsing reproduces the graph exactly.
pub fn edge_list_to_string(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_coloring(text: &str, n: usize) -> Result<VertexColoring> {
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for (lineno, line) in data_lines(text) {
        let (v, c) = parse_two(line, lineno, "coloring")?;
        if v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex {v} out of range for n = {n}"),
            });
        }
        if colors[v].is_some() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex {v} colored twice"),
            });
        }
        colors[v] = Some(c);
    }
    let mut out = Vec::with_capacity(n);
    for (v, c) in colors.into_iter().enumerate() {
        match c {
            Some(c) => out.push(c),
            None => {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("vertex {v} has no color"),
                })
            }
        }
    }
    Ok(VertexColoring::new(out))
}

pub fn coloring_to_string(coloring: &VertexColoring) -> String {
    let mut out = String::new();
    for (v, c) in coloring.colors().iter().enumerate() {
        out.push_str(&format!("{v} {c}\n"));
    }
    out
}
