//! Plain edge lists: one `u v` pair per line, `#` starts a comment, and an
//! optional `n <count>` line fixes the vertex count.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::CorpusError;
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph, CorpusError> {
    let err = |line: usize, message: String| CorpusError::Parse { line, message };
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<((usize, usize), usize)> = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(err(line_no, "expected `n <count>`".into()));
            }
            if declared.is_some() {
                return Err(err(line_no, "vertex count declared twice".into()));
            }
            let n = tokens[1]
                .parse()
                .map_err(|_| err(line_no, format!("bad vertex count `{}`", tokens[1])))?;
            declared = Some((n, line_no));
            continue;
        }
        if tokens.len() != 2 {
            return Err(err(line_no, format!("expected two vertex ids, got `{body}`")));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| err(line_no, format!("bad vertex id `{t}`")))
        };
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u == v {
            return Err(err(line_no, format!("loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(line_no, format!("duplicate edge {} {}", key.0, key.1)));
        }
        edges.push((key, line_no));
    }
    let max_id = edges.iter().map(|&((_, v), _)| v + 1).max().unwrap_or(0);
    let n = match declared {
        Some((n, _)) => {
            if let Some(&((_, v), line)) = edges.iter().find(|((_, v), _)| *v >= n) {
                return Err(err(line, format!("vertex {v} out of range for n = {n}")));
            }
            n
        }
        None => max_id,
    };
    Graph::from_edges(n, edges.into_iter().map(|(e, _)| e)).map_err(|e| err(0, e.to_string()))
}

/// Canonical text: the `n` header, then edges in id order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::with_capacity(8 * g.m() + 8);
    writeln!(s, "n {}", g.n()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
