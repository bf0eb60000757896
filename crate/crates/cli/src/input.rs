use clawcolor::corpus::{parse_edge_list, parse_graph6};
use clawcolor::Graph;

use crate::{Format, Io};

/// Reads a path, or standard input for `-`.
pub fn read_text(path: &str, io: &mut Io) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        io.stdin
            .read_to_string(&mut s)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

/// One graph in the given format. A graph6 input must hold exactly one
/// non-blank line.
pub fn read_graph(path: &str, format: Format, io: &mut Io) -> Result<Graph, String> {
    let text = read_text(path, io)?;
    match format {
        Format::Edgelist => parse_edge_list(&text).map_err(|e| format!("{path}: {e}")),
        Format::Graph6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines.next().ok_or_else(|| format!("{path}: no graph"))?;
            if lines.next().is_some() {
                return Err(format!("{path}: more than one graph; use `batch`"));
            }
            parse_graph6(first).map_err(|e| format!("{path}: {e}"))
        }
    }
}
