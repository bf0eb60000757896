//! The graph6 format: a size prefix, then the upper triangle of the
//! adjacency matrix column by column, six bits per byte offset by 63.

use crate::error::CorpusError;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn bad(offset: usize, message: impl Into<String>) -> CorpusError {
    CorpusError::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Parses one graph. Surrounding whitespace and the optional `>>graph6<<`
/// header are accepted; padding bits must be zero.
pub fn parse_graph6(text: &str) -> Result<Graph, CorpusError> {
    let trimmed = text.trim();
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let six = |i: usize| -> Result<u64, CorpusError> {
        body.get(i)
            .map(|&b| (b - 63) as u64)
            .ok_or_else(|| bad(base + i, "truncated size prefix"))
    };
    let (n, mut pos) = if body.is_empty() {
        return Err(bad(base, "empty input"));
    } else if body[0] != 126 {
        (body[0] as u64 - 63, 1)
    } else if body.get(1) != Some(&126) {
        ((six(1)? << 12) | (six(2)? << 6) | six(3)?, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | six(i)?;
        }
        (n, 8)
    };
    let n = usize::try_from(n).map_err(|_| bad(base, "vertex count too large"))?;
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or_else(|| bad(base, "vertex count too large"))?;
    let need = bits.div_ceil(6);
    if body.len() - pos < need {
        return Err(bad(base + body.len(), format!("truncated body: need {need} bytes")));
    }
    if body.len() - pos > need {
        return Err(bad(base + pos + need, "trailing bytes after body"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += k / 6;
    if k % 6 != 0 && (body[pos] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(bad(base + pos, "nonzero padding bits"));
    }
    Ok(Graph::from_edges(n, edges).expect("a matrix describes a simple graph"))
}

/// Parses every non-empty line independently, with 1-based line numbers.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph, CorpusError>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l)))
        .collect()
}

/// Encodes without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n as u64 >> shift) & 63) as u8);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    for &(i, j) in g.edges() {
        let k = j * (j - 1) / 2 + i;
        body[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(body.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_codes() {
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(parse_graph6(">>graph6<<DQc").unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(parse_graph6("D Q"), Err(CorpusError::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("DQ"), Err(CorpusError::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("DQcc"), Err(CorpusError::Graph6 { offset: 3, .. })));
        assert!(parse_graph6("").is_err());
        // Padding bit set in the last byte of a 3-vertex graph.
        assert!(parse_graph6("Bw").is_ok());
        assert!(parse_graph6("Bx").is_err());
    }

    #[test]
    fn large_prefix_round_trip() {
        let g = crate::corpus::catalog::cycle(100);
        let s = write_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
