use clawcolor::coloring::MAX_PALETTE;
use clawcolor::{verify_strong, Color, Graph, PartialColoring, Violation};

use crate::input::{read_graph, read_text};
use crate::{exit, Format, Io};

pub fn run(graph: &str, coloring: &str, format: Format, io: &mut Io) -> Result<i32, String> {
    let g = read_graph(graph, format, io)?;
    let text = read_text(coloring, io)?;
    let c = parse_coloring(&g, &text).map_err(|e| format!("{coloring}: {e}"))?;
    let bad = verify_strong(&g, &c, true);
    let w = |io: &mut Io, s: String| writeln!(io.out, "{s}").map_err(|e| e.to_string());
    if bad.is_empty() {
        w(io, format!("ok: {} edges, {} colors", g.m(), c.colors_used()))?;
        return Ok(exit::OK);
    }
    let name = |e| {
        let (u, v) = g.edge(e);
        format!("{u}-{v}")
    };
    for v in &bad {
        let line = match *v {
            Violation::SameColorConflict { e, f, color } => {
                format!("conflict {} {} color {color}", name(e), name(f))
            }
            Violation::Uncolored { e } => format!("uncolored {}", name(e)),
            Violation::ColorOutOfPalette { e, color } => format!("bad-color {} color {color}", name(e)),
        };
        w(io, line)?;
    }
    writeln!(io.err, "{} violations", bad.len()).map_err(|e| e.to_string())?;
    Ok(exit::VIOLATIONS)
}

/// Lines of `edge color` (edge index) or `u v color`; `#` starts a comment.
pub fn parse_coloring(g: &Graph, text: &str) -> Result<PartialColoring, String> {
    let mut colors: Vec<Option<Color>> = vec![None; g.m()];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let nums: Vec<usize> = body
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| format!("line {line}: bad number `{t}`")))
            .collect::<Result<_, _>>()?;
        let (e, c) = match nums[..] {
            [e, c] if e < g.m() => (e, c),
            [e, _] => return Err(format!("line {line}: no edge {e}")),
            [u, v, c] => match g.edge_id(u, v) {
                Some(e) => (e, c),
                None => return Err(format!("line {line}: {u} {v} is not an edge")),
            },
            _ => return Err(format!("line {line}: expected `edge color` or `u v color`")),
        };
        let c = Color::try_from(c)
            .ok()
            .filter(|&c| c <= MAX_PALETTE)
            .ok_or_else(|| format!("line {line}: color {c} too large"))?;
        if colors[e].replace(c).is_some() {
            return Err(format!("line {line}: edge colored twice"));
        }
    }
    let palette = colors.iter().flatten().copied().max().unwrap_or(1).max(1);
    Ok(PartialColoring::from_colors(colors, palette))
}
