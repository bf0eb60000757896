use clawcolor::{strong_color, verify_strong, EngineError, Graph, StrongColoring};
use serde::Serialize;

use crate::input::read_graph;
use crate::{exit, Format, Io};

#[derive(Serialize)]
struct TraceEntry {
    component: usize,
    depth: usize,
    case: &'static str,
    detail: String,
    steps: usize,
    frame: Vec<(String, String)>,
}

#[derive(Serialize)]
struct ColorDoc {
    n: usize,
    edges: Vec<(usize, usize, u8)>,
    colors_used: usize,
    exceptional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<TraceEntry>>,
}

pub fn run(path: &str, format: Format, json: bool, trace: bool, io: &mut Io) -> Result<i32, String> {
    let g = read_graph(path, format, io)?;
    let sc = match strong_color(&g) {
        Ok(sc) => sc,
        Err(e @ (EngineError::NotClawFree(_) | EngineError::NotSubcubic { .. })) => {
            writeln!(io.err, "rejected: {e}").map_err(|e| e.to_string())?;
            return Ok(exit::REJECTED);
        }
        Err(e) => {
            writeln!(io.err, "internal error: {e}").map_err(|e| e.to_string())?;
            if let EngineError::InternalInvariantViolation { trace, .. } = &e {
                for t in trace {
                    writeln!(io.err, "  {t}").map_err(|e| e.to_string())?;
                }
            }
            return Ok(exit::INTERNAL);
        }
    };
    let bad = verify_strong(&g, &sc.coloring, true);
    if !bad.is_empty() {
        for v in &bad {
            writeln!(io.err, "internal error: {v}").map_err(|e| e.to_string())?;
        }
        return Ok(exit::INTERNAL);
    }
    print(&g, &sc, json, trace, io).map_err(|e| e.to_string())?;
    Ok(if sc.exceptional { exit::EXCEPTIONAL } else { exit::OK })
}

fn print(g: &Graph, sc: &StrongColoring, json: bool, trace: bool, io: &mut Io) -> std::io::Result<()> {
    let edges: Vec<(usize, usize, u8)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (u, v, sc.coloring.get(e).unwrap_or(0)))
        .collect();
    if json {
        let doc = ColorDoc {
            n: g.n(),
            edges,
            colors_used: sc.colors_used,
            exceptional: sc.exceptional,
            trace: trace.then(|| {
                sc.trace()
                    .map(|(i, r)| TraceEntry {
                        component: i,
                        depth: r.depth,
                        case: r.case,
                        detail: r.detail.clone(),
                        steps: r.steps,
                        frame: r.frame.iter().map(|(k, b)| (k.clone(), b.to_string())).collect(),
                    })
                    .collect()
            }),
        };
        serde_json::to_writer_pretty(&mut *io.out, &doc)?;
        writeln!(io.out)?;
        return Ok(());
    }
    for (u, v, c) in edges {
        writeln!(io.out, "{u} {v} {c}")?;
    }
    writeln!(io.err, "colors used: {}{}", sc.colors_used, if sc.exceptional { " (triangular prism)" } else { "" })?;
    if trace {
        for (i, r) in sc.trace() {
            writeln!(io.err, "[{i}] {r}")?;
        }
    }
    Ok(())
}
