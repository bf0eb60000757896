//! Extension across a cut vertex of a cubic graph.

use crate::coloring::{Color, ColorSet, PartialColoring, PALETTE};
use crate::error::EngineError;
use crate::graph::{Graph, VertexId};

use super::work::{third, Work};
use super::{ensure, permute_colors, swap_map, Binding, Ctx, Frame};

pub(crate) fn cut_vertex(
    ctx: &mut Ctx,
    g: &Graph,
    fr: &Frame,
    v0: VertexId,
) -> Result<PartialColoring, EngineError> {
    ensure!(g.degree(v0) == 3, "cut: vertex {v0} is not of degree 3");
    let nb = g.neighbors(v0);
    let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
    let adjacent: Vec<_> = pairs
        .iter()
        .filter(|&&(i, j, _)| g.has_edge(nb[i], nb[j]))
        .collect();
    ensure!(adjacent.len() == 1, "cut: neighborhood of {v0} has {} edges", adjacent.len());
    let &(i, j, k) = adjacent[0];
    let (v1, v2, u0) = (nb[i], nb[j], nb[k]);

    let keep: Vec<VertexId> = (0..g.n()).filter(|&x| x != v0).collect();
    let rest = g.induced(&keep);
    let parts = rest.graph.split_components();
    ensure!(parts.len() == 2, "cut: removing {v0} leaves {} components", parts.len());
    let holds = |p: &crate::graph::Subgraph, v: VertexId| {
        p.vertex_map.iter().any(|&x| rest.vertex_map[x] == v)
    };
    let (side1, side2) = if holds(&parts[0], u0) {
        (&parts[0], &parts[1])
    } else {
        (&parts[1], &parts[0])
    };
    ensure!(holds(side2, v1) && holds(side2, v2), "cut: {v1}{v2} not on the far side");

    let mut w = Work::blank(g, "cut");
    // Compose the component maps with the map of G - v0.
    let lift = |p: &crate::graph::Subgraph| crate::graph::Subgraph {
        graph: p.graph.clone(),
        vertex_map: p.vertex_map.iter().map(|&x| rest.vertex_map[x]).collect(),
        edge_map: p.edge_map.iter().map(|&e| rest.edge_map[e]).collect(),
    };
    let (side1, side2) = (lift(side1), lift(side2));
    let rec = ctx.record(
        "CubicCutVertex",
        format!("sides of {} and {} vertices", side1.graph.n(), side2.graph.n()),
        vec![
            ("v0".into(), fr.v(v0)),
            ("u0".into(), fr.v(u0)),
            ("v1".into(), fr.v(v1)),
            ("v2".into(), fr.v(v2)),
        ],
    );
    ctx.color_sub(&side1, fr, &mut w.c)?;
    ctx.color_sub(&side2, fr, &mut w.c)?;

    let e0 = w.edge(v0, u0)?;
    let e1 = w.edge(v0, v1)?;
    let e2 = w.edge(v0, v2)?;
    w.expect_uncolored(&[e0, e1, e2])?;
    let (x, y) = {
        let r: Vec<VertexId> = g.neighbors(u0).iter().copied().filter(|&z| z != v0).collect();
        ensure!(r.len() == 2, "cut: {u0} is not of degree 3");
        (r[0], r[1])
    };
    let f1 = w.edge(u0, x)?;
    let f2 = w.edge(u0, y)?;
    let f3 = w.edge(x, y)?;
    let f4 = w.edge(x, third(g, x, u0, y)?)?;
    let h1 = w.edge(v1, v2)?;
    let h2 = w.edge(v1, third(g, v1, v0, v2)?)?;
    let h3 = w.edge(v2, third(g, v2, v0, v1)?)?;
    let set = |w: &Work, es: [usize; 3]| -> Result<ColorSet, EngineError> {
        let mut s = ColorSet::EMPTY;
        for e in es {
            s.insert(w.colored(e)?);
        }
        Ok(s)
    };
    let fs = set(&w, [f1, f2, f3])?;
    let hs = set(&w, [h1, h2, h3])?;
    ensure!(fs.len() == 3 && hs.len() == 3, "cut: triangle colors are not distinct");

    // Sorted bijection taking the f-colors to the h-colors.
    let mut map: Vec<Color> = (0..=PALETTE).collect();
    for (a, b) in fs.iter().zip(hs.iter()) {
        map[a as usize] = b;
    }
    let full = ColorSet::palette(PALETTE);
    for (a, b) in full.difference(fs).iter().zip(full.difference(hs).iter()) {
        map[a as usize] = b;
    }
    w.c = permute_colors(&w.c, &side1.edge_map, &map);

    let (a0, a1, a2) = (w.avail(e0), w.avail(e1), w.avail(e2));
    ensure!(a0.len() == 2, "cut: |A(e0)| = {}", a0.len());
    ensure!(a1.len() >= 2 && a2.len() >= 2, "cut: short list on an edge at v0");
    if a0.union(a1).union(a2).len() < 3 {
        ensure!(a0 == a1 && a1 == a2, "cut: lists of size 2 with a union of 2 differ");
        let alpha1 = a0.min().unwrap();
        let alpha2 = a0.difference(ColorSet::single(alpha1)).min().unwrap();
        let beta = w.colored(f4)?;
        w.c = permute_colors(&w.c, &side1.edge_map, &swap_map(PALETTE, alpha1, beta));
        let expect: ColorSet = [alpha2, beta].into_iter().collect();
        ensure!(w.avail(e0) == expect, "cut: swap did not give A(e0) = {{alpha2, beta}}");
        ctx.trace[rec].detail.push_str(", swapped on the u0 side");
        ctx.trace[rec].frame.push(("beta".into(), Binding::Color(beta)));
    }
    w.sdr(&[e0, e1, e2])?;
    Ok(w.c)
}
