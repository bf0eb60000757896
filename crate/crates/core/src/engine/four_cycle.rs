//! Extensions around a 4-cycle, with or without a chord.

use crate::coloring::{Color, ColorSet, PartialColoring, PALETTE};
use crate::error::EngineError;
use crate::graph::{Graph, VertexId};
use crate::recognition::C4;

use super::work::{others, third, Work};
use super::{ensure, small_solve, violation, Binding, Ctx, Frame};

/// Cycle `v1 v2 v3 v4` with chord `v1 v3`.
pub(crate) fn chorded(ctx: &mut Ctx, g: &Graph, fr: &Frame, c4: C4) -> Result<PartialColoring, EngineError> {
    ensure!(c4.chorded, "chorded: witness has no chord");
    let [v1, v2, v3, v4] = c4.cycle;
    ensure!(g.has_edge(v1, v3), "chorded: {v1}{v3} is not an edge");
    ensure!(!g.has_edge(v2, v4), "chorded: both diagonals present");
    let u2 = third(g, v2, v1, v3)?;
    let u4 = third(g, v4, v1, v3)?;
    ensure!(u2 != u4 && !g.has_edge(u2, u4), "chorded: {u2} and {u4} are too close");
    let base = vec![
        ("v1".into(), fr.v(v1)),
        ("v2".into(), fr.v(v2)),
        ("v3".into(), fr.v(v3)),
        ("v4".into(), fr.v(v4)),
    ];
    if g.neighbors(u2).iter().any(|x| g.neighbors(u4).contains(x)) {
        ctx.record("ChordedC4", "outer vertices share a neighbor; exact solver", base);
        return small_solve(g, ctx.cfg.fallback_limit);
    }
    let mut w = Work::seeded(g, &[v1, v2, v3, v4], "chorded")?;
    let e = [
        w.edge(v1, v2)?,
        w.edge(v2, v3)?,
        w.edge(v3, v4)?,
        w.edge(v4, v1)?,
        w.edge(v1, v3)?,
    ];
    let f1 = w.edge(v2, u2)?;
    let f2 = w.edge(v4, u4)?;
    let all = [e[0], e[1], e[2], e[3], e[4], f1, f2];
    w.expect_uncolored(&all)?;
    for &x in &e[..4] {
        ensure!(w.avail(x).len() == 5, "chorded: a cycle edge lacks 5 colors");
    }
    ensure!(w.avail(e[4]).len() == 7, "chorded: the chord sees a color");
    ensure!(w.avail(f1).len() == 2 && w.avail(f2).len() == 2, "chorded: |A(f)| != 2");

    let union = |w: &Work| w.avail(e[0]).union(w.avail(e[2])).len();
    if union(&w) >= 6 {
        w.sdr(&all)?;
        ctx.record("ChordedC4", "opposite lists differ", base);
        return Ok(w.c);
    }
    let l = w.avail(e[0]);
    for &x in &e[1..4] {
        ensure!(w.avail(x) == l, "chorded: cycle lists differ though their union is 5");
    }
    // Rename colors so that the shared list is [1, 5].
    let mut map: Vec<Color> = vec![0; PALETTE as usize + 1];
    let mut inv: Vec<Color> = vec![0; PALETTE as usize + 1];
    let outside = ColorSet::palette(PALETTE).difference(l);
    for (i, c) in l.iter().chain(outside.iter()).enumerate() {
        map[c as usize] = i as Color + 1;
        inv[i + 1] = c;
    }
    w.permute_all(&map);
    let top: ColorSet = [6, 7].into_iter().collect();

    let (a, b) = others(g, u2, v2)?;
    let g1 = w.edge(u2, a)?;
    let g2 = w.edge(u2, b)?;
    let h1 = w.edge(a, b)?;
    let (c, d) = others(g, u4, v4)?;
    let pair = |w: &Work, x, y| -> Result<ColorSet, EngineError> {
        Ok([w.colored(x)?, w.colored(y)?].into_iter().collect())
    };
    ensure!(pair(&w, g1, g2)? == top, "chorded: g1, g2 are not colored 6 and 7");
    ensure!(
        pair(&w, w.edge(u4, c)?, w.edge(u4, d)?)? == top,
        "chorded: g3, g4 are not colored 6 and 7"
    );
    let (p1, p2) = (w.erase(g1)?, w.erase(g2)?);
    let detail;
    if let Some(x) = w.avail(g1).difference(top).min() {
        w.assign(g1, x)?;
        w.assign(g2, p2)?;
        detail = "recolored g1";
    } else if let Some(x) = w.avail(g2).difference(top).min() {
        w.assign(g2, x)?;
        w.assign(g1, p1)?;
        detail = "recolored g2";
    } else {
        let ph = w.colored(h1)?;
        w.recolor(h1, p1)?;
        w.assign(g1, ph)?;
        w.assign(g2, p2)?;
        detail = "exchanged colors of g1 and h1";
    }
    ensure!(union(&w) >= 6, "chorded: recoloring left the opposite lists equal");
    w.sdr(&all)?;
    w.permute_all(&inv);
    let mut frame = base;
    frame.push(("u2".into(), fr.v(u2)));
    frame.push(("u4".into(), fr.v(u4)));
    ctx.record("ChordedC4", detail, frame);
    Ok(w.c)
}

/// Induced cycle `v1 v2 v3 v4` where `v1, v2` share the neighbor `u1` and
/// `v3, v4` share `u2`.
pub(crate) fn induced(ctx: &mut Ctx, g: &Graph, fr: &Frame, c4: C4) -> Result<PartialColoring, EngineError> {
    ensure!(!c4.chorded, "induced: witness has a chord");
    let c = c4.cycle;
    let t: Vec<VertexId> = (0..4)
        .map(|i| third(g, c[i], c[(i + 1) % 4], c[(i + 3) % 4]))
        .collect::<Result<_, _>>()?;
    let [v1, v2, v3, v4] = if t[0] == t[1] {
        [c[0], c[1], c[2], c[3]]
    } else if t[0] == t[3] {
        [c[3], c[0], c[1], c[2]]
    } else {
        return Err(violation("induced: cycle vertex with a claw"));
    };
    let u1 = third(g, v1, v2, v4)?;
    let u2 = third(g, v3, v2, v4)?;
    ensure!(third(g, v2, v1, v3)? == u1, "induced: v2 misses u1");
    ensure!(third(g, v4, v1, v3)? == u2, "induced: v4 misses u2");
    ensure!(u1 != u2 && !g.has_edge(u1, u2), "induced: u1 and u2 are too close");

    let mut w = Work::seeded(g, &[v1, v2, v3, v4], "induced")?;
    let e1 = w.edge(v1, v2)?;
    let e2 = w.edge(v2, v3)?;
    let e3 = w.edge(v3, v4)?;
    let e4 = w.edge(v4, v1)?;
    let f1 = w.edge(v1, u1)?;
    let f2 = w.edge(v2, u1)?;
    let f3 = w.edge(v3, u2)?;
    let f4 = w.edge(v4, u2)?;
    w.expect_uncolored(&[e1, e2, e3, e4, f1, f2, f3, f4])?;
    ensure!(w.avail(e1).len() == 6 && w.avail(e3).len() == 6, "induced: |A(e1)| or |A(e3)| != 6");
    ensure!(w.avail(e2).len() >= 5 && w.avail(e4).len() >= 5, "induced: |A(e2)| or |A(e4)| < 5");
    for f in [f1, f2, f3, f4] {
        ensure!(w.avail(f).len() == 4, "induced: a pendant edge lacks 4 colors");
    }
    let alpha = w
        .avail(f1)
        .intersection(w.avail(f3))
        .min()
        .ok_or_else(|| violation("induced: A(f1), A(f3) disjoint"))?;
    w.assign(f1, alpha)?;
    w.assign(f3, alpha)?;
    ensure!(w.avail(f2).len() == 3 && w.avail(f4).len() == 3, "induced: |A(f2)| or |A(f4)| != 3");
    let detail = if let Some(beta) = w.avail(f2).intersection(w.avail(f4)).min() {
        w.assign(f2, beta)?;
        w.assign(f4, beta)?;
        w.greedy(&[e2, e4, e1, e3])?;
        "shared color on f2, f4"
    } else {
        w.sdr(&[f2, f4, e1, e2, e3, e4])?;
        "distinct representatives"
    };
    ctx.record(
        "InducedC4",
        detail,
        vec![
            ("v1".into(), fr.v(v1)),
            ("v2".into(), fr.v(v2)),
            ("v3".into(), fr.v(v3)),
            ("v4".into(), fr.v(v4)),
            ("u1".into(), fr.v(u1)),
            ("u2".into(), fr.v(u2)),
            ("alpha".into(), Binding::Color(alpha)),
        ],
    );
    Ok(w.c)
}
