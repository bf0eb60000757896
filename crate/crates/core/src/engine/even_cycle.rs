//! Extension along a minimum induced even cycle of a triangle-covered
//! cubic graph.
//!
//! Roles use 1-based names: cycle vertex `v_i` is `cyc.v[i - 1]`, triangle
//! apex `u_{2j}` is `cyc.u[j - 1]`, `e_i = v_{i-1} v_i` (with `e_1 = v_{2p}
//! v_1`), `f_i` joins `v_i` to its apex, `g_{2j} = u_{2j} w_{2j}` and
//! `h_{2j-1}, h_{2j}` are the other two edges at `w_{2j}`.

use crate::coloring::{ColorSet, PartialColoring};
use crate::error::EngineError;
use crate::graph::{EdgeId, Graph, Subgraph, VertexId};
use crate::partial::sdr_extend;
use crate::recognition::EvenCycle;

use super::work::{others, Work};
use super::{ensure, violation, Binding, Ctx, Frame};

struct Roles {
    /// `e[i]` is `e_i`; index 0 unused.
    e: Vec<EdgeId>,
    f: Vec<EdgeId>,
    g: [EdgeId; 3],
    h: [EdgeId; 4],
}

/// A graph with its vertex map and edge map into the parent.
type Lifted = (Graph, Vec<VertexId>, Vec<Option<EdgeId>>);

/// `G` minus the cycle and the first three apexes, plus the edge
/// `w_2 w_4`. Returns the graph, its vertex map, its edge map (`None` for
/// the added edge).
fn reduced(g: &Graph, cyc: &EvenCycle) -> Result<Lifted, EngineError> {
    let mut gone = vec![false; g.n()];
    for &x in cyc.v.iter().chain(&cyc.u[..3]) {
        gone[x] = true;
    }
    let keep: Vec<VertexId> = (0..g.n()).filter(|&x| !gone[x]).collect();
    let Subgraph {
        graph, vertex_map, edge_map,
    } = g.induced(&keep);
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &x) in vertex_map.iter().enumerate() {
        pos[x] = i;
    }
    let (a, b) = (pos[cyc.w[0]], pos[cyc.w[1]]);
    ensure!(a != usize::MAX && b != usize::MAX, "even cycle: w2 or w4 was deleted");
    let mut tagged: Vec<((VertexId, VertexId), Option<EdgeId>)> = graph
        .edges()
        .iter()
        .zip(&edge_map)
        .map(|(&uv, &e)| (uv, Some(e)))
        .collect();
    tagged.push(((a.min(b), a.max(b)), None));
    tagged.sort_unstable();
    let h = Graph::from_edges(graph.n(), tagged.iter().map(|t| t.0))
        .map_err(|e| violation(format!("even cycle: reduced graph: {e}")))?;
    Ok((h, vertex_map, tagged.into_iter().map(|t| t.1).collect()))
}

pub(crate) fn even_cycle(
    ctx: &mut Ctx,
    g: &Graph,
    fr: &Frame,
    cyc: &EvenCycle,
) -> Result<PartialColoring, EngineError> {
    let p = cyc.p();
    let n2 = 2 * p;
    ensure!(p >= 3 && cyc.v.len() == n2, "even cycle: malformed cycle of length {}", cyc.v.len());
    ensure!(cyc.w[..3].iter().all(|w| !cyc.u.contains(w) && !cyc.v.contains(w)), "even cycle: w-vertex on the cycle");
    ensure!(!g.has_edge(cyc.w[0], cyc.w[1]), "even cycle: w2 w4 is an edge");
    ensure!(cyc.w[0] != cyc.w[1], "even cycle: w2 = w4");
    let mut w = Work::blank(g, "even cycle");
    let vv = |i: usize| cyc.v[i - 1];
    let uu = |i: usize| cyc.u[(i - 1) / 2];
    let mut r = Roles {
        e: vec![0; n2 + 1],
        f: vec![0; n2 + 1],
        g: [0; 3],
        h: [0; 4],
    };
    for i in 1..=n2 {
        r.e[i] = w.edge(if i == 1 { vv(n2) } else { vv(i - 1) }, vv(i))?;
        r.f[i] = w.edge(vv(i), uu(i))?;
    }
    for j in 0..3 {
        r.g[j] = w.edge(cyc.u[j], cyc.w[j])?;
    }
    for j in 0..2 {
        let (a, b) = others(g, cyc.w[j], cyc.u[j])?;
        r.h[2 * j] = w.edge(cyc.w[j], a)?;
        r.h[2 * j + 1] = w.edge(cyc.w[j], b)?;
    }

    let rec = ctx.record(
        "TriangleCovered",
        format!("cycle of length {n2}"),
        cyc.v
            .iter()
            .enumerate()
            .map(|(i, &x)| (format!("v{}", i + 1), fr.v(x)))
            .chain([
                ("w2".into(), fr.v(cyc.w[0])),
                ("w4".into(), fr.v(cyc.w[1])),
                ("w6".into(), fr.v(cyc.w[2])),
            ])
            .collect(),
    );

    let (h, vmap, emap) = reduced(g, cyc)?;
    let mut phi_added = None;
    for sub in h.split_components() {
        if sub.graph.m() > 0 {
            ensure!(
                sub.graph.min_degree() < 3,
                "even cycle: a component of the reduced graph is cubic"
            );
        }
        let mut local = PartialColoring::new(sub.graph.m(), w.c.palette());
        let local_sub = Subgraph {
            vertex_map: sub.vertex_map.iter().map(|&x| vmap[x]).collect(),
            edge_map: (0..sub.graph.m()).collect(),
            graph: sub.graph.clone(),
        };
        ctx.color_sub(&local_sub, fr, &mut local)?;
        for (le, &he) in sub.edge_map.iter().enumerate() {
            let col = local.get(le).expect("recursive coloring is total");
            match emap[he] {
                Some(ge) => w.c.set(ge, col),
                None => phi_added = Some(col),
            }
        }
    }
    let alpha = phi_added.ok_or_else(|| violation("even cycle: added edge left uncolored"))?;
    let mut c: Vec<u8> = Vec::with_capacity(4);
    for &x in &r.h {
        c.push(w.colored(x)?);
    }
    let distinct: ColorSet = c.iter().copied().chain([alpha]).collect();
    ensure!(distinct.len() == 5, "even cycle: alpha and h-colors are not distinct");

    let beta = w
        .avail(r.g[2])
        .difference(ColorSet::single(alpha))
        .min()
        .ok_or_else(|| violation("even cycle: no color for g6"))?;
    if beta == c[2] {
        r.h.swap(2, 3);
        c.swap(2, 3);
    }
    let [c1, c2, c3, c4] = [c[0], c[1], c[2], c[3]];
    w.assign(r.g[0], alpha)?;
    w.assign(r.g[1], alpha)?;
    w.assign(r.e[6], alpha)?;
    w.assign(r.g[2], beta)?;
    w.assign(r.e[5], c3)?;
    let gamma = w
        .avail(r.f[5])
        .difference(ColorSet::single(c4))
        .min()
        .ok_or_else(|| violation("even cycle: no color for f5"))?;
    w.assign(r.f[5], gamma)?;
    ensure!(w.avail(r.e[2]).len() == 6, "even cycle: |A(e2)| != 6");
    ensure!(w.avail(r.e[3]).len() == 5, "even cycle: |A(e3)| != 5");
    ensure!(w.avail(r.e[4]).len() == 4, "even cycle: |A(e4)| != 4");
    ensure!(w.avail(r.f[4]).len() == 3, "even cycle: |A(f4)| != 3");

    // Lists after seeding, before the chain.
    let psi = |w: &Work, e: EdgeId| w.avail(e);
    let (pf1, pf2, pf3, pf4, pe4) = (
        psi(&w, r.f[1]),
        psi(&w, r.f[2]),
        psi(&w, r.f[3]),
        psi(&w, r.f[4]),
        psi(&w, r.e[4]),
    );
    let no: ColorSet = [alpha, c1, c2].into_iter().collect();
    let full = ColorSet::palette(w.c.palette());
    ensure!(pf1 == full.difference(no) && pf2 == pf1, "even cycle: A(f1), A(f2) are not [1,7] minus alpha, c1, c2");
    ensure!(pe4 == pf4.union(ColorSet::single(c4)), "even cycle: A(e4) != A(f4) + c4");
    ensure!(pf3 == pf4.union(ColorSet::single(gamma)), "even cycle: A(f3) != A(f4) + gamma");
    ensure!(!pf4.contains(c4) && !pf4.contains(gamma), "even cycle: A(f4) contains c4 or gamma");

    let mut chain = vec![r.f[6]];
    for i in 7..=n2 {
        chain.push(r.e[i]);
        chain.push(r.f[i]);
    }
    chain.extend([r.e[1], r.f[1], r.e[2], r.f[2], r.e[3], r.f[3], r.f[4]]);
    w.greedy(&chain)?;
    w.expect_uncolored(&[r.e[4]])?;

    let before = w.c.clone();
    let detail = match close(&mut w, &r, [pf2, pf4], [c4, gamma]) {
        Ok(d) => d,
        Err(err) => {
            w.c = before;
            repair(&mut w, &r).ok_or(err)?
        }
    };
    ctx.trace[rec].detail.push_str(&format!(", {detail}"));
    ctx.trace[rec].frame.extend([
        ("alpha".into(), Binding::Color(alpha)),
        ("beta".into(), Binding::Color(beta)),
        ("gamma".into(), Binding::Color(gamma)),
    ]);
    Ok(w.c)
}

/// Recolors a window of edges next to `e_4` from scratch when the closing
/// recolorings do not apply. Windows grow from 4 to 8 edges.
fn repair(w: &mut Work, r: &Roles) -> Option<&'static str> {
    let (e, f) = (&r.e, &r.f);
    let windows: [(&[EdgeId], &'static str); 3] = [
        (&[e[3], f[3], f[4], e[4]], "local repair of 4 edges"),
        (&[e[2], f[2], e[3], f[3], f[4], e[4]], "local repair of 6 edges"),
        (&[e[1], f[1], e[2], f[2], e[3], f[3], f[4], e[4]], "local repair of 8 edges"),
    ];
    for (window, name) in windows {
        let mut trial = w.c.clone();
        for &x in window {
            trial.unset(x);
        }
        if let Some(c) = sdr_extend(w.g, &trial, window) {
            w.c = c;
            return Some(name);
        }
    }
    None
}

/// Colors `e_4` once everything else is colored, recoloring near the cycle
/// where `e_4` has no color left.
fn close(
    w: &mut Work,
    r: &Roles,
    [pf2, pf4]: [ColorSet; 2],
    [c4, gamma]: [u8; 2],
) -> Result<&'static str, EngineError> {
    let (e, f) = (&r.e, &r.f);
    if !w.avail(e[4]).is_empty() {
        w.greedy(&[e[4]])?;
        return Ok("closed directly");
    }
    let a2 = w.colored(e[2])?;
    let b2 = w.colored(f[2])?;
    let a3 = w.colored(e[3])?;
    let near: ColorSet = [a2, b2, a3].into_iter().collect();
    if !near.contains(gamma) {
        if w.colored(f[3])? != gamma {
            w.recolor(f[3], gamma)?;
            if !w.avail(e[4]).is_empty() {
                w.greedy(&[e[4]])?;
                return Ok("moved gamma onto f3, closed directly");
            }
        }
        let b3 = gamma;
        let b4 = w.colored(f[4])?;
        let taken: ColorSet = [a3, b3, b4].into_iter().collect();
        let star = pf4
            .difference(taken)
            .min()
            .ok_or_else(|| violation("even cycle: no replacement for f4"))?;
        w.recolor(f[4], star)?;
        w.assign(e[4], b4)?;
        return Ok("moved gamma onto f3");
    }
    let b3 = w.colored(f[3])?;
    let b4 = w.colored(f[4])?;
    ensure!(b3 != gamma, "even cycle: f3 has gamma while gamma is near e4");
    ensure!(pf4.contains(b3) && pf4.contains(b4), "even cycle: f3 or f4 outside A(f4)");
    if !pf4.contains(a3) {
        ensure!(a3 == c4 || a3 == gamma, "even cycle: e3 color outside A(e3)");
        let star = pf4.difference([b3, b4].into_iter().collect());
        ensure!(star.len() == 1, "even cycle: A(f4) minus f3, f4 colors is not a single color");
        let star = star.min().unwrap();
        if !near.contains(c4) {
            w.assign(e[4], c4)?;
            return Ok("e3 outside A(f4), e4 takes c4");
        }
        if !near.contains(star) {
            w.assign(e[4], star)?;
            return Ok("e3 outside A(f4), e4 takes the spare color");
        }
        w.recolor(f[4], star)?;
        w.assign(e[4], b4)?;
        return Ok("e3 outside A(f4), f4 takes the spare color");
    }
    let pair: ColorSet = [a2, b2].into_iter().collect();
    let want: ColorSet = [c4, gamma].into_iter().collect();
    ensure!(pair == want, "even cycle: e2, f2 are not colored c4 and gamma");
    w.erase(f[3])?;
    w.erase(f[4])?;
    if pf2.contains(a2) {
        let b1 = w.erase(f[1])?;
        w.erase(e[2])?;
        w.assign(f[1], a2)?;
        w.assign(e[2], b1)?;
        if a2 == c4 {
            w.assign(e[4], c4)?;
            w.greedy(&[f[3], f[4]])?;
        } else {
            w.assign(f[3], gamma)?;
            w.greedy(&[e[4], f[4]])?;
        }
        Ok("swapped f1 and e2")
    } else {
        let a1 = w.colored(e[1])?;
        let b1 = w.colored(f[1])?;
        let taken: ColorSet = [a1, b1, b2].into_iter().collect();
        // f2 also sees e3, so its color is excluded along with a1, b1, b2.
        let star = pf2
            .difference(taken)
            .intersection(w.avail(f[2]))
            .min()
            .ok_or_else(|| violation("even cycle: no replacement for f2"))?;
        w.recolor(f[2], star)?;
        if a2 == c4 {
            w.assign(f[3], gamma)?;
            w.greedy(&[e[4], f[4]])?;
        } else {
            w.recolor(e[3], c4)?;
            w.sdr(&[e[4], f[3], f[4]])?;
        }
        Ok("recolored f2")
    }
}
