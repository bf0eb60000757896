//! Extensions around a vertex of degree 1 or 2.

use crate::coloring::{ColorSet, PartialColoring};
use crate::error::EngineError;
use crate::graph::{EdgeId, Graph, VertexId};

use super::work::{others, Work};
use super::{ensure, small_solve, violation, Binding, Ctx, Frame};

pub(crate) fn degree1(
    ctx: &mut Ctx,
    g: &Graph,
    fr: &Frame,
    v0: VertexId,
) -> Result<PartialColoring, EngineError> {
    ensure!(g.degree(v0) == 1, "degree1: vertex {v0} has degree {}", g.degree(v0));
    let mut w = Work::seeded(g, &[v0], "degree1")?;
    let e0 = g.incident(v0)[0];
    w.expect_uncolored(&[e0])?;
    ensure!(w.avail(e0).len() >= 2, "degree1: pendant edge sees more than 5 colors");
    w.greedy(&[e0])?;
    ctx.record("HasDegree1", "", vec![("v0".into(), fr.v(v0))]);
    Ok(w.c)
}

/// Greedy from `{v0}` and distinct representatives for the two edges at
/// `v0`.
fn simple(ctx: &mut Ctx, g: &Graph, fr: &Frame, v0: VertexId, why: &str) -> Result<PartialColoring, EngineError> {
    let mut w = Work::seeded(g, &[v0], "degree2")?;
    let at: Vec<EdgeId> = g.incident(v0).to_vec();
    w.expect_uncolored(&at)?;
    w.sdr(&at)?;
    ctx.record("HasDegree2", format!("direct ({why})"), vec![("v0".into(), fr.v(v0))]);
    Ok(w.c)
}

pub(crate) fn degree2(
    ctx: &mut Ctx,
    g: &Graph,
    fr: &Frame,
    v0: VertexId,
) -> Result<PartialColoring, EngineError> {
    ensure!(g.degree(v0) == 2, "degree2: vertex {v0} has degree {}", g.degree(v0));
    let (v1, v2) = (g.neighbors(v0)[0], g.neighbors(v0)[1]);
    if g.has_edge(v1, v2) {
        return simple(ctx, g, fr, v0, "neighbors adjacent");
    }
    if g.degree(v1) < 3 || g.degree(v2) < 3 {
        return simple(ctx, g, fr, v0, "neighbor of degree below 3");
    }
    let (u1, u1p) = others(g, v1, v0)?;
    let (u2, u2p) = others(g, v2, v0)?;
    ensure!(g.has_edge(u1, u1p) && g.has_edge(u2, u2p), "degree2: claw at a neighbor of {v0}");
    if (u1, u1p) == (u2, u2p) {
        ctx.record("HasDegree2", "two triangles on one edge; exact solver", vec![("v0".into(), fr.v(v0))]);
        return small_solve(g, ctx.cfg.fallback_limit);
    }
    ensure!(
        u1 != u2 && u1 != u2p && u1p != u2 && u1p != u2p,
        "degree2: triangles at {v1} and {v2} share exactly one vertex"
    );
    for x in [u1, u1p, u2, u2p] {
        if g.degree(x) == 2 {
            let (a, b) = (g.neighbors(x)[0], g.neighbors(x)[1]);
            ensure!(g.has_edge(a, b), "degree2: degree-2 vertex {x} off its triangle");
            return simple(ctx, g, fr, x, "another degree-2 vertex with adjacent neighbors");
        }
    }
    let cross: Vec<(VertexId, VertexId)> = [(u1, u2), (u1, u2p), (u1p, u2), (u1p, u2p)]
        .into_iter()
        .filter(|&(a, b)| g.has_edge(a, b))
        .collect();
    match cross.len() {
        0 => case_apart(ctx, g, fr, v0, [v1, v2], [(u1, u1p), (u2, u2p)]),
        1 => {
            let (a, b) = cross[0];
            let ap = if a == u1 { u1p } else { u1 };
            let bp = if b == u2 { u2p } else { u2 };
            case_linked(ctx, g, fr, v0, v1, v2, (a, ap), (b, bp))
        }
        2 => {
            ctx.record("HasDegree2", "two cross edges; exact solver", vec![("v0".into(), fr.v(v0))]);
            small_solve(g, ctx.cfg.fallback_limit)
        }
        k => Err(violation(format!("degree2: {k} cross edges between subcubic triangles"))),
    }
}

/// The triangles at `v1` and `v2` are joined by exactly the edge `u1 u2`.
#[allow(clippy::too_many_arguments)]
fn case_linked(
    ctx: &mut Ctx,
    g: &Graph,
    fr: &Frame,
    v0: VertexId,
    v1: VertexId,
    v2: VertexId,
    (u1, u1p): (VertexId, VertexId),
    (u2, u2p): (VertexId, VertexId),
) -> Result<PartialColoring, EngineError> {
    let common = g
        .neighbors(u1p)
        .iter()
        .any(|&x| g.neighbors(u2p).contains(&x));
    if common {
        ctx.record("HasDegree2", "linked triangles, outer vertices share a neighbor; exact solver", vec![("v0".into(), fr.v(v0))]);
        return small_solve(g, ctx.cfg.fallback_limit);
    }
    let mut w = Work::seeded(g, &[v0, v1, v2, u1, u2], "degree2/linked")?;
    let e1 = w.edge(v1, u1)?;
    let e2 = w.edge(v0, v1)?;
    let e3 = w.edge(u1, u2)?;
    let e4 = w.edge(v2, u2)?;
    let e5 = w.edge(v0, v2)?;
    let f1 = w.edge(v1, u1p)?;
    let f2 = w.edge(u1, u1p)?;
    let f3 = w.edge(v2, u2p)?;
    let f4 = w.edge(u2, u2p)?;
    w.expect_uncolored(&[e1, e2, e3, e4, e5, f1, f2, f3, f4])?;
    ensure!(w.avail(e3).len() >= 5, "degree2/linked: |A(u1u2)| < 5");
    for e in [e1, e2, e4, e5] {
        ensure!(w.avail(e).len() == 6, "degree2/linked: an edge near v0 lacks 6 colors");
    }
    for f in [f1, f2, f3, f4] {
        ensure!(w.avail(f).len() >= 4, "degree2/linked: an outer edge lacks 4 colors");
    }
    let pick = |w: &Work, a: EdgeId, b: EdgeId| w.avail(a).intersection(w.avail(b)).min();
    let alpha = pick(&w, f1, f3).ok_or_else(|| violation("degree2/linked: A(f1), A(f3) disjoint"))?;
    w.assign(f1, alpha)?;
    w.assign(f3, alpha)?;
    let beta = pick(&w, e5, f2).ok_or_else(|| violation("degree2/linked: A(e5), A(f2) disjoint"))?;
    w.assign(e5, beta)?;
    w.assign(f2, beta)?;
    let detail = if let Some(gamma) = pick(&w, e2, f4) {
        w.assign(e2, gamma)?;
        w.assign(f4, gamma)?;
        w.sdr(&[e3, e4, e1])?;
        "linked triangles, shared color on e2 and f4"
    } else {
        w.greedy(&[f4, e3, e4, e1, e2])?;
        "linked triangles, greedy close"
    };
    ctx.record(
        "HasDegree2",
        detail,
        vec![
            ("v0".into(), fr.v(v0)),
            ("v1".into(), fr.v(v1)),
            ("v2".into(), fr.v(v2)),
            ("u1".into(), fr.v(u1)),
            ("u2".into(), fr.v(u2)),
            ("alpha".into(), Binding::Color(alpha)),
            ("beta".into(), Binding::Color(beta)),
        ],
    );
    Ok(w.c)
}

/// One side of the separated configuration: `e` joins `v0` to the side's
/// triangle, `f` are the triangle edges at the near vertex and `g` is the
/// far triangle edge.
#[derive(Clone, Copy)]
struct Side {
    e: EdgeId,
    f: [EdgeId; 2],
    g: EdgeId,
}

/// Largest number of subcase transitions before the loop must have ended.
const STEP_CAP: usize = 6;

fn case_apart(
    ctx: &mut Ctx,
    g: &Graph,
    fr: &Frame,
    v0: VertexId,
    [v1, v2]: [VertexId; 2],
    [(u1, u1p), (u2, u2p)]: [(VertexId, VertexId); 2],
) -> Result<PartialColoring, EngineError> {
    let mut w = Work::seeded(g, &[v0, v1, v2], "degree2/apart")?;
    let mut s1 = Side {
        e: w.edge(v0, v1)?,
        f: [w.edge(v1, u1)?, w.edge(v1, u1p)?],
        g: w.edge(u1, u1p)?,
    };
    let mut s2 = Side {
        e: w.edge(v0, v2)?,
        f: [w.edge(v2, u2)?, w.edge(v2, u2p)?],
        g: w.edge(u2, u2p)?,
    };
    w.expect_uncolored(&[s1.e, s2.e, s1.f[0], s1.f[1], s2.f[0], s2.f[1]])?;
    let mut path: Vec<&'static str> = Vec::new();
    let mut steps = 0;
    loop {
        steps += 1;
        ensure!(steps <= STEP_CAP, "degree2/apart: subcase loop did not terminate");
        for s in [&s1, &s2] {
            ensure!(w.avail(s.e).len() == 4, "degree2/apart: |A(e)| != 4");
            for f in s.f {
                ensure!(w.avail(f).len() >= 2, "degree2/apart: |A(f)| < 2");
                ensure!(w.avail(f).is_subset(w.avail(s.e)), "degree2/apart: A(f) not inside A(e)");
            }
        }
        let common = w.avail(s1.e).intersection(w.avail(s2.e));
        match common.len() {
            1 => {
                path.push("one common color");
                w.greedy(&[s1.f[0], s1.f[1], s2.f[0], s2.f[1], s1.e, s2.e])?;
                break;
            }
            2 => {
                path.push(two_common(&mut w, &mut s1, &mut s2)?);
                break;
            }
            3 => match three_common(&mut w, &mut s1, &mut s2)? {
                Some(done) => {
                    path.push(done);
                    break;
                }
                None => path.push("three common, recolor far edge"),
            },
            4 => match four_common(&mut w, &mut s1, &mut s2)? {
                Some(done) => {
                    path.push(done);
                    break;
                }
                None => path.push("four common, recolor far edge"),
            },
            k => return Err(violation(format!("degree2/apart: {k} common colors"))),
        }
    }
    let i = ctx.record(
        "HasDegree2",
        path.join(" -> "),
        vec![
            ("v0".into(), fr.v(v0)),
            ("v1".into(), fr.v(v1)),
            ("v2".into(), fr.v(v2)),
        ],
    );
    ctx.trace[i].steps = steps;
    Ok(w.c)
}

fn list_union(w: &Work, s: &Side) -> ColorSet {
    w.avail(s.f[0]).union(w.avail(s.f[1]))
}

fn two_common(w: &mut Work, s1: &mut Side, s2: &mut Side) -> Result<&'static str, EngineError> {
    let common = w.avail(s1.e).intersection(w.avail(s2.e));
    let p = list_union(w, s1);
    let q = list_union(w, s2);
    if let Some(a) = common.intersection(p).intersection(q).min() {
        let i = (0..2).find(|&i| w.avail(s1.f[i]).contains(a)).unwrap();
        let j = (0..2).find(|&j| w.avail(s2.f[j]).contains(a)).unwrap();
        w.assign(s1.f[i], a)?;
        w.assign(s2.f[j], a)?;
        w.greedy(&[s1.f[1 - i], s2.f[1 - j], s1.e, s2.e])?;
        return Ok("two common, shared by both sides");
    }
    if common.intersection(p).is_empty() && common.intersection(q).is_empty() {
        w.greedy(&[s1.f[0], s1.f[1], s2.f[0], s2.f[1], s1.e, s2.e])?;
        return Ok("two common, avoided by both sides");
    }
    if common.intersection(p).is_empty() {
        std::mem::swap(s1, s2);
    }
    let p = list_union(w, s1);
    let a1 = common.intersection(p).min().unwrap();
    let a2 = common.difference(ColorSet::single(a1)).min().unwrap();
    if !w.avail(s1.f[0]).contains(a1) {
        s1.f.swap(0, 1);
    }
    let [f1, f2] = s1.f;
    let pair: ColorSet = [a1, a2].into_iter().collect();
    if p != pair {
        if w.avail(f2).contains(a1) {
            let b = p.difference(pair).min().unwrap();
            if w.avail(f2).contains(b) {
                w.assign(f1, a1)?;
                w.assign(f2, b)?;
            } else {
                w.assign(f1, b)?;
                w.assign(f2, a1)?;
            }
        } else {
            let b = w
                .avail(f2)
                .difference(pair)
                .min()
                .ok_or_else(|| violation("degree2/apart: A(f2) inside the common pair"))?;
            w.assign(f1, a1)?;
            w.assign(f2, b)?;
        }
        w.greedy(&[s2.f[0], s2.f[1], s2.e, s1.e])?;
        return Ok("two common, one side takes a common color");
    }
    let rest = w.avail(s2.e).difference(pair);
    for f in s2.f {
        ensure!(w.avail(f) == rest, "degree2/apart: far lists are not A(e2) minus the pair");
    }
    let old = w.colored(s1.g)?;
    w.recolor(s1.g, a1)?;
    w.assign(f1, old)?;
    w.assign(f2, a2)?;
    let mut r = rest.iter();
    let (x, y) = (r.next().unwrap(), r.next().unwrap());
    w.assign(s2.f[0], x)?;
    w.assign(s2.f[1], y)?;
    w.assign(s2.e, a1)?;
    w.greedy(&[s1.e])?;
    Ok("two common, recolored far edge")
}

/// `None` when the far edge was recolored and the loop continues.
fn three_common(w: &mut Work, s1: &mut Side, s2: &mut Side) -> Result<Option<&'static str>, EngineError> {
    let common = w.avail(s1.e).intersection(w.avail(s2.e));
    let p = list_union(w, s1);
    let q = list_union(w, s2);
    if let Some(a) = p.intersection(q).min() {
        let i = (0..2).find(|&i| w.avail(s1.f[i]).contains(a)).unwrap();
        let j = (0..2).find(|&j| w.avail(s2.f[j]).contains(a)).unwrap();
        w.assign(s1.f[i], a)?;
        w.assign(s2.f[j], a)?;
        w.greedy(&[s1.f[1 - i], s2.f[1 - j]])?;
        w.sdr(&[s1.e, s2.e])?;
        return Ok(Some("three common, shared by both sides"));
    }
    if p.len() != 2 {
        ensure!(q.len() == 2, "degree2/apart: both far unions exceed 2 colors");
        std::mem::swap(s1, s2);
    }
    let p = list_union(w, s1);
    let q = list_union(w, s2);
    if !p.is_subset(common) && q.len() == 2 && q.is_subset(common) {
        std::mem::swap(s1, s2);
    }
    let p = list_union(w, s1);
    let a = p
        .intersection(common)
        .min()
        .ok_or_else(|| violation("degree2/apart: far list misses the common colors"))?;
    w.recolor(s1.g, a)?;
    Ok(None)
}

fn four_common(w: &mut Work, s1: &mut Side, s2: &mut Side) -> Result<Option<&'static str>, EngineError> {
    let common = w.avail(s1.e);
    let (c1, c2) = (w.erase(s1.g)?, w.erase(s2.g)?);
    let (l1, l2) = (w.avail(s1.g), w.avail(s2.g));
    if l1.len() == 1 && l2.len() == 1 {
        w.assign(s1.g, c1)?;
        w.assign(s2.g, c2)?;
        let lists = [s1.f[0], s1.f[1], s2.f[0], s2.f[1]].map(|f| w.avail(f));
        for x in lists[0].iter() {
            for y in lists[1].iter().filter(|&y| y != x) {
                let pair: ColorSet = [x, y].into_iter().collect();
                let fits = |a: ColorSet, b: ColorSet| -> Option<(u8, u8)> {
                    pair.iter()
                        .flat_map(|s| pair.iter().map(move |t| (s, t)))
                        .find(|&(s, t)| s != t && a.contains(s) && b.contains(t))
                };
                if let Some((s, t)) = fits(lists[2], lists[3]) {
                    w.assign(s1.f[0], x)?;
                    w.assign(s1.f[1], y)?;
                    w.assign(s2.f[0], s)?;
                    w.assign(s2.f[1], t)?;
                    w.sdr(&[s1.e, s2.e])?;
                    return Ok(Some("four common, both sides share a pair"));
                }
            }
        }
        return Err(violation("degree2/apart: no shared pair for the four near edges"));
    }
    if l1.len() < 2 {
        std::mem::swap(s1, s2);
    }
    let (l1, keep) = if l1.len() < 2 { (l2, c1) } else { (l1, c2) };
    let a = l1
        .intersection(common)
        .min()
        .ok_or_else(|| violation("degree2/apart: freed far list misses A(e1)"))?;
    w.assign(s2.g, keep)?;
    w.assign(s1.g, a)?;
    Ok(None)
}
