//! Structural tests that drive the case dispatch of the coloring engine.

mod iso;
mod triangles;

pub use iso::{canonical_form, iso_small, CanonicalForm, ISO_LIMIT};
pub use triangles::{
    contract_triangles, min_induced_even_cycle, triangle_partition, ContractedGraph, EvenCycle,
};

use std::fmt;

use crate::corpus::catalog;
use crate::error::RecognitionError;
use crate::graph::{Graph, VertexId};

/// An induced `K_{1,3}`: `center` adjacent to three pairwise non-adjacent
/// `leaves` (ascending).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Claw {
    pub center: VertexId,
    pub leaves: [VertexId; 3],
}

impl fmt::Display for Claw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.leaves;
        write!(f, "center {} with leaves {a}, {b}, {c}", self.center)
    }
}

/// The least claw in the order (center, leaves lexicographic), if any.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        if nb.len() < 3 {
            continue;
        }
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]) {
                        return Some(Claw {
                            center: v,
                            leaves: [nb[i], nb[j], nb[k]],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// Articulation points, ascending. Iterative DFS with lowpoints.
pub fn cut_vertices(g: &Graph) -> Result<Vec<VertexId>, RecognitionError> {
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }
    let n = g.n();
    if n <= 2 {
        return Ok(Vec::new());
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    // Frame: (vertex, parent edge, next neighbor index).
    let mut stack: Vec<(VertexId, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    let mut time = 1;
    let mut root_children = 0;
    while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
        if *idx < g.degree(v) {
            let w = g.neighbors(v)[*idx];
            let e = g.incident(v)[*idx];
            *idx += 1;
            if e == pe {
                continue;
            }
            if disc[w] == UNSEEN {
                disc[w] = time;
                low[w] = time;
                time += 1;
                stack.push((w, e, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p == 0 {
                    root_children += 1;
                } else if low[v] >= disc[p] {
                    is_cut[p] = true;
                }
            }
        }
    }
    is_cut[0] = root_children > 1;
    Ok((0..n).filter(|&v| is_cut[v]).collect())
}

/// A 4-cycle `cycle[0] cycle[1] cycle[2] cycle[3]`. When `chorded`, the
/// chord is `cycle[0] cycle[2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct C4 {
    pub cycle: [VertexId; 4],
    pub chorded: bool,
}

/// Some 4-cycle, chorded ones first. A chorded witness is the least edge
/// `xy` with two common neighbors `a < b`, reported as `[x, a, y, b]`. An
/// induced witness `[a, b, c, d]` has the least possible `a`, then least
/// `b < d`, then least `c`.
pub fn find_c4(g: &Graph) -> Option<C4> {
    for &(x, y) in g.edges() {
        let mut common = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&z| g.has_edge(y, z));
        if let (Some(a), Some(b)) = (common.next(), common.next()) {
            return Some(C4 {
                cycle: [x, a, y, b],
                chorded: true,
            });
        }
    }
    for a in 0..g.n() {
        let nb = g.neighbors(a);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (b, d) = (nb[i], nb[j]);
                if g.has_edge(b, d) {
                    continue;
                }
                let c = g
                    .neighbors(b)
                    .iter()
                    .copied()
                    .find(|&c| c != a && g.has_edge(d, c) && !g.has_edge(a, c));
                if let Some(c) = c {
                    return Some(C4 {
                        cycle: [a, b, c, d],
                        chorded: false,
                    });
                }
            }
        }
    }
    None
}

/// Case of the coloring proof a connected graph falls into. Variants are
/// tested in declaration order; the first match wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// No edges: a single vertex.
    EdgeFree,
    NotClawFree(Claw),
    NotSubcubic { vertex: VertexId, degree: usize },
    Prism3,
    K4,
    K4Delta,
    HasDegree1 { v: VertexId },
    HasDegree2 { v: VertexId },
    CubicCutVertex { v: VertexId },
    ChordedC4(C4),
    InducedC4(C4),
    TriangleCovered(EvenCycle),
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::EdgeFree => "EdgeFree",
            CaseTag::NotClawFree(_) => "NotClawFree",
            CaseTag::NotSubcubic { .. } => "NotSubcubic",
            CaseTag::Prism3 => "Prism3",
            CaseTag::K4 => "K4",
            CaseTag::K4Delta => "K4Delta",
            CaseTag::HasDegree1 { .. } => "HasDegree1",
            CaseTag::HasDegree2 { .. } => "HasDegree2",
            CaseTag::CubicCutVertex { .. } => "CubicCutVertex",
            CaseTag::ChordedC4(_) => "ChordedC4",
            CaseTag::InducedC4(_) => "InducedC4",
            CaseTag::TriangleCovered(_) => "TriangleCovered",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::NotClawFree(c) => write!(f, "NotClawFree({c})"),
            CaseTag::NotSubcubic { vertex, degree } => {
                write!(f, "NotSubcubic(vertex {vertex} has degree {degree})")
            }
            CaseTag::HasDegree1 { v } | CaseTag::HasDegree2 { v } | CaseTag::CubicCutVertex { v } => {
                write!(f, "{}(v{v})", self.name())
            }
            CaseTag::ChordedC4(c) | CaseTag::InducedC4(c) => {
                write!(f, "{}({:?})", self.name(), c.cycle)
            }
            CaseTag::TriangleCovered(c) => write!(f, "TriangleCovered(2p={})", c.v.len()),
            _ => f.write_str(self.name()),
        }
    }
}

/// Classifies a connected graph. Only structural preconditions that should
/// be impossible (a 2-connected cubic claw-free graph without 4-cycles that
/// is not covered by triangles) surface as errors.
pub fn classify(g: &Graph) -> Result<CaseTag, RecognitionError> {
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }
    if g.m() == 0 {
        return Ok(CaseTag::EdgeFree);
    }
    if let Some(c) = find_claw(g) {
        return Ok(CaseTag::NotClawFree(c));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Ok(CaseTag::NotSubcubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if g.n() == 6 && g.m() == 9 && iso_small(g, &catalog::prism3())? {
        return Ok(CaseTag::Prism3);
    }
    if g.n() == 4 && g.m() == 6 {
        return Ok(CaseTag::K4);
    }
    if g.n() == 12 && g.m() == 18 && iso_small(g, &catalog::k4_delta())? {
        return Ok(CaseTag::K4Delta);
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 1) {
        return Ok(CaseTag::HasDegree1 { v });
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 2) {
        return Ok(CaseTag::HasDegree2 { v });
    }
    if let Some(&v) = cut_vertices(g)?.first() {
        return Ok(CaseTag::CubicCutVertex { v });
    }
    if let Some(c) = find_c4(g) {
        return Ok(if c.chorded {
            CaseTag::ChordedC4(c)
        } else {
            CaseTag::InducedC4(c)
        });
    }
    Ok(CaseTag::TriangleCovered(min_induced_even_cycle(g)?))
}
