//! The recursive coloring driver. Each connected component is classified
//! and handed to the matching extension routine, which works on a checked
//! partial coloring: every assignment must be available at the moment it
//! is made, and every counting claim a routine relies on is tested.

mod cut;
mod degree;
mod even_cycle;
mod four_cycle;
mod work;

use std::fmt;

use crate::coloring::{verify_strong, Color, PartialColoring, PALETTE};
use crate::error::{EngineError, RecognitionError};
use crate::exact::{exact_chi_s, ChiOutcome, SolverConfig};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::recognition::{classify, find_claw, CaseTag, EvenCycle, C4};

/// Palette of the exceptional triangular prism.
pub const PRISM_PALETTE: Color = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// On an invariant violation in a component with at most
    /// `fallback_limit` edges, color it with the exact solver instead of
    /// failing.
    pub fallback_small: bool,
    pub fallback_limit: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            fallback_small: true,
            fallback_limit: 40,
        }
    }
}

impl EngineConfig {
    /// No fallback: every violation surfaces as an error.
    pub fn strict() -> Self {
        EngineConfig {
            fallback_small: false,
            ..Self::default()
        }
    }
}

/// A named role in an extension routine, in ids of the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Vertex(VertexId),
    Edge(VertexId, VertexId),
    Color(Color),
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binding::Vertex(v) => write!(f, "{v}"),
            Binding::Edge(u, v) => write!(f, "{u}-{v}"),
            Binding::Color(c) => write!(f, "#{c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    /// Recursion depth; the input component is depth 0.
    pub depth: usize,
    pub case: &'static str,
    pub detail: String,
    pub frame: Vec<(String, Binding)>,
    /// Iterations of the subcase loop in the degree-2 routine, else 0.
    pub steps: usize,
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", "  ".repeat(self.depth), self.case)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        if !self.frame.is_empty() {
            let parts: Vec<String> = self.frame.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Coloring of one connected component, in the component's own ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub coloring: PartialColoring,
    pub colors_used: usize,
    pub exceptional: bool,
    pub trace: Vec<TraceRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentColoring {
    /// Component vertex `i` is input vertex `vertices[i]`.
    pub vertices: Vec<VertexId>,
    /// Component edge `i` is input edge `edges[i]`.
    pub edges: Vec<EdgeId>,
    pub result: ColoringResult,
}

/// Coloring of a whole graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongColoring {
    pub coloring: PartialColoring,
    pub colors_used: usize,
    /// Some component is a triangular prism.
    pub exceptional: bool,
    pub components: Vec<ComponentColoring>,
}

impl StrongColoring {
    /// Trace records of all components, each tagged with its component.
    pub fn trace(&self) -> impl Iterator<Item = (usize, &TraceRecord)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.result.trace.iter().map(move |r| (i, r)))
    }
}

/// Recursion state shared by the routines.
pub(crate) struct Ctx<'a> {
    pub cfg: &'a EngineConfig,
    pub trace: Vec<TraceRecord>,
    pub depth: usize,
}

/// Maps from a working graph back to the input graph.
#[derive(Clone)]
pub(crate) struct Frame {
    pub vertex: Vec<VertexId>,
}

impl Frame {
    pub fn identity(n: usize) -> Frame {
        Frame {
            vertex: (0..n).collect(),
        }
    }

    pub fn sub(&self, map: &[VertexId]) -> Frame {
        Frame {
            vertex: map.iter().map(|&v| self.vertex[v]).collect(),
        }
    }

    pub fn v(&self, v: VertexId) -> Binding {
        Binding::Vertex(self.vertex[v])
    }
}

pub(crate) fn violation(message: impl Into<String>) -> EngineError {
    EngineError::InternalInvariantViolation {
        message: message.into(),
        trace: Vec::new(),
    }
}

/// Returns an invariant violation unless `cond` holds.
macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::engine::violation(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;

impl Ctx<'_> {
    pub fn record(
        &mut self,
        case: &'static str,
        detail: impl Into<String>,
        frame: Vec<(String, Binding)>,
    ) -> usize {
        self.trace.push(TraceRecord {
            depth: self.depth,
            case,
            detail: detail.into(),
            frame,
            steps: 0,
        });
        self.trace.len() - 1
    }

    /// Colors a connected graph with at most 7 colors, recursing as the
    /// routines require. Falls back to the exact solver on small graphs
    /// when configured.
    pub fn color(&mut self, g: &Graph, frame: &Frame) -> Result<PartialColoring, EngineError> {
        let mark = self.trace.len();
        match self.color_inner(g, frame) {
            Err(EngineError::InternalInvariantViolation { message, .. })
                if self.cfg.fallback_small && g.m() <= self.cfg.fallback_limit =>
            {
                log::warn!(
                    "invariant violation on a {}-edge component ({message}); using the exact solver",
                    g.m()
                );
                self.trace.truncate(mark);
                self.record("Fallback", message, Vec::new());
                small_solve(g, self.cfg.fallback_limit)
            }
            Err(EngineError::InternalInvariantViolation { message, trace }) if trace.is_empty() => {
                Err(EngineError::InternalInvariantViolation {
                    message,
                    trace: self.trace.iter().map(|r| r.to_string()).collect(),
                })
            }
            other => other,
        }
    }

    fn color_inner(&mut self, g: &Graph, frame: &Frame) -> Result<PartialColoring, EngineError> {
        let tag = classify(g).map_err(|e| violation(format!("classification failed: {e}")))?;
        let name = tag.name();
        let c = match tag {
            CaseTag::EdgeFree => {
                self.record("EdgeFree", "", Vec::new());
                PartialColoring::new(0, PALETTE)
            }
            CaseTag::NotClawFree(_) | CaseTag::NotSubcubic { .. } | CaseTag::Prism3 => {
                return Err(violation(format!("recursion reached a {} graph", tag.name())));
            }
            CaseTag::K4 | CaseTag::K4Delta => {
                self.record(tag.name(), "exact solver", Vec::new());
                small_solve(g, self.cfg.fallback_limit)?
            }
            CaseTag::HasDegree1 { v } => degree::degree1(self, g, frame, v)?,
            CaseTag::HasDegree2 { v } => degree::degree2(self, g, frame, v)?,
            CaseTag::CubicCutVertex { v } => cut::cut_vertex(self, g, frame, v)?,
            CaseTag::ChordedC4(c4) => four_cycle::chorded(self, g, frame, c4)?,
            CaseTag::InducedC4(c4) => four_cycle::induced(self, g, frame, c4)?,
            CaseTag::TriangleCovered(cyc) => even_cycle::even_cycle(self, g, frame, &cyc)?,
        };
        let bad = verify_strong(g, &c, true);
        ensure!(
            bad.is_empty(),
            "{} result is not a strong coloring: {}",
            name,
            bad[0]
        );
        ensure!(c.palette() <= PALETTE, "palette {} exceeds 7", c.palette());
        Ok(c)
    }

    /// Colors `sub` (a subgraph of `g` given by `sub.vertex_map`) one
    /// level deeper and copies the colors into `target`.
    pub fn color_sub(
        &mut self,
        sub: &crate::graph::Subgraph,
        frame: &Frame,
        target: &mut PartialColoring,
    ) -> Result<(), EngineError> {
        self.depth += 1;
        let r = self.color(&sub.graph, &frame.sub(&sub.vertex_map));
        self.depth -= 1;
        let c = r?;
        for (local, &global) in sub.edge_map.iter().enumerate() {
            if let Some(col) = c.get(local) {
                target.set(global, col);
            }
        }
        Ok(())
    }
}

/// Exact strong coloring of a small graph, required to need at most 7
/// colors.
fn small_solve(g: &Graph, limit: usize) -> Result<PartialColoring, EngineError> {
    let cfg = SolverConfig {
        max_edges: limit,
        ..SolverConfig::default()
    };
    match exact_chi_s(g, &cfg)? {
        ChiOutcome::Exact { chi, mut certificate } => {
            ensure!(chi <= PALETTE as usize, "exact solver needs {chi} > 7 colors");
            certificate.set_palette(PALETTE);
            Ok(certificate)
        }
        ChiOutcome::Indeterminate { .. } | ChiOutcome::Above { .. } => {
            Err(violation("exact solver ran out of budget"))
        }
    }
}

/// Colors a graph with at most 40 edges optimally; more than 7 colors is an
/// invariant violation.
pub fn small_case_solve(g: &Graph) -> Result<ColoringResult, EngineError> {
    let coloring = small_solve(g, 40)?;
    Ok(ColoringResult {
        colors_used: coloring.colors_used(),
        coloring,
        exceptional: false,
        trace: vec![TraceRecord {
            depth: 0,
            case: "Exact",
            detail: String::new(),
            frame: Vec::new(),
            steps: 0,
        }],
    })
}

/// Applies the color map `map` (indexed by color, a bijection on the
/// palette) to the edges in `edges`.
pub fn permute_colors(c: &PartialColoring, edges: &[EdgeId], map: &[Color]) -> PartialColoring {
    let mut seen = vec![false; map.len()];
    for &t in &map[1..=c.palette() as usize] {
        let t = t as usize;
        assert!((1..=c.palette() as usize).contains(&t) && !seen[t], "not a bijection");
        seen[t] = true;
    }
    let mut out = c.clone();
    out.permute_on(edges.iter().copied(), map);
    out
}

/// The swap of colors `a` and `b` as a map for [`permute_colors`].
pub fn swap_map(palette: Color, a: Color, b: Color) -> Vec<Color> {
    (0..=palette)
        .map(|c| if c == a { b } else if c == b { a } else { c })
        .collect()
}

fn finish(c: PartialColoring, trace: Vec<TraceRecord>, exceptional: bool) -> ColoringResult {
    ColoringResult {
        colors_used: c.colors_used(),
        coloring: c,
        exceptional,
        trace,
    }
}

/// Colors one connected claw-free subcubic graph that is not the
/// triangular prism.
pub fn color_component(g: &Graph, cfg: &EngineConfig) -> Result<ColoringResult, EngineError> {
    let mut ctx = Ctx {
        cfg,
        trace: Vec::new(),
        depth: 0,
    };
    let c = ctx.color(g, &Frame::identity(g.n()))?;
    Ok(finish(c, ctx.trace, false))
}

fn with_ctx<F>(g: &Graph, cfg: &EngineConfig, f: F) -> Result<ColoringResult, EngineError>
where
    F: FnOnce(&mut Ctx, &Graph, &Frame) -> Result<PartialColoring, EngineError>,
{
    let mut ctx = Ctx {
        cfg,
        trace: Vec::new(),
        depth: 0,
    };
    let c = f(&mut ctx, g, &Frame::identity(g.n()))?;
    let bad = verify_strong(g, &c, true);
    if let Some(v) = bad.first() {
        return Err(violation(format!("result is not a strong coloring: {v}")));
    }
    Ok(finish(c, ctx.trace, false))
}

/// Runs the degree-1 routine at `v0` directly.
pub fn extend_degree1(g: &Graph, v0: VertexId, cfg: &EngineConfig) -> Result<ColoringResult, EngineError> {
    with_ctx(g, cfg, |ctx, g, fr| degree::degree1(ctx, g, fr, v0))
}

/// Runs the degree-2 routine at `v0` directly.
pub fn extend_degree2(g: &Graph, v0: VertexId, cfg: &EngineConfig) -> Result<ColoringResult, EngineError> {
    with_ctx(g, cfg, |ctx, g, fr| degree::degree2(ctx, g, fr, v0))
}

/// Runs the cut-vertex routine at `v0` directly.
pub fn extend_cut_vertex(g: &Graph, v0: VertexId, cfg: &EngineConfig) -> Result<ColoringResult, EngineError> {
    with_ctx(g, cfg, |ctx, g, fr| cut::cut_vertex(ctx, g, fr, v0))
}

pub fn extend_chorded_c4(g: &Graph, c4: C4, cfg: &EngineConfig) -> Result<ColoringResult, EngineError> {
    with_ctx(g, cfg, |ctx, g, fr| four_cycle::chorded(ctx, g, fr, c4))
}

pub fn extend_induced_c4(g: &Graph, c4: C4, cfg: &EngineConfig) -> Result<ColoringResult, EngineError> {
    with_ctx(g, cfg, |ctx, g, fr| four_cycle::induced(ctx, g, fr, c4))
}

/// Runs the even-cycle routine with the given labeled cycle, bypassing the
/// classification (so it also applies to triangle-covered graphs that
/// would be handled as base cases).
pub fn extend_even_cycle(
    g: &Graph,
    cycle: &EvenCycle,
    cfg: &EngineConfig,
) -> Result<ColoringResult, EngineError> {
    with_ctx(g, cfg, |ctx, g, fr| even_cycle::even_cycle(ctx, g, fr, cycle))
}

/// Strong edge coloring of a claw-free subcubic graph: at most 7 colors,
/// except that triangular prism components get 9.
pub fn strong_color(g: &Graph) -> Result<StrongColoring, EngineError> {
    strong_color_with(g, &EngineConfig::default())
}

pub fn strong_color_with(g: &Graph, cfg: &EngineConfig) -> Result<StrongColoring, EngineError> {
    if let Some(claw) = find_claw(g) {
        return Err(EngineError::NotClawFree(claw));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(EngineError::NotSubcubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let mut total = PartialColoring::new(g.m(), PALETTE);
    let mut components = Vec::new();
    let mut exceptional = false;
    for sub in g.split_components() {
        let tag = classify(&sub.graph).map_err(|e: RecognitionError| violation(e.to_string()))?;
        let result = if tag == CaseTag::Prism3 {
            exceptional = true;
            let mut c = PartialColoring::new(sub.graph.m(), PRISM_PALETTE);
            for e in 0..sub.graph.m() {
                c.set(e, e as Color + 1);
            }
            let trace = vec![TraceRecord {
                depth: 0,
                case: "Prism3",
                detail: "fixed 9-coloring".into(),
                frame: Vec::new(),
                steps: 0,
            }];
            finish(c, trace, true)
        } else {
            let mut ctx = Ctx {
                cfg,
                trace: Vec::new(),
                depth: 0,
            };
            let c = ctx.color(&sub.graph, &Frame::identity(sub.graph.n()).sub(&sub.vertex_map))?;
            finish(c, ctx.trace, false)
        };
        for (local, &global) in sub.edge_map.iter().enumerate() {
            total.set(global, result.coloring.get(local).expect("component coloring is total"));
        }
        components.push(ComponentColoring {
            vertices: sub.vertex_map,
            edges: sub.edge_map,
            result,
        });
    }
    if exceptional {
        total.set_palette(PRISM_PALETTE);
    }
    let bad = verify_strong(g, &total, true);
    if let Some(v) = bad.first() {
        return Err(violation(format!("merged coloring is not strong: {v}")));
    }
    Ok(StrongColoring {
        colors_used: total.colors_used(),
        coloring: total,
        exceptional,
        components,
    })
}
