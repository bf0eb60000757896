//! A partial coloring whose every change is checked against availability.

use crate::coloring::{seen_colors, Color, ColorSet, PartialColoring, PALETTE};
use crate::error::EngineError;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::partial::{greedy_partial, sdr_extend};

use super::{ensure, violation};

pub(crate) struct Work<'g> {
    pub g: &'g Graph,
    pub c: PartialColoring,
    pub routine: &'static str,
}

impl<'g> Work<'g> {
    /// Greedy partial coloring from the seed set `seeds`.
    pub fn seeded(
        g: &'g Graph,
        seeds: &[VertexId],
        routine: &'static str,
    ) -> Result<Work<'g>, EngineError> {
        let c = greedy_partial(g, seeds).map_err(|e| violation(format!("{routine}: {e}")))?;
        Ok(Work { g, c, routine })
    }

    pub fn blank(g: &'g Graph, routine: &'static str) -> Work<'g> {
        Work {
            g,
            c: PartialColoring::new(g.m(), PALETTE),
            routine,
        }
    }

    pub fn edge(&self, a: VertexId, b: VertexId) -> Result<EdgeId, EngineError> {
        self.g
            .edge_id(a, b)
            .ok_or_else(|| violation(format!("{}: expected edge {a}-{b}", self.routine)))
    }

    pub fn colored(&self, e: EdgeId) -> Result<Color, EngineError> {
        self.c
            .get(e)
            .ok_or_else(|| violation(format!("{}: edge {e} should be colored", self.routine)))
    }

    /// Colors not seen by `e`; the color of `e` itself does not count.
    pub fn avail(&self, e: EdgeId) -> ColorSet {
        seen_colors(self.g, &self.c, e).complement(self.c.palette())
    }

    pub fn uncolored(&self) -> Vec<EdgeId> {
        self.c.uncolored().collect()
    }

    pub fn assign(&mut self, e: EdgeId, col: Color) -> Result<(), EngineError> {
        ensure!(
            self.c.get(e).is_none(),
            "{}: edge {e} is already colored",
            self.routine
        );
        ensure!(
            self.avail(e).contains(col),
            "{}: color {col} is not available to edge {e}",
            self.routine
        );
        self.c.set(e, col);
        Ok(())
    }

    /// Replaces the color of a colored edge.
    pub fn recolor(&mut self, e: EdgeId, col: Color) -> Result<(), EngineError> {
        self.colored(e)?;
        ensure!(
            self.avail(e).contains(col),
            "{}: color {col} is not available to recolor edge {e}",
            self.routine
        );
        self.c.set(e, col);
        Ok(())
    }

    pub fn erase(&mut self, e: EdgeId) -> Result<Color, EngineError> {
        let col = self.colored(e)?;
        self.c.unset(e);
        Ok(col)
    }

    /// Colors `edges` in order, each with its least available color.
    pub fn greedy(&mut self, edges: &[EdgeId]) -> Result<(), EngineError> {
        for &e in edges {
            let col = self
                .avail(e)
                .min()
                .ok_or_else(|| violation(format!("{}: no color left for edge {e}", self.routine)))?;
            self.assign(e, col)?;
        }
        Ok(())
    }

    /// Colors `edges` by distinct representatives of their lists.
    pub fn sdr(&mut self, edges: &[EdgeId]) -> Result<(), EngineError> {
        for &e in edges {
            ensure!(
                self.c.get(e).is_none(),
                "{}: edge {e} is already colored",
                self.routine
            );
        }
        self.c = sdr_extend(self.g, &self.c, edges).ok_or_else(|| {
            violation(format!("{}: no distinct representatives for {edges:?}", self.routine))
        })?;
        Ok(())
    }

    /// Checks that exactly `expected` is left uncolored, in any order.
    pub fn expect_uncolored(&self, expected: &[EdgeId]) -> Result<(), EngineError> {
        let mut got = self.uncolored();
        let mut want = expected.to_vec();
        got.sort_unstable();
        want.sort_unstable();
        ensure!(
            got == want,
            "{}: uncolored edges {got:?}, expected {want:?}",
            self.routine
        );
        Ok(())
    }

    /// Applies a color bijection (indexed by color) to every colored edge.
    pub fn permute_all(&mut self, map: &[Color]) {
        let all: Vec<EdgeId> = (0..self.g.m()).collect();
        self.c.permute_on(all, map);
    }
}

/// The third neighbor of `v` outside `a` and `b`.
pub(crate) fn third(g: &Graph, v: VertexId, a: VertexId, b: VertexId) -> Result<VertexId, EngineError> {
    let mut rest = g.neighbors(v).iter().copied().filter(|&x| x != a && x != b);
    match (rest.next(), rest.next()) {
        (Some(x), None) => Ok(x),
        _ => Err(violation(format!("vertex {v} has no unique neighbor besides {a} and {b}"))),
    }
}

/// The two neighbors of `v` other than `a`, ascending.
pub(crate) fn others(g: &Graph, v: VertexId, a: VertexId) -> Result<(VertexId, VertexId), EngineError> {
    let rest: Vec<VertexId> = g.neighbors(v).iter().copied().filter(|&x| x != a).collect();
    match rest[..] {
        [x, y] => Ok((x, y)),
        _ => Err(violation(format!("vertex {v} should have exactly two neighbors besides {a}"))),
    }
}
