//! Distance-to-seed leveling, compatible edge orders, greedy partial
//! coloring and extension by distinct representatives.

use std::collections::VecDeque;

use crate::coloring::{seen_colors, sees_unchecked, Color, ColorSet, PartialColoring, PALETTE};
use crate::error::PartialError;
use crate::graph::{EdgeId, Graph, VertexId};

/// Distances to a seed set. Edge levels are stored doubled so that they
/// stay integral: `edist2[uv] = vdist[u] + vdist[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMap {
    pub vdist: Vec<usize>,
    pub edist2: Vec<usize>,
}

impl LevelMap {
    pub fn edist(&self, e: EdgeId) -> f64 {
        self.edist2[e] as f64 / 2.0
    }
}

pub fn level_map(g: &Graph, seeds: &[VertexId]) -> Result<LevelMap, PartialError> {
    if seeds.is_empty() {
        return Err(PartialError::EmptySeedSet);
    }
    let mut vdist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &s in seeds {
        g.check_vertex(s)?;
        if vdist[s] != 0 {
            vdist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if vdist[y] == usize::MAX {
                vdist[y] = vdist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    if let Some(v) = vdist.iter().position(|&d| d == usize::MAX) {
        return Err(PartialError::Unreachable(v));
    }
    let edist2 = g.edges().iter().map(|&(u, v)| vdist[u] + vdist[v]).collect();
    Ok(LevelMap { vdist, edist2 })
}

/// Edges by level descending, id ascending within a level. Bucket sort, so
/// linear in the number of edges plus the largest level.
pub fn compatible_order(lm: &LevelMap) -> Vec<EdgeId> {
    let top = lm.edist2.iter().copied().max().unwrap_or(0);
    let mut buckets = vec![Vec::new(); top + 1];
    for (e, &d) in lm.edist2.iter().enumerate() {
        buckets[d].push(e);
    }
    buckets.into_iter().rev().flatten().collect()
}

/// Whether `order` is a permutation of the edges whose levels never
/// increase along it.
pub fn is_compatible(lm: &LevelMap, order: &[EdgeId]) -> bool {
    let mut seen = vec![false; lm.edist2.len()];
    for &e in order {
        if e >= seen.len() || std::mem::replace(&mut seen[e], true) {
            return false;
        }
    }
    order.len() == seen.len() && order.windows(2).all(|w| lm.edist2[w[0]] >= lm.edist2[w[1]])
}

/// Colors in the palette of `c` that `e` does not see.
pub fn availability(g: &Graph, c: &PartialColoring, e: EdgeId) -> Result<ColorSet, PartialError> {
    g.check_edge(e)?;
    if c.get(e).is_some() {
        return Err(PartialError::AlreadyColored(e));
    }
    Ok(avail_unchecked(g, c, e))
}

#[inline]
pub(crate) fn avail_unchecked(g: &Graph, c: &PartialColoring, e: EdgeId) -> ColorSet {
    seen_colors(g, c, e).complement(c.palette())
}

/// Colors every edge with level at least 1, in compatible order, with its
/// least available color out of `[1, 7]`. Edges below level 1 stay blank.
pub fn greedy_partial(g: &Graph, seeds: &[VertexId]) -> Result<PartialColoring, PartialError> {
    let lm = level_map(g, seeds)?;
    let mut c = PartialColoring::new(g.m(), PALETTE);
    for e in compatible_order(&lm) {
        if lm.edist2[e] < 2 {
            // Everything after this point is below level 1 too.
            break;
        }
        let c0 = avail_unchecked(g, &c, e)
            .min()
            .ok_or(PartialError::GreedyStuck(e))?;
        c.set(e, c0);
    }
    Ok(c)
}

/// Extends `c` on `targets` so that each target gets a color it does not
/// see and targets that see each other differ. Exact backtracking, most
/// constrained target first, colors ascending. `None` when no such
/// extension exists.
pub fn sdr_extend(g: &Graph, c: &PartialColoring, targets: &[EdgeId]) -> Option<PartialColoring> {
    let k = targets.len();
    let lists: Vec<ColorSet> = targets
        .iter()
        .map(|&e| {
            assert!(c.get(e).is_none(), "target {e} is already colored");
            avail_unchecked(g, c, e)
        })
        .collect();
    let mut conflicts = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if sees_unchecked(g, targets[i], targets[j]) {
                conflicts[i].push(j);
                conflicts[j].push(i);
            }
        }
    }
    let mut chosen = vec![None; k];
    if !solve_lists(&lists, &conflicts, &mut chosen) {
        return None;
    }
    let mut out = c.clone();
    for (&e, col) in targets.iter().zip(chosen) {
        out.set(e, col.unwrap());
    }
    Some(out)
}

/// List coloring of a small conflict graph by backtracking.
pub(crate) fn solve_lists(
    lists: &[ColorSet],
    conflicts: &[Vec<usize>],
    chosen: &mut [Option<Color>],
) -> bool {
    let domain = |i: usize, chosen: &[Option<Color>]| {
        let mut d = lists[i];
        for &j in &conflicts[i] {
            if let Some(col) = chosen[j] {
                d.remove(col);
            }
        }
        d
    };
    let next = (0..lists.len())
        .filter(|&i| chosen[i].is_none())
        .min_by_key(|&i| domain(i, chosen).len());
    let Some(i) = next else { return true };
    for col in domain(i, chosen).iter() {
        chosen[i] = Some(col);
        if solve_lists(lists, conflicts, chosen) {
            return true;
        }
    }
    chosen[i] = None;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_strong;
    use crate::corpus::catalog;

    #[test]
    fn path_levels_and_order() {
        let p = catalog::path(4);
        let lm = level_map(&p, &[0]).unwrap();
        assert_eq!(lm.vdist, vec![0, 1, 2, 3]);
        assert_eq!(lm.edist2, vec![1, 3, 5]);
        assert_eq!(compatible_order(&lm), vec![2, 1, 0]);
        let all = level_map(&p, &[0, 1, 2, 3]).unwrap();
        assert_eq!(compatible_order(&all), vec![0, 1, 2]);
        assert_eq!(level_map(&p, &[]), Err(PartialError::EmptySeedSet));
    }

    #[test]
    fn c6_antipodal_levels() {
        let lm = level_map(&catalog::cycle(6), &[0, 3]).unwrap();
        assert_eq!(lm.vdist, vec![0, 1, 1, 0, 1, 1]);
    }

    #[test]
    fn triangle_availability() {
        let t = catalog::cycle(3);
        let mut c = PartialColoring::new(3, 7);
        c.set(0, 1);
        c.set(1, 2);
        assert_eq!(
            availability(&t, &c, 2).unwrap(),
            [3, 4, 5, 6, 7].into_iter().collect()
        );
        assert_eq!(availability(&t, &c, 0), Err(PartialError::AlreadyColored(0)));
    }

    #[test]
    fn paw_greedy() {
        let g = catalog::paw();
        let c = greedy_partial(&g, &[3]).unwrap();
        let pendant = g.edge_id(2, 3).unwrap();
        assert_eq!(c.uncolored().collect::<Vec<_>>(), vec![pendant]);
        assert!(verify_strong(&g, &c, false).is_empty());
    }

    #[test]
    fn sdr_small_cases() {
        // Two adjacent edges of a path, palette 1 leaves both with {1}.
        let p = catalog::path(3);
        let c = PartialColoring::new(2, 1);
        assert_eq!(sdr_extend(&p, &c, &[0, 1]), None);

        let lists: Vec<ColorSet> = [[1, 2], [2, 3], [1, 3]]
            .iter()
            .map(|l| l.iter().copied().collect())
            .collect();
        let conflicts = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        let mut chosen = vec![None; 3];
        assert!(solve_lists(&lists, &conflicts, &mut chosen));
        let mut got: Vec<Color> = chosen.iter().map(|c| c.unwrap()).collect();
        got.sort_unstable();
        assert_eq!(got, vec![1, 2, 3]);
    }
}
