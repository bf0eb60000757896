//! Isomorphism and canonical labeling for graphs with at most 16 vertices.

use crate::error::RecognitionError;
use crate::graph::{Graph, VertexId};

pub const ISO_LIMIT: usize = 16;

fn check_size(g: &Graph) -> Result<(), RecognitionError> {
    if g.n() > ISO_LIMIT {
        Err(RecognitionError::TooLarge {
            n: g.n(),
            limit: ISO_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Exact isomorphism test by backtracking over degree-compatible maps.
pub fn iso_small(g: &Graph, h: &Graph) -> Result<bool, RecognitionError> {
    check_size(g)?;
    check_size(h)?;
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let n = g.n();
    // Map high-degree vertices first; among equals, ones with mapped
    // neighbors constrain more, so a BFS-like order helps.
    let mut order: Vec<VertexId> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            for &w in g.neighbors(order[i]) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &order, 0, &mut map, &mut used))
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[VertexId],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for x in 0..h.n() {
        if used[x] || h.degree(x) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], x));
        if !consistent {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        used[x] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Label-independent code of a graph with at most 16 vertices: two graphs
/// get equal forms exactly when they are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: u8,
    /// Upper triangle of the relabeled adjacency matrix, pair `(0,1)` in the
    /// most significant used bit.
    pub code: u128,
}

impl CanonicalForm {
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let mut edges = Vec::new();
        let mut bit = n * n.saturating_sub(1) / 2;
        for i in 0..n {
            for j in i + 1..n {
                bit -= 1;
                if self.code >> bit & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, edges).expect("a code describes a simple graph")
    }
}

/// Canonical form by partition refinement and individualization: the
/// maximum adjacency code over every discrete partition the search tree
/// reaches.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, RecognitionError> {
    check_size(g)?;
    let n = g.n();
    let mut cells: Vec<Vec<VertexId>> = Vec::new();
    let mut by_degree: Vec<VertexId> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = None;
    search(g, cells, &mut best);
    Ok(CanonicalForm {
        n: n as u8,
        code: best.unwrap_or(0),
    })
}

/// Splits cells by neighbor counts into every cell until stable. Cell order
/// and the order of the split pieces depend only on the structure.
fn refine(g: &Graph, mut cells: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, VertexId)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u8; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Vec<Vec<VertexId>>, best: &mut Option<u128>) {
    let cells = refine(g, cells);
    let target = cells.iter().position(|c| c.len() > 1);
    let Some(t) = target else {
        let n = g.n();
        let mut pos = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            pos[c[0]] = i;
        }
        let total = n * n.saturating_sub(1) / 2;
        let mut code = 0u128;
        for &(a, b) in g.edges() {
            let (i, j) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
            // Index of pair (i, j) in row-major upper-triangle order.
            let idx = i * (2 * n - i - 1) / 2 + (j - i - 1);
            code |= 1u128 << (total - 1 - idx);
        }
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &cells[t] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend(cells[..t].iter().cloned());
        next.push(vec![v]);
        next.push(cells[t].iter().copied().filter(|&x| x != v).collect());
        next.extend(cells[t + 1..].iter().cloned());
        search(g, next, best);
    }
}
