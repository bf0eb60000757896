//! Parametric graph families.

use crate::error::CorpusError;
use crate::graph::Graph;

/// Two `k`-cycles `0..k` and `k..2k` joined by the matching `i, k + i`.
pub fn gen_k_prism(k: usize) -> Result<Graph, CorpusError> {
    if k < 3 {
        return Err(CorpusError::Argument(format!("k-prism needs k >= 3, got {k}")));
    }
    let mut e = Vec::with_capacity(3 * k);
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((k + i, k + (i + 1) % k));
        e.push((i, k + i));
    }
    Ok(Graph::from_edges(2 * k, e).expect("prism is simple"))
}

/// Replaces every vertex `v` of a cubic graph by the triangle
/// `3v, 3v + 1, 3v + 2`; vertex `3v + i` takes the edge to the `i`-th
/// neighbor of `v` in ascending order.
pub fn triangle_expand(h: &Graph) -> Result<Graph, CorpusError> {
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) != 3) {
        return Err(CorpusError::Argument(format!(
            "triangle expansion needs a cubic graph; vertex {v} has degree {}",
            h.degree(v)
        )));
    }
    let mut e = Vec::with_capacity(3 * h.n() + h.m());
    for v in 0..h.n() {
        e.push((3 * v, 3 * v + 1));
        e.push((3 * v, 3 * v + 2));
        e.push((3 * v + 1, 3 * v + 2));
    }
    for &(u, v) in h.edges() {
        let pu = h.neighbors(u).binary_search(&v).unwrap();
        let pv = h.neighbors(v).binary_search(&u).unwrap();
        e.push((3 * u + pu, 3 * v + pv));
    }
    Ok(Graph::from_edges(3 * h.n(), e).expect("expansion of a simple graph is simple"))
}

/// Triangle expansion of the `k`-prism: `6k` vertices, `9k` edges.
pub fn expanded_prism(k: usize) -> Result<Graph, CorpusError> {
    triangle_expand(&gen_k_prism(k)?)
}

/// `k >= 2` diamonds in a ring. Diamond `i` has tips `4i`, `4i + 3` and
/// middles `4i + 1`, `4i + 2`; tip `4i + 3` is joined to tip `4(i + 1)`.
pub fn diamond_ring(k: usize) -> Result<Graph, CorpusError> {
    if k < 2 {
        return Err(CorpusError::Argument(format!("diamond ring needs k >= 2, got {k}")));
    }
    let mut e = Vec::with_capacity(6 * k);
    for i in 0..k {
        let b = 4 * i;
        e.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
        e.push((b + 3, 4 * ((i + 1) % k)));
    }
    Ok(Graph::from_edges(4 * k, e).expect("diamond ring is simple"))
}
