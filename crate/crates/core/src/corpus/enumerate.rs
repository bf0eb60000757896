//! Exhaustive generation of connected subcubic graphs up to isomorphism.

use std::collections::BTreeSet;

use crate::error::CorpusError;
use crate::graph::Graph;
use crate::recognition::{canonical_form, CanonicalForm};

pub const ENUMERATION_LIMIT: usize = 10;

/// Every connected graph on `n` vertices with maximum degree at most 3, one
/// per isomorphism class, in canonical labeling, ordered by canonical code.
///
/// Each class on `n` vertices arises from a class on `n - 1` vertices by
/// adding a vertex joined to one to three vertices of degree at most 2
/// (delete a non-cut vertex to go back), so growing level by level and
/// deduplicating by canonical form is complete.
pub fn enumerate_connected_subcubic(n: usize) -> Result<Vec<Graph>, CorpusError> {
    if n > ENUMERATION_LIMIT {
        return Err(CorpusError::Argument(format!(
            "enumeration supports n <= {ENUMERATION_LIMIT}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(1)).unwrap());
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let g = form.to_graph();
            let open: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < 3).collect();
            let k = open.len();
            for mask in 1u32..(1 << k) {
                if mask.count_ones() > 3 {
                    continue;
                }
                let mut edges = g.edges().to_vec();
                edges.extend((0..k).filter(|i| mask >> i & 1 == 1).map(|i| (open[i], size - 1)));
                let h = Graph::from_edges(size, edges).expect("new vertex edges are fresh");
                next.insert(canonical_form(&h).unwrap());
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(CanonicalForm::to_graph).collect())
}
