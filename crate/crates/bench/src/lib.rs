//! Graph fixtures shared by the benchmarks.

use clawcolor::corpus::{catalog, generators, random_claw_free_subcubic};
use clawcolor::Graph;

/// Triangle-expanded prisms with roughly `edges` edges each (the
/// expansion of the `k`-prism has `9k` edges).
pub fn expanded_prisms(edges: &[usize]) -> Vec<(usize, Graph)> {
    edges
        .iter()
        .map(|&m| {
            let k = (m / 9).max(3);
            (m, generators::expanded_prism(k).expect("k >= 3"))
        })
        .collect()
}

pub fn random_graphs(n: usize, count: u64) -> Vec<Graph> {
    (0..count).map(|s| random_claw_free_subcubic(n, s)).collect()
}

/// Small graphs for the exact solver, by name.
pub fn exact_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("k4", catalog::k4()),
        ("prism3", catalog::prism3()),
        ("k4_delta", catalog::k4_delta()),
        ("petersen", catalog::petersen()),
    ]
}
