//! Exhaustive searches over small claw-free subcubic graphs.

use crate::corpus::enumerate_connected_subcubic;
use crate::error::SolverError;
use crate::exact::{exact_chi_s, ChiOutcome, SolverConfig};
use crate::graph::Graph;
use crate::recognition::is_claw_free;

/// Connected claw-free subcubic graphs on `n` vertices (one per isomorphism
/// class) whose strong chromatic index is exactly `target`.
pub fn survey_extremal(n: usize, target: usize, cfg: &SolverConfig) -> Result<Vec<Graph>, SolverError> {
    let mut out = Vec::new();
    let graphs = enumerate_connected_subcubic(n).map_err(|e| SolverError::Argument(e.to_string()))?;
    for g in graphs {
        if !is_claw_free(&g) {
            continue;
        }
        match exact_chi_s(&g, cfg)? {
            ChiOutcome::Exact { chi, .. } if chi == target => out.push(g),
            ChiOutcome::Exact { .. } | ChiOutcome::Above { .. } => {}
            ChiOutcome::Indeterminate { lower } => {
                return Err(SolverError::Argument(format!(
                    "solver budget exhausted on a {n}-vertex graph (lower bound {lower})"
                )))
            }
        }
    }
    Ok(out)
}
