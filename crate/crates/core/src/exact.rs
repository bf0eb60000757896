//! Exact strong edge coloring of small graphs: DSATUR-ordered backtracking
//! over the conflict graph with bitmask adjacency.

use std::time::{Duration, Instant};

use crate::coloring::{conflict_graph, verify_strong, Color, PartialColoring, MAX_PALETTE};
use crate::error::SolverError;
use crate::graph::Graph;

/// Hard ceiling from the 128-bit adjacency masks.
pub const HARD_EDGE_LIMIT: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_edges: usize,
    /// Search nodes per decision before giving up.
    pub node_budget: u64,
    /// Wall clock per call (`strong_color_k` or the whole `exact_chi_s`).
    pub time_budget: Option<Duration>,
    pub symmetry_breaking: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_edges: 40,
            node_budget: 200_000_000,
            time_budget: Some(Duration::from_secs(30)),
            symmetry_breaking: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Colorable(PartialColoring),
    Uncolorable,
    Indeterminate,
}

/// Result of [`exact_chi_s`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiOutcome {
    Exact {
        chi: usize,
        certificate: PartialColoring,
    },
    /// Budget ran out; every `k < lower` was refuted.
    Indeterminate { lower: usize },
    /// Every `k <= kmax` was refuted.
    Above { kmax: usize },
}

impl ChiOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            ChiOutcome::Exact { chi, .. } => Some(*chi),
            ChiOutcome::Indeterminate { .. } | ChiOutcome::Above { .. } => None,
        }
    }
}

fn check(g: &Graph, cfg: &SolverConfig) -> Result<(), SolverError> {
    let limit = cfg.max_edges.min(HARD_EDGE_LIMIT);
    if g.m() > limit {
        return Err(SolverError::TooLarge { m: g.m(), limit });
    }
    if cfg.node_budget == 0 {
        return Err(SolverError::Argument("node budget must be positive".into()));
    }
    Ok(())
}

/// Conflict graph as bitmasks plus a greedy clique.
struct Instance {
    adj: Vec<u128>,
    clique: Vec<usize>,
}

impl Instance {
    fn new(g: &Graph) -> Instance {
        let l = conflict_graph(g);
        let adj: Vec<u128> = (0..l.n())
            .map(|v| l.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
            .collect();
        Instance {
            clique: greedy_clique(&l, &adj),
            adj,
        }
    }
}

/// Grows a clique from the highest-degree vertex, always adding the
/// candidate with most neighbors among the remaining candidates.
fn greedy_clique(l: &Graph, adj: &[u128]) -> Vec<usize> {
    let n = l.n();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).max_by_key(|&v| (l.degree(v), std::cmp::Reverse(v))).unwrap();
    let mut clique = vec![start];
    let mut cand = adj[start];
    while cand != 0 {
        let mut best = usize::MAX;
        let mut best_score = 0;
        let mut bits = cand;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let score = (adj[v] & cand).count_ones() + 1;
            if score > best_score {
                best = v;
                best_score = score;
            }
        }
        clique.push(best);
        cand &= adj[best];
    }
    clique.sort_unstable();
    clique
}

/// Size of a clique of the conflict graph found greedily; a lower bound
/// on the strong chromatic index.
pub fn clique_lower_bound(g: &Graph) -> usize {
    Instance::new(g).clique.len()
}

enum Search {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Dsatur<'a> {
    adj: &'a [u128],
    k: usize,
    color: Vec<u8>,
    /// `count[v * (k + 1) + c]`: colored neighbors of `v` with color `c`.
    count: Vec<u8>,
    saturation: Vec<u32>,
    uncolored: u128,
    max_used: usize,
    symmetry: bool,
    nodes: u64,
    node_budget: u64,
    deadline: Option<Instant>,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c as u8;
        self.uncolored &= !(1 << v);
        let mut bits = self.adj[v];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let slot = &mut self.count[w * (self.k + 1) + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = 0;
        self.uncolored |= 1 << v;
        let mut bits = self.adj[v];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let slot = &mut self.count[w * (self.k + 1) + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0, 0);
        let mut bits = self.uncolored;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let k = (self.saturation[v], (self.adj[v] & self.uncolored).count_ones());
            if best == usize::MAX || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn run(&mut self) -> Search {
        if self.uncolored == 0 {
            return Search::Found;
        }
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Search::OutOfBudget;
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Search::OutOfBudget;
                }
            }
        }
        let v = self.pick();
        if self.saturation[v] as usize >= self.k {
            return Search::Exhausted;
        }
        let top = if self.symmetry {
            (self.max_used + 1).min(self.k)
        } else {
            self.k
        };
        for c in 1..=top {
            if self.count[v * (self.k + 1) + c] != 0 {
                continue;
            }
            let prev_max = self.max_used;
            self.max_used = self.max_used.max(c);
            self.assign(v, c);
            match self.run() {
                // Keep the assignment on success so the caller can read it.
                Search::Exhausted => {
                    self.unassign(v, c);
                    self.max_used = prev_max;
                }
                other => return other,
            }
        }
        Search::Exhausted
    }
}

fn solve(
    g: &Graph,
    inst: &Instance,
    k: usize,
    cfg: &SolverConfig,
    deadline: Option<Instant>,
) -> Result<Outcome, SolverError> {
    if k > MAX_PALETTE as usize {
        return Err(SolverError::Argument(format!(
            "k = {k} exceeds the palette limit {MAX_PALETTE}"
        )));
    }
    let m = g.m();
    if m == 0 {
        return Ok(Outcome::Colorable(PartialColoring::new(0, k as Color)));
    }
    if k < inst.clique.len() {
        return Ok(Outcome::Uncolorable);
    }
    let mut s = Dsatur {
        adj: &inst.adj,
        k,
        color: vec![0; m],
        count: vec![0; m * (k + 1)],
        saturation: vec![0; m],
        uncolored: if m == 128 { u128::MAX } else { (1u128 << m) - 1 },
        max_used: 0,
        symmetry: cfg.symmetry_breaking,
        nodes: 0,
        node_budget: cfg.node_budget,
        deadline,
    };
    if cfg.symmetry_breaking {
        // Clique members need distinct colors; which ones is irrelevant.
        for (i, &v) in inst.clique.iter().enumerate() {
            s.assign(v, i + 1);
        }
        s.max_used = inst.clique.len();
    }
    match s.run() {
        Search::Found => {
            let colors = s.color.iter().map(|&c| Some(c)).collect();
            let c = PartialColoring::from_colors(colors, k as Color);
            debug_assert!(verify_strong(g, &c, true).is_empty());
            Ok(Outcome::Colorable(c))
        }
        Search::Exhausted => Ok(Outcome::Uncolorable),
        Search::OutOfBudget => Ok(Outcome::Indeterminate),
    }
}

/// Decides whether `g` has a strong `k`-edge-coloring.
pub fn strong_color_k(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<Outcome, SolverError> {
    check(g, cfg)?;
    let deadline = cfg.time_budget.map(|t| Instant::now() + t);
    solve(g, &Instance::new(g), k, cfg, deadline)
}

/// Strong chromatic index by ascending search from the clique bound. The
/// time budget covers the whole search.
pub fn exact_chi_s(g: &Graph, cfg: &SolverConfig) -> Result<ChiOutcome, SolverError> {
    exact_chi_s_upto(g, usize::MAX, cfg)
}

/// Like [`exact_chi_s`], but stops with [`ChiOutcome::Above`] once every
/// `k <= kmax` is refuted.
pub fn exact_chi_s_upto(g: &Graph, kmax: usize, cfg: &SolverConfig) -> Result<ChiOutcome, SolverError> {
    check(g, cfg)?;
    let deadline = cfg.time_budget.map(|t| Instant::now() + t);
    let inst = Instance::new(g);
    let mut k = inst.clique.len();
    loop {
        if k > kmax {
            return Ok(ChiOutcome::Above { kmax });
        }
        match solve(g, &inst, k, cfg, deadline)? {
            Outcome::Colorable(certificate) => {
                assert!(k >= inst.clique.len());
                return Ok(ChiOutcome::Exact { chi: k, certificate });
            }
            Outcome::Uncolorable => k += 1,
            Outcome::Indeterminate => return Ok(ChiOutcome::Indeterminate { lower: k }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::catalog;

    fn chi(g: &Graph) -> usize {
        exact_chi_s(g, &SolverConfig::default()).unwrap().value().unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(chi(&catalog::k4()), 6);
        assert_eq!(chi(&catalog::cycle(7)), 4);
        assert_eq!(chi(&catalog::cycle(6)), 3);
        assert_eq!(chi(&catalog::cycle(5)), 5);
        assert_eq!(chi(&catalog::prism3()), 9);
        assert_eq!(chi(&Graph::empty(3)), 0);
    }

    #[test]
    fn decision_examples() {
        let cfg = SolverConfig::default();
        let edge = catalog::path(2);
        assert!(matches!(strong_color_k(&edge, 1, &cfg).unwrap(), Outcome::Colorable(_)));
        let prism = catalog::prism3();
        assert_eq!(strong_color_k(&prism, 8, &cfg).unwrap(), Outcome::Uncolorable);
        assert!(matches!(strong_color_k(&prism, 9, &cfg).unwrap(), Outcome::Colorable(_)));
    }

    #[test]
    fn bounded_search() {
        let cfg = SolverConfig::default();
        assert_eq!(
            exact_chi_s_upto(&catalog::prism3(), 8, &cfg).unwrap(),
            ChiOutcome::Above { kmax: 8 }
        );
        assert_eq!(exact_chi_s_upto(&catalog::cycle(5), 5, &cfg).unwrap().value(), Some(5));
        let c5 = catalog::cycle(5);
        assert_eq!(strong_color_k(&c5, 4, &cfg).unwrap(), Outcome::Uncolorable);
        assert!(matches!(strong_color_k(&c5, 5, &cfg).unwrap(), Outcome::Colorable(_)));
    }

    #[test]
    fn size_limit() {
        let g = catalog::cycle(41);
        assert!(matches!(
            exact_chi_s(&g, &SolverConfig::default()),
            Err(SolverError::TooLarge { m: 41, limit: 40 })
        ));
    }

    #[test]
    fn tiny_budget_is_indeterminate() {
        let cfg = SolverConfig {
            node_budget: 1,
            symmetry_breaking: false,
            ..SolverConfig::default()
        };
        assert_eq!(
            strong_color_k(&catalog::cycle(7), 3, &cfg).unwrap(),
            Outcome::Indeterminate
        );
    }
}
