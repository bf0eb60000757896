//! Seeded random claw-free subcubic graphs.
//!
//! A random skeleton multigraph with degrees at most 3 is drawn by pairing
//! stubs. Skeleton vertices of degree 3 become triangles, the others single
//! vertices, and every skeleton edge becomes a string of diamonds and path
//! vertices between two ports. Each port has one outside edge and the
//! inner vertices of a gadget are adjacent, so no claw can form. Half the
//! samples use a cubic skeleton and diamonds only, which yields cubic
//! graphs (cut vertices, 4-cycles, triangle-covered pieces).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::recognition::is_claw_free;

struct Builder {
    n: usize,
    edges: std::collections::HashSet<(VertexId, VertexId)>,
}

impl Builder {
    fn vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n - 1
    }

    fn raw(&mut self, a: VertexId, b: VertexId) {
        debug_assert_ne!(a, b);
        self.edges.insert((a.min(b), a.max(b)));
    }

    /// Joins `a` and `b`, subdividing when a direct edge would be a loop or
    /// a repeat.
    fn link(&mut self, a: VertexId, b: VertexId) {
        if a == b {
            let x = self.vertex();
            let y = self.vertex();
            self.raw(a, x);
            self.raw(x, y);
            self.raw(y, a);
        } else if self.edges.contains(&(a.min(b), a.max(b))) {
            let x = self.vertex();
            self.raw(a, x);
            self.raw(x, b);
        } else {
            self.raw(a, b);
        }
    }

    /// Returns the two tips.
    fn diamond(&mut self) -> (VertexId, VertexId) {
        let s = self.vertex();
        let m1 = self.vertex();
        let m2 = self.vertex();
        let t = self.vertex();
        for (a, b) in [(s, m1), (s, m2), (m1, m2), (m1, t), (m2, t)] {
            self.raw(a, b);
        }
        (s, t)
    }
}

/// A connected claw-free subcubic graph on at most `max(n, 1)` vertices.
/// Equal arguments give equal graphs.
pub fn random_claw_free_subcubic(n: usize, seed: u64) -> Graph {
    let n = n.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        if let Some(g) = attempt(n, &mut rng) {
            debug_assert!(is_claw_free(&g) && g.is_subcubic() && g.is_connected());
            return g;
        }
    }
    crate::corpus::catalog::path(n)
}

fn attempt(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let cubic = rng.gen_bool(0.5);
    let budget = n;
    // Skeleton size, leaving room for strings.
    let s_max = if cubic { (budget / 3).max(2) & !1 } else { (budget / 3).max(1) };
    if s_max == 0 {
        return None;
    }
    let s = if cubic {
        2 * rng.gen_range(1..=s_max / 2)
    } else {
        rng.gen_range(1..=s_max)
    };
    let degrees: Vec<usize> = (0..s)
        .map(|_| if cubic { 3 } else { rng.gen_range(1..=3) })
        .collect();
    let mut stubs: Vec<usize> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
        .collect();
    if stubs.len() % 2 == 1 {
        // Drop one stub of a vertex of degree > 1 if possible.
        let pos = stubs.iter().rposition(|&v| degrees[v] > 1).unwrap_or(stubs.len() - 1);
        stubs.remove(pos);
    }
    stubs.shuffle(rng);

    let mut b = Builder {
        n: 0,
        edges: Default::default(),
    };
    // Ports per skeleton vertex, consumed in order.
    let mut ports: Vec<Vec<VertexId>> = Vec::with_capacity(s);
    let mut used_deg = vec![0usize; s];
    for &v in &stubs {
        used_deg[v] += 1;
    }
    for &d in &used_deg {
        if d == 3 {
            let t = [b.vertex(), b.vertex(), b.vertex()];
            b.raw(t[0], t[1]);
            b.raw(t[0], t[2]);
            b.raw(t[1], t[2]);
            ports.push(t.to_vec());
        } else {
            let x = b.vertex();
            ports.push(vec![x; d.max(1)]);
        }
    }
    if b.n > budget {
        return None;
    }
    let mut next_port = vec![0usize; s];
    let mut take = |v: usize| {
        let p = ports[v][next_port[v]];
        next_port[v] += 1;
        p
    };
    for pair in stubs.chunks(2) {
        let (x, y) = (take(pair[0]), take(pair[1]));
        let mut end = x;
        let units = if b.n + 4 <= budget { rng.gen_range(0..=2) } else { 0 };
        for _ in 0..units {
            let diamond = cubic || rng.gen_bool(0.5);
            if diamond && b.n + 4 <= budget {
                let (s0, t0) = b.diamond();
                b.link(end, s0);
                end = t0;
            } else if !diamond && b.n < budget {
                let p = b.vertex();
                b.link(end, p);
                end = p;
            }
        }
        b.link(end, y);
    }
    if b.n > budget {
        return None;
    }
    let g = Graph::from_edges(b.n, b.edges.iter().copied()).ok()?;
    // Largest component, ties to the one with the least vertex.
    let parts = g.split_components();
    let best = parts
        .into_iter()
        .enumerate()
        .max_by_key(|(i, p)| (p.graph.n(), std::cmp::Reverse(*i)))?
        .1
        .graph;
    (is_claw_free(&best) && best.is_subcubic()).then_some(best)
}
