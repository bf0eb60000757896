//! Triangle partitions of cubic graphs without 4-cycles, the contraction of
//! each triangle to a point, and the minimum induced even cycle lifted from
//! a shortest cycle of the contraction.

use crate::error::RecognitionError;
use crate::graph::{EdgeId, Graph, VertexId};

/// Vertex-disjoint triangles covering every vertex, each sorted, ordered by
/// least vertex. Requires a connected cubic graph in which every vertex lies
/// on exactly one triangle.
pub fn triangle_partition(g: &Graph) -> Result<Vec<[VertexId; 3]>, RecognitionError> {
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }
    if !g.is_cubic() {
        return Err(RecognitionError::Precondition("graph is not cubic"));
    }
    let mut owner = vec![usize::MAX; g.n()];
    let mut out = Vec::with_capacity(g.n() / 3);
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        let mut found = None;
        let mut count = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if g.has_edge(nb[i], nb[j]) {
                    count += 1;
                    found = Some((nb[i], nb[j]));
                }
            }
        }
        let Some((a, b)) = found.filter(|_| count == 1) else {
            return Err(RecognitionError::Precondition(
                "a vertex does not lie on exactly one triangle",
            ));
        };
        if owner[v] == usize::MAX {
            let mut t = [v, a, b];
            t.sort_unstable();
            for &x in &t {
                if owner[x] != usize::MAX {
                    return Err(RecognitionError::Precondition("triangles overlap"));
                }
                owner[x] = out.len();
            }
            out.push(t);
        } else if owner[a] != owner[v] || owner[b] != owner[v] {
            return Err(RecognitionError::Precondition("triangles overlap"));
        }
    }
    Ok(out)
}

/// The multigraph whose vertices are the triangles of a triangle-covered
/// graph. Contracted vertex `t` has exactly three incident edges, one per
/// triangle vertex, in the order of `triangles[t]`.
#[derive(Clone, Debug)]
pub struct ContractedGraph {
    pub triangles: Vec<[VertexId; 3]>,
    /// Triangle index of each vertex of the original graph.
    pub owner: Vec<usize>,
    /// For each contracted vertex, `(neighbor triangle, original edge)` per
    /// triangle vertex.
    pub adj: Vec<[(usize, EdgeId); 3]>,
}

impl ContractedGraph {
    pub fn n(&self) -> usize {
        self.triangles.len()
    }
}

pub fn contract_triangles(g: &Graph) -> Result<ContractedGraph, RecognitionError> {
    let triangles = triangle_partition(g)?;
    let mut owner = vec![0; g.n()];
    for (t, tri) in triangles.iter().enumerate() {
        for &x in tri {
            owner[x] = t;
        }
    }
    let mut adj = Vec::with_capacity(triangles.len());
    for (t, tri) in triangles.iter().enumerate() {
        let mut row = [(0, 0); 3];
        for (slot, &x) in tri.iter().enumerate() {
            let (&y, &e) = g
                .neighbors(x)
                .iter()
                .zip(g.incident(x))
                .find(|(&y, _)| owner[y] != t)
                .expect("a cubic triangle vertex has one outside neighbor");
            row[slot] = (owner[y], e);
        }
        adj.push(row);
    }
    Ok(ContractedGraph {
        triangles,
        owner,
        adj,
    })
}

/// A shortest cycle of the contraction as `(triangles, connecting edges)`:
/// edge `k` joins `triangles[k]` and `triangles[k + 1]` (cyclically).
/// BFS from every root, truncated once no shorter cycle can appear; the
/// visited marks are reset through a touched list so each BFS costs only
/// what it explores.
fn shortest_cycle(c: &ContractedGraph) -> Option<(Vec<usize>, Vec<EdgeId>)> {
    let n = c.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    let mut touched = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    let mut best: Option<(usize, usize, usize, usize, EdgeId)> = None;

    let bfs = |root: usize,
                   dist: &mut Vec<usize>,
                   parent: &mut Vec<(usize, EdgeId)>,
                   touched: &mut Vec<usize>,
                   queue: &mut std::collections::VecDeque<usize>,
                   bound: usize|
     -> Option<(usize, usize, usize, EdgeId)> {
        for &x in touched.iter() {
            dist[x] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        parent[root] = (usize::MAX, usize::MAX);
        touched.push(root);
        queue.push_back(root);
        let mut found: Option<(usize, usize, usize, EdgeId)> = None;
        while let Some(x) = queue.pop_front() {
            let limit = found.map_or(bound, |f| f.0);
            if 2 * dist[x] + 1 >= limit {
                break;
            }
            for &(y, e) in &c.adj[x] {
                if e == parent[x].1 {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = (x, e);
                    touched.push(y);
                    queue.push_back(y);
                } else {
                    let len = dist[x] + dist[y] + 1;
                    if len < found.map_or(bound, |f| f.0) {
                        found = Some((len, x, y, e));
                    }
                }
            }
        }
        found
    };

    for root in 0..n {
        let bound = best.map_or(usize::MAX, |b| b.0);
        if let Some((len, x, y, e)) = bfs(root, &mut dist, &mut parent, &mut touched, &mut queue, bound)
        {
            best = Some((len, root, x, y, e));
            if len == 3 {
                break;
            }
        }
    }
    let (_, root, x, y, e) = best?;
    // Rebuild the parent tree of the winning root.
    bfs(root, &mut dist, &mut parent, &mut touched, &mut queue, usize::MAX);
    let path = |mut z: usize| {
        let mut verts = vec![z];
        let mut edges = Vec::new();
        while z != root {
            let (p, pe) = parent[z];
            edges.push(pe);
            verts.push(p);
            z = p;
        }
        verts.reverse();
        edges.reverse();
        (verts, edges)
    };
    let (px, ex) = path(x);
    let (py, ey) = path(y);
    // root .. x, closing edge, y .. root.
    let mut tris = px;
    let mut conn = ex;
    conn.push(e);
    tris.extend(py.iter().rev().take(py.len() - 1));
    conn.extend(ey.iter().rev());
    Some((tris, conn))
}

/// A minimum induced even cycle of a triangle-covered graph with the
/// labels the even-cycle extension uses. Index `i` of `v` is the cycle
/// vertex `v_{i+1}`; `u[j]` is the common neighbor of `v[2j]` and
/// `v[2j+1]`, and `w[j]` is the third neighbor of `u[j]`. The labeling is
/// rotated so that `w[0] w[1]` is not an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCycle {
    pub v: Vec<VertexId>,
    pub u: Vec<VertexId>,
    pub w: Vec<VertexId>,
}

impl EvenCycle {
    /// Half the cycle length.
    pub fn p(&self) -> usize {
        self.u.len()
    }
}

/// See [`EvenCycle`]. The cycle comes from a shortest cycle of the
/// triangle contraction, so its length is twice the contraction's girth.
pub fn min_induced_even_cycle(g: &Graph) -> Result<EvenCycle, RecognitionError> {
    let c = contract_triangles(g)?;
    let (tris, conn) = shortest_cycle(&c)
        .ok_or(RecognitionError::Precondition("triangle contraction is acyclic"))?;
    let p = tris.len();
    if p < 3 {
        return Err(RecognitionError::Precondition(
            "two triangles are joined by more than one edge",
        ));
    }
    // Triangle k is entered through conn[k-1] and left through conn[k].
    let mut entry = Vec::with_capacity(p);
    let mut exit = Vec::with_capacity(p);
    let mut third = Vec::with_capacity(p);
    for k in 0..p {
        let t = tris[k];
        let e_in = conn[(k + p - 1) % p];
        let e_out = conn[k];
        let tri = c.triangles[t];
        let port = |e: EdgeId| {
            let (a, b) = g.edge(e);
            if c.owner[a] == t {
                a
            } else {
                b
            }
        };
        let (a, b) = (port(e_in), port(e_out));
        let u = tri.iter().copied().find(|&x| x != a && x != b).unwrap();
        entry.push(a);
        exit.push(b);
        third.push(u);
    }
    let outside = |u: VertexId| {
        let t = c.owner[u];
        g.neighbors(u).iter().copied().find(|&y| c.owner[y] != t).unwrap()
    };
    for reversed in [false, true] {
        for shift in 0..p {
            let idx = |j: usize| {
                if reversed {
                    (shift + p - j) % p
                } else {
                    (shift + j) % p
                }
            };
            let u: Vec<VertexId> = (0..p).map(|j| third[idx(j)]).collect();
            let w: Vec<VertexId> = u.iter().map(|&x| outside(x)).collect();
            if g.has_edge(w[0], w[1]) {
                continue;
            }
            let mut v = Vec::with_capacity(2 * p);
            for j in 0..p {
                let k = idx(j);
                if reversed {
                    v.push(exit[k]);
                    v.push(entry[k]);
                } else {
                    v.push(entry[k]);
                    v.push(exit[k]);
                }
            }
            return Ok(EvenCycle { v, u, w });
        }
    }
    Err(RecognitionError::Precondition(
        "every rotation of the minimum even cycle has adjacent w-vertices",
    ))
}
