//! Simple undirected graphs with canonical edge ids.
//!
//! Vertices are `0..n`. Edges are stored as `(u, v)` with `u < v`, sorted
//! lexicographically; the position of an edge in that list is its
//! [`EdgeId`]. Adjacency is kept in compressed form, sorted ascending, with a
//! parallel array of incident edge ids.

use std::collections::VecDeque;

use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    nbrs: Vec<VertexId>,
    inc: Vec<EdgeId>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Rejects loops, repeated edges and
    /// out-of-range endpoints. Edge order in the input does not matter.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(GraphError::Loop { vertex: a });
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        Ok(Self::from_sorted(n, list))
    }

    /// `edges` must already be canonical: `u < v`, sorted, no repeats.
    fn from_sorted(n: usize, edges: Vec<(VertexId, VertexId)>) -> Graph {
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &deg {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut nbrs = vec![0; 2 * edges.len()];
        let mut inc = vec![0; 2 * edges.len()];
        // Sorted edges visit each vertex's smaller neighbors first, then its
        // larger ones, both ascending: the lists come out sorted.
        for (id, &(u, v)) in edges.iter().enumerate() {
            nbrs[fill[u]] = v;
            inc[fill[u]] = id;
            fill[u] += 1;
            nbrs[fill[v]] = u;
            inc[fill[v]] = id;
            fill[v] += 1;
        }
        debug_assert!((0..n).all(|v| nbrs[offsets[v]..offsets[v + 1]]
            .windows(2)
            .all(|w| w[0] < w[1])));
        Graph {
            n,
            edges,
            offsets,
            nbrs,
            inc,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sorted(n, Vec::new())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.nbrs[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.inc[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let nb = self.neighbors(u);
        nb.binary_search(&v).ok().map(|i| self.incident(u)[i])
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<(), GraphError> {
        if e < self.m() {
            Ok(())
        } else {
            Err(GraphError::EdgeOutOfRange { edge: e, m: self.m() })
        }
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Connected components, each sorted ascending, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            queue.push_back(s);
            let mut members = vec![s];
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS distances from `src`; unreachable vertices get `usize::MAX`.
    pub fn bfs(&self, src: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `keep`. New vertex `i` is `keep[i]`; the returned
    /// edge map sends each new edge id to the original one.
    pub fn induced(&self, keep: &[VertexId]) -> Subgraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut pairs = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for (&w, &e) in self.neighbors(v).iter().zip(self.incident(v)) {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    pairs.push(((i, j), e));
                }
            }
        }
        pairs.sort_unstable();
        let edge_map = pairs.iter().map(|&(_, e)| e).collect();
        let graph = Self::from_sorted(keep.len(), pairs.into_iter().map(|(p, _)| p).collect());
        Subgraph {
            graph,
            vertex_map: keep.to_vec(),
            edge_map,
        }
    }

    /// One induced subgraph per connected component, in the order of
    /// [`Graph::components`]. Linear overall.
    pub fn split_components(&self) -> Vec<Subgraph> {
        let comps = self.components();
        let mut pos = vec![0usize; self.n];
        let mut owner = vec![0usize; self.n];
        for (c, members) in comps.iter().enumerate() {
            for (i, &v) in members.iter().enumerate() {
                pos[v] = i;
                owner[v] = c;
            }
        }
        let mut per: Vec<Vec<((VertexId, VertexId), EdgeId)>> = vec![Vec::new(); comps.len()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            per[owner[u]].push(((pos[u], pos[v]), e));
        }
        comps
            .into_iter()
            .zip(per)
            .map(|(members, mut pairs)| {
                // Members are ascending, so positions keep u < v; sorting by
                // position pair gives the canonical order.
                pairs.sort_unstable();
                let edge_map = pairs.iter().map(|&(_, e)| e).collect();
                let graph =
                    Self::from_sorted(members.len(), pairs.into_iter().map(|(p, _)| p).collect());
                Subgraph {
                    graph,
                    vertex_map: members,
                    edge_map,
                }
            })
            .collect()
    }

    /// Applies `perm` (old vertex -> new vertex).
    pub fn relabel(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n, edges).expect("a permutation preserves simplicity")
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

/// A graph carved out of a larger one, with maps back to the parent.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}
