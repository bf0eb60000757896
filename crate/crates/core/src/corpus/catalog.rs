//! Small named graphs.

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("catalog graphs are simple")
}

pub fn path(n: usize) -> Graph {
    build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn claw() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3)])
}

/// Triangle 0 1 2 with pendant vertex 3 on 2.
pub fn paw() -> Graph {
    build(4, &[(0, 1), (0, 2), (1, 2), (2, 3)])
}

/// `K4` minus the edge 0 3; the chord is 1 2.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
}

pub fn k4() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k33() -> Graph {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    build(6, &e)
}

/// Triangles 0 1 2 and 3 4 5 joined by the matching `i, i + 3`.
pub fn prism3() -> Graph {
    super::generators::gen_k_prism(3).unwrap()
}

/// `K4` with every vertex replaced by a triangle.
pub fn k4_delta() -> Graph {
    super::generators::triangle_expand(&k4()).unwrap()
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &e)
}

/// Degree-2 vertex `v0 = 0` whose neighbors `v1 = 1`, `v2 = 2` share the
/// adjacent pair `u1 = 3`, `u1' = 4`.
pub fn h1() -> Graph {
    build(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
}

/// `v0 = 0` with neighbors `v1 = 1`, `v2 = 2`; `v1` on triangle 1 3 4,
/// `v2` on triangle 2 5 6; cross edges 3 5 and 4 6.
pub fn h2() -> Graph {
    build(
        7,
        &[(0, 1), (0, 2), (1, 3), (1, 4), (3, 4), (2, 5), (2, 6), (5, 6), (3, 5), (4, 6)],
    )
}

/// As [`h2`] with the single cross edge 3 5, and `u1' = 4`, `u2' = 6`
/// sharing the neighbor 7.
pub fn h3() -> Graph {
    build(
        8,
        &[(0, 1), (0, 2), (1, 3), (1, 4), (3, 4), (2, 5), (2, 6), (5, 6), (3, 5), (4, 7), (6, 7)],
    )
}

/// Two diamonds joined tip to tip into a ring.
pub fn h4() -> Graph {
    super::generators::diamond_ring(2).unwrap()
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub description: &'static str,
    pub expected_chi_s: Option<usize>,
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "prism3",
            graph: prism3(),
            description: "two triangles joined by a perfect matching",
            expected_chi_s: Some(9),
        },
        CatalogEntry {
            name: "k4",
            graph: k4(),
            description: "complete graph on four vertices",
            expected_chi_s: Some(6),
        },
        CatalogEntry {
            name: "k4_delta",
            graph: k4_delta(),
            description: "triangle expansion of K4",
            expected_chi_s: None,
        },
        CatalogEntry {
            name: "h1",
            graph: h1(),
            description: "degree-2 vertex whose neighbors share an adjacent pair",
            expected_chi_s: Some(7),
        },
        CatalogEntry {
            name: "h2",
            graph: h2(),
            description: "two cross edges between the neighbor pairs",
            expected_chi_s: None,
        },
        CatalogEntry {
            name: "h3",
            graph: h3(),
            description: "one cross edge, other pair with a common neighbor",
            expected_chi_s: None,
        },
        CatalogEntry {
            name: "h4",
            graph: h4(),
            description: "chorded 4-cycle whose outer neighbors share a neighbor",
            expected_chi_s: None,
        },
        CatalogEntry {
            name: "petersen",
            graph: petersen(),
            description: "Petersen graph",
            expected_chi_s: None,
        },
    ]
}

pub fn by_name(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_claw_free;

    #[test]
    fn structural_predicates() {
        let p = prism3();
        assert!(p.n() == 6 && p.m() == 9 && p.is_cubic());
        let kd = k4_delta();
        assert!(kd.n() == 12 && kd.m() == 18 && kd.is_cubic());
        for e in entries() {
            assert!(e.graph.is_connected(), "{}", e.name);
            assert!(e.graph.is_subcubic(), "{}", e.name);
            if e.name != "petersen" {
                assert!(is_claw_free(&e.graph), "{}", e.name);
            }
        }
        assert!(h4().is_cubic() && h4().n() == 8);
        assert_eq!(h1().degree(0), 2);
        assert_eq!(h3().degree(7), 2);
    }
}
