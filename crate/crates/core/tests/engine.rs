use clawcolor::corpus::{catalog, enumerate_connected_subcubic, generators, random_claw_free_subcubic};
use clawcolor::engine::{strong_color_with, EngineConfig};
use clawcolor::recognition::is_claw_free;
use clawcolor::{verify_strong, Graph};

fn check_strict(g: &Graph) {
    let r = strong_color_with(g, &EngineConfig::strict())
        .unwrap_or_else(|e| panic!("{e:?}\nedges: {:?}", g.edges()));
    assert!(verify_strong(g, &r.coloring, true).is_empty());
    if !r.exceptional {
        assert!(r.colors_used <= 7);
    }
}

#[test]
fn all_small_claw_free_subcubic() {
    for n in 1..=10 {
        for g in enumerate_connected_subcubic(n).unwrap() {
            if is_claw_free(&g) {
                check_strict(&g);
            }
        }
    }
}

#[test]
fn random_graphs() {
    for seed in 0..300 {
        check_strict(&random_claw_free_subcubic(40 + (seed as usize % 200), seed));
    }
}

#[test]
fn expansions_and_rings() {
    for k in 3..40 {
        check_strict(&generators::expanded_prism(k).unwrap());
    }
    for k in 2..30 {
        check_strict(&generators::diamond_ring(k).unwrap());
    }
    check_strict(&generators::triangle_expand(&catalog::petersen()).unwrap());
    check_strict(&generators::triangle_expand(&catalog::k33()).unwrap());
}

#[test]
#[ignore]
fn case_histogram() {
    use std::collections::BTreeMap;
    let mut hist: BTreeMap<String, usize> = BTreeMap::new();
    let mut graphs = Vec::new();
    for n in 1..=10 {
        graphs.extend(enumerate_connected_subcubic(n).unwrap().into_iter().filter(is_claw_free));
    }
    for seed in 0..300 {
        graphs.push(random_claw_free_subcubic(40 + (seed as usize % 200), seed));
    }
    for k in 3..40 {
        graphs.push(generators::expanded_prism(k).unwrap());
    }
    for g in &graphs {
        let r = strong_color_with(g, &EngineConfig::strict()).unwrap();
        for (_, t) in r.trace() {
            *hist.entry(format!("{}: {}", t.case, t.detail.split(", sides").next().unwrap())).or_default() += 1;
        }
    }
    for (k, v) in hist {
        eprintln!("{v:6} {k}");
    }
}

mod stress {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Random simple cubic graph on `n` (even) vertices by pairing stubs
    /// until the pairing is simple.
    pub fn random_cubic(n: usize, rng: &mut ChaCha8Rng) -> Graph {
        loop {
            let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
            stubs.shuffle(rng);
            let mut edges: Vec<(usize, usize)> = stubs
                .chunks(2)
                .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
                .collect();
            edges.sort_unstable();
            let simple = edges.iter().all(|&(a, b)| a != b) && edges.windows(2).all(|w| w[0] != w[1]);
            if simple {
                let g = Graph::from_edges(n, edges).unwrap();
                if g.is_connected() {
                    return g;
                }
            }
        }
    }

    /// Subdivides `k` random edges joining different triangles.
    pub fn subdivide(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> Graph {
        let tri = |e: (usize, usize)| {
            g.neighbors(e.0)
                .iter()
                .any(|&x| x != e.1 && g.has_edge(x, e.1))
        };
        let mut cand: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&e| !tri(e)).collect();
        cand.shuffle(rng);
        cand.truncate(k);
        let mut n = g.n();
        let mut edges = Vec::new();
        for &e in g.edges() {
            if cand.contains(&e) {
                edges.push((e.0, n));
                edges.push((e.1, n));
                n += 1;
            } else {
                edges.push(e);
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    pub fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(rng);
        g.relabel(&perm)
    }

    /// Triangle expansion of a random loopless cubic multigraph: vertex
    /// `v` becomes a triangle on `3v..3v+3`, one corner per stub.
    pub fn expanded_multigraph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
        loop {
            let mut stubs: Vec<usize> = (0..3 * n).collect();
            stubs.shuffle(rng);
            let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
            if pairs.iter().any(|&(a, b)| a / 3 == b / 3) {
                continue;
            }
            // No vertex pair joined three times.
            let mut count = std::collections::HashMap::new();
            for &(a, b) in &pairs {
                *count.entry((a / 3).min(b / 3) * n + (a / 3).max(b / 3)).or_insert(0) += 1;
            }
            if count.values().any(|&c| c > 2) {
                continue;
            }
            let mut edges: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            for v in 0..n {
                edges.extend([(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]);
            }
            let g = Graph::from_edges(3 * n, edges).unwrap();
            if g.is_connected() {
                return g;
            }
        }
    }

    pub fn family(seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2 * rng.gen_range(2..12);
        let g = if seed.is_multiple_of(2) {
            generators::triangle_expand(&random_cubic(n, &mut rng)).unwrap()
        } else {
            expanded_multigraph(n, &mut rng)
        };
        let k = rng.gen_range(0..3);
        let g = subdivide(&g, k, &mut rng);
        shuffled(&g, &mut rng)
    }
}

#[test]
fn subdivided_expansions() {
    for seed in 0..2000 {
        let g = stress::family(seed);
        check_strict(&g);
        let r = strong_color_with(&g, &EngineConfig::strict()).unwrap();
        // The degree-2 subcase loop ends within three iterations.
        assert!(r.trace().all(|(_, t)| t.steps <= 3));
        // Recursive calls only ever land on graphs with a low-degree vertex,
        // which are handled without further recursion.
        assert!(r.trace().all(|(_, t)| t.depth <= 1));
    }
}

#[test]
fn recursion_stays_shallow_on_large_inputs() {
    for k in [50, 200, 1000] {
        let g = generators::expanded_prism(k).unwrap();
        let r = strong_color_with(&g, &EngineConfig::strict()).unwrap();
        assert!(r.trace().all(|(_, t)| t.depth <= 1));
        assert!(r.trace().count() <= 8, "{}", r.trace().count());
    }
}

#[test]
#[ignore]
fn stress_histogram() {
    use std::collections::BTreeMap;
    let mut hist: BTreeMap<String, usize> = BTreeMap::new();
    let mut max_steps = 0;
    for seed in 0..50_000 {
        let g = stress::family(seed);
        let r = strong_color_with(&g, &EngineConfig::strict())
            .unwrap_or_else(|e| panic!("seed {seed}: {e:?}"));
        for (_, t) in r.trace() {
            max_steps = max_steps.max(t.steps);
            if t.case == "CubicCutVertex" {
                continue;
            }
            *hist.entry(format!("{}: {}", t.case, t.detail)).or_default() += 1;
        }
    }
    for (k, v) in hist {
        eprintln!("{v:7} {k}");
    }
    eprintln!("max steps {max_steps}");
}

#[test]
#[ignore]
fn random_histogram() {
    use rand::SeedableRng;
    use std::collections::BTreeMap;
    let mut hist: BTreeMap<String, usize> = BTreeMap::new();
    for seed in 0..100_000u64 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = random_claw_free_subcubic(8 + (seed as usize % 60), seed);
        let g = stress::shuffled(&g, &mut rng);
        let r = strong_color_with(&g, &EngineConfig::strict())
            .unwrap_or_else(|e| panic!("seed {seed}: {e:?}"));
        for (_, t) in r.trace() {
            if t.case == "CubicCutVertex" {
                *hist.entry(format!("{}: {}", t.case, t.detail.contains("swapped"))).or_default() += 1;
                continue;
            }
            *hist.entry(format!("{}: {}", t.case, t.detail)).or_default() += 1;
        }
    }
    for (k, v) in hist {
        eprintln!("{v:7} {k}");
    }
}
