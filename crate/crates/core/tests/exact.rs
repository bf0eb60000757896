//! Exact solver against exhaustive assignment and known small values.

use std::collections::{BTreeSet, HashSet};

use clawcolor::corpus::catalog;
use clawcolor::recognition::iso_small;
use clawcolor::{exact_chi_s, strong_color_k, survey_extremal, ChiOutcome, Graph, Outcome, SolverConfig};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn conflicts(g: &Graph) -> Vec<(usize, usize)> {
    let e = g.edges();
    let touch = |a: (usize, usize), b: (usize, usize)| a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    let adj: HashSet<(usize, usize)> = e.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    let near = |a: (usize, usize), b: (usize, usize)| {
        [a.0, a.1].iter().any(|&x| [b.0, b.1].iter().any(|&y| adj.contains(&(x, y))))
    };
    let mut out = Vec::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if touch(e[i], e[j]) || near(e[i], e[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Whether any of the k^m assignments is a strong coloring.
fn brute_colorable(g: &Graph, k: usize) -> bool {
    let m = g.m();
    if m == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let pairs = conflicts(g);
    let mut a = vec![0usize; m];
    loop {
        if pairs.iter().all(|&(i, j)| a[i] != a[j]) {
            return true;
        }
        let mut p = 0;
        loop {
            if p == m {
                return false;
            }
            a[p] += 1;
            if a[p] < k {
                break;
            }
            a[p] = 0;
            p += 1;
        }
    }
}

fn small_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut out = Vec::new();
    while out.len() < 40 {
        let n = rng.gen_range(2..=8);
        let mut deg = vec![0; n];
        let mut edges = BTreeSet::new();
        let target = rng.gen_range(1..=8);
        for _ in 0..40 {
            if edges.len() == target {
                break;
            }
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && deg[u] < 3 && deg[v] < 3 && edges.insert((u.min(v), u.max(v))) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        out.push(Graph::from_edges(n, edges).unwrap());
    }
    out
}

fn assert_certificate(g: &Graph, c: &clawcolor::PartialColoring, k: usize) {
    assert!(c.is_total());
    for (i, j) in conflicts(g) {
        assert_ne!(c.get(i), c.get(j));
    }
    assert!(c.colors().iter().flatten().all(|&x| (1..=k as u8).contains(&x)));
}

#[test]
fn decisions_match_exhaustive_assignment() {
    let cfg = SolverConfig::default();
    for g in small_graphs() {
        for k in 1..=5 {
            let want = brute_colorable(&g, k);
            match strong_color_k(&g, k, &cfg).unwrap() {
                Outcome::Colorable(c) => {
                    assert!(want, "{:?} k = {k}", g.edges());
                    assert_certificate(&g, &c, k);
                }
                Outcome::Uncolorable => assert!(!want, "{:?} k = {k}", g.edges()),
                Outcome::Indeterminate => panic!("budget on a tiny graph"),
            }
        }
    }
}

#[test]
fn chi_is_monotone_and_tight() {
    let cfg = SolverConfig::default();
    for g in small_graphs() {
        let ChiOutcome::Exact { chi, certificate } = exact_chi_s(&g, &cfg).unwrap() else {
            panic!("no exact value");
        };
        assert_certificate(&g, &certificate, chi);
        for k in 0..chi {
            assert!(!brute_colorable(&g, k) || g.m() == 0);
        }
        for k in chi..chi + 3 {
            assert!(matches!(strong_color_k(&g, k, &cfg).unwrap(), Outcome::Colorable(_)));
        }
    }
}

#[test]
fn chi_is_invariant_under_relabeling() {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut graphs = small_graphs();
    graphs.extend(catalog::entries().into_iter().map(|e| e.graph).filter(|g| g.m() <= 30));
    for g in graphs {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let a = exact_chi_s(&g, &cfg).unwrap().value();
        let b = exact_chi_s(&g.relabel(&perm), &cfg).unwrap().value();
        assert_eq!(a, b, "{:?}", g.edges());
    }
}

#[test]
fn surveys() {
    let cfg = SolverConfig::default();
    let tri = survey_extremal(3, 3, &cfg).unwrap();
    assert!(tri.iter().any(|g| iso_small(g, &catalog::cycle(3)).unwrap()));
    let nine = survey_extremal(6, 9, &cfg).unwrap();
    assert_eq!(nine.len(), 1);
    assert!(iso_small(&nine[0], &catalog::prism3()).unwrap());
    assert!(survey_extremal(4, 9, &cfg).unwrap().is_empty());
}
