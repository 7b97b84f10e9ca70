//! Shared test support: seeded random graph corpora and a naive reference
//! oracle written straight from the definitions, independent of the solver
//! internals (no bitmask contexts, no pruning, no caps).

#![allow(dead_code)]

use betapack_core::{Graph, Rational, VertexSet};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn vs(xs: &[usize]) -> VertexSet {
    xs.iter().copied().collect()
}

/// 4-cycle 0-1-3-2-0 with an apex 4 adjacent to 2 and 3.
pub fn house() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 3), (3, 2), (2, 0), (4, 2), (4, 3)]).unwrap()
}

pub fn r(n: u64, d: u64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// Random connected graph: a random tree plus independent extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra_p: f64) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) && rng.gen_bool(extra_p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Deterministic corpus of `count` connected graphs with orders cycling
/// through `2..=n_max` and varying densities.
pub fn connected_corpus(seed: u64, count: usize, n_max: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let densities = [0.0, 0.15, 0.35, 0.6];
    (0..count)
        .map(|i| {
            let n = 2 + i % (n_max - 1);
            random_connected_graph(&mut rng, n, densities[i % densities.len()])
        })
        .collect()
}

/// The given betas interleaved with midpoints of consecutive pairs, plus a
/// midpoint between 0 and the first value; ascending.
pub fn with_midpoints(betas: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(betas.len() * 2);
    for (i, b) in betas.iter().enumerate() {
        let mid = if i == 0 {
            Rational::midpoint(Rational::zero(), *b)
        } else {
            Rational::midpoint(betas[i - 1], *b)
        };
        if !mid.is_zero() && &mid != b {
            out.push(mid);
        }
        out.push(*b);
    }
    out
}

// ---------------------------------------------------------------------------
// Naive oracle: everything below iterates plain subsets and re-checks the
// definitions literally.
// ---------------------------------------------------------------------------

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

pub fn naive_packing_property(g: &Graph, s: &[usize], beta: Rational) -> bool {
    for v in 0..g.n() {
        if s.contains(&v) {
            continue;
        }
        let deg = g.degree(v) as u128;
        let cnt = g.neighbors(v).filter(|u| s.contains(u)).count() as u128;
        if cnt * beta.den() as u128 > beta.num() as u128 * deg {
            return false;
        }
    }
    true
}

/// All maximal beta-packing sets by definition: proper property sets with no
/// proper property strict superset; sorted by cardinality descending then
/// lexicographically ascending.
pub fn naive_maximal_packings(g: &Graph, beta: Rational) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 16, "naive oracle is for small graphs");
    let mut property_sets: Vec<Vec<usize>> = Vec::new();
    for mask in 0..(1u64 << n) - 1 {
        let s = members(mask, n);
        if naive_packing_property(g, &s, beta) {
            property_sets.push(s);
        }
    }
    let is_strict_subset =
        |a: &[usize], b: &[usize]| -> bool { a.len() < b.len() && a.iter().all(|x| b.contains(x)) };
    let mut maximal: Vec<Vec<usize>> = property_sets
        .iter()
        .filter(|s| !property_sets.iter().any(|t| is_strict_subset(s, t)))
        .cloned()
        .collect();
    maximal.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    maximal
}

/// Maximum cardinality over proper property sets, lexicographically smallest
/// witness.
pub fn naive_pack(g: &Graph, beta: Rational) -> (usize, Vec<usize>) {
    let n = g.n();
    assert!(n <= 16);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0..(1u64 << n) - 1 {
        let s = members(mask, n);
        if !naive_packing_property(g, &s, beta) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((sz, w)) => s.len() > *sz || (s.len() == *sz && s < *w),
        };
        if better {
            best = Some((s.len(), s));
        }
    }
    best.expect("the empty set always qualifies")
}

pub fn naive_domination_property(g: &Graph, s: &[usize], alpha: Rational) -> bool {
    for v in 0..g.n() {
        if s.contains(&v) {
            continue;
        }
        let deg = g.degree(v) as u128;
        let cnt = g.neighbors(v).filter(|u| s.contains(u)).count() as u128;
        if cnt * (alpha.den() as u128) < alpha.num() as u128 * deg {
            return false;
        }
    }
    true
}

/// Minimum cardinality over all subsets (V included), lexicographically
/// smallest witness.
pub fn naive_gamma(g: &Graph, alpha: Rational) -> (usize, Vec<usize>) {
    let n = g.n();
    assert!(n <= 16);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0..=(1u64 << n) - 1 {
        let s = members(mask, n);
        if !naive_domination_property(g, &s, alpha) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((sz, w)) => s.len() < *sz || (s.len() == *sz && s < *w),
        };
        if better {
            best = Some((s.len(), s));
        }
    }
    best.expect("V always dominates")
}
