//! Shared reference implementations for the integration suites: exhaustive
//! path search, independent construction-rule scans, and small random graph
//! generation. Everything here is deliberately naive — correctness over
//! speed — so it can referee the optimized library code.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use smallworld::geometry::distance;
use smallworld::shortcut::candidate_pairs;
use smallworld::topology::{covered_by_edge, Adjacency, CompoundTopology, Edge};

// Canonical order: total length first, hop count second.
fn lex_less(a: (u32, f64), b: (u32, f64)) -> bool {
    a.1 < b.1 || (a.1 == b.1 && a.0 < b.0)
}

fn dfs(
    adj: &Adjacency,
    u: usize,
    hop: u32,
    len: f64,
    visited: &mut [bool],
    best: &mut [Option<(u32, f64)>],
) {
    for &(v, w) in adj.neighbors(u) {
        if visited[v] {
            continue;
        }
        // Accumulate outward from the source, one addition per edge, so the
        // sum association matches an incremental traversal exactly.
        let cand = (hop + 1, len + w);
        if best[v].is_none_or(|cur| lex_less(cand, cur)) {
            best[v] = Some(cand);
        }
        visited[v] = true;
        dfs(adj, v, cand.0, cand.1, visited, best);
        visited[v] = false;
    }
}

/// Enumerates every simple path from `source` and keeps, per target, the
/// least `(accumulated length, hop count)` in lexicographic order — the
/// cheapest route, fewest hops among equals. Exact but exponential — only
/// for small graphs.
pub fn brute_force_paths(adj: &Adjacency, source: usize) -> Vec<Option<(u32, f64)>> {
    let n = adj.node_count();
    let mut best = vec![None; n];
    best[source] = Some((0, 0.0));
    let mut visited = vec![false; n];
    visited[source] = true;
    dfs(adj, source, 0, 0.0, &mut visited, &mut best);
    best
}

/// A seeded random weighted graph: 2..=12 nodes, independent edges, weights
/// in [0.5, 50).
pub fn random_graph(seed: u64) -> Adjacency {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=12);
    let p = rng.random_range(0.1..0.45);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.random_bool(p) {
                let w = rng.random_range(0.5..50.0);
                edges.push(Edge::new(a, b, w, 1.0));
            }
        }
    }
    Adjacency::from_edges(n, edges.iter())
}

/// Scans every channel against the construction rules, independently of the
/// builder: normal links within `r0` at range `r0`; short-cut lengths in
/// `(r0, r0 * radii_ratio]` with range equal to length; no pair linked twice
/// anywhere; and inside each short-cut channel no edge covers another's
/// terminal (full mutual non-interference).
pub fn assert_construction_rules(t: &CompoundTopology, radii_ratio: f64) {
    let nodes = t.nodes();
    let r0 = t.r0();
    let hi = r0 * radii_ratio;
    let mut seen: HashSet<(usize, usize)> = HashSet::new();

    for e in &t.channels()[0] {
        assert!(
            seen.insert(e.pair()),
            "normal channel repeats {:?}",
            e.pair()
        );
        let d = distance(nodes.position(e.a), nodes.position(e.b));
        assert!(d <= r0, "normal link {:?} spans {d} > {r0}", e.pair());
        assert_eq!(e.range, r0, "normal link {:?}", e.pair());
    }

    for (i, channel) in t.channels().iter().enumerate().skip(1) {
        for e in channel {
            let d = distance(nodes.position(e.a), nodes.position(e.b));
            assert!(
                d > r0 && d <= hi,
                "channel {i} edge {:?} has length {d}, band ({r0}, {hi}]",
                e.pair()
            );
            assert_eq!(e.range, d, "channel {i} edge {:?}", e.pair());
            assert!(seen.insert(e.pair()), "pair {:?} linked twice", e.pair());
        }
        for e in channel {
            for f in channel {
                if e.pair() == f.pair() {
                    continue;
                }
                assert!(
                    !covered_by_edge(nodes, e.a, f) && !covered_by_edge(nodes, e.b, f),
                    "channel {i}: {:?} covers a terminal of {:?}",
                    f.pair(),
                    e.pair()
                );
            }
        }
    }
}

/// Asserts every short-cut channel was grown to exhaustion: judged against
/// the pairs established up to and including that channel, no further pair
/// is eligible.
pub fn assert_maximal_channels(t: &CompoundTopology, radii_ratio: f64) {
    let nodes = t.nodes();
    let mut established: HashSet<(usize, usize)> = t.channels()[0].iter().map(Edge::pair).collect();
    for (i, channel) in t.channels().iter().enumerate().skip(1) {
        established.extend(channel.iter().map(Edge::pair));
        let addable = candidate_pairs(nodes, &established, channel, t.r0(), radii_ratio);
        assert!(
            addable.is_empty(),
            "channel {i} is not maximal; could still add {addable:?}"
        );
    }
}

/// Counts triangles in the union graph (each triangle once).
pub fn triangle_count(t: &CompoundTopology) -> usize {
    let n = t.nodes().len();
    let mut neigh: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    for e in t.all_edges() {
        neigh[e.a].insert(e.b);
        neigh[e.b].insert(e.a);
        pairs.insert(e.pair());
    }
    pairs
        .iter()
        .map(|&(a, b)| {
            neigh[a]
                .iter()
                .filter(|&&c| c > b && neigh[b].contains(&c))
                .count()
        })
        .sum()
}
