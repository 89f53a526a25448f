//! Small-world metrics over the union graph of a compound topology.
//!
//! Path metrics use the canonical shortest path: minimal total weight first,
//! minimal hop count among weight-minimal paths second. Weight is the power
//! cost `range^alpha`, so the canonical path is the cheapest route to
//! transmit along, and adding links never increases any pair's length. On a
//! pure normal channel every weight equals `R0^alpha`, making weight- and
//! hop-minimality coincide: the canonical length of a pair is exactly its
//! hop count times `R0^alpha`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::topology::{union_adjacency, Adjacency, CompoundTopology};

/// Canonical path cost: accumulated weight first, then hops.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Cost {
    hop: u32,
    len: f64,
}

impl Cost {
    #[inline]
    fn better_than(self, other: Cost) -> bool {
        self.len < other.len || (self.len == other.len && self.hop < other.hop)
    }
}

/// Min-heap entry; order reversed so BinaryHeap pops the smallest cost.
struct QueueEntry {
    cost: Cost,
    node: usize,
}

impl PartialEq for QueueEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for QueueEntry {}

impl Ord for QueueEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .cost
            .len
            .total_cmp(&self.cost.len)
            .then_with(|| other.cost.hop.cmp(&self.cost.hop))
            .then_with(|| other.node.cmp(&self.node))
    }
}
impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical `(hop, length)` shortest paths from `source` to every node of
/// the union graph; `None` marks unreachable targets. The source maps to
/// `(0, 0.0)`. The canonical path minimizes `(length, hop)` lexicographically;
/// the returned tuples keep the conventional `(hop, length)` field order.
///
/// Dijkstra over the lexicographic cost is exact here because every
/// relaxation adds `(w > 0, 1)`, which strictly increases the key.
pub fn shortest_paths_from(adj: &Adjacency, source: usize) -> Vec<Option<(u32, f64)>> {
    let n = adj.node_count();
    let mut best: Vec<Option<Cost>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    best[source] = Some(Cost { hop: 0, len: 0.0 });
    heap.push(QueueEntry {
        cost: Cost { hop: 0, len: 0.0 },
        node: source,
    });

    while let Some(QueueEntry { cost, node }) = heap.pop() {
        if best[node].is_some_and(|b| b.better_than(cost)) {
            continue; // stale entry
        }
        for &(next, w) in adj.neighbors(node) {
            let cand = Cost {
                hop: cost.hop + 1,
                len: cost.len + w,
            };
            if best[next].is_none() || cand.better_than(best[next].unwrap()) {
                best[next] = Some(cand);
                heap.push(QueueEntry {
                    cost: cand,
                    node: next,
                });
            }
        }
    }

    best.into_iter()
        .map(|c| c.map(|c| (c.hop, c.len)))
        .collect()
}

/// Mean local clustering coefficient over *all* nodes: per node,
/// `links-among-neighbours / (d * (d - 1) / 2)`, zero for degree < 2.
pub fn clustering_coefficient(t: &CompoundTopology) -> f64 {
    let adj = union_adjacency(t);
    clustering_from_adjacency(&adj)
}

pub(crate) fn clustering_from_adjacency(adj: &Adjacency) -> f64 {
    let n = adj.node_count();
    let neigh: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut ids: Vec<usize> = adj.neighbors(v).iter().map(|&(u, _)| u).collect();
            ids.sort_unstable();
            ids
        })
        .collect();

    let per_node: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|v| {
            let nv = &neigh[v];
            let d = nv.len();
            if d < 2 {
                return 0.0;
            }
            // Count each neighbour-neighbour link once (u < x).
            let mut links = 0usize;
            for &u in nv {
                links += sorted_intersection_above(&neigh[u], nv, u);
            }
            links as f64 / (d as f64 * (d as f64 - 1.0) / 2.0)
        })
        .collect();

    per_node.iter().sum::<f64>() / n as f64
}

/// |{x in a ∩ b : x > floor}| for sorted slices.
fn sorted_intersection_above(a: &[usize], b: &[usize], floor: usize) -> usize {
    let mut i = a.partition_point(|&x| x <= floor);
    let mut j = b.partition_point(|&x| x <= floor);
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Aggregate path statistics over connected unordered pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathStats {
    /// Mean hop count (characteristic path hop).
    pub char_hop: f64,
    /// Maximum hop count.
    pub max_hop: u32,
    /// Mean path length (characteristic path length, power units).
    pub char_len: f64,
    /// Maximum path length.
    pub max_len: f64,
}

/// One full measurement of a compound topology.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    /// Mean local clustering coefficient, defined for every topology.
    pub clustering: f64,
    /// Path statistics; `None` when the topology has no connected pair.
    pub paths: Option<PathStats>,
    /// Number of connected unordered pairs.
    pub connected_pairs: u64,
    /// Per-channel edge counts, normal channel first.
    pub per_channel_edges: Vec<usize>,
    /// Total short-cut edges divided by the normal-channel edge count.
    pub cumulative_sc_ratio: f64,
}

impl MetricsReport {
    pub fn char_hop(&self) -> Option<f64> {
        self.paths.map(|p| p.char_hop)
    }
    pub fn max_hop(&self) -> Option<u32> {
        self.paths.map(|p| p.max_hop)
    }
    pub fn char_len(&self) -> Option<f64> {
        self.paths.map(|p| p.char_len)
    }
    pub fn max_len(&self) -> Option<f64> {
        self.paths.map(|p| p.max_len)
    }
}

struct SourceAgg {
    hops: u64,
    len: f64,
    pairs: u64,
    max_hop: u32,
    max_len: f64,
}

/// Computes the full metrics report: clustering plus canonical-path hop and
/// length statistics over all connected unordered pairs.
///
/// Sources run in parallel; the final reduction folds per-source partial sums
/// in node order (hop sums are integers, length sums are added in a fixed
/// order), so the result is independent of thread scheduling.
pub fn characteristic_metrics(t: &CompoundTopology) -> MetricsReport {
    let adj = union_adjacency(t);
    let n = adj.node_count();

    let per_source: Vec<SourceAgg> = (0..n)
        .into_par_iter()
        .map(|s| {
            let best = shortest_paths_from(&adj, s);
            let mut agg = SourceAgg {
                hops: 0,
                len: 0.0,
                pairs: 0,
                max_hop: 0,
                max_len: 0.0,
            };
            // Count each unordered pair once, from its smaller endpoint.
            for entry in &best[s + 1..] {
                if let Some((h, l)) = *entry {
                    agg.hops += u64::from(h);
                    agg.len += l;
                    agg.pairs += 1;
                    agg.max_hop = agg.max_hop.max(h);
                    if l > agg.max_len {
                        agg.max_len = l;
                    }
                }
            }
            agg
        })
        .collect();

    let mut hops = 0u64;
    let mut len = 0.0f64;
    let mut pairs = 0u64;
    let mut max_hop = 0u32;
    let mut max_len = 0.0f64;
    for agg in &per_source {
        hops += agg.hops;
        len += agg.len;
        pairs += agg.pairs;
        max_hop = max_hop.max(agg.max_hop);
        if agg.max_len > max_len {
            max_len = agg.max_len;
        }
    }

    let paths = (pairs > 0).then(|| PathStats {
        char_hop: hops as f64 / pairs as f64,
        max_hop,
        char_len: len / pairs as f64,
        max_len,
    });

    let sizes = t.channel_sizes();
    let e0 = sizes[0];
    let sc_total: usize = sizes[1..].iter().sum();
    let cumulative_sc_ratio = if e0 > 0 {
        sc_total as f64 / e0 as f64
    } else if sc_total == 0 {
        0.0
    } else {
        f64::NAN
    };

    MetricsReport {
        clustering: clustering_from_adjacency(&adj),
        paths,
        connected_pairs: pairs,
        per_channel_edges: sizes,
        cumulative_sc_ratio,
    }
}
