//! Edges, channels, coverage predicates, and the compound multi-channel
//! topology.

use crate::error::Error;
use crate::geometry::{dist2, NodeSet, Point};

/// An undirected link between two node ids. Both endpoints transmit at
/// `range` metres on this link's channel; `weight` is the power cost
/// `range^alpha`. Canonical orientation is `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub range: f64,
    pub weight: f64,
}

impl Edge {
    /// Canonicalizes the endpoint order and derives the weight.
    pub fn new(a: usize, b: usize, range: f64, alpha: f64) -> Self {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Edge {
            a,
            b,
            range,
            weight: edge_weight(range, alpha),
        }
    }

    /// Endpoint pair in canonical order, for set membership.
    pub fn pair(&self) -> (usize, usize) {
        (self.a, self.b)
    }
}

/// Power cost of a link of the given range under path-loss exponent `alpha`.
pub fn edge_weight(range: f64, alpha: f64) -> f64 {
    range.powf(alpha)
}

/// True when the point `c` lies within `range` metres of the node at `a`
/// (boundary inclusive).
#[inline]
pub fn covered_by_node(c: Point, a: Point, range: f64) -> bool {
    dist2(c, a) <= range * range
}

/// True when node `c` is covered by either terminal of `e` at the edge's
/// range. Callers handle `c` being one of the terminals themselves; a
/// terminal trivially covers itself at distance zero.
pub fn covered_by_edge(nodes: &NodeSet, c: usize, e: &Edge) -> bool {
    let p = nodes.position(c);
    covered_by_node(p, nodes.position(e.a), e.range)
        || covered_by_node(p, nodes.position(e.b), e.range)
}

/// The normal channel: every pair within `r0` metres (boundary inclusive) is
/// linked, all links at range `r0`.
pub fn build_normal_channel(nodes: &NodeSet, r0: f64, alpha: f64) -> Vec<Edge> {
    let n = nodes.len();
    let mut edges = Vec::new();
    for a in 0..n {
        let pa = nodes.position(a);
        for b in (a + 1)..n {
            if covered_by_node(nodes.position(b), pa, r0) {
                edges.push(Edge::new(a, b, r0, alpha));
            }
        }
    }
    edges
}

/// A stack of channels over one node set: `channels()[0]` is the normal
/// channel, later entries are short-cut channels in construction order.
#[derive(Debug, Clone)]
pub struct CompoundTopology {
    nodes: NodeSet,
    r0: f64,
    alpha: f64,
    channels: Vec<Vec<Edge>>,
}

impl CompoundTopology {
    /// Builds the normal channel over `nodes`; short-cut channels are pushed
    /// afterwards. `alpha` must lie in `[1, 4]` and `r0` must be positive.
    pub fn with_normal_channel(nodes: NodeSet, r0: f64, alpha: f64) -> Result<Self, Error> {
        if r0.is_nan() || r0 <= 0.0 {
            return Err(Error::NonPositiveRange(r0));
        }
        if !(1.0..=4.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let normal = build_normal_channel(&nodes, r0, alpha);
        Ok(Self {
            nodes,
            r0,
            alpha,
            channels: vec![normal],
        })
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// All channels, normal channel first.
    pub fn channels(&self) -> &[Vec<Edge>] {
        &self.channels
    }

    /// Number of short-cut channels (i.e. channels beyond the normal one).
    pub fn shortcut_channel_count(&self) -> usize {
        self.channels.len() - 1
    }

    /// Appends a finished short-cut channel.
    pub fn push_channel(&mut self, channel: Vec<Edge>) {
        self.channels.push(channel);
    }

    /// Edges of every channel, in channel order.
    pub fn all_edges(&self) -> impl Iterator<Item = &Edge> {
        self.channels.iter().flatten()
    }

    /// Per-channel edge counts, normal channel first.
    pub fn channel_sizes(&self) -> Vec<usize> {
        self.channels.iter().map(Vec::len).collect()
    }

    /// Every linked pair across all channels. Construction never links the
    /// same pair twice, so the set size equals the total edge count.
    pub fn pair_set(&self) -> std::collections::HashSet<(usize, usize)> {
        self.all_edges().map(Edge::pair).collect()
    }
}

/// Neighbour lists over the union of all channels, with the per-link weight.
/// Every hop costs 1; the weight is the link's power cost.
#[derive(Debug, Clone)]
pub struct Adjacency {
    lists: Vec<Vec<(usize, f64)>>,
}

impl Adjacency {
    /// Builds symmetric neighbour lists from undirected weighted edges.
    pub fn from_edges<'a, I>(node_count: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut lists = vec![Vec::new(); node_count];
        for e in edges {
            lists[e.a].push((e.b, e.weight));
            lists[e.b].push((e.a, e.weight));
        }
        Self { lists }
    }

    pub fn node_count(&self) -> usize {
        self.lists.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.lists[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.lists[v].len()
    }

    /// Total number of directed adjacency entries (twice the edge count).
    pub fn entry_count(&self) -> usize {
        self.lists.iter().map(Vec::len).sum()
    }
}

/// Union adjacency across every channel of the topology.
pub fn union_adjacency(t: &CompoundTopology) -> Adjacency {
    Adjacency::from_edges(t.nodes().len(), t.all_edges())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{generate_nodes, Distribution, LayoutParams, Point};

    fn line_nodes(xs: &[f64], side: f64) -> NodeSet {
        NodeSet::from_positions(xs.iter().map(|&x| Point { x, y: 0.0 }).collect(), side).unwrap()
    }

    #[test]
    fn normal_channel_links_pairs_within_range() {
        // Nodes at x = 0, 30, 70 with R0 = 40: (0,1) at 30 m and (1,2) at
        // 40 m (boundary inclusive) are linked, (0,2) at 70 m is not.
        let nodes = line_nodes(&[0.0, 30.0, 70.0], 100.0);
        let edges = build_normal_channel(&nodes, 40.0, 1.0);
        let pairs: Vec<(usize, usize)> = edges.iter().map(Edge::pair).collect();
        assert_eq!(pairs, vec![(0, 1), (1, 2)]);
        for e in &edges {
            assert_eq!(e.range, 40.0);
            assert_eq!(e.weight, 40.0);
        }
    }

    #[test]
    fn edge_weight_matches_hand_values() {
        assert_eq!(edge_weight(40.0, 1.0), 40.0);
        assert_eq!(edge_weight(1.0, 4.0), 1.0);
        assert_eq!(edge_weight(10.0, 2.0), 100.0);
    }

    #[test]
    fn edge_canonicalizes_endpoint_order() {
        let e = Edge::new(7, 3, 10.0, 2.0);
        assert_eq!((e.a, e.b), (3, 7));
        assert_eq!(e.weight, 100.0);
    }

    #[test]
    fn coverage_predicates_match_hand_geometry() {
        let o = Point { x: 0.0, y: 0.0 };
        assert!(covered_by_node(Point { x: 30.0, y: 40.0 }, o, 50.0));
        assert!(covered_by_node(Point { x: 30.0, y: 40.0 }, o, 50.0 - 0.0)); // boundary
        assert!(!covered_by_node(Point { x: 30.0, y: 40.1 }, o, 50.0));

        // Edge (0,0)-(100,0) at range 100: x=150 is 50 m from the far
        // terminal (covered); x=250 is 150 m from it (not covered).
        let nodes = line_nodes(&[0.0, 100.0, 150.0, 250.0], 300.0);
        let e = Edge::new(0, 1, 100.0, 1.0);
        assert!(covered_by_edge(&nodes, 2, &e));
        assert!(!covered_by_edge(&nodes, 3, &e));
    }

    #[test]
    fn alpha_and_range_are_validated() {
        let nodes = line_nodes(&[0.0, 10.0], 100.0);
        assert!(matches!(
            CompoundTopology::with_normal_channel(nodes.clone(), 40.0, 0.5),
            Err(Error::AlphaOutOfRange(_))
        ));
        assert!(matches!(
            CompoundTopology::with_normal_channel(nodes.clone(), 40.0, 4.5),
            Err(Error::AlphaOutOfRange(_))
        ));
        assert!(matches!(
            CompoundTopology::with_normal_channel(nodes, 0.0, 2.0),
            Err(Error::NonPositiveRange(_))
        ));
    }

    #[test]
    fn union_adjacency_is_symmetric_and_complete() {
        let nodes =
            generate_nodes(Distribution::Random, 120, 500.0, 9, LayoutParams::default()).unwrap();
        let t = CompoundTopology::with_normal_channel(nodes, 80.0, 1.5).unwrap();
        let adj = union_adjacency(&t);
        let edge_count = t.channels()[0].len();
        assert_eq!(adj.entry_count(), 2 * edge_count, "handshake lemma");
        for v in 0..adj.node_count() {
            for &(u, w) in adj.neighbors(v) {
                assert!(
                    adj.neighbors(u).iter().any(|&(x, wx)| x == v && wx == w),
                    "missing reverse entry {u}->{v}"
                );
            }
        }
    }

    #[test]
    fn normal_channel_agrees_with_reference_pair_scan() {
        let nodes = generate_nodes(
            Distribution::Random,
            200,
            1000.0,
            3,
            LayoutParams::default(),
        )
        .unwrap();
        let r0 = 120.0;
        let edges = build_normal_channel(&nodes, r0, 1.0);
        let got: std::collections::HashSet<(usize, usize)> = edges.iter().map(Edge::pair).collect();
        let mut expected = std::collections::HashSet::new();
        for a in 0..nodes.len() {
            for b in (a + 1)..nodes.len() {
                let d = crate::geometry::distance(nodes.position(a), nodes.position(b));
                if d <= r0 {
                    expected.insert((a, b));
                }
            }
        }
        assert_eq!(got, expected);
    }

    #[test]
    fn random_40_edge_count_stays_in_band() {
        // n = 1000 over 1 km^2 at R0 = 40 m: the normal channel lands in
        // [2100, 2800] links for every seed.
        for seed in 1..=20 {
            let nodes = generate_nodes(
                Distribution::Random,
                1000,
                1000.0,
                seed,
                LayoutParams::default(),
            )
            .unwrap();
            let edges = build_normal_channel(&nodes, 40.0, 1.0);
            assert!(
                (2100..=2800).contains(&edges.len()),
                "seed {seed}: {} edges",
                edges.len()
            );
        }
    }
}
