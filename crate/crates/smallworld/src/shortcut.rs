//! Interference-free short-cut channel construction.
//!
//! A short-cut channel is grown from an explicit candidate list. A node pair
//! `(a, b)` is a candidate while all three conditions hold:
//!
//! 1. the pair is not linked on any established channel,
//! 2. adding `(a, b)` keeps the channel interference-free: in
//!    `SC ∪ {(a, b)}` no edge has a terminal covered by a different edge of
//!    that set (interference is scoped to the channel under construction —
//!    other channels operate on other frequencies),
//! 3. `R0 < distance(a, b) <= R0 * radii_ratio`.
//!
//! Each insertion draws uniformly at random from the candidates, then prunes
//! every pair the new edge invalidates. The channel is finished exactly when
//! no candidate remains, which makes it maximal: nothing addable is left.
//!
//! A short-cut link transmits at exactly its length (the minimum feasible
//! power), so its range equals `distance(a, b)` and its weight is
//! `distance(a, b)^alpha`.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::geometry::{dist2, distance, NodeSet};
use crate::topology::{CompoundTopology, Edge};

/// Parameters of the short-cut construction.
#[derive(Debug, Clone, Copy)]
pub struct ShortcutParams {
    /// Upper bound on short-cut length, as a multiple of `R0`. Must exceed 1.
    pub radii_ratio: f64,
    /// Number of short-cut channels to build.
    pub max_channels: usize,
    /// Seed for the uniform candidate draws.
    pub rng_seed: u64,
}

impl ShortcutParams {
    pub fn validate(&self) -> Result<(), Error> {
        if self.radii_ratio.is_nan() || self.radii_ratio <= 1.0 {
            return Err(Error::RadiiRatioOutOfRange(self.radii_ratio));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    a: usize,
    b: usize,
    len: f64,
}

/// True when `cand` cannot join a channel already holding `e`: the mutual
/// coverage check. Either terminal of one edge lying within the other edge's
/// range blocks the pair; the two directed coverage tests collapse into one
/// comparison against the larger of the two ranges, since
/// `d2 <= max(r_e, r_c)^2  <=>  d2 <= r_e^2 || d2 <= r_c^2`.
#[inline]
fn conflicts(nodes: &NodeSet, e: &Edge, cand: &Candidate) -> bool {
    let r = if e.range >= cand.len {
        e.range
    } else {
        cand.len
    };
    let r2 = r * r;
    let ea = nodes.position(e.a);
    let eb = nodes.position(e.b);
    let ca = nodes.position(cand.a);
    let cb = nodes.position(cand.b);
    dist2(ea, ca) <= r2 || dist2(ea, cb) <= r2 || dist2(eb, ca) <= r2 || dist2(eb, cb) <= r2
}

fn collect_candidates(
    nodes: &NodeSet,
    established: &HashSet<(usize, usize)>,
    sc_edges: &[Edge],
    r0: f64,
    radii_ratio: f64,
) -> Vec<Candidate> {
    let n = nodes.len();
    let hi = r0 * radii_ratio;
    let mut out = Vec::new();
    for a in 0..n {
        let pa = nodes.position(a);
        for b in (a + 1)..n {
            let d = distance(pa, nodes.position(b));
            if d <= r0 || d > hi {
                continue;
            }
            if established.contains(&(a, b)) {
                continue;
            }
            let cand = Candidate { a, b, len: d };
            if sc_edges.iter().all(|e| !conflicts(nodes, e, &cand)) {
                out.push(cand);
            }
        }
    }
    out
}

/// Pairs eligible to join the channel under construction, given the pairs
/// already linked anywhere (`established`) and the channel's current edges
/// (`sc_edges`, assumed interference-free). Pairs are returned in canonical
/// `(a, b)` order, ascending.
pub fn candidate_pairs(
    nodes: &NodeSet,
    established: &HashSet<(usize, usize)>,
    sc_edges: &[Edge],
    r0: f64,
    radii_ratio: f64,
) -> Vec<(usize, usize)> {
    collect_candidates(nodes, established, sc_edges, r0, radii_ratio)
        .into_iter()
        .map(|c| (c.a, c.b))
        .collect()
}

/// Grows one maximal interference-free short-cut channel.
///
/// `established` must hold every pair linked on earlier channels (the normal
/// channel included); each chosen pair is inserted into it. The draws come
/// from `rng`, one uniform index per insertion.
pub fn build_sc_channel(
    nodes: &NodeSet,
    established: &mut HashSet<(usize, usize)>,
    r0: f64,
    alpha: f64,
    radii_ratio: f64,
    rng: &mut impl Rng,
) -> Vec<Edge> {
    let mut candidates = collect_candidates(nodes, established, &[], r0, radii_ratio);
    let mut sc = Vec::new();
    while !candidates.is_empty() {
        let idx = rng.random_range(0..candidates.len());
        let chosen = candidates[idx];
        let edge = Edge::new(chosen.a, chosen.b, chosen.len, alpha);
        established.insert(edge.pair());
        // The new edge invalidates every remaining conflicting pair — the
        // chosen pair removes itself (its terminals are covered at distance
        // zero), so the loop terminates.
        candidates.retain(|c| !conflicts(nodes, &edge, c));
        sc.push(edge);
    }
    sc
}

/// Builds the full compound topology: the normal channel, then
/// `params.max_channels` short-cut channels in sequence, each maximal before
/// the next one starts. Later channels may come out empty once the area is
/// saturated; they are still recorded.
pub fn build_compound(
    nodes: NodeSet,
    r0: f64,
    alpha: f64,
    params: &ShortcutParams,
) -> Result<CompoundTopology, Error> {
    params.validate()?;
    let mut topology = CompoundTopology::with_normal_channel(nodes, r0, alpha)?;
    let mut established = topology.pair_set();
    // Stream 1 keeps the draw sequence disjoint from node generation even
    // when both run off the same scenario seed.
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    rng.set_stream(1);
    for _ in 0..params.max_channels {
        let channel = build_sc_channel(
            topology.nodes(),
            &mut established,
            r0,
            alpha,
            params.radii_ratio,
            &mut rng,
        );
        topology.push_channel(channel);
    }
    Ok(topology)
}
