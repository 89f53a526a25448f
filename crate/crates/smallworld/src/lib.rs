//! Small-world physical topologies for multi-channel wireless networks.
//!
//! A compound topology stacks one *normal* channel — every node pair within a
//! fixed radio range `R0` is linked — with a sequence of *short-cut* channels
//! holding longer links. Each short-cut channel is grown by uniform random
//! draws from the pairs that are still eligible: not yet linked on any
//! channel, mutually non-interfering with the channel under construction, and
//! no longer than `R0 * radii_ratio`. The result is a physically realizable
//! small-world graph: high clustering from the normal channel, short paths
//! from the short-cuts.
//!
//! Layering:
//! * [`geometry`] — seeded node placement over a square area,
//! * [`topology`] — edges, channels, coverage predicates, union adjacency,
//! * [`shortcut`] — the interference-free short-cut channel construction,
//! * [`metrics`] — clustering coefficient and minimum-power canonical paths,
//! * [`experiments`] — scenario configs, seeded runs, k / radius sweeps,
//! * [`output`] — deterministic CSV renderers for all of the above.

pub mod error;
pub mod experiments;
pub mod geometry;
pub mod metrics;
pub mod output;
pub mod shortcut;
pub mod topology;

pub use error::Error;
pub use experiments::{
    aggregate_seeds, build_topology, builtin_scenario, builtin_scenarios, default_ratio_grid,
    run_scenario, run_seed_incremental, sweep_channels, sweep_radii_ratio, RatioSummary,
    ScenarioConfig, SeedRun, SeriesStat, SweepAxis, SweepPoint, SweepSeries,
};
pub use geometry::{distance, generate_nodes, Distribution, LayoutParams, NodeSet, Point};
pub use metrics::{
    characteristic_metrics, clustering_coefficient, shortest_paths_from, MetricsReport, PathStats,
};
pub use shortcut::{build_compound, build_sc_channel, candidate_pairs, ShortcutParams};
pub use topology::{
    build_normal_channel, covered_by_edge, covered_by_node, edge_weight, union_adjacency,
    Adjacency, CompoundTopology, Edge,
};
