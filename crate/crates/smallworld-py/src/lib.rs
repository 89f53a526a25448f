//! Python bindings: scenario configuration, topology construction, and
//! metric measurement, mirroring the `smallworld` crate's public API.
//!
//! Build with `cargo build -p smallworld-py --release`; the produced
//! `libsmallworld_py.so` imports as the `smallworld_py` module once renamed
//! or linked to `smallworld_py.so` on `sys.path` (see `python/smoke_test.py`).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use smallworld::experiments::{
    build_topology as core_build_topology, builtin_scenario, builtin_scenarios,
    run_seed_incremental, ScenarioConfig,
};
use smallworld::geometry::{generate_nodes as core_generate_nodes, Distribution, LayoutParams};
use smallworld::metrics::{characteristic_metrics, MetricsReport};
use smallworld::topology::CompoundTopology;

fn value_err(e: smallworld::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn distribution_name(d: Distribution) -> &'static str {
    match d {
        Distribution::Random => "random",
        Distribution::Normal => "normal",
        Distribution::Skewed => "skewed",
        Distribution::Grid => "grid",
    }
}

/// A named experiment configuration: node layout, normal-channel range,
/// path-loss exponent, short-cut channel count and radius bound, and seeds.
#[pyclass(name = "Scenario")]
struct PyScenario {
    inner: ScenarioConfig,
}

#[pymethods]
impl PyScenario {
    /// Loads a built-in scenario by name (case-insensitive), e.g. "Random-40".
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        builtin_scenario(name)
            .map(|inner| Self { inner })
            .ok_or_else(|| {
                PyValueError::new_err(format!(
                    "unknown scenario `{name}`; built-ins: {}",
                    Self::names().join(", ")
                ))
            })
    }

    /// Parses a `key = value` config text (same format as the CLI's --config).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        ScenarioConfig::parse(text)
            .map(|inner| Self { inner })
            .map_err(value_err)
    }

    /// Names of all built-in scenarios.
    #[staticmethod]
    fn names() -> Vec<String> {
        builtin_scenarios().iter().map(|c| c.name.clone()).collect()
    }

    /// Overrides one config key from its string form, e.g. set("k", "5").
    fn set(&mut self, key: &str, value: &str) -> PyResult<()> {
        self.inner.apply_override(key, value).map_err(value_err)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn distribution(&self) -> &'static str {
        distribution_name(self.inner.distribution)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn area_side_m(&self) -> f64 {
        self.inner.area_side
    }

    #[getter]
    fn r0_m(&self) -> f64 {
        self.inner.r0
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.alpha
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k
    }

    #[getter]
    fn radii_ratio(&self) -> f64 {
        self.inner.radii_ratio
    }

    #[getter]
    fn seeds(&self) -> Vec<u64> {
        self.inner.seeds.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "Scenario(name={:?}, distribution={:?}, n={}, area_side_m={}, r0_m={}, \
             alpha={}, k={}, radii_ratio={}, seeds=<{} values>)",
            self.inner.name,
            distribution_name(self.inner.distribution),
            self.inner.n,
            self.inner.area_side,
            self.inner.r0,
            self.inner.alpha,
            self.inner.k,
            self.inner.radii_ratio,
            self.inner.seeds.len()
        )
    }
}

/// A built compound topology: one normal channel plus short-cut channels
/// over a fixed node layout.
#[pyclass(name = "Topology")]
struct PyTopology {
    inner: CompoundTopology,
}

#[pymethods]
impl PyTopology {
    #[getter]
    fn node_count(&self) -> usize {
        self.inner.nodes().len()
    }

    /// Total channel count, the normal channel included.
    #[getter]
    fn channel_count(&self) -> usize {
        self.inner.channels().len()
    }

    /// Node coordinates in metres, indexed by node id.
    fn nodes(&self) -> Vec<(f64, f64)> {
        self.inner
            .nodes()
            .positions()
            .iter()
            .map(|p| (p.x, p.y))
            .collect()
    }

    /// Edge count per channel, element 0 being the normal channel.
    fn channel_sizes(&self) -> Vec<usize> {
        self.inner.channels().iter().map(Vec::len).collect()
    }

    /// Edges of one channel as (node_a, node_b, range_m, weight) tuples.
    fn edges(&self, channel: usize) -> PyResult<Vec<(usize, usize, f64, f64)>> {
        self.inner
            .channels()
            .get(channel)
            .map(|edges| {
                edges
                    .iter()
                    .map(|e| (e.a, e.b, e.range, e.weight))
                    .collect()
            })
            .ok_or_else(|| {
                PyValueError::new_err(format!(
                    "channel {channel} out of range (topology has {})",
                    self.inner.channels().len()
                ))
            })
    }

    /// Measures clustering, canonical-path statistics, and channel sizes.
    fn measure(&self) -> PyMetrics {
        PyMetrics {
            inner: characteristic_metrics(&self.inner),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "Topology(nodes={}, channel_sizes={:?})",
            self.inner.nodes().len(),
            self.channel_sizes()
        )
    }
}

/// Measured statistics of one topology. Path statistics are `None` when no
/// node pair is connected.
#[pyclass(name = "Metrics")]
struct PyMetrics {
    inner: MetricsReport,
}

#[pymethods]
impl PyMetrics {
    /// Mean clustering coefficient over all nodes.
    #[getter]
    fn clustering(&self) -> f64 {
        self.inner.clustering
    }

    /// Connected unordered node pairs.
    #[getter]
    fn connected_pairs(&self) -> u64 {
        self.inner.connected_pairs
    }

    /// Mean canonical-path hop count, or None if nothing is connected.
    #[getter]
    fn char_hop(&self) -> Option<f64> {
        self.inner.char_hop()
    }

    /// Largest canonical-path hop count.
    #[getter]
    fn max_hop(&self) -> Option<u32> {
        self.inner.max_hop()
    }

    /// Mean canonical-path length (summed edge weights).
    #[getter]
    fn char_len(&self) -> Option<f64> {
        self.inner.char_len()
    }

    /// Largest canonical-path length.
    #[getter]
    fn max_len(&self) -> Option<f64> {
        self.inner.max_len()
    }

    /// Edge count per channel, element 0 being the normal channel.
    #[getter]
    fn per_channel_edges(&self) -> Vec<usize> {
        self.inner.per_channel_edges.clone()
    }

    /// Short-cut edges as a fraction of normal-channel edges.
    #[getter]
    fn sc_ratio(&self) -> f64 {
        self.inner.cumulative_sc_ratio
    }

    fn __repr__(&self) -> String {
        format!(
            "Metrics(clustering={:.4}, char_hop={:?}, max_hop={:?}, char_len={:?}, \
             max_len={:?}, connected_pairs={}, sc_ratio={:.4})",
            self.inner.clustering,
            self.inner.char_hop(),
            self.inner.max_hop(),
            self.inner.char_len(),
            self.inner.max_len(),
            self.inner.connected_pairs,
            self.inner.cumulative_sc_ratio
        )
    }
}

/// Generates a node layout: `distribution` is one of random, normal, skewed
/// or grid. Returns (x, y) coordinates in metres, indexed by node id.
#[pyfunction]
fn generate_nodes(
    distribution: &str,
    n: usize,
    area_side_m: f64,
    seed: u64,
) -> PyResult<Vec<(f64, f64)>> {
    let dist: Distribution = distribution.parse().map_err(value_err)?;
    let nodes = core_generate_nodes(dist, n, area_side_m, seed, LayoutParams::default())
        .map_err(value_err)?;
    Ok(nodes.positions().iter().map(|p| (p.x, p.y)).collect())
}

/// Builds the compound topology for one scenario seed: the normal channel
/// plus the scenario's `k` short-cut channels.
#[pyfunction]
fn build_topology(scenario: &PyScenario, seed: u64) -> PyResult<PyTopology> {
    let cfg = &scenario.inner;
    core_build_topology(cfg, seed, cfg.k, cfg.radii_ratio)
        .map(|inner| PyTopology { inner })
        .map_err(value_err)
}

/// Builds and measures one scenario seed in one call.
#[pyfunction]
fn run_seed(scenario: &PyScenario, seed: u64) -> PyResult<PyMetrics> {
    smallworld::experiments::run_scenario(&scenario.inner, seed)
        .map(|inner| PyMetrics { inner })
        .map_err(value_err)
}

/// Measures one seed at every channel prefix 0..=k_max (defaults to the
/// scenario's k): element i covers the normal channel plus i short cuts.
#[pyfunction]
#[pyo3(signature = (scenario, seed, k_max = None))]
fn run_seed_curve(
    scenario: &PyScenario,
    seed: u64,
    k_max: Option<usize>,
) -> PyResult<Vec<PyMetrics>> {
    let cfg = &scenario.inner;
    let run = run_seed_incremental(cfg, seed, k_max.unwrap_or(cfg.k)).map_err(value_err)?;
    Ok(run
        .reports_by_k
        .into_iter()
        .map(|inner| PyMetrics { inner })
        .collect())
}

#[pymodule]
fn smallworld_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScenario>()?;
    m.add_class::<PyTopology>()?;
    m.add_class::<PyMetrics>()?;
    m.add_function(wrap_pyfunction!(generate_nodes, m)?)?;
    m.add_function(wrap_pyfunction!(build_topology, m)?)?;
    m.add_function(wrap_pyfunction!(run_seed, m)?)?;
    m.add_function(wrap_pyfunction!(run_seed_curve, m)?)?;
    Ok(())
}
