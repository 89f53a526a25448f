//! Scenario configuration, seeded runs, and sweep experiments.
//!
//! A scenario fixes the layout and construction parameters plus a seed list;
//! every statistic is reported as mean and sample standard deviation over the
//! seeds. Sweeps normalize each seed's metrics by that same seed's
//! normal-channel-only baseline, so the curves show the effect of the
//! short-cut channels alone.

use std::collections::HashSet;
use std::path::Path;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::geometry::{generate_nodes, Distribution, LayoutParams};
use crate::metrics::{characteristic_metrics, MetricsReport};
use crate::shortcut::{build_compound, build_sc_channel, ShortcutParams};
use crate::topology::CompoundTopology;

/// One named experiment setup.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub name: String,
    pub distribution: Distribution,
    pub n: usize,
    pub area_side: f64,
    pub r0: f64,
    pub alpha: f64,
    pub k: usize,
    pub radii_ratio: f64,
    pub seeds: Vec<u64>,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.name.is_empty() {
            return Err(Error::InvalidValue {
                key: "name".into(),
                msg: "must not be empty".into(),
            });
        }
        if self.n == 0 {
            return Err(Error::EmptyNodeSet);
        }
        if self.area_side.is_nan() || self.area_side <= 0.0 {
            return Err(Error::NonPositiveArea(self.area_side));
        }
        if self.r0.is_nan() || self.r0 <= 0.0 {
            return Err(Error::NonPositiveRange(self.r0));
        }
        if !(1.0..=4.0).contains(&self.alpha) {
            return Err(Error::AlphaOutOfRange(self.alpha));
        }
        if self.radii_ratio.is_nan() || self.radii_ratio <= 1.0 {
            return Err(Error::RadiiRatioOutOfRange(self.radii_ratio));
        }
        if self.seeds.is_empty() {
            return Err(Error::InvalidValue {
                key: "seeds".into(),
                msg: "must list at least one seed".into(),
            });
        }
        Ok(())
    }

    /// Parses the plain-text key-value format: one `key = value` per line,
    /// `#` comments and blank lines ignored. All nine keys are required:
    /// name, distribution, n, area_side_m, r0_m, alpha, k, radii_ratio,
    /// seeds (comma-separated).
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut name = None;
        let mut distribution = None;
        let mut n = None;
        let mut area_side = None;
        let mut r0 = None;
        let mut alpha = None;
        let mut k = None;
        let mut radii_ratio = None;
        let mut seeds = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::ConfigSyntax {
                line: idx + 1,
                msg: format!("expected `key = value`, got `{line}`"),
            })?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "name" => name = Some(value.to_string()),
                "distribution" => distribution = Some(Distribution::from_str(value)?),
                "n" => n = Some(parse_value(key, value)?),
                "area_side_m" => area_side = Some(parse_value(key, value)?),
                "r0_m" => r0 = Some(parse_value(key, value)?),
                "alpha" => alpha = Some(parse_value(key, value)?),
                "k" => k = Some(parse_value(key, value)?),
                "radii_ratio" => radii_ratio = Some(parse_value(key, value)?),
                "seeds" => seeds = Some(parse_seed_list(value)?),
                other => return Err(Error::UnknownKey(other.to_string())),
            }
        }

        let cfg = ScenarioConfig {
            name: name.ok_or(Error::MissingKey("name"))?,
            distribution: distribution.ok_or(Error::MissingKey("distribution"))?,
            n: n.ok_or(Error::MissingKey("n"))?,
            area_side: area_side.ok_or(Error::MissingKey("area_side_m"))?,
            r0: r0.ok_or(Error::MissingKey("r0_m"))?,
            alpha: alpha.ok_or(Error::MissingKey("alpha"))?,
            k: k.ok_or(Error::MissingKey("k"))?,
            radii_ratio: radii_ratio.ok_or(Error::MissingKey("radii_ratio"))?,
            seeds: seeds.ok_or(Error::MissingKey("seeds"))?,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// Applies one `key=value` override (the `--set` flag). Unknown keys and
    /// unparsable values are rejected with the key named in the error.
    pub fn apply_override(&mut self, key: &str, value: &str) -> Result<(), Error> {
        match key {
            "name" => self.name = value.to_string(),
            "distribution" => self.distribution = Distribution::from_str(value)?,
            "n" => self.n = parse_value(key, value)?,
            "area_side_m" => self.area_side = parse_value(key, value)?,
            "r0_m" => self.r0 = parse_value(key, value)?,
            "alpha" => self.alpha = parse_value(key, value)?,
            "k" => self.k = parse_value(key, value)?,
            "radii_ratio" => self.radii_ratio = parse_value(key, value)?,
            "seeds" => self.seeds = parse_seed_list(value)?,
            other => return Err(Error::UnknownKey(other.to_string())),
        }
        self.validate()
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, Error>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e: T::Err| Error::InvalidValue {
        key: key.to_string(),
        msg: format!("`{value}`: {e}"),
    })
}

fn parse_seed_list(value: &str) -> Result<Vec<u64>, Error> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_value("seeds", s))
        .collect()
}

/// Default seed list for the built-in scenarios.
fn default_seeds() -> Vec<u64> {
    (1..=20).collect()
}

/// The named benchmark scenarios: 1000 nodes over a 1 km square, alpha 1,
/// nine short-cut channels bounded at five times the normal range.
pub fn builtin_scenarios() -> Vec<ScenarioConfig> {
    let base = |name: &str, distribution, r0| ScenarioConfig {
        name: name.to_string(),
        distribution,
        n: 1000,
        area_side: 1000.0,
        r0,
        alpha: 1.0,
        k: 9,
        radii_ratio: 5.0,
        seeds: default_seeds(),
    };
    vec![
        base("Random-40", Distribution::Random, 40.0),
        base("Random-50", Distribution::Random, 50.0),
        base("Random-60", Distribution::Random, 60.0),
        base("Normal-60", Distribution::Normal, 60.0),
        base("Skewed-50", Distribution::Skewed, 50.0),
        base("Grid-35", Distribution::Grid, 35.0),
        base("Grid-60", Distribution::Grid, 60.0),
    ]
}

/// Case-insensitive lookup into [`builtin_scenarios`].
pub fn builtin_scenario(name: &str) -> Option<ScenarioConfig> {
    builtin_scenarios()
        .into_iter()
        .find(|c| c.name.eq_ignore_ascii_case(name))
}

/// Builds the scenario's topology for one seed and measures it.
pub fn run_scenario(cfg: &ScenarioConfig, seed: u64) -> Result<MetricsReport, Error> {
    let topology = build_topology(cfg, seed, cfg.k, cfg.radii_ratio)?;
    Ok(characteristic_metrics(&topology))
}

/// Generates the node set and the full channel stack for one seed.
pub fn build_topology(
    cfg: &ScenarioConfig,
    seed: u64,
    k: usize,
    radii_ratio: f64,
) -> Result<CompoundTopology, Error> {
    let nodes = generate_nodes(
        cfg.distribution,
        cfg.n,
        cfg.area_side,
        seed,
        LayoutParams::default(),
    )?;
    build_compound(
        nodes,
        cfg.r0,
        cfg.alpha,
        &ShortcutParams {
            radii_ratio,
            max_channels: k,
            rng_seed: seed,
        },
    )
}

/// One seed's incremental run: the final topology plus a metrics report for
/// every channel prefix (`reports_by_k[i]` covers channels `0..=i`).
#[derive(Debug, Clone)]
pub struct SeedRun {
    pub seed: u64,
    pub topology: CompoundTopology,
    pub reports_by_k: Vec<MetricsReport>,
}

/// Runs one seed incrementally: channel `i + 1` extends the `k = i` topology
/// rather than rebuilding, so the prefix topologies of one seed are nested.
pub fn run_seed_incremental(
    cfg: &ScenarioConfig,
    seed: u64,
    k_max: usize,
) -> Result<SeedRun, Error> {
    let params = ShortcutParams {
        radii_ratio: cfg.radii_ratio,
        max_channels: 0,
        rng_seed: seed,
    };
    params.validate()?;
    let nodes = generate_nodes(
        cfg.distribution,
        cfg.n,
        cfg.area_side,
        seed,
        LayoutParams::default(),
    )?;
    let mut topology = CompoundTopology::with_normal_channel(nodes, cfg.r0, cfg.alpha)?;
    let mut established: HashSet<(usize, usize)> = topology.pair_set();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);

    let mut reports = Vec::with_capacity(k_max + 1);
    reports.push(characteristic_metrics(&topology));
    for _ in 0..k_max {
        let channel = build_sc_channel(
            topology.nodes(),
            &mut established,
            cfg.r0,
            cfg.alpha,
            cfg.radii_ratio,
            &mut rng,
        );
        topology.push_channel(channel);
        reports.push(characteristic_metrics(&topology));
    }
    Ok(SeedRun {
        seed,
        topology,
        reports_by_k: reports,
    })
}

/// Mean / sample standard deviation over the seeds where a value is defined.
/// `n_samples` below the seed count flags pairwise exclusions; a single
/// sample reports a standard deviation of zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesStat {
    pub mean: f64,
    pub stddev: f64,
    pub n_samples: usize,
}

impl SeriesStat {
    fn from_values(values: &[f64]) -> Self {
        let n = values.len();
        if n == 0 {
            return Self {
                mean: f64::NAN,
                stddev: f64::NAN,
                n_samples: 0,
            };
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let stddev = if n > 1 {
            let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64;
            var.sqrt()
        } else {
            0.0
        };
        Self {
            mean,
            stddev,
            n_samples: n,
        }
    }
}

/// Per-metric ratio statistics for one sweep point: every metric is the
/// current value divided by the same seed's baseline, except `sc_ratio`,
/// which is the short-cut volume |SC| / |E_0| itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioSummary {
    pub clustering: SeriesStat,
    pub char_hop: SeriesStat,
    pub max_hop: SeriesStat,
    pub char_len: SeriesStat,
    pub max_len: SeriesStat,
    pub sc_ratio: SeriesStat,
}

impl RatioSummary {
    /// `(metric name, stat)` rows in fixed output order.
    pub fn rows(&self) -> [(&'static str, SeriesStat); 6] {
        [
            ("C_ratio", self.clustering),
            ("H_ratio", self.char_hop),
            ("M_ratio", self.max_hop),
            ("L_ratio", self.char_len),
            ("m_ratio", self.max_len),
            ("sc_ratio", self.sc_ratio),
        ]
    }
}

/// Normalizes each report by its same-seed baseline and aggregates over
/// seeds. Ratios whose numerator or denominator is undefined (or whose
/// denominator is zero) are excluded pairwise; `n_samples` records how many
/// seeds survived for each metric.
pub fn aggregate_seeds(
    reports: &[MetricsReport],
    baselines: &[MetricsReport],
) -> Result<RatioSummary, Error> {
    if reports.len() != baselines.len() {
        return Err(Error::AggregationMismatch {
            reports: reports.len(),
            baselines: baselines.len(),
        });
    }

    let ratio_of = |metric: fn(&MetricsReport) -> Option<f64>| -> Vec<f64> {
        reports
            .iter()
            .zip(baselines)
            .filter_map(|(r, b)| match (metric(r), metric(b)) {
                (Some(x), Some(y)) if y != 0.0 => Some(x / y),
                _ => None,
            })
            .collect()
    };

    let clustering = ratio_of(|r| Some(r.clustering).filter(|c| c.is_finite()));
    let char_hop = ratio_of(MetricsReport::char_hop);
    let max_hop = ratio_of(|r| r.max_hop().map(f64::from));
    let char_len = ratio_of(MetricsReport::char_len);
    let max_len = ratio_of(MetricsReport::max_len);
    let sc: Vec<f64> = reports
        .iter()
        .map(|r| r.cumulative_sc_ratio)
        .filter(|v| v.is_finite())
        .collect();

    Ok(RatioSummary {
        clustering: SeriesStat::from_values(&clustering),
        char_hop: SeriesStat::from_values(&char_hop),
        max_hop: SeriesStat::from_values(&max_hop),
        char_len: SeriesStat::from_values(&char_len),
        max_len: SeriesStat::from_values(&max_len),
        sc_ratio: SeriesStat::from_values(&sc),
    })
}

/// Which parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// Number of short-cut channels, `k = 0..=k_max`.
    Channels,
    /// Short-cut radius bound `radii_ratio` at fixed `k`.
    RadiiRatio,
}

impl SweepAxis {
    pub fn label(self) -> &'static str {
        match self {
            Self::Channels => "k",
            Self::RadiiRatio => "radii_ratio",
        }
    }
}

/// One sweep point: the axis value and the seed-aggregated ratio statistics.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub axis_value: f64,
    pub summary: RatioSummary,
}

/// A full sweep: one point per axis value, every point aggregated over the
/// same seed list.
#[derive(Debug, Clone)]
pub struct SweepSeries {
    pub axis: SweepAxis,
    pub points: Vec<SweepPoint>,
}

/// Sweeps the channel count: for each seed one incremental build is reused
/// across `k = 0..=k_max`, and every point is normalized by the same seed's
/// `k = 0` baseline. The `k = 0` point therefore reports ratios of exactly 1
/// wherever the baseline metric is defined and nonzero.
pub fn sweep_channels(cfg: &ScenarioConfig, k_max: usize) -> Result<SweepSeries, Error> {
    cfg.validate()?;
    let runs: Vec<SeedRun> = cfg
        .seeds
        .par_iter()
        .map(|&seed| run_seed_incremental(cfg, seed, k_max))
        .collect::<Result<_, _>>()?;
    sweep_points_from_runs(&runs, k_max).map(|points| SweepSeries {
        axis: SweepAxis::Channels,
        points,
    })
}

/// Builds the per-k sweep points from finished incremental runs.
pub fn sweep_points_from_runs(runs: &[SeedRun], k_max: usize) -> Result<Vec<SweepPoint>, Error> {
    let baselines: Vec<MetricsReport> = runs.iter().map(|r| r.reports_by_k[0].clone()).collect();
    (0..=k_max)
        .map(|k| {
            let reports: Vec<MetricsReport> =
                runs.iter().map(|r| r.reports_by_k[k].clone()).collect();
            aggregate_seeds(&reports, &baselines).map(|summary| SweepPoint {
                axis_value: k as f64,
                summary,
            })
        })
        .collect()
}

/// Sweeps the short-cut radius bound at fixed `k = cfg.k`. Every ratio value
/// reuses the same per-seed node set and normal channel; the short-cut
/// channels are rebuilt from scratch for each ratio. Normalization uses the
/// per-seed normal-channel-only baseline.
pub fn sweep_radii_ratio(cfg: &ScenarioConfig, ratios: &[f64]) -> Result<SweepSeries, Error> {
    cfg.validate()?;
    for &r in ratios {
        if r.is_nan() || r <= 1.0 {
            return Err(Error::RadiiRatioOutOfRange(r));
        }
    }

    struct SeedData {
        baseline: MetricsReport,
        by_ratio: Vec<MetricsReport>,
    }

    let per_seed: Vec<SeedData> = cfg
        .seeds
        .par_iter()
        .map(|&seed| -> Result<SeedData, Error> {
            let nodes = generate_nodes(
                cfg.distribution,
                cfg.n,
                cfg.area_side,
                seed,
                LayoutParams::default(),
            )?;
            let base_topology = CompoundTopology::with_normal_channel(nodes, cfg.r0, cfg.alpha)?;
            let baseline = characteristic_metrics(&base_topology);
            let by_ratio = ratios
                .par_iter()
                .map(|&ratio| -> Result<MetricsReport, Error> {
                    let mut topology = base_topology.clone();
                    let mut established: HashSet<(usize, usize)> = topology.pair_set();
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(1);
                    for _ in 0..cfg.k {
                        let channel = build_sc_channel(
                            topology.nodes(),
                            &mut established,
                            cfg.r0,
                            cfg.alpha,
                            ratio,
                            &mut rng,
                        );
                        topology.push_channel(channel);
                    }
                    Ok(characteristic_metrics(&topology))
                })
                .collect::<Result<_, _>>()?;
            Ok(SeedData { baseline, by_ratio })
        })
        .collect::<Result<_, _>>()?;

    let baselines: Vec<MetricsReport> = per_seed.iter().map(|d| d.baseline.clone()).collect();
    let points = ratios
        .iter()
        .enumerate()
        .map(|(i, &ratio)| {
            let reports: Vec<MetricsReport> =
                per_seed.iter().map(|d| d.by_ratio[i].clone()).collect();
            aggregate_seeds(&reports, &baselines).map(|summary| SweepPoint {
                axis_value: ratio,
                summary,
            })
        })
        .collect::<Result<_, _>>()?;

    Ok(SweepSeries {
        axis: SweepAxis::RadiiRatio,
        points,
    })
}

/// The default radius-bound grid: {2, 3, 5, 10, 15, 20} capped and completed
/// by the geometric maximum `floor(area_side * sqrt(2) / r0)` — beyond that
/// no pair of the square can be farther apart.
pub fn default_ratio_grid(r0: f64, area_side: f64) -> Vec<f64> {
    let max = (area_side * std::f64::consts::SQRT_2 / r0).floor();
    let mut grid: Vec<f64> = [2.0, 3.0, 5.0, 10.0, 15.0, 20.0]
        .into_iter()
        .filter(|&v| v < max)
        .collect();
    if max > 1.0 {
        grid.push(max);
    }
    grid
}
