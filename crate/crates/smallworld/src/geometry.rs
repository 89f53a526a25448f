//! Seeded node placement over a square deployment area.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as Sample, Normal};

use crate::error::Error;

/// A node position, in metres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// Squared Euclidean distance. The coverage predicates compare this against a
/// squared range so that construction-time pruning and post-hoc invariant
/// scans agree bit-for-bit.
#[inline]
pub(crate) fn dist2(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    dx * dx + dy * dy
}

/// Euclidean distance between two points, in metres.
#[inline]
pub fn distance(a: Point, b: Point) -> f64 {
    dist2(a, b).sqrt()
}

/// Spatial layout of the node set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distribution {
    /// Coordinates i.i.d. uniform over the square.
    Random,
    /// Truncated bivariate Gaussian centred in the square.
    Normal,
    /// Per-axis `area * u^2` with `u` uniform — mass piles up near the origin corner.
    Skewed,
    /// Near-square lattice anchored at the corners; ignores the seed.
    Grid,
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "random" => Ok(Self::Random),
            "normal" => Ok(Self::Normal),
            "skewed" => Ok(Self::Skewed),
            "grid" => Ok(Self::Grid),
            other => Err(Error::UnknownDistribution(other.to_string())),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Random => "random",
            Self::Normal => "normal",
            Self::Skewed => "skewed",
            Self::Grid => "grid",
        })
    }
}

/// Tunables for the non-uniform layouts. `Default` matches the standard runs:
/// Gaussian sigma of one sixth of the side, quadratic skew.
#[derive(Debug, Clone, Copy)]
pub struct LayoutParams {
    /// Standard deviation of the normal layout as a fraction of `area_side`.
    pub sigma_fraction: f64,
    /// Exponent applied to the per-axis uniform draw of the skewed layout.
    pub skew_exponent: f64,
}

impl Default for LayoutParams {
    fn default() -> Self {
        Self {
            sigma_fraction: 1.0 / 6.0,
            skew_exponent: 2.0,
        }
    }
}

/// An immutable, seeded set of node positions. Node ids are the indices
/// `0..len()`; every coordinate lies within `[0, area_side]` on both axes.
#[derive(Debug, Clone)]
pub struct NodeSet {
    positions: Vec<Point>,
    area_side: f64,
    distribution: Option<Distribution>,
    seed: u64,
}

impl NodeSet {
    /// Wraps explicit positions (tests, bindings). The distribution tag is
    /// left empty to mark the set as hand-assembled.
    pub fn from_positions(positions: Vec<Point>, area_side: f64) -> Result<Self, Error> {
        if positions.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        if area_side.is_nan() || area_side <= 0.0 {
            return Err(Error::NonPositiveArea(area_side));
        }
        for p in &positions {
            let inside = (0.0..=area_side).contains(&p.x) && (0.0..=area_side).contains(&p.y);
            if !inside {
                return Err(Error::PositionOutOfBounds {
                    x: p.x,
                    y: p.y,
                    side: area_side,
                });
            }
        }
        Ok(Self {
            positions,
            area_side,
            distribution: None,
            seed: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    #[inline]
    pub fn position(&self, id: usize) -> Point {
        self.positions[id]
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn area_side(&self) -> f64 {
        self.area_side
    }

    /// `None` for hand-assembled sets.
    pub fn distribution(&self) -> Option<Distribution> {
        self.distribution
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Generates `n` node positions over an `area_side` x `area_side` square.
/// Identical arguments reproduce identical coordinates bit-for-bit; the grid
/// layout is deterministic and ignores the seed entirely.
pub fn generate_nodes(
    distribution: Distribution,
    n: usize,
    area_side: f64,
    seed: u64,
    params: LayoutParams,
) -> Result<NodeSet, Error> {
    if n == 0 {
        return Err(Error::EmptyNodeSet);
    }
    if area_side.is_nan() || area_side <= 0.0 {
        return Err(Error::NonPositiveArea(area_side));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let positions = match distribution {
        Distribution::Random => (0..n)
            .map(|_| Point {
                x: rng.random_range(0.0..=area_side),
                y: rng.random_range(0.0..=area_side),
            })
            .collect(),
        Distribution::Normal => {
            let center = area_side / 2.0;
            let sigma = area_side * params.sigma_fraction;
            let gauss = Normal::new(center, sigma).expect("sigma is finite and positive");
            (0..n)
                .map(|_| loop {
                    // Redraw whole points until one lands inside the square.
                    let x = gauss.sample(&mut rng);
                    let y = gauss.sample(&mut rng);
                    if (0.0..=area_side).contains(&x) && (0.0..=area_side).contains(&y) {
                        break Point { x, y };
                    }
                })
                .collect()
        }
        Distribution::Skewed => (0..n)
            .map(|_| {
                let u: f64 = rng.random();
                let v: f64 = rng.random();
                Point {
                    x: area_side * u.powf(params.skew_exponent),
                    y: area_side * v.powf(params.skew_exponent),
                }
            })
            .collect(),
        Distribution::Grid => grid_positions(n, area_side),
    };

    Ok(NodeSet {
        positions,
        area_side,
        distribution: Some(distribution),
        seed,
    })
}

/// Corner-anchored lattice: `r = ceil(sqrt(n))` rows by `c = ceil(n / r)`
/// columns, spacing `area_side / (max(r, c) - 1)` on both axes, filled
/// row-major with the surplus cells of the last row left empty.
fn grid_positions(n: usize, area_side: f64) -> Vec<Point> {
    let rows = (n as f64).sqrt().ceil() as usize;
    let cols = n.div_ceil(rows);
    let major = rows.max(cols);
    // x = area * j/(major-1) keeps the extreme coordinates exactly 0 and
    // area_side, so corner nodes sit exactly on the corners.
    let frac = |idx: usize| {
        if major > 1 {
            idx as f64 / (major - 1) as f64
        } else {
            0.0
        }
    };
    (0..n)
        .map(|p| Point {
            x: area_side * frac(p % cols),
            y: area_side * frac(p / cols),
        })
        .collect()
}
