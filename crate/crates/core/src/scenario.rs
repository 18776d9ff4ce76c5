//! Terminal deployment and orientation policies.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{azimuths_for, AnglePair, Azimuth, Position};
use crate::link::{D2DPair, DeviceNode};
use crate::rng::MAX_PAIRS;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Placement {
    /// Two parallel links: pair 1 from (0,0) to (d_tr,0), pair 2 shifted by
    /// d_p along y.
    FixedTwoPair { d_tr: f64, d_p: f64 },
    /// Terminals i.i.d. uniform over the room, randomly matched into pairs.
    UniformRandom,
}

/// How the irradiance/incidence angles of each pair are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "policy", rename_all = "snake_case", deny_unknown_fields)]
pub enum OrientationPolicy {
    /// Both terminals point straight at each other.
    Optimal,
    /// Angles i.i.d. normal, untruncated.
    Gaussian { mean_deg: f64, std_dev_deg: f64 },
    /// Angles i.i.d. uniform on `[min_deg, max_deg]`.
    Random { min_deg: f64, max_deg: f64 },
    /// Angles i.i.d. uniform over the discrete grid `min, min+step, ..., max`.
    Grid { min_deg: f64, max_deg: f64, step_deg: f64 },
    /// The same angles for every pair and drop.
    Fixed { phi_deg: f64, psi_deg: f64 },
}

impl OrientationPolicy {
    pub const GAUSSIAN: OrientationPolicy = OrientationPolicy::Gaussian {
        mean_deg: 0.0,
        std_dev_deg: 60.0,
    };
    pub const RANDOM: OrientationPolicy = OrientationPolicy::Random {
        min_deg: 0.0,
        max_deg: 180.0,
    };
    pub const GRID: OrientationPolicy = OrientationPolicy::Grid {
        min_deg: -90.0,
        max_deg: 90.0,
        step_deg: 1.0,
    };

    pub fn name(&self) -> &'static str {
        match self {
            OrientationPolicy::Optimal => "optimal",
            OrientationPolicy::Gaussian { .. } => "gaussian",
            OrientationPolicy::Random { .. } => "random",
            OrientationPolicy::Grid { .. } => "grid",
            OrientationPolicy::Fixed { .. } => "fixed",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Err(Error::config("scenario.orientation", reason));
        match *self {
            OrientationPolicy::Optimal => Ok(()),
            OrientationPolicy::Gaussian { mean_deg, std_dev_deg } => {
                if !mean_deg.is_finite() || !(std_dev_deg.is_finite() && std_dev_deg >= 0.0) {
                    return bad("gaussian needs a finite mean and a finite std_dev_deg >= 0");
                }
                Ok(())
            }
            OrientationPolicy::Random { min_deg, max_deg } => {
                if !(min_deg.is_finite() && max_deg.is_finite() && min_deg <= max_deg) {
                    return bad("random needs finite min_deg <= max_deg");
                }
                Ok(())
            }
            OrientationPolicy::Grid {
                min_deg,
                max_deg,
                step_deg,
            } => {
                if !(min_deg.is_finite() && max_deg.is_finite() && min_deg <= max_deg) {
                    return bad("grid needs finite min_deg <= max_deg");
                }
                if !(step_deg.is_finite() && step_deg > 0.0) {
                    return bad("grid step_deg must be > 0");
                }
                Ok(())
            }
            OrientationPolicy::Fixed { phi_deg, psi_deg } => {
                if !(phi_deg.is_finite() && psi_deg.is_finite()) {
                    return bad("fixed angles must be finite");
                }
                Ok(())
            }
        }
    }

    /// Draws the angle pair of one link.
    pub fn draw_angles<R: Rng + ?Sized>(&self, rng: &mut R) -> AnglePair {
        match *self {
            OrientationPolicy::Optimal => AnglePair::BORESIGHT,
            OrientationPolicy::Gaussian { mean_deg, std_dev_deg } => {
                let n = Normal::new(mean_deg, std_dev_deg).expect("validated normal parameters");
                AnglePair::new(n.sample(rng), n.sample(rng))
            }
            OrientationPolicy::Random { min_deg, max_deg } => {
                AnglePair::new(rng.random_range(min_deg..=max_deg), rng.random_range(min_deg..=max_deg))
            }
            OrientationPolicy::Grid {
                min_deg,
                max_deg,
                step_deg,
            } => {
                let n = grid_len(min_deg, max_deg, step_deg);
                let mut pick = || min_deg + rng.random_range(0..n) as f64 * step_deg;
                let phi = pick();
                AnglePair::new(phi, pick())
            }
            OrientationPolicy::Fixed { phi_deg, psi_deg } => AnglePair::new(phi_deg, psi_deg),
        }
    }
}

fn grid_len(min_deg: f64, max_deg: f64, step_deg: f64) -> usize {
    ((max_deg - min_deg) / step_deg + 1e-9).floor() as usize + 1
}

/// `min, min + step, ...` up to and including `max` (within rounding).
pub fn angle_grid(min_deg: f64, max_deg: f64, step_deg: f64) -> Vec<f64> {
    (0..grid_len(min_deg, max_deg, step_deg))
        .map(|i| min_deg + i as f64 * step_deg)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub room_dimension_m: f64,
    pub num_pairs: usize,
    pub placement: Placement,
    pub orientation: OrientationPolicy,
    pub seed: u64,
    pub num_drops: u64,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            room_dimension_m: 30.0,
            num_pairs: 2,
            placement: Placement::FixedTwoPair { d_tr: 1.0, d_p: 2.0 },
            orientation: OrientationPolicy::Optimal,
            seed: 42,
            num_drops: 10_000,
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        let d = self.room_dimension_m;
        if !(d.is_finite() && d > 0.0) {
            return Err(Error::config("scenario.room_dimension_m", "must be finite and > 0"));
        }
        if self.num_pairs == 0 || self.num_pairs > MAX_PAIRS {
            return Err(Error::config(
                "scenario.num_pairs",
                format!("must lie in 1..={MAX_PAIRS}, got {}", self.num_pairs),
            ));
        }
        if self.num_drops == 0 || self.num_drops > crate::rng::MAX_DROPS {
            return Err(Error::config("scenario.num_drops", "must be >= 1"));
        }
        if let Placement::FixedTwoPair { d_tr, d_p } = self.placement {
            if self.num_pairs != 2 {
                return Err(Error::config(
                    "scenario.num_pairs",
                    "fixed_two_pair placement requires num_pairs = 2",
                ));
            }
            check_fixed_layout(d_tr, d_p, d)?;
        }
        self.orientation.validate()
    }

    /// Number of terminals in the room.
    pub fn num_terminals(&self) -> usize {
        2 * self.num_pairs
    }
}

fn check_fixed_layout(d_tr: f64, d_p: f64, room: f64) -> Result<()> {
    for (field, v) in [("scenario.d_tr_m", d_tr), ("scenario.d_p_m", d_p)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::config(field, format!("must be finite and > 0, got {v}")));
        }
        if v > room {
            return Err(Error::config(
                field,
                format!("{v} m does not fit in a room of {room} m"),
            ));
        }
    }
    Ok(())
}

fn unoriented(tx: Position, rx: Position) -> D2DPair {
    D2DPair::new(
        DeviceNode::new(tx, Azimuth::new(0.0)),
        DeviceNode::new(rx, Azimuth::new(0.0)),
    )
}

/// Parallel-link layout; azimuths are left at 0 for the orientation step.
pub fn deploy_fixed_two_pair(d_tr: f64, d_p: f64, room_dimension: f64) -> Result<Vec<D2DPair>> {
    check_fixed_layout(d_tr, d_p, room_dimension)?;
    Ok(vec![
        unoriented(Position::new(0.0, 0.0), Position::new(d_tr, 0.0)),
        unoriented(Position::new(0.0, d_p), Position::new(d_tr, d_p)),
    ])
}

/// `2 · num_pairs` terminals uniform over the room, matched at random:
/// the first of each matched couple transmits.
pub fn deploy_uniform_random<R: Rng + ?Sized>(config: &ScenarioConfig, rng: &mut R) -> Vec<D2DPair> {
    let d = config.room_dimension_m;
    let mut terminals: Vec<Position> = Vec::with_capacity(config.num_terminals());
    while terminals.len() < config.num_terminals() {
        let p = Position::new(rng.random_range(0.0..=d), rng.random_range(0.0..=d));
        // coincident terminals make every link through them degenerate
        if !terminals.contains(&p) {
            terminals.push(p);
        }
    }
    let mut order: Vec<usize> = (0..terminals.len()).collect();
    order.shuffle(rng);
    order
        .chunks_exact(2)
        .map(|c| unoriented(terminals[c[0]], terminals[c[1]]))
        .collect()
}

/// Azimuths for both terminals of a link such that the link angles follow
/// `policy`.
pub fn draw_orientation<R: Rng + ?Sized>(
    policy: &OrientationPolicy,
    tx: Position,
    rx: Position,
    rng: &mut R,
) -> Result<(Azimuth, Azimuth)> {
    azimuths_for(tx, rx, policy.draw_angles(rng))
}

/// Points the terminals of `pair` so that its own link has `angles`.
pub fn orient(pair: &mut D2DPair, angles: AnglePair) -> Result<()> {
    let (tx, rx) = azimuths_for(pair.tx.position, pair.rx.position, angles)?;
    pair.tx.azimuth = tx;
    pair.rx.azimuth = rx;
    Ok(())
}
