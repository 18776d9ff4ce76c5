//! Seeded Monte Carlo drops, sweeps, and aggregation.
//!
//! A drop is one deployment plus one orientation draw for every pair. Drops
//! are grouped into fixed-size chunks; each chunk is tallied in drop order
//! and chunk tallies are merged in chunk order, so the sequential and the
//! rayon paths produce bit-identical sums regardless of thread count.

use rand_distr::{Distribution, Normal};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::AnglePair;
use crate::link::{
    evaluate_link_shadowed, rf_sinr_shadowed, vlc_sinr, D2DPair, LinkBudget, Mode, Shadowing, SystemParams,
};
use crate::rng::{deployment_rng, seeded_rng, SimRng};
use crate::scenario::{angle_grid, deploy_fixed_two_pair, deploy_uniform_random, orient, Placement, ScenarioConfig};

/// Drops per reduction chunk.
const CHUNK: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon thread pool; falls back to sequential without the `parallel` feature.
    #[default]
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepAxis {
    DTr,
    DP,
    Phi,
    Psi,
}

impl SweepAxis {
    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::DTr => "d_tr",
            SweepAxis::DP => "d_p",
            SweepAxis::Phi => "phi",
            SweepAxis::Psi => "psi",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "d_tr" => Some(SweepAxis::DTr),
            "d_p" => Some(SweepAxis::DP),
            "phi" => Some(SweepAxis::Phi),
            "psi" => Some(SweepAxis::Psi),
            _ => None,
        }
    }

    pub fn is_angle(self) -> bool {
        matches!(self, SweepAxis::Phi | SweepAxis::Psi)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub drop_index: u64,
    pub per_pair: Vec<LinkBudget>,
}

/// Aggregated statistics of one sweep point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub axis_name: String,
    pub axis_value: f64,
    pub mean_capacity_rf_bps: f64,
    pub mean_capacity_vlc_bps: f64,
    pub mean_capacity_hybrid_bps: f64,
    pub vlc_usage_ratio: f64,
    pub num_drops: u64,
    pub seed: u64,
}

/// Running sums over link evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tally {
    pub evaluations: u64,
    pub sum_rf: f64,
    pub sum_vlc: f64,
    pub sum_hybrid: f64,
    pub vlc_selected: u64,
}

impl Tally {
    pub fn add(&mut self, b: &LinkBudget) {
        self.evaluations += 1;
        self.sum_rf += b.capacity_rf;
        self.sum_vlc += b.capacity_vlc;
        self.sum_hybrid += b.selected_capacity;
        if b.selected_mode == Mode::Vlc {
            self.vlc_selected += 1;
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.evaluations += other.evaluations;
        self.sum_rf += other.sum_rf;
        self.sum_vlc += other.sum_vlc;
        self.sum_hybrid += other.sum_hybrid;
        self.vlc_selected += other.vlc_selected;
    }

    pub fn mean_rf(&self) -> f64 {
        self.sum_rf / self.evaluations as f64
    }

    pub fn mean_vlc(&self) -> f64 {
        self.sum_vlc / self.evaluations as f64
    }

    pub fn mean_hybrid(&self) -> f64 {
        self.sum_hybrid / self.evaluations as f64
    }

    pub fn usage_ratio(&self) -> f64 {
        self.vlc_selected as f64 / self.evaluations as f64
    }
}

/// Which link angle an angle sweep pins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PinnedAngle {
    Irradiance,
    Incidence,
}

/// One fully specified point of a sweep.
///
/// For angle points the reference pair (pair 0) has one angle pinned and the
/// other enumerated over `-90..=90` in 1° steps inside every drop; all other
/// pairs follow the scenario's orientation policy, and only the reference
/// pair is tallied.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub scenario: ScenarioConfig,
    pub pinned: Option<(PinnedAngle, f64)>,
}

impl SweepPoint {
    pub fn plain(scenario: ScenarioConfig) -> Self {
        Self { scenario, pinned: None }
    }

    pub fn at(base: &ScenarioConfig, axis: SweepAxis, value: f64) -> Result<Self> {
        let mut scenario = *base;
        let mut pinned = None;
        match axis {
            SweepAxis::DTr | SweepAxis::DP => {
                let Placement::FixedTwoPair { d_tr, d_p } = base.placement else {
                    return Err(Error::config(
                        "sweep.axis",
                        "distance sweeps need the fixed_two_pair placement",
                    ));
                };
                scenario.placement = if axis == SweepAxis::DTr {
                    Placement::FixedTwoPair { d_tr: value, d_p }
                } else {
                    Placement::FixedTwoPair { d_tr, d_p: value }
                };
            }
            SweepAxis::Phi | SweepAxis::Psi => {
                if !(value.is_finite() && value.abs() <= 180.0) {
                    return Err(Error::config(
                        "sweep.values",
                        format!("angle {value} outside [-180, 180]"),
                    ));
                }
                let kind = if axis == SweepAxis::Phi {
                    PinnedAngle::Irradiance
                } else {
                    PinnedAngle::Incidence
                };
                pinned = Some((kind, value));
            }
        }
        scenario.validate()?;
        Ok(Self { scenario, pinned })
    }
}

/// Non-swept angle values averaged over in angle sweeps.
pub fn second_angle_grid() -> Vec<f64> {
    angle_grid(-90.0, 90.0, 1.0)
}

struct DropState {
    pairs: Vec<D2DPair>,
    shadowing: Option<Shadowing>,
}

fn deploy_and_orient(config: &ScenarioConfig, params: &SystemParams, drop_index: u64) -> Result<DropState> {
    let mut pairs = match config.placement {
        Placement::FixedTwoPair { d_tr, d_p } => deploy_fixed_two_pair(d_tr, d_p, config.room_dimension_m)?,
        Placement::UniformRandom => deploy_uniform_random(config, &mut deployment_rng(config.seed, drop_index)),
    };
    let mut rngs: Vec<SimRng> = (0..pairs.len())
        .map(|i| seeded_rng(config.seed, drop_index, i))
        .collect();
    for (pair, rng) in pairs.iter_mut().zip(rngs.iter_mut()) {
        let angles = config.orientation.draw_angles(rng);
        orient(pair, angles)?;
    }
    let sigma = params.rf.shadowing_sigma_db;
    let shadowing = if sigma > 0.0 {
        let normal = Normal::new(0.0, sigma).map_err(|e| Error::param("rf.shadowing_sigma_db", e.to_string()))?;
        Some(Shadowing::from_fn(pairs.len(), |_tx, rx| normal.sample(&mut rngs[rx])))
    } else {
        None
    };
    Ok(DropState { pairs, shadowing })
}

/// One Monte Carlo drop: deployment, orientation, and the link budget of
/// every pair under all three band strategies.
pub fn run_drop(config: &ScenarioConfig, params: &SystemParams, drop_index: u64) -> Result<TrialResult> {
    let state = deploy_and_orient(config, params, drop_index)?;
    let per_pair = (0..state.pairs.len())
        .map(|n| evaluate_link_shadowed(n, &state.pairs, params, state.shadowing.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    Ok(TrialResult { drop_index, per_pair })
}

/// Link budgets of the reference pair for every value of the non-pinned angle.
pub fn run_angle_drop(
    config: &ScenarioConfig,
    params: &SystemParams,
    pinned: (PinnedAngle, f64),
    second: &[f64],
    drop_index: u64,
) -> Result<Vec<LinkBudget>> {
    let DropState { mut pairs, shadowing } = deploy_and_orient(config, params, drop_index)?;
    // the reference pair's orientation does not affect its own RF SINR
    let sinr_rf = rf_sinr_shadowed(0, &pairs, &params.rf, shadowing.as_ref())?;
    let (kind, value) = pinned;
    second
        .iter()
        .map(|&s| {
            let angles = match kind {
                PinnedAngle::Irradiance => AnglePair::new(value, s),
                PinnedAngle::Incidence => AnglePair::new(s, value),
            };
            orient(&mut pairs[0], angles)?;
            let sinr_vlc = vlc_sinr(0, &pairs, &params.vlc_tx, &params.vlc_rx, params.vlc_sinr_form)?;
            LinkBudget::from_sinrs(sinr_rf, sinr_vlc, params.rf.bandwidth_hz, params.vlc_rx.bandwidth_hz)
        })
        .collect()
}

/// The link budgets a sweep point tallies for one drop.
pub fn evaluate_drop(
    point: &SweepPoint,
    params: &SystemParams,
    second: &[f64],
    drop_index: u64,
) -> Result<Vec<LinkBudget>> {
    match point.pinned {
        None => run_drop(&point.scenario, params, drop_index).map(|t| t.per_pair),
        Some(p) => run_angle_drop(&point.scenario, params, p, second, drop_index),
    }
}

fn tally_chunk(point: &SweepPoint, params: &SystemParams, second: &[f64], chunk: u64) -> Result<Tally> {
    let start = chunk * CHUNK;
    let end = (start + CHUNK).min(point.scenario.num_drops);
    let mut tally = Tally::default();
    for drop_index in start..end {
        for b in evaluate_drop(point, params, second, drop_index)? {
            tally.add(&b);
        }
    }
    Ok(tally)
}

/// Runs `num_drops` drops of one sweep point and reduces them.
pub fn run_point(point: &SweepPoint, params: &SystemParams, exec: Execution) -> Result<Tally> {
    params.validate()?;
    point.scenario.validate()?;
    let second = second_angle_grid();
    let chunks = point.scenario.num_drops.div_ceil(CHUNK);
    let work = |c: u64| tally_chunk(point, params, &second, c);

    let partials: Vec<Tally> = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..chunks).into_par_iter().map(work).collect::<Result<_>>()?,
        _ => (0..chunks).map(work).collect::<Result<_>>()?,
    };
    let mut total = Tally::default();
    for t in &partials {
        total.merge(t);
    }
    Ok(total)
}

pub fn summarize(
    axis_name: impl Into<String>,
    axis_value: f64,
    scenario: &ScenarioConfig,
    tally: &Tally,
) -> SweepResult {
    SweepResult {
        axis_name: axis_name.into(),
        axis_value,
        mean_capacity_rf_bps: tally.mean_rf(),
        mean_capacity_vlc_bps: tally.mean_vlc(),
        mean_capacity_hybrid_bps: tally.mean_hybrid(),
        vlc_usage_ratio: tally.usage_ratio(),
        num_drops: scenario.num_drops,
        seed: scenario.seed,
    }
}

/// Sweeps `axis` over `values`, running `config.num_drops` drops per point.
pub fn run_sweep(
    axis: SweepAxis,
    values: &[f64],
    config: &ScenarioConfig,
    params: &SystemParams,
    exec: Execution,
) -> Result<Vec<SweepResult>> {
    if values.is_empty() {
        return Err(Error::config("sweep.values", "at least one axis value is required"));
    }
    values
        .iter()
        .map(|&v| {
            let point = SweepPoint::at(config, axis, v)?;
            let tally = run_point(&point, params, exec)?;
            Ok(summarize(axis.name(), v, &point.scenario, &tally))
        })
        .collect()
}
