//! Named experiments producing the standard figure tables.
//!
//! Each preset expands into a list of sweep jobs over the fixed two-pair
//! layout. Rows carry the job's fixed dimensions in `axis_name`, e.g.
//! `d_tr;d_p=2;policy=grid`, so a single CSV holds the whole experiment.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::link::SystemParams;
use crate::montecarlo::{run_sweep, Execution, SweepAxis, SweepResult};
use crate::scenario::{angle_grid, OrientationPolicy, Placement, ScenarioConfig};

pub const ANGLE_SWEEP_D_TR: [f64; 3] = [1.0, 5.0, 10.0];
pub const ANGLE_SWEEP_D_P: [f64; 2] = [2.0, 25.0];
pub const GRID_D_TR: [f64; 7] = [1.0, 3.0, 5.0, 10.0, 15.0, 20.0, 25.0];
pub const GRID_D_P: [f64; 3] = [2.0, 10.0, 25.0];
pub const COMPARISON_POLICIES: [OrientationPolicy; 3] = [
    OrientationPolicy::Optimal,
    OrientationPolicy::GAUSSIAN,
    OrientationPolicy::RANDOM,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentPreset {
    AngleSweepPhi,
    AngleSweepPsi,
    UsageRatioGrid,
    CapacityComparison,
}

impl ExperimentPreset {
    pub const ALL: [ExperimentPreset; 4] = [
        ExperimentPreset::AngleSweepPhi,
        ExperimentPreset::AngleSweepPsi,
        ExperimentPreset::UsageRatioGrid,
        ExperimentPreset::CapacityComparison,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentPreset::AngleSweepPhi => "angle_sweep_phi",
            ExperimentPreset::AngleSweepPsi => "angle_sweep_psi",
            ExperimentPreset::UsageRatioGrid => "usage_ratio_grid",
            ExperimentPreset::CapacityComparison => "capacity_comparison",
        }
    }

    pub fn jobs(self) -> Vec<SweepJob> {
        match self {
            ExperimentPreset::AngleSweepPhi | ExperimentPreset::AngleSweepPsi => {
                let axis = if self == ExperimentPreset::AngleSweepPhi {
                    SweepAxis::Phi
                } else {
                    SweepAxis::Psi
                };
                let values = angle_grid(-90.0, 90.0, 1.0);
                let mut jobs = Vec::new();
                for &d_tr in &ANGLE_SWEEP_D_TR {
                    for &d_p in &ANGLE_SWEEP_D_P {
                        jobs.push(SweepJob {
                            axis,
                            values: values.clone(),
                            d_tr,
                            d_p,
                            policy: OrientationPolicy::GRID,
                        });
                    }
                }
                jobs
            }
            ExperimentPreset::UsageRatioGrid => GRID_D_P
                .iter()
                .map(|&d_p| SweepJob {
                    axis: SweepAxis::DTr,
                    values: GRID_D_TR.to_vec(),
                    d_tr: GRID_D_TR[0],
                    d_p,
                    policy: OrientationPolicy::GRID,
                })
                .collect(),
            ExperimentPreset::CapacityComparison => {
                let mut jobs = Vec::new();
                for policy in COMPARISON_POLICIES {
                    for &d_p in &GRID_D_P {
                        jobs.push(SweepJob {
                            axis: SweepAxis::DTr,
                            values: GRID_D_TR.to_vec(),
                            d_tr: GRID_D_TR[0],
                            d_p,
                            policy,
                        });
                    }
                }
                jobs
            }
        }
    }
}

impl fmt::Display for ExperimentPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::config("preset", format!("unknown preset '{s}'")))
    }
}

/// One sweep of a preset: `axis` over `values` with the rest held fixed.
///
/// `d_tr` and `d_p` give the layout; whichever one is the swept axis is
/// overridden per point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepJob {
    pub axis: SweepAxis,
    pub values: Vec<f64>,
    pub d_tr: f64,
    pub d_p: f64,
    pub policy: OrientationPolicy,
}

impl SweepJob {
    pub fn label(&self) -> String {
        let mut label = self.axis.name().to_string();
        if self.axis != SweepAxis::DTr {
            label.push_str(&format!(";d_tr={}", self.d_tr));
        }
        if self.axis != SweepAxis::DP {
            label.push_str(&format!(";d_p={}", self.d_p));
        }
        label.push_str(&format!(";policy={}", self.policy.name()));
        label
    }

    /// Scenario for this job, inheriting room, seed and drop count from `base`.
    pub fn scenario(&self, base: &ScenarioConfig) -> ScenarioConfig {
        ScenarioConfig {
            num_pairs: 2,
            placement: Placement::FixedTwoPair {
                d_tr: self.d_tr,
                d_p: self.d_p,
            },
            orientation: self.policy,
            ..*base
        }
    }

    pub fn run(&self, base: &ScenarioConfig, params: &SystemParams, exec: Execution) -> Result<Vec<SweepResult>> {
        let label = self.label();
        let mut rows = run_sweep(self.axis, &self.values, &self.scenario(base), params, exec)?;
        for row in &mut rows {
            row.axis_name.clone_from(&label);
        }
        Ok(rows)
    }
}

pub fn run_preset(
    preset: ExperimentPreset,
    base: &ScenarioConfig,
    params: &SystemParams,
    exec: Execution,
) -> Result<Vec<SweepResult>> {
    let mut rows = Vec::new();
    for job in preset.jobs() {
        rows.extend(job.run(base, params, exec)?);
    }
    Ok(rows)
}
