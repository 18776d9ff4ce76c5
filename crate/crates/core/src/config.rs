//! Simulation configuration file.
//!
//! TOML, every field optional; omitted fields take the reference parameter
//! set (20 MHz / 200 mW RF, 10 MHz / 200 mW VLC, 30 m room, ...). Powers are
//! given in mW and noise density in dBm/Hz; everything else is SI, angles in
//! degrees. Unknown keys are rejected.
//!
//! ```toml
//! [rf]
//! bandwidth_hz = 20e6
//! tx_power_mw = 200
//!
//! [vlc]
//! fov_deg = 60
//! sinr_form = "uniform"      # uniform | literal | electrical
//!
//! [scenario]
//! placement = "fixed_two_pair"
//! d_tr_m = 1
//! d_p_m = 2
//! seed = 42
//! num_drops = 10000
//!
//! [scenario.orientation]
//! policy = "gaussian"
//! mean_deg = 0
//! std_dev_deg = 60
//!
//! [sweep]
//! axis = "d_tr"
//! values = [1, 3, 5, 10]
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::channel::{ConcentratorMode, PathlossModel, RfParams, VlcReceiverParams, VlcTxParams};
use crate::error::{Error, Result};
use crate::link::{SystemParams, VlcSinrForm};
use crate::montecarlo::SweepAxis;
use crate::scenario::{OrientationPolicy, Placement, ScenarioConfig};
use crate::units::{dbm_to_watts, mw_to_watts, watts_to_dbm, watts_to_mw};

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimConfig {
    pub rf: RfSection,
    pub vlc: VlcSection,
    pub scenario: ScenarioSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RfSection {
    pub carrier_frequency_hz: f64,
    pub bandwidth_hz: f64,
    pub tx_power_mw: f64,
    pub noise_density_dbm_per_hz: f64,
    pub pathloss_intercept_db: f64,
    pub pathloss_slope_db: f64,
    pub pathloss_model: PathlossModel,
    pub shadowing_sigma_db: f64,
}

impl Default for RfSection {
    fn default() -> Self {
        RfSection::from(&RfParams::default())
    }
}

impl From<&RfParams> for RfSection {
    fn from(p: &RfParams) -> Self {
        Self {
            carrier_frequency_hz: p.carrier_frequency_hz,
            bandwidth_hz: p.bandwidth_hz,
            tx_power_mw: watts_to_mw(p.tx_power_w),
            noise_density_dbm_per_hz: watts_to_dbm(p.noise_density_w_per_hz),
            pathloss_intercept_db: p.pathloss_intercept_db,
            pathloss_slope_db: p.pathloss_slope_db,
            pathloss_model: p.pathloss_model,
            shadowing_sigma_db: p.shadowing_sigma_db,
        }
    }
}

impl RfSection {
    pub fn to_params(&self) -> RfParams {
        RfParams {
            carrier_frequency_hz: self.carrier_frequency_hz,
            bandwidth_hz: self.bandwidth_hz,
            tx_power_w: mw_to_watts(self.tx_power_mw),
            noise_density_w_per_hz: dbm_to_watts(self.noise_density_dbm_per_hz),
            pathloss_intercept_db: self.pathloss_intercept_db,
            pathloss_slope_db: self.pathloss_slope_db,
            pathloss_model: self.pathloss_model,
            shadowing_sigma_db: self.shadowing_sigma_db,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VlcSection {
    pub tx_power_mw: f64,
    pub semi_angle_deg: f64,
    pub detector_area_m2: f64,
    pub filter_gain: f64,
    pub concentrator_gain: f64,
    pub concentrator_mode: ConcentratorMode,
    pub refractive_index: f64,
    pub fov_deg: f64,
    pub responsivity_a_per_w: f64,
    pub bandwidth_hz: f64,
    pub background_current_a: f64,
    pub noise_bw_factor_i2: f64,
    pub noise_bw_factor_i3: f64,
    pub capacitance_per_area_f_per_m2: f64,
    pub fet_noise_factor: f64,
    pub fet_transconductance_s: f64,
    pub open_loop_gain: f64,
    pub temperature_k: f64,
    pub sinr_form: VlcSinrForm,
}

impl Default for VlcSection {
    fn default() -> Self {
        let tx = VlcTxParams::default();
        let rx = VlcReceiverParams::default();
        Self {
            tx_power_mw: watts_to_mw(tx.optical_power_w),
            semi_angle_deg: tx.semi_angle_deg,
            detector_area_m2: rx.detector_area_m2,
            filter_gain: rx.filter_gain,
            concentrator_gain: rx.concentrator_gain,
            concentrator_mode: rx.concentrator_mode,
            refractive_index: rx.refractive_index,
            fov_deg: rx.fov_deg,
            responsivity_a_per_w: rx.responsivity,
            bandwidth_hz: rx.bandwidth_hz,
            background_current_a: rx.background_current_a,
            noise_bw_factor_i2: rx.noise_bw_factor_i2,
            noise_bw_factor_i3: rx.noise_bw_factor_i3,
            capacitance_per_area_f_per_m2: rx.capacitance_per_area,
            fet_noise_factor: rx.fet_noise_factor,
            fet_transconductance_s: rx.fet_transconductance_s,
            open_loop_gain: rx.open_loop_gain,
            temperature_k: rx.temperature_k,
            sinr_form: VlcSinrForm::default(),
        }
    }
}

impl VlcSection {
    pub fn to_params(&self) -> (VlcTxParams, VlcReceiverParams) {
        let tx = VlcTxParams {
            optical_power_w: mw_to_watts(self.tx_power_mw),
            semi_angle_deg: self.semi_angle_deg,
        };
        let rx = VlcReceiverParams {
            detector_area_m2: self.detector_area_m2,
            filter_gain: self.filter_gain,
            concentrator_gain: self.concentrator_gain,
            concentrator_mode: self.concentrator_mode,
            refractive_index: self.refractive_index,
            fov_deg: self.fov_deg,
            responsivity: self.responsivity_a_per_w,
            bandwidth_hz: self.bandwidth_hz,
            background_current_a: self.background_current_a,
            noise_bw_factor_i2: self.noise_bw_factor_i2,
            noise_bw_factor_i3: self.noise_bw_factor_i3,
            capacitance_per_area: self.capacitance_per_area_f_per_m2,
            fet_noise_factor: self.fet_noise_factor,
            fet_transconductance_s: self.fet_transconductance_s,
            open_loop_gain: self.open_loop_gain,
            temperature_k: self.temperature_k,
        };
        (tx, rx)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlacementKind {
    #[default]
    FixedTwoPair,
    UniformRandom,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioSection {
    pub room_dimension_m: f64,
    pub num_pairs: usize,
    pub placement: PlacementKind,
    pub d_tr_m: f64,
    pub d_p_m: f64,
    pub orientation: OrientationPolicy,
    pub seed: u64,
    pub num_drops: u64,
}

impl Default for ScenarioSection {
    fn default() -> Self {
        let s = ScenarioConfig::default();
        let (d_tr_m, d_p_m) = match s.placement {
            Placement::FixedTwoPair { d_tr, d_p } => (d_tr, d_p),
            Placement::UniformRandom => (1.0, 2.0),
        };
        Self {
            room_dimension_m: s.room_dimension_m,
            num_pairs: s.num_pairs,
            placement: PlacementKind::FixedTwoPair,
            d_tr_m,
            d_p_m,
            orientation: s.orientation,
            seed: s.seed,
            num_drops: s.num_drops,
        }
    }
}

impl ScenarioSection {
    pub fn to_scenario(&self) -> ScenarioConfig {
        ScenarioConfig {
            room_dimension_m: self.room_dimension_m,
            num_pairs: self.num_pairs,
            placement: match self.placement {
                PlacementKind::FixedTwoPair => Placement::FixedTwoPair {
                    d_tr: self.d_tr_m,
                    d_p: self.d_p_m,
                },
                PlacementKind::UniformRandom => Placement::UniformRandom,
            },
            orientation: self.orientation,
            seed: self.seed,
            num_drops: self.num_drops,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub axis: SweepAxis,
    pub values: Vec<f64>,
}

impl SimConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: SimConfig = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config serializes to TOML")
    }

    pub fn system_params(&self) -> SystemParams {
        let (vlc_tx, vlc_rx) = self.vlc.to_params();
        SystemParams {
            rf: self.rf.to_params(),
            vlc_tx,
            vlc_rx,
            vlc_sinr_form: self.vlc.sinr_form,
        }
    }

    pub fn scenario(&self) -> ScenarioConfig {
        self.scenario.to_scenario()
    }

    /// Checks every section; errors name the offending key.
    pub fn validate(&self) -> Result<()> {
        self.system_params().validate().map_err(|e| match e {
            Error::Parameter { name, reason } => Error::config(name, reason),
            other => other,
        })?;
        self.scenario().validate()?;
        if let Some(sweep) = &self.sweep {
            if sweep.values.is_empty() {
                return Err(Error::config("sweep.values", "at least one value is required"));
            }
            if let Some(v) = sweep.values.iter().find(|v| !v.is_finite()) {
                return Err(Error::config("sweep.values", format!("non-finite value {v}")));
            }
        }
        Ok(())
    }
}
