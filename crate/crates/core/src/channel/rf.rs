//! RF pathloss and noise floor.
//!
//! Pathloss follows a log-distance law `PL(d) = X + Y·log10(d)` in dB, with
//! the indoor-hotspot line-of-sight slope as default. A carrier-dependent
//! variant adds the `20·log10(f_GHz)` term to the intercept.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{distance, Position};
use crate::units::{db_to_linear, dbm_to_watts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathlossModel {
    /// `X + Y·log10(d)`; the carrier frequency is ignored.
    #[default]
    LogDistance,
    /// `X + Y·log10(d) + 20·log10(f_c / 1 GHz)`.
    LogDistanceWithCarrier,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RfParams {
    pub carrier_frequency_hz: f64,
    pub bandwidth_hz: f64,
    pub tx_power_w: f64,
    /// Thermal noise power spectral density, W/Hz.
    pub noise_density_w_per_hz: f64,
    pub pathloss_intercept_db: f64,
    /// dB per decade of distance.
    pub pathloss_slope_db: f64,
    pub pathloss_model: PathlossModel,
    /// Log-normal shadowing standard deviation; 0 disables shadowing.
    pub shadowing_sigma_db: f64,
}

impl Default for RfParams {
    fn default() -> Self {
        Self {
            carrier_frequency_hz: 2.0e9,
            bandwidth_hz: 20.0e6,
            tx_power_w: 0.2,
            noise_density_w_per_hz: dbm_to_watts(-174.0),
            pathloss_intercept_db: 89.5,
            pathloss_slope_db: 16.9,
            pathloss_model: PathlossModel::LogDistance,
            shadowing_sigma_db: 0.0,
        }
    }
}

impl RfParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("rf.carrier_frequency_hz", self.carrier_frequency_hz),
            ("rf.bandwidth_hz", self.bandwidth_hz),
            ("rf.tx_power_mw", self.tx_power_w),
            ("rf.noise_density_dbm_per_hz", self.noise_density_w_per_hz),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::param(name, format!("must be finite and > 0, got {v}")));
            }
        }
        if !self.pathloss_intercept_db.is_finite() {
            return Err(Error::param("rf.pathloss_intercept_db", "must be finite"));
        }
        if !(self.pathloss_slope_db.is_finite() && self.pathloss_slope_db >= 0.0) {
            return Err(Error::param("rf.pathloss_slope_db", "must be finite and >= 0"));
        }
        if !(self.shadowing_sigma_db.is_finite() && self.shadowing_sigma_db >= 0.0) {
            return Err(Error::param("rf.shadowing_sigma_db", "must be finite and >= 0"));
        }
        Ok(())
    }

    /// Pathloss in dB at `d` meters.
    pub fn pathloss_db(&self, d: f64) -> f64 {
        let mut pl = self.pathloss_intercept_db + self.pathloss_slope_db * d.log10();
        if self.pathloss_model == PathlossModel::LogDistanceWithCarrier {
            pl += 20.0 * (self.carrier_frequency_hz / 1.0e9).log10();
        }
        pl
    }
}

/// Linear channel gain `10^(-PL(d)/10)` between two positions.
pub fn rf_channel_gain(tx: Position, rx: Position, params: &RfParams) -> Result<f64> {
    let d = distance(tx, rx);
    if d <= 0.0 {
        return Err(Error::DegenerateGeometry("zero-length RF link"));
    }
    Ok(db_to_linear(-params.pathloss_db(d)))
}

/// Thermal noise power over the RF bandwidth, in watts.
pub fn rf_noise_power(params: &RfParams) -> f64 {
    params.noise_density_w_per_hz * params.bandwidth_hz
}
