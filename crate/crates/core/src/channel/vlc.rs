//! Line-of-sight optical channel between an LED and a photodetector, and
//! the receiver noise model (preamplifier thermal noise plus shot noise).
//!
//! The LED is a generalised Lambertian emitter of order `m`; the receiver
//! collects through an optical filter and a concentrator that only passes
//! light arriving inside its field of view. The equivalent noise bandwidth
//! is taken equal to the modulation bandwidth.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::AnglePair;
use crate::units::{BOLTZMANN, ELEMENTARY_CHARGE};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VlcTxParams {
    pub optical_power_w: f64,
    /// Semi-angle at half power, degrees.
    pub semi_angle_deg: f64,
}

impl Default for VlcTxParams {
    fn default() -> Self {
        Self {
            optical_power_w: 0.2,
            semi_angle_deg: 60.0,
        }
    }
}

impl VlcTxParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.optical_power_w.is_finite() && self.optical_power_w > 0.0) {
            return Err(Error::param("vlc.tx_power_mw", "must be finite and > 0"));
        }
        lambertian_order(self.semi_angle_deg).map(|_| ())
    }

    pub fn lambertian_order(&self) -> Result<f64> {
        lambertian_order(self.semi_angle_deg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConcentratorMode {
    /// Fixed gain inside the field of view.
    #[default]
    Constant,
    /// Ideal non-imaging concentrator, `n² / sin²(ψ_c)`.
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VlcReceiverParams {
    pub detector_area_m2: f64,
    pub filter_gain: f64,
    pub concentrator_gain: f64,
    pub concentrator_mode: ConcentratorMode,
    pub refractive_index: f64,
    pub fov_deg: f64,
    /// Photodiode responsivity, A/W.
    pub responsivity: f64,
    pub bandwidth_hz: f64,
    pub background_current_a: f64,
    pub noise_bw_factor_i2: f64,
    pub noise_bw_factor_i3: f64,
    /// Fixed photodetector capacitance per unit area, F/m².
    pub capacitance_per_area: f64,
    pub fet_noise_factor: f64,
    pub fet_transconductance_s: f64,
    pub open_loop_gain: f64,
    pub temperature_k: f64,
}

impl Default for VlcReceiverParams {
    fn default() -> Self {
        Self {
            detector_area_m2: 1.0e-4,
            filter_gain: 1.0,
            concentrator_gain: 3.0,
            concentrator_mode: ConcentratorMode::Constant,
            refractive_index: 1.5,
            fov_deg: 60.0,
            responsivity: 0.53,
            bandwidth_hz: 10.0e6,
            background_current_a: 10.0e-9,
            noise_bw_factor_i2: 0.562,
            noise_bw_factor_i3: 0.0868,
            capacitance_per_area: 112.0e-8,
            fet_noise_factor: 1.5,
            fet_transconductance_s: 0.03,
            open_loop_gain: 10.0,
            temperature_k: 295.0,
        }
    }
}

impl VlcReceiverParams {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("vlc.detector_area_m2", self.detector_area_m2),
            ("vlc.filter_gain", self.filter_gain),
            ("vlc.concentrator_gain", self.concentrator_gain),
            ("vlc.refractive_index", self.refractive_index),
            ("vlc.responsivity_a_per_w", self.responsivity),
            ("vlc.bandwidth_hz", self.bandwidth_hz),
            ("vlc.noise_bw_factor_i2", self.noise_bw_factor_i2),
            ("vlc.noise_bw_factor_i3", self.noise_bw_factor_i3),
            ("vlc.capacitance_per_area_f_per_m2", self.capacitance_per_area),
            ("vlc.fet_noise_factor", self.fet_noise_factor),
            ("vlc.fet_transconductance_s", self.fet_transconductance_s),
            ("vlc.open_loop_gain", self.open_loop_gain),
            ("vlc.temperature_k", self.temperature_k),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::param(name, format!("must be finite and > 0, got {v}")));
            }
        }
        if !(self.background_current_a.is_finite() && self.background_current_a >= 0.0) {
            return Err(Error::param("vlc.background_current_a", "must be finite and >= 0"));
        }
        if !(self.fov_deg > 0.0 && self.fov_deg <= 90.0) {
            return Err(Error::param(
                "vlc.fov_deg",
                format!("field of view must lie in (0, 90] degrees, got {}", self.fov_deg),
            ));
        }
        Ok(())
    }
}

/// Lambertian order `m = -ln 2 / ln cos(φ_c)` of an LED with half-power
/// semi-angle `semi_angle_deg`.
pub fn lambertian_order(semi_angle_deg: f64) -> Result<f64> {
    if !(semi_angle_deg > 0.0 && semi_angle_deg < 90.0) {
        return Err(Error::param(
            "vlc.semi_angle_deg",
            format!("must lie in (0, 90) degrees, got {semi_angle_deg}"),
        ));
    }
    Ok(-(2f64.ln()) / semi_angle_deg.to_radians().cos().ln())
}

/// Concentrator gain for light arriving at incidence `psi_deg`; zero outside
/// the field of view.
pub fn concentrator_gain(psi_deg: f64, rx: &VlcReceiverParams, mode: ConcentratorMode) -> f64 {
    if psi_deg.abs() > rx.fov_deg {
        return 0.0;
    }
    match mode {
        ConcentratorMode::Constant => rx.concentrator_gain,
        ConcentratorMode::Formula => {
            let s = rx.fov_deg.to_radians().sin();
            rx.refractive_index * rx.refractive_index / (s * s)
        }
    }
}

/// DC gain of the line-of-sight optical link.
///
/// Zero when the receiver lies behind the LED plane (`|φ| ≥ 90°`) or the
/// transmitter lies outside the receiver field of view.
pub fn vlc_channel_gain(angles: AnglePair, d_tr: f64, tx: &VlcTxParams, rx: &VlcReceiverParams) -> Result<f64> {
    if d_tr <= 0.0 {
        return Err(Error::DegenerateGeometry("zero-length optical link"));
    }
    let m = tx.lambertian_order()?;
    Ok(lambertian_gain(angles, d_tr, m, rx))
}

/// Same as [`vlc_channel_gain`] with a precomputed Lambertian order.
pub(crate) fn lambertian_gain(angles: AnglePair, d_tr: f64, m: f64, rx: &VlcReceiverParams) -> f64 {
    let phi = angles.irradiance;
    let psi = angles.incidence;
    if phi.abs() >= 90.0 {
        return 0.0;
    }
    let g = concentrator_gain(psi, rx, rx.concentrator_mode);
    if g == 0.0 {
        return 0.0;
    }
    (m + 1.0) * rx.detector_area_m2 * phi.to_radians().cos().powf(m) * rx.filter_gain * g * psi.to_radians().cos()
        / (2.0 * PI * d_tr * d_tr)
}

/// Preamplifier thermal noise variance (A²): feedback-resistor term plus
/// FET channel term.
pub fn vlc_thermal_noise(rx: &VlcReceiverParams) -> f64 {
    let (k, t) = (BOLTZMANN, rx.temperature_k);
    let eta = rx.capacitance_per_area;
    let a = rx.detector_area_m2;
    let b = rx.bandwidth_hz;
    let feedback = 8.0 * PI * k * t * eta * a * rx.noise_bw_factor_i2 * b * b / rx.open_loop_gain;
    let channel = 16.0 * PI * PI * k * t * rx.fet_noise_factor * eta * eta * a * a * rx.noise_bw_factor_i3 * b.powi(3)
        / rx.fet_transconductance_s;
    feedback + channel
}

/// Shot noise variance (A²) from background light plus the received signal.
pub fn vlc_shot_noise(received_optical_power_w: f64, rx: &VlcReceiverParams) -> f64 {
    let q = ELEMENTARY_CHARGE;
    let b = rx.bandwidth_hz;
    2.0 * q * rx.background_current_a * rx.noise_bw_factor_i2 * b
        + 2.0 * q * rx.responsivity * received_optical_power_w * b
}
