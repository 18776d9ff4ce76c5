//! Per-receiver SINR in each band, Shannon capacity, and mode selection.
//!
//! All pairs share one RF band, so every other active transmitter
//! interferes at a receiver through its cross link. In the optical band an
//! interferer only contributes when its LED faces the receiver and the
//! receiver sees it inside its field of view; the two bands never interfere
//! with each other.

use serde::{Deserialize, Serialize};

use crate::channel::vlc::{lambertian_gain, vlc_shot_noise, vlc_thermal_noise, VlcReceiverParams, VlcTxParams};
use crate::channel::{rf_channel_gain, rf_noise_power, RfParams};
use crate::error::{Error, Result};
use crate::geometry::{distance, link_angles, Azimuth, Position};
use crate::units::db_to_linear;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeviceNode {
    pub position: Position,
    pub azimuth: Azimuth,
}

impl DeviceNode {
    pub fn new(position: Position, azimuth: Azimuth) -> Self {
        Self { position, azimuth }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct D2DPair {
    pub tx: DeviceNode,
    pub rx: DeviceNode,
}

impl D2DPair {
    pub fn new(tx: DeviceNode, rx: DeviceNode) -> Self {
        Self { tx, rx }
    }

    pub fn length(&self) -> f64 {
        distance(self.tx.position, self.rx.position)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Rf,
    Vlc,
}

/// How optical-to-electrical conversion enters the optical SINR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VlcSinrForm {
    /// `γ²·P·g / (Σ γ²·P·g_i + σ²_t + σ²_s)`.
    #[default]
    Uniform,
    /// Responsivity on the signal only: `γ²·P·g / (Σ P·g_i + σ²_t + σ²_s)`.
    Literal,
    /// Electrical power of the photocurrent:
    /// `(γ·P·g)² / (Σ (γ·P·g_i)² + σ²_t + σ²_s)`.
    Electrical,
}

/// Everything the link budget depends on besides geometry.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SystemParams {
    pub rf: RfParams,
    pub vlc_tx: VlcTxParams,
    pub vlc_rx: VlcReceiverParams,
    pub vlc_sinr_form: VlcSinrForm,
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        self.rf.validate()?;
        self.vlc_tx.validate()?;
        self.vlc_rx.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkBudget {
    pub sinr_rf: f64,
    pub sinr_vlc: f64,
    pub capacity_rf: f64,
    pub capacity_vlc: f64,
    pub selected_mode: Mode,
    pub selected_capacity: f64,
}

impl LinkBudget {
    pub fn from_sinrs(sinr_rf: f64, sinr_vlc: f64, rf_bandwidth: f64, vlc_bandwidth: f64) -> Result<Self> {
        let capacity_rf = shannon_capacity(sinr_rf, rf_bandwidth)?;
        let capacity_vlc = shannon_capacity(sinr_vlc, vlc_bandwidth)?;
        let selected_mode = select_mode(capacity_rf, capacity_vlc);
        let selected_capacity = match selected_mode {
            Mode::Rf => capacity_rf,
            Mode::Vlc => capacity_vlc,
        };
        Ok(Self {
            sinr_rf,
            sinr_vlc,
            capacity_rf,
            capacity_vlc,
            selected_mode,
            selected_capacity,
        })
    }

    pub fn capacity(&self, strategy: Strategy) -> f64 {
        match strategy {
            Strategy::RfOnly => self.capacity_rf,
            Strategy::VlcOnly => self.capacity_vlc,
            Strategy::Hybrid => self.selected_capacity,
        }
    }
}

/// Band usage policy a pair is evaluated under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    RfOnly,
    VlcOnly,
    Hybrid,
}

/// Per-link RF shadowing offsets in dB, indexed `[transmitter pair][receiver pair]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Shadowing {
    n: usize,
    db: Vec<f64>,
}

impl Shadowing {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            db: vec![0.0; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut db = Vec::with_capacity(n * n);
        for tx in 0..n {
            for rx in 0..n {
                db.push(f(tx, rx));
            }
        }
        Self { n, db }
    }

    #[inline]
    pub fn get(&self, tx: usize, rx: usize) -> f64 {
        self.db[tx * self.n + rx]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

fn check_index(n: usize, pairs: &[D2DPair]) -> Result<()> {
    if pairs.is_empty() {
        return Err(Error::param("pairs", "at least one D2D pair is required"));
    }
    if n >= pairs.len() {
        return Err(Error::param(
            "pair_index",
            format!("index {n} out of range for {} pairs", pairs.len()),
        ));
    }
    Ok(())
}

/// RF SINR at the receiver of pair `n`.
pub fn rf_sinr(n: usize, pairs: &[D2DPair], rf: &RfParams) -> Result<f64> {
    rf_sinr_shadowed(n, pairs, rf, None)
}

pub fn rf_sinr_shadowed(n: usize, pairs: &[D2DPair], rf: &RfParams, shadowing: Option<&Shadowing>) -> Result<f64> {
    check_index(n, pairs)?;
    let shadow = |tx: usize| shadowing.map_or(1.0, |s| db_to_linear(-s.get(tx, n)));
    let rx = pairs[n].rx.position;
    let signal = rf.tx_power_w * rf_channel_gain(pairs[n].tx.position, rx, rf)? * shadow(n);
    let mut interference = 0.0;
    for (i, p) in pairs.iter().enumerate() {
        if i != n {
            interference += rf.tx_power_w * rf_channel_gain(p.tx.position, rx, rf)? * shadow(i);
        }
    }
    Ok(signal / (interference + rf_noise_power(rf)))
}

/// Optical gain of the link from `tx` to `rx`, using both devices' azimuths.
fn optical_gain(tx: &DeviceNode, rx: &DeviceNode, m: f64, rx_params: &VlcReceiverParams) -> Result<f64> {
    let angles = link_angles(tx.position, tx.azimuth, rx.position, rx.azimuth)?;
    Ok(lambertian_gain(
        angles,
        distance(tx.position, rx.position),
        m,
        rx_params,
    ))
}

/// VLC SINR at the receiver of pair `n`. Shot noise follows the desired
/// link's received power only.
pub fn vlc_sinr(
    n: usize,
    pairs: &[D2DPair],
    tx: &VlcTxParams,
    rx: &VlcReceiverParams,
    form: VlcSinrForm,
) -> Result<f64> {
    check_index(n, pairs)?;
    let m = tx.lambertian_order()?;
    let receiver = &pairs[n].rx;
    let p = tx.optical_power_w;
    let gamma = rx.responsivity;

    let desired = optical_gain(&pairs[n].tx, receiver, m, rx)?;
    let noise = vlc_thermal_noise(rx) + vlc_shot_noise(p * desired, rx);

    let mut cross = 0.0;
    for (i, other) in pairs.iter().enumerate() {
        if i == n {
            continue;
        }
        let g = optical_gain(&other.tx, receiver, m, rx)?;
        cross += match form {
            VlcSinrForm::Uniform => gamma * gamma * p * g,
            VlcSinrForm::Literal => p * g,
            VlcSinrForm::Electrical => (gamma * p * g).powi(2),
        };
    }
    let signal = match form {
        VlcSinrForm::Uniform | VlcSinrForm::Literal => gamma * gamma * p * desired,
        VlcSinrForm::Electrical => (gamma * p * desired).powi(2),
    };
    Ok(signal / (cross + noise))
}

/// Shannon capacity in bit/s.
pub fn shannon_capacity(sinr: f64, bandwidth: f64) -> Result<f64> {
    if sinr.is_nan() || sinr < 0.0 {
        return Err(Error::param("sinr", format!("must be >= 0, got {sinr}")));
    }
    if bandwidth.is_nan() || bandwidth <= 0.0 {
        return Err(Error::param("bandwidth", format!("must be > 0, got {bandwidth}")));
    }
    Ok(bandwidth * sinr.ln_1p() / std::f64::consts::LN_2)
}

/// RF unless VLC is strictly better; ties go to RF.
pub fn select_mode(capacity_rf: f64, capacity_vlc: f64) -> Mode {
    if capacity_rf >= capacity_vlc {
        Mode::Rf
    } else {
        Mode::Vlc
    }
}

pub fn evaluate_link(n: usize, pairs: &[D2DPair], params: &SystemParams) -> Result<LinkBudget> {
    evaluate_link_shadowed(n, pairs, params, None)
}

pub fn evaluate_link_shadowed(
    n: usize,
    pairs: &[D2DPair],
    params: &SystemParams,
    shadowing: Option<&Shadowing>,
) -> Result<LinkBudget> {
    let sinr_rf = rf_sinr_shadowed(n, pairs, &params.rf, shadowing)?;
    let sinr_vlc = vlc_sinr(n, pairs, &params.vlc_tx, &params.vlc_rx, params.vlc_sinr_form)?;
    LinkBudget::from_sinrs(sinr_rf, sinr_vlc, params.rf.bandwidth_hz, params.vlc_rx.bandwidth_hz)
}
