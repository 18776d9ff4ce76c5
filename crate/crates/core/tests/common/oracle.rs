#![allow(dead_code)]

//! Straight-line scalar oracle and hand-specified two-pair instances.
//!
//! Uses only the reference constants and vector algebra (angles via dot
//! products rather than bearings), so it shares no code with the crate's
//! channel models.

use rfvlc::{Azimuth, D2DPair, DeviceNode, Position};

use std::f64::consts::PI;

const RF_BW: f64 = 20e6;
const RF_P: f64 = 0.2;
const VLC_BW: f64 = 10e6;
const VLC_P: f64 = 0.2;
const AREA: f64 = 1e-4;
const TS: f64 = 1.0;
const CONC: f64 = 3.0;
const COS_FOV: f64 = 0.5;
const GAMMA: f64 = 0.53;
const IBG: f64 = 1e-8;
const I2: f64 = 0.562;
const I3: f64 = 0.0868;
const ETA: f64 = 112e-8;
const FET_GAMMA: f64 = 1.5;
const GM: f64 = 0.03;
const G_OL: f64 = 10.0;
const T: f64 = 295.0;
const K: f64 = 1.380649e-23;
const Q: f64 = 1.602176634e-19;

#[derive(Clone, Copy)]
pub struct Dev {
    pub x: f64,
    pub y: f64,
    pub az_deg: f64,
}

pub struct Out {
    pub sinr_rf: f64,
    pub sinr_vlc: f64,
    pub c_rf: f64,
    pub c_vlc: f64,
}

fn rf_gain(a: Dev, b: Dev) -> f64 {
    let d = ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt();
    let pl_db = 89.5 + 16.9 * d.log10();
    10f64.powf(-pl_db / 10.0)
}

fn vlc_gain(tx: Dev, rx: Dev) -> f64 {
    // m = 1 for a 60° semi-angle
    let (dx, dy) = (rx.x - tx.x, rx.y - tx.y);
    let d = (dx * dx + dy * dy).sqrt();
    let (tr, rr) = (tx.az_deg * PI / 180.0, rx.az_deg * PI / 180.0);
    let cos_phi = (tr.cos() * dx + tr.sin() * dy) / d;
    let cos_psi = -(rr.cos() * dx + rr.sin() * dy) / d;
    if cos_phi <= 0.0 || cos_psi < COS_FOV {
        return 0.0;
    }
    2.0 * AREA * cos_phi * TS * CONC * cos_psi / (2.0 * PI * d * d)
}

pub fn evaluate(n: usize, pairs: &[(Dev, Dev)]) -> Out {
    let (_, rx) = pairs[n];
    let noise_rf = 10f64.powf(-174.0 / 10.0) * 1e-3 * RF_BW;
    let mut i_rf = 0.0;
    let mut i_vlc = 0.0;
    for (i, &(tx, _)) in pairs.iter().enumerate() {
        if i != n {
            i_rf += RF_P * rf_gain(tx, rx);
            i_vlc += GAMMA * GAMMA * VLC_P * vlc_gain(tx, rx);
        }
    }
    let sinr_rf = RF_P * rf_gain(pairs[n].0, rx) / (i_rf + noise_rf);

    let g = vlc_gain(pairs[n].0, rx);
    let thermal = 8.0 * PI * K * T * ETA * AREA * I2 * VLC_BW * VLC_BW / G_OL
        + 16.0 * PI * PI * K * T * FET_GAMMA * ETA * ETA * AREA * AREA * I3 * VLC_BW * VLC_BW * VLC_BW / GM;
    let shot = 2.0 * Q * IBG * I2 * VLC_BW + 2.0 * Q * GAMMA * VLC_P * g * VLC_BW;
    let sinr_vlc = GAMMA * GAMMA * VLC_P * g / (i_vlc + thermal + shot);

    Out {
        sinr_rf,
        sinr_vlc,
        c_rf: RF_BW * (1.0 + sinr_rf).log2(),
        c_vlc: VLC_BW * (1.0 + sinr_vlc).log2(),
    }
}

pub fn dev(x: f64, y: f64, az: f64) -> Dev {
    Dev { x, y, az_deg: az }
}

/// Pairs that face each other along +x with the given (φ, ψ) offsets.
pub fn facing(x: f64, y: f64, d: f64, phi: f64, psi: f64) -> (Dev, Dev) {
    (dev(x, y, phi), dev(x + d, y, 180.0 - psi))
}

pub fn instances() -> Vec<Vec<(Dev, Dev)>> {
    vec![
        vec![facing(0.0, 0.0, 1.0, 0.0, 0.0), facing(0.0, 2.0, 1.0, 0.0, 0.0)],
        vec![facing(0.0, 0.0, 1.0, 30.0, -10.0), facing(0.0, 2.0, 1.0, -45.0, 20.0)],
        vec![facing(0.0, 0.0, 5.0, 0.0, 0.0), facing(0.0, 2.0, 5.0, 0.0, 0.0)],
        vec![facing(0.0, 0.0, 5.0, 10.0, 50.0), facing(0.0, 10.0, 5.0, -70.0, 5.0)],
        vec![facing(0.0, 0.0, 10.0, 0.0, 0.0), facing(0.0, 25.0, 10.0, 0.0, 0.0)],
        vec![facing(0.0, 0.0, 25.0, 5.0, 5.0), facing(0.0, 25.0, 25.0, -5.0, -5.0)],
        vec![facing(0.0, 0.0, 3.0, 80.0, 0.0), facing(0.0, 1.0, 3.0, 0.0, 80.0)],
        vec![facing(0.0, 0.0, 2.0, 0.0, 0.0), facing(0.0, 0.5, 2.0, 0.0, 0.0)],
        vec![facing(0.0, 0.0, 15.0, 0.0, 0.0), facing(0.0, 10.0, 15.0, 0.0, 0.0)],
        vec![facing(0.0, 0.0, 1.0, 120.0, 0.0), facing(0.0, 2.0, 1.0, 0.0, 0.0)],
        vec![facing(0.0, 0.0, 1.0, 0.0, -75.0), facing(0.0, 2.0, 1.0, 0.0, 0.0)],
        vec![facing(0.0, 0.0, 20.0, 15.0, -25.0), facing(0.0, 2.0, 20.0, -35.0, 40.0)],
        vec![facing(0.0, 0.0, 4.0, -60.0, 55.0), facing(0.0, 3.0, 4.0, 60.0, -55.0)],
        vec![facing(0.0, 0.0, 1.0, 0.0, 0.0), facing(0.0, 25.0, 25.0, 0.0, 0.0)],
        vec![facing(2.0, 3.0, 7.0, 12.5, -33.3), facing(1.0, 9.0, 2.5, -3.0, 17.0)],
        // crossing links
        vec![
            (dev(0.0, 0.0, 45.0), dev(4.0, 4.0, 225.0)),
            (dev(0.0, 4.0, -45.0), dev(4.0, 0.0, 135.0)),
        ],
        vec![
            (dev(0.0, 0.0, 30.0), dev(3.0, 3.0, 200.0)),
            (dev(3.0, 0.0, 100.0), dev(0.5, 2.0, -20.0)),
        ],
        // interferer transmitting straight at the victim receiver
        vec![
            (dev(0.0, 0.0, 0.0), dev(2.0, 0.0, 180.0)),
            (dev(4.0, 0.0, 180.0), dev(6.0, 0.0, 0.0)),
        ],
        vec![
            (dev(10.0, 10.0, 90.0), dev(10.0, 12.0, 270.0)),
            (dev(11.0, 10.0, 100.0), dev(11.0, 15.0, 265.0)),
        ],
        vec![
            (dev(0.0, 0.0, 0.0), dev(29.0, 0.0, 180.0)),
            (dev(0.0, 29.0, -10.0), dev(29.0, 29.0, 170.0)),
        ],
    ]
}

pub fn to_pairs(inst: &[(Dev, Dev)]) -> Vec<D2DPair> {
    let node = |d: Dev| DeviceNode::new(Position::new(d.x, d.y), Azimuth::new(d.az_deg));
    inst.iter().map(|&(t, r)| D2DPair::new(node(t), node(r))).collect()
}
