//! Planar positions and azimuthal orientation of mobile terminals.
//!
//! All devices are coplanar: a terminal is a point in the room plus the
//! azimuth its optical boresight (LED or photodetector normal) points at.
//! Azimuths are measured counter-clockwise from the +x axis, in degrees.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Position {
    pub x: f64,
    pub y: f64,
}

impl Position {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Direction from `self` towards `other`, in degrees (-180, 180].
    pub fn bearing_to(&self, other: &Position) -> f64 {
        (other.y - self.y).atan2(other.x - self.x).to_degrees()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Boresight direction in degrees, always held in `[0, 360)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Azimuth(f64);

impl Azimuth {
    pub fn new(degrees: f64) -> Self {
        let a = degrees.rem_euclid(360.0);
        // rem_euclid can round up to exactly 360 for tiny negative inputs
        Self(if a >= 360.0 { 0.0 } else { a })
    }

    pub fn degrees(self) -> f64 {
        self.0
    }

    pub fn rotate(self, delta: f64) -> Self {
        Self::new(self.0 + delta)
    }
}

/// Signed angles of a link relative to the two boresights, in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnglePair {
    /// Irradiance angle at the transmitter.
    pub irradiance: f64,
    /// Incidence angle at the receiver.
    pub incidence: f64,
}

impl AnglePair {
    pub const fn new(irradiance: f64, incidence: f64) -> Self {
        Self { irradiance, incidence }
    }

    pub const BORESIGHT: AnglePair = AnglePair::new(0.0, 0.0);
}

/// Wraps an angle in degrees into `[-180, 180)`.
pub fn wrap_signed(degrees: f64) -> f64 {
    (degrees + 180.0).rem_euclid(360.0) - 180.0
}

pub fn distance(a: Position, b: Position) -> f64 {
    (b.x - a.x).hypot(b.y - a.y)
}

/// Irradiance and incidence angles of the link `tx -> rx`.
///
/// The irradiance angle is the signed angle from the transmitter boresight
/// to the line of sight towards the receiver; the incidence angle is the
/// signed angle from the receiver boresight to the line of sight back to the
/// transmitter.
pub fn link_angles(tx_pos: Position, tx_azimuth: Azimuth, rx_pos: Position, rx_azimuth: Azimuth) -> Result<AnglePair> {
    if tx_pos == rx_pos {
        return Err(Error::DegenerateGeometry("transmitter and receiver coincide"));
    }
    let forward = tx_pos.bearing_to(&rx_pos);
    let backward = rx_pos.bearing_to(&tx_pos);
    Ok(AnglePair {
        irradiance: wrap_signed(forward - tx_azimuth.degrees()),
        incidence: wrap_signed(backward - rx_azimuth.degrees()),
    })
}

/// Inverse of [`link_angles`]: the azimuths that realise `angles` on the
/// link `tx -> rx`.
pub fn azimuths_for(tx_pos: Position, rx_pos: Position, angles: AnglePair) -> Result<(Azimuth, Azimuth)> {
    if tx_pos == rx_pos {
        return Err(Error::DegenerateGeometry("transmitter and receiver coincide"));
    }
    let tx = Azimuth::new(tx_pos.bearing_to(&rx_pos) - angles.irradiance);
    let rx = Azimuth::new(rx_pos.bearing_to(&tx_pos) - angles.incidence);
    Ok((tx, rx))
}
