//! Physical constants and dB helpers.

/// Boltzmann constant, J/K (SI exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Elementary charge, C (SI exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

#[inline]
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

#[inline]
pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

#[inline]
pub fn dbm_to_watts(dbm: f64) -> f64 {
    db_to_linear(dbm) * 1e-3
}

#[inline]
pub fn watts_to_dbm(w: f64) -> f64 {
    linear_to_db(w * 1e3)
}

#[inline]
pub fn mw_to_watts(mw: f64) -> f64 {
    mw * 1e-3
}

#[inline]
pub fn watts_to_mw(w: f64) -> f64 {
    w * 1e3
}
