//! Per-band channel models.

pub mod rf;
pub mod vlc;

pub use rf::{rf_channel_gain, rf_noise_power, PathlossModel, RfParams};
pub use vlc::{
    concentrator_gain, lambertian_order, vlc_channel_gain, vlc_shot_noise, vlc_thermal_noise, ConcentratorMode,
    VlcReceiverParams, VlcTxParams,
};
