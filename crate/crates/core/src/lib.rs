//! Monte Carlo simulator for hybrid RF/VLC device-to-device links.
//!
//! Each D2D pair can talk over a 2 GHz RF channel or a line-of-sight visible
//! light channel and picks whichever offers the larger Shannon capacity.
//! Interference comes from the other pairs on the same band.
//!
//! ```
//! use rfvlc::{run_sweep, Execution, ScenarioConfig, SweepAxis, SystemParams};
//!
//! let cfg = ScenarioConfig { num_drops: 16, ..Default::default() };
//! let rows = run_sweep(SweepAxis::DTr, &[1.0, 5.0], &cfg, &SystemParams::default(), Execution::Sequential)?;
//! assert!(rows[0].mean_capacity_hybrid_bps >= rows[0].mean_capacity_rf_bps);
//! # Ok::<(), rfvlc::Error>(())
//! ```

pub mod channel;
pub mod config;
pub mod error;
pub mod export;
pub mod geometry;
pub mod link;
pub mod montecarlo;
pub mod presets;
pub mod rng;
pub mod scenario;
pub mod units;

pub use config::SimConfig;
pub use error::{Error, Result};
pub use export::{write_csv, write_json, write_results, Format, CSV_COLUMNS};
pub use geometry::{link_angles, AnglePair, Azimuth, Position};
pub use link::{evaluate_link, D2DPair, DeviceNode, LinkBudget, Mode, Strategy, SystemParams, VlcSinrForm};
pub use montecarlo::{run_point, run_sweep, Execution, SweepAxis, SweepPoint, SweepResult, Tally};
pub use presets::{run_preset, ExperimentPreset};
pub use scenario::{OrientationPolicy, Placement, ScenarioConfig};
