use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rfvlc::channel::{rf_channel_gain, rf_noise_power, vlc_channel_gain, vlc_shot_noise, vlc_thermal_noise};
use rfvlc::geometry::azimuths_for;
use rfvlc::montecarlo::summarize;
use rfvlc::{
    evaluate_link, run_point, run_preset, run_sweep, write_csv, write_json, write_results, AnglePair, D2DPair,
    DeviceNode, Execution, ExperimentPreset, Format, Placement, Position, SimConfig, SweepAxis, SweepPoint,
    SweepResult,
};

/// Monte Carlo simulator for hybrid RF/VLC device-to-device links.
#[derive(Parser)]
#[command(name = "rfvlc", version)]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// TOML configuration file; omitted keys take reference defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Monte Carlo drops per sweep point.
    #[arg(long, global = true)]
    drops: Option<u64>,

    /// Output file; relative paths resolve against $RFVLC_OUT_DIR if set.
    /// Results go to stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Csv)]
    format: OutFormat,

    /// Evaluate drops on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate the configured scenario and report one result row.
    Run,
    /// Sweep one axis, or run a named experiment preset.
    Sweep {
        #[arg(long, conflicts_with_all = ["axis", "values"])]
        preset: Option<String>,

        /// d_tr, d_p, phi or psi.
        #[arg(long, requires = "values")]
        axis: Option<String>,

        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Option<Vec<f64>>,
    },
    /// Print the full link budget of a single deterministic layout.
    Oracle {
        #[arg(long, default_value_t = 1.0)]
        d_tr: f64,

        /// Irradiance angle of the link, degrees.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phi: f64,

        /// Incidence angle of the link, degrees.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        psi: f64,

        /// Add a boresight-aligned interfering pair this far away.
        #[arg(long)]
        d_p: Option<f64>,
    },
}

fn load_config(common: &Common) -> Result<SimConfig> {
    let mut cfg = match &common.config {
        Some(path) => SimConfig::from_path(path)?,
        None => SimConfig::default(),
    };
    if let Some(seed) = common.seed {
        cfg.scenario.seed = seed;
    }
    if let Some(drops) = common.drops {
        cfg.scenario.num_drops = drops;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn resolve_out(out: &Path) -> PathBuf {
    match std::env::var_os("RFVLC_OUT_DIR") {
        Some(dir) if out.is_relative() => Path::new(&dir).join(out),
        _ => out.to_path_buf(),
    }
}

fn emit(rows: &[SweepResult], common: &Common) -> Result<()> {
    let format = match common.format {
        OutFormat::Csv => Format::Csv,
        OutFormat::Json => Format::Json,
    };
    match &common.out {
        Some(out) => {
            let path = resolve_out(out);
            write_results(rows, &path, format)?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => {
            let stdout = std::io::stdout().lock();
            match format {
                Format::Csv => write_csv(rows, stdout)?,
                Format::Json => write_json(rows, stdout)?,
            }
        }
    }
    Ok(())
}

fn run(cfg: &SimConfig, exec: Execution) -> Result<Vec<SweepResult>> {
    let scenario = cfg.scenario();
    let params = cfg.system_params();
    let tally = run_point(&SweepPoint::plain(scenario), &params, exec)?;
    let (axis, value) = match scenario.placement {
        Placement::FixedTwoPair { d_tr, .. } => ("d_tr", d_tr),
        Placement::UniformRandom => ("room_dimension", scenario.room_dimension_m),
    };
    let label = match scenario.placement {
        Placement::FixedTwoPair { d_p, .. } => {
            format!("{axis};d_p={d_p};policy={}", scenario.orientation.name())
        }
        Placement::UniformRandom => format!(
            "{axis};pairs={};policy={}",
            scenario.num_pairs,
            scenario.orientation.name()
        ),
    };
    Ok(vec![summarize(label, value, &scenario, &tally)])
}

fn sweep(
    cfg: &SimConfig,
    exec: Execution,
    preset: Option<&str>,
    axis: Option<&str>,
    values: Option<&[f64]>,
) -> Result<Vec<SweepResult>> {
    let params = cfg.system_params();
    let scenario = cfg.scenario();
    if let Some(name) = preset {
        let preset: ExperimentPreset = name.parse()?;
        return Ok(run_preset(preset, &scenario, &params, exec)?);
    }
    let (axis, values) = match (axis, values, &cfg.sweep) {
        (Some(a), Some(v), _) => {
            let axis = SweepAxis::parse(a).with_context(|| format!("unknown axis '{a}' (d_tr, d_p, phi, psi)"))?;
            (axis, v.to_vec())
        }
        (None, None, Some(s)) => (s.axis, s.values.clone()),
        _ => bail!("sweep needs --preset, --axis with --values, or a [sweep] config section"),
    };
    Ok(run_sweep(axis, &values, &scenario, &params, exec)?)
}

fn oracle(cfg: &SimConfig, d_tr: f64, phi: f64, psi: f64, d_p: Option<f64>) -> Result<()> {
    let params = cfg.system_params();
    let angles = AnglePair::new(phi, psi);
    let tx = Position::new(0.0, 0.0);
    let rx = Position::new(d_tr, 0.0);
    let (tx_az, rx_az) = azimuths_for(tx, rx, angles)?;
    let mut pairs = vec![D2DPair::new(DeviceNode::new(tx, tx_az), DeviceNode::new(rx, rx_az))];
    if let Some(d_p) = d_p {
        let (itx, irx) = (Position::new(0.0, d_p), Position::new(d_tr, d_p));
        let (a, b) = azimuths_for(itx, irx, AnglePair::BORESIGHT)?;
        pairs.push(D2DPair::new(DeviceNode::new(itx, a), DeviceNode::new(irx, b)));
    }

    let gain_vlc = vlc_channel_gain(angles, d_tr, &params.vlc_tx, &params.vlc_rx)?;
    let gain_rf = rf_channel_gain(tx, rx, &params.rf)?;
    let budget = evaluate_link(0, &pairs, &params)?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "d_tr_m = {d_tr}")?;
    writeln!(out, "phi_deg = {phi}")?;
    writeln!(out, "psi_deg = {psi}")?;
    if let Some(d_p) = d_p {
        writeln!(out, "d_p_m = {d_p}")?;
    }
    writeln!(out, "rf_channel_gain = {gain_rf:e}")?;
    writeln!(out, "rf_noise_w = {:e}", rf_noise_power(&params.rf))?;
    writeln!(out, "vlc_channel_gain = {gain_vlc:e}")?;
    writeln!(out, "vlc_thermal_noise_a2 = {:e}", vlc_thermal_noise(&params.vlc_rx))?;
    writeln!(
        out,
        "vlc_shot_noise_a2 = {:e}",
        vlc_shot_noise(params.vlc_tx.optical_power_w * gain_vlc, &params.vlc_rx)
    )?;
    writeln!(out, "sinr_rf = {:e}", budget.sinr_rf)?;
    writeln!(out, "sinr_vlc = {:e}", budget.sinr_vlc)?;
    writeln!(out, "capacity_rf_bps = {}", budget.capacity_rf)?;
    writeln!(out, "capacity_vlc_bps = {}", budget.capacity_vlc)?;
    writeln!(out, "selected_mode = {:?}", budget.selected_mode)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| {
        let cfg = load_config(&cli.common)?;
        let exec = if cli.common.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        };
        match &cli.command {
            Command::Run => emit(&run(&cfg, exec)?, &cli.common),
            Command::Sweep { preset, axis, values } => {
                let rows = sweep(&cfg, exec, preset.as_deref(), axis.as_deref(), values.as_deref())?;
                emit(&rows, &cli.common)
            }
            Command::Oracle { d_tr, phi, psi, d_p } => oracle(&cfg, *d_tr, *phi, *psi, *d_p),
        }
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
