//! Run configuration: built-in defaults, flat `key=value` files, and
//! command-line overrides.
//!
//! Precedence is defaults < configuration file < explicit flags. The
//! [`RunConfig`] holds the fully resolved values for a run and round-trips
//! losslessly through its `key=value` representation, so a run can be
//! reproduced from a written-out config file alone.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::ValueEnum;
use jc_lattice::{CellDamping, LatticeParams};

/// Reservoir topology selector as spelled on the command line and in
/// configuration files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReservoirArg {
    /// All atoms share one bath, all cavities share another.
    Common,
    /// Each atom has a private bath; the cavities still share one.
    Independent,
}

impl ReservoirArg {
    pub fn model(self) -> jc_lattice::ReservoirModel {
        match self {
            ReservoirArg::Common => jc_lattice::ReservoirModel::CommonAtomsCommonCavities,
            ReservoirArg::Independent => jc_lattice::ReservoirModel::IndependentAtomsCommonCavities,
        }
    }

    fn key(self) -> &'static str {
        match self {
            ReservoirArg::Common => "common",
            ReservoirArg::Independent => "independent",
        }
    }

    fn parse(value: &str) -> Result<Self, String> {
        match value {
            "common" => Ok(ReservoirArg::Common),
            "independent" => Ok(ReservoirArg::Independent),
            other => Err(format!(
                "invalid reservoir `{other}` (expected `common` or `independent`)"
            )),
        }
    }
}

/// Output format for subcommands where a choice exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    fn key(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }

    fn parse(value: &str) -> Result<Self, String> {
        match value {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "invalid format `{other}` (expected `csv` or `json`)"
            )),
        }
    }
}

/// Subcommand repeated at every sweep point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepTarget {
    /// One row per point: swept value, then the numeric eigenvalues.
    Eigen,
    /// One row per point: swept value, then one decay rate per state id.
    Rates,
    /// One row per point: swept value, symmetry witness, peak count.
    Spectrum,
}

impl SweepTarget {
    fn key(self) -> &'static str {
        match self {
            SweepTarget::Eigen => "eigen",
            SweepTarget::Rates => "rates",
            SweepTarget::Spectrum => "spectrum",
        }
    }

    fn parse(value: &str) -> Result<Self, String> {
        match value {
            "eigen" => Ok(SweepTarget::Eigen),
            "rates" => Ok(SweepTarget::Rates),
            "spectrum" => Ok(SweepTarget::Spectrum),
            other => Err(format!(
                "invalid sweep target `{other}` (expected `eigen`, `rates`, or `spectrum`)"
            )),
        }
    }
}

/// Command-line overrides shared by every subcommand.
///
/// Every field is optional; unset fields fall back to the configuration file
/// (when `--config` is given) and then to the built-in defaults. Frequencies
/// and rates default to units of the coupling `g = 1`.
#[derive(clap::Args, Clone, Debug, Default)]
pub struct FlagArgs {
    /// Flat key=value configuration file; explicit flags take precedence.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Number of Jaynes-Cummings cells.
    #[arg(long, value_name = "N")]
    pub cells: Option<usize>,

    /// Bare cavity frequency omega_c.
    #[arg(long, value_name = "W", allow_negative_numbers = true)]
    pub omega_c: Option<f64>,

    /// Atom-cavity detuning delta = omega_a - omega_c.
    #[arg(long, value_name = "D", allow_negative_numbers = true)]
    pub delta: Option<f64>,

    /// Atom-cavity coupling g.
    #[arg(long, value_name = "G", allow_negative_numbers = true)]
    pub g: Option<f64>,

    /// Photon hopping rate kappa between cavities.
    #[arg(long, value_name = "K", allow_negative_numbers = true)]
    pub kappa: Option<f64>,

    /// Atomic damping: one rate for all cells or a comma-separated per-cell
    /// list.
    #[arg(long, value_name = "RATES")]
    pub gamma_a: Option<String>,

    /// Cavity damping: one rate for all cells or a comma-separated per-cell
    /// list.
    #[arg(long, value_name = "RATES")]
    pub gamma_c: Option<String>,

    /// Reservoir topology for the golden-rule rates.
    #[arg(long, value_enum, value_name = "MODEL")]
    pub reservoir: Option<ReservoirArg>,

    /// Probe line half-width (Lorentzian HWHM) for spectra.
    #[arg(long, value_name = "G")]
    pub gamma: Option<f64>,

    /// Lower edge of the probe grid, measured in omega_c - omega_p.
    #[arg(long, value_name = "W", allow_negative_numbers = true)]
    pub wmin: Option<f64>,

    /// Upper edge of the probe grid, measured in omega_c - omega_p.
    #[arg(long, value_name = "W", allow_negative_numbers = true)]
    pub wmax: Option<f64>,

    /// Number of probe grid points.
    #[arg(long, value_name = "N")]
    pub points: Option<usize>,

    /// Excitation manifold for single-cell rate reports (1 = lowest doublet
    /// to ground, n >= 2 = doublet n to doublet n-1).
    #[arg(long, value_name = "N")]
    pub manifold: Option<u32>,

    /// Parameter swept by `sweep` (delta, kappa, g, omega_c, gamma_a,
    /// gamma_c, or gamma).
    #[arg(long = "param", value_name = "NAME")]
    pub sweep_param: Option<String>,

    /// First value of the swept parameter.
    #[arg(long = "start", value_name = "X", allow_negative_numbers = true)]
    pub sweep_start: Option<f64>,

    /// Last value of the swept parameter (inclusive).
    #[arg(long = "stop", value_name = "X", allow_negative_numbers = true)]
    pub sweep_stop: Option<f64>,

    /// Number of sweep points.
    #[arg(long = "steps", value_name = "N")]
    pub sweep_steps: Option<usize>,

    /// Subcommand repeated at every sweep point.
    #[arg(long = "target", value_enum, value_name = "CMD")]
    pub sweep_target: Option<SweepTarget>,

    /// Random seed for the `verify` parameter draws.
    #[arg(long, value_name = "SEED")]
    pub seed: Option<u64>,

    /// Number of parameter sets checked by `verify` (the first is the
    /// configured one, the rest are randomized).
    #[arg(long, value_name = "N")]
    pub trials: Option<usize>,

    /// Output path. Default: stdout, except `spectrum` which writes
    /// spectrum.csv (plus a .json sidecar next to it).
    #[arg(long, value_name = "PATH")]
    pub output: Option<String>,

    /// Output format; each subcommand checks it against what it can emit.
    #[arg(long, value_enum, value_name = "FMT")]
    pub format: Option<OutputFormat>,
}

/// Fully resolved configuration for one run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub cells: usize,
    pub omega_c: f64,
    pub delta: f64,
    pub g: f64,
    pub kappa: f64,
    /// One entry per cell, or a single entry shared by all cells.
    pub gamma_a: Vec<f64>,
    pub gamma_c: Vec<f64>,
    pub reservoir: ReservoirArg,
    /// Probe line half-width.
    pub gamma: f64,
    pub wmin: Option<f64>,
    pub wmax: Option<f64>,
    pub points: usize,
    pub manifold: u32,
    pub sweep_param: Option<String>,
    pub sweep_start: f64,
    pub sweep_stop: f64,
    pub sweep_steps: usize,
    pub sweep_target: SweepTarget,
    pub seed: u64,
    pub trials: usize,
    pub output: Option<String>,
    pub format: Option<OutputFormat>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            cells: 1,
            omega_c: 0.0,
            delta: 0.0,
            g: 1.0,
            kappa: 0.0,
            gamma_a: vec![0.05],
            gamma_c: vec![0.02],
            reservoir: ReservoirArg::Common,
            gamma: 0.01,
            wmin: None,
            wmax: None,
            points: jc_lattice::spectra::DEFAULT_GRID_POINTS,
            manifold: 1,
            sweep_param: None,
            sweep_start: 0.0,
            sweep_stop: 0.0,
            sweep_steps: 11,
            sweep_target: SweepTarget::Spectrum,
            seed: 0,
            trials: 20,
            output: None,
            format: None,
        }
    }
}

fn join_rates(rates: &[f64]) -> String {
    rates
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_rates(key: &str, value: &str) -> Result<Vec<f64>, String> {
    let rates: Result<Vec<f64>, _> = value.split(',').map(|p| p.trim().parse()).collect();
    match rates {
        Ok(r) if !r.is_empty() => Ok(r),
        _ => Err(format!("invalid rate list for {key}: `{value}`")),
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("invalid value for {key}: `{value}`"))
}

impl RunConfig {
    /// Serializes to the flat `key=value` file format. Parsing the result
    /// reproduces `self` exactly.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# lattice");
        let _ = writeln!(out, "cells={}", self.cells);
        let _ = writeln!(out, "omega_c={}", self.omega_c);
        let _ = writeln!(out, "delta={}", self.delta);
        let _ = writeln!(out, "g={}", self.g);
        let _ = writeln!(out, "kappa={}", self.kappa);
        let _ = writeln!(out, "gamma_a={}", join_rates(&self.gamma_a));
        let _ = writeln!(out, "gamma_c={}", join_rates(&self.gamma_c));
        let _ = writeln!(out, "reservoir={}", self.reservoir.key());
        let _ = writeln!(out, "# probe");
        let _ = writeln!(out, "gamma={}", self.gamma);
        if let Some(w) = self.wmin {
            let _ = writeln!(out, "wmin={w}");
        }
        if let Some(w) = self.wmax {
            let _ = writeln!(out, "wmax={w}");
        }
        let _ = writeln!(out, "points={}", self.points);
        let _ = writeln!(out, "manifold={}", self.manifold);
        let _ = writeln!(out, "# sweep");
        if let Some(p) = &self.sweep_param {
            let _ = writeln!(out, "sweep_param={p}");
        }
        let _ = writeln!(out, "sweep_start={}", self.sweep_start);
        let _ = writeln!(out, "sweep_stop={}", self.sweep_stop);
        let _ = writeln!(out, "sweep_steps={}", self.sweep_steps);
        let _ = writeln!(out, "sweep_target={}", self.sweep_target.key());
        let _ = writeln!(out, "# verify");
        let _ = writeln!(out, "seed={}", self.seed);
        let _ = writeln!(out, "trials={}", self.trials);
        let _ = writeln!(out, "# output");
        if let Some(p) = &self.output {
            let _ = writeln!(out, "output={p}");
        }
        if let Some(f) = self.format {
            let _ = writeln!(out, "format={}", f.key());
        }
        out
    }

    /// Parses the flat `key=value` format (blank lines and `#` comments are
    /// ignored) on top of the built-in defaults.
    pub fn from_key_values(text: &str) -> Result<Self, String> {
        let mut cfg = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value, got `{line}`", lineno + 1))?;
            cfg.apply_pair(key.trim(), value.trim())
                .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        }
        Ok(cfg)
    }

    fn apply_pair(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "cells" => self.cells = parse_num(key, value)?,
            "omega_c" => self.omega_c = parse_num(key, value)?,
            "delta" => self.delta = parse_num(key, value)?,
            "g" => self.g = parse_num(key, value)?,
            "kappa" => self.kappa = parse_num(key, value)?,
            "gamma_a" => self.gamma_a = parse_rates(key, value)?,
            "gamma_c" => self.gamma_c = parse_rates(key, value)?,
            "reservoir" => self.reservoir = ReservoirArg::parse(value)?,
            "gamma" => self.gamma = parse_num(key, value)?,
            "wmin" => self.wmin = Some(parse_num(key, value)?),
            "wmax" => self.wmax = Some(parse_num(key, value)?),
            "points" => self.points = parse_num(key, value)?,
            "manifold" => self.manifold = parse_num(key, value)?,
            "sweep_param" => self.sweep_param = Some(value.to_string()),
            "sweep_start" => self.sweep_start = parse_num(key, value)?,
            "sweep_stop" => self.sweep_stop = parse_num(key, value)?,
            "sweep_steps" => self.sweep_steps = parse_num(key, value)?,
            "sweep_target" => self.sweep_target = SweepTarget::parse(value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "trials" => self.trials = parse_num(key, value)?,
            "output" => self.output = Some(value.to_string()),
            "format" => self.format = Some(OutputFormat::parse(value)?),
            other => return Err(format!("unknown configuration key `{other}`")),
        }
        Ok(())
    }

    /// Overlays explicit flags on top of `self`.
    pub fn apply_flags(&mut self, flags: &FlagArgs) -> Result<(), String> {
        if let Some(v) = flags.cells {
            self.cells = v;
        }
        if let Some(v) = flags.omega_c {
            self.omega_c = v;
        }
        if let Some(v) = flags.delta {
            self.delta = v;
        }
        if let Some(v) = flags.g {
            self.g = v;
        }
        if let Some(v) = flags.kappa {
            self.kappa = v;
        }
        if let Some(v) = &flags.gamma_a {
            self.gamma_a = parse_rates("--gamma-a", v)?;
        }
        if let Some(v) = &flags.gamma_c {
            self.gamma_c = parse_rates("--gamma-c", v)?;
        }
        if let Some(v) = flags.reservoir {
            self.reservoir = v;
        }
        if let Some(v) = flags.gamma {
            self.gamma = v;
        }
        if let Some(v) = flags.wmin {
            self.wmin = Some(v);
        }
        if let Some(v) = flags.wmax {
            self.wmax = Some(v);
        }
        if let Some(v) = flags.points {
            self.points = v;
        }
        if let Some(v) = flags.manifold {
            self.manifold = v;
        }
        if let Some(v) = &flags.sweep_param {
            self.sweep_param = Some(v.clone());
        }
        if let Some(v) = flags.sweep_start {
            self.sweep_start = v;
        }
        if let Some(v) = flags.sweep_stop {
            self.sweep_stop = v;
        }
        if let Some(v) = flags.sweep_steps {
            self.sweep_steps = v;
        }
        if let Some(v) = flags.sweep_target {
            self.sweep_target = v;
        }
        if let Some(v) = flags.seed {
            self.seed = v;
        }
        if let Some(v) = flags.trials {
            self.trials = v;
        }
        if let Some(v) = &flags.output {
            self.output = Some(v.clone());
        }
        if let Some(v) = flags.format {
            self.format = Some(v);
        }
        Ok(())
    }

    /// Resolves defaults, then the `--config` file (if any), then flags.
    pub fn resolve(flags: &FlagArgs) -> Result<Self, String> {
        let mut cfg = match &flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    format!("cannot read config file `{}`: {e}", path.display())
                })?;
                RunConfig::from_key_values(&text)?
            }
            None => RunConfig::default(),
        };
        cfg.apply_flags(flags)?;
        Ok(cfg)
    }

    /// Expands the damping lists (single shared value or one per cell) and
    /// validates the physical parameters.
    pub fn lattice_params(&self) -> Result<LatticeParams, String> {
        let expand = |key: &str, rates: &[f64]| -> Result<Vec<f64>, String> {
            if rates.len() == 1 {
                Ok(vec![rates[0]; self.cells])
            } else if rates.len() == self.cells {
                Ok(rates.to_vec())
            } else {
                Err(format!(
                    "{key} lists {} rates for {} cells (give 1 or {})",
                    rates.len(),
                    self.cells,
                    self.cells
                ))
            }
        };
        let gamma_a = expand("gamma_a", &self.gamma_a)?;
        let gamma_c = expand("gamma_c", &self.gamma_c)?;
        let damping = gamma_a
            .into_iter()
            .zip(gamma_c)
            .map(|(a, c)| CellDamping::new(a, c))
            .collect();
        let params = LatticeParams {
            n_cells: self.cells,
            omega_c: self.omega_c,
            delta: self.delta,
            g: self.g,
            kappa: self.kappa,
            damping,
            reservoir: self.reservoir.model(),
        };
        params.validate().map_err(|e| e.to_string())?;
        Ok(params)
    }
}
