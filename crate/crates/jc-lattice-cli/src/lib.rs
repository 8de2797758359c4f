//! Command-line interface for coupled Jaynes-Cummings lattices.
//!
//! Five subcommands cover the library surface:
//!
//! * `eigen` — closed-form and numeric eigensystems as JSON,
//! * `rates` — golden-rule decay report as JSON,
//! * `spectrum` — probe absorption spectrum as CSV plus a JSON sidecar
//!   carrying the detected peaks and the symmetry witness,
//! * `sweep` — any of the above repeated over one swept parameter, one
//!   output row per point,
//! * `verify` — closed forms cross-validated against the numeric
//!   eigensolver over randomized parameter sets.
//!
//! Exit codes: `0` on success, `1` when `verify` finds deviations beyond
//! tolerance, `2` on configuration errors. All floating-point output uses
//! Rust's shortest round-trip formatting, so artifacts are byte-identical
//! across runs; `JC_LATTICE_THREADS` caps sweep concurrency (0 = auto)
//! without affecting output bytes.

pub mod config;

use clap::Parser;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use jc_lattice::crosscheck::{cross_validate, CrossCheckError};
use jc_lattice::eigensolver::{diagonalize, SolverConfig};
use jc_lattice::jc_single::{dressed_state, ladder_energies};
use jc_lattice::lattice::{
    build_hamiltonian, ground_energy, manifold_rate_report, n_cell_eigensystem, rate_report,
    RateEntry, RateReport,
};
use jc_lattice::spectra::{
    default_grid, default_pairing_tolerance, find_peaks, spectral_lines, susceptibility,
    symmetry_witness, unresolved_pairs, SpectralLine,
};
use jc_lattice::{CellDamping, Complex, LatticeParams, ReservoirModel};

use config::{FlagArgs, OutputFormat, RunConfig, SweepTarget};

/// Version stamp carried by every JSON document this binary writes.
pub const SCHEMA_VERSION: u32 = 1;

/// `verify` tolerances: relative energy, absolute rate, projector defect.
pub const VERIFY_ENERGY_REL_TOL: f64 = 1e-10;
pub const VERIFY_RATE_ABS_TOL: f64 = 1e-12;
pub const VERIFY_PROJECTOR_TOL: f64 = 1e-9;

const CSV_HEADER_SPECTRUM: &str = "omega_c_minus_omega_p,im_chi";

#[derive(Parser)]
#[command(
    name = "jc-lattice",
    version,
    about = "Eigenstates, decay rates, and probe spectra of coupled Jaynes-Cummings cells",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 configuration error."
)]
struct Cli {
    #[command(subcommand)]
    command: CommandLine,
}

#[derive(clap::Subcommand)]
enum CommandLine {
    /// Write closed-form and numeric eigensystems as JSON.
    Eigen(FlagArgs),
    /// Write the golden-rule decay report as JSON.
    Rates(FlagArgs),
    /// Write a probe absorption spectrum as CSV plus a JSON sidecar.
    Spectrum(FlagArgs),
    /// Repeat eigen, rates, or spectrum over one swept parameter.
    Sweep(FlagArgs),
    /// Cross-validate closed forms against the numeric eigensolver.
    Verify(FlagArgs),
}

/// Runs the CLI on `args` (without the program name) and returns the exit
/// code: 0 success, 1 verification failure, 2 configuration error.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = std::iter::once("jc-lattice".to_string())
        .chain(args.into_iter().map(Into::into))
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.command {
        CommandLine::Eigen(flags) => RunConfig::resolve(&flags).and_then(|cfg| cmd_eigen(&cfg)),
        CommandLine::Rates(flags) => RunConfig::resolve(&flags).and_then(|cfg| cmd_rates(&cfg)),
        CommandLine::Spectrum(flags) => {
            RunConfig::resolve(&flags).and_then(|cfg| cmd_spectrum(&cfg))
        }
        CommandLine::Sweep(flags) => RunConfig::resolve(&flags).and_then(|cfg| cmd_sweep(&cfg)),
        CommandLine::Verify(flags) => RunConfig::resolve(&flags).and_then(|cfg| cmd_verify(&cfg)),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn check_format(cfg: &RunConfig, allowed: &[OutputFormat], what: &str) -> Result<(), String> {
    match cfg.format {
        None => Ok(()),
        Some(f) if allowed.contains(&f) => Ok(()),
        Some(f) => Err(format!("{what} cannot emit {f:?} output")),
    }
}

fn write_output(path: Option<&str>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("cannot write `{p}`: {e}")),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn json_text<T: Serialize>(doc: &T) -> Result<String, String> {
    serde_json::to_string_pretty(doc)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| format!("cannot serialize output: {e}"))
}

fn pair(c: Complex) -> [f64; 2] {
    [c.re, c.im]
}

/// Rate report for the configured lattice; `--manifold n >= 2` selects the
/// single-cell inter-doublet report instead of the collective one.
fn report_for(cfg: &RunConfig, params: &LatticeParams) -> Result<RateReport, String> {
    if cfg.manifold == 1 {
        rate_report(params).map_err(|e| e.to_string())
    } else {
        manifold_rate_report(params, cfg.manifold).map_err(|e| e.to_string())
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

// ---------------------------------------------------------------------------
// eigen

#[derive(Serialize)]
struct ClosedStateDoc {
    id: String,
    /// Closed-form energy (ladder frame; add `energy_offset` to compare
    /// with the numeric eigenvalues).
    energy: f64,
    /// Amplitudes over the canonical basis as `[re, im]` pairs.
    amplitudes: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct NumericDoc {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct EigenDocument {
    schema_version: u32,
    n_cells: usize,
    basis: Vec<String>,
    ground_energy: f64,
    /// `numeric eigenvalue = closed energy + energy_offset`.
    energy_offset: f64,
    closed_states: Vec<ClosedStateDoc>,
    numeric: NumericDoc,
}

fn closed_state_docs(params: &LatticeParams) -> Result<Vec<ClosedStateDoc>, String> {
    if params.n_cells == 1 {
        let doublet = dressed_state(1, params.g, params.delta).map_err(|e| e.to_string())?;
        let ladder =
            ladder_energies(1, params.omega_c, params.g, params.delta).map_err(|e| e.to_string())?;
        Ok(vec![
            ClosedStateDoc {
                id: "dressed_minus_1".to_string(),
                energy: ladder.omega_minus,
                amplitudes: doublet.minus.iter().copied().map(pair).collect(),
            },
            ClosedStateDoc {
                id: "dressed_plus_1".to_string(),
                energy: ladder.omega_plus,
                amplitudes: doublet.plus.iter().copied().map(pair).collect(),
            },
        ])
    } else {
        Ok(n_cell_eigensystem(params)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|s| ClosedStateDoc {
                id: s.kind.id(),
                energy: s.energy,
                amplitudes: s.amplitudes.into_iter().map(pair).collect(),
            })
            .collect())
    }
}

fn cmd_eigen(cfg: &RunConfig) -> Result<i32, String> {
    check_format(cfg, &[OutputFormat::Json], "eigen")?;
    let params = cfg.lattice_params()?;
    let closed_states = closed_state_docs(&params)?;
    let hamiltonian = build_hamiltonian(&params).map_err(|e| e.to_string())?;
    let numeric = diagonalize(&hamiltonian, &SolverConfig::default()).map_err(|e| e.to_string())?;
    let ground = ground_energy(params.n_cells, params.delta);
    let doc = EigenDocument {
        schema_version: SCHEMA_VERSION,
        n_cells: params.n_cells,
        basis: numeric.basis.iter().map(|b| b.to_string()).collect(),
        ground_energy: ground,
        energy_offset: -ground,
        closed_states,
        numeric: NumericDoc {
            eigenvalues: numeric.eigenvalues.clone(),
            eigenvectors: numeric
                .eigenvectors
                .iter()
                .map(|v| v.iter().copied().map(pair).collect())
                .collect(),
        },
    };
    write_output(cfg.output.as_deref(), &json_text(&doc)?)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// rates

#[derive(Serialize)]
struct RatesDocument {
    schema_version: u32,
    n_cells: usize,
    reservoir: ReservoirModel,
    entries: Vec<RateEntry>,
}

fn cmd_rates(cfg: &RunConfig) -> Result<i32, String> {
    check_format(cfg, &[OutputFormat::Json], "rates")?;
    let params = cfg.lattice_params()?;
    let report = report_for(cfg, &params)?;
    let doc = RatesDocument {
        schema_version: SCHEMA_VERSION,
        n_cells: report.n_cells,
        reservoir: report.reservoir,
        entries: report.entries,
    };
    write_output(cfg.output.as_deref(), &json_text(&doc)?)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// spectrum

#[derive(Serialize)]
struct PeakDoc {
    omega_c_minus_omega_p: f64,
    height: f64,
}

#[derive(Serialize)]
struct LineDoc {
    id: String,
    omega_c_minus_omega_p: f64,
    rate: f64,
}

#[derive(Serialize)]
struct SpectrumSidecar {
    schema_version: u32,
    n_cells: usize,
    omega_c: f64,
    probe_width: f64,
    points: usize,
    /// Mirror-symmetry witness about `omega_c`; `null` when no peaks rise
    /// above the grid.
    witness: Option<f64>,
    peaks: Vec<PeakDoc>,
    lines: Vec<LineDoc>,
    /// Pairs of line ids closer than five probe widths.
    unresolved: Vec<[String; 2]>,
}

/// Probe grid in `omega_p`, ascending. Explicit `wmin`/`wmax` are bounds on
/// `omega_c - omega_p` (the CSV axis); otherwise the grid spans every line
/// with margin.
fn probe_grid(cfg: &RunConfig, lines: &[SpectralLine]) -> Result<Vec<f64>, String> {
    match (cfg.wmin, cfg.wmax) {
        (Some(lo), Some(hi)) => {
            if !(hi > lo) {
                return Err(format!("wmax ({hi}) must exceed wmin ({lo})"));
            }
            if cfg.points < 2 {
                return Err("points must be at least 2".to_string());
            }
            Ok(linspace(cfg.omega_c - hi, cfg.omega_c - lo, cfg.points))
        }
        (None, None) => {
            let auto =
                default_grid(lines, cfg.omega_c, cfg.gamma).map_err(|e| e.to_string())?;
            if cfg.points == auto.len() {
                Ok(auto)
            } else if cfg.points < 2 {
                Err("points must be at least 2".to_string())
            } else {
                Ok(linspace(auto[0], *auto.last().unwrap(), cfg.points))
            }
        }
        _ => Err("wmin and wmax must be given together".to_string()),
    }
}

struct SpectrumArtifacts {
    csv: String,
    sidecar: SpectrumSidecar,
    witness: Option<f64>,
    peak_count: usize,
}

fn compute_spectrum(cfg: &RunConfig, params: &LatticeParams) -> Result<SpectrumArtifacts, String> {
    let report = report_for(cfg, params)?;
    let lines = spectral_lines(&report);
    if lines.is_empty() {
        return Err("every state is dark; there is no spectrum to plot".to_string());
    }
    let grid = probe_grid(cfg, &lines)?;
    let spectrum = susceptibility(&lines, &grid, cfg.gamma).map_err(|e| e.to_string())?;
    let peaks = find_peaks(&spectrum);
    let witness = symmetry_witness(
        &peaks,
        cfg.omega_c,
        default_pairing_tolerance(cfg.gamma),
    )
    .ok();

    // The grid ascends in omega_p, so the CSV axis omega_c - omega_p is
    // emitted by walking it backwards.
    let mut csv = String::with_capacity(32 * (grid.len() + 1));
    csv.push_str(CSV_HEADER_SPECTRUM);
    csv.push('\n');
    for i in (0..grid.len()).rev() {
        let x = cfg.omega_c - grid[i];
        let y = spectrum.values[i];
        csv.push_str(&format!("{x},{y}\n"));
    }

    let mut peak_docs: Vec<PeakDoc> = peaks
        .iter()
        .map(|p| PeakDoc {
            omega_c_minus_omega_p: cfg.omega_c - p.frequency,
            height: p.height,
        })
        .collect();
    peak_docs.sort_by(|a, b| a.omega_c_minus_omega_p.total_cmp(&b.omega_c_minus_omega_p));
    let line_docs: Vec<LineDoc> = lines
        .iter()
        .map(|l| LineDoc {
            id: l.origin.clone(),
            omega_c_minus_omega_p: cfg.omega_c - l.bohr_frequency,
            rate: l.rate,
        })
        .collect();
    let unresolved: Vec<[String; 2]> = unresolved_pairs(&lines, cfg.gamma)
        .into_iter()
        .map(|(i, j)| [lines[i].origin.clone(), lines[j].origin.clone()])
        .collect();

    let peak_count = peaks.len();
    let sidecar = SpectrumSidecar {
        schema_version: SCHEMA_VERSION,
        n_cells: report.n_cells,
        omega_c: cfg.omega_c,
        probe_width: cfg.gamma,
        points: grid.len(),
        witness,
        peaks: peak_docs,
        lines: line_docs,
        unresolved,
    };
    Ok(SpectrumArtifacts {
        csv,
        sidecar,
        witness,
        peak_count,
    })
}

fn cmd_spectrum(cfg: &RunConfig) -> Result<i32, String> {
    check_format(cfg, &[OutputFormat::Csv], "spectrum")?;
    let params = cfg.lattice_params()?;
    let artifacts = compute_spectrum(cfg, &params)?;
    for [a, b] in &artifacts.sidecar.unresolved {
        eprintln!("warning: lines `{a}` and `{b}` are closer than five probe widths and may not resolve");
    }
    let csv_path = cfg.output.clone().unwrap_or_else(|| "spectrum.csv".to_string());
    let sidecar_path = std::path::Path::new(&csv_path)
        .with_extension("json")
        .to_string_lossy()
        .into_owned();
    if sidecar_path == csv_path {
        return Err(format!(
            "output path `{csv_path}` collides with its JSON sidecar; use a different extension"
        ));
    }
    write_output(Some(&csv_path), &artifacts.csv)?;
    write_output(Some(&sidecar_path), &json_text(&artifacts.sidecar)?)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// sweep

/// Applies the swept value to the configuration. Sweeping `gamma_a` or
/// `gamma_c` sets a damping rate shared by every cell.
fn apply_sweep_param(cfg: &mut RunConfig, name: &str, value: f64) -> Result<(), String> {
    match name {
        "delta" => cfg.delta = value,
        "kappa" => cfg.kappa = value,
        "g" => cfg.g = value,
        "omega_c" => cfg.omega_c = value,
        "gamma" => cfg.gamma = value,
        "gamma_a" => cfg.gamma_a = vec![value],
        "gamma_c" => cfg.gamma_c = vec![value],
        other => {
            return Err(format!(
                "unknown sweep parameter `{other}` (expected delta, kappa, g, omega_c, \
                 gamma, gamma_a, or gamma_c)"
            ))
        }
    }
    Ok(())
}

/// Reads `JC_LATTICE_THREADS`: unset or 0 means auto, anything else is the
/// worker cap. Non-numeric values are a configuration error.
fn thread_count(points: usize) -> Result<usize, String> {
    let requested = match std::env::var("JC_LATTICE_THREADS") {
        Err(std::env::VarError::NotPresent) => 0,
        Err(e) => return Err(format!("JC_LATTICE_THREADS is not valid unicode: {e}")),
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("JC_LATTICE_THREADS must be a non-negative integer, got `{s}`"))?,
    };
    let auto = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let workers = if requested == 0 { auto } else { requested };
    Ok(workers.clamp(1, points.max(1)))
}

/// One sweep row: the swept value followed by the target's columns.
fn sweep_row(
    base: &RunConfig,
    param: &str,
    value: f64,
    target: SweepTarget,
) -> Result<Vec<String>, String> {
    let mut cfg = base.clone();
    apply_sweep_param(&mut cfg, param, value)?;
    let params = cfg.lattice_params()?;
    let mut row = vec![value.to_string()];
    match target {
        SweepTarget::Eigen => {
            let h = build_hamiltonian(&params).map_err(|e| e.to_string())?;
            let sys = diagonalize(&h, &SolverConfig::default()).map_err(|e| e.to_string())?;
            row.extend(sys.eigenvalues.iter().map(|e| e.to_string()));
        }
        SweepTarget::Rates => {
            let report = report_for(&cfg, &params)?;
            row.extend(report.entries.iter().map(|e| e.rate.to_string()));
        }
        SweepTarget::Spectrum => {
            let artifacts = compute_spectrum(&cfg, &params)?;
            row.push(artifacts.witness.unwrap_or(f64::NAN).to_string());
            row.push(artifacts.peak_count.to_string());
        }
    }
    Ok(row)
}

fn sweep_header(
    cfg: &RunConfig,
    param: &str,
    first_value: f64,
    target: SweepTarget,
) -> Result<Vec<String>, String> {
    let mut header = vec![param.to_string()];
    match target {
        SweepTarget::Eigen => {
            header.extend((0..2 * cfg.cells).map(|i| format!("eig_{i}")));
        }
        SweepTarget::Rates => {
            let mut probe = cfg.clone();
            apply_sweep_param(&mut probe, param, first_value)?;
            let params = probe.lattice_params()?;
            let report = report_for(&probe, &params)?;
            header.extend(report.entries.iter().map(|e| format!("rate_{}", e.id)));
        }
        SweepTarget::Spectrum => {
            header.push("witness".to_string());
            header.push("peak_count".to_string());
        }
    }
    Ok(header)
}

fn sweep_rows(
    cfg: &RunConfig,
    param: &str,
    values: &[f64],
    target: SweepTarget,
    workers: usize,
) -> Result<Vec<Vec<String>>, String> {
    if workers <= 1 {
        return values
            .iter()
            .map(|&v| sweep_row(cfg, param, v, target))
            .collect();
    }
    let chunk = values.len().div_ceil(workers);
    let mut rows: Vec<Result<Vec<String>, String>> = Vec::with_capacity(values.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = values
            .chunks(chunk)
            .map(|slice| {
                scope.spawn(move || {
                    slice
                        .iter()
                        .map(|&v| sweep_row(cfg, param, v, target))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            rows.extend(handle.join().expect("sweep worker panicked"));
        }
    });
    rows.into_iter().collect()
}

fn cmd_sweep(cfg: &RunConfig) -> Result<i32, String> {
    check_format(cfg, &[OutputFormat::Csv, OutputFormat::Json], "sweep")?;
    let param = cfg
        .sweep_param
        .clone()
        .ok_or("sweep requires --param <NAME>")?;
    if cfg.sweep_steps == 0 {
        return Err("sweep requires at least one step".to_string());
    }
    let target = cfg.sweep_target;
    let values = linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_steps);
    let workers = thread_count(values.len())?;
    let header = sweep_header(cfg, &param, values[0], target)?;
    let rows = sweep_rows(cfg, &param, &values, target, workers)?;

    let text = match cfg.format {
        Some(OutputFormat::Json) => {
            let docs: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (key, cell) in header.iter().zip(row) {
                        let value = cell
                            .parse::<f64>()
                            .ok()
                            .and_then(serde_json::Number::from_f64)
                            .map(serde_json::Value::Number)
                            .unwrap_or(serde_json::Value::Null);
                        obj.insert(key.clone(), value);
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            json_text(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "swept": param,
                "rows": docs,
            }))?
        }
        _ => {
            let mut text = header.join(",");
            text.push('\n');
            for row in &rows {
                text.push_str(&row.join(","));
                text.push('\n');
            }
            text
        }
    };
    write_output(cfg.output.as_deref(), &text)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify

fn randomized_params(base: &LatticeParams, rng: &mut ChaCha8Rng) -> LatticeParams {
    let n = base.n_cells;
    let delta = rng.gen_range(-5.0..5.0);
    let g = rng.gen_range(0.05..2.5);
    let kappa = if n == 1 { 0.0 } else { rng.gen_range(0.0..3.0) };
    let damping = (0..n)
        .map(|_| CellDamping::new(rng.gen_range(0.0..0.1), rng.gen_range(0.0..0.1)))
        .collect();
    let reservoir = if rng.gen_bool(0.5) {
        ReservoirModel::CommonAtomsCommonCavities
    } else {
        ReservoirModel::IndependentAtomsCommonCavities
    };
    LatticeParams {
        n_cells: n,
        omega_c: base.omega_c,
        delta,
        g,
        kappa,
        damping,
        reservoir,
    }
}

fn cmd_verify(cfg: &RunConfig) -> Result<i32, String> {
    if cfg.format.is_some() {
        return Err("verify writes a plain-text report; --format is not supported".to_string());
    }
    let base = cfg.lattice_params()?;
    let trials = cfg.trials.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut max_energy_rel = 0.0_f64;
    let mut max_rate_abs = 0.0_f64;
    let mut max_projector = 0.0_f64;
    for trial in 0..trials {
        let params = if trial == 0 {
            base.clone()
        } else {
            randomized_params(&base, &mut rng)
        };
        match cross_validate(&params, &SolverConfig::default()) {
            Ok(check) => {
                max_energy_rel = max_energy_rel.max(check.energy_error_rel());
                max_rate_abs = max_rate_abs.max(check.max_rate_error);
                max_projector = max_projector.max(check.max_projector_defect);
            }
            Err(CrossCheckError::Lattice(e)) => return Err(e.to_string()),
            Err(e) => {
                let mut out = String::new();
                out.push_str(&format!(
                    "verified {trial} of {trials} parameter sets (N = {}, seed = {})\n",
                    base.n_cells, cfg.seed
                ));
                out.push_str(&format!("cross-validation aborted: {e}\nFAIL\n"));
                write_output(cfg.output.as_deref(), &out)?;
                return Ok(1);
            }
        }
    }
    let pass = max_energy_rel <= VERIFY_ENERGY_REL_TOL
        && max_rate_abs <= VERIFY_RATE_ABS_TOL
        && max_projector <= VERIFY_PROJECTOR_TOL;
    let mut out = String::new();
    out.push_str(&format!(
        "verified {trials} parameter sets (N = {}, seed = {})\n",
        base.n_cells, cfg.seed
    ));
    out.push_str(&format!(
        "max relative energy deviation: {max_energy_rel:.3e} (tolerance {VERIFY_ENERGY_REL_TOL:.0e})\n"
    ));
    out.push_str(&format!(
        "max absolute rate deviation:   {max_rate_abs:.3e} (tolerance {VERIFY_RATE_ABS_TOL:.0e})\n"
    ));
    out.push_str(&format!(
        "max projector defect:          {max_projector:.3e} (tolerance {VERIFY_PROJECTOR_TOL:.0e})\n"
    ));
    out.push_str(if pass { "PASS\n" } else { "FAIL\n" });
    write_output(cfg.output.as_deref(), &out)?;
    Ok(if pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
