//! Probe-beam absorption spectra synthesized from emission lines.
//!
//! A weak probe scanning across the single-excitation resonances sees one
//! Lorentzian per radiating eigenstate: the absorptive response at probe
//! frequency `omega_p` is
//!
//! ```text
//! Im chi(omega_p) = sum_lines rate * width / ((bohr - omega_p)^2 + width^2)
//! ```
//!
//! where `width` is the probe linewidth and `rate` the golden-rule decay
//! rate of the line's eigenstate. Dark states are dropped before synthesis:
//! they do not couple to the probe. The peak-height asymmetry of the
//! resulting spectrum ([`symmetry_witness`]) is the experimentally visible
//! signature of how entanglement is shared between the radiating states.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{RateClass, RateReport};

/// Number of samples in [`default_grid`].
pub const DEFAULT_GRID_POINTS: usize = 4001;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("no spectral lines to synthesize (all states dark?)")]
    EmptyLineList,
    #[error("probe width must be positive, got {0}")]
    NonPositiveWidth(f64),
    #[error("probe grid must be strictly increasing")]
    UnsortedGrid,
    #[error("no peaks found in the sampled spectrum")]
    NoPeaks,
}

/// One radiating transition: position and strength of a Lorentzian.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralLine {
    pub bohr_frequency: f64,
    pub rate: f64,
    /// Identifier of the emitting eigenstate.
    pub origin: String,
}

/// Extracts the radiating lines of a rate report, dropping dark states.
pub fn spectral_lines(report: &RateReport) -> Vec<SpectralLine> {
    report
        .entries
        .iter()
        .filter(|e| e.class != RateClass::Dark)
        .map(|e| SpectralLine {
            bohr_frequency: e.bohr_frequency,
            rate: e.rate,
            origin: e.id.clone(),
        })
        .collect()
}

/// Uniform probe grid centred on `center`, spanning every line with margin:
/// half-width `2 max|bohr - center| + 10 width`, [`DEFAULT_GRID_POINTS`]
/// samples.
pub fn default_grid(
    lines: &[SpectralLine],
    center: f64,
    probe_width: f64,
) -> Result<Vec<f64>, SpectraError> {
    if lines.is_empty() {
        return Err(SpectraError::EmptyLineList);
    }
    if !(probe_width > 0.0) {
        return Err(SpectraError::NonPositiveWidth(probe_width));
    }
    let spread = lines
        .iter()
        .map(|l| (l.bohr_frequency - center).abs())
        .fold(0.0, f64::max);
    let half = 2.0 * spread + 10.0 * probe_width;
    let n = DEFAULT_GRID_POINTS;
    Ok((0..n)
        .map(|i| center - half + 2.0 * half * i as f64 / (n - 1) as f64)
        .collect())
}

/// A sampled absorption spectrum on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSamples {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub probe_width: f64,
}

/// Samples `Im chi` over `grid` for the given lines and probe width.
pub fn susceptibility(
    lines: &[SpectralLine],
    grid: &[f64],
    probe_width: f64,
) -> Result<SpectrumSamples, SpectraError> {
    if lines.is_empty() {
        return Err(SpectraError::EmptyLineList);
    }
    if !(probe_width > 0.0) {
        return Err(SpectraError::NonPositiveWidth(probe_width));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(SpectraError::UnsortedGrid);
    }
    let values = grid
        .iter()
        .map(|&omega_p| {
            lines
                .iter()
                .map(|l| {
                    let detune = l.bohr_frequency - omega_p;
                    l.rate * probe_width / (detune * detune + probe_width * probe_width)
                })
                .sum()
        })
        .collect();
    Ok(SpectrumSamples {
        grid: grid.to_vec(),
        values,
        probe_width,
    })
}

/// Pairs of lines closer than five probe widths: the sampled spectrum will
/// not resolve them as separate peaks.
pub fn unresolved_pairs(lines: &[SpectralLine], probe_width: f64) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if (lines[i].bohr_frequency - lines[j].bohr_frequency).abs() < 5.0 * probe_width {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// A local maximum of the sampled spectrum, refined by quadratic
/// interpolation through the three samples around the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Peak {
    pub frequency: f64,
    pub height: f64,
}

/// Finds interior local maxima of the sampled spectrum.
pub fn find_peaks(spectrum: &SpectrumSamples) -> Vec<Peak> {
    let y = &spectrum.values;
    let x = &spectrum.grid;
    let mut peaks = Vec::new();
    for i in 1..y.len().saturating_sub(1) {
        if y[i] > y[i - 1] && y[i] >= y[i + 1] {
            let denom = y[i - 1] - 2.0 * y[i] + y[i + 1];
            let (freq, height) = if denom < 0.0 {
                let offset = 0.5 * (y[i - 1] - y[i + 1]) / denom;
                let step = 0.5 * (x[i + 1] - x[i - 1]);
                (
                    x[i] + offset * step,
                    y[i] - 0.25 * (y[i - 1] - y[i + 1]) * offset,
                )
            } else {
                (x[i], y[i])
            };
            peaks.push(Peak { frequency: freq, height });
        }
    }
    peaks
}

/// Peak-height asymmetry of a spectrum about `center`.
///
/// Every peak at `center + d` with `|d| > tolerance` is paired with the
/// peak nearest to the mirrored position `center - d`; the pair scores
/// `|h1 - h2| / (h1 + h2)` and a peak whose mirror is farther than
/// `tolerance` scores `1`. Peaks within `tolerance` of the center pair with
/// themselves and score `0`. The witness is the largest score: `0` for a
/// perfectly mirror-symmetric spectrum, `1` when some peak has no partner.
pub fn symmetry_witness(peaks: &[Peak], center: f64, tolerance: f64) -> Result<f64, SpectraError> {
    if peaks.is_empty() {
        return Err(SpectraError::NoPeaks);
    }
    let mut witness: f64 = 0.0;
    for peak in peaks {
        let d = peak.frequency - center;
        if d.abs() <= tolerance {
            continue;
        }
        let mirrored = center - d;
        let partner = peaks
            .iter()
            .min_by(|a, b| {
                (a.frequency - mirrored)
                    .abs()
                    .total_cmp(&(b.frequency - mirrored).abs())
            })
            .expect("peaks is non-empty");
        let score = if (partner.frequency - mirrored).abs() > tolerance {
            1.0
        } else {
            (peak.height - partner.height).abs() / (peak.height + partner.height)
        };
        witness = witness.max(score);
    }
    Ok(witness)
}

/// Pairing tolerance used by the command-line tools: three probe widths.
pub fn default_pairing_tolerance(probe_width: f64) -> f64 {
    3.0 * probe_width
}
