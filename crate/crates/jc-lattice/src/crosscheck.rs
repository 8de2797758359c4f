//! Cross-validation of every closed form against the numeric eigensolver.
//!
//! The closed-form energies, eigenvectors and golden-rule rates of
//! [`crate::lattice`] and [`crate::jc_single`] are checked against
//! [`crate::eigensolver::diagonalize`] on the same Hamiltonian:
//!
//! * energies: each numeric eigenvalue must equal the closed energy plus
//!   the frame offset (`delta/2` for one cell, `delta` for a lattice);
//! * subspaces: for every degenerate block, the orthogonal projector built
//!   from the (generally non-orthogonal) closed states must match the
//!   projector onto the corresponding numeric eigenvectors;
//! * rates: per-state decay rates are not individually well defined inside
//!   a degenerate block — any basis of the block is equally valid — so the
//!   comparison is the basis-invariant block total `tr(P Gamma_op)`, where
//!   `Gamma_op` is the golden-rule rate operator, against the sum of the
//!   numeric rates over the block.
//!
//! The single-cell dressed states are quoted in a photon phase gauge that
//! differs from the real-coupling matrix convention; energies and rates are
//! gauge-invariant and are checked, while the projector comparison applies
//! to lattices (`N >= 2`).

use thiserror::Error;

use crate::eigensolver::{diagonalize, golden_rule_rate, SolverConfig, SolverError};
use crate::jc_single;
use crate::lattice::{build_hamiltonian, ground_energy, n_cell_eigensystem, LatticeError};
use crate::linalg::{degenerate_blocks, matrix_distance, span_projector, Complex};
use crate::params::{LatticeParams, ReservoirModel};

/// Window around a closed-form energy within which the matching numeric
/// eigenvalues must fall, relative to the spectral scale.
const ENERGY_MATCH_WINDOW: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CrossCheckError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(
        "numeric eigenvalue {numeric} does not match any closed-form energy \
         (nearest expected {expected})"
    )]
    EnergyMismatch { numeric: f64, expected: f64 },
}

/// Worst-case deviations between the closed forms and the numeric solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCheck {
    /// Largest `|numeric eigenvalue - (closed energy + offset)|`.
    pub max_energy_error: f64,
    /// Largest per-block difference between `tr(P Gamma_op)` and the summed
    /// numeric rates.
    pub max_rate_error: f64,
    /// Largest Frobenius distance between closed and numeric block
    /// projectors (`0` for a single cell, see module docs).
    pub max_projector_defect: f64,
    /// Spectral scale `max(1, max |eigenvalue|)` for relative judgements.
    pub energy_scale: f64,
    /// Largest numeric decay rate (floor `max cell total`).
    pub rate_scale: f64,
}

impl CrossCheck {
    /// Relative energy error.
    pub fn energy_error_rel(&self) -> f64 {
        self.max_energy_error / self.energy_scale
    }

    /// Rate error relative to the largest rate in play.
    pub fn rate_error_rel(&self) -> f64 {
        self.max_rate_error / self.rate_scale.max(f64::MIN_POSITIVE)
    }
}

/// Golden-rule rate operator: the PSD matrix with
/// `<v| Gamma_op |v> = ` golden-rule rate of `v`.
fn rate_operator(params: &LatticeParams) -> Vec<Complex> {
    let n = params.n_cells;
    let dim = 2 * n;
    let mut op = vec![Complex::new(0.0, 0.0); dim * dim];
    // Cavity channel: common photon reservoir in both models.
    for i in 0..n {
        for j in 0..n {
            let w = params.damping[i].gamma_c.sqrt() * params.damping[j].gamma_c.sqrt();
            op[(2 * i + 1) * dim + (2 * j + 1)] += Complex::new(w, 0.0);
        }
    }
    match params.reservoir {
        ReservoirModel::CommonAtomsCommonCavities => {
            for i in 0..n {
                for j in 0..n {
                    let w = params.damping[i].gamma_a.sqrt() * params.damping[j].gamma_a.sqrt();
                    op[(2 * i) * dim + (2 * j)] += Complex::new(w, 0.0);
                }
            }
        }
        ReservoirModel::IndependentAtomsCommonCavities => {
            for i in 0..n {
                op[(2 * i) * dim + (2 * i)] += Complex::new(params.damping[i].gamma_a, 0.0);
            }
        }
    }
    op
}

/// `tr(A B)` for two Hermitian matrices (real by symmetry).
fn trace_product(a: &[Complex], b: &[Complex], dim: usize) -> f64 {
    let mut t = Complex::new(0.0, 0.0);
    for i in 0..dim {
        for j in 0..dim {
            t += a[i * dim + j] * b[j * dim + i];
        }
    }
    debug_assert!(t.im.abs() < 1e-10 * (1.0 + t.re.abs()));
    t.re
}

/// Closed-form states as `(energy, amplitudes)`, any order.
fn closed_states(params: &LatticeParams) -> Result<Vec<(f64, Vec<Complex>)>, LatticeError> {
    if params.n_cells == 1 {
        let doublet = jc_single::dressed_state(1, params.g, params.delta)?;
        let ladder = jc_single::ladder_energies(1, params.omega_c, params.g, params.delta)?;
        Ok(vec![
            (ladder.omega_minus, doublet.minus.to_vec()),
            (ladder.omega_plus, doublet.plus.to_vec()),
        ])
    } else {
        Ok(n_cell_eigensystem(params)?
            .into_iter()
            .map(|s| (s.energy, s.amplitudes))
            .collect())
    }
}

/// Validates the closed forms for `params` against the numeric eigensolver.
pub fn cross_validate(
    params: &LatticeParams,
    config: &SolverConfig,
) -> Result<CrossCheck, CrossCheckError> {
    let h = build_hamiltonian(params)?;
    let numeric = diagonalize(&h, config)?;
    let dim = 2 * params.n_cells;

    let mut closed = closed_states(params)?;
    closed.sort_by(|a, b| a.0.total_cmp(&b.0));
    let offset = -ground_energy(params.n_cells, params.delta);
    let closed_energies: Vec<f64> = closed.iter().map(|(e, _)| e + offset).collect();

    let energy_scale = numeric
        .eigenvalues
        .iter()
        .fold(1.0f64, |m, &e| m.max(e.abs()));

    // Degenerate blocks are defined on the closed side; the ascending
    // numeric eigenvalues are partitioned by the same counts.
    let blocks = degenerate_blocks(&closed_energies);
    let rate_op = rate_operator(params);

    let mut max_energy_error: f64 = 0.0;
    let mut max_rate_error: f64 = 0.0;
    let mut max_projector_defect: f64 = 0.0;
    let mut rate_scale = params.max_cell_total();

    for block in &blocks {
        let mut closed_block_vectors = Vec::with_capacity(block.len());
        let mut numeric_rate_sum = 0.0;
        for &k in block {
            let gap = (numeric.eigenvalues[k] - closed_energies[k]).abs();
            if gap > ENERGY_MATCH_WINDOW * energy_scale {
                return Err(CrossCheckError::EnergyMismatch {
                    numeric: numeric.eigenvalues[k],
                    expected: closed_energies[k],
                });
            }
            max_energy_error = max_energy_error.max(gap);
            let rate = golden_rule_rate(&numeric.eigenvectors[k], &params.damping, params.reservoir);
            rate_scale = rate_scale.max(rate);
            numeric_rate_sum += rate;
            closed_block_vectors.push(closed[k].1.clone());
        }
        let closed_projector = span_projector(&closed_block_vectors, dim);
        let closed_rate = trace_product(&closed_projector, &rate_op, dim);
        max_rate_error = max_rate_error.max((closed_rate - numeric_rate_sum).abs());

        if params.n_cells >= 2 {
            let mut numeric_projector = vec![Complex::new(0.0, 0.0); dim * dim];
            for &k in block {
                let v = &numeric.eigenvectors[k];
                for i in 0..dim {
                    for j in 0..dim {
                        numeric_projector[i * dim + j] += v[i] * v[j].conj();
                    }
                }
            }
            let defect = matrix_distance(&closed_projector, &numeric_projector, dim);
            max_projector_defect = max_projector_defect.max(defect);
        }
    }

    Ok(CrossCheck {
        max_energy_error,
        max_rate_error,
        max_projector_defect,
        energy_scale,
        rate_scale,
    })
}
