//! Lattice parameters and their validation.
//!
//! All frequencies and rates share one unit (conventionally the atom-cavity
//! coupling `g` is used as the scale, but nothing here assumes it). The
//! detuning is `delta = omega_a - omega_c`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Damping rates of one cell: `gamma_a` for the atom, `gamma_c` for the
/// cavity mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellDamping {
    pub gamma_a: f64,
    pub gamma_c: f64,
}

impl CellDamping {
    pub fn new(gamma_a: f64, gamma_c: f64) -> Self {
        Self { gamma_a, gamma_c }
    }

    /// Combined single-cell decay budget `gamma_a + gamma_c`.
    pub fn total(&self) -> f64 {
        self.gamma_a + self.gamma_c
    }
}

/// Which reservoir couples to which subsystem.
///
/// `CommonAtomsCommonCavities`: one shared reservoir for all atoms and one
/// for all cavities, so decay amplitudes interfere (`|sum_j sqrt(gamma_j)
/// c_j|^2`). `IndependentAtomsCommonCavities`: each atom has a private
/// reservoir (`sum_j gamma_aj |c_j|^2`) while the cavities still share one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReservoirModel {
    CommonAtomsCommonCavities,
    IndependentAtomsCommonCavities,
}

/// Parameters of an `N`-cell lattice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeParams {
    /// Number of cells `N >= 1`.
    pub n_cells: usize,
    /// Cavity frequency `omega_c`.
    pub omega_c: f64,
    /// Atom-cavity detuning `delta = omega_a - omega_c`.
    pub delta: f64,
    /// Atom-cavity coupling `g >= 0`.
    pub g: f64,
    /// Photon hopping rate; enters the Hamiltonian as `-kappa` between every
    /// pair of cavities. Must be zero for a single cell.
    pub kappa: f64,
    /// Per-cell damping rates; must have exactly `n_cells` entries.
    pub damping: Vec<CellDamping>,
    pub reservoir: ReservoirModel,
}

/// Validation failures for [`LatticeParams`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamsError {
    #[error("damping rate must be non-negative, got {value} for cell {cell}")]
    NegativeRate { cell: usize, value: f64 },
    #[error("lattice must contain at least one cell")]
    EmptyLattice,
    #[error("damping list has {got} entries but the lattice has {expected} cells")]
    DampingLengthMismatch { got: usize, expected: usize },
    #[error("photon hopping requires at least two cells (kappa = {kappa})")]
    KappaOnSingleCell { kappa: f64 },
    #[error("atom-cavity coupling must be non-negative, got {0}")]
    NegativeCoupling(f64),
}

impl LatticeParams {
    /// Lattice with the same damping in every cell.
    pub fn uniform(
        n_cells: usize,
        omega_c: f64,
        delta: f64,
        g: f64,
        kappa: f64,
        damping: CellDamping,
        reservoir: ReservoirModel,
    ) -> Self {
        Self {
            n_cells,
            omega_c,
            delta,
            g,
            kappa,
            damping: vec![damping; n_cells],
            reservoir,
        }
    }

    /// Checks structural invariants.
    pub fn validate(&self) -> Result<(), ParamsError> {
        if self.n_cells == 0 {
            return Err(ParamsError::EmptyLattice);
        }
        if self.g < 0.0 {
            return Err(ParamsError::NegativeCoupling(self.g));
        }
        if self.n_cells == 1 && self.kappa != 0.0 {
            return Err(ParamsError::KappaOnSingleCell { kappa: self.kappa });
        }
        if self.damping.len() != self.n_cells {
            return Err(ParamsError::DampingLengthMismatch {
                got: self.damping.len(),
                expected: self.n_cells,
            });
        }
        for (cell, d) in self.damping.iter().enumerate() {
            if d.gamma_a < 0.0 || d.gamma_a.is_nan() {
                return Err(ParamsError::NegativeRate {
                    cell,
                    value: d.gamma_a,
                });
            }
            if d.gamma_c < 0.0 || d.gamma_c.is_nan() {
                return Err(ParamsError::NegativeRate {
                    cell,
                    value: d.gamma_c,
                });
            }
        }
        Ok(())
    }

    /// Atom frequency `omega_a = omega_c + delta`.
    pub fn omega_a(&self) -> f64 {
        self.omega_c + self.delta
    }

    /// True when every cell has the same damping pair.
    pub fn identical_damping(&self) -> bool {
        self.damping
            .windows(2)
            .all(|w| w[0].gamma_a == w[1].gamma_a && w[0].gamma_c == w[1].gamma_c)
    }

    /// Largest single-cell decay budget `max_i (gamma_ai + gamma_ci)`;
    /// rates above it are superradiant, far below it dark.
    pub fn max_cell_total(&self) -> f64 {
        self.damping.iter().map(CellDamping::total).fold(0.0, f64::max)
    }
}
