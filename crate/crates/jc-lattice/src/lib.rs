//! Eigenstates, decay rates, and probe spectra for lattices of coupled
//! Jaynes-Cummings cells.
//!
//! A cell is one two-level atom coupled to one cavity mode with strength `g`;
//! `N` cells are coupled by photon hopping `-kappa` between every pair of
//! cavities. Within the single-excitation sector the closed-form eigenstates
//! split into `2N - 2` antisymmetric states (dark under a common reservoir)
//! and two fully symmetric states (superradiant), with Fermi-golden-rule
//! decay rates for either a common reservoir or independent atomic
//! reservoirs.
//!
//! Every closed form is cross-checkable against a self-contained complex
//! Jacobi eigensolver ([`eigensolver`]) which diagonalizes the same
//! Hamiltonian numerically; [`crosscheck`] bundles that comparison.
//!
//! Modules:
//! - [`params`], [`basis`], [`linalg`]: lattice parameters, basis labelling,
//!   and the Hermitian-matrix/eigensystem containers.
//! - [`jc_single`]: a single cell's dressed ladder, mixing angles, and
//!   doublet decay rates.
//! - [`lattice`]: the coupled-cell Hamiltonian, closed-form eigensystems,
//!   transition rates, and entanglement metrics.
//! - [`eigensolver`]: cyclic complex Jacobi diagonalization and a generic
//!   golden-rule evaluation on numeric eigenvectors.
//! - [`spectra`]: Lorentzian probe-absorption synthesis, peak finding, and
//!   the spectral symmetry witness.

pub mod basis;
pub mod crosscheck;
pub mod eigensolver;
pub mod jc_single;
pub mod lattice;
pub mod linalg;
pub mod params;
pub mod spectra;

pub use basis::BasisLabel;
pub use linalg::{Complex, EigenSystem, HermitianMatrix};
pub use params::{CellDamping, LatticeParams, ParamsError, ReservoirModel};
