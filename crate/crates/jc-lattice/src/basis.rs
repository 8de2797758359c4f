//! Labels for the single-excitation basis of an `N`-cell lattice.
//!
//! The sector with one excitation is spanned by `2N` states: cell `i` can
//! hold the excitation either in its atom (`|0...0e...0>`) or as one photon
//! in its cavity (`|0...1g...0>`). States are ordered cell-major with the
//! atom before the photon:
//!
//! ```text
//! index 0: AtomExcited(0), 1: PhotonIn(0), 2: AtomExcited(1), 3: PhotonIn(1), ...
//! ```

use serde::{Deserialize, Serialize};

/// One basis state of the single-excitation sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisLabel {
    /// Atom of cell `i` excited, all cavities empty.
    AtomExcited(usize),
    /// One photon in cavity `i`, all atoms in the ground state.
    PhotonIn(usize),
}

impl BasisLabel {
    /// Position of this label in the canonical ordering.
    pub fn index(&self) -> usize {
        match *self {
            BasisLabel::AtomExcited(i) => 2 * i,
            BasisLabel::PhotonIn(i) => 2 * i + 1,
        }
    }

    /// Label at `index` in the canonical ordering.
    pub fn from_index(index: usize) -> Self {
        if index % 2 == 0 {
            BasisLabel::AtomExcited(index / 2)
        } else {
            BasisLabel::PhotonIn(index / 2)
        }
    }

    /// Cell this label belongs to.
    pub fn cell(&self) -> usize {
        match *self {
            BasisLabel::AtomExcited(i) | BasisLabel::PhotonIn(i) => i,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, BasisLabel::AtomExcited(_))
    }

    /// The full ordered basis for `n_cells` cells.
    pub fn basis(n_cells: usize) -> Vec<BasisLabel> {
        (0..2 * n_cells).map(BasisLabel::from_index).collect()
    }
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            BasisLabel::AtomExcited(i) => write!(f, "atom:{i}"),
            BasisLabel::PhotonIn(i) => write!(f, "photon:{i}"),
        }
    }
}
