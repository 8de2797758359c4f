//! Closed-form eigenstates and decay rates of the coupled lattice.
//!
//! In the single-excitation sector the lattice Hamiltonian is a `2N x 2N`
//! Hermitian matrix over the canonical basis of [`BasisLabel`]s: each cell
//! contributes its excited atom (`omega_c + delta` on the diagonal) and its
//! photon (`omega_c`), the atom couples to its own photon with `+g`, and
//! every pair of photons is linked by the hopping element `-kappa`.
//!
//! The closed forms below describe that matrix exactly:
//!
//! * two cells: four states labelled by a photon-parity sign `epsilon` and
//!   a doublet branch `varepsilon`, with amplitude pattern
//!   `(w, u, eps w, eps u)`;
//! * `N` cells: a doubly degenerate antisymmetric manifold (`N - 1` states
//!   in each of an upper and a lower multiplet, each state supported on one
//!   cell pair) plus one symmetric doublet delocalized over the whole
//!   lattice (a W-like state over the cells).
//!
//! Closed-form energies are quoted in the same frame as the published
//! single-cell ladder ([`crate::jc_single`]); the numeric matrix eigenvalue
//! equals the closed energy plus `delta` for `N >= 2` (plus `delta / 2` for
//! a single cell). Uniform offsets cancel in every observable frequency.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::jc_single::{self, SingleCellError};
use crate::linalg::{Complex, HermitianMatrix};
use crate::params::{LatticeParams, ParamsError, ReservoirModel};

/// Tolerance on the amplitude balance below which a state is no longer
/// reported as maximally entangled.
pub const ENTANGLEMENT_BALANCE_TOL: f64 = 1e-6;

/// Fraction of the largest single-cell total rate below which a state is
/// classified as dark.
pub const DARK_RATE_FRACTION: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    SingleCell(#[from] SingleCellError),
    #[error("expected exactly {expected} cells, got {got}")]
    CellCountMismatch { expected: usize, got: usize },
    #[error("needs at least {min} cells, got {got}")]
    TooFewCells { min: usize, got: usize },
    #[error("closed-form eigenstates are undefined at g = 0")]
    ZeroCoupling,
    #[error("this check applies only to independent atomic reservoirs")]
    WrongReservoirModel,
    #[error("this check requires identical damping rates on every cell")]
    NonIdenticalDamping,
    #[error("cannot compute amplitude balance of a zero vector")]
    ZeroVector,
}

/// Single-excitation lattice Hamiltonian over the canonical basis.
pub fn build_hamiltonian(params: &LatticeParams) -> Result<HermitianMatrix, LatticeError> {
    params.validate()?;
    let n = params.n_cells;
    let mut h = HermitianMatrix::zeros(2 * n);
    for i in 0..n {
        h.set_diagonal(2 * i, params.omega_a());
        h.set_diagonal(2 * i + 1, params.omega_c);
        h.set_pair(2 * i, 2 * i + 1, Complex::new(params.g, 0.0));
        for j in (i + 1)..n {
            h.set_pair(2 * i + 1, 2 * j + 1, Complex::new(-params.kappa, 0.0));
        }
    }
    Ok(h)
}

/// Energy of the zero-excitation state in the frame of the closed-form
/// energies: `-delta / 2` for one cell, `-delta` for a lattice.
pub fn ground_energy(n_cells: usize, delta: f64) -> f64 {
    if n_cells == 1 {
        -delta / 2.0
    } else {
        -delta
    }
}

/// A binary sign label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One closed-form eigenstate of the two-cell lattice.
///
/// `epsilon` is the photon parity between the cells, `varepsilon` the
/// doublet branch. With `r = (delta + eps kappa) / (2 g)` the amplitudes
/// over `[atom:0, photon:0, atom:1, photon:1]` are
/// `(w, u, eps w, eps u)` where `u = (-r + veps sqrt(1 + r^2)) / D`,
/// `w = 1 / D`, `D = sqrt(2 + 2 (r - veps sqrt(1 + r^2))^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoCellState {
    pub epsilon: Sign,
    pub varepsilon: Sign,
    /// Photon amplitude on cell 0.
    pub u: f64,
    /// Atom amplitude on cell 0.
    pub w: f64,
    /// Closed-form energy
    /// `omega_c - (delta + eps kappa)/2 + veps sqrt(g^2 + (delta + eps kappa)^2/4)`.
    pub energy: f64,
}

impl TwoCellState {
    /// Amplitudes over the canonical four-state basis.
    pub fn amplitudes(&self) -> [Complex64; 4] {
        let e = self.epsilon.value();
        [
            Complex64::new(self.w, 0.0),
            Complex64::new(self.u, 0.0),
            Complex64::new(e * self.w, 0.0),
            Complex64::new(e * self.u, 0.0),
        ]
    }

    /// Golden-rule decay rate into the ground state.
    ///
    /// Common reservoirs:
    /// `(sqrt(ga0) + eps sqrt(ga1))^2 w^2 + (sqrt(gc0) + eps sqrt(gc1))^2 u^2`.
    /// Independent atomic reservoirs replace the atomic interference term by
    /// `(ga0 + ga1) w^2`.
    pub fn decay_rate(&self, params: &LatticeParams) -> f64 {
        let e = self.epsilon.value();
        let (d0, d1) = (params.damping[0], params.damping[1]);
        let cavity = (d0.gamma_c.sqrt() + e * d1.gamma_c.sqrt()).powi(2) * self.u * self.u;
        match params.reservoir {
            ReservoirModel::CommonAtomsCommonCavities => {
                (d0.gamma_a.sqrt() + e * d1.gamma_a.sqrt()).powi(2) * self.w * self.w + cavity
            }
            ReservoirModel::IndependentAtomsCommonCavities => {
                (d0.gamma_a + d1.gamma_a) * self.w * self.w + cavity
            }
        }
    }
}

/// Closed-form eigensystem of the two-cell lattice, ordered
/// `(+,+), (+,-), (-,+), (-,-)` in `(epsilon, varepsilon)`.
pub fn two_cell_eigensystem(params: &LatticeParams) -> Result<Vec<TwoCellState>, LatticeError> {
    params.validate()?;
    if params.n_cells != 2 {
        return Err(LatticeError::CellCountMismatch {
            expected: 2,
            got: params.n_cells,
        });
    }
    if params.g == 0.0 {
        return Err(LatticeError::ZeroCoupling);
    }
    let mut states = Vec::with_capacity(4);
    for epsilon in [Sign::Plus, Sign::Minus] {
        let shifted = params.delta + epsilon.value() * params.kappa;
        let r = shifted / (2.0 * params.g);
        let root = (1.0 + r * r).sqrt();
        for varepsilon in [Sign::Plus, Sign::Minus] {
            let v = varepsilon.value();
            let d = (2.0 + 2.0 * (r - v * root).powi(2)).sqrt();
            states.push(TwoCellState {
                epsilon,
                varepsilon,
                u: (-r + v * root) / d,
                w: 1.0 / d,
                energy: params.omega_c - shifted / 2.0
                    + v * (params.g * params.g + shifted * shifted / 4.0).sqrt(),
            });
        }
    }
    Ok(states)
}

/// Identity of one closed-form lattice eigenstate.
///
/// Antisymmetric states live on the cell pair `(partner, N - 1)`; the
/// `usize` is the partner cell index. `Upper`/`Lower` and `Plus`/`Minus`
/// refer to the doublet branch (sign of the square root in the energy).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    AntisymmetricUpper(usize),
    AntisymmetricLower(usize),
    SymmetricPlus,
    SymmetricMinus,
}

impl StateKind {
    /// Stable identifier used in reports and CLI output.
    pub fn id(&self) -> String {
        match self {
            StateKind::AntisymmetricUpper(p) => format!("antisym_upper_{p}"),
            StateKind::AntisymmetricLower(p) => format!("antisym_lower_{p}"),
            StateKind::SymmetricPlus => "sym_plus".to_string(),
            StateKind::SymmetricMinus => "sym_minus".to_string(),
        }
    }
}

/// One closed-form eigenstate of the `N`-cell lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct NCellEigenstate {
    pub kind: StateKind,
    /// Amplitudes over the canonical `2N`-state basis.
    pub amplitudes: Vec<Complex64>,
    /// Closed-form energy (same frame as [`TwoCellState::energy`]).
    pub energy: f64,
}

/// Closed-form eigenstates of the `N >= 2` lattice.
///
/// With `r = (delta - kappa) / (2g)`, `p_pm = -r pm sqrt(r^2 + 1)` the
/// antisymmetric multiplets pair cell `k` against the last cell:
///
/// ```text
/// |upper, k> = [ p_- (atom_{N-1} - atom_k) - (photon_{N-1} - photon_k) ] / sqrt(2 p_-^2 + 2)
/// |lower, k> = [ p_+ (atom_{N-1} - atom_k) - (photon_{N-1} - photon_k) ] / sqrt(2 p_+^2 + 2)
/// ```
///
/// at energies `omega_c - (delta - kappa)/2 pm sqrt((delta - kappa)^2/4 + g^2)`
/// (upper `+`, lower `-`), each `(N - 1)`-fold degenerate. The symmetric
/// doublet uses `r' = (delta + (N-1) kappa) / (2g)`,
/// `p'_pm = -r' pm sqrt(r'^2 + 1)`:
///
/// ```text
/// |sym, pm> = [ (1/p'_pm) sum_k atom_k + sum_k photon_k ] / sqrt(N / p'_pm^2 + N)
/// ```
///
/// at `omega_c - (delta + (N-1) kappa)/2 pm sqrt((delta + (N-1) kappa)^2/4 + g^2)`.
///
/// The `2(N - 1)` antisymmetric states are returned first (upper multiplet,
/// then lower, partner cells ascending), then `sym_plus`, `sym_minus`.
/// Within a degenerate multiplet the returned states are normalized but not
/// mutually orthogonal (neighbouring pairs share the anchor cell).
pub fn n_cell_eigensystem(params: &LatticeParams) -> Result<Vec<NCellEigenstate>, LatticeError> {
    params.validate()?;
    let n = params.n_cells;
    if n < 2 {
        return Err(LatticeError::TooFewCells { min: 2, got: n });
    }
    if params.g == 0.0 {
        return Err(LatticeError::ZeroCoupling);
    }
    let dim = 2 * n;
    let anchor = n - 1;

    let anti_shift = params.delta - params.kappa;
    let r = anti_shift / (2.0 * params.g);
    let root = (r * r + 1.0).sqrt();
    let anti_split = (anti_shift * anti_shift / 4.0 + params.g * params.g).sqrt();
    let anti_base = params.omega_c - anti_shift / 2.0;

    let sym_shift = params.delta + (n as f64 - 1.0) * params.kappa;
    let rp = sym_shift / (2.0 * params.g);
    let rootp = (rp * rp + 1.0).sqrt();
    let sym_split = (sym_shift * sym_shift / 4.0 + params.g * params.g).sqrt();
    let sym_base = params.omega_c - sym_shift / 2.0;

    let mut states = Vec::with_capacity(dim);
    for (branch, q, energy) in [
        (true, -r - root, anti_base + anti_split),
        (false, -r + root, anti_base - anti_split),
    ] {
        let norm = (2.0 * q * q + 2.0).sqrt();
        for partner in 0..anchor {
            let mut amp = vec![Complex64::new(0.0, 0.0); dim];
            amp[2 * anchor] = Complex64::new(q / norm, 0.0);
            amp[2 * partner] = Complex64::new(-q / norm, 0.0);
            amp[2 * anchor + 1] = Complex64::new(-1.0 / norm, 0.0);
            amp[2 * partner + 1] = Complex64::new(1.0 / norm, 0.0);
            states.push(NCellEigenstate {
                kind: if branch {
                    StateKind::AntisymmetricUpper(partner)
                } else {
                    StateKind::AntisymmetricLower(partner)
                },
                amplitudes: amp,
                energy,
            });
        }
    }
    for (kind, pp, energy) in [
        (StateKind::SymmetricPlus, -rp + rootp, sym_base + sym_split),
        (StateKind::SymmetricMinus, -rp - rootp, sym_base - sym_split),
    ] {
        let norm = (n as f64 / (pp * pp) + n as f64).sqrt();
        let mut amp = vec![Complex64::new(0.0, 0.0); dim];
        for cell in 0..n {
            amp[2 * cell] = Complex64::new(1.0 / (pp * norm), 0.0);
            amp[2 * cell + 1] = Complex64::new(1.0 / norm, 0.0);
        }
        states.push(NCellEigenstate {
            kind,
            amplitudes: amp,
            energy,
        });
    }
    Ok(states)
}

/// Decay classification relative to the largest single-cell total rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RateClass {
    /// Below `DARK_RATE_FRACTION` of the largest single-cell total.
    Dark,
    /// At most the largest single-cell total.
    Subradiant,
    /// Exceeds the largest single-cell total.
    Superradiant,
}

fn classify(rate: f64, max_cell_total: f64) -> RateClass {
    if rate <= DARK_RATE_FRACTION * max_cell_total {
        RateClass::Dark
    } else if rate > max_cell_total {
        RateClass::Superradiant
    } else {
        RateClass::Subradiant
    }
}

/// Amplitude balance of a state vector: smallest over largest component
/// probability, taken over all components. `1` means every basis state
/// carries equal weight (a maximally entangled W-like state), `0` means at
/// least one component is absent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WStateMetrics {
    pub balance: f64,
    /// `balance > 1 - ENTANGLEMENT_BALANCE_TOL`.
    pub maximally_entangled: bool,
}

/// Computes the amplitude balance of an arbitrary state vector.
pub fn w_state_metrics(amplitudes: &[Complex64]) -> Result<WStateMetrics, LatticeError> {
    let mut min = f64::INFINITY;
    let mut max: f64 = 0.0;
    for z in amplitudes {
        let p = z.norm_sqr();
        min = min.min(p);
        max = max.max(p);
    }
    if amplitudes.is_empty() || max == 0.0 {
        return Err(LatticeError::ZeroVector);
    }
    let balance = min / max;
    Ok(WStateMetrics {
        balance,
        maximally_entangled: balance > 1.0 - ENTANGLEMENT_BALANCE_TOL,
    })
}

/// One emission line of the lattice: a closed-form eigenstate decaying into
/// the ground state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateEntry {
    /// Stable state identifier (see [`StateKind::id`]).
    pub id: String,
    /// Frequency of the emission line into the ground state.
    pub bohr_frequency: f64,
    /// Golden-rule decay rate.
    pub rate: f64,
    pub class: RateClass,
    /// Amplitude balance of the emitting state (see [`WStateMetrics`]).
    pub entanglement_balance: f64,
    pub maximally_entangled: bool,
}

/// Closed-form decay report for a lattice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub n_cells: usize,
    pub reservoir: ReservoirModel,
    pub entries: Vec<RateEntry>,
}

fn entry_for_state(
    state: &NCellEigenstate,
    params: &LatticeParams,
    max_total: f64,
) -> RateEntry {
    let anchor = params.n_cells - 1;
    let rate = match state.kind {
        StateKind::AntisymmetricUpper(k) | StateKind::AntisymmetricLower(k) => {
            // Recover the normalized pair amplitudes: q/norm on the anchor
            // atom, -1/norm on the anchor photon.
            let q_over = state.amplitudes[2 * anchor].re;
            let inv = -state.amplitudes[2 * anchor + 1].re;
            let (da, dk) = (params.damping[anchor], params.damping[k]);
            let cavity = (da.gamma_c.sqrt() - dk.gamma_c.sqrt()).powi(2) * inv * inv;
            match params.reservoir {
                ReservoirModel::CommonAtomsCommonCavities => {
                    (da.gamma_a.sqrt() - dk.gamma_a.sqrt()).powi(2) * q_over * q_over + cavity
                }
                ReservoirModel::IndependentAtomsCommonCavities => {
                    (da.gamma_a + dk.gamma_a) * q_over * q_over + cavity
                }
            }
        }
        StateKind::SymmetricPlus | StateKind::SymmetricMinus => {
            let atom_amp = state.amplitudes[0].re;
            let photon_amp = state.amplitudes[1].re;
            let sqrt_gc: f64 = params.damping.iter().map(|d| d.gamma_c.sqrt()).sum();
            let cavity = sqrt_gc * sqrt_gc * photon_amp * photon_amp;
            match params.reservoir {
                ReservoirModel::CommonAtomsCommonCavities => {
                    let sqrt_ga: f64 = params.damping.iter().map(|d| d.gamma_a.sqrt()).sum();
                    sqrt_ga * sqrt_ga * atom_amp * atom_amp + cavity
                }
                ReservoirModel::IndependentAtomsCommonCavities => {
                    let ga: f64 = params.damping.iter().map(|d| d.gamma_a).sum();
                    ga * atom_amp * atom_amp + cavity
                }
            }
        }
    };
    let metrics = w_state_metrics(&state.amplitudes).expect("closed states are never zero");
    RateEntry {
        id: state.kind.id(),
        bohr_frequency: state.energy,
        rate,
        class: classify(rate, max_total),
        entanglement_balance: metrics.balance,
        maximally_entangled: metrics.maximally_entangled,
    }
}

/// Closed-form emission report: one entry per single-excitation eigenstate.
///
/// For one cell these are the first-doublet dressed states; for a lattice,
/// the states of [`n_cell_eigensystem`].
pub fn rate_report(params: &LatticeParams) -> Result<RateReport, LatticeError> {
    params.validate()?;
    let max_total = params.max_cell_total();
    let entries = if params.n_cells == 1 {
        let theta = jc_single::dressed_angle(1, params.g, params.delta)?;
        let energies = jc_single::ladder_energies(1, params.omega_c, params.g, params.delta)?;
        let (gamma_plus, gamma_minus) =
            jc_single::doublet_to_ground_rates(theta, params.damping[0]);
        let doublet = jc_single::dressed_state(1, params.g, params.delta)?;
        let balance = |v: &[Complex64; 2]| {
            w_state_metrics(v).expect("dressed states are never zero")
        };
        let (bp, bm) = (balance(&doublet.plus), balance(&doublet.minus));
        vec![
            RateEntry {
                id: "dressed_plus_1".to_string(),
                bohr_frequency: energies.omega_plus,
                rate: gamma_plus,
                class: classify(gamma_plus, max_total),
                entanglement_balance: bp.balance,
                maximally_entangled: bp.maximally_entangled,
            },
            RateEntry {
                id: "dressed_minus_1".to_string(),
                bohr_frequency: energies.omega_minus,
                rate: gamma_minus,
                class: classify(gamma_minus, max_total),
                entanglement_balance: bm.balance,
                maximally_entangled: bm.maximally_entangled,
            },
        ]
    } else {
        n_cell_eigensystem(params)?
            .iter()
            .map(|state| entry_for_state(state, params, max_total))
            .collect()
    };
    Ok(RateReport {
        n_cells: params.n_cells,
        reservoir: params.reservoir,
        entries,
    })
}

/// Emission report for the four transitions between the dressed doublets of
/// manifolds `manifold` and `manifold - 1` of a single cell.
pub fn manifold_rate_report(
    params: &LatticeParams,
    manifold: u32,
) -> Result<RateReport, LatticeError> {
    params.validate()?;
    if params.n_cells != 1 {
        return Err(LatticeError::CellCountMismatch {
            expected: 1,
            got: params.n_cells,
        });
    }
    let rates = jc_single::inter_doublet_rates(manifold, params.g, params.delta, params.damping[0])?;
    let hi = jc_single::ladder_energies(manifold, params.omega_c, params.g, params.delta)?;
    let lo = jc_single::ladder_energies(manifold - 1, params.omega_c, params.g, params.delta)?;
    let doublet = jc_single::dressed_state(manifold, params.g, params.delta)?;
    let metric_plus = w_state_metrics(&doublet.plus).expect("dressed states are never zero");
    let metric_minus = w_state_metrics(&doublet.minus).expect("dressed states are never zero");
    let max_total = params.max_cell_total();
    let n = manifold;
    let lines = [
        ("plus", "plus", hi.omega_plus - lo.omega_plus, rates.plus_to_plus, metric_plus),
        ("plus", "minus", hi.omega_plus - lo.omega_minus, rates.plus_to_minus, metric_plus),
        ("minus", "plus", hi.omega_minus - lo.omega_plus, rates.minus_to_plus, metric_minus),
        ("minus", "minus", hi.omega_minus - lo.omega_minus, rates.minus_to_minus, metric_minus),
    ];
    let entries = lines
        .iter()
        .map(|(from, to, bohr, rate, metrics)| RateEntry {
            id: format!("{from}_{n}_to_{to}_{}", n - 1),
            bohr_frequency: *bohr,
            rate: *rate,
            class: classify(*rate, max_total),
            entanglement_balance: metrics.balance,
            maximally_entangled: metrics.maximally_entangled,
        })
        .collect();
    Ok(RateReport {
        n_cells: 1,
        reservoir: params.reservoir,
        entries,
    })
}

/// Closed rates against their analytic strong-hopping (`kappa >> g`) limits
/// for identical cells with independent atomic reservoirs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrongCouplingCheck {
    /// Largest rate in the upper antisymmetric multiplet; tends to zero.
    pub upper_multiplet_max: f64,
    /// Leading-order prediction `gamma_a g^2 / kappa^2` for the upper
    /// multiplet.
    pub upper_leading_order: f64,
    /// Largest `|rate - gamma_a|` over the lower antisymmetric multiplet,
    /// which tends to the bare atomic rate.
    pub lower_multiplet_deviation: f64,
    /// Symmetric-state rates and their exact closed limits
    /// `(gamma_a + p'^2 N gamma_c) / (1 + p'^2)`.
    pub symmetric_plus: f64,
    pub symmetric_minus: f64,
    pub symmetric_plus_limit: f64,
    pub symmetric_minus_limit: f64,
}

/// Evaluates the strong-hopping behaviour of the closed-form rates.
///
/// Requires `N >= 2` identical cells and independent atomic reservoirs;
/// under common atomic reservoirs the antisymmetric rates vanish for
/// identical cells at any `kappa`, so the limit would be vacuous.
pub fn strong_coupling_limit_check(
    params: &LatticeParams,
) -> Result<StrongCouplingCheck, LatticeError> {
    if params.reservoir != ReservoirModel::IndependentAtomsCommonCavities {
        return Err(LatticeError::WrongReservoirModel);
    }
    if !params.identical_damping() {
        return Err(LatticeError::NonIdenticalDamping);
    }
    let report = rate_report(params)?;
    if params.n_cells < 2 {
        return Err(LatticeError::TooFewCells {
            min: 2,
            got: params.n_cells,
        });
    }
    let gamma_a = params.damping[0].gamma_a;
    let gamma_c = params.damping[0].gamma_c;
    let mut upper_max: f64 = 0.0;
    let mut lower_dev: f64 = 0.0;
    let mut sym = [0.0, 0.0];
    for entry in &report.entries {
        if entry.id.starts_with("antisym_upper") {
            upper_max = upper_max.max(entry.rate);
        } else if entry.id.starts_with("antisym_lower") {
            lower_dev = lower_dev.max((entry.rate - gamma_a).abs());
        } else if entry.id == "sym_plus" {
            sym[0] = entry.rate;
        } else {
            sym[1] = entry.rate;
        }
    }
    let n = params.n_cells as f64;
    let rp = (params.delta + (n - 1.0) * params.kappa) / (2.0 * params.g);
    let rootp = (rp * rp + 1.0).sqrt();
    let limit = |pp: f64| (gamma_a + pp * pp * n * gamma_c) / (1.0 + pp * pp);
    Ok(StrongCouplingCheck {
        upper_multiplet_max: upper_max,
        upper_leading_order: gamma_a * params.g * params.g / (params.kappa * params.kappa),
        lower_multiplet_deviation: lower_dev,
        symmetric_plus: sym[0],
        symmetric_minus: sym[1],
        symmetric_plus_limit: limit(-rp + rootp),
        symmetric_minus_limit: limit(-rp - rootp),
    })
}
