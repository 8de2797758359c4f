//! Self-contained Hermitian eigensolver (cyclic complex Jacobi).
//!
//! Jacobi was chosen over QR/Householder because every step is an explicit
//! unitary plane rotation: the accumulated eigenvectors stay orthonormal to
//! machine precision even across degenerate clusters, which is exactly where
//! the closed-form lattice states are compared against numerics. Pivots are
//! visited in a fixed row-major cyclic order, so the output is deterministic
//! for a given input matrix.
//!
//! [`golden_rule_rates_numeric`] evaluates the same Fermi-golden-rule
//! expressions used by the closed forms, but on numeric eigenvectors; the
//! pair (solver, golden rule) is the independent oracle for every closed
//! form in [`crate::lattice`].

use crate::basis::BasisLabel;
use crate::linalg::{Complex, EigenSystem, HermitianMatrix};
use crate::params::{CellDamping, ReservoirModel};
use thiserror::Error;

/// Convergence controls for [`diagonalize`].
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Stop once the off-diagonal Frobenius norm falls below this. `None`
    /// uses `1e-14 * ||M||_F`.
    pub off_diagonal_tolerance: Option<f64>,
    /// Maximum number of full pivot sweeps.
    pub max_sweeps: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            off_diagonal_tolerance: None,
            max_sweeps: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error(
        "Jacobi sweep limit reached after {sweeps} sweeps \
         (off-diagonal norm {off_diagonal:.3e}, tolerance {tolerance:.3e})"
    )]
    NoConvergence {
        sweeps: usize,
        off_diagonal: f64,
        tolerance: f64,
    },
    #[error("eigensystem basis does not match the lattice: {0}")]
    BasisMismatch(String),
}

/// Off-diagonal Frobenius norm `sqrt(sum_{i != j} |a_ij|^2)`.
fn off_diagonal_norm(a: &[Complex], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += a[p * n + q].norm_sqr();
        }
    }
    (2.0 * s).sqrt()
}

/// Diagonalizes a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Returns eigenvalues in ascending order with matching unit-norm
/// eigenvector columns. The basis labels follow the canonical lattice
/// ordering for the matrix dimension.
pub fn diagonalize(
    matrix: &HermitianMatrix,
    config: &SolverConfig,
) -> Result<EigenSystem, SolverError> {
    let n = matrix.dim();
    let mut a: Vec<Complex> = matrix.raw().to_vec();
    let mut v = vec![Complex::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex::new(1.0, 0.0);
    }

    let scale = matrix.frobenius_norm();
    let tol = config
        .off_diagonal_tolerance
        .unwrap_or(1e-14 * scale)
        .max(0.0);

    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while off > tol {
        if sweeps >= config.max_sweeps {
            return Err(SolverError::NoConvergence {
                sweeps,
                off_diagonal: off,
                tolerance: tol,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let abs = apq.norm();
                if abs == 0.0 {
                    continue;
                }
                // Factor out the phase of a_pq; the remaining 2x2 problem is
                // real symmetric and the classical Jacobi angle applies.
                let phase = apq / abs;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (2.0 * abs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Plane rotation G: G_pp = c, G_pq = s,
                // G_qp = -s e^{-i phi}, G_qq = c e^{-i phi}.
                let ephm = phase.conj(); // e^{-i phi}
                let ephp = phase; // e^{+i phi}

                // A <- A G (columns p and q).
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * ephm * akq;
                    a[k * n + q] = s * akp + c * ephm * akq;
                }
                // A <- G^H A (rows p and q).
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * ephp * aqk;
                    a[q * n + k] = s * apk + c * ephp * aqk;
                }
                // V <- V G.
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * ephm * vkq;
                    v[k * n + q] = s * vkp + c * ephm * vkq;
                }
                // The pivot is zero by construction; pin it and keep the
                // diagonal exactly real so later pivots see clean input.
                a[p * n + q] = Complex::new(0.0, 0.0);
                a[q * n + p] = Complex::new(0.0, 0.0);
                a[p * n + p] = Complex::new(a[p * n + p].re, 0.0);
                a[q * n + q] = Complex::new(a[q * n + q].re, 0.0);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }

    // Ascending eigenvalue order, ties broken by original position.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re).then(i.cmp(&j)));

    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[k * n + k].re).collect();
    let eigenvectors: Vec<Vec<Complex>> = order
        .iter()
        .map(|&k| (0..n).map(|r| v[r * n + k]).collect())
        .collect();

    Ok(EigenSystem {
        eigenvalues,
        eigenvectors,
        basis: (0..n).map(BasisLabel::from_index).collect(),
    })
}

/// Fermi-golden-rule decay rate of one normalized state vector expressed in
/// the canonical lattice basis.
///
/// Common reservoirs add amplitudes before squaring:
/// `|sum_j sqrt(gamma_aj) c_atom_j|^2 + |sum_j sqrt(gamma_cj) c_photon_j|^2`.
/// Independent atomic reservoirs add atomic probabilities instead:
/// `sum_j gamma_aj |c_atom_j|^2 + |sum_j sqrt(gamma_cj) c_photon_j|^2`.
pub fn golden_rule_rate(
    state: &[Complex],
    damping: &[CellDamping],
    model: ReservoirModel,
) -> f64 {
    let n = damping.len();
    debug_assert_eq!(state.len(), 2 * n);
    let cavity_amp: Complex = (0..n)
        .map(|j| damping[j].gamma_c.sqrt() * state[2 * j + 1])
        .sum();
    let cavity = cavity_amp.norm_sqr();
    match model {
        ReservoirModel::CommonAtomsCommonCavities => {
            let atom_amp: Complex = (0..n)
                .map(|j| damping[j].gamma_a.sqrt() * state[2 * j])
                .sum();
            atom_amp.norm_sqr() + cavity
        }
        ReservoirModel::IndependentAtomsCommonCavities => {
            let atoms: f64 = (0..n)
                .map(|j| damping[j].gamma_a * state[2 * j].norm_sqr())
                .sum();
            atoms + cavity
        }
    }
}

/// Golden-rule rates for every eigenvector of a numeric eigensystem.
///
/// The eigensystem must cover exactly `2 * damping.len()` canonical basis
/// states; anything else is a [`SolverError::BasisMismatch`].
pub fn golden_rule_rates_numeric(
    eigen: &EigenSystem,
    damping: &[CellDamping],
    model: ReservoirModel,
) -> Result<Vec<f64>, SolverError> {
    let expected = 2 * damping.len();
    if eigen.dim() != expected {
        return Err(SolverError::BasisMismatch(format!(
            "dimension {} does not match {} cells",
            eigen.dim(),
            damping.len()
        )));
    }
    for (i, label) in eigen.basis.iter().enumerate() {
        if label.index() != i {
            return Err(SolverError::BasisMismatch(format!(
                "basis slot {i} holds {label}, expected {}",
                BasisLabel::from_index(i)
            )));
        }
    }
    Ok(eigen
        .eigenvectors
        .iter()
        .map(|vec| golden_rule_rate(vec, damping, model))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{inner, vec_norm};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> HermitianMatrix {
        let mut m = HermitianMatrix::zeros(n);
        for i in 0..n {
            m.set_diagonal(i, rng.gen_range(-2.0..2.0));
            for j in (i + 1)..n {
                m.set_pair(
                    i,
                    j,
                    Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                );
            }
        }
        m
    }

    fn reconstruction_error(m: &HermitianMatrix, eig: &EigenSystem) -> f64 {
        let n = m.dim();
        let mut err = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex::new(0.0, 0.0);
                for k in 0..n {
                    s += eig.eigenvectors[k][i]
                        * eig.eigenvalues[k]
                        * eig.eigenvectors[k][j].conj();
                }
                err += (s - m.get(i, j)).norm_sqr();
            }
        }
        err.sqrt()
    }

    #[test]
    fn two_by_two_with_complex_coupling() {
        let mut m = HermitianMatrix::zeros(2);
        m.set_diagonal(0, 2.0);
        m.set_diagonal(1, 2.0);
        m.set_pair(0, 1, Complex::new(0.0, 1.0));
        let eig = diagonalize(&m, &SolverConfig::default()).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 3.0).abs() < 1e-14);
        assert!(reconstruction_error(&m, &eig) < 1e-13);
    }

    #[test]
    fn reconstructs_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1, 2, 3, 5, 8, 13, 20] {
            let m = random_hermitian(n, &mut rng);
            let eig = diagonalize(&m, &SolverConfig::default()).unwrap();
            let rel = reconstruction_error(&m, &eig) / m.frobenius_norm().max(1e-300);
            assert!(rel < 1e-10, "dim {n}: relative reconstruction error {rel:e}");
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal_and_sorted() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random_hermitian(12, &mut rng);
        let eig = diagonalize(&m, &SolverConfig::default()).unwrap();
        for k in 0..12 {
            assert!((vec_norm(&eig.eigenvectors[k]) - 1.0).abs() < 1e-12);
            for l in (k + 1)..12 {
                assert!(inner(&eig.eigenvectors[k], &eig.eigenvectors[l]).norm() < 1e-10);
                assert!(eig.eigenvalues[k] <= eig.eigenvalues[l]);
            }
        }
    }

    #[test]
    fn trace_is_preserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let m = random_hermitian(9, &mut rng);
        let eig = diagonalize(&m, &SolverConfig::default()).unwrap();
        let sum: f64 = eig.eigenvalues.iter().sum();
        let rel = (sum - m.trace()).abs() / m.trace().abs().max(1.0);
        assert!(rel < 1e-11);
    }

    #[test]
    fn permuted_matrix_has_identical_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 10;
        let m = random_hermitian(n, &mut rng);
        // A fixed permutation applied as P M P^T.
        let perm: Vec<usize> = vec![3, 1, 4, 0, 9, 2, 6, 8, 7, 5];
        let mut pm = HermitianMatrix::zeros(n);
        for i in 0..n {
            pm.set_diagonal(i, m.get(perm[i], perm[i]).re);
            for j in (i + 1)..n {
                pm.set_pair(i, j, m.get(perm[i], perm[j]));
            }
        }
        let a = diagonalize(&m, &SolverConfig::default()).unwrap();
        let b = diagonalize(&pm, &SolverConfig::default()).unwrap();
        for k in 0..n {
            assert!((a.eigenvalues[k] - b.eigenvalues[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn diagonal_input_needs_no_sweeps() {
        let mut m = HermitianMatrix::zeros(4);
        for i in 0..4 {
            m.set_diagonal(i, 4.0 - i as f64);
        }
        let cfg = SolverConfig {
            max_sweeps: 0,
            ..SolverConfig::default()
        };
        let eig = diagonalize(&m, &cfg).unwrap();
        assert_eq!(eig.eigenvalues, vec![1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn sweep_limit_reports_no_convergence() {
        let mut m = HermitianMatrix::zeros(3);
        m.set_pair(0, 1, Complex::new(1.0, 0.5));
        m.set_pair(1, 2, Complex::new(-0.3, 0.8));
        let cfg = SolverConfig {
            max_sweeps: 0,
            ..SolverConfig::default()
        };
        match diagonalize(&m, &cfg) {
            Err(SolverError::NoConvergence { sweeps, .. }) => assert_eq!(sweeps, 0),
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn zero_matrix_diagonalizes_immediately() {
        let m = HermitianMatrix::zeros(5);
        let eig = diagonalize(&m, &SolverConfig::default()).unwrap();
        assert!(eig.eigenvalues.iter().all(|&e| e == 0.0));
    }

    #[test]
    fn golden_rule_rejects_mismatched_basis() {
        let m = HermitianMatrix::zeros(3);
        let eig = diagonalize(&m, &SolverConfig::default()).unwrap();
        let damping = [CellDamping::new(0.05, 0.02)];
        let err = golden_rule_rates_numeric(
            &eig,
            &damping,
            ReservoirModel::CommonAtomsCommonCavities,
        )
        .unwrap_err();
        assert!(matches!(err, SolverError::BasisMismatch(_)));
    }
}
