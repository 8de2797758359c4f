//! Dense Hermitian matrices and eigensystem containers.
//!
//! Matrices are small (dimension `2N`, with `N` the cell count), so storage
//! is a plain row-major `Vec<Complex>`. Hermiticity is enforced by
//! construction: off-diagonal entries can only be written in conjugate
//! pairs and diagonal entries only with real values.

use crate::basis::BasisLabel;

/// Complex amplitude; `z.norm_sqr()` is the modulus squared `|z|^2`.
pub type Complex = num_complex::Complex64;

/// Imaginary unit, the phase carried by the photon component of the dressed
/// states.
pub const I: Complex = Complex::new(0.0, 1.0);

/// A dense Hermitian matrix that stays exactly Hermitian under mutation.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<Complex>,
}

impl HermitianMatrix {
    /// Zero matrix of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.data[i * self.dim + j]
    }

    /// Sets the conjugate pair `(i, j) = z`, `(j, i) = conj(z)`.
    /// For `i == j` the value must be real.
    pub fn set_pair(&mut self, i: usize, j: usize, z: Complex) {
        if i == j {
            assert_eq!(z.im, 0.0, "diagonal entries of a Hermitian matrix are real");
            self.data[i * self.dim + i] = z;
        } else {
            self.data[i * self.dim + j] = z;
            self.data[j * self.dim + i] = z.conj();
        }
    }

    /// Sets the real diagonal entry `(i, i)`.
    pub fn set_diagonal(&mut self, i: usize, value: f64) {
        self.data[i * self.dim + i] = Complex::new(value, 0.0);
    }

    /// `M v` for a dense vector.
    pub fn mul_vec(&self, v: &[Complex]) -> Vec<Complex> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j) * v[j])
                    .sum::<Complex>()
            })
            .collect()
    }

    /// Frobenius norm `sqrt(sum |m_ij|^2)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Sum of the (real) diagonal.
    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }

    pub(crate) fn raw(&self) -> &[Complex] {
        &self.data
    }
}

/// Result of a full Hermitian diagonalization.
///
/// Eigenvalues are ascending; `eigenvectors[k]` is the unit-norm column for
/// `eigenvalues[k]`, expressed over `basis`.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<Complex>>,
    pub basis: Vec<BasisLabel>,
}

impl EigenSystem {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Groups indices of (near-)equal eigenvalues. Two neighbours belong to
    /// the same degenerate block when they differ by less than
    /// `1e-9 * max(1, spectral span)`.
    pub fn degenerate_blocks(&self) -> Vec<Vec<usize>> {
        degenerate_blocks(&self.eigenvalues)
    }
}

/// Grouping of an ascending eigenvalue list into degenerate blocks.
pub fn degenerate_blocks(eigenvalues: &[f64]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    if eigenvalues.is_empty() {
        return blocks;
    }
    let span = eigenvalues[eigenvalues.len() - 1] - eigenvalues[0];
    let tol = 1e-9 * span.abs().max(1.0);
    let mut current = vec![0];
    for k in 1..eigenvalues.len() {
        if (eigenvalues[k] - eigenvalues[k - 1]).abs() < tol {
            current.push(k);
        } else {
            blocks.push(std::mem::take(&mut current));
            current = vec![k];
        }
    }
    blocks.push(current);
    blocks
}

/// Inner product `<a|b>` with the physics convention (conjugate-linear in
/// the first argument).
pub fn inner(a: &[Complex], b: &[Complex]) -> Complex {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(v: &[Complex]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthogonal projector onto the span of `vectors` (not necessarily
/// orthonormal, but linearly independent), as a dense `dim x dim` matrix:
/// `P = A (A^H A)^{-1} A^H`.
pub fn span_projector(vectors: &[Vec<Complex>], dim: usize) -> Vec<Complex> {
    let m = vectors.len();
    assert!(m > 0, "projector of an empty span");
    // Gram matrix and its inverse via Gaussian elimination with partial
    // pivoting; m is at most 2N so this stays tiny.
    let mut gram = vec![Complex::new(0.0, 0.0); m * m];
    for i in 0..m {
        for j in 0..m {
            gram[i * m + j] = inner(&vectors[i], &vectors[j]);
        }
    }
    let mut inv = vec![Complex::new(0.0, 0.0); m * m];
    for i in 0..m {
        inv[i * m + i] = Complex::new(1.0, 0.0);
    }
    for col in 0..m {
        let pivot_row = (col..m)
            .max_by(|&a, &b| {
                gram[a * m + col]
                    .norm_sqr()
                    .total_cmp(&gram[b * m + col].norm_sqr())
            })
            .unwrap();
        assert!(
            gram[pivot_row * m + col].norm_sqr() > 0.0,
            "span vectors are linearly dependent"
        );
        if pivot_row != col {
            for k in 0..m {
                gram.swap(col * m + k, pivot_row * m + k);
                inv.swap(col * m + k, pivot_row * m + k);
            }
        }
        let p = gram[col * m + col];
        for k in 0..m {
            gram[col * m + k] /= p;
            inv[col * m + k] /= p;
        }
        for row in 0..m {
            if row == col {
                continue;
            }
            let f = gram[row * m + col];
            if f.norm_sqr() == 0.0 {
                continue;
            }
            for k in 0..m {
                let g = gram[col * m + k];
                let v = inv[col * m + k];
                gram[row * m + k] -= f * g;
                inv[row * m + k] -= f * v;
            }
        }
    }
    // P = A G^{-1} A^H
    let mut p = vec![Complex::new(0.0, 0.0); dim * dim];
    for a in 0..m {
        for b in 0..m {
            let w = inv[a * m + b];
            for r in 0..dim {
                let va = vectors[a][r];
                for c in 0..dim {
                    p[r * dim + c] += va * w * vectors[b][c].conj();
                }
            }
        }
    }
    p
}

/// Frobenius distance between two dense square matrices of dimension `dim`.
pub fn matrix_distance(a: &[Complex], b: &[Complex], dim: usize) -> f64 {
    assert_eq!(a.len(), dim * dim);
    assert_eq!(b.len(), dim * dim);
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}
