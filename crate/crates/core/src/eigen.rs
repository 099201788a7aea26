// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! Hermitian spectral decomposition by cyclic complex Jacobi rotations, and
//! the spectral helpers built on it (positive/negative parts, norms).

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64, ZERO};

/// Entrywise Hermiticity tolerance used when the caller does not pick one.
pub const HERMITIAN_TOL: f64 = 1e-9;

/// Largest accepted matrix order.
pub const MAX_DIM: usize = 64;

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Eigenvalues ascending; column `k` of `eigenvectors` pairs with `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianSpectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// `U · diag(f(λ)) · U*`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let u = &self.eigenvectors;
        let n = u.rows();
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .filter(|&k| weights[k] != 0.0)
                .map(|k| u[(i, k)] * u[(j, k)].conj() * weights[k])
                .sum()
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|l| l)
    }
}

/// Diagonalizes a Hermitian matrix.
///
/// The input is symmetrized to `(A + A*)/2` after the tolerance check, so the
/// rotations work on an exactly Hermitian copy. Sweeps stop once the
/// off-diagonal Frobenius mass drops below `1e-13·‖A‖_F`.
pub fn hermitian_eigen(a: &ComplexMatrix, tol: f64) -> Result<HermitianSpectrum> {
    a.ensure_hermitian(tol)?;
    let n = a.rows();
    if n > MAX_DIM {
        return Err(Error::DimensionMismatch(format!(
            "eigensolver supports n <= {MAX_DIM}, got {n}"
        )));
    }
    let mut m = a.hermitian_part();
    for i in 0..n {
        m[(i, i)].im = 0.0;
    }
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TOL * m.frobenius_norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&m) > threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps tied eigenpairs in sweep order
    order.sort_by(|&x, &y| m[(x, x)].re.total_cmp(&m[(y, y)].re));
    let eigenvalues = order.iter().map(|&k| m[(k, k)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One Jacobi step zeroing `m[p][q]`.
///
/// With `m[p][q] = r·e^{iφ}` the rotation is `J = diag(1, e^{-iφ}) · R(θ)` on
/// the `(p, q)` plane, which first makes the pivot real and then applies the
/// classical real rotation; `m ← J* m J`, `v ← v J`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = m.rows();
    // columns: m ← m J
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * jpp + mkq * jqp;
        m[(k, q)] = mkp * jpq + mkq * jqq;
    }
    // rows: m ← J* m
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = jpp.conj() * mpk + jqp.conj() * mqk;
        m[(q, k)] = jpq.conj() * mpk + jqq.conj() * mqk;
    }
    m[(p, q)] = ZERO;
    m[(q, p)] = ZERO;
    m[(p, p)].im = 0.0;
    m[(q, q)].im = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}

pub fn eigenvalues(a: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(a, HERMITIAN_TOL)?.eigenvalues)
}

pub fn min_eigenvalue(a: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigen(a, HERMITIAN_TOL)?.min())
}

/// `‖A⁻‖ = max(0, −λ_min(A))`.
pub fn negative_part_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok((-min_eigenvalue(a)?).max(0.0))
}

/// Splits `A = A⁺ − A⁻` with both parts PSD and `A⁺A⁻ = 0`.
pub fn positive_negative_parts(a: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let spec = hermitian_eigen(a, HERMITIAN_TOL)?;
    Ok((spec.apply(|l| l.max(0.0)), spec.apply(|l| (-l).max(0.0))))
}

/// PSD within `tol`: `λ_min ≥ −tol`.
pub fn is_psd(a: &ComplexMatrix, tol: f64) -> Result<bool> {
    Ok(min_eigenvalue(a)? >= -tol)
}

/// Spectral norm. Hermitian input uses `max |λ|` directly, anything else
/// goes through `sqrt(λ_max(A*A))`.
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64> {
    if a.is_square() && a.is_hermitian(HERMITIAN_TOL) {
        let spec = hermitian_eigen(a, HERMITIAN_TOL)?;
        return Ok(spec.min().abs().max(spec.max().abs()));
    }
    let gram = &a.adjoint() * a;
    Ok(hermitian_eigen(&gram, f64::INFINITY)?.max().max(0.0).sqrt())
}
