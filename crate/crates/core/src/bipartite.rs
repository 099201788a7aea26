// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! Operators on `M_n ⊗ M_n`.
//!
//! An operator `a = Σ a_{(ij)(kl)} e_ij ⊗ e_kl` is stored as its `n²×n²`
//! Kronecker matrix, so `a_{(ij)(kl)} = mat[i·n + k][j·n + l]`.

use serde::{Deserialize, Serialize};

use crate::eigen::{self, HERMITIAN_TOL};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, MatrixJson, C64, ONE, ZERO};
use crate::random::{haar_unitary, stream_rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Entangled,
    Separable,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BipartiteJson", into = "BipartiteJson")]
pub struct BipartiteOperator {
    n: usize,
    mat: ComplexMatrix,
}

impl BipartiteOperator {
    pub fn new(n: usize, mat: ComplexMatrix) -> Result<Self> {
        if mat.rows() != n * n || mat.cols() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "local dimension {n} needs a {0}x{0} matrix, got {1}x{2}",
                n * n,
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(Self { n, mat })
    }

    /// Infers the local dimension from a square `n²×n²` matrix.
    pub fn from_matrix(mat: ComplexMatrix) -> Result<Self> {
        let rows = mat.rows();
        let n = (rows as f64).sqrt().round() as usize;
        if n * n != rows {
            return Err(Error::DimensionMismatch(format!(
                "{rows} rows is not a perfect square"
            )));
        }
        Self::new(n, mat)
    }

    pub fn from_coefficients(n: usize, f: impl Fn(usize, usize, usize, usize) -> C64) -> Self {
        let mat = ComplexMatrix::from_fn(n * n, n * n, |r, c| f(r / n, c / n, r % n, c % n));
        Self { n, mat }
    }

    pub fn product(b: &ComplexMatrix, c: &ComplexMatrix) -> Result<Self> {
        if b.rows() != c.rows() || !b.is_square() || !c.is_square() {
            return Err(Error::DimensionMismatch(
                "product factors must be square of equal size".into(),
            ));
        }
        Self::new(b.rows(), b.kron(c))
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            mat: ComplexMatrix::identity(n * n),
        }
    }

    pub fn local_dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// `a_{(ij)(kl)}`, the coefficient of `e_ij ⊗ e_kl`.
    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> C64 {
        self.mat[(i * self.n + k, j * self.n + l)]
    }

    pub fn trace(&self) -> C64 {
        self.mat.trace()
    }

    /// `S(a) = Σ_ij a_{(ij)(ij)}`.
    pub fn s_functional(&self) -> C64 {
        let n = self.n;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.coeff(i, j, i, j))
            .sum()
    }

    /// `T(a) = Σ_ij a_{(ij)(ji)}`.
    pub fn t_functional(&self) -> C64 {
        let n = self.n;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.coeff(i, j, j, i))
            .sum()
    }

    /// Transpose on the second tensor factor: `a_{(ij)(kl)} ↦ a_{(ij)(lk)}`.
    pub fn partial_transpose(&self) -> Self {
        Self {
            n: self.n,
            mat: partial_transpose_dims(&self.mat, self.n, self.n),
        }
    }

    /// `(U⊗U)* a (U⊗U)`.
    pub fn conjugate_by_local(&self, u: &ComplexMatrix) -> Self {
        let uu = u.kron(u);
        Self {
            n: self.n,
            mat: &(&uu.adjoint() * &self.mat) * &uu,
        }
    }
}

/// Partial transpose of the second factor of an operator on `M_n ⊗ M_m`.
pub fn partial_transpose_dims(mat: &ComplexMatrix, n: usize, m: usize) -> ComplexMatrix {
    assert_eq!(mat.rows(), n * m);
    assert_eq!(mat.cols(), n * m);
    ComplexMatrix::from_fn(n * m, n * m, |r, c| {
        let (i, k) = (r / m, r % m);
        let (j, l) = (c / m, c % m);
        mat[(i * m + l, j * m + k)]
    })
}

pub fn s_functional(a: &BipartiteOperator) -> C64 {
    a.s_functional()
}

pub fn t_functional(a: &BipartiteOperator) -> C64 {
    a.t_functional()
}

pub fn partial_transpose(a: &BipartiteOperator) -> BipartiteOperator {
    a.partial_transpose()
}

/// The flip `V = Σ e_ij ⊗ e_ji`, `V(x⊗y) = y⊗x`.
pub fn flip(n: usize) -> BipartiteOperator {
    BipartiteOperator::from_coefficients(n, |i, j, k, l| if k == j && l == i { ONE } else { ZERO })
}

/// The maximally entangled projection `ê = (1/n) Σ e_ij ⊗ e_ij`.
pub fn max_entangled(n: usize) -> BipartiteOperator {
    let w = C64::new(1.0 / n as f64, 0.0);
    BipartiteOperator::from_coefficients(n, |i, j, k, l| if k == i && l == j { w } else { ZERO })
}

/// Coordinates of a twirled operator in the basis `{1⊗1, V}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WernerForm {
    pub alpha: C64,
    pub beta: C64,
}

impl WernerForm {
    pub fn reconstruct(&self, n: usize) -> BipartiteOperator {
        let id = ComplexMatrix::identity(n * n).scale(self.alpha);
        let v = flip(n).into_matrix().scale(self.beta);
        BipartiteOperator { n, mat: &id + &v }
    }
}

/// Closed-form twirl `P(a) = ∫ AdU⊗U(a) dU = α·1⊗1 + β·V`.
///
/// Solves `αn² + βn = Tr(a)`, `αn + βn² = T(a)`.
pub fn twirl(a: &BipartiteOperator) -> Result<WernerForm> {
    let n = a.n;
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let nf = n as f64;
    let denom = nf * (nf * nf - 1.0);
    let tr = a.trace();
    let t = a.t_functional();
    Ok(WernerForm {
        alpha: (tr * nf - t) / denom,
        beta: (t * nf - tr) / denom,
    })
}

/// Samples per independently seeded Monte-Carlo chunk.
pub const MC_CHUNK: usize = 1024;

/// Empirical Haar average of `(U⊗U)* a (U⊗U)`.
pub fn twirl_monte_carlo(a: &BipartiteOperator, samples: usize, seed: u64) -> BipartiteOperator {
    twirl_monte_carlo_threaded(a, samples, seed, 1)
}

/// Multi-threaded [`twirl_monte_carlo`].
///
/// Chunk `c` of [`MC_CHUNK`] samples draws from ChaCha stream `c` of `seed`;
/// chunk sums are added in chunk order, so the result is identical for every
/// thread count.
pub fn twirl_monte_carlo_threaded(
    a: &BipartiteOperator,
    samples: usize,
    seed: u64,
    threads: usize,
) -> BipartiteOperator {
    assert!(samples >= 1, "need at least one sample");
    let chunks = samples.div_ceil(MC_CHUNK);
    let threads = threads.clamp(1, chunks);
    let run_chunk = |c: usize| {
        let count = MC_CHUNK.min(samples - c * MC_CHUNK);
        let mut rng = stream_rng(seed, c as u64);
        let mut acc = ComplexMatrix::zeros(a.mat.rows(), a.mat.cols());
        for _ in 0..count {
            let u = haar_unitary(a.n, &mut rng);
            acc = &acc + &a.conjugate_by_local(&u).mat;
        }
        acc
    };

    let mut partials: Vec<Option<ComplexMatrix>> = vec![None; chunks];
    if threads == 1 {
        for (c, slot) in partials.iter_mut().enumerate() {
            *slot = Some(run_chunk(c));
        }
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let run_chunk = &run_chunk;
                    scope.spawn(move || {
                        (w..chunks)
                            .step_by(threads)
                            .map(|c| (c, run_chunk(c)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                for (c, m) in h.join().expect("twirl worker panicked") {
                    partials[c] = Some(m);
                }
            }
        });
    }

    let mut total = ComplexMatrix::zeros(a.mat.rows(), a.mat.cols());
    for m in partials.into_iter().flatten() {
        total = &total + &m;
    }
    BipartiteOperator {
        n: a.n,
        mat: total.scale_real(1.0 / samples as f64),
    }
}

/// Rejects anything that is not a density matrix within `tol`.
pub fn ensure_state(mat: &ComplexMatrix, tol: f64) -> Result<()> {
    if !mat.is_square() {
        return Err(Error::NotAState("matrix is not square".into()));
    }
    let dev = mat.hermitian_deviation();
    if dev > tol {
        return Err(Error::NotAState(format!(
            "not Hermitian (deviation {dev:.3e})"
        )));
    }
    let tr = mat.trace();
    if (tr - ONE).norm() > tol {
        return Err(Error::NotAState(format!(
            "trace {:.12} + {:.3e}i is not 1",
            tr.re, tr.im
        )));
    }
    let lmin = eigen::hermitian_eigen(mat, tol)?.min();
    if lmin < -tol {
        return Err(Error::NotAState(format!("negative eigenvalue {lmin:.3e}")));
    }
    Ok(())
}

pub fn ppt_check(a: &BipartiteOperator, tol: f64) -> Result<bool> {
    a.mat.ensure_hermitian(HERMITIAN_TOL.max(tol))?;
    Ok(eigen::hermitian_eigen(&a.partial_transpose().mat, HERMITIAN_TOL.max(tol))?.min() >= -tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeparabilityReport {
    #[serde(rename = "S")]
    pub s: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub verdict: Verdict,
}

/// `S` and `T` of a separable density both lie in `[0, 1]`; a value outside
/// `[−tol, 1 + tol]` certifies entanglement.
pub fn necessary_separability_check(a: &BipartiteOperator, tol: f64) -> Result<SeparabilityReport> {
    ensure_state(&a.mat, tol)?;
    let s = a.s_functional().re;
    let t = a.t_functional().re;
    let outside = |x: f64| x < -tol || x > 1.0 + tol;
    let verdict = if outside(s) || outside(t) {
        Verdict::Entangled
    } else {
        Verdict::Inconclusive
    };
    Ok(SeparabilityReport { s, t, verdict })
}

/// Classifies the twirled state `P(a)` from `T(a) = T(P(a))`.
///
/// `T < 0` is entangled by the `[0, 1]` bound; `T > 1/n` is in the region
/// where `P(a)` is a positive multiple of the Choi matrix of `cTr + t` with
/// `c ≥ 1`. The band in between is left undecided.
pub fn werner_separability(a: &BipartiteOperator, tol: f64) -> Result<Verdict> {
    ensure_state(&a.mat, tol)?;
    let t = a.t_functional().re;
    let n = a.n as f64;
    Ok(if t < -tol {
        Verdict::Entangled
    } else if t > 1.0 / n + tol {
        Verdict::Separable
    } else {
        Verdict::Inconclusive
    })
}

#[derive(Serialize, Deserialize)]
struct BipartiteJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    local_dim: Option<usize>,
    #[serde(flatten)]
    matrix: MatrixJson,
}

impl TryFrom<BipartiteJson> for BipartiteOperator {
    type Error = Error;

    fn try_from(json: BipartiteJson) -> Result<Self> {
        let mat = ComplexMatrix::try_from(json.matrix)?;
        match json.local_dim {
            Some(n) => Self::new(n, mat),
            None => Self::from_matrix(mat),
        }
    }
}

impl From<BipartiteOperator> for BipartiteJson {
    fn from(a: BipartiteOperator) -> Self {
        BipartiteJson {
            local_dim: Some(a.n),
            matrix: a.mat.into(),
        }
    }
}
