// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e} > tol {tol:.3e})")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("local dimension {0} too small (need n >= 2)")]
    DimensionTooSmall(usize),

    #[error("not a density matrix: {0}")]
    NotAState(String),

    #[error("map is not unital (||phi(1) - 1||_F = {deviation:.3e})")]
    NotUnital { deviation: f64 },

    #[error("mixing parameter t = {0} outside [0, 1]")]
    TOutOfRange(f64),

    #[error("epsilon = {0} outside (0, 1/4]")]
    EpsilonOutOfRange(f64),

    #[error("no delta in (0, pi/3) satisfies the construction conditions for epsilon = {0}")]
    DeltaSearchFailed(f64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("malformed matrix: {0}")]
    Malformed(String),
}
