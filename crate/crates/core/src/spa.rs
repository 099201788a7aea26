// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! Structural physical approximation of a unital map on `M_n` and the
//! S/T entanglement certificate for it.
//!
//! With `W = C_φ / n`, the family `W̃(t) = (1−t)/n²·1⊗1 + t·W` has trace one
//! and stays PSD up to `t* = 1/(1 + n²‖W⁻‖)`; the SPA is `W̃(t*)`. Norms of
//! negative parts are operator norms.

use serde::{Deserialize, Serialize};

use crate::bipartite::{ppt_check, BipartiteOperator, Verdict};
use crate::choi::{choi, MatrixMap};
use crate::eigen::{self, HERMITIAN_TOL};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Bound on `‖φ(1) − 1‖_F` for a map to count as unital.
pub const UNITAL_TOL: f64 = 1e-9;

pub fn unital_deviation(phi: &MatrixMap) -> f64 {
    (&phi.unit_image() - &ComplexMatrix::identity(phi.output_dim())).frobenius_norm()
}

pub fn ensure_unital(phi: &MatrixMap) -> Result<()> {
    if phi.input_dim() != phi.output_dim() {
        return Err(Error::DimensionMismatch(format!(
            "SPA needs a map M_n -> M_n, got M_{} -> M_{}",
            phi.input_dim(),
            phi.output_dim()
        )));
    }
    let deviation = unital_deviation(phi);
    if deviation > UNITAL_TOL {
        return Err(Error::NotUnital { deviation });
    }
    Ok(())
}

/// Returns a unital version of `phi`.
///
/// Unital maps pass through unchanged. A map with `φ(1) = λ·1`, `λ > 0`, is
/// rescaled to `λ⁻¹φ` only when `allow_normalize` is set; the scale factor
/// `λ⁻¹` is returned alongside.
pub fn normalize_unital(phi: &MatrixMap, allow_normalize: bool) -> Result<(MatrixMap, f64)> {
    match ensure_unital(phi) {
        Ok(()) => Ok((phi.clone(), 1.0)),
        Err(Error::NotUnital { deviation }) if allow_normalize => {
            let unit = phi.unit_image();
            let m = phi.output_dim();
            let lambda = unit.trace().re / m as f64;
            let off = (&unit - &ComplexMatrix::identity(m).scale_real(lambda)).frobenius_norm();
            if lambda > 0.0 && off <= UNITAL_TOL * lambda.max(1.0) {
                Ok((phi.scale(1.0 / lambda), 1.0 / lambda))
            } else {
                Err(Error::NotUnital { deviation })
            }
        }
        Err(err) => Err(err),
    }
}

/// `W̃(t) = (1−t)/n²·1⊗1 + t·C_φ/n`.
pub fn w_tilde(phi: &MatrixMap, t: f64) -> Result<ComplexMatrix> {
    ensure_unital(phi)?;
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::TOutOfRange(t));
    }
    let n = phi.input_dim() as f64;
    let w = choi(phi).into_matrix().scale_real(1.0 / n);
    let d = w.rows();
    Ok(&ComplexMatrix::identity(d).scale_real((1.0 - t) / (n * n)) + &w.scale_real(t))
}

/// `t* = 1/(1 + n²‖W⁻‖)`, the largest `t` with `W̃(t) ⪰ 0`.
pub fn t_star(phi: &MatrixMap) -> Result<f64> {
    ensure_unital(phi)?;
    let n = phi.input_dim() as f64;
    let w = choi(phi).into_matrix().scale_real(1.0 / n);
    let w_neg = eigen::negative_part_norm(&w)?;
    Ok(1.0 / (1.0 + n * n * w_neg))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaResult {
    pub t_star: f64,
    pub spa_state: BipartiteOperator,
    /// `‖C_φ⁻‖`
    pub neg_norm: f64,
}

/// `SPA(φ) = (‖C_φ⁻‖·1⊗1 + C_φ) / (n + n²‖C_φ⁻‖)`.
pub fn spa(phi: &MatrixMap) -> Result<SpaResult> {
    ensure_unital(phi)?;
    let n = phi.input_dim();
    let nf = n as f64;
    let c = choi(phi).into_matrix();
    let neg = eigen::negative_part_norm(&c)?;
    let state = (&ComplexMatrix::identity(n * n).scale_real(neg) + &c)
        .scale_real(1.0 / (nf + nf * nf * neg));
    Ok(SpaResult {
        t_star: 1.0 / (1.0 + nf * neg),
        spa_state: BipartiteOperator::new(n, state)?,
        neg_norm: neg,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    #[serde(rename = "S")]
    pub s_value: f64,
    #[serde(rename = "T")]
    pub t_value: f64,
    pub neg_norm: f64,
    /// `n + n(n−1)·‖C_φ⁻‖`
    pub bound: f64,
    /// `max(S, T) − bound`
    pub margin: f64,
    pub verdict: Verdict,
}

/// If `SPA(φ)` were separable, both `S(C_φ)` and `T(C_φ)` would be at most
/// `n + n(n−1)‖C_φ⁻‖`. Exceeding the bound by more than `tol` certifies that
/// the SPA is entangled; anything else is inconclusive.
pub fn spa_entanglement_certificate(phi: &MatrixMap, tol: f64) -> Result<CertificateReport> {
    ensure_unital(phi)?;
    let n = phi.input_dim() as f64;
    let c = choi(phi).to_bipartite()?;
    let neg = eigen::negative_part_norm(c.matrix())?;
    let s_value = c.s_functional().re;
    let t_value = c.t_functional().re;
    let bound = n + n * (n - 1.0) * neg;
    let margin = s_value.max(t_value) - bound;
    let verdict = if margin > tol {
        Verdict::Entangled
    } else {
        Verdict::Inconclusive
    };
    Ok(CertificateReport {
        s_value,
        t_value,
        neg_norm: neg,
        bound,
        margin,
        verdict,
    })
}

/// Which necessary separability conditions the SPA state itself violates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpaStateEvidence {
    pub spa_s: f64,
    pub spa_t: f64,
    /// `S` or `T` of the SPA state outside `[0, 1]`.
    pub st_bound_violated: bool,
    pub ppt_violated: bool,
    pub certificate_violated: bool,
}

pub fn spa_state_evidence(phi: &MatrixMap, tol: f64) -> Result<SpaStateEvidence> {
    let result = spa(phi)?;
    let cert = spa_entanglement_certificate(phi, tol)?;
    let state = &result.spa_state;
    let spa_s = state.s_functional().re;
    let spa_t = state.t_functional().re;
    let outside = |x: f64| x < -tol || x > 1.0 + tol;
    Ok(SpaStateEvidence {
        spa_s,
        spa_t,
        st_bound_violated: outside(spa_s) || outside(spa_t),
        ppt_violated: !ppt_check(state, tol.max(1e-12))?,
        certificate_violated: cert.verdict == Verdict::Entangled,
    })
}

/// `λ_min(W̃(t))`.
pub fn w_tilde_min_eigenvalue(phi: &MatrixMap, t: f64) -> Result<f64> {
    Ok(eigen::hermitian_eigen(&w_tilde(phi, t)?, HERMITIAN_TOL)?.min())
}
