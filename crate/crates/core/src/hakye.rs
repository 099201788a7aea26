// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! The Ha–Kye family `φ(a,b,c,θ)` of positive maps on `M_3` and the
//! construction of an optimal member whose SPA is entangled.
//!
//! ```text
//!          ┌ a·x11 + b·x22 + c·x33   −e^{iθ}·x12             −e^{−iθ}·x13          ┐
//! φ(x)  =  │ −e^{−iθ}·x21            c·x11 + a·x22 + b·x33   −e^{iθ}·x23           │
//!          └ −e^{iθ}·x31             −e^{−iθ}·x32            b·x11 + c·x22 + a·x33 ┘
//! ```

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bipartite::Verdict;
use crate::choi::{ChoiMatrix, MatrixMap};
use crate::eigen::{self, HERMITIAN_TOL};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64};
use crate::random::{projector, random_unit_vector, seeded_rng};
use crate::spa::{spa_entanglement_certificate, CertificateReport};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HaKyeParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub theta: f64,
}

impl HaKyeParams {
    pub fn new(a: f64, b: f64, c: f64, theta: f64) -> Result<Self> {
        if !(a >= 0.0 && b >= 0.0 && c >= 0.0) || !(a.is_finite() && b.is_finite() && c.is_finite())
        {
            return Err(Error::InvalidParams(format!(
                "a, b, c must be finite and non-negative (got {a}, {b}, {c})"
            )));
        }
        if !(-PI..=PI).contains(&theta) {
            return Err(Error::InvalidParams(format!(
                "theta = {theta} outside [-pi, pi]"
            )));
        }
        Ok(Self { a, b, c, theta })
    }

    fn phase(&self) -> C64 {
        C64::from_polar(1.0, self.theta)
    }
}

pub fn apply_map(p: &HaKyeParams, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    if x.rows() != 3 || x.cols() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "Ha-Kye map acts on 3x3 matrices, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let (a, b, c) = (p.a, p.b, p.c);
    let w = p.phase();
    let (d0, d1, d2) = (x[(0, 0)], x[(1, 1)], x[(2, 2)]);
    let mut y = ComplexMatrix::zeros(3, 3);
    y[(0, 0)] = d0 * a + d1 * b + d2 * c;
    y[(1, 1)] = d0 * c + d1 * a + d2 * b;
    y[(2, 2)] = d0 * b + d1 * c + d2 * a;
    y[(0, 1)] = -w * x[(0, 1)];
    y[(0, 2)] = -w.conj() * x[(0, 2)];
    y[(1, 0)] = -w.conj() * x[(1, 0)];
    y[(1, 2)] = -w * x[(1, 2)];
    y[(2, 0)] = -w * x[(2, 0)];
    y[(2, 1)] = -w.conj() * x[(2, 1)];
    Ok(y)
}

pub fn to_map(p: &HaKyeParams) -> MatrixMap {
    MatrixMap::from_fn(3, 3, |x| apply_map(p, x).expect("3x3 input")).expect("3x3 images")
}

/// The 9×9 Choi matrix written out entry by entry.
pub fn choi9(p: &HaKyeParams) -> ChoiMatrix {
    let r = |x: f64| C64::new(x, 0.0);
    let w = -p.phase();
    let wc = w.conj();
    let mut m = ComplexMatrix::zeros(9, 9);
    let diag = [p.a, p.c, p.b, p.b, p.a, p.c, p.c, p.b, p.a];
    for (i, &d) in diag.iter().enumerate() {
        m[(i, i)] = r(d);
    }
    m[(0, 4)] = w;
    m[(0, 8)] = wc;
    m[(4, 0)] = wc;
    m[(4, 8)] = w;
    m[(8, 0)] = w;
    m[(8, 4)] = wc;
    ChoiMatrix::new(3, 3, m).expect("9x9")
}

/// The circulant block of `C_φ` on rows and columns `{0, 4, 8}`.
pub fn p_submatrix(a: f64, theta: f64) -> ComplexMatrix {
    let w = -C64::from_polar(1.0, theta);
    let wc = w.conj();
    let d = C64::new(a, 0.0);
    ComplexMatrix::from_rows(vec![vec![d, w, wc], vec![wc, d, w], vec![w, wc, d]]).expect("3x3")
}

/// The all-ones 3×3 matrix, `P(1, π)`.
pub fn all_ones() -> ComplexMatrix {
    ComplexMatrix::from_fn(3, 3, |_, _| C64::new(1.0, 0.0))
}

/// `p_θ = max_k 2cos(θ + 2πk/3)`, so that `P(a,θ) ⪰ 0 ⇔ a ≥ p_θ`.
pub fn p_theta(theta: f64) -> f64 {
    (0..3)
        .map(|k| 2.0 * (theta + 2.0 * PI * k as f64 / 3.0).cos())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `max{2cos(θ − π/3), 2cos θ, 2cos(θ + π/3)}`, the formula as printed in
/// the source of the construction. Not a valid threshold near `θ = π`; kept
/// for diagnostics only.
pub fn p_theta_printed(theta: f64) -> f64 {
    [theta - PI / 3.0, theta, theta + PI / 3.0]
        .iter()
        .map(|t| 2.0 * t.cos())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Positivity criterion: `a + b + c ≥ p_θ`, and `a ≤ 1 ⇒ bc ≥ (1 − a)²`.
pub fn is_positive(p: &HaKyeParams) -> bool {
    let sum_ok = p.a + p.b + p.c >= p_theta(p.theta);
    let product_ok = p.a > 1.0 || p.b * p.c >= (1.0 - p.a).powi(2);
    sum_ok && product_ok
}

/// Sufficient conditions for optimality: positive, `1 < p_θ < 2`,
/// `0 ≤ a < 1`, and `bc = (1 − a)²` within `tol`.
pub fn is_optimal_sufficient(p: &HaKyeParams, tol: f64) -> bool {
    let pt = p_theta(p.theta);
    is_positive(p)
        && 1.0 < pt
        && pt < 2.0
        && (0.0..1.0).contains(&p.a)
        && (p.b * p.c - (1.0 - p.a).powi(2)).abs() <= tol
}

/// `‖C_φ⁻‖ = max(0, p_θ − a)`; the rest of `C_φ` is the diagonal `b, c` block.
pub fn neg_norm_closed_form(p: &HaKyeParams) -> f64 {
    (p_theta(p.theta) - p.a).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplingReport {
    pub trials: usize,
    pub violations: usize,
    /// Smallest eigenvalue of `φ(xx*)` seen over all probes.
    pub worst: f64,
}

pub const POSITIVITY_VIOLATION_TOL: f64 = 1e-10;

/// Probes `φ(xx*) ⪰ 0` on seeded Haar-random unit vectors `x ∈ ℂ³`.
pub fn positivity_sampling_check(
    p: &HaKyeParams,
    trials: usize,
    seed: u64,
) -> Result<SamplingReport> {
    let mut rng = seeded_rng(seed);
    let mut violations = 0;
    let mut worst = f64::INFINITY;
    for _ in 0..trials {
        let x = random_unit_vector(3, &mut rng);
        let y = apply_map(p, &projector(&x))?;
        let lmin = eigen::hermitian_eigen(&y, HERMITIAN_TOL)?.min();
        if lmin < -POSITIVITY_VIOLATION_TOL {
            violations += 1;
        }
        worst = worst.min(lmin);
    }
    Ok(SamplingReport {
        trials,
        violations,
        worst,
    })
}

/// Operator norm of `P(a,θ) − P` with `P` the all-ones matrix.
pub fn deviation_from_all_ones(a: f64, theta: f64) -> Result<f64> {
    eigen::operator_norm(&(&p_submatrix(a, theta) - &all_ones()))
}

/// Rounding slack for the non-strict comparisons in the construction.
pub const CHAIN_SLACK: f64 = 1e-12;

const DELTA_FLOOR: f64 = 1e-9;
const DELTA_WIDTH: f64 = 1e-6;

/// Construction conditions at `θ = π − δ`, `a = p_θ − ε`:
/// (i) `1 < p_θ < 1 + ε`, (ii) `Re(−e^{iθ}) > 1 − ε`,
/// (iii) `‖P(a,θ) − P‖ ≤ ε`.
///
/// (iii) cannot be strict: `P(a,θ)` and `P` are both circulant, and on the
/// Fourier mode where `P` vanishes `P(a,θ)` has eigenvalue `a − p_θ = −ε`.
pub fn delta_conditions(epsilon: f64, delta: f64) -> Result<[bool; 3]> {
    let theta = PI - delta;
    let pt = p_theta(theta);
    let a = pt - epsilon;
    Ok([
        1.0 < pt && pt < 1.0 + epsilon,
        -theta.cos() > 1.0 - epsilon,
        deviation_from_all_ones(a, theta)? <= epsilon + CHAIN_SLACK,
    ])
}

fn delta_ok(epsilon: f64, delta: f64) -> Result<bool> {
    Ok(delta_conditions(epsilon, delta)?.iter().all(|&ok| ok))
}

/// Bisects for the largest `δ_max ∈ (0, π/3)` meeting all three conditions
/// (to width `1e-6`) and returns `(δ_max / 2, δ_max)`.
pub fn select_delta(epsilon: f64) -> Result<(f64, f64)> {
    let (mut lo, mut hi) = (DELTA_FLOOR, PI / 3.0);
    if !delta_ok(epsilon, lo)? {
        return Err(Error::DeltaSearchFailed(epsilon));
    }
    if delta_ok(epsilon, hi)? {
        return Ok((hi / 2.0, hi));
    }
    while hi - lo > DELTA_WIDTH {
        let mid = 0.5 * (lo + hi);
        if delta_ok(epsilon, mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo / 2.0, lo))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = ">=")]
    GreaterEq,
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    LessEq,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainStep {
    pub name: String,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    pub holds: bool,
}

impl ChainStep {
    fn new(name: &str, lhs: f64, relation: Relation, rhs: f64) -> Self {
        let holds = match relation {
            Relation::Greater => lhs > rhs,
            Relation::Less => lhs < rhs,
            Relation::GreaterEq => lhs >= rhs - CHAIN_SLACK,
            Relation::LessEq => lhs <= rhs + CHAIN_SLACK,
        };
        Self {
            name: name.to_string(),
            lhs,
            relation,
            rhs,
            holds,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CounterexampleVerdict {
    Entangled,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub epsilon: f64,
    pub delta: f64,
    pub delta_max: f64,
    pub params: HaKyeParams,
    pub p_theta: f64,
    pub p_theta_printed: f64,
    pub positive: bool,
    pub optimal_sufficient: bool,
    /// `1/(a + b + c)`, the factor making `ψ = kφ` unital.
    pub k: f64,
    #[serde(rename = "S_phi")]
    pub s_phi: f64,
    #[serde(rename = "T_phi")]
    pub t_phi: f64,
    #[serde(rename = "S_psi")]
    pub s_psi: f64,
    #[serde(rename = "T_psi")]
    pub t_psi: f64,
    pub neg_norm_phi: f64,
    pub neg_norm_psi: f64,
    pub bound: f64,
    pub margin: f64,
    pub certificate: CertificateReport,
    pub chain: Vec<ChainStep>,
    pub verdict: CounterexampleVerdict,
}

impl CounterexampleReport {
    pub fn failed_steps(&self) -> impl Iterator<Item = &ChainStep> {
        self.chain.iter().filter(|s| !s.holds)
    }
}

/// Tolerance used for the optimality equality and the certificate.
pub const COUNTEREXAMPLE_TOL: f64 = 1e-12;

/// Builds `φ(a,b,c,θ)` with `θ = π − δ`, `a = p_θ − ε`, `b = ε`,
/// `c = (1 − a)²/ε`, normalizes it to the unital `ψ = φ/(a+b+c)`, and checks
/// every step showing that `SPA(ψ)` is entangled.
pub fn counterexample(epsilon: f64) -> Result<CounterexampleReport> {
    if !(epsilon > 0.0 && epsilon <= 0.25) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    let (delta, delta_max) = select_delta(epsilon)?;
    let theta = PI - delta;
    let pt = p_theta(theta);
    let a = pt - epsilon;
    let b = epsilon;
    let mut c = (1.0 - a).powi(2) / b;
    // keep bc ≥ (1 − a)² exact in floating point
    while b * c < (1.0 - a).powi(2) {
        c = c.next_up();
    }
    let params = HaKyeParams::new(a, b, c, theta)?;
    let [cond_i, cond_ii, cond_iii] = delta_conditions(epsilon, delta)?;
    debug_assert!(cond_i && cond_ii && cond_iii);

    let phi = to_map(&params);
    let scalar = a + b + c;
    let k = 1.0 / scalar;
    let psi = phi.scale(k);

    let c_phi = choi9(&params).to_bipartite()?;
    let neg_norm_phi = eigen::negative_part_norm(c_phi.matrix())?;
    let certificate = spa_entanglement_certificate(&psi, COUNTEREXAMPLE_TOL)?;
    let neg_norm_psi = certificate.neg_norm;
    let (s_psi, t_psi) = (certificate.s_value, certificate.t_value);
    let re_minus_phase = -theta.cos();
    let deviation = deviation_from_all_ones(a, theta)?;

    use Relation::*;
    let step = ChainStep::new;
    let via_ii = 3.0 * k * (a + 2.0 * (1.0 - epsilon));
    let nine_k = 9.0 * k * (1.0 - epsilon);
    let nine_bound = 9.0 * (1.0 - epsilon) / (1.0 + 2.0 * epsilon);
    let chain = vec![
        step("(i) p_theta > 1", pt, Greater, 1.0),
        step("(i) p_theta < 1 + eps", pt, Less, 1.0 + epsilon),
        step(
            "(ii) Re(-e^{i theta}) > 1 - eps",
            re_minus_phase,
            Greater,
            1.0 - epsilon,
        ),
        step(
            "(iii) ||P(a,theta) - P|| <= eps",
            deviation,
            LessEq,
            epsilon,
        ),
        step("c > 0", c, Greater, 0.0),
        step("c < eps", c, Less, epsilon),
        step("a + b + c > p_theta", scalar, Greater, pt),
        step("bc >= (1 - a)^2", b * c, GreaterEq, (1.0 - a).powi(2)),
        step("a < 1", a, Less, 1.0),
        step("p_theta < 2", pt, Less, 2.0),
        step(
            "|bc - (1 - a)^2| <= tol",
            (b * c - (1.0 - a).powi(2)).abs(),
            LessEq,
            COUNTEREXAMPLE_TOL,
        ),
        step("phi(1) scalar > 1", scalar, Greater, 1.0),
        step(
            "phi(1) scalar < 1 + 2 eps",
            scalar,
            Less,
            1.0 + 2.0 * epsilon,
        ),
        step("||C_phi^-|| <= eps", neg_norm_phi, LessEq, epsilon),
        step("k > 1/(1 + 2 eps)", k, Greater, 1.0 / (1.0 + 2.0 * epsilon)),
        step("k < 1", k, Less, 1.0),
        step("S(C_psi) > 3k(a + 2(1 - eps))", s_psi, Greater, via_ii),
        step("3k(a + 2(1 - eps)) > 9k(1 - eps)", via_ii, Greater, nine_k),
        step(
            "9k(1 - eps) > 9(1 - eps)/(1 + 2 eps)",
            nine_k,
            Greater,
            nine_bound,
        ),
        step("9(1 - eps)/(1 + 2 eps) >= 9/2", nine_bound, GreaterEq, 4.5),
        step(
            "9/2 >= 3 + 6||C_phi^-||",
            4.5,
            GreaterEq,
            3.0 + 6.0 * neg_norm_phi,
        ),
        step(
            "3 + 6||C_phi^-|| > 3 + 6||C_psi^-||",
            3.0 + 6.0 * neg_norm_phi,
            Greater,
            3.0 + 6.0 * neg_norm_psi,
        ),
        step(
            "S(C_psi) > 3 + 6||C_psi^-||",
            s_psi,
            Greater,
            3.0 + 6.0 * neg_norm_psi,
        ),
        step(
            "certificate margin > tol",
            certificate.margin,
            Greater,
            COUNTEREXAMPLE_TOL,
        ),
    ];
    let verdict = if chain.iter().all(|s| s.holds) && certificate.verdict == Verdict::Entangled {
        CounterexampleVerdict::Entangled
    } else {
        CounterexampleVerdict::Failed
    };

    Ok(CounterexampleReport {
        epsilon,
        delta,
        delta_max,
        params,
        p_theta: pt,
        p_theta_printed: p_theta_printed(theta),
        positive: is_positive(&params),
        optimal_sufficient: is_optimal_sufficient(&params, COUNTEREXAMPLE_TOL),
        k,
        s_phi: c_phi.s_functional().re,
        t_phi: c_phi.t_functional().re,
        s_psi,
        t_psi,
        neg_norm_phi,
        neg_norm_psi,
        bound: certificate.bound,
        margin: certificate.margin,
        certificate,
        chain,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choi::choi;

    fn params(a: f64, b: f64, c: f64, theta: f64) -> HaKyeParams {
        HaKyeParams::new(a, b, c, theta).unwrap()
    }

    #[test]
    fn rejects_bad_params() {
        assert!(HaKyeParams::new(-0.1, 0.0, 0.0, 0.0).is_err());
        assert!(HaKyeParams::new(0.0, 0.0, 0.0, 3.5).is_err());
        assert!(HaKyeParams::new(f64::NAN, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn unit_image_is_scalar() {
        let p = params(0.7, 0.2, 1.3, 0.4);
        let y = apply_map(&p, &ComplexMatrix::identity(3)).unwrap();
        assert!(y.max_abs_diff(&ComplexMatrix::identity(3).scale_real(2.2)) < 1e-15);
    }

    #[test]
    fn off_diagonal_phases() {
        let p = params(0.7, 0.2, 1.3, 0.4);
        let y = apply_map(&p, &ComplexMatrix::unit(3, 0, 1)).unwrap();
        let expected = ComplexMatrix::unit(3, 0, 1).scale(-C64::from_polar(1.0, 0.4));
        assert_eq!(y, expected);
        assert!(apply_map(&p, &ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn a_one_theta_zero_specialization() {
        let p = params(1.0, 0.0, 0.0, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                let e = ComplexMatrix::unit(3, i, j);
                let sign = if i == j { 1.0 } else { -1.0 };
                assert_eq!(apply_map(&p, &e).unwrap(), e.scale_real(sign));
            }
        }
    }

    #[test]
    fn choi9_matches_display_and_generic_choi() {
        let p = params(0.9, 0.3, 0.05, 2.5);
        let c = choi9(&p);
        let m = c.matrix();
        assert_eq!(m[(0, 0)].re, 0.9);
        assert_eq!(m[(1, 1)].re, 0.05);
        assert_eq!(m[(2, 2)].re, 0.3);
        assert_eq!(m[(0, 4)], -C64::from_polar(1.0, 2.5));
        assert_eq!(m[(0, 8)], -C64::from_polar(1.0, -2.5));
        assert_eq!(c, choi(&to_map(&p)));
        assert!(m.is_hermitian(0.0));
    }

    #[test]
    fn p_submatrix_is_principal_block() {
        let p = params(0.4, 0.1, 0.2, -1.1);
        let c = choi9(&p);
        let block = p_submatrix(p.a, p.theta);
        let idx = [0, 4, 8];
        for (r, &i) in idx.iter().enumerate() {
            for (s, &j) in idx.iter().enumerate() {
                assert_eq!(block[(r, s)], c.matrix()[(i, j)]);
            }
        }
    }

    #[test]
    fn p_submatrix_spectra() {
        let ev = eigen::eigenvalues(&p_submatrix(0.0, 0.0)).unwrap();
        for (x, e) in ev.iter().zip([-2.0, 1.0, 1.0]) {
            assert!((x - e).abs() < 1e-14);
        }
        let ev = eigen::eigenvalues(&p_submatrix(1.0, PI)).unwrap();
        for (x, e) in ev.iter().zip([0.0, 0.0, 3.0]) {
            assert!((x - e).abs() < 1e-14);
        }
    }

    #[test]
    fn p_theta_values() {
        assert!((p_theta(0.0) - 2.0).abs() < 1e-15);
        assert!((p_theta(PI) - 1.0).abs() < 1e-14);
        let expected = 2.0 * (PI / 3.0 - 0.05).cos();
        assert!((p_theta(PI - 0.05) - expected).abs() < 1e-15);
        assert!((p_theta(PI - 0.05) - 1.0853167).abs() < 1e-7);
        // the printed formula goes negative at θ = π
        assert!((p_theta_printed(PI) + 1.0).abs() < 1e-14);
        for i in 0..=200 {
            let t = -PI + 2.0 * PI * i as f64 / 200.0;
            let v = p_theta(t);
            assert!((1.0 - 1e-12..=2.0 + 1e-12).contains(&v));
        }
    }

    #[test]
    fn positivity_examples() {
        assert!(is_positive(&params(2.0, 0.0, 0.0, 0.0)));
        assert!(!is_positive(&params(0.5, 0.25, 1.0, 0.0)));
        assert!(!is_positive(&params(0.0, 0.0, 0.0, 0.0)));
        // condition (ii) alone
        assert!(!is_positive(&params(0.5, 0.1, 2.0, PI)));
    }

    #[test]
    fn sampling_finds_violations_for_zero_map_params() {
        let report = positivity_sampling_check(&params(0.0, 0.0, 0.0, 0.0), 500, 1).unwrap();
        assert!(report.violations > 0);
        assert!(report.worst.is_finite() && report.worst >= -3.0);
    }

    #[test]
    fn sampling_clean_for_positive_params() {
        for p in [
            params(2.0, 0.0, 0.0, 0.0),
            params(1.1, 0.0, 0.0, PI),
            params(0.5, 0.5, 0.5, PI),
        ] {
            assert!(is_positive(&p));
            let report = positivity_sampling_check(&p, 2000, 3).unwrap();
            assert_eq!(report.violations, 0, "{p:?}: {report:?}");
        }
    }

    #[test]
    fn optimality_conditions() {
        assert!(!is_optimal_sufficient(&params(1.5, 1.0, 1.0, PI), 1e-12));
        assert!(!is_optimal_sufficient(&params(0.5, 0.5, 0.5, 0.0), 1e-12));
        assert!(is_optimal_sufficient(
            &params(0.5, 0.5, 0.5, PI - 0.1),
            1e-12
        ));
    }

    #[test]
    fn neg_norm_matches_eigensolver() {
        let p = params(0.3, 0.2, 0.1, 2.9);
        let direct = eigen::negative_part_norm(choi9(&p).matrix()).unwrap();
        assert!((neg_norm_closed_form(&p) - direct).abs() < 1e-12);
        let psd = params(2.5, 0.0, 0.0, 0.3);
        assert_eq!(neg_norm_closed_form(&psd), 0.0);
        let theta = PI - 0.05;
        let shifted = params(p_theta(theta) - 0.1, 0.1, 0.01, theta);
        assert!((neg_norm_closed_form(&shifted) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn deviation_is_at_least_epsilon() {
        for &eps in &[0.01, 0.1, 0.25] {
            for &delta in &[1e-4, 0.01, 0.05] {
                let theta = PI - delta;
                let d = deviation_from_all_ones(p_theta(theta) - eps, theta).unwrap();
                assert!(d >= eps - 1e-13, "eps {eps} delta {delta}: {d}");
            }
        }
    }

    #[test]
    fn counterexample_epsilon_range() {
        assert_eq!(
            counterexample(0.5).unwrap_err(),
            Error::EpsilonOutOfRange(0.5)
        );
        assert_eq!(
            counterexample(0.0).unwrap_err(),
            Error::EpsilonOutOfRange(0.0)
        );
        assert!(counterexample(f64::NAN).is_err());
    }

    #[test]
    fn counterexample_at_tenth() {
        let r = counterexample(0.1).unwrap();
        assert_eq!(r.verdict, CounterexampleVerdict::Entangled);
        assert!(r.positive && r.optimal_sufficient);
        assert!((r.neg_norm_phi - 0.1).abs() < 1e-12);
        assert!((r.t_phi - 3.0 * r.params.a).abs() < 1e-12);
        assert_eq!(r.failed_steps().count(), 0);
    }
}
