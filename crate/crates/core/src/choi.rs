// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! Linear maps `M_n → M_m` and their Choi matrices.
//!
//! A map is stored by its images on the matrix units, `images[i·n + j] =
//! φ(e_ij)`. The Choi matrix is `C_φ = Σ e_ij ⊗ φ(e_ij)`, so
//! `C_φ[i·m + k][j·m + l] = φ(e_ij)[k][l]`.

use serde::{Deserialize, Serialize};

use crate::bipartite::{partial_transpose_dims, BipartiteOperator};
use crate::eigen::{self, HERMITIAN_TOL};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, MatrixJson, C64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MapJson", into = "MapJson")]
pub struct MatrixMap {
    n: usize,
    m: usize,
    images: Vec<ComplexMatrix>,
}

impl MatrixMap {
    pub fn new(n: usize, m: usize, images: Vec<ComplexMatrix>) -> Result<Self> {
        if images.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "a map on M_{n} needs {} images, got {}",
                n * n,
                images.len()
            )));
        }
        if let Some(bad) = images.iter().position(|x| x.rows() != m || x.cols() != m) {
            return Err(Error::DimensionMismatch(format!(
                "image {bad} is {}x{}, expected {m}x{m}",
                images[bad].rows(),
                images[bad].cols()
            )));
        }
        Ok(Self { n, m, images })
    }

    /// Tabulates `f` on the matrix units of `M_n`.
    pub fn from_fn(
        n: usize,
        m: usize,
        f: impl Fn(&ComplexMatrix) -> ComplexMatrix,
    ) -> Result<Self> {
        let images = (0..n * n)
            .map(|idx| f(&ComplexMatrix::unit(n, idx / n, idx % n)))
            .collect();
        Self::new(n, m, images)
    }

    pub fn input_dim(&self) -> usize {
        self.n
    }

    pub fn output_dim(&self) -> usize {
        self.m
    }

    /// `φ(e_ij)`.
    pub fn image(&self, i: usize, j: usize) -> &ComplexMatrix {
        &self.images[i * self.n + j]
    }

    pub fn images(&self) -> &[ComplexMatrix] {
        &self.images
    }

    pub fn apply(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.rows() != self.n || x.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "map on M_{} applied to a {}x{} matrix",
                self.n,
                x.rows(),
                x.cols()
            )));
        }
        let mut out = ComplexMatrix::zeros(self.m, self.m);
        for (idx, img) in self.images.iter().enumerate() {
            let coeff = x.as_slice()[idx];
            if coeff != C64::new(0.0, 0.0) {
                out = &out + &img.scale(coeff);
            }
        }
        Ok(out)
    }

    /// `φ(1)`.
    pub fn unit_image(&self) -> ComplexMatrix {
        (0..self.n).fold(ComplexMatrix::zeros(self.m, self.m), |acc, i| {
            &acc + self.image(i, i)
        })
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &MatrixMap) -> Result<MatrixMap> {
        if inner.m != self.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose M_{} -> M_{} after M_{} -> M_{}",
                self.n, self.m, inner.n, inner.m
            )));
        }
        let images = inner
            .images
            .iter()
            .map(|x| self.apply(x))
            .collect::<Result<_>>()?;
        MatrixMap::new(inner.n, self.m, images)
    }

    pub fn add(&self, other: &MatrixMap) -> Result<MatrixMap> {
        self.same_shape(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a + b)
            .collect();
        MatrixMap::new(self.n, self.m, images)
    }

    pub fn sub(&self, other: &MatrixMap) -> Result<MatrixMap> {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> MatrixMap {
        MatrixMap {
            n: self.n,
            m: self.m,
            images: self.images.iter().map(|x| x.scale_real(s)).collect(),
        }
    }

    fn same_shape(&self, other: &MatrixMap) -> Result<()> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(Error::DimensionMismatch(format!(
                "maps M_{} -> M_{} and M_{} -> M_{}",
                self.n, self.m, other.n, other.m
            )));
        }
        Ok(())
    }

    /// `φ(e_ji) = φ(e_ij)*` for all units, within `tol`.
    pub fn is_hermiticity_preserving(&self, tol: f64) -> bool {
        (0..self.n).all(|i| {
            (i..self.n).all(|j| self.image(j, i).max_abs_diff(&self.image(i, j).adjoint()) <= tol)
        })
    }

    pub fn choi(&self) -> ChoiMatrix {
        choi(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ChoiJson", into = "ChoiJson")]
pub struct ChoiMatrix {
    n: usize,
    m: usize,
    mat: ComplexMatrix,
}

impl ChoiMatrix {
    pub fn new(n: usize, m: usize, mat: ComplexMatrix) -> Result<Self> {
        if mat.rows() != n * m || mat.cols() != n * m {
            return Err(Error::DimensionMismatch(format!(
                "Choi matrix for M_{n} -> M_{m} must be {0}x{0}",
                n * m
            )));
        }
        Ok(Self { n, m, mat })
    }

    pub fn input_dim(&self) -> usize {
        self.n
    }

    pub fn output_dim(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn to_bipartite(&self) -> Result<BipartiteOperator> {
        if self.n != self.m {
            return Err(Error::DimensionMismatch(format!(
                "Choi matrix of M_{} -> M_{} is not on M_n ⊗ M_n",
                self.n, self.m
            )));
        }
        BipartiteOperator::new(self.n, self.mat.clone())
    }

    pub fn partial_transpose(&self) -> ComplexMatrix {
        partial_transpose_dims(&self.mat, self.n, self.m)
    }
}

pub fn choi(phi: &MatrixMap) -> ChoiMatrix {
    let (n, m) = (phi.n, phi.m);
    let mat = ComplexMatrix::from_fn(n * m, n * m, |r, c| phi.image(r / m, c / m)[(r % m, c % m)]);
    ChoiMatrix { n, m, mat }
}

pub fn map_from_choi(c: &ChoiMatrix) -> MatrixMap {
    let (n, m) = (c.n, c.m);
    let images = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            ComplexMatrix::from_fn(m, m, |k, l| c.mat[(i * m + k, j * m + l)])
        })
        .collect();
    MatrixMap { n, m, images }
}

/// `x ↦ Tr(x)·1`.
pub fn trace_map(n: usize) -> MatrixMap {
    MatrixMap::from_fn(n, n, |x| ComplexMatrix::identity(n).scale(x.trace()))
        .expect("shape is consistent")
}

pub fn identity_map(n: usize) -> MatrixMap {
    MatrixMap::from_fn(n, n, Clone::clone).expect("shape is consistent")
}

pub fn transpose_map(n: usize) -> MatrixMap {
    MatrixMap::from_fn(n, n, ComplexMatrix::transpose).expect("shape is consistent")
}

/// `AdV(x) = V* x V` for `V: ℂᵐ → ℂⁿ` given as an `n×m` matrix.
pub fn ad(v: &ComplexMatrix) -> MatrixMap {
    let vh = v.adjoint();
    MatrixMap::from_fn(v.rows(), v.cols(), |x| &(&vh * x) * v).expect("shape is consistent")
}

/// `Tr(C_ψ C_φ)`.
pub fn dual_pairing(psi: &MatrixMap, phi: &MatrixMap) -> Result<f64> {
    psi.same_shape(phi)?;
    let (a, b) = (choi(psi).mat, choi(phi).mat);
    let d = a.rows();
    let mut acc = C64::new(0.0, 0.0);
    for r in 0..d {
        for c in 0..d {
            acc += a[(r, c)] * b[(c, r)];
        }
    }
    Ok(acc.re)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThresholdVariant {
    /// `cTr + t`
    Transpose,
    /// `cTr + ι`
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SuperPositivity {
    SuperPositive,
    NotSuperPositive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdVerdict {
    pub verdict: SuperPositivity,
    /// `Tr(C_ψ C_χ)` for `ψ = cTr + ι` against the positive map `χ = Tr − ι`
    /// (resp. `cTr + t` against `Tr − t`); equals `(c−1)(n²−n)`.
    pub witness: f64,
}

pub fn threshold_map(c: f64, n: usize, variant: ThresholdVariant) -> MatrixMap {
    let second = match variant {
        ThresholdVariant::Transpose => transpose_map(n),
        ThresholdVariant::Identity => identity_map(n),
    };
    trace_map(n).scale(c).add(&second).expect("same shape")
}

/// `cTr + t` and `cTr + ι` are super-positive exactly when `c ≥ 1`.
///
/// The witness pairs the map with a positive map; a negative pairing puts
/// the map outside the dual cone of positive maps.
pub fn super_positive_threshold_verdict(
    c: f64,
    n: usize,
    variant: ThresholdVariant,
) -> ThresholdVerdict {
    let psi = threshold_map(c, n, variant);
    let probe = match variant {
        ThresholdVariant::Transpose => trace_map(n).sub(&transpose_map(n)),
        ThresholdVariant::Identity => trace_map(n).sub(&identity_map(n)),
    }
    .expect("same shape");
    let witness = dual_pairing(&psi, &probe).expect("same shape");
    let verdict = if c >= 1.0 {
        SuperPositivity::SuperPositive
    } else {
        SuperPositivity::NotSuperPositive
    };
    ThresholdVerdict { verdict, witness }
}

/// `x ↦ φ(1)·Tr(x) + φ(x)`, super-positive whenever `φ` is positive.
pub fn cor5_map(phi: &MatrixMap) -> MatrixMap {
    let unit = phi.unit_image();
    let images = phi
        .images
        .iter()
        .enumerate()
        .map(|(idx, img)| {
            if idx / phi.n == idx % phi.n {
                img + &unit
            } else {
                img.clone()
            }
        })
        .collect();
    MatrixMap {
        n: phi.n,
        m: phi.m,
        images,
    }
}

/// Checkable consequences of super-positivity: Choi matrix PSD and PPT.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuperPositivityEvidence {
    pub choi_min_eigenvalue: f64,
    pub partial_transpose_min_eigenvalue: f64,
    pub psd: bool,
    pub ppt: bool,
}

pub fn super_positivity_evidence(phi: &MatrixMap, tol: f64) -> Result<SuperPositivityEvidence> {
    let c = choi(phi);
    let lmin = eigen::hermitian_eigen(&c.mat, HERMITIAN_TOL.max(tol))?.min();
    let pt_min = eigen::hermitian_eigen(&c.partial_transpose(), HERMITIAN_TOL.max(tol))?.min();
    Ok(SuperPositivityEvidence {
        choi_min_eigenvalue: lmin,
        partial_transpose_min_eigenvalue: pt_min,
        psd: lmin >= -tol,
        ppt: pt_min >= -tol,
    })
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    n: usize,
    m: usize,
    images: Vec<ComplexMatrix>,
}

impl TryFrom<MapJson> for MatrixMap {
    type Error = Error;

    fn try_from(json: MapJson) -> Result<Self> {
        MatrixMap::new(json.n, json.m, json.images)
    }
}

impl From<MatrixMap> for MapJson {
    fn from(map: MatrixMap) -> Self {
        MapJson {
            n: map.n,
            m: map.m,
            images: map.images,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ChoiJson {
    input_dim: usize,
    output_dim: usize,
    #[serde(flatten)]
    matrix: MatrixJson,
}

impl TryFrom<ChoiJson> for ChoiMatrix {
    type Error = Error;

    fn try_from(json: ChoiJson) -> Result<Self> {
        ChoiMatrix::new(json.input_dim, json.output_dim, json.matrix.try_into()?)
    }
}

impl From<ChoiMatrix> for ChoiJson {
    fn from(c: ChoiMatrix) -> Self {
        ChoiJson {
            input_dim: c.n,
            output_dim: c.m,
            matrix: c.mat.into(),
        }
    }
}
