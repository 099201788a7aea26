// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! Entanglement and separability certificates for bipartite matrices.
//!
//! * [`matrix`], [`eigen`]: dense complex matrices and a Jacobi eigensolver.
//! * [`bipartite`]: the `S`/`T` functionals, flip, twirl, PPT.
//! * [`choi`]: linear maps on matrix algebras and their Choi matrices.
//! * [`spa`]: structural physical approximation and its certificate.
//! * [`hakye`]: the Ha–Kye maps on `M_3` and an optimal map with entangled SPA.

pub mod bipartite;
pub mod choi;
pub mod eigen;
pub mod error;
pub mod hakye;
pub mod matrix;
pub mod random;
pub mod spa;

pub use bipartite::{BipartiteOperator, Verdict, WernerForm};
pub use choi::{ChoiMatrix, MatrixMap};
pub use eigen::HermitianSpectrum;
pub use error::{Error, Result};
pub use hakye::{CounterexampleReport, HaKyeParams};
pub use matrix::{ComplexMatrix, C64};
pub use spa::{CertificateReport, SpaResult};
