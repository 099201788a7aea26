// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded samplers: Haar unitaries, random densities and separable states.
//!
//! Every stream is ChaCha8 seeded through `SeedableRng::seed_from_u64`, so a
//! given seed reproduces bit-for-bit on every platform. Parallel consumers
//! select independent ChaCha streams with [`stream_rng`].

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::choi::{ad, MatrixMap};
use crate::matrix::{ComplexMatrix, C64};

pub type SpaRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SpaRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Stream `stream` of the generator for `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> SpaRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex normal: real and imaginary parts i.i.d. N(0, 1/2).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Haar-random unitary.
///
/// Modified Gram–Schmidt on the columns of a complex Ginibre matrix. The
/// implied QR factor has a positive real diagonal, which is exactly the phase
/// fix that makes the Q factor Haar distributed.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut q = ginibre(n, n, rng);
    for j in 0..n {
        for k in 0..j {
            let proj: C64 = (0..n).map(|i| q[(i, k)].conj() * q[(i, j)]).sum();
            for i in 0..n {
                let qik = q[(i, k)];
                q[(i, j)] -= qik * proj;
            }
        }
        let norm = (0..n).map(|i| q[(i, j)].norm_sqr()).sum::<f64>().sqrt();
        for i in 0..n {
            q[(i, j)] /= norm;
        }
    }
    q
}

pub fn haar_random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    haar_unitary(n, &mut seeded_rng(seed))
}

/// Haar-random unit vector in `ℂⁿ`, as an `n×1` matrix.
pub fn random_unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(n, 1, rng);
    g.scale_real(1.0 / g.frobenius_norm())
}

/// Full-rank Wishart density `G G* / Tr(G G*)`.
pub fn random_density<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(n, n, rng);
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    w.scale_real(1.0 / tr).hermitian_part()
}

/// Random Hermitian matrix with Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    ginibre(n, n, rng).hermitian_part()
}

/// Uniform point on the probability simplex with `k` vertices.
pub fn simplex_weights<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<f64> {
    let raw: Vec<f64> = (0..k).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// Separable density on `M_n ⊗ M_n`: a simplex-uniform mixture of between 1
/// and `2n²` products of Wishart densities.
pub fn random_separable_density<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let terms = rng.random_range(1..=2 * n * n);
    let weights = simplex_weights(terms, rng);
    let mut acc = ComplexMatrix::zeros(n * n, n * n);
    for w in weights {
        let b = random_density(n, rng);
        let c = random_density(n, rng);
        acc = &acc + &b.kron(&c).scale_real(w);
    }
    acc
}

/// Outer product `x x*` of a column vector.
pub fn projector(x: &ComplexMatrix) -> ComplexMatrix {
    debug_assert_eq!(x.cols(), 1);
    let n = x.rows();
    let mut p = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            p[(i, j)] = x[(i, 0)] * x[(j, 0)].conj();
        }
    }
    p
}

/// Random unital, hermiticity-preserving map on `M_n`.
///
/// Off-diagonal images are Ginibre with `φ(e_ji) = φ(e_ij)*`; diagonal images
/// are random Hermitian except the last, which is fixed by `φ(1) = 1`.
pub fn random_unital_map<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MatrixMap {
    let mut images = vec![ComplexMatrix::zeros(n, n); n * n];
    let mut diag_sum = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if i == j {
                if i + 1 < n {
                    let h = random_hermitian(n, rng).scale_real(0.5);
                    diag_sum = &diag_sum + &h;
                    images[i * n + i] = h;
                }
            } else {
                let x = ginibre(n, n, rng).scale_real(0.5);
                images[j * n + i] = x.adjoint();
                images[i * n + j] = x;
            }
        }
    }
    images[n * n - 1] = &ComplexMatrix::identity(n) - &diag_sum;
    MatrixMap::new(n, n, images).expect("n x n images")
}

/// Completely positive map `Σ_k Ad(V_k)` with `kraus` Ginibre operators.
pub fn random_cp_map<R: Rng + ?Sized>(n: usize, kraus: usize, rng: &mut R) -> MatrixMap {
    (0..kraus).fold(
        MatrixMap::new(n, n, vec![ComplexMatrix::zeros(n, n); n * n]).expect("shape"),
        |acc, _| acc.add(&ad(&ginibre(n, n, rng))).expect("same shape"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen;

    #[test]
    fn haar_is_unitary_for_many_seeds() {
        for seed in 0..1000 {
            let n = 1 + (seed as usize % 5);
            let u = haar_random_unitary(n, seed);
            let err = (&u.adjoint() * &u).max_abs_diff(&ComplexMatrix::identity(n));
            assert!(err < 1e-12, "seed {seed}: {err}");
        }
    }

    #[test]
    fn haar_is_seed_deterministic() {
        assert_eq!(haar_random_unitary(4, 11), haar_random_unitary(4, 11));
        assert_ne!(haar_random_unitary(4, 11), haar_random_unitary(4, 12));
    }

    #[test]
    fn streams_differ() {
        let a: u64 = stream_rng(5, 0).random();
        let b: u64 = stream_rng(5, 1).random();
        assert_ne!(a, b);
        let c: u64 = stream_rng(5, 0).random();
        assert_eq!(a, c);
    }

    #[test]
    fn haar_first_moment_vanishes() {
        // E[U_00] = 0 and E[|U_00|²] = 1/n under Haar measure
        let mut rng = seeded_rng(3);
        let n = 3;
        let samples = 20_000;
        let (mut mean, mut second) = (C64::new(0.0, 0.0), 0.0);
        for _ in 0..samples {
            let u = haar_unitary(n, &mut rng);
            mean += u[(0, 0)];
            second += u[(0, 0)].norm_sqr();
        }
        assert!((mean / samples as f64).norm() < 0.02);
        assert!((second / samples as f64 - 1.0 / n as f64).abs() < 0.01);
    }

    #[test]
    fn densities_are_states() {
        let mut rng = seeded_rng(9);
        for n in 1..5 {
            let rho = random_density(n, &mut rng);
            assert!((rho.trace().re - 1.0).abs() < 1e-12);
            assert!(eigen::is_psd(&rho, 1e-12).unwrap());
            let sep = random_separable_density(n, &mut rng);
            assert!((sep.trace().re - 1.0).abs() < 1e-12);
            assert!(eigen::is_psd(&sep, 1e-12).unwrap());
        }
    }

    #[test]
    fn random_unital_maps_are_unital() {
        let mut rng = seeded_rng(31);
        for n in 1..5 {
            let phi = random_unital_map(n, &mut rng);
            assert!(phi.unit_image().max_abs_diff(&ComplexMatrix::identity(n)) < 1e-14);
            assert!(phi.is_hermiticity_preserving(0.0));
        }
    }

    #[test]
    fn simplex_weights_sum_to_one() {
        let w = simplex_weights(7, &mut seeded_rng(1));
        assert!(w.iter().all(|&x| x > 0.0));
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }
}
