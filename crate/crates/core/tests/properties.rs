// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use proptest::prelude::*;
use rand::Rng;

use spacert_core::bipartite::{
    self, flip, max_entangled, partial_transpose, twirl, BipartiteOperator,
};
use spacert_core::choi::{self, choi, map_from_choi, MatrixMap};
use spacert_core::eigen::{self, hermitian_eigen};
use spacert_core::hakye::{self, HaKyeParams};
use spacert_core::matrix::{ComplexMatrix, C64};
use spacert_core::random::{
    ginibre, haar_unitary, random_cp_map, random_density, random_hermitian, random_unital_map,
    seeded_rng,
};
use spacert_core::spa;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn random_map(n: usize, m: usize, seed: u64) -> MatrixMap {
    let mut rng = seeded_rng(seed);
    MatrixMap::new(n, m, (0..n * n).map(|_| ginibre(m, m, &mut rng)).collect()).unwrap()
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn eigen_reconstruction_and_orthonormality(seed in any::<u64>(), n in 1usize..=16) {
        let a = random_hermitian(n, &mut seeded_rng(seed));
        let spec = hermitian_eigen(&a, 1e-9).unwrap();
        let norm = a.frobenius_norm();
        let u = &spec.eigenvectors;
        prop_assert!((&spec.reconstruct() - &a).frobenius_norm() <= 1e-9 * norm);
        prop_assert!((&(&u.adjoint() * u) - &ComplexMatrix::identity(n)).frobenius_norm() <= 1e-10);
        for k in 0..n {
            let v = ComplexMatrix::from_fn(n, 1, |i, _| u[(i, k)]);
            let residual = &(&a * &v) - &v.scale_real(spec.eigenvalues[k]);
            prop_assert!(residual.frobenius_norm() <= 1e-10 * norm);
        }
        prop_assert!(spec.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let sum: f64 = spec.eigenvalues.iter().sum();
        prop_assert!((sum - a.trace().re).abs() <= 1e-10 * norm.max(1.0));
    }

    #[test]
    fn eigen_agrees_with_nalgebra(seed in any::<u64>(), n in 1usize..=9) {
        let a = random_hermitian(n, &mut seeded_rng(seed));
        let na = nalgebra::DMatrix::from_fn(n, n, |i, j| {
            nalgebra::Complex::new(a[(i, j)].re, a[(i, j)].im)
        });
        let mut reference: Vec<f64> = na.symmetric_eigen().eigenvalues.iter().copied().collect();
        reference.sort_by(f64::total_cmp);
        let ours = eigen::eigenvalues(&a).unwrap();
        for (x, y) in ours.iter().zip(&reference) {
            prop_assert!((x - y).abs() < 1e-11, "{x} vs {y}");
        }
    }

    #[test]
    fn negative_part_shift(seed in any::<u64>(), n in 1usize..=8, c in 0.0f64..3.0) {
        let a = random_hermitian(n, &mut seeded_rng(seed));
        let shifted = &a + &ComplexMatrix::identity(n).scale_real(c);
        let lhs = eigen::negative_part_norm(&shifted).unwrap();
        let rhs = (eigen::negative_part_norm(&a).unwrap() - c).max(0.0);
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn positive_negative_split(seed in any::<u64>(), n in 1usize..=9) {
        let a = random_hermitian(n, &mut seeded_rng(seed));
        let (p, m) = eigen::positive_negative_parts(&a).unwrap();
        let scale = a.frobenius_norm();
        prop_assert!((&(&p - &m) - &a).frobenius_norm() <= 1e-10 * scale);
        prop_assert!((&p * &m).frobenius_norm() <= 1e-10 * scale * scale);
        prop_assert!(eigen::min_eigenvalue(&p).unwrap() >= -1e-12 * scale);
        prop_assert!(eigen::min_eigenvalue(&m).unwrap() >= -1e-12 * scale);
    }

    #[test]
    fn kron_bilinear_and_trace(seed in any::<u64>(), n in 1usize..=4, m in 1usize..=4, s in -2.0f64..2.0) {
        let mut rng = seeded_rng(seed);
        let (a1, a2, b) = (ginibre(n, n, &mut rng), ginibre(n, n, &mut rng), ginibre(m, m, &mut rng));
        let lhs = (&a1.scale_real(s) + &a2).kron(&b);
        let rhs = &a1.kron(&b).scale_real(s) + &a2.kron(&b);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        prop_assert!((a1.kron(&b).trace() - a1.trace() * b.trace()).norm() < 1e-11);
    }

    #[test]
    fn t_is_trace_against_flip(seed in any::<u64>(), n in 2usize..=4) {
        let a = BipartiteOperator::new(n, random_hermitian(n * n, &mut seeded_rng(seed))).unwrap();
        let via_flip = (a.matrix() * flip(n).matrix()).trace();
        prop_assert!((a.t_functional() - via_flip).norm() <= 1e-12);
        prop_assert!(a.t_functional().im.abs() <= 1e-12);
        prop_assert!(a.s_functional().im.abs() <= 1e-12);
    }

    #[test]
    fn s_is_t_of_partial_transpose(seed in any::<u64>(), n in 1usize..=4) {
        let a = BipartiteOperator::new(n, ginibre(n * n, n * n, &mut seeded_rng(seed))).unwrap();
        prop_assert_eq!(a.s_functional(), partial_transpose(&a).t_functional());
    }

    #[test]
    fn twirl_preserves_trace_and_t_and_is_idempotent(seed in any::<u64>(), n in 2usize..=4) {
        let a = BipartiteOperator::new(n, ginibre(n * n, n * n, &mut seeded_rng(seed))).unwrap();
        let p = twirl(&a).unwrap().reconstruct(n);
        prop_assert!((p.trace() - a.trace()).norm() <= 1e-12);
        prop_assert!((p.t_functional() - a.t_functional()).norm() <= 1e-12);
        let again = twirl(&p).unwrap();
        let once = twirl(&a).unwrap();
        prop_assert!((again.alpha - once.alpha).norm() <= 1e-12);
        prop_assert!((again.beta - once.beta).norm() <= 1e-12);
    }

    #[test]
    fn twirl_commutes_with_local_unitaries(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = seeded_rng(seed);
        let a = BipartiteOperator::new(n, random_density(n * n, &mut rng)).unwrap();
        let p = twirl(&a).unwrap().reconstruct(n).into_matrix();
        for _ in 0..5 {
            let u = haar_unitary(n, &mut rng);
            let uu = u.kron(&u);
            prop_assert!((&uu * &p).max_abs_diff(&(&p * &uu)) <= 1e-10);
        }
    }

    #[test]
    fn density_s_bounds(seed in any::<u64>(), n in 2usize..=4) {
        let a = BipartiteOperator::new(n, random_density(n * n, &mut seeded_rng(seed))).unwrap();
        let s = a.s_functional().re;
        prop_assert!(s >= -1e-12 && s <= n as f64 + 1e-12);
    }

    #[test]
    fn choi_round_trip_exact(seed in any::<u64>(), n in 1usize..=4, m in 1usize..=4) {
        let phi = random_map(n, m, seed);
        prop_assert_eq!(map_from_choi(&choi(&phi)), phi);
    }

    #[test]
    fn choi_is_linear(seed in any::<u64>(), n in 1usize..=3, s in -3i32..3, t in -3i32..3) {
        let (phi, psi) = (random_map(n, n, seed), random_map(n, n, seed ^ 0xdead_beef));
        let (s, t) = (s as f64, t as f64);
        let lhs = choi(&phi.scale(s).add(&psi.scale(t)).unwrap()).into_matrix();
        let rhs = &choi(&phi).into_matrix().scale_real(s) + &choi(&psi).into_matrix().scale_real(t);
        prop_assert!(lhs.max_abs_diff(&rhs) == 0.0);
    }

    #[test]
    fn cp_maps_have_psd_choi(seed in any::<u64>(), n in 1usize..=4, kraus in 1usize..=4) {
        let phi = random_cp_map(n, kraus, &mut seeded_rng(seed));
        let c = choi(&phi).into_matrix();
        prop_assert!(eigen::min_eigenvalue(&c).unwrap() >= -1e-10 * c.frobenius_norm().max(1.0));
    }

    #[test]
    fn dual_pairing_symmetric(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = seeded_rng(seed);
        let (phi, psi) = (random_unital_map(n, &mut rng), random_unital_map(n, &mut rng));
        let a = choi::dual_pairing(&psi, &phi).unwrap();
        let b = choi::dual_pairing(&phi, &psi).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn t_of_choi_matches_image_entries(seed in any::<u64>(), n in 1usize..=4) {
        let phi = random_map(n, n, seed);
        let direct: C64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| phi.image(i, j)[(j, i)])
            .sum();
        let t = choi(&phi).to_bipartite().unwrap().t_functional();
        prop_assert!((t - direct).norm() <= 1e-12);
    }

    #[test]
    fn w_tilde_min_eigenvalue_is_affine(seed in any::<u64>(), n in 2usize..=3) {
        let phi = random_unital_map(n, &mut seeded_rng(seed));
        let l = |t: f64| spa::w_tilde_min_eigenvalue(&phi, t).unwrap();
        let (l0, l5, l1) = (l(0.0), l(0.5), l(1.0));
        prop_assert!((l5 - 0.5 * (l0 + l1)).abs() <= 1e-10);
        prop_assert!(l1 <= l0 + 1e-12);
    }

    #[test]
    fn zero_negative_part_spa_is_normalized_choi(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = seeded_rng(seed);
        let u = haar_unitary(n, &mut rng);
        let phi = choi::ad(&u);
        let r = spa::spa(&phi).unwrap();
        prop_assert!(r.neg_norm <= 1e-12);
        prop_assert!((r.t_star - 1.0).abs() <= 1e-12);
        let expected = choi(&phi).into_matrix().scale_real(1.0 / n as f64);
        prop_assert!(r.spa_state.matrix().max_abs_diff(&expected) <= 1e-12);
    }

    #[test]
    fn certificate_entangled_implies_spa_state_violation(seed in any::<u64>(), n in 2usize..=3) {
        let phi = random_unital_map(n, &mut seeded_rng(seed));
        let cert = spa::spa_entanglement_certificate(&phi, 1e-9).unwrap();
        let evidence = spa::spa_state_evidence(&phi, 1e-9).unwrap();
        prop_assert_eq!(evidence.certificate_violated, cert.verdict == bipartite::Verdict::Entangled);
        if evidence.certificate_violated {
            prop_assert!(evidence.st_bound_violated);
        }
    }

    #[test]
    fn circulant_min_eigenvalue(a in 0.0f64..3.0, theta in -PI..PI) {
        let lmin = eigen::min_eigenvalue(&hakye::p_submatrix(a, theta)).unwrap();
        prop_assert!((lmin - (a - hakye::p_theta(theta))).abs() <= 1e-12);
    }

    #[test]
    fn hakye_choi_hermitian(a in 0.0f64..3.0, b in 0.0f64..3.0, c in 0.0f64..3.0, theta in -PI..PI) {
        let p = HaKyeParams::new(a, b, c, theta).unwrap();
        prop_assert!(hakye::choi9(&p).matrix().is_hermitian(0.0));
    }
}

#[test]
fn s_and_t_bounded_on_random_separable_states() {
    let mut rng = seeded_rng(2012);
    for n in 2..=4 {
        for _ in 0..300 {
            let a = BipartiteOperator::new(
                n,
                spacert_core::random::random_separable_density(n, &mut rng),
            )
            .unwrap();
            let (s, t) = (a.s_functional().re, a.t_functional().re);
            assert!((-1e-9..=1.0 + 1e-9).contains(&s), "S = {s}");
            assert!((-1e-9..=1.0 + 1e-9).contains(&t), "T = {t}");
        }
    }
}

#[test]
fn max_entangled_saturates_s() {
    for n in 2..=5 {
        assert!((max_entangled(n).s_functional().re - n as f64).abs() < 1e-13);
    }
}

#[test]
fn monte_carlo_twirl_matches_closed_form() {
    let a = max_entangled(3);
    let mc = bipartite::twirl_monte_carlo_threaded(&a, 100_000, 7, 4);
    let expected = (&ComplexMatrix::identity(9) + flip(3).matrix()).scale_real(1.0 / 12.0);
    assert!(mc.matrix().max_abs_diff(&expected) < 5e-3);
}

#[test]
fn positivity_sampling_sound_on_random_positive_params() {
    let mut rng = seeded_rng(77);
    let mut checked = 0;
    while checked < 10 {
        let p = HaKyeParams::new(
            rng.random_range(0.0..2.0),
            rng.random_range(0.0..2.0),
            rng.random_range(0.0..2.0),
            rng.random_range(-PI..PI),
        )
        .unwrap();
        if !hakye::is_positive(&p) {
            continue;
        }
        let report = hakye::positivity_sampling_check(&p, 2_000, checked).unwrap();
        assert_eq!(report.violations, 0, "{p:?}: {report:?}");
        checked += 1;
    }
}
