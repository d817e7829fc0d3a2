use std::f64::consts::PI;

use landau_husimi::closedform::{
    coherent_overlap, husimi_general, husimi_lambda, husimi_landau, husimi_vacuum, lambda_overlap,
    overlap_kernel, overlap_kernel_sqr, wigner_expectation, wigner_general, HusimiEvaluator, WignerEvaluator,
};
use landau_husimi::fock::{
    glauber_state, lambda_state, landau_state, overlap, squeezed_coherent_state, FockAmplitudes, ModelParams,
    PhasePoint,
};
use landau_husimi::{Error, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn random_point(rng: &mut ChaCha8Rng, r: f64) -> PhasePoint {
    PhasePoint::from_reals(
        rng.random_range(-r..r),
        rng.random_range(-r..r),
        rng.random_range(-r..r),
        rng.random_range(-r..r),
    )
}

fn random_state(rng: &mut ChaCha8Rng, params: &ModelParams, block: usize) -> FockAmplitudes {
    let mut v = vec![c(0.0, 0.0); params.dim()];
    for n in 0..block {
        for m in 0..block {
            v[n * params.cutoff_k + m] = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
    }
    let mut s = FockAmplitudes::from_vec(v, params.cutoff_pi, params.cutoff_k, false).unwrap();
    s.normalize().unwrap();
    s
}

#[test]
fn landau_closed_form_matches_fock_route() {
    let params = ModelParams::with_cutoff(12);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (n, m) in [(0, 0), (1, 0), (0, 1), (2, 3), (5, 1), (4, 4)] {
        let psi = landau_state(n, m, &params).unwrap();
        for kappa in [0.3, 0.7, 1.0, 1.0 + 3e-7, 1.8, 4.0] {
            for _ in 0..4 {
                let pt = random_point(&mut rng, 1.5);
                let a = husimi_landau(n, m, &pt, kappa).unwrap().value();
                let b = husimi_general(&psi, &pt, kappa).unwrap().value();
                assert!((a - b).abs() < 1e-10 * (1.0 + b), "({n},{m}) kappa={kappa}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn landau_vacuum_and_zeros() {
    let pt = PhasePoint::from_reals(0.3, -0.2, 0.9, 0.1);
    assert_eq!(husimi_landau(0, 0, &pt, 1.7).unwrap().value(), husimi_vacuum(&pt, 1.7).unwrap().value());
    assert_eq!(husimi_landau(2, 1, &PhasePoint::origin(), 1.0).unwrap().value(), 0.0);
    assert!((husimi_vacuum(&PhasePoint::origin(), 1.0).unwrap().value() - 1.0).abs() < 1e-15);
}

#[test]
fn kernel_matches_fock_inner_products() {
    let params = ModelParams::with_cutoff(40);
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for kappa in [0.5, 1.0, 2.0] {
        for _ in 0..4 {
            let a = random_point(&mut rng, 1.0);
            let b = random_point(&mut rng, 1.0);
            let sa = squeezed_coherent_state(&a, kappa, &params).unwrap();
            let sb = squeezed_coherent_state(&b, kappa, &params).unwrap();
            let fock = overlap(&sa, &sb).unwrap();
            let closed = overlap_kernel(&a, &b, kappa).unwrap();
            assert!((fock - closed).norm() < 1e-10, "kappa={kappa}: {fock} vs {closed}");
            let sq = overlap_kernel_sqr(&a, &b, kappa).unwrap();
            assert!((sq - closed.norm_sqr()).abs() < 1e-12);
            // Husimi of a squeezed coherent state at another point
            let h = husimi_general(&sb, &a, kappa).unwrap().value();
            assert!((h - sq).abs() < 1e-10);
        }
    }
}

#[test]
fn coherent_overlap_matches_glauber_states() {
    let params = ModelParams::with_cutoff(40);
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for kappa in [0.5, 1.0, 2.0] {
        for _ in 0..3 {
            let pt = random_point(&mut rng, 1.0);
            let z1 = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let z2 = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let g = glauber_state(z1, z2, params.cutoff_pi, params.cutoff_k).unwrap();
            let s = squeezed_coherent_state(&pt, kappa, &params).unwrap();
            let fock = overlap(&g, &s).unwrap();
            let closed = coherent_overlap(z1, z2, &pt, kappa).unwrap();
            assert!((fock - closed).norm() < 1e-10, "{fock} vs {closed}");
        }
    }
}

#[test]
fn lambda_husimi_and_overlap() {
    let params = ModelParams::with_cutoff(40);
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for kappa in [0.5, 1.0, 2.0] {
        let lam = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let l = lambda_state(lam, &params).unwrap();
        for _ in 0..3 {
            let pt = random_point(&mut rng, 1.0);
            let ov = lambda_overlap(lam, &pt, kappa).unwrap();
            let h = husimi_lambda(lam, &pt, kappa).unwrap().value();
            assert!((ov.norm_sqr() - h).abs() < 1e-12);
            let s = squeezed_coherent_state(&pt, kappa, &params).unwrap();
            assert!((overlap(&l, &s).unwrap() - ov).norm() < 1e-6);
            // no γ dependence
            let moved = PhasePoint::new(pt.gamma + c(0.8, -1.1), pt.epsilon);
            assert_eq!(husimi_lambda(lam, &moved, kappa).unwrap().value(), h);
        }
    }
}

#[test]
fn husimi_values_are_bounded_probabilities() {
    let params = ModelParams::with_cutoff(10);
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..5 {
        let psi = random_state(&mut rng, &params, 4);
        let mut ev = HusimiEvaluator::new(&psi).unwrap();
        for _ in 0..20 {
            let pt = random_point(&mut rng, 2.0);
            let kappa = rng.random_range(0.2..5.0);
            let h = ev.eval(&pt, kappa);
            assert!((0.0..=1.0 + 1e-12).contains(&h), "{h}");
            assert_eq!(h, husimi_general(&psi, &pt, kappa).unwrap().value());
        }
    }
}

#[test]
fn wigner_is_real_and_bounded() {
    let params = ModelParams::with_cutoff(10);
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let bound = 1.0 / (PI * PI);
    for _ in 0..5 {
        let psi = random_state(&mut rng, &params, 4);
        let mut ev = WignerEvaluator::new(&psi).unwrap();
        for _ in 0..20 {
            let pt = random_point(&mut rng, 2.0);
            let z = ev.eval_complex(&pt);
            assert!(z.im.abs() < 1e-12, "{z}");
            assert!(z.re.abs() <= bound * (1.0 + 1e-12));
            assert_eq!(wigner_general(&psi, &pt).unwrap().value(), z.re);
            assert_eq!(wigner_expectation(&psi, &pt).unwrap(), z);
        }
    }
}

#[test]
fn wigner_of_landau_states_at_origin() {
    // parity eigenvalue (−1)^{n+m} over π²
    let params = ModelParams::with_cutoff(6);
    for (n, m) in [(0, 0), (1, 0), (1, 1), (2, 3)] {
        let psi = landau_state(n, m, &params).unwrap();
        let w = wigner_general(&psi, &PhasePoint::origin()).unwrap().value();
        let sign = if (n + m) % 2 == 0 { 1.0 } else { -1.0 };
        assert!((w - sign / (PI * PI)).abs() < 1e-14, "({n},{m}) {w}");
    }
}

#[test]
fn domain_errors() {
    let pt = PhasePoint::origin();
    assert!(matches!(husimi_vacuum(&pt, 0.0), Err(Error::Domain(_))));
    assert!(matches!(husimi_landau(1, 1, &pt, -2.0), Err(Error::Domain(_))));
    assert!(matches!(husimi_vacuum(&pt, f64::NAN), Err(Error::Domain(_))));
    let raw = FockAmplitudes::from_vec(vec![c(1.0, 0.0); 4], 2, 2, false).unwrap();
    assert!(husimi_general(&raw, &pt, 1.0).is_err());
    assert!(wigner_general(&raw, &pt).is_err());
}
