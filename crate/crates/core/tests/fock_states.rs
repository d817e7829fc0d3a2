use landau_husimi::closedform::lambda_overlap;
use landau_husimi::fock::{
    coherent_amplitudes, coherent_state, displacement_matrix, displacement_matrix_expm, lambda_state,
    landau_state, overlap, squeezed_coherent_state, zeta_state, FockAmplitudes, ModelParams, OperatorRep,
    PhasePoint, SparseMatrix, SqueezedCoherentKernel,
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

fn fact(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Largest `|(Aψ − ev ψ)_i|` over the interior block, relative to `max |ψ_i|` there.
fn interior_residual(a: &SparseMatrix, psi: &FockAmplitudes, ev: C64, ops: &OperatorRep, band: usize) -> f64 {
    let av = a.apply_state(psi);
    let idx = ops.interior(band);
    let scale = idx.iter().map(|&i| psi.as_slice()[i].norm()).fold(0.0, f64::max);
    let worst = idx
        .iter()
        .map(|&i| (av[i] - ev * psi.as_slice()[i]).norm())
        .fold(0.0, f64::max);
    worst / scale
}

#[test]
fn landau_states_are_orthonormal() {
    let p = ModelParams::with_cutoff(4);
    let a = landau_state(0, 0, &p).unwrap();
    let b = landau_state(1, 0, &p).unwrap();
    assert_eq!(overlap(&a, &a).unwrap(), c(1.0, 0.0));
    assert_eq!(overlap(&a, &b).unwrap(), c(0.0, 0.0));
    let d = landau_state(1, 2, &p).unwrap();
    assert_eq!(d.get(1, 2), c(1.0, 0.0));
    assert_eq!(d.support().len(), 1);
}

#[test]
fn coherent_state_is_k_eigenvector() {
    let params = ModelParams::with_cutoff(30);
    let ops = OperatorRep::new(&params).unwrap();
    let pt = PhasePoint::from_reals(0.4, -0.7, 0.2, 0.5);
    for kappa in [0.5, 1.0, 2.0] {
        let s = coherent_state(&pt, kappa, &params).unwrap();
        let (a_pi, a_k) = coherent_amplitudes(&pt, kappa);
        assert!(interior_residual(&ops.k_minus, &s, a_k, &ops, 1) < 1e-10);
        assert!(interior_residual(&ops.pi_minus, &s, a_pi, &ops, 1) < 1e-10);
    }
    let vac = coherent_state(&PhasePoint::origin(), 3.0, &params).unwrap();
    assert_eq!(vac, landau_state(0, 0, &params).unwrap());
}

#[test]
fn squeezed_coherent_matches_raw_exponential() {
    // N exp(AΠ₊ + BK₊ + CΠ₊K₊)|0,0⟩ expanded term by term
    let params = ModelParams::with_cutoff(40);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for kappa in [0.3, 0.5, 2.0, 3.0] {
        let pt = random_point(&mut rng, 1.0);
        let (g, e) = (pt.gamma, pt.epsilon);
        let d = 1.0 + kappa;
        let a = c(0.0, -1.0) * (e.conj() * kappa - g.conj()) / d;
        let b = (e * kappa + g) / d;
        let cc = c(0.0, (kappa - 1.0) / d);
        let norm = 2.0 * kappa.sqrt() / d * (-(kappa * e.norm_sqr() + g.norm_sqr()) / (2.0 * d)).exp();
        let s = squeezed_coherent_state(&pt, kappa, &params).unwrap();
        for n in 0..7 {
            for m in 0..7 {
                let mut acc = c(0.0, 0.0);
                for l in 0..=n.min(m) {
                    acc += a.powu((n - l) as u32) * b.powu((m - l) as u32) * cc.powu(l as u32)
                        / (fact(l) * fact(n - l) * fact(m - l));
                }
                let want = acc * norm * (fact(n) * fact(m)).sqrt();
                assert!((s.get(n, m) - want).norm() < 1e-12, "kappa={kappa} ({n},{m})");
            }
        }
    }
}

#[test]
fn kappa_one_window_is_continuous() {
    let pt = PhasePoint::from_reals(0.3, 0.1, -0.6, 0.4);
    let inside = SqueezedCoherentKernel::new(&pt, 1.0 + 5e-7).unwrap();
    let outside = SqueezedCoherentKernel::new(&pt, 1.0 + 2e-6).unwrap();
    assert_eq!(inside.tau, 0.0);
    for (n, m) in [(0, 0), (2, 1), (3, 3)] {
        assert!((inside.coefficient(n, m) - outside.coefficient(n, m)).norm() < 1e-5);
    }
}

#[test]
fn squeezed_coherent_eigen_equations() {
    let params = ModelParams::with_cutoff(40);
    let ops = OperatorRep::new(&params).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for kappa in [0.5f64, 1.0, 2.0] {
        let ch = (1.0 + kappa) / (2.0 * kappa.sqrt());
        let sh = (1.0 - kappa) / (2.0 * kappa.sqrt());
        let (cr, si) = (c(ch, 0.0), c(0.0, sh));
        let k_op = SparseMatrix::lincomb(&[(cr, &ops.k_minus), (si, &ops.pi_plus)]);
        let p_op = SparseMatrix::lincomb(&[(cr, &ops.pi_minus), (si, &ops.k_plus)]);
        for _ in 0..4 {
            let pt = random_point(&mut rng, 2.0 / 2f64.sqrt());
            let s = squeezed_coherent_state(&pt, kappa, &params).unwrap();
            let (a_pi, a_k) = coherent_amplitudes(&pt, kappa);
            let r1 = interior_residual(&k_op, &s, a_k, &ops, 2);
            let r2 = interior_residual(&p_op, &s, a_pi, &ops, 2);
            assert!(r1 < 1e-6 && r2 < 1e-6, "kappa={kappa}: {r1:.3e} {r2:.3e}");
        }
    }
}

#[test]
fn coherent_completeness_on_low_block() {
    // (1/4π²) ∫d²γ d²ε |γ,ε⟩_κ⟨γ,ε| restricted to n, m < 4
    let kappa = 1.5;
    let kernel_block = |pt: &PhasePoint| {
        let k = SqueezedCoherentKernel::new(pt, kappa).unwrap();
        let mut v = Vec::with_capacity(16);
        for n in 0..4 {
            for m in 0..4 {
                v.push(k.coefficient(n, m));
            }
        }
        v
    };
    let pts = 25;
    let l = 7.0;
    let h = 2.0 * l / (pts - 1) as f64;
    let node = |k: usize| -l + k as f64 * h;
    let mut acc = vec![c(0.0, 0.0); 256];
    for a in 0..pts {
        for b in 0..pts {
            for cc in 0..pts {
                for d in 0..pts {
                    let v = kernel_block(&PhasePoint::from_reals(node(a), node(b), node(cc), node(d)));
                    for i in 0..16 {
                        for j in 0..16 {
                            acc[i * 16 + j] += v[i] * v[j].conj();
                        }
                    }
                }
            }
        }
    }
    let scale = h.powi(4) / (4.0 * std::f64::consts::PI.powi(2));
    for i in 0..16 {
        for j in 0..16 {
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((acc[i * 16 + j] * scale - c(want, 0.0)).norm() < 1e-2, "({i},{j})");
        }
    }
}

#[test]
fn lambda_state_eigen_and_overlap() {
    let params = ModelParams::with_cutoff(40);
    let ops = OperatorRep::new(&params).unwrap();
    let lam = c(0.5, -0.4);
    let l = lambda_state(lam, &params).unwrap();
    assert!(!l.is_normalized());
    let op = SparseMatrix::lincomb(&[(c(1.0, 0.0), &ops.k_plus), (c(0.0, 1.0), &ops.pi_minus)]);
    assert!(interior_residual(&op, &l, lam, &ops, 1) < 1e-6);
    // x|λ⟩ = √(2/MΩ) λ₁|λ⟩, y|λ⟩ = −√(2/MΩ) λ₂|λ⟩
    assert!(interior_residual(&ops.x, &l, c(2f64.sqrt() * lam.re, 0.0), &ops, 1) < 1e-10);
    assert!(interior_residual(&ops.y, &l, c(-(2f64.sqrt()) * lam.im, 0.0), &ops, 1) < 1e-10);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for kappa in [0.5, 1.0, 2.0] {
        for _ in 0..3 {
            let pt = random_point(&mut rng, 1.0);
            let s = squeezed_coherent_state(&pt, kappa, &params).unwrap();
            let got = overlap(&l, &s).unwrap();
            let want = lambda_overlap(lam, &pt, kappa).unwrap();
            assert!((got - want).norm() < 1e-6, "kappa={kappa}: {got} vs {want}");
        }
    }
}

#[test]
fn zeta_state_eigen_and_momentum() {
    let m_omega = 2.0;
    let params = ModelParams::new(m_omega, 1.0, 40, 40).unwrap();
    let ops = OperatorRep::new(&params).unwrap();
    let zeta = c(0.7, 0.2);
    let z = zeta_state(zeta, &params).unwrap();
    let op = SparseMatrix::lincomb(&[(c(0.0, 1.0), &ops.pi_minus), (c(-1.0, 0.0), &ops.k_plus)]);
    assert!(interior_residual(&op, &z, zeta, &ops, 1) < 1e-6);
    let px = (m_omega / 2.0).sqrt() * zeta.im;
    let py = (m_omega / 2.0).sqrt() * zeta.re;
    assert!(interior_residual(&ops.p_x, &z, c(px, 0.0), &ops, 1) < 1e-10);
    assert!(interior_residual(&ops.p_y, &z, c(py, 0.0), &ops, 1) < 1e-10);
    // interior-projected expectation value
    let pv = ops.p_x.apply_state(&z);
    let (mut num, mut den) = (c(0.0, 0.0), 0.0);
    for i in ops.interior(1) {
        num += z.as_slice()[i].conj() * pv[i];
        den += z.as_slice()[i].norm_sqr();
    }
    assert!((num / den - c(px, 0.0)).norm() < 1e-6);
}

#[test]
fn guiding_center_ladder_relation() {
    let mo = 1.7;
    let params = ModelParams::new(mo, 1.0, 8, 8).unwrap();
    let ops = OperatorRep::new(&params).unwrap();
    // K₊ = √(MΩ/2)(x₀ − i y₀)
    let s = c((mo / 2.0).sqrt(), 0.0);
    let k = SparseMatrix::lincomb(&[(s, &ops.x0), (s * c(0.0, -1.0), &ops.y0)]);
    assert!(k.max_abs_diff_on(&ops.k_plus, &ops.interior(0)) < 1e-12);
}

#[test]
fn builders_are_deterministic() {
    let params = ModelParams::with_cutoff(20);
    let pt = PhasePoint::from_reals(0.2, 0.9, -0.4, 0.1);
    assert_eq!(
        squeezed_coherent_state(&pt, 0.7, &params).unwrap(),
        squeezed_coherent_state(&pt, 0.7, &params).unwrap()
    );
    assert_eq!(lambda_state(c(0.3, 0.1), &params).unwrap(), lambda_state(c(0.3, 0.1), &params).unwrap());
}

#[test]
fn truncation_errors_carry_cutoff_estimates() {
    let pt = PhasePoint::from_reals(3.0, 0.0, 3.0, 0.0);
    match squeezed_coherent_state(&pt, 2.0, &ModelParams::with_cutoff(8)) {
        Err(Error::Truncation { required_cutoff: Some(c), .. }) => assert!(c > 8),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(
        lambda_state(c(6.0, 0.0), &ModelParams::with_cutoff(6)),
        Err(Error::Truncation { .. }) | Ok(_)
    ));
}

#[test]
fn displacement_routes_agree() {
    let beta = c(-0.3, 0.45);
    let exact = displacement_matrix(beta, 50);
    let expm = displacement_matrix_expm(beta, 50);
    for r in 0..12 {
        for col in 0..12 {
            assert!((exact[(r, col)] - expm[(r, col)]).norm() < 1e-10);
        }
    }
}
