//! Built-in consistency suites. Each check compares two independent routes
//! to the same quantity and reports the worst deviation it saw.

use std::f64::consts::PI;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CliError, Suite};
use crate::closedform::{
    coherent_overlap, husimi_general, husimi_landau, husimi_squeezed_vacuum, overlap_kernel, overlap_kernel_sqr,
    wigner_general,
};
use crate::fock::{
    glauber_state, landau_state, overlap, squeezed_coherent_state, ModelParams, OperatorRep, PhasePoint, SparseMatrix,
};
use crate::hermite2::{hermite2, hermite2_via_genfun, Hermite2Args};
use crate::marginals::{
    broadened_momentum_density, broadened_position_density, husimi_marginal_epsilon, husimi_marginal_gamma,
};
use crate::smoothing::{husimi_by_convolution, husimi_normalization, wigner_normalization, QuadSpec};
use crate::squeeze::{
    lambda_quadrature_default, squeeze_matrix, squeeze_matrix_via_lambda, squeeze_state, variance_xy,
};
use crate::{Result, C64};

const SEED: u64 = 0x5eed;

/// Outcome of a single check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type CheckFn = fn(&ModelParams) -> Result<(f64, f64)>;

/// `(suite, name, check)`; a check returns `(worst deviation, tolerance)`.
const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("hermite", "direct sum vs generating function", hermite_genfun),
    ("hermite", "argument swap symmetry", hermite_symmetry),
    ("hermite", "three-term recurrence", hermite_recurrence),
    ("closedform", "landau closed form vs Fock coefficients", landau_vs_fock),
    ("closedform", "overlap kernel vs Fock inner product", kernel_vs_fock),
    ("closedform", "squared kernel vs Gaussian", kernel_sqr),
    ("closedform", "coherent overlap vs Glauber state", coherent_vs_glauber),
    ("closedform", "negative Wigner value of landau(1,0)", wigner_sign),
    ("smoothing", "vacuum convolution at origin", smoothing_vacuum),
    ("smoothing", "landau convolution vs closed form", smoothing_landau),
    ("smoothing", "Husimi and Wigner normalization", normalizations),
    ("marginals", "gamma side vs broadened position density", marginal_gamma),
    ("marginals", "epsilon side vs broadened momentum density", marginal_epsilon),
    ("squeeze", "ladder transforms on low block", squeeze_ladders),
    ("squeeze", "squeezing relabels squeezed coherent states", squeeze_relabel),
    ("squeeze", "squeezed vacuum closed form", squeeze_vacuum),
    ("squeeze", "lambda representation of the squeeze matrix", squeeze_lambda),
    ("squeeze", "minimum uncertainty product", uncertainty_product),
];

fn suite_name(s: Suite) -> Option<&'static str> {
    match s {
        Suite::Hermite => Some("hermite"),
        Suite::Closedform => Some("closedform"),
        Suite::Smoothing => Some("smoothing"),
        Suite::Marginals => Some("marginals"),
        Suite::Squeeze => Some("squeeze"),
        Suite::All => None,
    }
}

/// Run the checks of one suite (or all of them).
pub fn checks(suite: Suite, params: &ModelParams) -> Vec<CheckResult> {
    let want = suite_name(suite);
    CHECKS
        .iter()
        .filter(|(s, _, _)| want.is_none_or(|w| w == *s))
        .map(|&(s, name, f)| match f(params) {
            Ok((dev, tol)) => CheckResult {
                suite: s,
                name,
                passed: dev <= tol,
                detail: format!("deviation {dev:.3e} (tolerance {tol:.0e})"),
            },
            Err(e) => CheckResult {
                suite: s,
                name,
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect()
}

/// Print a pass/fail table and return the number of failures.
pub fn run_suite(suite: Suite, params: &ModelParams, out: &mut dyn Write) -> std::result::Result<usize, CliError> {
    let results = checks(suite, params);
    let io = |e: std::io::Error| CliError::Usage(format!("cannot write output: {e}"));
    for r in &results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{:<11} {:<46} {tag}  {}", r.suite, r.name, r.detail).map_err(io)?;
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    writeln!(out, "{} passed, {failed} failed", results.len() - failed).map_err(io)?;
    Ok(failed)
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn random_c(rng: &mut ChaCha8Rng, r: f64) -> C64 {
    // uniform in the disc of radius r
    let rad = r * rng.random_range(0.0f64..1.0).sqrt();
    C64::from_polar(rad, rng.random_range(0.0..2.0 * PI))
}

fn random_point(rng: &mut ChaCha8Rng, r: f64) -> PhasePoint {
    PhasePoint::new(random_c(rng, r), random_c(rng, r))
}

fn hermite_genfun(_: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (x, y) = (random_c(&mut rng, 1.5), random_c(&mut rng, 1.5));
        for m in 0..=8 {
            for n in 0..=8 {
                let a = hermite2(Hermite2Args::new(m, n, x, y))?;
                let b = hermite2_via_genfun(m, n, x, y, 1.0, 64)?;
                worst = worst.max((a - b).norm() / b.norm().max(1.0));
            }
        }
    }
    Ok((worst, 1e-8))
}

fn hermite_symmetry(_: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut mismatches = 0.0;
    for _ in 0..50 {
        let (x, y) = (random_c(&mut rng, 2.0), random_c(&mut rng, 2.0));
        for m in 0..12 {
            for n in 0..12 {
                if hermite2(Hermite2Args::new(m, n, x, y))? != hermite2(Hermite2Args::new(n, m, y, x))? {
                    mismatches += 1.0;
                }
            }
        }
    }
    Ok((mismatches, 0.0))
}

fn hermite_recurrence(_: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (x, y) = (random_c(&mut rng, 1.5), random_c(&mut rng, 1.5));
        for m in 0..10 {
            for n in 1..10 {
                let h = |a, b| hermite2(Hermite2Args::new(a, b, x, y));
                let lhs = h(m + 1, n)?;
                let rhs = x * h(m, n)? - h(m, n - 1)? * n as f64;
                worst = worst.max((lhs - rhs).norm() / (1.0 + lhs.norm()));
            }
        }
    }
    Ok((worst, 1e-10))
}

fn landau_vs_fock(params: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for kappa in [0.5, 1.0, 2.0] {
        for _ in 0..25 {
            let pt = random_point(&mut rng, 2.0);
            let s = squeezed_coherent_state(&pt, kappa, params)?;
            for n in 0..=4 {
                for m in 0..=4 {
                    let fock = s.get(n, m).norm_sqr();
                    let closed = husimi_landau(n, m, &pt, kappa)?.value();
                    worst = worst.max((closed - fock).abs() / fock.max(1e-300));
                }
            }
        }
    }
    Ok((worst, 1e-6))
}

fn kernel_vs_fock(params: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for kappa in [0.5, 1.0, 2.0] {
        for _ in 0..25 {
            let (a, b) = (random_point(&mut rng, 1.0), random_point(&mut rng, 1.0));
            let fock = overlap(&squeezed_coherent_state(&a, kappa, params)?, &squeezed_coherent_state(&b, kappa, params)?)?;
            worst = worst.max((overlap_kernel(&a, &b, kappa)? - fock).norm());
        }
    }
    Ok((worst, 1e-8))
}

fn kernel_sqr(_: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for kappa in [0.5, 1.0, 2.0] {
        for _ in 0..25 {
            let (a, b) = (random_point(&mut rng, 2.0), random_point(&mut rng, 2.0));
            let gauss = (-0.5 * kappa * (b.epsilon - a.epsilon).norm_sqr()
                - (b.gamma - a.gamma).norm_sqr() / (2.0 * kappa))
                .exp();
            worst = worst
                .max((overlap_kernel(&a, &b, kappa)?.norm_sqr() - gauss).abs())
                .max((overlap_kernel_sqr(&a, &b, kappa)? - gauss).abs());
        }
    }
    Ok((worst, 1e-12))
}

fn coherent_vs_glauber(params: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for kappa in [0.5, 1.0, 2.0] {
        for _ in 0..5 {
            let pt = random_point(&mut rng, 1.0);
            let (z1, z2) = (random_c(&mut rng, 1.0), random_c(&mut rng, 1.0));
            let g = glauber_state(z1, z2, params.cutoff_pi, params.cutoff_k)?;
            let fock = overlap(&g, &squeezed_coherent_state(&pt, kappa, params)?)?;
            worst = worst.max((coherent_overlap(z1, z2, &pt, kappa)? - fock).norm());
        }
    }
    Ok((worst, 1e-10))
}

fn wigner_sign(params: &ModelParams) -> Result<(f64, f64)> {
    let psi = landau_state(1, 0, params)?;
    let origin = PhasePoint::origin();
    let w = wigner_general(&psi, &origin)?.value();
    let h = husimi_general(&psi, &origin, params.kappa)?.value();
    let dev = (w + 1.0 / (PI * PI)).abs() + (-h).max(0.0);
    Ok((dev, 1e-8))
}

fn smoothing_vacuum(params: &ModelParams) -> Result<(f64, f64)> {
    let psi = landau_state(0, 0, params)?;
    let v = husimi_by_convolution(&psi, &PhasePoint::origin(), 1.0, &QuadSpec::new(4.0, 41)?)?.value();
    Ok(((v - 1.0).abs(), 1e-3))
}

fn smoothing_landau(params: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for (n, m) in [(1, 0), (1, 1)] {
        let psi = landau_state(n, m, params)?;
        for kappa in [1.0, 2.0] {
            for _ in 0..2 {
                let pt = random_point(&mut rng, 1.0);
                let q = QuadSpec::new(QuadSpec::default_for(&pt, kappa).half_width, 25)?;
                let a = husimi_by_convolution(&psi, &pt, kappa, &q)?.value();
                worst = worst.max((a - husimi_landau(n, m, &pt, kappa)?.value()).abs());
            }
        }
    }
    Ok((worst, 1e-3))
}

fn normalizations(params: &ModelParams) -> Result<(f64, f64)> {
    let vac = landau_state(0, 0, params)?;
    let states = [vac.clone(), landau_state(1, 0, params)?, squeeze_state(&vac, 2.0, params)?];
    let mut worst = 0.0f64;
    for psi in &states {
        let q = QuadSpec::new(QuadSpec::normalization_default(1.0).half_width, 21)?;
        worst = worst.max((husimi_normalization(psi, 1.0, &q)? - 1.0).abs());
        worst = worst.max((wigner_normalization(psi, &QuadSpec::new(6.0, 21)?)? - 1.0).abs());
    }
    Ok((worst, 1e-2))
}

fn marginal_side(params: &ModelParams, gamma_side: bool) -> Result<(f64, f64)> {
    let mut worst = 0.0f64;
    for (n, m) in [(0, 0), (1, 0)] {
        let psi = landau_state(n, m, params)?;
        for kappa in [1.0, 2.0] {
            for z in [C64::new(0.0, 0.0), C64::new(0.5, -0.3)] {
                let q = QuadSpec::marginal_default(kappa, z);
                let (a, b) = if gamma_side {
                    (husimi_marginal_gamma(&psi, z, kappa, &q)?, broadened_position_density(&psi, z, kappa, &q)?)
                } else {
                    (husimi_marginal_epsilon(&psi, z, kappa, &q)?, broadened_momentum_density(&psi, z, kappa, &q)?)
                };
                worst = worst.max((a - b).abs());
            }
        }
    }
    Ok((worst, 1e-2))
}

fn marginal_gamma(params: &ModelParams) -> Result<(f64, f64)> {
    marginal_side(params, true)
}

fn marginal_epsilon(params: &ModelParams) -> Result<(f64, f64)> {
    marginal_side(params, false)
}

fn squeeze_ladders(params: &ModelParams) -> Result<(f64, f64)> {
    let ops = OperatorRep::new(params)?;
    let low = 6usize;
    let cutoff = params.cutoff_k;
    let mut worst = 0.0f64;
    for mu in [1.25, 0.8] {
        let f = f64::ln(mu);
        let (ch, sh) = (C64::new(f.cosh(), 0.0), C64::new(f.sinh(), 0.0));
        let i = C64::i();
        let s = squeeze_matrix(mu, params)?;
        let s_inv = squeeze_matrix(1.0 / mu, params)?;
        let cases = [
            (&ops.k_minus, SparseMatrix::lincomb(&[(ch, &ops.k_minus), (i * sh, &ops.pi_plus)])),
            (&ops.pi_minus, SparseMatrix::lincomb(&[(ch, &ops.pi_minus), (i * sh, &ops.k_plus)])),
            (&ops.k_plus, SparseMatrix::lincomb(&[(ch, &ops.k_plus), (-i * sh, &ops.pi_minus)])),
            (&ops.pi_plus, SparseMatrix::lincomb(&[(ch, &ops.pi_plus), (-i * sh, &ops.k_minus)])),
            (&ops.x, ops.x.scale(C64::new(1.0 / mu, 0.0))),
            (&ops.p_x, ops.p_x.scale(C64::new(mu, 0.0))),
        ];
        for (a, want) in &cases {
            let d = s_inv.matmul(a).matmul(&s).sub(want);
            for (_, col, v) in d.triplets() {
                if col / cutoff < low && col % cutoff < low {
                    worst = worst.max(v.norm());
                }
            }
        }
    }
    Ok((worst, 1e-8))
}

fn squeeze_relabel(params: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for kappa in [0.5, 1.0, 2.0] {
        for mu in [1.3, 0.8] {
            let pt = random_point(&mut rng, 0.8);
            let moved = squeeze_state(&squeezed_coherent_state(&pt, kappa, params)?, mu, params)?;
            let target = squeezed_coherent_state(&PhasePoint::new(pt.gamma * mu, pt.epsilon / mu), kappa * mu * mu, params)?;
            worst = worst.max((overlap(&target, &moved)?.norm() - 1.0).abs());
        }
    }
    Ok((worst, 1e-6))
}

fn squeeze_vacuum(params: &ModelParams) -> Result<(f64, f64)> {
    let mut rng = rng();
    let vac = landau_state(0, 0, params)?;
    let mut worst = 0.0f64;
    for (kappa, mu) in [(0.5, 1.5), (1.0, 2.0), (2.0, 0.6)] {
        let state = squeeze_state(&vac, 1.0 / mu, params)?;
        for _ in 0..5 {
            let pt = random_point(&mut rng, 1.5);
            let a = husimi_squeezed_vacuum(&pt, kappa, mu)?.value();
            worst = worst.max((a - husimi_general(&state, &pt, kappa)?.value()).abs());
        }
    }
    Ok((worst, 1e-6))
}

fn squeeze_lambda(params: &ModelParams) -> Result<(f64, f64)> {
    let small = ModelParams::new(params.m_omega, params.kappa, 3, 3)?;
    let mu = 2.0;
    let (l, pts) = lambda_quadrature_default(mu);
    let via = squeeze_matrix_via_lambda(mu, &small, l, pts)?;
    let exact = squeeze_matrix(mu, &small)?;
    let mut worst = 0.0f64;
    for r in 0..9 {
        for c in 0..9 {
            worst = worst.max((via[r * 9 + c] - exact.get(r, c)).norm());
        }
    }
    Ok((worst, 1e-2))
}

fn uncertainty_product(params: &ModelParams) -> Result<(f64, f64)> {
    let mut worst = 0.0f64;
    for m_omega in [0.5, 1.0, 2.0] {
        for kappa in [0.25, 1.0, 4.0] {
            let p = ModelParams::new(m_omega, kappa, params.cutoff_pi, params.cutoff_k)?;
            let psi = squeezed_coherent_state(&PhasePoint::origin(), kappa, &p)?;
            let v = variance_xy(&psi, &OperatorRep::new(&p)?)?;
            worst = worst
                .max((v.product - 0.5).abs())
                .max((v.var_x - 1.0 / (m_omega * kappa)).abs())
                .max((v.var_px - kappa * m_omega / 4.0).abs());
        }
    }
    Ok((worst, 1e-8))
}
