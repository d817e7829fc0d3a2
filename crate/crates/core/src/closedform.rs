//! Closed-form Husimi and Wigner values and overlap kernels.
//!
//! Phase points are always ordered `(γ, ε)`. Husimi values are
//! `|⟨γ, ε|ψ⟩_κ|²`; Wigner values are the two-mode displaced-parity
//! expectation `π⁻² ⟨ψ|D_Π(2σ)(−1)^{N_Π} ⊗ D_K(2χ)(−1)^{N_K}|ψ⟩`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fock::{displaced_parity_block, inv_sqrt_factorials, FockAmplitudes, PhasePoint, SqueezedCoherentKernel};
use crate::hermite2::{Hermite2Args, Hermite2Config};
use crate::math::ln_factorial;
use crate::C64;

/// Largest imaginary part tolerated before a Wigner value is reported as real.
pub const WIGNER_IMAG_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HusimiValue(f64);

impl HusimiValue {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::Numeric(format!("Husimi value must be finite and nonnegative, got {value}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct WignerValue(f64);

impl WignerValue {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::Numeric(format!("Wigner value must be finite, got {value}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn require_normalized(psi: &FockAmplitudes) -> Result<()> {
    if psi.is_normalized() {
        Ok(())
    } else {
        Err(Error::Domain("state must be normalized".into()))
    }
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa.is_finite() && kappa > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("kappa must be positive, got {kappa}")))
    }
}

/// Reusable Husimi evaluator over the support of a fixed state.
#[derive(Debug, Clone)]
pub struct HusimiEvaluator {
    support: Vec<(usize, usize, C64)>,
    rows: usize,
    cols: usize,
    isf: Vec<f64>,
    scratch: Vec<C64>,
    block: Vec<C64>,
}

impl HusimiEvaluator {
    pub fn new(psi: &FockAmplitudes) -> Result<Self> {
        require_normalized(psi)?;
        let (rows, cols) = psi.support_extent();
        Ok(Self {
            support: psi.support(),
            rows,
            cols,
            isf: inv_sqrt_factorials(rows.max(cols)),
            scratch: Vec::new(),
            block: Vec::new(),
        })
    }

    /// `|⟨γ, ε|ψ⟩_κ|²`.
    pub fn eval(&mut self, point: &PhasePoint, kappa: f64) -> f64 {
        let k = SqueezedCoherentKernel::new_unchecked(point, kappa);
        k.fill_block(self.rows, self.cols, &self.isf, &mut self.scratch, &mut self.block);
        let mut acc = C64::new(0.0, 0.0);
        for &(n, m, c) in &self.support {
            acc += self.block[n * self.cols + m].conj() * c;
        }
        acc.norm_sqr()
    }
}

/// `|⟨γ, ε|ψ⟩_κ|²` for a normalized state.
pub fn husimi_general(psi: &FockAmplitudes, point: &PhasePoint, kappa: f64) -> Result<HusimiValue> {
    check_kappa(kappa)?;
    SqueezedCoherentKernel::new(point, kappa)?;
    HusimiValue::new(HusimiEvaluator::new(psi)?.eval(point, kappa))
}

/// `4κ/(1+κ)² · exp{−(κ|ε|² + |γ|²)/(1+κ)}`.
pub fn husimi_vacuum(point: &PhasePoint, kappa: f64) -> Result<HusimiValue> {
    check_kappa(kappa)?;
    let d = 1.0 + kappa;
    let v = 4.0 * kappa / (d * d) * (-(kappa * point.epsilon.norm_sqr() + point.gamma.norm_sqr()) / d).exp();
    HusimiValue::new(v)
}

/// Husimi value of `|n, m⟩`:
///
/// ```text
/// husimi_vacuum · |τ|^{n+m} / (n! m!) · |H_{m,n}(−(κε+γ)/s, −(κε*−γ*)/s)|²
/// τ = (1−κ)/(1+κ),  s = −i(1+κ)√τ
/// ```
///
/// Inside the `κ ≈ 1` window the factor is `|u|^{2m} |v|^{2n} / (n! m!)`
/// with `u = (κε+γ)/(1+κ)`, `v = (κε*−γ*)/(1+κ)`.
pub fn husimi_landau(n: usize, m: usize, point: &PhasePoint, kappa: f64) -> Result<HusimiValue> {
    let base = husimi_vacuum(point, kappa)?.value();
    if n == 0 && m == 0 {
        return HusimiValue::new(base);
    }
    let (g, e) = (point.gamma, point.epsilon);
    let d = 1.0 + kappa;
    let a = e * kappa + g;
    let b = e.conj() * kappa - g.conj();
    let ln_fact = ln_factorial(n) + ln_factorial(m);
    let factor = if (kappa - 1.0).abs() < 1e-6 {
        let ln_mag = m as f64 * (a.norm() / d).ln() + n as f64 * (b.norm() / d).ln();
        if ln_mag == f64::NEG_INFINITY {
            0.0
        } else {
            (2.0 * ln_mag - ln_fact).exp()
        }
    } else {
        let tau = (1.0 - kappa) / d;
        let t = C64::new(tau, 0.0).sqrt();
        let s = C64::new(0.0, -d) * t;
        let cfg = Hermite2Config::with_max_total_degree((n + m).max(64) as u32);
        let h = cfg.eval(Hermite2Args::new(m as u32, n as u32, -a / s, -b / s))?;
        let scaled = h.norm() * (0.5 * ((n + m) as f64 * tau.abs().ln() - ln_fact)).exp();
        scaled * scaled
    };
    HusimiValue::new(base * factor)
}

/// Husimi value of the squeezed vacuum:
/// `4κμ²/(1+κμ²)² · exp{−κ|ε|²/(κμ²+1) − μ²|γ|²/(κμ²+1)}`.
pub fn husimi_squeezed_vacuum(point: &PhasePoint, kappa: f64, mu: f64) -> Result<HusimiValue> {
    check_kappa(kappa)?;
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::Domain(format!("mu must be positive, got {mu}")));
    }
    let km = kappa * mu * mu;
    let d = 1.0 + km;
    let v = 4.0 * km / (d * d) * (-(kappa * point.epsilon.norm_sqr() + mu * mu * point.gamma.norm_sqr()) / d).exp();
    HusimiValue::new(v)
}

/// `κ exp{−κ|λ − ε*|²}`; independent of `γ`.
pub fn husimi_lambda(lambda: C64, point: &PhasePoint, kappa: f64) -> Result<HusimiValue> {
    check_kappa(kappa)?;
    HusimiValue::new(kappa * (-kappa * (lambda - point.epsilon.conj()).norm_sqr()).exp())
}

/// `⟨λ|γ, ε⟩_κ = √κ exp{−κ(|ε|²+|λ|²)/2 + κ Re(λε) + i Im(λγ) + i κ/(1+κ) Im(εγ*)}`.
pub fn lambda_overlap(lambda: C64, point: &PhasePoint, kappa: f64) -> Result<C64> {
    check_kappa(kappa)?;
    let (g, e) = (point.gamma, point.epsilon);
    let re = -0.5 * kappa * (e.norm_sqr() + lambda.norm_sqr()) + kappa * (lambda * e).re;
    let im = (lambda * g).im + kappa / (1.0 + kappa) * (e * g.conj()).im;
    Ok(C64::new(re, im).exp() * kappa.sqrt())
}

/// `⟨a|b⟩` between squeezed coherent states of equal width:
///
/// ```text
/// exp{−(κ/4)|ε_b−ε_a|² − |γ_b−γ_a|²/(4κ)
///     + (γ_a*ε_b − ε_b*γ_a + γ_b ε_a* − ε_a γ_b*)/4
///     + (κ−1)/(4(1+κ)) (ε_a*γ_a − ε_a γ_a* + ε_b γ_b* − ε_b*γ_b)}
/// ```
pub fn overlap_kernel(a: &PhasePoint, b: &PhasePoint, kappa: f64) -> Result<C64> {
    check_kappa(kappa)?;
    let (ga, ea, gb, eb) = (a.gamma, a.epsilon, b.gamma, b.epsilon);
    let gauss = -0.25 * kappa * (eb - ea).norm_sqr() - (gb - ga).norm_sqr() / (4.0 * kappa);
    let p1 = (ga.conj() * eb - eb.conj() * ga + gb * ea.conj() - ea * gb.conj()) * 0.25;
    let p2 = (ea.conj() * ga - ea * ga.conj() + eb * gb.conj() - eb.conj() * gb) * ((kappa - 1.0) / (4.0 * (1.0 + kappa)));
    Ok((C64::new(gauss, 0.0) + p1 + p2).exp())
}

/// `|overlap_kernel|² = exp{−(κ/2)|ε_b−ε_a|² − |γ_b−γ_a|²/(2κ)}`.
pub fn overlap_kernel_sqr(a: &PhasePoint, b: &PhasePoint, kappa: f64) -> Result<f64> {
    check_kappa(kappa)?;
    Ok((-0.5 * kappa * (b.epsilon - a.epsilon).norm_sqr() - (b.gamma - a.gamma).norm_sqr() / (2.0 * kappa)).exp())
}

/// `⟨z₁, z₂|γ, ε⟩_κ` for the Glauber state with amplitude `z₁` on the Π mode
/// and `z₂` on the K mode:
/// `N e^{−(|z₁|²+|z₂|²)/2} exp{A z₁* + B z₂* + C z₁* z₂*}` with
/// `A = −i(κε*−γ*)/(1+κ)`, `B = (κε+γ)/(1+κ)`, `C = i(κ−1)/(1+κ)`.
pub fn coherent_overlap(z1: C64, z2: C64, point: &PhasePoint, kappa: f64) -> Result<C64> {
    check_kappa(kappa)?;
    let (g, e) = (point.gamma, point.epsilon);
    let d = 1.0 + kappa;
    let a = C64::new(0.0, -1.0) * (e.conj() * kappa - g.conj()) / d;
    let b = (e * kappa + g) / d;
    let c = C64::new(0.0, (kappa - 1.0) / d);
    let ln_n = (2.0 * kappa.sqrt() / d).ln() - (kappa * e.norm_sqr() + g.norm_sqr()) / (2.0 * d);
    let ex = C64::new(ln_n - 0.5 * (z1.norm_sqr() + z2.norm_sqr()), 0.0) + a * z1.conj() + b * z2.conj() + c * z1.conj() * z2.conj();
    Ok(ex.exp())
}

/// Tail mass that may be dropped from the Wigner contraction.
const WIGNER_TRIM_MASS: f64 = 1e-26;

/// Smallest block whose complement holds at most `WIGNER_TRIM_MASS`.
fn trimmed_extent(psi: &FockAmplitudes) -> (usize, usize) {
    let (rows, cols) = psi.support_extent();
    let mut row_mass = vec![0.0; rows];
    let mut col_mass = vec![0.0; cols];
    for (n, m, c) in psi.support() {
        row_mass[n] += c.norm_sqr();
        col_mass[m] += c.norm_sqr();
    }
    let cut = |mass: &[f64]| {
        let mut tail = 0.0;
        let mut len = mass.len();
        while len > 1 && tail + mass[len - 1] <= 0.5 * WIGNER_TRIM_MASS {
            tail += mass[len - 1];
            len -= 1;
        }
        len
    };
    (cut(&row_mass), cut(&col_mass))
}

/// Reusable Wigner evaluator over the support block of a fixed state.
#[derive(Debug, Clone)]
pub struct WignerEvaluator {
    coeffs: Vec<C64>,
    support: Vec<(usize, usize, C64)>,
    sparse: bool,
    rows: usize,
    cols: usize,
    lag: Vec<f64>,
    d_pi: Vec<C64>,
    d_k: Vec<C64>,
    tmp: Vec<C64>,
}

impl WignerEvaluator {
    pub fn new(psi: &FockAmplitudes) -> Result<Self> {
        require_normalized(psi)?;
        let (rows, cols) = trimmed_extent(psi);
        let mut coeffs = Vec::with_capacity(rows * cols);
        for n in 0..rows {
            for m in 0..cols {
                coeffs.push(psi.get(n, m));
            }
        }
        let support: Vec<_> = psi.support().into_iter().filter(|&(n, m, _)| n < rows && m < cols).collect();
        let s = support.len();
        // pair sum costs s² against r·c·(r + c) for the dense contraction
        let sparse = s * s < rows * cols * (rows + cols);
        Ok(Self {
            coeffs,
            support,
            sparse,
            rows,
            cols,
            lag: Vec::new(),
            d_pi: Vec::new(),
            d_k: Vec::new(),
            tmp: vec![C64::new(0.0, 0.0); rows * cols],
        })
    }

    /// Complex expectation before the reality check.
    pub fn eval_complex(&mut self, point: &PhasePoint) -> C64 {
        let (r, c) = (self.rows, self.cols);
        displaced_parity_block(point.sigma() * 2.0, r, r, &mut self.lag, &mut self.d_pi);
        displaced_parity_block(point.chi() * 2.0, c, c, &mut self.lag, &mut self.d_k);
        if self.sparse {
            let mut total = C64::new(0.0, 0.0);
            for &(n, m, a) in &self.support {
                let mut acc = C64::new(0.0, 0.0);
                for &(np, mp, b) in &self.support {
                    acc += self.d_pi[n * r + np] * self.d_k[m * c + mp] * b;
                }
                total += a.conj() * acc;
            }
            return total / (PI * PI);
        }
        // tmp[n'][m] = Σ_{m'} D_K[m][m'] c[n'][m']
        for np in 0..r {
            let row = &self.coeffs[np * c..(np + 1) * c];
            for m in 0..c {
                let dk = &self.d_k[m * c..(m + 1) * c];
                let mut acc = C64::new(0.0, 0.0);
                for (x, y) in dk.iter().zip(row) {
                    acc += x * y;
                }
                self.tmp[np * c + m] = acc;
            }
        }
        let mut total = C64::new(0.0, 0.0);
        for n in 0..r {
            let dp = &self.d_pi[n * r..(n + 1) * r];
            for m in 0..c {
                let mut acc = C64::new(0.0, 0.0);
                for (np, x) in dp.iter().enumerate() {
                    acc += x * self.tmp[np * c + m];
                }
                total += self.coeffs[n * c + m].conj() * acc;
            }
        }
        total / (PI * PI)
    }

    pub fn eval(&mut self, point: &PhasePoint) -> Result<f64> {
        let w = self.eval_complex(point);
        if w.im.abs() > WIGNER_IMAG_TOLERANCE {
            return Err(Error::Numeric(format!(
                "Wigner expectation has imaginary part {:.3e} at {point:?}",
                w.im
            )));
        }
        Ok(w.re)
    }
}

/// Complex displaced-parity expectation, for reality diagnostics.
pub fn wigner_expectation(psi: &FockAmplitudes, point: &PhasePoint) -> Result<C64> {
    Ok(WignerEvaluator::new(psi)?.eval_complex(point))
}

/// Wigner value of a normalized state at `(γ, ε)`.
pub fn wigner_general(psi: &FockAmplitudes, point: &PhasePoint) -> Result<WignerValue> {
    WignerValue::new(WignerEvaluator::new(psi)?.eval(point)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{landau_state, ModelParams};

    fn pt(g1: f64, g2: f64, e1: f64, e2: f64) -> PhasePoint {
        PhasePoint::from_reals(g1, g2, e1, e2)
    }

    #[test]
    fn vacuum_values() {
        assert_eq!(husimi_vacuum(&PhasePoint::origin(), 1.0).unwrap().value(), 1.0);
        assert!((husimi_vacuum(&PhasePoint::origin(), 2.0).unwrap().value() - 8.0 / 9.0).abs() < 1e-15);
        assert!((husimi_vacuum(&PhasePoint::origin(), 3.0).unwrap().value() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn landau_zero_is_vacuum_bitwise() {
        let p = pt(0.3, -1.1, 0.8, 0.2);
        for k in [0.5, 1.0, 2.0] {
            assert_eq!(husimi_landau(0, 0, &p, k).unwrap(), husimi_vacuum(&p, k).unwrap());
        }
    }

    #[test]
    fn landau_one_zero_at_origin_vanishes() {
        assert_eq!(husimi_landau(1, 0, &PhasePoint::origin(), 2.0).unwrap().value(), 0.0);
    }

    #[test]
    fn squeezed_vacuum_values() {
        assert!((husimi_squeezed_vacuum(&PhasePoint::origin(), 1.0, 2.0).unwrap().value() - 16.0 / 25.0).abs() < 1e-15);
        let p = pt(0.4, 0.1, -0.3, 0.9);
        let a = husimi_squeezed_vacuum(&p, 1.7, 1.0).unwrap().value();
        let b = husimi_vacuum(&p, 1.7).unwrap().value();
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn lambda_husimi_values() {
        let p = pt(5.0, 5.0, 0.3, -0.2);
        let lam = p.epsilon.conj();
        assert!((husimi_lambda(lam, &p, 1.5).unwrap().value() - 1.5).abs() < 1e-15);
        let v = husimi_lambda(lam + C64::new(0.0, 1.0), &p, 2.0).unwrap().value();
        assert!((v - 2.0 * (-2.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn kernel_identities() {
        let a = pt(0.2, 0.4, -0.5, 0.1);
        assert!((overlap_kernel(&a, &a, 1.3).unwrap() - C64::new(1.0, 0.0)).norm() < 1e-15);
        let b = pt(0.2, 0.4, 0.5, 0.1);
        let v = overlap_kernel(&a, &b, 1.0).unwrap().norm_sqr();
        assert!((v - (-0.5f64).exp()).abs() < 1e-14);
        let k = 2.0;
        let z = coherent_overlap(C64::new(0.0, 0.0), C64::new(0.0, 0.0), &PhasePoint::origin(), k).unwrap();
        assert!((z - C64::new(2.0 * k.sqrt() / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn wigner_vacuum_and_one_quantum() {
        let params = ModelParams::with_cutoff(4);
        let vac = landau_state(0, 0, &params).unwrap();
        let w0 = wigner_general(&vac, &PhasePoint::origin()).unwrap().value();
        assert!((w0 - 1.0 / (PI * PI)).abs() < 1e-15);
        let p = pt(0.3, -0.2, 0.5, 0.4);
        let w = wigner_general(&vac, &p).unwrap().value();
        let want = (-p.gamma.norm_sqr() - p.epsilon.norm_sqr()).exp() / (PI * PI);
        assert!((w - want).abs() < 1e-15);
        let one = landau_state(1, 0, &params).unwrap();
        let w1 = wigner_general(&one, &PhasePoint::origin()).unwrap().value();
        assert!((w1 + 1.0 / (PI * PI)).abs() < 1e-15);
    }

    #[test]
    fn unnormalized_state_rejected() {
        let v = FockAmplitudes::zeros(2, 2);
        assert!(matches!(husimi_general(&v, &PhasePoint::origin(), 1.0), Err(Error::Domain(_))));
        assert!(matches!(wigner_general(&v, &PhasePoint::origin()), Err(Error::Domain(_))));
    }
}
