//! One-sided integrals of the Husimi function and the Gaussian-broadened
//! wavefunction densities they equal:
//!
//! ```text
//! (1/π)∫d²γ H(γ, ε) = (4κ/π) ∫d²λ e^{−κ|ε − λ*|²} |⟨λ|ψ⟩|²
//! (1/π)∫d²ε H(γ, ε) = (4/(κπ)) ∫d²ζ e^{−|γ* + ζ|²/κ} |⟨ζ|ψ⟩|²
//! ```
//!
//! Both sides are evaluated by two-dimensional trapezoid quadrature on
//! origin-centered squares.

use std::f64::consts::PI;

use crate::closedform::HusimiEvaluator;
use crate::error::{Error, Result};
use crate::fock::{i_pow, inv_sqrt_factorials, FockAmplitudes, ModelParams, PhasePoint};
use crate::hermite2::Hermite2Table;
use crate::quad::{self, Axis};
use crate::smoothing::QuadSpec;
use crate::C64;

impl QuadSpec {
    /// Square for the marginal integrals: `L = 7√((1+κ) max(1, 1/κ)) + |fixed|`, 81 points.
    pub fn marginal_default(kappa: f64, fixed: C64) -> Self {
        Self {
            half_width: 7.0 * ((1.0 + kappa) * (1.0f64).max(1.0 / kappa)).sqrt() + fixed.norm(),
            points_per_axis: 81,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Position,
    Momentum,
}

/// `⟨λ|ψ⟩` or `⟨ζ|ψ⟩` over the support of a fixed state.
#[derive(Debug, Clone)]
pub struct WavefunctionEvaluator {
    side: Side,
    support: Vec<(usize, usize, C64)>,
    rows: usize,
    cols: usize,
    isf: Vec<f64>,
    table: Hermite2Table,
}

impl WavefunctionEvaluator {
    fn new(psi: &FockAmplitudes, side: Side) -> Self {
        let (rows, cols) = psi.support_extent();
        Self {
            side,
            support: psi.support(),
            rows,
            cols,
            isf: inv_sqrt_factorials(rows.max(cols)),
            table: Hermite2Table::default(),
        }
    }

    pub fn position(psi: &FockAmplitudes) -> Self {
        Self::new(psi, Side::Position)
    }

    pub fn momentum(psi: &FockAmplitudes) -> Self {
        Self::new(psi, Side::Momentum)
    }

    pub fn eval(&mut self, z: C64) -> C64 {
        if self.support.is_empty() {
            return C64::new(0.0, 0.0);
        }
        // ⟨n,m|λ⟩ = e^{−|λ|²/2} (−i)ⁿ H_{m,n}(λ*, λ)/√(n!m!)
        // ⟨n,m|ζ⟩ = e^{−|ζ|²/2} iⁿ H_{m,n}(−ζ*, −ζ)/√(n!m!)
        let (x, y) = match self.side {
            Side::Position => (z.conj(), z),
            Side::Momentum => (-z.conj(), -z),
        };
        self.table.fill(self.cols - 1, self.rows - 1, x, y);
        let damp = (-0.5 * z.norm_sqr()).exp();
        let mut acc = C64::new(0.0, 0.0);
        for &(n, m, c) in &self.support {
            let phase = match self.side {
                Side::Position => i_pow(n).conj(),
                Side::Momentum => i_pow(n),
            };
            let coef = phase * self.table.get(m, n) * (damp * self.isf[n] * self.isf[m]);
            acc += coef.conj() * c;
        }
        acc
    }
}

fn check_shape(psi: &FockAmplitudes, params: &ModelParams) -> Result<()> {
    if psi.cutoff_pi() != params.cutoff_pi || psi.cutoff_k() != params.cutoff_k {
        return Err(Error::Shape(psi.cutoff_pi(), psi.cutoff_k(), params.cutoff_pi, params.cutoff_k));
    }
    Ok(())
}

/// Position-representation amplitude `⟨λ|ψ⟩`.
pub fn wavefunction_position(psi: &FockAmplitudes, lambda: C64, params: &ModelParams) -> Result<C64> {
    check_shape(psi, params)?;
    Ok(WavefunctionEvaluator::position(psi).eval(lambda))
}

/// Momentum-representation amplitude `⟨ζ|ψ⟩`.
pub fn wavefunction_momentum(psi: &FockAmplitudes, zeta: C64, params: &ModelParams) -> Result<C64> {
    check_shape(psi, params)?;
    Ok(WavefunctionEvaluator::momentum(psi).eval(zeta))
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa.is_finite() && kappa > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("kappa must be positive, got {kappa}")))
    }
}

fn integrate2(ax: &Axis, ay: &Axis, mut f: impl FnMut(C64) -> f64) -> f64 {
    let mut total = 0.0;
    for (x, wx) in ax.nodes.iter().zip(&ax.weights) {
        let mut row = 0.0;
        for (y, wy) in ay.nodes.iter().zip(&ay.weights) {
            row += wy * f(C64::new(*x, *y));
        }
        total += wx * row;
    }
    total
}

/// `(1/π) ∫d²γ H(γ, ε)`.
pub fn husimi_marginal_gamma(psi: &FockAmplitudes, epsilon: C64, kappa: f64, quad: &QuadSpec) -> Result<f64> {
    check_kappa(kappa)?;
    let mut h = HusimiEvaluator::new(psi)?;
    let (ax, ay) = quad::square((0.0, 0.0), quad.half_width, quad.points_per_axis)?;
    Ok(integrate2(&ax, &ay, |g| h.eval(&PhasePoint::new(g, epsilon), kappa)) / PI)
}

/// `(1/π) ∫d²ε H(γ, ε)`.
pub fn husimi_marginal_epsilon(psi: &FockAmplitudes, gamma: C64, kappa: f64, quad: &QuadSpec) -> Result<f64> {
    check_kappa(kappa)?;
    let mut h = HusimiEvaluator::new(psi)?;
    let (ax, ay) = quad::square((0.0, 0.0), quad.half_width, quad.points_per_axis)?;
    Ok(integrate2(&ax, &ay, |e| h.eval(&PhasePoint::new(gamma, e), kappa)) / PI)
}

/// `(4κ/π) ∫d²λ e^{−κ|ε − λ*|²} |⟨λ|ψ⟩|²`.
pub fn broadened_position_density(psi: &FockAmplitudes, epsilon: C64, kappa: f64, quad: &QuadSpec) -> Result<f64> {
    check_kappa(kappa)?;
    if !psi.is_normalized() {
        return Err(Error::Domain("state must be normalized".into()));
    }
    let mut wf = WavefunctionEvaluator::position(psi);
    let (ax, ay) = quad::square((0.0, 0.0), quad.half_width, quad.points_per_axis)?;
    let v = integrate2(&ax, &ay, |lam| (-kappa * (epsilon - lam.conj()).norm_sqr()).exp() * wf.eval(lam).norm_sqr());
    Ok(4.0 * kappa / PI * v)
}

/// `(4/(κπ)) ∫d²ζ e^{−|γ* + ζ|²/κ} |⟨ζ|ψ⟩|²`.
pub fn broadened_momentum_density(psi: &FockAmplitudes, gamma: C64, kappa: f64, quad: &QuadSpec) -> Result<f64> {
    check_kappa(kappa)?;
    if !psi.is_normalized() {
        return Err(Error::Domain("state must be normalized".into()));
    }
    let mut wf = WavefunctionEvaluator::momentum(psi);
    let (ax, ay) = quad::square((0.0, 0.0), quad.half_width, quad.points_per_axis)?;
    let v = integrate2(&ax, &ay, |z| (-(gamma.conj() + z).norm_sqr() / kappa).exp() * wf.eval(z).norm_sqr());
    Ok(4.0 / (kappa * PI) * v)
}

/// `(x, y) = √(2/MΩ)(λ₁, −λ₂)`.
pub fn lambda_to_position(lambda: C64, m_omega: f64) -> Result<(f64, f64)> {
    if !(m_omega.is_finite() && m_omega > 0.0) {
        return Err(Error::Domain(format!("m_omega must be positive, got {m_omega}")));
    }
    let s = (2.0 / m_omega).sqrt();
    Ok((s * lambda.re, -s * lambda.im))
}

/// `(p_x, p_y) = √(MΩ/2)(ζ₂, ζ₁)`.
pub fn zeta_to_momentum(zeta: C64, m_omega: f64) -> Result<(f64, f64)> {
    if !(m_omega.is_finite() && m_omega > 0.0) {
        return Err(Error::Domain(format!("m_omega must be positive, got {m_omega}")));
    }
    let s = (m_omega / 2.0).sqrt();
    Ok((s * zeta.im, s * zeta.re))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::landau_state;

    #[test]
    fn coordinate_maps() {
        assert_eq!(lambda_to_position(C64::new(1.0, 2.0), 2.0).unwrap(), (1.0, -2.0));
        assert_eq!(zeta_to_momentum(C64::new(3.0, 4.0), 2.0).unwrap(), (4.0, 3.0));
        assert_eq!(lambda_to_position(C64::new(0.0, 0.0), 1.0).unwrap(), (0.0, -0.0));
    }

    #[test]
    fn vacuum_wavefunctions() {
        let p = ModelParams::with_cutoff(3);
        let vac = landau_state(0, 0, &p).unwrap();
        let lam = C64::new(0.6, -0.9);
        let a = wavefunction_position(&vac, lam, &p).unwrap();
        assert!((a - C64::new((-0.5 * lam.norm_sqr()).exp(), 0.0)).norm() < 1e-15);
        let b = wavefunction_momentum(&vac, lam, &p).unwrap();
        assert!((b - C64::new((-0.5 * lam.norm_sqr()).exp(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn vacuum_gamma_marginal_is_two() {
        let vac = landau_state(0, 0, &ModelParams::with_cutoff(2)).unwrap();
        let q = QuadSpec::marginal_default(1.0, C64::new(0.0, 0.0));
        let z = C64::new(0.0, 0.0);
        let d = husimi_marginal_gamma(&vac, z, 1.0, &q).unwrap();
        let b = broadened_position_density(&vac, z, 1.0, &q).unwrap();
        assert!((d - 2.0).abs() < 1e-8 && (b - 2.0).abs() < 1e-8, "{d} {b}");
    }
}
