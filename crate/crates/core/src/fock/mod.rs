//! Truncated two-mode Fock space over the `(Π, K)` ladder pair.
//!
//! Basis vectors `|n, m⟩` carry `n` kinetic quanta (`Π₊`) and `m`
//! guiding-center quanta (`K₊`). Amplitudes are stored row-major over
//! `(n, m)`, i.e. flat index `n * cutoff_k + m`.

mod displacement;
mod operators;
mod phase;
mod states;

pub use displacement::{displacement_element, displacement_matrix, displacement_matrix_expm};
pub use operators::{OperatorRep, SparseMatrix};
pub use phase::PhasePoint;
pub use states::{
    coherent_amplitudes, coherent_state, glauber_state, lambda_coefficient, lambda_state, landau_state,
    squeeze_route_phase, squeezed_coherent_state, squeezed_coefficient_via_operator, zeta_coefficient,
    zeta_state, SqueezedCoherentKernel,
};
pub(crate) use displacement::displaced_parity_block;
pub(crate) use states::{i_pow, inv_sqrt_factorials};

use crate::error::{Error, Result};
use crate::C64;

/// Tolerance on `Σ|c|² = 1` for amplitudes flagged as normalized.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Physical and truncation constants. Units have `ħ = c = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// `MΩ`, mass times cyclotron frequency (equal to `eB`).
    pub m_omega: f64,
    /// Gaussian spatial width `κ`.
    pub kappa: f64,
    pub cutoff_pi: usize,
    pub cutoff_k: usize,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            m_omega: 1.0,
            kappa: 1.0,
            cutoff_pi: 40,
            cutoff_k: 40,
        }
    }
}

impl ModelParams {
    pub fn new(m_omega: f64, kappa: f64, cutoff_pi: usize, cutoff_k: usize) -> Result<Self> {
        let p = Self {
            m_omega,
            kappa,
            cutoff_pi,
            cutoff_k,
        };
        p.validate()?;
        Ok(p)
    }

    /// Same cutoff on both modes, `MΩ = κ = 1`.
    pub fn with_cutoff(cutoff: usize) -> Self {
        Self {
            cutoff_pi: cutoff,
            cutoff_k: cutoff,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m_omega.is_finite() && self.m_omega > 0.0) {
            return Err(Error::Config(format!("m_omega must be positive, got {}", self.m_omega)));
        }
        if !(self.kappa.is_finite() && self.kappa > 0.0) {
            return Err(Error::Config(format!("kappa must be positive, got {}", self.kappa)));
        }
        if self.cutoff_pi < 1 || self.cutoff_k < 1 {
            return Err(Error::Config("cutoffs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.cutoff_pi * self.cutoff_k
    }
}

/// Complex amplitudes `c[n][m]` over the truncated two-mode basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FockAmplitudes {
    coeffs: Vec<C64>,
    cutoff_pi: usize,
    cutoff_k: usize,
    normalized: bool,
}

impl FockAmplitudes {
    pub fn zeros(cutoff_pi: usize, cutoff_k: usize) -> Self {
        Self {
            coeffs: vec![C64::new(0.0, 0.0); cutoff_pi * cutoff_k],
            cutoff_pi,
            cutoff_k,
            normalized: false,
        }
    }

    /// Wrap a row-major coefficient vector. With `normalized = true` the norm
    /// is checked against [`NORM_TOLERANCE`].
    pub fn from_vec(coeffs: Vec<C64>, cutoff_pi: usize, cutoff_k: usize, normalized: bool) -> Result<Self> {
        if coeffs.len() != cutoff_pi * cutoff_k {
            return Err(Error::Shape(coeffs.len(), 1, cutoff_pi, cutoff_k));
        }
        if coeffs.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::Domain("amplitudes must be finite".into()));
        }
        let out = Self {
            coeffs,
            cutoff_pi,
            cutoff_k,
            normalized,
        };
        if normalized {
            let n2 = out.norm_sqr();
            if (n2 - 1.0).abs() > NORM_TOLERANCE {
                return Err(Error::Domain(format!("amplitudes flagged normalized have Σ|c|² = {n2}")));
            }
        }
        Ok(out)
    }

    pub fn cutoff_pi(&self) -> usize {
        self.cutoff_pi
    }

    pub fn cutoff_k(&self) -> usize {
        self.cutoff_k
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    #[inline]
    pub fn index(&self, n: usize, m: usize) -> usize {
        n * self.cutoff_k + m
    }

    #[inline]
    pub fn get(&self, n: usize, m: usize) -> C64 {
        self.coeffs[self.index(n, m)]
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.coeffs
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Rescale to unit norm; returns the norm before rescaling.
    pub fn normalize(&mut self) -> Result<f64> {
        let norm = self.norm_sqr().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Domain(format!("cannot normalize a vector of norm {norm}")));
        }
        for c in &mut self.coeffs {
            *c /= norm;
        }
        self.normalized = true;
        Ok(norm)
    }

    /// Smallest `(pn, pm)` such that every nonzero amplitude has `n < pn`, `m < pm`.
    pub fn support_extent(&self) -> (usize, usize) {
        let mut pn = 0;
        let mut pm = 0;
        for n in 0..self.cutoff_pi {
            for m in 0..self.cutoff_k {
                if self.get(n, m) != C64::new(0.0, 0.0) {
                    pn = pn.max(n + 1);
                    pm = pm.max(m + 1);
                }
            }
        }
        (pn, pm)
    }

    /// Nonzero entries as `(n, m, c)` in index order.
    pub fn support(&self) -> Vec<(usize, usize, C64)> {
        let mut out = Vec::new();
        for n in 0..self.cutoff_pi {
            for m in 0..self.cutoff_k {
                let c = self.get(n, m);
                if c != C64::new(0.0, 0.0) {
                    out.push((n, m, c));
                }
            }
        }
        out
    }
}

/// `⟨a|b⟩ = Σ conj(a)·b` in flat index order.
pub fn overlap(a: &FockAmplitudes, b: &FockAmplitudes) -> Result<C64> {
    if a.cutoff_pi != b.cutoff_pi || a.cutoff_k != b.cutoff_k {
        return Err(Error::Shape(a.cutoff_pi, a.cutoff_k, b.cutoff_pi, b.cutoff_k));
    }
    let mut acc = C64::new(0.0, 0.0);
    for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
        acc += x.conj() * y;
    }
    Ok(acc)
}

/// Flat indices with `n < cutoff_pi - band` and `m < cutoff_k - band`.
pub fn interior_indices(cutoff_pi: usize, cutoff_k: usize, band: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for n in 0..cutoff_pi.saturating_sub(band) {
        for m in 0..cutoff_k.saturating_sub(band) {
            out.push(n * cutoff_k + m);
        }
    }
    out
}
