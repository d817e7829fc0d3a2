use crate::C64;

/// A point `(γ, ε)` of the four-real-dimensional phase space.
///
/// The auxiliary pair is `χ = (γ + ε)/2`, `σ = conj((γ − ε)/(2i))`, so that
/// `γ = χ + i σ*` and `ε = χ − i σ*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub gamma: C64,
    pub epsilon: C64,
}

impl PhasePoint {
    pub fn new(gamma: C64, epsilon: C64) -> Self {
        Self { gamma, epsilon }
    }

    pub fn origin() -> Self {
        Self::new(C64::new(0.0, 0.0), C64::new(0.0, 0.0))
    }

    /// From the four real coordinates `(γ₁, γ₂, ε₁, ε₂)`.
    pub fn from_reals(g1: f64, g2: f64, e1: f64, e2: f64) -> Self {
        Self::new(C64::new(g1, g2), C64::new(e1, e2))
    }

    pub fn from_chi_sigma(chi: C64, sigma: C64) -> Self {
        let i_sigma_conj = C64::i() * sigma.conj();
        Self::new(chi + i_sigma_conj, chi - i_sigma_conj)
    }

    pub fn chi(&self) -> C64 {
        (self.gamma + self.epsilon) * 0.5
    }

    pub fn sigma(&self) -> C64 {
        ((self.gamma - self.epsilon) / C64::new(0.0, 2.0)).conj()
    }

    /// Phase-space point labelled by position `q = (q₁, q₂)` and kinetic
    /// momentum `k = (k₁, k₂)`:
    /// `χ = √(MΩ/2)(q₁+iq₂) + i(k₁+ik₂)/√(2MΩ)`, `σ = (k₁−ik₂)/√(2MΩ)`.
    pub fn from_physical(q: (f64, f64), k: (f64, f64), m_omega: f64) -> Self {
        let a = (m_omega / 2.0).sqrt();
        let b = 1.0 / (2.0 * m_omega).sqrt();
        let chi = C64::new(q.0, q.1) * a + C64::i() * C64::new(k.0, k.1) * b;
        let sigma = C64::new(k.0, -k.1) * b;
        Self::from_chi_sigma(chi, sigma)
    }

    /// Inverse of [`PhasePoint::from_physical`].
    pub fn to_physical(&self, m_omega: f64) -> ((f64, f64), (f64, f64)) {
        let a = (m_omega / 2.0).sqrt();
        let b = 1.0 / (2.0 * m_omega).sqrt();
        let sigma = self.sigma();
        let k = (sigma.re / b, -sigma.im / b);
        let q_part = self.chi() - C64::i() * C64::new(k.0, k.1) * b;
        ((q_part.re / a, q_part.im / a), k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_sigma_round_trip() {
        let p = PhasePoint::from_reals(0.3, -1.2, 0.7, 0.25);
        let q = PhasePoint::from_chi_sigma(p.chi(), p.sigma());
        assert!((p.gamma - q.gamma).norm() < 1e-15);
        assert!((p.epsilon - q.epsilon).norm() < 1e-15);
    }

    #[test]
    fn epsilon_is_scaled_position() {
        // ε = √(MΩ/2)(q₁ + i q₂), independent of k
        let p = PhasePoint::from_physical((1.0, -2.0), (0.4, 0.9), 2.0);
        assert!((p.epsilon - C64::new(1.0, -2.0)).norm() < 1e-14);
        let (q, k) = p.to_physical(2.0);
        assert!((q.0 - 1.0).abs() < 1e-14 && (q.1 + 2.0).abs() < 1e-14);
        assert!((k.0 - 0.4).abs() < 1e-14 && (k.1 - 0.9).abs() < 1e-14);
    }
}
