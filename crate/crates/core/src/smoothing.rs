//! Husimi values recovered by Gaussian smoothing of the Wigner function, and
//! phase-space normalization integrals.
//!
//! ```text
//! H(γ, ε) = 4 ∫d²γ' d²ε' W(γ', ε') exp{−κ|ε − ε'|² − |γ − γ'|²/κ}
//! ```
//!
//! All integrals use a tensor-product trapezoid rule over the four real
//! coordinates `(γ₁, γ₂, ε₁, ε₂)`. The outermost axis is spread over the
//! rayon pool and partial sums are added back in index order.

use std::f64::consts::PI;

use rayon::prelude::*;
use statrs::function::erf::erfc;

use crate::closedform::{HusimiEvaluator, HusimiValue, WignerEvaluator};
use crate::error::{Error, Result};
use crate::fock::{FockAmplitudes, PhasePoint};
use crate::quad::Axis;

/// Kernel mass allowed outside the quadrature box.
pub const TAIL_TOLERANCE: f64 = 1e-6;

/// Hypercube `[−L, L]⁴` around a center with `points_per_axis` nodes per axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSpec {
    pub half_width: f64,
    pub points_per_axis: usize,
}

impl QuadSpec {
    pub const DEFAULT_POINTS: usize = 41;

    pub fn new(half_width: f64, points_per_axis: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::Config(format!("half width must be positive, got {half_width}")));
        }
        if points_per_axis < 3 || points_per_axis.is_multiple_of(2) {
            return Err(Error::Config(format!(
                "points per axis must be odd and at least 3, got {points_per_axis}"
            )));
        }
        Ok(Self {
            half_width,
            points_per_axis,
        })
    }

    /// `L = 4/√min(κ, 1/κ) + max(|γ|, |ε|)` with the default point count.
    pub fn default_for(point: &PhasePoint, kappa: f64) -> Self {
        let l = 4.0 / kappa.min(1.0 / kappa).sqrt() + point.gamma.norm().max(point.epsilon.norm());
        Self {
            half_width: l,
            points_per_axis: Self::DEFAULT_POINTS,
        }
    }

    /// Origin-centered box for normalization integrals of states near the
    /// origin: `L = 6√((1+κ) max(1, 1/κ))`.
    pub fn normalization_default(kappa: f64) -> Self {
        Self {
            half_width: 6.0 * ((1.0 + kappa) * (1.0f64).max(1.0 / kappa)).sqrt(),
            points_per_axis: Self::DEFAULT_POINTS,
        }
    }

    pub fn axis(&self, center: f64) -> Result<Axis> {
        Axis::trapezoid(center, self.half_width, self.points_per_axis)
    }
}

/// Mass of the smoothing kernel outside `[−L, L]⁴`, bounded by the sum over axes.
pub fn kernel_tail(kappa: f64, half_width: f64) -> f64 {
    2.0 * erfc(half_width / kappa.sqrt()) + 2.0 * erfc(half_width * kappa.sqrt())
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa.is_finite() && kappa > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("kappa must be positive, got {kappa}")))
    }
}

/// `Σ_{a,b,c,d} w(a,b,c,d) f(γ₁ᵃ + iγ₂ᵇ, ε₁ᶜ + iε₂ᵈ)` with `f` built per
/// worker by `make`.
fn integrate4<E, M, F>(axes: [&Axis; 4], weights: [&[f64]; 4], make: M, eval: F) -> Result<f64>
where
    M: Fn() -> Result<E> + Sync,
    F: Fn(&mut E, &PhasePoint) -> Result<f64> + Sync,
{
    let [g1, g2, e1, e2] = axes;
    let [w1, w2, w3, w4] = weights;
    let partial: Vec<Result<f64>> = (0..g1.len())
        .into_par_iter()
        .map(|a| {
            let mut state = make()?;
            let mut acc = 0.0;
            for (&y2, &wb) in g2.nodes.iter().zip(w2) {
                let wab = w1[a] * wb;
                for (&x1, &wc) in e1.nodes.iter().zip(w3) {
                    let wabc = wab * wc;
                    let mut row = 0.0;
                    for (&x2, &wd) in e2.nodes.iter().zip(w4) {
                        let p = PhasePoint::from_reals(g1.nodes[a], y2, x1, x2);
                        row += wd * eval(&mut state, &p)?;
                    }
                    acc += wabc * row;
                }
            }
            Ok(acc)
        })
        .collect();
    let mut total = 0.0;
    for p in partial {
        total += p?;
    }
    Ok(total)
}

/// Husimi value at `point` from the Wigner function of `psi` by quadrature.
pub fn husimi_by_convolution(psi: &FockAmplitudes, point: &PhasePoint, kappa: f64, quad: &QuadSpec) -> Result<HusimiValue> {
    check_kappa(kappa)?;
    let tail = kernel_tail(kappa, quad.half_width);
    if tail > TAIL_TOLERANCE {
        return Err(Error::Domain(format!(
            "quadrature box of half width {} leaves {tail:.3e} of the smoothing kernel outside",
            quad.half_width
        )));
    }
    let proto = WignerEvaluator::new(psi)?;
    let g1 = quad.axis(point.gamma.re)?;
    let g2 = quad.axis(point.gamma.im)?;
    let e1 = quad.axis(point.epsilon.re)?;
    let e2 = quad.axis(point.epsilon.im)?;
    let kernel = |ax: &Axis, center: f64, a: f64| -> Vec<f64> {
        ax.nodes
            .iter()
            .zip(&ax.weights)
            .map(|(x, w)| w * (-a * (x - center) * (x - center)).exp())
            .collect()
    };
    let k1 = kernel(&g1, point.gamma.re, 1.0 / kappa);
    let k2 = kernel(&g2, point.gamma.im, 1.0 / kappa);
    let k3 = kernel(&e1, point.epsilon.re, kappa);
    let k4 = kernel(&e2, point.epsilon.im, kappa);
    let total = integrate4(
        [&g1, &g2, &e1, &e2],
        [&k1, &k2, &k3, &k4],
        || Ok(proto.clone()),
        |w, p| w.eval(p),
    )?;
    // rounding can leave a tiny negative value where the Husimi value is zero
    HusimiValue::new((4.0 * total).max(0.0))
}

/// `(1/4π²) ∫d²γ d²ε H(γ, ε)` over an origin-centered box.
pub fn husimi_normalization(psi: &FockAmplitudes, kappa: f64, quad: &QuadSpec) -> Result<f64> {
    check_kappa(kappa)?;
    let proto = HusimiEvaluator::new(psi)?;
    let ax = quad.axis(0.0)?;
    let w = ax.weights.clone();
    let total = integrate4([&ax, &ax, &ax, &ax], [&w, &w, &w, &w], || Ok(proto.clone()), |h, p| {
        Ok(h.eval(p, kappa))
    })?;
    Ok(total / (4.0 * PI * PI))
}

/// `∫d²γ d²ε W(γ, ε)` over an origin-centered box.
pub fn wigner_normalization(psi: &FockAmplitudes, quad: &QuadSpec) -> Result<f64> {
    let proto = WignerEvaluator::new(psi)?;
    let ax = quad.axis(0.0)?;
    let w = ax.weights.clone();
    integrate4([&ax, &ax, &ax, &ax], [&w, &w, &w, &w], || Ok(proto.clone()), |e, p| e.eval(p))
}
