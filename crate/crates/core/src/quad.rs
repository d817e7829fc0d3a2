//! Tensor-product trapezoid rules on centered intervals.

use crate::error::{Error, Result};

/// Nodes and weights of a one-dimensional trapezoid rule.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Axis {
    /// `points` equally spaced nodes on `[center − half_width, center + half_width]`.
    pub fn trapezoid(center: f64, half_width: f64, points: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::Config(format!("half width must be positive, got {half_width}")));
        }
        if points < 2 {
            return Err(Error::Config("a trapezoid rule needs at least 2 points".into()));
        }
        let h = 2.0 * half_width / (points - 1) as f64;
        let nodes = (0..points).map(|k| center - half_width + k as f64 * h).collect();
        let mut weights = vec![h; points];
        weights[0] *= 0.5;
        weights[points - 1] *= 0.5;
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn step(&self) -> f64 {
        self.nodes[1] - self.nodes[0]
    }

    /// `Σ wᵢ f(xᵢ)`.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(*x)).sum()
    }
}

/// Trapezoid rule over a square `[−L, L]²` shifted to `center`, as two axes.
pub fn square(center: (f64, f64), half_width: f64, points: usize) -> Result<(Axis, Axis)> {
    Ok((
        Axis::trapezoid(center.0, half_width, points)?,
        Axis::trapezoid(center.1, half_width, points)?,
    ))
}
