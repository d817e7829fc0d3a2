//! Two-mode squeezing `S(μ) = exp[i ln μ (Π₊K₊ + Π₋K₋)]` and uncertainty products.
//!
//! In normal order, with `f = ln μ`,
//! `S(μ) = sech f · e^{iΠ₊K₊ tanh f} · (sech f)^{N_Π + N_K} · e^{iΠ₋K₋ tanh f}`.
//! It acts on position eigenstates as `S(μ)|λ⟩ = μ⁻¹|λ/μ⟩` and relates the
//! width-`κ` squeezed coherent states to plain coherent states through
//! `|γ, ε⟩_κ ∝ S(√κ)|coherent⟩`.

use crate::error::{Error, Result};
use crate::fock::{
    i_pow, lambda_coefficient, FockAmplitudes, ModelParams, OperatorRep, PhasePoint, SparseMatrix,
};
use crate::math::ln_factorial;
use crate::quad;
use crate::C64;

pub use crate::fock::squeezed_coefficient_via_operator;

/// Norm deficit tolerated by [`squeeze_state`].
pub const SQUEEZE_NORM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeParam {
    mu: f64,
}

impl SqueezeParam {
    pub fn new(mu: f64) -> Result<Self> {
        if mu.is_finite() && mu > 0.0 {
            Ok(Self { mu })
        } else {
            Err(Error::Domain(format!("mu must be positive, got {mu}")))
        }
    }

    /// `μ = e^r`; the width relation is `e^r = 1/√κ`.
    pub fn from_r(r: f64) -> Result<Self> {
        Self::new(r.exp())
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `f = ln μ`.
    pub fn f(&self) -> f64 {
        self.mu.ln()
    }

    pub fn inverse(&self) -> Self {
        Self { mu: 1.0 / self.mu }
    }
}

/// `S(μ)` restricted to the truncated space, applied in factorized form.
#[derive(Debug, Clone)]
pub struct SqueezeOperator {
    param: SqueezeParam,
    cutoff_pi: usize,
    cutoff_k: usize,
    /// `ln k!` for `k` up to the larger cutoff
    lf: Vec<f64>,
}

impl SqueezeOperator {
    pub fn new(param: SqueezeParam, params: &ModelParams) -> Result<Self> {
        params.validate()?;
        let len = params.cutoff_pi.max(params.cutoff_k) + 1;
        Ok(Self {
            param,
            cutoff_pi: params.cutoff_pi,
            cutoff_k: params.cutoff_k,
            lf: (0..len).map(ln_factorial).collect(),
        })
    }

    /// `P S(μ) P v` for a row-major vector over the cutoffs.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        let (np, nk) = (self.cutoff_pi, self.cutoff_k);
        assert_eq!(v.len(), np * nk);
        let f = self.param.f();
        let ith = C64::new(0.0, f.tanh());
        let sech = 1.0 / f.cosh();
        let lf = &self.lf;
        let ith_pow: Vec<C64> = (0..np.min(nk)).map(|k| ith.powu(k as u32) * (-lf[k]).exp()).collect();

        // e^{iΠ₋K₋ tanh f}, then the diagonal
        let mut w = vec![C64::new(0.0, 0.0); np * nk];
        for n in 0..np {
            for m in 0..nk {
                let mut acc = C64::new(0.0, 0.0);
                let kmax = (np - 1 - n).min(nk - 1 - m);
                for k in 0..=kmax {
                    let r = (0.5 * (lf[n + k] + lf[m + k] - lf[n] - lf[m])).exp();
                    acc += ith_pow[k] * v[(n + k) * nk + m + k] * r;
                }
                w[n * nk + m] = acc * sech.powi((n + m + 1) as i32);
            }
        }
        // e^{iΠ₊K₊ tanh f}
        let mut out = vec![C64::new(0.0, 0.0); np * nk];
        for n in 0..np {
            for m in 0..nk {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..=n.min(m) {
                    let r = (0.5 * (lf[n] + lf[m] - lf[n - k] - lf[m - k])).exp();
                    acc += ith_pow[k] * w[(n - k) * nk + m - k] * r;
                }
                out[n * nk + m] = acc;
            }
        }
        out
    }

    /// Sparse matrix of `P S(μ) P`. Entries inside the cutoffs coincide with
    /// those of the untruncated operator, so they are summed directly.
    pub fn matrix(&self) -> SparseMatrix {
        let (np, nk) = (self.cutoff_pi, self.cutoff_k);
        let dim = np * nk;
        let mu = self.param.mu();
        let mut trip = Vec::new();
        for a in 0..np {
            for b in 0..nk {
                let lo = a.min(b);
                let hi = (np - 1 - a).min(nk - 1 - b);
                for n in (a - lo)..=(a + hi) {
                    let m = n + b - a;
                    let v = squeeze_element(mu, n, m, a, b);
                    if v != C64::new(0.0, 0.0) {
                        trip.push((n * nk + m, a * nk + b, v));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(dim, dim, trip)
    }
}

/// `P S(μ) P` over the cutoffs of `params`.
pub fn squeeze_matrix(mu: f64, params: &ModelParams) -> Result<SparseMatrix> {
    Ok(SqueezeOperator::new(SqueezeParam::new(mu)?, params)?.matrix())
}

/// `S(μ)|ψ⟩`, renormalized. Fails if more than [`SQUEEZE_NORM_TOLERANCE`] of
/// the norm is lost to truncation.
pub fn squeeze_state(psi: &FockAmplitudes, mu: f64, params: &ModelParams) -> Result<FockAmplitudes> {
    if psi.cutoff_pi() != params.cutoff_pi || psi.cutoff_k() != params.cutoff_k {
        return Err(Error::Shape(psi.cutoff_pi(), psi.cutoff_k(), params.cutoff_pi, params.cutoff_k));
    }
    let op = SqueezeOperator::new(SqueezeParam::new(mu)?, params)?;
    let v = op.apply(psi.as_slice());
    let before = psi.norm_sqr();
    let after: f64 = v.iter().map(|c| c.norm_sqr()).sum();
    let deficit = (before - after) / before;
    if deficit > SQUEEZE_NORM_TOLERANCE {
        return Err(Error::truncation(
            format!("squeezing lost {deficit:.3e} of the norm to truncation"),
            None,
        ));
    }
    let mut out = FockAmplitudes::from_vec(v, params.cutoff_pi, params.cutoff_k, false)?;
    out.normalize()?;
    Ok(out)
}

/// Wigner covariance map `(γ, ε) → (μγ, ε/μ)`.
pub fn squeeze_wigner_point(point: &PhasePoint, mu: f64) -> PhasePoint {
    PhasePoint::new(point.gamma * mu, point.epsilon / mu)
}

/// Husimi covariance map `(γ, ε; κ) → (μγ, ε/μ; κμ²)`.
pub fn squeeze_husimi_params(point: &PhasePoint, kappa: f64, mu: f64) -> (PhasePoint, f64) {
    (squeeze_wigner_point(point, mu), kappa * mu * mu)
}

/// Low `rows × cols` block of `(1/πμ) ∫d²λ |λ/μ⟩⟨λ|` by trapezoid quadrature
/// on `[−L, L]²`. Returned row-major over flat indices of the block.
pub fn squeeze_matrix_via_lambda(mu: f64, params: &ModelParams, half_width: f64, points: usize) -> Result<Vec<C64>> {
    SqueezeParam::new(mu)?;
    let (np, nk) = (params.cutoff_pi, params.cutoff_k);
    if np > 8 || nk > 8 {
        return Err(Error::Config("lambda-representation squeeze is limited to cutoffs of 8 per mode".into()));
    }
    let (ax, ay) = quad::square((0.0, 0.0), half_width, points)?;
    let dim = np * nk;
    let mut out = vec![C64::new(0.0, 0.0); dim * dim];
    let mut bra = vec![C64::new(0.0, 0.0); dim];
    let mut ket = vec![C64::new(0.0, 0.0); dim];
    for (x, wx) in ax.nodes.iter().zip(&ax.weights) {
        for (y, wy) in ay.nodes.iter().zip(&ay.weights) {
            let lam = C64::new(*x, *y);
            for n in 0..np {
                for m in 0..nk {
                    ket[n * nk + m] = lambda_coefficient(n, m, lam / mu);
                    bra[n * nk + m] = lambda_coefficient(n, m, lam).conj();
                }
            }
            let w = wx * wy / (std::f64::consts::PI * mu);
            for i in 0..dim {
                let ki = ket[i] * w;
                for j in 0..dim {
                    out[i * dim + j] += ki * bra[j];
                }
            }
        }
    }
    Ok(out)
}

/// Default quadrature for [`squeeze_matrix_via_lambda`].
pub fn lambda_quadrature_default(mu: f64) -> (f64, usize) {
    (7.0 * mu.max(1.0), 121)
}

/// Position and canonical-momentum variances of a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Variances {
    pub var_x: f64,
    pub var_px: f64,
    /// `Δx · Δp_x`
    pub product: f64,
}

/// `⟨x²⟩ − ⟨x⟩²` and `⟨p_x²⟩ − ⟨p_x⟩²` from the truncated operators.
///
/// Second moments are taken as `‖Aψ‖²`, which equals `⟨A²⟩` whenever `ψ`
/// carries no weight on the top level of either mode; more than `1e-12` of
/// probability there is a truncation error.
pub fn variance_xy(psi: &FockAmplitudes, ops: &OperatorRep) -> Result<Variances> {
    if !psi.is_normalized() {
        return Err(Error::Domain("state must be normalized".into()));
    }
    let (np, nk) = (ops.params.cutoff_pi, ops.params.cutoff_k);
    if psi.cutoff_pi() != np || psi.cutoff_k() != nk {
        return Err(Error::Shape(psi.cutoff_pi(), psi.cutoff_k(), np, nk));
    }
    let mut edge = 0.0;
    for n in 0..np {
        for m in 0..nk {
            if n + 1 == np || m + 1 == nk {
                edge += psi.get(n, m).norm_sqr();
            }
        }
    }
    if edge > 1e-12 {
        return Err(Error::truncation(format!("state has {edge:.3e} probability on the top level"), None));
    }
    let moments = |a: &SparseMatrix| -> (f64, f64) {
        let av = a.apply(psi.as_slice());
        let mean: C64 = psi.as_slice().iter().zip(&av).map(|(p, q)| p.conj() * q).sum();
        let second: f64 = av.iter().map(|c| c.norm_sqr()).sum();
        (mean.re, second)
    };
    let (mx, sx) = moments(&ops.x);
    let (mp, sp) = moments(&ops.p_x);
    let var_x = sx - mx * mx;
    let var_px = sp - mp * mp;
    Ok(Variances {
        var_x,
        var_px,
        product: (var_x * var_px).sqrt(),
    })
}

/// `⟨n, m|S(μ)|n', m'⟩` summed directly from the normal-ordered form, for
/// checking matrix assembly.
pub fn squeeze_element(mu: f64, n: usize, m: usize, np: usize, mp: usize) -> C64 {
    if n as isize - m as isize != np as isize - mp as isize {
        return C64::new(0.0, 0.0);
    }
    let f = mu.ln();
    let (th, sech) = (f.tanh(), 1.0 / f.cosh());
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..=np.min(mp) {
        let (a, b) = (np - j, mp - j);
        if n < a {
            continue;
        }
        let k = n - a;
        let ln_lower = 0.5 * (ln_factorial(np) + ln_factorial(mp) - ln_factorial(a) - ln_factorial(b)) - ln_factorial(j);
        let ln_raise = 0.5 * (ln_factorial(n) + ln_factorial(m) - ln_factorial(a) - ln_factorial(b)) - ln_factorial(k);
        let mag = (ln_lower + ln_raise).exp() * th.powi((j + k) as i32) * sech.powi((a + b + 1) as i32);
        acc += i_pow(j + k) * mag;
    }
    acc
}
