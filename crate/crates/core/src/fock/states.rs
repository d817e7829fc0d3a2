use super::{FockAmplitudes, ModelParams, PhasePoint};
use crate::error::{Error, Result};
use crate::hermite2::direct_sum;
use crate::math::{inv_sqrt_factorial, ln_factorial};
use crate::C64;

/// Probability mass allowed beyond the cutoffs for states flagged normalized.
pub(crate) const TAIL_TOLERANCE: f64 = 1e-12;
/// Relative eigen-residual allowed for the truncated `|λ⟩`, `|ζ⟩` vectors.
pub(crate) const EIGEN_TOLERANCE: f64 = 1e-6;
/// Kappa window around 1 in which the coherent-product limit is used.
pub(crate) const KAPPA_ONE_WINDOW: f64 = 1e-6;

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

fn check_point(point: &PhasePoint) -> Result<()> {
    let ok = [point.gamma.re, point.gamma.im, point.epsilon.re, point.epsilon.im]
        .iter()
        .all(|v| v.is_finite());
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!("phase point must be finite, got {point:?}")))
    }
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa.is_finite() && kappa > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("kappa must be positive, got {kappa}")))
    }
}

/// `|n, m⟩`.
pub fn landau_state(n: usize, m: usize, params: &ModelParams) -> Result<FockAmplitudes> {
    if n >= params.cutoff_pi || m >= params.cutoff_k {
        return Err(Error::Bounds {
            n,
            m,
            cutoff_pi: params.cutoff_pi,
            cutoff_k: params.cutoff_k,
        });
    }
    let mut v = vec![zero(); params.dim()];
    v[n * params.cutoff_k + m] = C64::new(1.0, 0.0);
    FockAmplitudes::from_vec(v, params.cutoff_pi, params.cutoff_k, true)
}

/// Mode amplitudes `(α_Π, α_K)` of the two-mode coherent state labelled by
/// `(γ, ε)` at width `κ`: `α_Π = i(γ*/√κ − √κ ε*)/2`, `α_K = (√κ ε + γ/√κ)/2`.
pub fn coherent_amplitudes(point: &PhasePoint, kappa: f64) -> (C64, C64) {
    let sk = kappa.sqrt();
    let (g, e) = (point.gamma, point.epsilon);
    let a_pi = C64::i() * (g.conj() / sk - e.conj() * sk) * 0.5;
    let a_k = (e * sk + g / sk) * 0.5;
    (a_pi, a_k)
}

/// `Σ_{n ≥ cutoff} e^{−x} xⁿ/n!` together with the smallest cutoff whose
/// tail falls below [`TAIL_TOLERANCE`].
fn poisson_tail(x: f64, cutoff: usize) -> (f64, usize) {
    if x == 0.0 {
        return (0.0, cutoff.max(1));
    }
    let mut terms = Vec::new();
    let mut n = cutoff;
    loop {
        let t = (n as f64 * x.ln() - x - ln_factorial(n)).exp();
        terms.push(t);
        if n as f64 > x && t < 1e-18 {
            break;
        }
        n += 1;
    }
    let mut suffix = 0.0;
    let mut required = cutoff + terms.len();
    for (k, t) in terms.iter().enumerate().rev() {
        suffix += t;
        if suffix < TAIL_TOLERANCE {
            required = cutoff + k;
        }
    }
    (suffix, required)
}

/// Two-mode Glauber coherent state `|α_Π⟩ ⊗ |α_K⟩`.
pub fn glauber_state(alpha_pi: C64, alpha_k: C64, cutoff_pi: usize, cutoff_k: usize) -> Result<FockAmplitudes> {
    for a in [alpha_pi, alpha_k] {
        if !(a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::Domain("coherent amplitude must be finite".into()));
        }
    }
    let (tp, rp) = poisson_tail(alpha_pi.norm_sqr(), cutoff_pi);
    let (tk, rk) = poisson_tail(alpha_k.norm_sqr(), cutoff_k);
    if tp + tk > TAIL_TOLERANCE {
        return Err(Error::truncation(
            format!("coherent state carries {:.3e} probability beyond the cutoffs", tp + tk),
            Some(rp.max(rk)),
        ));
    }
    let mode = |a: C64, len: usize| -> Vec<C64> {
        let damp = (-0.5 * a.norm_sqr()).exp();
        let mut out = Vec::with_capacity(len);
        let mut p = C64::new(1.0, 0.0);
        for n in 0..len {
            out.push(p * (damp * inv_sqrt_factorial(n)));
            p *= a;
        }
        out
    };
    let vp = mode(alpha_pi, cutoff_pi);
    let vk = mode(alpha_k, cutoff_k);
    let mut v = Vec::with_capacity(cutoff_pi * cutoff_k);
    for a in &vp {
        for b in &vk {
            v.push(a * b);
        }
    }
    let mut out = FockAmplitudes::from_vec(v, cutoff_pi, cutoff_k, false)?;
    out.normalize()?;
    Ok(out)
}

/// Two-mode coherent state attached to `(γ, ε)` at width `κ`, i.e. the
/// state that the width-`κ` squeezed coherent state reduces to before squeezing.
pub fn coherent_state(point: &PhasePoint, kappa: f64, params: &ModelParams) -> Result<FockAmplitudes> {
    check_point(point)?;
    check_kappa(kappa)?;
    let (a_pi, a_k) = coherent_amplitudes(point, kappa);
    glauber_state(a_pi, a_k, params.cutoff_pi, params.cutoff_k)
}

/// Coefficients `⟨n, m|γ, ε⟩_κ` of the squeezed coherent state.
///
/// With `τ = (1−κ)/(1+κ)`, `u = −i(κε + γ)/(1+κ)` and `v = −i(κε* − γ*)/(1+κ)`,
///
/// ```text
/// ⟨n, m|γ, ε⟩_κ = iᵐ N / √(n! m!) · Σ_l m! n! (−τ)^l / (l! (m−l)! (n−l)!) · u^{m−l} v^{n−l}
/// N = 2√κ/(1+κ) · exp{−(κ|ε|² + |γ|²)/(2(1+κ))}
/// ```
///
/// The sum is `t^{m+n} H_{m,n}(u/t, v/t)` for either root `t` of `τ`, so no
/// branch choice enters. Inside the `κ ≈ 1` window `τ` is set to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezedCoherentKernel {
    pub prefactor: f64,
    pub u: C64,
    pub v: C64,
    pub tau: f64,
}

impl SqueezedCoherentKernel {
    pub fn new(point: &PhasePoint, kappa: f64) -> Result<Self> {
        check_point(point)?;
        check_kappa(kappa)?;
        Ok(Self::new_unchecked(point, kappa))
    }

    pub(crate) fn new_unchecked(point: &PhasePoint, kappa: f64) -> Self {
        let (g, e) = (point.gamma, point.epsilon);
        let d = 1.0 + kappa;
        let prefactor = 2.0 * kappa.sqrt() / d * (-(kappa * e.norm_sqr() + g.norm_sqr()) / (2.0 * d)).exp();
        let mi = C64::new(0.0, -1.0);
        let u = mi * (e * kappa + g) / d;
        let v = mi * (e.conj() * kappa - g.conj()) / d;
        let tau = if (kappa - 1.0).abs() < KAPPA_ONE_WINDOW {
            0.0
        } else {
            (1.0 - kappa) / d
        };
        Self { prefactor, u, v, tau }
    }

    /// Single coefficient by the direct sum.
    pub fn coefficient(&self, n: usize, m: usize) -> C64 {
        let lead = ln_factorial(m) + ln_factorial(n);
        let mut acc = zero();
        for l in 0..=m.min(n) {
            let mag = (lead - ln_factorial(l) - (ln_factorial(m - l) + ln_factorial(n - l))).exp();
            let tl = (-self.tau).powi(l as i32);
            acc += self.u.powu((m - l) as u32) * self.v.powu((n - l) as u32) * (mag * tl);
        }
        let scale = self.prefactor * inv_sqrt_factorial(n) * inv_sqrt_factorial(m);
        i_pow(m) * acc * scale
    }

    /// Row-major block `out[n * cols + m]` for `n < rows`, `m < cols`, from
    /// the recurrence `G_{i+1,j} = u G_{i,j} − j τ G_{i,j−1}` in the K index.
    pub fn fill_block(&self, rows: usize, cols: usize, inv_sqrt_fact: &[f64], scratch: &mut Vec<C64>, out: &mut Vec<C64>) {
        debug_assert!(inv_sqrt_fact.len() >= rows.max(cols));
        // scratch[i * rows + j] = G_{i,j}, i over the K index, j over the Π index
        scratch.clear();
        scratch.resize(cols * rows, zero());
        if rows == 0 || cols == 0 {
            out.clear();
            return;
        }
        let mut p = C64::new(1.0, 0.0);
        for x in scratch.iter_mut().take(rows) {
            *x = p;
            p *= self.v;
        }
        for i in 0..cols - 1 {
            let (prev, next) = scratch.split_at_mut((i + 1) * rows);
            let row = &prev[i * rows..];
            let dst = &mut next[..rows];
            dst[0] = self.u * row[0];
            for j in 1..rows {
                dst[j] = self.u * row[j] - row[j - 1] * (j as f64 * self.tau);
            }
        }
        out.clear();
        out.reserve(rows * cols);
        for n in 0..rows {
            for m in 0..cols {
                let s = self.prefactor * inv_sqrt_fact[n] * inv_sqrt_fact[m];
                out.push(i_pow(m) * scratch[m * rows + n] * s);
            }
        }
    }
}

#[inline]
pub(crate) fn i_pow(k: usize) -> C64 {
    match k % 4 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

pub(crate) fn inv_sqrt_factorials(len: usize) -> Vec<f64> {
    (0..len).map(inv_sqrt_factorial).collect()
}

/// Phase relating the squeezed image of the coherent state to `|γ, ε⟩_κ`:
/// `exp{(κ−1)/(4(1+κ)) (ε*γ − γ*ε)}`.
pub fn squeeze_route_phase(point: &PhasePoint, kappa: f64) -> C64 {
    let (g, e) = (point.gamma, point.epsilon);
    ((e.conj() * g - g.conj() * e) * ((kappa - 1.0) / (4.0 * (1.0 + kappa)))).exp()
}

/// `⟨n, m|γ, ε⟩_κ` computed independently as `⟨n, m|S(√κ)|coherent⟩ / phase`,
/// with `S(μ) = sech f · e^{iΠ₊K₊ tanh f} · sech f^{N_Π+N_K} · e^{iΠ₋K₋ tanh f}`,
/// `f = ln μ`.
pub fn squeezed_coefficient_via_operator(n: usize, m: usize, point: &PhasePoint, kappa: f64) -> C64 {
    let f = 0.5 * kappa.ln();
    let th = f.tanh();
    let sech = 1.0 / f.cosh();
    let (a_pi, a_k) = coherent_amplitudes(point, kappa);
    let damp = (-0.5 * (a_pi.norm_sqr() + a_k.norm_sqr())).exp();
    let coh = |a: usize, b: usize| a_pi.powu(a as u32) * a_k.powu(b as u32) * (damp * inv_sqrt_factorial(a) * inv_sqrt_factorial(b));
    let ith = C64::new(0.0, th);
    let mut acc = zero();
    for k in 0..=n.min(m) {
        let ln_w = 0.5 * (ln_factorial(n) + ln_factorial(m) - ln_factorial(n - k) - ln_factorial(m - k)) - ln_factorial(k);
        let w = ln_w.exp() * sech.powi((n + m - 2 * k) as i32);
        acc += ith.powu(k as u32) * coh(n - k, m - k) * w;
    }
    let lead = (C64::i() * th * a_pi * a_k).exp() * sech;
    lead * acc / squeeze_route_phase(point, kappa)
}

/// Full squeezed coherent state `|γ, ε⟩_κ` over the cutoffs.
///
/// Fails with a truncation error when more than [`TAIL_TOLERANCE`] of the
/// norm lies beyond the cutoffs and with a numeric error when the low
/// coefficients disagree with [`squeezed_coefficient_via_operator`].
pub fn squeezed_coherent_state(point: &PhasePoint, kappa: f64, params: &ModelParams) -> Result<FockAmplitudes> {
    let kernel = SqueezedCoherentKernel::new(point, kappa)?;
    let (np, nk) = (params.cutoff_pi, params.cutoff_k);
    let isf = inv_sqrt_factorials(np.max(nk));
    let mut scratch = Vec::new();
    let mut v = Vec::new();
    kernel.fill_block(np, nk, &isf, &mut scratch, &mut v);

    let deficit = 1.0 - v.iter().map(|c| c.norm_sqr()).sum::<f64>();
    if deficit > TAIL_TOLERANCE {
        let required = required_squeezed_cutoff(&kernel, np.max(nk));
        return Err(Error::truncation(
            format!("squeezed coherent state carries {deficit:.3e} probability beyond the cutoffs"),
            required,
        ));
    }

    for (n, m) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        if n >= np || m >= nk {
            continue;
        }
        let a = v[n * nk + m];
        let b = squeezed_coefficient_via_operator(n, m, point, kappa);
        if (a - b).norm() > 1e-10 * (1.0 + b.norm()) {
            return Err(Error::Numeric(format!(
                "squeezed coherent coefficient ({n},{m}) disagrees with the squeeze-operator route: {a} vs {b}"
            )));
        }
    }

    FockAmplitudes::from_vec(v, np, nk, true)
}

fn required_squeezed_cutoff(kernel: &SqueezedCoherentKernel, from: usize) -> Option<usize> {
    let mut scratch = Vec::new();
    let mut v = Vec::new();
    let mut c = from + 8;
    while c <= (4 * from).max(256) {
        let isf = inv_sqrt_factorials(c);
        kernel.fill_block(c, c, &isf, &mut scratch, &mut v);
        if 1.0 - v.iter().map(|z| z.norm_sqr()).sum::<f64>() <= TAIL_TOLERANCE {
            return Some(c);
        }
        c += 8;
    }
    None
}

/// Truncated `exp(A Π₊ + B K₊ + C Π₊K₊)|0,0⟩ · scale`. In the truncated
/// space the generator only raises, so the series ends after
/// `cutoff_pi + cutoff_k − 2` terms and the low block is exact.
fn raising_exponential(a: C64, b: C64, c: C64, scale: f64, np: usize, nk: usize) -> Vec<C64> {
    let sq: Vec<f64> = (0..np.max(nk)).map(|k| (k as f64).sqrt()).collect();
    let mut term = vec![zero(); np * nk];
    term[0] = C64::new(scale, 0.0);
    let mut sum = term.clone();
    let mut next = vec![zero(); np * nk];
    for k in 1..(np + nk) {
        let inv_k = 1.0 / k as f64;
        let mut any = false;
        for n in 0..np {
            for mm in 0..nk {
                let mut acc = zero();
                if n > 0 {
                    acc += a * sq[n] * term[(n - 1) * nk + mm];
                }
                if mm > 0 {
                    acc += b * sq[mm] * term[n * nk + mm - 1];
                }
                if n > 0 && mm > 0 {
                    acc += c * (sq[n] * sq[mm]) * term[(n - 1) * nk + mm - 1];
                }
                acc *= inv_k;
                any |= acc != zero();
                next[n * nk + mm] = acc;
            }
        }
        std::mem::swap(&mut term, &mut next);
        for (s, t) in sum.iter_mut().zip(&term) {
            *s += t;
        }
        if !any {
            break;
        }
    }
    sum
}

/// Largest residual of `(P + s Q)ψ − ev ψ` over the interior block, relative
/// to the largest interior amplitude. `P` lowers/raises as given by closures
/// on `(n, m)`.
fn interior_residual(psi: &[C64], np: usize, nk: usize, apply: impl Fn(&[C64], usize, usize) -> C64, ev: C64) -> f64 {
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for n in 0..np.saturating_sub(1) {
        for m in 0..nk.saturating_sub(1) {
            let i = n * nk + m;
            scale = scale.max(psi[i].norm());
            worst = worst.max((apply(psi, n, m) - ev * psi[i]).norm());
        }
    }
    if scale == 0.0 {
        worst
    } else {
        worst / scale
    }
}

fn ladder_view(nk: usize) -> impl Fn(&[C64], isize, isize) -> C64 {
    move |psi: &[C64], n: isize, m: isize| {
        if n < 0 || m < 0 {
            zero()
        } else {
            psi[n as usize * nk + m as usize]
        }
    }
}

fn check_complex(z: C64, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be finite, got {z}")))
    }
}

/// Truncated `|λ⟩ = exp(−|λ|²/2 − iλΠ₊ + λ*K₊ + iΠ₊K₊)|0,0⟩`, not normalized.
///
/// The eigen-equations `(K₊ + iΠ₋)|λ⟩ = λ|λ⟩` and `(K₋ − iΠ₊)|λ⟩ = λ*|λ⟩`
/// are checked on the interior block.
pub fn lambda_state(lambda: C64, params: &ModelParams) -> Result<FockAmplitudes> {
    check_complex(lambda, "lambda")?;
    let (np, nk) = (params.cutoff_pi, params.cutoff_k);
    let v = raising_exponential(
        C64::new(0.0, -1.0) * lambda,
        lambda.conj(),
        C64::i(),
        (-0.5 * lambda.norm_sqr()).exp(),
        np,
        nk,
    );
    let at = ladder_view(nk);
    let sqrt = |k: isize| (k.max(0) as f64).sqrt();
    let r1 = interior_residual(&v, np, nk, |p, n, m| {
        let (n, m) = (n as isize, m as isize);
        // K₊ψ at (n,m) = √m ψ(n,m−1); Π₋ψ at (n,m) = √(n+1) ψ(n+1,m)
        at(p, n, m - 1) * sqrt(m) + C64::i() * at(p, n + 1, m) * sqrt(n + 1)
    }, lambda);
    let r2 = interior_residual(&v, np, nk, |p, n, m| {
        let (n, m) = (n as isize, m as isize);
        at(p, n, m + 1) * sqrt(m + 1) - C64::i() * at(p, n - 1, m) * sqrt(n)
    }, lambda.conj());
    let r = r1.max(r2);
    if r > EIGEN_TOLERANCE {
        return Err(Error::truncation(format!("lambda-state eigen residual {r:.3e}"), None));
    }
    FockAmplitudes::from_vec(v, np, nk, false)
}

/// Truncated `|ζ⟩ = exp(−|ζ|²/2 − iζΠ₊ − ζ*K₊ − iΠ₊K₊)|0,0⟩`, not normalized.
///
/// Checked against `(iΠ₋ − K₊)|ζ⟩ = ζ|ζ⟩` and `(K₋ + iΠ₊)|ζ⟩ = −ζ*|ζ⟩`.
pub fn zeta_state(zeta: C64, params: &ModelParams) -> Result<FockAmplitudes> {
    check_complex(zeta, "zeta")?;
    let (np, nk) = (params.cutoff_pi, params.cutoff_k);
    let v = raising_exponential(
        C64::new(0.0, -1.0) * zeta,
        -zeta.conj(),
        C64::new(0.0, -1.0),
        (-0.5 * zeta.norm_sqr()).exp(),
        np,
        nk,
    );
    let at = ladder_view(nk);
    let sqrt = |k: isize| (k.max(0) as f64).sqrt();
    let r1 = interior_residual(&v, np, nk, |p, n, m| {
        let (n, m) = (n as isize, m as isize);
        C64::i() * at(p, n + 1, m) * sqrt(n + 1) - at(p, n, m - 1) * sqrt(m)
    }, zeta);
    let r2 = interior_residual(&v, np, nk, |p, n, m| {
        let (n, m) = (n as isize, m as isize);
        at(p, n, m + 1) * sqrt(m + 1) + C64::i() * at(p, n - 1, m) * sqrt(n)
    }, -zeta.conj());
    let r = r1.max(r2);
    if r > EIGEN_TOLERANCE {
        return Err(Error::truncation(format!("zeta-state eigen residual {r:.3e}"), None));
    }
    FockAmplitudes::from_vec(v, np, nk, false)
}

/// `⟨n, m|λ⟩ = e^{−|λ|²/2} (−i)ⁿ H_{m,n}(λ*, λ) / √(n! m!)`.
pub fn lambda_coefficient(n: usize, m: usize, lambda: C64) -> C64 {
    let h = direct_sum(m, n, lambda.conj(), lambda);
    i_pow(n).conj() * h * ((-0.5 * lambda.norm_sqr()).exp() * inv_sqrt_factorial(n) * inv_sqrt_factorial(m))
}

/// `⟨n, m|ζ⟩ = e^{−|ζ|²/2} iⁿ H_{m,n}(−ζ*, −ζ) / √(n! m!)`.
pub fn zeta_coefficient(n: usize, m: usize, zeta: C64) -> C64 {
    let h = direct_sum(m, n, -zeta.conj(), -zeta);
    i_pow(n) * h * ((-0.5 * zeta.norm_sqr()).exp() * inv_sqrt_factorial(n) * inv_sqrt_factorial(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: usize) -> ModelParams {
        ModelParams::with_cutoff(c)
    }

    #[test]
    fn landau_bounds() {
        assert!(landau_state(1, 2, &p(3)).is_ok());
        assert!(matches!(landau_state(3, 0, &p(3)), Err(Error::Bounds { .. })));
    }

    #[test]
    fn coherent_tail_check_reports_cutoff() {
        let pt = PhasePoint::from_reals(4.0, 0.0, 4.0, 0.0);
        match coherent_state(&pt, 1.0, &p(10)) {
            Err(Error::Truncation { required_cutoff: Some(c), .. }) => assert!(c > 10),
            other => panic!("unexpected {other:?}"),
        }
        let s = coherent_state(&pt, 1.0, &p(60)).unwrap();
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn squeezed_vacuum_prefactor() {
        let s = squeezed_coherent_state(&PhasePoint::origin(), 2.0, &p(30)).unwrap();
        assert!((s.get(0, 0) - C64::new(2.0 * 2f64.sqrt() / 3.0, 0.0)).norm() < 1e-15);
        let v = squeezed_coherent_state(&PhasePoint::origin(), 1.0, &p(4)).unwrap();
        assert_eq!(v.get(0, 0), C64::new(1.0, 0.0));
    }

    #[test]
    fn block_fill_matches_direct_coefficients() {
        let pt = PhasePoint::from_reals(0.3, 0.7, -0.4, 0.2);
        for kappa in [0.5, 1.0, 2.0] {
            let k = SqueezedCoherentKernel::new(&pt, kappa).unwrap();
            let isf = inv_sqrt_factorials(7);
            let (mut s, mut out) = (Vec::new(), Vec::new());
            k.fill_block(6, 7, &isf, &mut s, &mut out);
            for n in 0..6 {
                for m in 0..7 {
                    let d = k.coefficient(n, m);
                    assert!((out[n * 7 + m] - d).norm() < 1e-14, "{kappa} ({n},{m})");
                    let o = squeezed_coefficient_via_operator(n, m, &pt, kappa);
                    assert!((o - d).norm() < 1e-12, "{kappa} ({n},{m}) operator route");
                }
            }
        }
    }

    #[test]
    fn lambda_and_zeta_at_origin() {
        let l = lambda_state(C64::new(0.0, 0.0), &p(6)).unwrap();
        let z = zeta_state(C64::new(0.0, 0.0), &p(6)).unwrap();
        for n in 0..6 {
            for m in 0..6 {
                let (wl, wz) = if n == m { (i_pow(n), i_pow(n).conj()) } else { (zero(), zero()) };
                assert!((l.get(n, m) - wl).norm() < 1e-14);
                assert!((z.get(n, m) - wz).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn series_states_match_closed_coefficients() {
        let lam = C64::new(0.4, -0.3);
        let zeta = C64::new(0.7, 0.2);
        let l = lambda_state(lam, &p(12)).unwrap();
        let z = zeta_state(zeta, &p(12)).unwrap();
        for n in 0..12 {
            for m in 0..12 {
                let a = lambda_coefficient(n, m, lam);
                let b = zeta_coefficient(n, m, zeta);
                assert!((l.get(n, m) - a).norm() < 1e-12 * (1.0 + a.norm()));
                assert!((z.get(n, m) - b).norm() < 1e-12 * (1.0 + b.norm()));
            }
        }
    }
}
