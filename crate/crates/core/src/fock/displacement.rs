use nalgebra::DMatrix;

use crate::math::{laguerre_into, ln_factorial};
use crate::C64;

/// Single-mode `⟨n|D(β)|n'⟩` with `D(β) = exp(βa† − β*a)`:
/// `√(n'!/n!) β^{n−n'} e^{−|β|²/2} L_{n'}^{(n−n')}(|β|²)` for `n ≥ n'`.
pub fn displacement_element(n: usize, n_prime: usize, beta: C64) -> C64 {
    let mut scratch = Vec::new();
    element_with(n, n_prime, beta, &mut scratch)
}

fn element_with(n: usize, n_prime: usize, beta: C64, scratch: &mut Vec<f64>) -> C64 {
    if n < n_prime {
        // ⟨n|D(β)|n'⟩ = conj(⟨n'|D(−β)|n⟩)
        return element_with(n_prime, n, -beta, scratch).conj();
    }
    let x = beta.norm_sqr();
    let d = n - n_prime;
    laguerre_into(n_prime, d as f64, x, scratch);
    let mag = (0.5 * (ln_factorial(n_prime) - ln_factorial(n)) - 0.5 * x).exp();
    beta.powu(d as u32) * (mag * scratch[n_prime])
}

/// Dense `dim × dim` block of `D(β)` from exact matrix elements.
pub fn displacement_matrix(beta: C64, dim: usize) -> DMatrix<C64> {
    let mut scratch = Vec::new();
    DMatrix::from_fn(dim, dim, |r, c| element_with(r, c, beta, &mut scratch))
}

/// `exp(βa† − β*a)` of the truncated ladder matrices. Accurate only well
/// inside the block; kept as an independent check of the exact elements.
pub fn displacement_matrix_expm(beta: C64, dim: usize) -> DMatrix<C64> {
    let mut g = DMatrix::from_element(dim, dim, C64::new(0.0, 0.0));
    for n in 0..dim.saturating_sub(1) {
        let s = ((n + 1) as f64).sqrt();
        g[(n + 1, n)] = beta * s;
        g[(n, n + 1)] = -beta.conj() * s;
    }
    g.exp()
}

/// Rows `0..rows`, columns `0..cols` of `D(β)(−1)^N`, reusing `out`.
/// Each diagonal shares one Laguerre sweep, with the factorial ratio
/// advanced multiplicatively along it.
pub(crate) fn displaced_parity_block(beta: C64, rows: usize, cols: usize, scratch: &mut Vec<f64>, out: &mut Vec<C64>) {
    out.clear();
    out.resize(rows * cols, C64::new(0.0, 0.0));
    let x = beta.norm_sqr();
    let base = (-0.5 * x).exp();
    let mut lower_phase = C64::new(1.0, 0.0);
    let mut upper_phase = C64::new(1.0, 0.0);
    let mut inv_sqrt_d_fact = 1.0;
    for d in 0..rows.max(cols) {
        if d > 0 {
            lower_phase *= beta;
            upper_phase *= -beta.conj();
            inv_sqrt_d_fact /= (d as f64).sqrt();
        }
        let lower_len = cols.min(rows.saturating_sub(d));
        let upper_len = if d == 0 { 0 } else { rows.min(cols.saturating_sub(d)) };
        let len = lower_len.max(upper_len);
        if len == 0 {
            continue;
        }
        laguerre_into(len - 1, d as f64, x, scratch);
        // √(k!/(k+d)!) e^{−x/2}
        let mut mag = base * inv_sqrt_d_fact;
        for k in 0..len {
            if k > 0 {
                mag *= (k as f64 / (k + d) as f64).sqrt();
            }
            let v = mag * scratch[k];
            if k < lower_len {
                let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
                out[(k + d) * cols + k] = lower_phase * (v * sign);
            }
            if k < upper_len {
                let sign = if (k + d) % 2 == 1 { -1.0 } else { 1.0 };
                out[k * cols + k + d] = upper_phase * (v * sign);
            }
        }
    }
}
