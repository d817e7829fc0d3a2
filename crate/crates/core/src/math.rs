//! Small numeric helpers shared by the evaluators.

use std::sync::OnceLock;

const LN_FACTORIAL_TABLE: usize = 1024;

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(LN_FACTORIAL_TABLE);
        let mut acc = 0.0f64;
        t.push(0.0);
        for k in 1..LN_FACTORIAL_TABLE {
            acc += (k as f64).ln();
            t.push(acc);
        }
        t
    })
}

/// `ln(n!)`, tabulated for small `n` and from `ln Γ(n+1)` beyond.
pub(crate) fn ln_factorial(n: usize) -> f64 {
    if n < LN_FACTORIAL_TABLE {
        table()[n]
    } else {
        statrs::function::gamma::ln_gamma(n as f64 + 1.0)
    }
}

/// `1/sqrt(n!)` without forming `n!`.
pub(crate) fn inv_sqrt_factorial(n: usize) -> f64 {
    (-0.5 * ln_factorial(n)).exp()
}

/// Generalized Laguerre polynomials `L_k^{(alpha)}(x)` for `k = 0..=max_k`.
pub(crate) fn laguerre_into(max_k: usize, alpha: f64, x: f64, out: &mut Vec<f64>) {
    out.clear();
    out.push(1.0);
    if max_k == 0 {
        return;
    }
    out.push(1.0 + alpha - x);
    for k in 1..max_k {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * out[k] - (kf + alpha) * out[k - 1]) / (kf + 1.0);
        out.push(next);
    }
}
