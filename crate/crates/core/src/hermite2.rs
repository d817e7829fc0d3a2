//! Two-variable Hermite polynomials
//!
//! ```text
//! H_{m,n}(x, y) = Σ_{l=0}^{min(m,n)} m! n! (-1)^l / (l! (m-l)! (n-l)!) · x^{m-l} y^{n-l}
//! ```
//!
//! with generating function `Σ z^m z'^n / (m! n!) H_{m,n}(x, y) = exp(-z z' + z x + z' y)`.
//!
//! The direct sum runs in ascending `l` and builds each coefficient from
//! log-factorials, so `hermite2(m, n, x, y)` and `hermite2(n, m, y, x)` perform
//! the same floating-point operations and agree bit for bit.

use crate::error::{Error, Result};
use crate::math::ln_factorial;
use crate::C64;

/// Default bound on `m + n`.
pub const DEFAULT_MAX_TOTAL_DEGREE: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hermite2Args {
    pub m: u32,
    pub n: u32,
    pub x: C64,
    pub y: C64,
}

impl Hermite2Args {
    pub fn new(m: u32, n: u32, x: C64, y: C64) -> Self {
        Self { m, n, x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hermite2Config {
    /// Largest accepted `m + n`.
    pub max_total_degree: u32,
}

impl Default for Hermite2Config {
    fn default() -> Self {
        Self {
            max_total_degree: DEFAULT_MAX_TOTAL_DEGREE,
        }
    }
}

impl Hermite2Config {
    pub fn with_max_total_degree(max_total_degree: u32) -> Self {
        Self { max_total_degree }
    }

    fn check(&self, m: u32, n: u32, x: C64, y: C64) -> Result<()> {
        if m + n > self.max_total_degree {
            return Err(Error::Config(format!(
                "hermite2 degree m + n = {} exceeds the configured maximum {}",
                m + n,
                self.max_total_degree
            )));
        }
        if !(x.re.is_finite() && x.im.is_finite() && y.re.is_finite() && y.im.is_finite()) {
            return Err(Error::Domain(format!("hermite2 arguments must be finite, got x={x}, y={y}")));
        }
        Ok(())
    }

    /// Direct finite sum, ascending in `l`.
    pub fn eval(&self, args: Hermite2Args) -> Result<C64> {
        let Hermite2Args { m, n, x, y } = args;
        self.check(m, n, x, y)?;
        Ok(direct_sum(m as usize, n as usize, x, y))
    }

    /// Table `t[i][j] = H_{i,j}(x, y)` for `i <= max_m`, `j <= max_n`, from the
    /// recurrence `H_{i+1,j} = x H_{i,j} - j H_{i,j-1}`.
    pub fn table(&self, max_m: u32, max_n: u32, x: C64, y: C64) -> Result<Vec<Vec<C64>>> {
        self.check(max_m, max_n, x, y)?;
        let mut rows = Vec::with_capacity(max_m as usize + 1);
        let mut table = Hermite2Table::default();
        table.fill(max_m as usize, max_n as usize, x, y);
        for i in 0..=max_m as usize {
            rows.push((0..=max_n as usize).map(|j| table.get(i, j)).collect());
        }
        Ok(rows)
    }
}

/// `H_{m,n}(x, y)` with the default degree limit.
pub fn hermite2(args: Hermite2Args) -> Result<C64> {
    Hermite2Config::default().eval(args)
}

pub(crate) fn direct_sum(m: usize, n: usize, x: C64, y: C64) -> C64 {
    let lead = ln_factorial(m) + ln_factorial(n);
    let mut acc = C64::new(0.0, 0.0);
    for l in 0..=m.min(n) {
        let ln_coef = lead - ln_factorial(l) - (ln_factorial(m - l) + ln_factorial(n - l));
        let mut coef = ln_coef.exp();
        if l % 2 == 1 {
            coef = -coef;
        }
        let pw = x.powu((m - l) as u32) * y.powu((n - l) as u32);
        acc += pw * coef;
    }
    acc
}

/// Reusable row-major table of `H_{i,j}` filled by recurrence.
#[derive(Debug, Default, Clone)]
pub(crate) struct Hermite2Table {
    cols: usize,
    data: Vec<C64>,
}

impl Hermite2Table {
    pub(crate) fn fill(&mut self, max_m: usize, max_n: usize, x: C64, y: C64) {
        let cols = max_n + 1;
        self.cols = cols;
        self.data.clear();
        self.data.resize((max_m + 1) * cols, C64::new(0.0, 0.0));
        // H_{0,j} = y^j
        let mut p = C64::new(1.0, 0.0);
        for j in 0..cols {
            self.data[j] = p;
            p *= y;
        }
        for i in 0..max_m {
            let (prev, next) = self.data.split_at_mut((i + 1) * cols);
            let row = &prev[i * cols..];
            let out = &mut next[..cols];
            out[0] = x * row[0];
            for j in 1..cols {
                out[j] = x * row[j] - row[j - 1] * (j as f64);
            }
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }
}

/// Independent route: extract the `(m, n)` Taylor coefficient of
/// `exp(-z z' + z x + z' y)` from its truncated power series and scale by
/// `m! n!`.
///
/// The series `Σ_{k<terms} w^k / k!` with `w = x z + y z' - z z'` is expanded
/// as a bivariate polynomial truncated to degree `m` in `z` and `n` in `z'`.
/// The omitted tail is bounded on the polydisc `|z| = |z'| = radius` and turned
/// into a coefficient bound with the Cauchy estimate; if that bound is not
/// negligible the call fails with [`Error::Precision`].
pub fn hermite2_via_genfun(m: u32, n: u32, x: C64, y: C64, radius: f64, terms: usize) -> Result<C64> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::Domain(format!("radius must be positive, got {radius}")));
    }
    if !(x.re.is_finite() && x.im.is_finite() && y.re.is_finite() && y.im.is_finite()) {
        return Err(Error::Domain("generating-function arguments must be finite".into()));
    }
    let (mm, nn) = (m as usize, n as usize);
    if terms < mm + nn + 8 {
        return Err(Error::Precision(format!(
            "need at least m + n + 8 = {} series terms, got {terms}",
            mm + nn + 8
        )));
    }

    let w_bound = radius * x.norm() + radius * y.norm() + radius * radius;
    // Σ_{k >= terms} W^k / k! <= W^terms / terms! · e^W
    let ln_tail = terms as f64 * w_bound.ln() - ln_factorial(terms) + w_bound;
    let ln_coef_bound =
        ln_tail - (mm + nn) as f64 * radius.ln() + ln_factorial(mm) + ln_factorial(nn);

    let cols = nn + 1;
    let idx = |a: usize, b: usize| a * cols + b;
    let mut term = vec![C64::new(0.0, 0.0); (mm + 1) * cols];
    let mut sum = term.clone();
    term[0] = C64::new(1.0, 0.0);
    sum[0] = term[0];
    let mut next = term.clone();
    for k in 1..terms {
        next.iter_mut().for_each(|c| *c = C64::new(0.0, 0.0));
        for a in 0..=mm {
            for b in 0..=nn {
                let t = term[idx(a, b)];
                if t == C64::new(0.0, 0.0) {
                    continue;
                }
                if a < mm {
                    next[idx(a + 1, b)] += t * x;
                }
                if b < nn {
                    next[idx(a, b + 1)] += t * y;
                }
                if a < mm && b < nn {
                    next[idx(a + 1, b + 1)] -= t;
                }
            }
        }
        let inv_k = 1.0 / k as f64;
        for (t, nx) in term.iter_mut().zip(next.iter()) {
            *t = *nx * inv_k;
        }
        for (s, t) in sum.iter_mut().zip(term.iter()) {
            *s += *t;
        }
    }

    let value = sum[idx(mm, nn)] * (ln_factorial(mm) + ln_factorial(nn)).exp();
    if ln_coef_bound > (1e-12 * value.norm().max(1.0)).ln() {
        return Err(Error::Precision(format!(
            "series tail bound {:.3e} too large at radius {radius} with {terms} terms",
            ln_coef_bound.exp()
        )));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn constant_and_pure_powers() {
        let x = c(0.3, -1.2);
        let y = c(2.0, 0.5);
        assert_eq!(hermite2(Hermite2Args::new(0, 0, x, y)).unwrap(), c(1.0, 0.0));
        let h20 = hermite2(Hermite2Args::new(2, 0, x, y)).unwrap();
        assert!((h20 - x * x).norm() < 1e-14);
    }

    #[test]
    fn small_degree_hand_values() {
        let h11 = hermite2(Hermite2Args::new(1, 1, c(2.0, 0.0), c(3.0, 0.0))).unwrap();
        assert!((h11 - c(5.0, 0.0)).norm() < 1e-14);
        let (x, y) = (c(0.4, 0.1), c(-1.0, 0.7));
        let h21 = hermite2(Hermite2Args::new(2, 1, x, y)).unwrap();
        assert!((h21 - (x * x * y - x * 2.0)).norm() < 1e-14);
    }

    #[test]
    fn degree_limit_is_a_config_error() {
        let err = hermite2(Hermite2Args::new(40, 25, c(1.0, 0.0), c(1.0, 0.0))).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        let wide = Hermite2Config::with_max_total_degree(80);
        assert!(wide.eval(Hermite2Args::new(40, 25, c(0.1, 0.0), c(0.1, 0.0))).is_ok());
    }

    #[test]
    fn non_finite_is_a_domain_error() {
        let err = hermite2(Hermite2Args::new(1, 1, c(f64::NAN, 0.0), c(1.0, 0.0))).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn table_agrees_with_direct_sum() {
        let (x, y) = (c(0.7, -0.3), c(-1.1, 0.4));
        let t = Hermite2Config::default().table(6, 5, x, y).unwrap();
        for (i, row) in t.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let d = direct_sum(i, j, x, y);
                assert!((v - d).norm() <= 1e-12 * d.norm().max(1.0), "({i},{j})");
            }
        }
    }

    #[test]
    fn genfun_small_cases() {
        let one = hermite2_via_genfun(0, 0, c(0.2, 0.0), c(-0.5, 1.0), 0.5, 16).unwrap();
        assert!((one - c(1.0, 0.0)).norm() < 1e-15);
        let five = hermite2_via_genfun(1, 1, c(2.0, 0.0), c(3.0, 0.0), 0.25, 40).unwrap();
        assert!((five - c(5.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn genfun_rejects_short_series() {
        let err = hermite2_via_genfun(4, 3, c(0.7, 0.2), c(0.0, -1.1), 0.5, 10).unwrap_err();
        assert!(matches!(err, Error::Precision(_)));
        // enough terms by count, but the tail bound at a huge radius is not small
        let err = hermite2_via_genfun(1, 1, c(2.0, 0.0), c(3.0, 0.0), 50.0, 10).unwrap_err();
        assert!(matches!(err, Error::Precision(_)));
    }
}
