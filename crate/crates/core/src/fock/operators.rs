use nalgebra::DMatrix;

use super::{FockAmplitudes, ModelParams};
use crate::error::{Error, Result};
use crate::C64;

/// Compressed-sparse-row complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    indptr: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<C64>,
}

impl SparseMatrix {
    /// Build from `(row, col, value)` triplets; duplicates are summed and
    /// exact zeros dropped.
    pub fn from_triplets(rows: usize, cols: usize, mut triplets: Vec<(usize, usize, C64)>) -> Self {
        triplets.sort_by_key(|t| (t.0, t.1));
        let mut indptr = vec![0usize; rows + 1];
        let mut indices = Vec::with_capacity(triplets.len());
        let mut values: Vec<C64> = Vec::with_capacity(triplets.len());
        let mut last: Option<(usize, usize)> = None;
        let mut row_of = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) outside {rows}x{cols}");
            if last == Some((r, c)) {
                *values.last_mut().unwrap() += v;
            } else {
                indices.push(c);
                values.push(v);
                row_of.push(r);
                last = Some((r, c));
            }
        }
        let mut keep_idx = Vec::with_capacity(indices.len());
        let mut keep_val = Vec::with_capacity(values.len());
        for ((c, v), r) in indices.into_iter().zip(values).zip(row_of) {
            if v != C64::new(0.0, 0.0) {
                keep_idx.push(c);
                keep_val.push(v);
                indptr[r + 1] += 1;
            }
        }
        for r in 0..rows {
            indptr[r + 1] += indptr[r];
        }
        Self {
            rows,
            cols,
            indptr,
            indices: keep_idx,
            values: keep_val,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_triplets(dim, dim, (0..dim).map(|i| (i, i, C64::new(1.0, 0.0))).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        let (lo, hi) = (self.indptr[r], self.indptr[r + 1]);
        match self.indices[lo..hi].binary_search(&c) {
            Ok(k) => self.values[lo + k],
            Err(_) => C64::new(0.0, 0.0),
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        (0..self.rows).flat_map(move |r| {
            (self.indptr[r]..self.indptr[r + 1]).map(move |k| (r, self.indices[k], self.values[k]))
        })
    }

    /// `out = self · v`.
    pub fn apply_into(&self, v: &[C64], out: &mut [C64]) {
        assert_eq!(v.len(), self.cols);
        assert_eq!(out.len(), self.rows);
        for (r, o) in out.iter_mut().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for k in self.indptr[r]..self.indptr[r + 1] {
                acc += self.values[k] * v[self.indices[k]];
            }
            *o = acc;
        }
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); self.rows];
        self.apply_into(v, &mut out);
        out
    }

    pub fn apply_state(&self, psi: &FockAmplitudes) -> Vec<C64> {
        self.apply(psi.as_slice())
    }

    pub fn matmul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut trip = Vec::new();
        let mut acc = vec![C64::new(0.0, 0.0); other.cols];
        let mut touched: Vec<usize> = Vec::new();
        for r in 0..self.rows {
            for k in self.indptr[r]..self.indptr[r + 1] {
                let (mid, a) = (self.indices[k], self.values[k]);
                for kk in other.indptr[mid]..other.indptr[mid + 1] {
                    let c = other.indices[kk];
                    if acc[c] == C64::new(0.0, 0.0) {
                        touched.push(c);
                    }
                    acc[c] += a * other.values[kk];
                }
            }
            for &c in &touched {
                trip.push((r, c, acc[c]));
                acc[c] = C64::new(0.0, 0.0);
            }
            touched.clear();
        }
        SparseMatrix::from_triplets(self.rows, other.cols, trip)
    }

    pub fn adjoint(&self) -> SparseMatrix {
        let trip = self.triplets().map(|(r, c, v)| (c, r, v.conj())).collect();
        SparseMatrix::from_triplets(self.cols, self.rows, trip)
    }

    pub fn scale(&self, s: C64) -> SparseMatrix {
        let trip = self.triplets().map(|(r, c, v)| (r, c, v * s)).collect();
        SparseMatrix::from_triplets(self.rows, self.cols, trip)
    }

    /// `Σ wᵢ·Aᵢ` over equally shaped matrices.
    pub fn lincomb(terms: &[(C64, &SparseMatrix)]) -> SparseMatrix {
        let (rows, cols) = (terms[0].1.rows, terms[0].1.cols);
        let mut trip = Vec::new();
        for (w, m) in terms {
            assert_eq!((m.rows, m.cols), (rows, cols));
            trip.extend(m.triplets().map(|(r, c, v)| (r, c, v * w)));
        }
        SparseMatrix::from_triplets(rows, cols, trip)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        Self::lincomb(&[(C64::new(1.0, 0.0), self), (C64::new(-1.0, 0.0), other)])
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        let mut m = DMatrix::from_element(self.rows, self.cols, C64::new(0.0, 0.0));
        for (r, c, v) in self.triplets() {
            m[(r, c)] = v;
        }
        m
    }

    /// Largest `|A[i][j] − B[i][j]|` over `i, j` both in `idx`.
    pub fn max_abs_diff_on(&self, other: &SparseMatrix, idx: &[usize]) -> f64 {
        let d = self.sub(other);
        let mut inside = vec![false; self.rows.max(self.cols)];
        for &i in idx {
            inside[i] = true;
        }
        d.triplets()
            .filter(|(r, c, _)| inside[*r] && inside[*c])
            .map(|(_, _, v)| v.norm())
            .fold(0.0, f64::max)
    }
}

/// Truncated ladder operators of both modes and the coordinate/momentum
/// operators built from them.
///
/// ```text
/// x   = (K₊ + K₋ − iΠ₊ + iΠ₋)/√(2MΩ)      y   = i(K₊ − K₋ + iΠ₊ + iΠ₋)/√(2MΩ)
/// p_x = √(MΩ/8)(Π₊ + Π₋ + iK₊ − iK₋)     p_y = √(MΩ/8)(iΠ₋ − iΠ₊ − K₊ − K₋)
/// Π_x = √(MΩ/2)(Π₊ + Π₋)                 Π_y = √(MΩ/2)(Π₊ − Π₋)/i
/// x₀  = x − Π_y/MΩ                       y₀  = y + Π_x/MΩ
/// ```
#[derive(Debug, Clone)]
pub struct OperatorRep {
    pub params: ModelParams,
    pub pi_plus: SparseMatrix,
    pub pi_minus: SparseMatrix,
    pub k_plus: SparseMatrix,
    pub k_minus: SparseMatrix,
    pub x: SparseMatrix,
    pub y: SparseMatrix,
    pub p_x: SparseMatrix,
    pub p_y: SparseMatrix,
    pub pi_x: SparseMatrix,
    pub pi_y: SparseMatrix,
    pub x0: SparseMatrix,
    pub y0: SparseMatrix,
}

impl OperatorRep {
    pub fn new(params: &ModelParams) -> Result<Self> {
        params.validate()?;
        if params.cutoff_pi < 2 || params.cutoff_k < 2 {
            return Err(Error::Config("operator matrices need cutoffs of at least 2".into()));
        }
        let (np, nk) = (params.cutoff_pi, params.cutoff_k);
        let dim = np * nk;
        let mut pp = Vec::new();
        let mut kp = Vec::new();
        for n in 0..np {
            for m in 0..nk {
                let i = n * nk + m;
                if n + 1 < np {
                    pp.push((i + nk, i, C64::new(((n + 1) as f64).sqrt(), 0.0)));
                }
                if m + 1 < nk {
                    kp.push((i + 1, i, C64::new(((m + 1) as f64).sqrt(), 0.0)));
                }
            }
        }
        let pi_plus = SparseMatrix::from_triplets(dim, dim, pp);
        let k_plus = SparseMatrix::from_triplets(dim, dim, kp);
        let pi_minus = pi_plus.adjoint();
        let k_minus = k_plus.adjoint();

        let mo = params.m_omega;
        let one = C64::new(1.0, 0.0);
        let i = C64::i();
        let r = C64::new(1.0 / (2.0 * mo).sqrt(), 0.0);
        let p = C64::new((mo / 8.0).sqrt(), 0.0);
        let h = C64::new((mo / 2.0).sqrt(), 0.0);

        let x = SparseMatrix::lincomb(&[(r, &k_plus), (r, &k_minus), (-i * r, &pi_plus), (i * r, &pi_minus)]);
        let y = SparseMatrix::lincomb(&[(i * r, &k_plus), (-i * r, &k_minus), (-r, &pi_plus), (-r, &pi_minus)]);
        let p_x = SparseMatrix::lincomb(&[(p, &pi_plus), (p, &pi_minus), (i * p, &k_plus), (-i * p, &k_minus)]);
        let p_y = SparseMatrix::lincomb(&[(i * p, &pi_minus), (-i * p, &pi_plus), (-p, &k_plus), (-p, &k_minus)]);
        let pi_x = SparseMatrix::lincomb(&[(h, &pi_plus), (h, &pi_minus)]);
        let pi_y = SparseMatrix::lincomb(&[(-i * h, &pi_plus), (i * h, &pi_minus)]);
        let inv = C64::new(1.0 / mo, 0.0);
        let x0 = SparseMatrix::lincomb(&[(one, &x), (-inv, &pi_y)]);
        let y0 = SparseMatrix::lincomb(&[(one, &y), (inv, &pi_x)]);

        Ok(Self {
            params: *params,
            pi_plus,
            pi_minus,
            k_plus,
            k_minus,
            x,
            y,
            p_x,
            p_y,
            pi_x,
            pi_y,
            x0,
            y0,
        })
    }

    pub fn dim(&self) -> usize {
        self.params.dim()
    }

    /// Flat indices of the block left after dropping the top `band` levels of each mode.
    pub fn interior(&self, band: usize) -> Vec<usize> {
        super::interior_indices(self.params.cutoff_pi, self.params.cutoff_k, band)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ops(c: usize, mo: f64) -> OperatorRep {
        OperatorRep::new(&ModelParams::new(mo, 1.0, c, c).unwrap()).unwrap()
    }

    #[test]
    fn creation_on_vacuum() {
        let o = ops(2, 1.0);
        let mut v = vec![C64::new(0.0, 0.0); 4];
        v[0] = C64::new(1.0, 0.0);
        let w = o.pi_plus.apply(&v);
        assert_eq!(w[2], C64::new(1.0, 0.0));
        assert_eq!(w.iter().filter(|c| c.norm() > 0.0).count(), 1);
    }

    #[test]
    fn canonical_commutators_on_interior() {
        let o = ops(6, 1.0);
        let inner = o.interior(1);
        let id = SparseMatrix::identity(o.dim());
        assert!(o.pi_minus.commutator(&o.pi_plus).max_abs_diff_on(&id, &inner) < 1e-13);
        assert!(o.k_minus.commutator(&o.k_plus).max_abs_diff_on(&id, &inner) < 1e-13);
        let zero = SparseMatrix::from_triplets(o.dim(), o.dim(), vec![]);
        assert!(o.pi_minus.commutator(&o.k_plus).max_abs_diff_on(&zero, &o.interior(0)) < 1e-15);
    }

    #[test]
    fn guiding_center_commutator() {
        let mo = 2.5;
        let o = ops(6, mo);
        let inner = o.interior(2);
        let target = SparseMatrix::identity(o.dim()).scale(C64::new(0.0, 1.0 / mo));
        assert!(o.x0.commutator(&o.y0).max_abs_diff_on(&target, &inner) < 1e-12);
    }

    #[test]
    fn adjoint_and_dense_agree() {
        let o = ops(3, 1.0);
        let d = o.pi_plus.to_dense();
        assert_eq!(d.adjoint(), o.pi_minus.to_dense());
        assert!(matches!(
            OperatorRep::new(&ModelParams::new(1.0, 1.0, 1, 4).unwrap()),
            Err(Error::Config(_))
        ));
    }
}
