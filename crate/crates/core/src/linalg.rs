//! Dense complex matrices and the few factorizations the solvers need.
//!
//! Storage is column-major so that per-user channel and precoder columns
//! are contiguous slices. Nothing here tries to be a general linear-algebra
//! library; it is exactly the kernel set used by the precoding solvers:
//! products, Gram matrices, and a Cholesky factorization of Hermitian
//! positive-definite matrices.

use crate::error::{Error, Result};
use crate::scalar::Real;
use num_complex::Complex;

/// Dense complex matrix, column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    /// Build from a function of (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = CMat::zeros(rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m.data[c * rows + r] = f(r, c);
            }
        }
        m
    }

    /// Build from columns; all columns must share a length.
    pub fn from_cols(cols: &[Vec<Complex<T>>]) -> Result<Self> {
        let n = cols.len();
        if n == 0 {
            return Err(Error::config("matrix needs at least one column"));
        }
        let rows = cols[0].len();
        if cols.iter().any(|c| c.len() != rows) {
            return Err(Error::config("ragged column lengths"));
        }
        let mut m = CMat::zeros(rows, n);
        for (k, col) in cols.iter().enumerate() {
            m.col_mut(k).copy_from_slice(col);
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex<T> {
        self.data[c * self.rows + r]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex<T>) {
        self.data[c * self.rows + r] = v;
    }

    /// Column `k` as a contiguous slice.
    #[inline]
    pub fn col(&self, k: usize) -> &[Complex<T>] {
        &self.data[k * self.rows..(k + 1) * self.rows]
    }

    #[inline]
    pub fn col_mut(&mut self, k: usize) -> &mut [Complex<T>] {
        &mut self.data[k * self.rows..(k + 1) * self.rows]
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn scale(&self, s: T) -> Self {
        let mut out = self.clone();
        for z in &mut out.data {
            *z = Complex::new(z.re * s, z.im * s);
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        CMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    /// `self * other`.
    pub fn matmul(&self, other: &CMat<T>) -> Result<CMat<T>> {
        if self.cols != other.rows {
            return Err(Error::config(format!(
                "matmul dimension mismatch: {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = CMat::zeros(self.rows, other.cols);
        for j in 0..other.cols {
            let bcol = other.col(j);
            let ocol = out.col_mut(j);
            for (k, &b) in bcol.iter().enumerate() {
                if b.re.is_zero() && b.im.is_zero() {
                    continue;
                }
                let acol = self.col(k);
                for (o, &a) in ocol.iter_mut().zip(acol.iter()) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Gram matrix `self† * self` (Hermitian, cols x cols).
    pub fn gram(&self) -> CMat<T> {
        let n = self.cols;
        let mut g = CMat::zeros(n, n);
        for j in 0..n {
            for i in 0..=j {
                let v = dot_conj(self.col(i), self.col(j));
                g.set(i, j, v);
                if i != j {
                    g.set(j, i, v.conj());
                }
            }
        }
        g
    }

    /// Sum of squared magnitudes of all entries.
    pub fn frobenius_sq(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    /// Add `s * v v†` to this square matrix in place.
    pub fn rank1_update(&mut self, v: &[Complex<T>], s: T) {
        debug_assert_eq!(self.rows, self.cols);
        debug_assert_eq!(v.len(), self.rows);
        let n = self.rows;
        for c in 0..n {
            let vc = v[c].conj() * s;
            let col = self.col_mut(c);
            for (r, x) in col.iter_mut().enumerate() {
                *x += v[r] * vc;
            }
        }
    }

    /// Add `s` to the diagonal in place.
    pub fn add_diag(&mut self, s: T) {
        debug_assert_eq!(self.rows, self.cols);
        let n = self.rows;
        for i in 0..n {
            self.data[i * n + i].re += s;
        }
    }
}

/// Conjugated inner product `a† b`.
pub fn dot_conj<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Complex::new(T::zero(), T::zero());
    for (&x, &y) in a.iter().zip(b.iter()) {
        acc += x.conj() * y;
    }
    acc
}

/// Squared Euclidean norm.
pub fn norm_sq<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
}

/// Cholesky factor of a Hermitian positive-definite matrix: `A = L L†`
/// with `L` lower triangular.
///
/// Fails with a numeric error if a pivot is not strictly positive, which is
/// how callers detect loss of positive definiteness.
#[derive(Debug, Clone)]
pub struct Cholesky<T> {
    l: CMat<T>,
}

impl<T: Real> Cholesky<T> {
    pub fn new(a: &CMat<T>) -> Result<Self> {
        if a.rows() != a.cols() {
            return Err(Error::config("cholesky needs a square matrix"));
        }
        let n = a.rows();
        let mut l = CMat::zeros(n, n);
        for j in 0..n {
            let mut d = a.get(j, j).re;
            for k in 0..j {
                d = d - l.get(j, k).norm_sqr();
            }
            if !(d > T::zero()) || !d.is_finite() {
                return Err(Error::numeric(format!(
                    "cholesky pivot {j} not positive ({d})"
                )));
            }
            let djj = d.sqrt();
            l.set(j, j, Complex::new(djj, T::zero()));
            for i in (j + 1)..n {
                let mut s = a.get(i, j);
                for k in 0..j {
                    s = s - l.get(i, k) * l.get(j, k).conj();
                }
                l.set(i, j, s / djj);
            }
        }
        Ok(Cholesky { l })
    }

    /// Solve `A x = b`.
    pub fn solve(&self, b: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.l.rows();
        debug_assert_eq!(b.len(), n);
        // Forward: L y = b
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                let lik = self.l.get(i, k);
                y[i] = y[i] - lik * y[k];
            }
            y[i] = y[i] / self.l.get(i, i);
        }
        // Backward: L† x = y
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                let lki = self.l.get(k, i).conj();
                y[i] = y[i] - lki * y[k];
            }
            y[i] = y[i] / self.l.get(i, i);
        }
        y
    }

    /// Ratio of the largest to smallest diagonal of `L`, squared: a cheap
    /// condition-number estimate for the factored matrix.
    pub fn diag_condition(&self) -> T {
        let n = self.l.rows();
        let mut lo = T::infinity();
        let mut hi = T::zero();
        for i in 0..n {
            let d = self.l.get(i, i).re;
            lo = lo.min(d);
            hi = hi.max(d);
        }
        let r = hi / lo;
        r * r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn rand_cmat(rows: usize, cols: usize, seed: u64) -> CMat<f64> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        CMat::from_fn(rows, cols, |_, _| {
            Complex::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        })
    }

    #[test]
    fn matmul_against_scalar_loop() {
        let a = rand_cmat(4, 3, 1);
        let b = rand_cmat(3, 5, 2);
        let c = a.matmul(&b).unwrap();
        for i in 0..4 {
            for j in 0..5 {
                let mut s = Complex::new(0.0, 0.0);
                for k in 0..3 {
                    s += a.get(i, k) * b.get(k, j);
                }
                assert!((c.get(i, j) - s).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn matmul_dimension_mismatch_is_config_error() {
        let a = rand_cmat(4, 3, 1);
        let b = rand_cmat(4, 2, 2);
        assert!(matches!(a.matmul(&b), Err(Error::Config(_))));
    }

    #[test]
    fn cholesky_solves_hpd_system() {
        let m = rand_cmat(6, 6, 3);
        // A = M†M + I is Hermitian positive definite.
        let mut a = m.adjoint().matmul(&m).unwrap();
        a.add_diag(1.0);
        let b: Vec<Complex<f64>> = (0..6).map(|i| Complex::new(i as f64, -1.0)).collect();
        let ch = Cholesky::new(&a).unwrap();
        let x = ch.solve(&b);
        // Residual check.
        for i in 0..6 {
            let mut ax = Complex::new(0.0, 0.0);
            for j in 0..6 {
                ax += a.get(i, j) * x[j];
            }
            assert!((ax - b[i]).norm() < 1e-10);
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let mut a = CMat::<f64>::identity(3);
        a.set(2, 2, Complex::new(-1.0, 0.0));
        assert!(matches!(Cholesky::new(&a), Err(Error::Numeric(_))));
    }

    #[test]
    fn rank1_update_matches_outer_product() {
        let mut a = CMat::<f64>::zeros(3, 3);
        let v = vec![
            Complex::new(1.0, 2.0),
            Complex::new(-0.5, 0.25),
            Complex::new(0.0, -1.0),
        ];
        a.rank1_update(&v, 2.0);
        for i in 0..3 {
            for j in 0..3 {
                let want = v[i] * v[j].conj() * 2.0;
                assert!((a.get(i, j) - want).norm() < 1e-14);
            }
        }
        // Hermitian by construction.
        for i in 0..3 {
            for j in 0..3 {
                assert!((a.get(i, j) - a.get(j, i).conj()).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn gram_is_adjoint_times_self() {
        let m = rand_cmat(5, 3, 9);
        let g = m.gram();
        let g2 = m.adjoint().matmul(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((g.get(i, j) - g2.get(i, j)).norm() < 1e-12);
            }
        }
    }
}
