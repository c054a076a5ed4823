//! Small dense complex matrices (up to 8×8 in practice).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `|a - b| <= tol`.
pub fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

/// Row-major complex matrix with fixed shape.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixC {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl MatrixC {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        MatrixC { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_rows<R: AsRef<[C64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let cols = rows[0].as_ref().len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(row.as_ref());
        }
        MatrixC { rows: r, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diag(entries: &[C64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Column vector.
    pub fn column(v: &[C64]) -> Self {
        MatrixC { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// `[[a, b], [c, d]]` from equally sized square blocks.
    pub fn block2(a: &MatrixC, b: &MatrixC, c: &MatrixC, d: &MatrixC) -> Self {
        let n = a.rows;
        assert!(a.is_square() && [b, c, d].iter().all(|x| x.rows == n && x.cols == n));
        Self::from_fn(2 * n, 2 * n, |i, j| {
            let blk = match (i < n, j < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk[(i % n, j % n)]
        })
    }

    pub fn block_diag(a: &MatrixC, d: &MatrixC) -> Self {
        let z = Self::zeros(a.rows, a.cols);
        Self::block2(a, &z, &z, d)
    }

    pub fn off_diag(b: &MatrixC, c: &MatrixC) -> Self {
        let z = Self::zeros(b.rows, b.cols);
        Self::block2(&z, b, c, &z)
    }

    /// Sub-block of size `n×n` starting at `(r0, c0)`.
    pub fn sub_block(&self, r0: usize, c0: usize, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn kron(&self, other: &MatrixC) -> Self {
        let (p, q) = (other.rows, other.cols);
        Self::from_fn(self.rows * p, self.cols * q, |i, j| self[(i / p, j / q)] * other[(i % p, j % q)])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        MatrixC { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn try_mul(&self, rhs: &MatrixC) -> Result<MatrixC> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch { left: self.shape(), right: rhs.shape() });
        }
        let mut out = MatrixC::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &MatrixC) -> Result<MatrixC> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &MatrixC) -> Result<MatrixC> {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &MatrixC, f: impl Fn(C64, C64) -> C64) -> Result<MatrixC> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch { left: self.shape(), right: rhs.shape() });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(MatrixC { rows: self.rows, cols: self.cols, data })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn commutator(&self, rhs: &MatrixC) -> MatrixC {
        &(self * rhs) - &(rhs * self)
    }

    pub fn anticommutator(&self, rhs: &MatrixC) -> MatrixC {
        &(self * rhs) + &(rhs * self)
    }

    /// Frobenius norm of `self - other`.
    pub fn distance(&self, other: &MatrixC) -> f64 {
        (self - other).frobenius()
    }

    pub fn approx_eq(&self, other: &MatrixC, tol: f64) -> bool {
        self.shape() == other.shape() && self.data.iter().zip(&other.data).all(|(&a, &b)| close(a, b, tol))
    }

    /// LU with partial pivoting; returns (lu, permutation, sign) or None if singular.
    fn lu(&self) -> Option<(Vec<C64>, Vec<usize>, f64)> {
        let n = self.rows;
        let mut a = self.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for k in 0..n {
            let piv = (k..n).max_by(|&i, &j| a[i * n + k].norm().total_cmp(&a[j * n + k].norm()))?;
            if a[piv * n + k] == ZERO {
                return None;
            }
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                perm.swap(k, piv);
                sign = -sign;
            }
            let d = a[k * n + k];
            for i in k + 1..n {
                let f = a[i * n + k] / d;
                a[i * n + k] = f;
                for j in k + 1..n {
                    let t = a[k * n + j];
                    a[i * n + j] -= f * t;
                }
            }
        }
        Some((a, perm, sign))
    }

    pub fn det(&self) -> Result<C64> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.shape()));
        }
        let n = self.rows;
        Ok(match self.lu() {
            None => ZERO,
            Some((a, _, sign)) => (0..n).map(|i| a[i * n + i]).product::<C64>() * sign,
        })
    }

    pub fn inverse(&self) -> Result<MatrixC> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.shape()));
        }
        let n = self.rows;
        let (a, perm, _) = self.lu().ok_or(Error::Singular)?;
        let mut inv = MatrixC::zeros(n, n);
        for col in 0..n {
            let mut x: Vec<C64> = (0..n).map(|i| if perm[i] == col { ONE } else { ZERO }).collect();
            for i in 0..n {
                for j in 0..i {
                    let t = a[i * n + j] * x[j];
                    x[i] -= t;
                }
            }
            for i in (0..n).rev() {
                for j in i + 1..n {
                    let t = a[i * n + j] * x[j];
                    x[i] -= t;
                }
                x[i] /= a[i * n + i];
            }
            for i in 0..n {
                inv[(i, col)] = x[i];
            }
        }
        Ok(inv)
    }
}

impl Index<(usize, usize)> for MatrixC {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for MatrixC {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

// Operator impls panic on shape mismatch; use try_* for fallible versions.
impl Mul for &MatrixC {
    type Output = MatrixC;
    fn mul(self, rhs: &MatrixC) -> MatrixC {
        self.try_mul(rhs).expect("shape mismatch in matrix product")
    }
}

impl Add for &MatrixC {
    type Output = MatrixC;
    fn add(self, rhs: &MatrixC) -> MatrixC {
        self.try_add(rhs).expect("shape mismatch in matrix sum")
    }
}

impl Sub for &MatrixC {
    type Output = MatrixC;
    fn sub(self, rhs: &MatrixC) -> MatrixC {
        self.try_sub(rhs).expect("shape mismatch in matrix difference")
    }
}

impl Neg for &MatrixC {
    type Output = MatrixC;
    fn neg(self) -> MatrixC {
        self.map(|z| -z)
    }
}

impl Mul<C64> for &MatrixC {
    type Output = MatrixC;
    fn mul(self, s: C64) -> MatrixC {
        self.scale(s)
    }
}

impl Mul<f64> for &MatrixC {
    type Output = MatrixC;
    fn mul(self, s: f64) -> MatrixC {
        self.scale_re(s)
    }
}

impl fmt::Debug for MatrixC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixC {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:>+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Hermitian inner product `Σ conj(a_i) b_i`.
pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn vnorm(a: &[C64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Max-modulus of `a - b`.
pub fn vdiff(a: &[C64], b: &[C64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn vscale(a: &[C64], s: C64) -> Vec<C64> {
    a.iter().map(|z| z * s).collect()
}

pub fn vadd(a: &[C64], b: &[C64]) -> Vec<C64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[C64], b: &[C64]) -> Vec<C64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vconj(a: &[C64]) -> Vec<C64> {
    a.iter().map(|z| z.conj()).collect()
}

/// Best scalar `c` minimizing `‖a − c·b‖`, together with the relative defect `‖a − c b‖/‖a‖`.
pub fn best_fit_scalar(a: &[C64], b: &[C64]) -> (C64, f64) {
    let bb = inner(b, b).re;
    if bb == 0.0 {
        return (ZERO, if vnorm(a) == 0.0 { 0.0 } else { 1.0 });
    }
    let s = inner(b, a) / bb;
    let resid = vnorm(&vsub(a, &vscale(b, s)));
    let na = vnorm(a);
    (s, if na == 0.0 { 0.0 } else { resid / na })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> MatrixC {
        MatrixC::from_rows(&[
            [c(1.0, 2.0), c(0.5, -1.0), c(3.0, 0.0)],
            [c(-2.0, 0.25), c(1.0, 1.0), c(0.0, -4.0)],
            [c(0.0, 1.0), c(2.0, 0.0), c(1.5, 0.5)],
        ])
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = sample();
        let cof = m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
            - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
            + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)]);
        assert!((m.det().unwrap() - cof).norm() < 1e-12);
    }

    #[test]
    fn inverse_round_trip() {
        let m = sample();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).approx_eq(&MatrixC::identity(3), 1e-12));
    }

    #[test]
    fn singular_has_zero_det() {
        let m = MatrixC::from_rows(&[[ONE, re(2.0)], [re(2.0), re(4.0)]]);
        assert_eq!(m.det().unwrap(), ZERO);
        assert!(matches!(m.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = MatrixC::zeros(2, 3);
        assert!(matches!(a.try_mul(&a), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn kron_shape_and_entries() {
        let a = MatrixC::from_rows(&[[ONE, re(2.0)], [re(3.0), re(4.0)]]);
        let k = a.kron(&MatrixC::identity(2));
        assert_eq!(k.shape(), (4, 4));
        assert_eq!(k[(2, 0)], re(3.0));
        assert_eq!(k[(3, 1)], re(3.0));
        assert_eq!(k[(2, 1)], ZERO);
    }

    #[test]
    fn best_fit_recovers_scalar() {
        let b = vec![c(1.0, 1.0), c(0.0, 2.0)];
        let a = vscale(&b, c(0.0, -3.0));
        let (s, d) = best_fit_scalar(&a, &b);
        assert!((s - c(0.0, -3.0)).norm() < 1e-14 && d < 1e-14);
    }
}
