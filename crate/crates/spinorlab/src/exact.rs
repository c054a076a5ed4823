//! Exact matrices over the Gaussian integers, for identities that should hold with zero tolerance.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex;

pub type GaussInt = Complex<i64>;

pub fn gi(re: i64, im: i64) -> GaussInt {
    Complex::new(re, im)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussMatrix {
    n: usize,
    data: Vec<GaussInt>,
}

impl GaussMatrix {
    pub fn zeros(n: usize) -> Self {
        GaussMatrix { n, data: vec![gi(0, 0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| gi((i == j) as i64, 0))
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> GaussInt) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        GaussMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> GaussInt {
        self.data[i * self.n + j]
    }

    pub fn scale(&self, s: GaussInt) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) * s)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.re == 0 && z.im == 0)
    }

    pub fn to_f64(&self) -> crate::matrix::MatrixC {
        crate::matrix::MatrixC::from_fn(self.n, self.n, |i, j| {
            let z = self.get(i, j);
            crate::matrix::c(z.re as f64, z.im as f64)
        })
    }
}

impl Mul for &GaussMatrix {
    type Output = GaussMatrix;
    fn mul(self, rhs: &GaussMatrix) -> GaussMatrix {
        assert_eq!(self.n, rhs.n);
        GaussMatrix::from_fn(self.n, |i, j| (0..self.n).map(|k| self.get(i, k) * rhs.get(k, j)).sum())
    }
}

impl Add for &GaussMatrix {
    type Output = GaussMatrix;
    fn add(self, rhs: &GaussMatrix) -> GaussMatrix {
        GaussMatrix::from_fn(self.n, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &GaussMatrix {
    type Output = GaussMatrix;
    fn sub(self, rhs: &GaussMatrix) -> GaussMatrix {
        GaussMatrix::from_fn(self.n, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

/// Cartesian spin-1 matrices `(S_i)_{jk} = −i ε_{ijk}`.
pub fn spin1_cartesian() -> [GaussMatrix; 3] {
    std::array::from_fn(|a| GaussMatrix::from_fn(3, |j, k| gi(0, -levi_civita(a, j, k))))
}

/// Pauli matrices.
pub fn pauli() -> [GaussMatrix; 3] {
    let o = gi(0, 0);
    let mk = |v: [GaussInt; 4]| GaussMatrix::from_fn(2, |i, j| v[2 * i + j]);
    [
        mk([o, gi(1, 0), gi(1, 0), o]),
        mk([o, gi(0, -1), gi(0, 1), o]),
        mk([gi(1, 0), o, o, gi(-1, 0)]),
    ]
}

pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// `Σ p_i M_i` for integer `p`.
pub fn dot(ms: &[GaussMatrix; 3], p: [i64; 3]) -> GaussMatrix {
    let n = ms[0].dim();
    GaussMatrix::from_fn(n, |i, j| (0..3).map(|a| ms[a].get(i, j) * p[a]).sum())
}

/// `(S·p)² − (p² I − p pᵀ)`, exactly.
pub fn spin1_square_defect(p: [i64; 3]) -> GaussMatrix {
    let sp = dot(&spin1_cartesian(), p);
    let p2: i64 = p.iter().map(|x| x * x).sum();
    let rhs = GaussMatrix::from_fn(3, |i, j| gi(p2 * (i == j) as i64 - p[i] * p[j], 0));
    &(&sp * &sp) - &rhs
}

/// `(S·k)²|k|²`-scaled reflection `R|k|² = |k|² I − 2 (S·k)²` (integer valued).
pub fn scaled_reflection(k: [i64; 3]) -> GaussMatrix {
    let sk = dot(&spin1_cartesian(), k);
    let k2: i64 = k.iter().map(|x| x * x).sum();
    &GaussMatrix::identity(3).scale(gi(k2, 0)) - &(&sk * &sk).scale(gi(2, 0))
}

/// `(R|k|²)² − |k|⁴ I`: zero iff `R² = I`.
pub fn reflection_involution_defect(k: [i64; 3]) -> GaussMatrix {
    let r = scaled_reflection(k);
    let k2: i64 = k.iter().map(|x| x * x).sum();
    &(&r * &r) - &GaussMatrix::identity(3).scale(gi(k2 * k2, 0))
}

/// `(i σ·k)(−i σ·k) − k² I`: zero iff the Dirac b†/a relations compose to the identity.
pub fn dirac_relation_defect(k: [i64; 3]) -> GaussMatrix {
    let sk = dot(&pauli(), k);
    let k2: i64 = k.iter().map(|x| x * x).sum();
    let lhs = &sk.scale(gi(0, 1)) * &sk.scale(gi(0, -1));
    &lhs - &GaussMatrix::identity(2).scale(gi(k2, 0))
}

/// `S₁² + S₂² + S₃² − 2I`.
pub fn casimir_defect() -> GaussMatrix {
    let s = spin1_cartesian();
    let sum = &(&(&s[0] * &s[0]) + &(&s[1] * &s[1])) + &(&s[2] * &s[2]);
    &sum - &GaussMatrix::identity(3).scale(gi(2, 0))
}
