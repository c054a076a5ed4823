//! Fixed matrix tables (Pauli, spin-1, Dirac γ, BMW γ_{μν}), four-momentum kinematics and
//! Wigner boosts for the (S,0) and (0,S) representations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{c, re, MatrixC, C64, I, ONE, ZERO};

/// Metric diag(+,−,−,−).
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

pub fn pauli(i: usize) -> Result<MatrixC> {
    Ok(match i {
        1 => MatrixC::from_rows(&[[ZERO, ONE], [ONE, ZERO]]),
        2 => MatrixC::from_rows(&[[ZERO, -I], [I, ZERO]]),
        3 => MatrixC::diag(&[ONE, -ONE]),
        _ => return Err(Error::InvalidAxis(i)),
    })
}

pub fn pauli_all() -> [MatrixC; 3] {
    std::array::from_fn(|i| pauli(i + 1).unwrap())
}

/// `Σ v_i M_i`.
pub fn dot3(ms: &[MatrixC; 3], v: [f64; 3]) -> MatrixC {
    &(&ms[0].scale_re(v[0]) + &ms[1].scale_re(v[1])) + &ms[2].scale_re(v[2])
}

pub fn sigma_dot(v: [f64; 3]) -> MatrixC {
    dot3(&pauli_all(), v)
}

/// Cartesian spin-1 matrices, `(S_i)_{jk} = −i ε_{ijk}`.
pub fn spin1_matrices() -> [MatrixC; 3] {
    crate::exact::spin1_cartesian().map(|m| m.to_f64())
}

/// Spin-1 matrices in the S₃ eigenbasis ordered (+1, 0, −1).
pub fn spin1_spherical() -> [MatrixC; 3] {
    let r = std::f64::consts::SQRT_2;
    let sp = MatrixC::from_rows(&[[ZERO, re(r), ZERO], [ZERO, ZERO, re(r)], [ZERO, ZERO, ZERO]]);
    let sm = sp.adjoint();
    [
        (&sp + &sm).scale_re(0.5),
        (&sp - &sm).scale(c(0.0, -0.5)),
        MatrixC::diag(&[ONE, ZERO, -ONE]),
    ]
}

/// Unitary `T` with `T† S_cart T = S_sph`; columns are the spherical unit vectors
/// `−(x̂+iŷ)/√2, ẑ, (x̂−iŷ)/√2`.
pub fn spherical_to_cartesian() -> MatrixC {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    MatrixC::from_rows(&[
        [re(-h), ZERO, re(h)],
        [c(0.0, -h), ZERO, c(0.0, -h)],
        [ZERO, ONE, ZERO],
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaBasis {
    /// Weyl/chiral: γ⁰ = offdiag(I, I), γ⁵ = diag(I, −I).
    Chiral,
    /// Dirac/standard: γ⁰ = diag(I, −I).
    Standard,
}

/// `U = (1/√2)[[I, I], [I, −I]]`, mapping chiral to standard: `U γ_ch U† = γ_std`.
pub fn basis_change() -> MatrixC {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    MatrixC::from_rows(&[[re(h), re(h)], [re(h), re(-h)]]).kron(&MatrixC::identity(2))
}

fn gamma_chiral(mu: usize) -> Result<MatrixC> {
    let i2 = MatrixC::identity(2);
    Ok(match mu {
        0 => MatrixC::off_diag(&i2, &i2),
        1..=3 => {
            let s = pauli(mu)?;
            MatrixC::off_diag(&-&s, &s)
        }
        5 => MatrixC::block_diag(&i2, &-&i2),
        _ => return Err(Error::InvalidIndex(mu.to_string())),
    })
}

fn gamma_standard(mu: usize) -> Result<MatrixC> {
    let i2 = MatrixC::identity(2);
    Ok(match mu {
        0 => MatrixC::block_diag(&i2, &-&i2),
        1..=3 => {
            let s = pauli(mu)?;
            MatrixC::off_diag(&s, &-&s)
        }
        5 => MatrixC::off_diag(&i2, &i2),
        _ => return Err(Error::InvalidIndex(mu.to_string())),
    })
}

/// Dirac matrix γ^μ for μ ∈ {0,1,2,3} or γ⁵ for μ = 5.
pub fn gamma(mu: usize, basis: GammaBasis) -> Result<MatrixC> {
    match basis {
        GammaBasis::Chiral => gamma_chiral(mu),
        GammaBasis::Standard => gamma_standard(mu),
    }
}

/// `γ^μ p_μ = p⁰γ⁰ − 𝐩·𝛄`.
pub fn slash(p0: f64, p: [f64; 3], basis: GammaBasis) -> MatrixC {
    let mut out = gamma(0, basis).unwrap().scale_re(p0);
    for (i, &pi) in p.iter().enumerate() {
        out = &out - &gamma(i + 1, basis).unwrap().scale_re(pi);
    }
    out
}

/// Barut–Muzinich–Williams γ_{μν} (Euclidean labels 1..4, 4 time-like) built from the
/// spherical spin-1 matrices.
pub fn bmw_gamma(mu: usize, nu: usize) -> Result<MatrixC> {
    bmw_gamma_with(mu, nu, &spin1_spherical())
}

/// As [`bmw_gamma`] with caller-supplied spin-1 generators.
pub fn bmw_gamma_with(mu: usize, nu: usize, s: &[MatrixC; 3]) -> Result<MatrixC> {
    if !(1..=4).contains(&mu) || !(1..=4).contains(&nu) {
        return Err(Error::InvalidIndex(format!("({mu},{nu})")));
    }
    let i3 = MatrixC::identity(3);
    Ok(match (mu, nu) {
        (4, 4) => MatrixC::off_diag(&i3, &i3),
        (i, 4) | (4, i) => {
            let si = &s[i - 1];
            MatrixC::off_diag(&si.scale(I), &si.scale(-I))
        }
        (i, j) => {
            let (a, b) = (&s[i - 1], &s[j - 1]);
            let d = if i == j { i3.clone() } else { MatrixC::zeros(3, 3) };
            let blk = &(&d - &(a * b)) - &(b * a);
            MatrixC::off_diag(&blk, &blk)
        }
    })
}

/// Four-momentum with mass, 3-momentum and an energy sign; `E = √(𝐩² + m²) ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourMomentum {
    pub m: f64,
    pub p: [f64; 3],
    pub energy_sign: f64,
}

impl FourMomentum {
    pub fn new(m: f64, p: [f64; 3]) -> Self {
        FourMomentum { m, p, energy_sign: 1.0 }
    }

    pub fn rest(m: f64) -> Self {
        Self::new(m, [0.0; 3])
    }

    pub fn with_energy_sign(mut self, sign: f64) -> Self {
        self.energy_sign = sign.signum();
        self
    }

    pub fn e(&self) -> f64 {
        (self.p3_sq() + self.m * self.m).sqrt()
    }

    pub fn p0(&self) -> f64 {
        self.energy_sign * self.e()
    }

    pub fn p3_sq(&self) -> f64 {
        self.p.iter().map(|x| x * x).sum()
    }

    pub fn p3(&self) -> f64 {
        self.p3_sq().sqrt()
    }

    pub fn p_plus(&self) -> f64 {
        self.e() + self.p[2]
    }

    pub fn p_minus(&self) -> f64 {
        self.e() - self.p[2]
    }

    pub fn p_r(&self) -> C64 {
        c(self.p[0], self.p[1])
    }

    pub fn p_l(&self) -> C64 {
        c(self.p[0], -self.p[1])
    }

    /// Unit 3-vector along 𝐩, (0,0,1) at rest.
    pub fn n_hat(&self) -> [f64; 3] {
        let n = self.p3();
        if n == 0.0 {
            [0.0, 0.0, 1.0]
        } else {
            self.p.map(|x| x / n)
        }
    }

    /// Spatial reflection 𝐩 → −𝐩, same energy sign.
    pub fn reflected(&self) -> Self {
        FourMomentum { p: self.p.map(|x| -x), ..*self }
    }

    /// Polar and azimuthal angle of 𝐩; azimuth defaults to 0 on the z-axis.
    pub fn angles(&self) -> (f64, f64) {
        let n = self.n_hat();
        let theta = n[2].clamp(-1.0, 1.0).acos();
        let phi = if self.p[0] == 0.0 && self.p[1] == 0.0 { 0.0 } else { self.p[1].atan2(self.p[0]) };
        (theta, phi)
    }

    pub fn boost_params(&self) -> Result<BoostParams> {
        BoostParams::from_momentum(self)
    }
}

/// Rapidity and axis of the pure boost taking the rest frame to `p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoostParams {
    pub rapidity: f64,
    pub axis: [f64; 3],
}

impl BoostParams {
    pub fn new(rapidity: f64, axis: [f64; 3]) -> Self {
        let n = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        let axis = if n == 0.0 { [0.0, 0.0, 1.0] } else { axis.map(|x| x / n) };
        BoostParams { rapidity, axis }
    }

    pub fn from_momentum(p: &FourMomentum) -> Result<Self> {
        if p.m <= 0.0 {
            return Err(Error::MasslessBoost);
        }
        Ok(BoostParams { rapidity: (p.p3() / p.m).asinh(), axis: p.n_hat() })
    }
}

/// Lorentz representations handled by [`boost_matrix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rep {
    /// (1/2, 0): right-handed, exp(+σ·φ/2).
    HalfZero,
    /// (0, 1/2): left-handed, exp(−σ·φ/2).
    ZeroHalf,
    /// (1, 0): exp(+S·φ), spherical basis.
    OneZero,
    /// (0, 1): exp(−S·φ), spherical basis.
    ZeroOne,
}

impl Rep {
    fn sign(self) -> f64 {
        match self {
            Rep::HalfZero | Rep::OneZero => 1.0,
            Rep::ZeroHalf | Rep::ZeroOne => -1.0,
        }
    }
}

/// Λ_R or Λ_L for the pure boost from rest to `p`, in closed form.
pub fn boost_matrix(rep: Rep, p: &FourMomentum) -> Result<MatrixC> {
    if p.m <= 0.0 {
        return Err(Error::MasslessBoost);
    }
    let (m, e, n) = (p.m, p.e(), p.n_hat());
    let pm = p.p3();
    let s = rep.sign();
    Ok(match rep {
        Rep::HalfZero | Rep::ZeroHalf => {
            // cosh(φ/2) = √((E+m)/2m), sinh(φ/2) = |𝐩|/√(2m(E+m))
            let ch = ((e + m) / (2.0 * m)).sqrt();
            let sh = pm / (2.0 * m * (e + m)).sqrt();
            &MatrixC::identity(2).scale_re(ch) + &sigma_dot(n).scale_re(s * sh)
        }
        Rep::OneZero | Rep::ZeroOne => {
            let sn = dot3(&spin1_spherical(), n);
            let sh = pm / m;
            let chm1 = pm * pm / (m * (e + m));
            &(&MatrixC::identity(3) + &sn.scale_re(s * sh)) + &(&sn * &sn).scale_re(chm1)
        }
    })
}

/// Boost by explicit rapidity about an axis, using the hyperbolic closed forms.
pub fn boost_about(rep: Rep, params: &BoostParams) -> MatrixC {
    let (phi, n, s) = (params.rapidity, params.axis, rep.sign());
    match rep {
        Rep::HalfZero | Rep::ZeroHalf => {
            &MatrixC::identity(2).scale_re((phi / 2.0).cosh()) + &sigma_dot(n).scale_re(s * (phi / 2.0).sinh())
        }
        Rep::OneZero | Rep::ZeroOne => {
            let sn = dot3(&spin1_spherical(), n);
            &(&MatrixC::identity(3) + &sn.scale_re(s * phi.sinh())) + &(&sn * &sn).scale_re(phi.cosh() - 1.0)
        }
    }
}

/// (1/2,1/2) vector boost acting on contravariant (t, x, y, z).
pub fn vector_boost(params: &BoostParams) -> [[f64; 4]; 4] {
    let (ch, sh, n) = (params.rapidity.cosh(), params.rapidity.sinh(), params.axis);
    let mut l = [[0.0; 4]; 4];
    l[0][0] = ch;
    for i in 0..3 {
        l[0][i + 1] = sh * n[i];
        l[i + 1][0] = sh * n[i];
        for j in 0..3 {
            l[i + 1][j + 1] = (i == j) as u8 as f64 + (ch - 1.0) * n[i] * n[j];
        }
    }
    l
}

/// Helicity 2-spinors of σ·n̂ with eigenvalue ±1, in the symmetric half-azimuth convention
/// `χ₊ = (cos θ/2 e^{−iφ/2}, sin θ/2 e^{iφ/2})`, `χ₋ = (−sin θ/2 e^{−iφ/2}, cos θ/2 e^{iφ/2})`.
pub fn helicity_spinor(p: &FourMomentum, h: i8) -> Result<[C64; 2]> {
    if p.p3() == 0.0 {
        return Err(Error::UndefinedHelicity);
    }
    let (theta, phi) = p.angles();
    let (ct, st) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let em = C64::from_polar(1.0, -phi / 2.0);
    let ep = C64::from_polar(1.0, phi / 2.0);
    Ok(if h > 0 { [em * ct, ep * st] } else { [em * (-st), ep * ct] })
}
