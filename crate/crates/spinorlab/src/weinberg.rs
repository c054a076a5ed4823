//! The 2(2S+1) spin-1 theory on (1,0)⊕(0,1) bivectors: Π matrices, the BMW/Weinberg/
//! Tucker–Hammer operator, its dispersion determinant, explicit u/v columns and parity.
//!
//! Six-component order is (Φ₊₁, Φ₀, Φ₋₁, Ξ₊₁, Ξ₀, Ξ₋₁), spin matrices in the S₃ eigenbasis.
//! The BMW γ_{μν} are chiral-type (γ₄₄ off-diagonal); printed u columns live in the standard
//! representation, reached by U₆ = (1/√2)[[I, I], [I, −I]].

use serde::{Deserialize, Serialize};

use crate::algebra::{
    bmw_gamma, boost_about, boost_matrix, dot3, sigma_dot, spin1_spherical, vector_boost, BoostParams, FourMomentum, Rep,
};
use crate::dirac::DiracKind;
use crate::error::{Error, Result};
use crate::matrix::{best_fit_scalar, c, re, vnorm, vscale, vsub, MatrixC, C64, ONE, ZERO};
use crate::poly::{clustered_roots, interpolate_checked, PolynomialC, RootCluster};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rep6 {
    /// γ₄₄ off-diagonal, γ₅ = diag(I, −I)
    Chiral,
    /// γ₄₄ = diag(I, −I), γ₅ off-diagonal
    Standard,
}

/// U₆ with u_std = U₆ u_chiral.
pub fn rep6_change() -> MatrixC {
    let i3 = MatrixC::identity(3);
    MatrixC::block2(&i3, &i3, &i3, &-&i3).scale_re(std::f64::consts::FRAC_1_SQRT_2)
}

fn to_rep(m: &MatrixC, rep: Rep6) -> MatrixC {
    match rep {
        Rep6::Chiral => m.clone(),
        Rep6::Standard => {
            let u = rep6_change();
            &(&u * m) * &u.adjoint()
        }
    }
}

pub fn bmw_gamma6(mu: usize, nu: usize, rep: Rep6) -> Result<MatrixC> {
    Ok(to_rep(&bmw_gamma(mu, nu)?, rep))
}

pub fn gamma5_6(rep: Rep6) -> MatrixC {
    let i3 = MatrixC::identity(3);
    match rep {
        Rep6::Chiral => MatrixC::block_diag(&i3, &-&i3),
        Rep6::Standard => MatrixC::off_diag(&i3, &i3),
    }
}

/// p_α = (𝐩, iE); p·p = 𝐩² − E².
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EuclideanMomentum {
    pub p: [f64; 3],
    pub e: f64,
}

impl EuclideanMomentum {
    pub fn new(p: [f64; 3], e: f64) -> Self {
        EuclideanMomentum { p, e }
    }

    pub fn from_four(p: &FourMomentum) -> Self {
        EuclideanMomentum { p: p.p, e: p.p0() }
    }

    pub fn components(&self) -> [C64; 4] {
        [re(self.p[0]), re(self.p[1]), re(self.p[2]), c(0.0, self.e)]
    }

    pub fn square(&self) -> f64 {
        self.p.iter().map(|x| x * x).sum::<f64>() - self.e * self.e
    }

    pub fn neg(&self) -> Self {
        EuclideanMomentum { p: self.p.map(|x| -x), e: -self.e }
    }
}

/// Σ_{αβ} γ_{αβ} p_α p_β + A (p·p) + B m².
pub fn wth_operator(p: &EuclideanMomentum, a: f64, b: f64, m: f64, rep: Rep6) -> MatrixC {
    let pc = p.components();
    let mut out = MatrixC::identity(6).scale_re(a * p.square() + b * m * m);
    for mu in 1..=4 {
        for nu in 1..=4 {
            let g = bmw_gamma(mu, nu).expect("indices in range");
            out = &out + &g.scale(pc[mu - 1] * pc[nu - 1]);
        }
    }
    to_rep(&out, rep)
}

/// (A, B) of the momentum-space operator from the coordinate operator
/// γ_{μν}∂_μ∂_ν + c_box ∂_μ∂_μ + c_mass m². With p_μ = −i∂_μ every second derivative
/// becomes −p_μp_ν, so the operator is −[γpp + c_box p·p − c_mass m²].
pub fn momentum_space_coefficients(c_box: f64, c_mass: f64) -> (f64, f64) {
    (c_box, -c_mass)
}

/// Tucker–Hammer: γ_{μν}∂_μ∂_ν + ∂_μ∂_μ − 2m².
pub fn tucker_hammer_coefficients() -> (f64, f64) {
    momentum_space_coefficients(1.0, -2.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Spin {
    Half,
    One,
}

/// Π^{(s)}(q) = m^{2s} exp(2Θ q̂·S), or Π̄ with the opposite exponent; tanh Θ = |𝐪|/E.
pub fn pi_matrix(q: &FourMomentum, spin: Spin, bar: bool) -> Result<MatrixC> {
    if q.m <= 0.0 {
        return Err(Error::MasslessBoost);
    }
    let sgn = if bar { -1.0 } else { 1.0 };
    let e = q.e();
    Ok(match spin {
        // m exp(Θ σ·q̂) = E + σ·𝐪
        Spin::Half => &MatrixC::identity(2).scale_re(e) + &sigma_dot(q.p).scale_re(sgn),
        // m² exp(2Θ S·q̂) = m² + 2E S·𝐪 + 2(S·𝐪)²
        Spin::One => {
            let sq = dot3(&spin1_spherical(), q.p);
            &(&MatrixC::identity(3).scale_re(q.m * q.m) + &sq.scale_re(2.0 * e * sgn)) + &(&sq * &sq).scale_re(2.0)
        }
    })
}

/// Representation matrix D(Λ) of a pure boost on the Π index: exp(±θ n̂·S).
pub fn pi_boost(params: &BoostParams, spin: Spin, bar: bool) -> MatrixC {
    let rep = match (spin, bar) {
        (Spin::Half, false) => Rep::HalfZero,
        (Spin::Half, true) => Rep::ZeroHalf,
        (Spin::One, false) => Rep::OneZero,
        (Spin::One, true) => Rep::ZeroOne,
    };
    boost_about(rep, params)
}

/// ‖D Π(q) D† − Π(Λq)‖ / ‖Π(Λq)‖.
pub fn pi_covariance_defect(q: &FourMomentum, params: &BoostParams, spin: Spin, bar: bool) -> Result<f64> {
    let l = vector_boost(params);
    let v = [q.e(), q.p[0], q.p[1], q.p[2]];
    let lv: Vec<f64> = (0..4).map(|i| (0..4).map(|j| l[i][j] * v[j]).sum()).collect();
    let lq = FourMomentum::new(q.m, [lv[1], lv[2], lv[3]]);
    let d = pi_boost(params, spin, bar);
    let lhs = &(&d * &pi_matrix(q, spin, bar)?) * &d.adjoint();
    let rhs = pi_matrix(&lq, spin, bar)?;
    Ok((&lhs - &rhs).max_abs() / rhs.max_abs())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bivector {
    pub components: [C64; 6],
    pub p: FourMomentum,
    pub kind: DiracKind,
    pub sigma: i8,
    pub rep: Rep6,
}

impl Bivector {
    pub fn upper(&self) -> [C64; 3] {
        [self.components[0], self.components[1], self.components[2]]
    }

    pub fn lower(&self) -> [C64; 3] {
        [self.components[3], self.components[4], self.components[5]]
    }

    pub fn in_rep(&self, rep: Rep6) -> Bivector {
        if rep == self.rep {
            return self.clone();
        }
        let u = rep6_change();
        let m = if rep == Rep6::Standard { u } else { u.adjoint() };
        Bivector { components: to6(m.apply(&self.components)), rep, ..self.clone() }
    }
}

fn to6(v: Vec<C64>) -> [C64; 6] {
    std::array::from_fn(|i| v[i])
}

fn sigma_index(sigma: i8) -> Result<usize> {
    match sigma {
        1 => Ok(0),
        0 => Ok(1),
        -1 => Ok(2),
        s => Err(Error::InvalidIndex(format!("spin-1 projection {s}"))),
    }
}

/// The printed standard-representation u_σ(𝐩) columns, p± = p_x ± i p_y.
pub fn u1_printed(p: &FourMomentum, sigma: i8) -> Result<[C64; 6]> {
    if p.m <= 0.0 {
        return Err(Error::MasslessBoost);
    }
    sigma_index(sigma)?;
    let (m, e, pz) = (p.m, p.e(), p.p[2]);
    let pp = c(p.p[0], p.p[1]);
    let pm = c(p.p[0], -p.p[1]);
    let em = e + m;
    let r2 = std::f64::consts::SQRT_2;
    let pz_c = re(pz);
    Ok(match sigma {
        1 => [
            re(m) + (2.0 * pz * pz + pp * pm) / (2.0 * em),
            pz * pp / (r2 * em),
            pp * pp / (2.0 * em),
            pz_c,
            pp / r2,
            ZERO,
        ],
        0 => [pz * pm / (r2 * em), re(m) + pp * pm / em, -pz * pp / (r2 * em), pm / r2, ZERO, pp / r2],
        _ => [
            pm * pm / (2.0 * em),
            -pz * pm / (r2 * em),
            re(m) + (2.0 * pz * pz + pp * pm) / (2.0 * em),
            ZERO,
            pm / r2,
            -pz_c,
        ],
    })
}

pub fn u1_spinor(p: &FourMomentum, sigma: i8, rep: Rep6) -> Result<Bivector> {
    let b = Bivector { components: u1_printed(p, sigma)?, p: *p, kind: DiracKind::U, sigma, rep: Rep6::Standard };
    Ok(b.in_rep(rep))
}

/// v_σ = γ₅ u_σ.
pub fn v1_spinor(p: &FourMomentum, sigma: i8, rep: Rep6) -> Result<Bivector> {
    let u = u1_spinor(p, sigma, rep)?;
    Ok(Bivector { components: to6(gamma5_6(rep).apply(&u.components)), kind: DiracKind::V, ..u })
}

pub fn boson_spinor(p: &FourMomentum, kind: DiracKind, sigma: i8, rep: Rep6) -> Result<Bivector> {
    match kind {
        DiracKind::U => u1_spinor(p, sigma, rep),
        DiracKind::V => v1_spinor(p, sigma, rep),
    }
}

/// u_σ(𝐩) as (m Λ_R e_σ, m Λ_L e_σ)/√2 with Λ_{R,L} = exp(±Θ S·n̂), mapped to `rep`.
pub fn u1_boosted(p: &FourMomentum, sigma: i8, rep: Rep6) -> Result<Bivector> {
    let k = sigma_index(sigma)?;
    let mut e = [ZERO; 3];
    e[k] = re(p.m * std::f64::consts::FRAC_1_SQRT_2);
    let phi = boost_matrix(Rep::OneZero, p)?.apply(&e);
    let xi = boost_matrix(Rep::ZeroOne, p)?.apply(&e);
    let comps = [phi[0], phi[1], phi[2], xi[0], xi[1], xi[2]];
    let b = Bivector { components: comps, p: *p, kind: DiracKind::U, sigma, rep: Rep6::Chiral };
    Ok(b.in_rep(rep))
}

/// ‖Π̄(p)Φ − m²Ξ‖ and ‖Π(p)Ξ − m²Φ‖ (chiral components), relative to m²‖ψ‖.
pub fn coupled_residual(psi: &Bivector) -> Result<[f64; 2]> {
    let ch = psi.in_rep(Rep6::Chiral);
    let (phi, xi) = (ch.upper(), ch.lower());
    let m2 = psi.p.m * psi.p.m;
    let scale = m2 * vnorm(&ch.components);
    let pi = pi_matrix(&psi.p, Spin::One, false)?;
    let pibar = pi_matrix(&psi.p, Spin::One, true)?;
    let r1 = vnorm(&vsub(&pibar.apply(&phi), &vscale(&xi, re(m2))));
    let r2 = vnorm(&vsub(&pi.apply(&xi), &vscale(&phi, re(m2))));
    Ok([r1 / scale, r2 / scale])
}

/// ‖O(A,B)ψ‖ / (E²‖ψ‖) at the on-shell momentum of ψ.
pub fn wth_residual(psi: &Bivector, a: f64, b: f64) -> f64 {
    let p = &psi.p;
    let op = wth_operator(&EuclideanMomentum::from_four(p), a, b, p.m, psi.rep);
    vnorm(&op.apply(&psi.components)) / (p.e() * p.e() * vnorm(&psi.components))
}

/// B such that O(A, B) annihilates ψ, by projecting O(A, 0)ψ on ψ; with the relative
/// residual left over.
pub fn mass_coefficient_for(psi: &Bivector, a: f64) -> (f64, f64) {
    let p = &psi.p;
    let op = wth_operator(&EuclideanMomentum::from_four(p), a, 0.0, p.m, psi.rep);
    let r = op.apply(&psi.components);
    // O(A,0)ψ = −B m² ψ
    let (lam, defect) = best_fit_scalar(&r, &psi.components);
    let b = -lam.re / (p.m * p.m);
    let residual = if lam.im.abs() > 1e-9 * lam.norm().max(1.0) { f64::INFINITY } else { defect };
    (b, residual)
}

/// P ψ(𝐩) = γ₄₄ ψ(−𝐩) for a combination Σ c·(kind, σ) at `p`; returns ±1 when ψ is an
/// eigenstate, `None` otherwise.
pub fn boson_parity(terms: &[(C64, DiracKind, i8)], p: &FourMomentum, tol: f64) -> Result<Option<f64>> {
    let build = |q: &FourMomentum| -> Result<Vec<C64>> {
        let mut acc = vec![ZERO; 6];
        for &(coef, kind, sigma) in terms {
            let b = boson_spinor(q, kind, sigma, Rep6::Standard)?;
            for (x, y) in acc.iter_mut().zip(b.components) {
                *x += coef * y;
            }
        }
        Ok(acc)
    };
    let psi = build(p)?;
    let g44 = bmw_gamma6(4, 4, Rep6::Standard)?;
    let img = g44.apply(&build(&p.reflected())?);
    let (lam, defect) = best_fit_scalar(&img, &psi);
    if defect > tol {
        return Ok(None);
    }
    for s in [1.0, -1.0] {
        if (lam - re(s)).norm() <= tol {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

pub fn boson_parity_of(psi: &Bivector, tol: f64) -> Result<Option<f64>> {
    boson_parity(&[(ONE, psi.kind, psi.sigma)], &psi.p, tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootClass {
    /// E² = 𝐩² + m²
    Relativistic,
    /// E = 0
    Acausal,
    Other,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifiedRoot {
    pub energy: C64,
    pub multiplicity: usize,
    /// E² − 𝐩² − m², in units of m²
    pub shell_defect: f64,
    pub class: RootClass,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DispersionSpectrum {
    pub a: f64,
    pub b: f64,
    pub p: [f64; 3],
    pub m: f64,
    /// degree in E after dropping negligible leading coefficients
    pub degree: usize,
    pub polynomial: PolynomialC,
    pub fit_misfit: f64,
    pub roots: Vec<ClassifiedRoot>,
}

impl DispersionSpectrum {
    pub fn all_relativistic(&self) -> bool {
        self.roots.iter().all(|r| r.class == RootClass::Relativistic)
    }

    pub fn has_zero_root(&self) -> bool {
        self.roots.iter().any(|r| r.class == RootClass::Acausal)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn max_shell_defect(&self) -> f64 {
        self.roots.iter().map(|r| r.shell_defect).fold(0.0, f64::max)
    }
}

/// Relative tolerance on |E² − 𝐩² − m²|/m² for calling a root relativistic.
pub const SHELL_TOL: f64 = 1e-8;

/// Det O(A,B) as a polynomial in E from 13 Chebyshev samples scaled by √(𝐩² + m²), then its
/// roots with multiplicities.
pub fn dispersion_spectrum(a: f64, b: f64, pvec: [f64; 3], m: f64) -> Result<DispersionSpectrum> {
    let p2: f64 = pvec.iter().map(|x| x * x).sum();
    let scale = (p2 + m * m).sqrt();
    if scale == 0.0 {
        return Err(Error::Invalid("dispersion at 𝐩 = 0 with m = 0".into()));
    }
    let det = |e: f64| {
        wth_operator(&EuclideanMomentum::new(pvec, e), a, b, m, Rep6::Chiral)
            .det()
            .unwrap_or(ZERO)
    };
    let (poly, misfit) = interpolate_checked(det, 13, scale)?;
    let poly = poly.trimmed(scale, 1e-10);
    // a k-fold root splits by ~ε^{1/k}; six-fold roots (Weinberg at |𝐩| = m) need a wide radius
    let clusters: Vec<RootCluster> = if poly.degree() == 0 { Vec::new() } else { clustered_roots(&poly, 1e-2 * scale)? };
    let m2 = (m * m).max(f64::MIN_POSITIVE);
    let roots = clusters
        .into_iter()
        .map(|cl| {
            let e = cl.center;
            let shell_defect = (e * e - p2 - m * m).norm() / m2;
            let class = if shell_defect <= SHELL_TOL {
                RootClass::Relativistic
            } else if e.norm() <= 1e-8 * scale {
                RootClass::Acausal
            } else {
                RootClass::Other
            };
            ClassifiedRoot { energy: e, multiplicity: cl.multiplicity, shell_defect, class }
        })
        .collect();
    Ok(DispersionSpectrum { a, b, p: pvec, m, degree: poly.degree(), polynomial: poly, fit_misfit: misfit, roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vdiff;
    use crate::sampling::{random_moving_momentum, rng_for, unit_vector};
    use rand::Rng;

    const TOL: f64 = 1e-10;

    fn p0() -> FourMomentum {
        FourMomentum::new(1.4, [0.7, -1.1, 2.3])
    }

    #[test]
    fn rest_columns() {
        let rest = FourMomentum::rest(2.0);
        let u = u1_printed(&rest, 1).unwrap();
        assert!(vdiff(&u, &[re(2.0), ZERO, ZERO, ZERO, ZERO, ZERO]) == 0.0);
        let z = FourMomentum::new(1.0, [0.0, 0.0, 0.8]);
        let u0 = u1_printed(&z, 0).unwrap();
        assert!(vdiff(&u0, &[ZERO, re(1.0), ZERO, ZERO, ZERO, ZERO]) < 1e-15);
        // chiral rest: upper and lower triples coincide for u
        let ch = u1_spinor(&rest, -1, Rep6::Chiral).unwrap();
        assert!(vdiff(&ch.upper(), &ch.lower()) < 1e-15);
        assert!(u1_printed(&FourMomentum::rest(0.0), 1).is_err());
        assert!(u1_printed(&rest, 2).is_err());
    }

    #[test]
    fn printed_columns_match_boost_path() {
        for i in 0..50 {
            let p = random_moving_momentum(3, i);
            for s in [1, 0, -1] {
                let a = u1_spinor(&p, s, Rep6::Standard).unwrap();
                let b = u1_boosted(&p, s, Rep6::Standard).unwrap();
                assert!(vdiff(&a.components, &b.components) <= 1e-9 * p.e(), "{s} {p:?}");
            }
        }
    }

    #[test]
    fn tucker_hammer_point() {
        assert_eq!(tucker_hammer_coefficients(), (1.0, 2.0));
        let (a, b) = tucker_hammer_coefficients();
        for s in [1, 0, -1] {
            for rep in [Rep6::Chiral, Rep6::Standard] {
                let u = u1_spinor(&p0(), s, rep).unwrap();
                assert!(wth_residual(&u, a, b) < TOL);
                let (bu, r) = mass_coefficient_for(&u, 0.3);
                assert!((bu - 1.3).abs() < 1e-10 && r < 1e-10);
                let v = v1_spinor(&p0(), s, rep).unwrap();
                let (bv, r) = mass_coefficient_for(&v, 0.3);
                assert!((bv + 0.7).abs() < 1e-10 && r < 1e-10);
            }
        }
    }

    #[test]
    fn rest_operator() {
        let m: f64 = 1.7;
        let p = EuclideanMomentum::new([0.0; 3], m);
        let (a, b) = (0.4, 2.2);
        let want = &bmw_gamma(4, 4).unwrap().scale_re(-m * m) + &MatrixC::identity(6).scale_re(-a * m * m + b * m * m);
        assert!(wth_operator(&p, a, b, m, Rep6::Chiral).approx_eq(&want, 1e-13));
        let q = EuclideanMomentum::new([0.3, -0.2, 1.0], 2.0);
        assert!(wth_operator(&q, a, b, m, Rep6::Chiral).approx_eq(&wth_operator(&q.neg(), a, b, m, Rep6::Chiral), 1e-13));
    }

    #[test]
    fn pi_matrices() {
        let rest = FourMomentum::rest(1.5);
        assert!(pi_matrix(&rest, Spin::One, false).unwrap().approx_eq(&MatrixC::identity(3).scale_re(2.25), 1e-15));
        let p = p0();
        for spin in [Spin::Half, Spin::One] {
            let pr = &pi_matrix(&p, spin, false).unwrap() * &pi_matrix(&p, spin, true).unwrap();
            let k = if spin == Spin::One { p.m.powi(4) } else { p.m * p.m };
            assert!(pr.approx_eq(&MatrixC::identity(pr.rows()).scale_re(k), 1e-10 * k.max(1.0)));
        }
        // closed form against the exponential series of 2Θ q̂·S
        let bp = BoostParams::from_momentum(&p).unwrap();
        let twice = BoostParams::new(2.0 * bp.rapidity, bp.axis);
        let expo = boost_about(Rep::OneZero, &twice).scale_re(p.m * p.m);
        assert!(pi_matrix(&p, Spin::One, false).unwrap().approx_eq(&expo, 1e-10));
        assert!(pi_matrix(&FourMomentum::rest(0.0), Spin::One, false).is_err());
    }

    #[test]
    fn pi_covariance_random_boosts() {
        for i in 0..100 {
            let q = random_moving_momentum(11, i);
            let mut rng = rng_for(12, i);
            let params = BoostParams::new(rng.gen_range(0.0..2.5), unit_vector(&mut rng));
            for spin in [Spin::Half, Spin::One] {
                for bar in [false, true] {
                    assert!(pi_covariance_defect(&q, &params, spin, bar).unwrap() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn coupled_equations() {
        let rest = u1_spinor(&FourMomentum::rest(1.0), 0, Rep6::Chiral).unwrap();
        assert!(coupled_residual(&rest).unwrap().iter().all(|&r| r < 1e-15));
        for s in [1, 0, -1] {
            let u = u1_spinor(&p0(), s, Rep6::Standard).unwrap();
            assert!(coupled_residual(&u).unwrap().iter().all(|&r| r < 1e-9));
            let v = v1_spinor(&p0(), s, Rep6::Standard).unwrap();
            // v solves the pair with m² → −m²
            let ch = v.in_rep(Rep6::Chiral);
            let m2 = p0().m.powi(2);
            let r = vsub(&pi_matrix(&p0(), Spin::One, true).unwrap().apply(&ch.upper()), &vscale(&ch.lower(), re(-m2)));
            assert!(vnorm(&r) < 1e-9 * m2);
            assert!(coupled_residual(&v).unwrap()[0] > 0.1);
        }
    }

    #[test]
    fn parity() {
        let p = p0();
        for s in [1, 0, -1] {
            assert_eq!(boson_parity_of(&u1_spinor(&p, s, Rep6::Standard).unwrap(), TOL).unwrap(), Some(1.0));
            assert_eq!(boson_parity_of(&v1_spinor(&p, s, Rep6::Standard).unwrap(), TOL).unwrap(), Some(-1.0));
        }
        let mixed = boson_parity(&[(ONE, DiracKind::U, 1), (ONE, DiracKind::V, 1)], &p, TOL).unwrap();
        assert_eq!(mixed, None);
    }

    #[test]
    fn dispersion() {
        let pv = [1.0, 0.0, 0.0];
        let (a, b) = tucker_hammer_coefficients();
        let th = dispersion_spectrum(a, b, pv, 1.0).unwrap();
        assert_eq!(th.degree, 6);
        assert!(th.all_relativistic() && !th.has_zero_root(), "{:#?}", th.roots);
        assert_eq!(th.total_multiplicity(), 6);
        for r in &th.roots {
            assert!((r.energy.norm() - 2f64.sqrt()).abs() < 1e-10);
        }
        // generic (A, B): degree 12; oracle Det = [Bm² − (1+A)s]³[Bm² + (1−A)s]³, s = E² − 𝐩²
        let g = dispersion_spectrum(0.3, 0.8, [0.2, -0.5, 0.9], 1.3).unwrap();
        assert_eq!(g.degree, 12);
        let s_want = [0.8 * 1.69 / 1.3, -0.8 * 1.69 / 0.7];
        let p2 = 0.04 + 0.25 + 0.81;
        for r in &g.roots {
            let s = (r.energy * r.energy).re - p2;
            assert!(s_want.iter().any(|w| (s - w).abs() < 1e-9), "{s}");
            assert_eq!(r.multiplicity, 3);
        }
        // Weinberg (0, 1): tachyonic branch s = −m²
        let w = dispersion_spectrum(0.0, 1.0, pv, 1.0).unwrap();
        assert_eq!(w.degree, 12);
        assert!(!w.all_relativistic());
        assert!(w.roots.iter().any(|r| r.class == RootClass::Acausal));
        let w2 = dispersion_spectrum(0.0, 1.0, [2.0, 0.0, 0.0], 1.0).unwrap();
        assert!(w2.roots.iter().any(|r| r.class == RootClass::Other));
    }
}
