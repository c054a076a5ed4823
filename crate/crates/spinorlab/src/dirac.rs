//! Dirac u/v spinors in the standard, chiral and helicity bases; normalization, parity, and
//! the Barut two-mass spectrum.

use serde::{Deserialize, Serialize};

use crate::algebra::{boost_matrix, gamma, helicity_spinor, slash, sigma_dot, FourMomentum, GammaBasis, Rep};
use crate::error::{Error, Result};
use crate::matrix::{best_fit_scalar, re, vnorm, vsub, MatrixC, C64, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinorBasis {
    Chiral,
    Standard,
    /// Helicity eigenstates written with the chiral γ table.
    Helicity,
}

impl SpinorBasis {
    pub fn gamma_basis(self) -> GammaBasis {
        match self {
            SpinorBasis::Standard => GammaBasis::Standard,
            SpinorBasis::Chiral | SpinorBasis::Helicity => GammaBasis::Chiral,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiracKind {
    U,
    V,
}

/// Spin projection ±1/2 (or helicity ±1 in the helicity basis).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Half {
    Up,
    Down,
}

impl Half {
    pub fn sign(self) -> i8 {
        match self {
            Half::Up => 1,
            Half::Down => -1,
        }
    }

    pub fn flip(self) -> Half {
        match self {
            Half::Up => Half::Down,
            Half::Down => Half::Up,
        }
    }

    pub const BOTH: [Half; 2] = [Half::Up, Half::Down];
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bispinor {
    pub components: [C64; 4],
    pub basis: SpinorBasis,
    pub p: FourMomentum,
    pub kind: DiracKind,
    pub sigma: Half,
}

impl Bispinor {
    /// Dirac conjugate product `ψ̄ χ = ψ† γ⁰ χ` in this spinor's basis.
    pub fn bar_dot(&self, other: &Bispinor) -> C64 {
        dirac_bar(&self.components, &other.components, self.basis.gamma_basis())
    }
}

/// `ψ† γ⁰ χ`.
pub fn dirac_bar(psi: &[C64], chi: &[C64], basis: GammaBasis) -> C64 {
    let g0 = gamma(0, basis).unwrap();
    let gchi = g0.apply(chi);
    psi.iter().zip(&gchi).map(|(a, b)| a.conj() * b).sum()
}

fn check_mass(p: &FourMomentum) -> Result<()> {
    if p.m <= 0.0 {
        Err(Error::MasslessBoost)
    } else {
        Ok(())
    }
}

/// Closed-form standard-representation columns, normalized to ūu = +1.
fn standard_closed_form(p: &FourMomentum, kind: DiracKind, sigma: Half) -> [C64; 4] {
    let (e, m) = (p.e(), p.m);
    let n = ((e + m) / (2.0 * m)).sqrt();
    let d = e + m;
    let pz = re(p.p[2] / d);
    let (pr, pl) = (p.p_r() / d, p.p_l() / d);
    let col = match (kind, sigma) {
        (DiracKind::U, Half::Up) => [re(1.0), ZERO, pz, pr],
        (DiracKind::U, Half::Down) => [ZERO, re(1.0), pl, -pz],
        (DiracKind::V, Half::Up) => [pz, pr, re(1.0), ZERO],
        (DiracKind::V, Half::Down) => [pl, -pz, ZERO, re(1.0)],
    };
    col.map(|z| z * n)
}

fn helicity_u(p: &FourMomentum, h: Half) -> Result<[C64; 4]> {
    let chi = helicity_spinor(p, h.sign())?;
    let lr = boost_matrix(Rep::HalfZero, p)?.apply(&chi);
    let ll = boost_matrix(Rep::ZeroHalf, p)?.apply(&chi);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Ok([lr[0] * s, lr[1] * s, ll[0] * s, ll[1] * s])
}

fn to_array(v: Vec<C64>) -> [C64; 4] {
    [v[0], v[1], v[2], v[3]]
}

fn build(p: &FourMomentum, kind: DiracKind, sigma: Half, basis: SpinorBasis) -> Result<Bispinor> {
    check_mass(p)?;
    let components = match basis {
        SpinorBasis::Standard => standard_closed_form(p, kind, sigma),
        SpinorBasis::Chiral => {
            let std = standard_closed_form(p, kind, sigma);
            to_array(crate::algebra::basis_change().adjoint().apply(&std))
        }
        SpinorBasis::Helicity => {
            let u = helicity_u(p, sigma)?;
            match kind {
                DiracKind::U => u,
                DiracKind::V => to_array(gamma(5, GammaBasis::Chiral)?.apply(&u)),
            }
        }
    };
    Ok(Bispinor { components, basis, p: *p, kind, sigma })
}

/// Positive-energy solution of `(γ·p − m)u = 0` with ūu = +1.
pub fn u_spinor(p: &FourMomentum, sigma: Half, basis: SpinorBasis) -> Result<Bispinor> {
    build(p, DiracKind::U, sigma, basis)
}

/// `v = γ⁵u`, solving `(γ·p + m)v = 0` with v̄v = −1.
pub fn v_spinor(p: &FourMomentum, sigma: Half, basis: SpinorBasis) -> Result<Bispinor> {
    build(p, DiracKind::V, sigma, basis)
}

pub fn spinor(p: &FourMomentum, kind: DiracKind, sigma: Half, basis: SpinorBasis) -> Result<Bispinor> {
    build(p, kind, sigma, basis)
}

/// `γ·p ∓ m` with `p⁰ = +E`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracOperator {
    pub matrix: MatrixC,
    pub p: FourMomentum,
    pub mass_sign: f64,
}

impl DiracOperator {
    /// `mass_sign = +1` gives `γ·p − m` (annihilates u), `−1` gives `γ·p + m` (annihilates v).
    pub fn new(p: &FourMomentum, mass_sign: f64, basis: GammaBasis) -> Self {
        let ps = slash(p.e(), p.p, basis);
        let matrix = &ps - &MatrixC::identity(4).scale_re(mass_sign * p.m);
        DiracOperator { matrix, p: *p, mass_sign }
    }

    pub fn residual(&self, psi: &[C64]) -> f64 {
        vnorm(&self.matrix.apply(psi))
    }
}

/// ‖(γ·p ∓ m)ψ‖ for the spinor's own kind and basis.
pub fn dirac_residual(psi: &Bispinor) -> f64 {
    let sign = match psi.kind {
        DiracKind::U => 1.0,
        DiracKind::V => -1.0,
    };
    DiracOperator::new(&psi.p, sign, psi.basis.gamma_basis()).residual(&psi.components)
}

/// The chiral-basis matrix form `[[∓m, p₀+σ·p], [p₀−σ·p, ∓m]]`.
pub fn chiral_matrix_form(p: &FourMomentum, mass_sign: f64) -> MatrixC {
    let i2 = MatrixC::identity(2);
    let sp = sigma_dot(p.p);
    let p0 = i2.scale_re(p.e());
    let mm = i2.scale_re(-mass_sign * p.m);
    MatrixC::block2(&mm, &(&p0 + &sp), &(&p0 - &sp), &mm)
}

/// (ūu, v̄v, ūv) as 2×2 matrices indexed by (σ, σ′).
pub fn gram_normalization(p: &FourMomentum, basis: SpinorBasis) -> Result<[MatrixC; 3]> {
    let us = [u_spinor(p, Half::Up, basis)?, u_spinor(p, Half::Down, basis)?];
    let vs = [v_spinor(p, Half::Up, basis)?, v_spinor(p, Half::Down, basis)?];
    let g = |a: &[Bispinor; 2], b: &[Bispinor; 2]| MatrixC::from_fn(2, 2, |i, j| a[i].bar_dot(&b[j]));
    Ok([g(&us, &us), g(&vs, &vs), g(&us, &vs)])
}

/// `γ⁰ ψ(−𝐩)`, rebuilding ψ at the reflected momentum with the same labels.
pub fn parity_apply(psi: &Bispinor) -> Result<Bispinor> {
    let reflected = build(&psi.p.reflected(), psi.kind, psi.sigma, psi.basis)?;
    let g0 = gamma(0, psi.basis.gamma_basis())?;
    Ok(Bispinor { components: to_array(g0.apply(&reflected.components)), ..psi.clone() })
}

/// Best-fit eigenvalue `c` of `Pψ ≈ cψ` with its relative defect.
pub fn parity_fit(psi: &Bispinor) -> Result<(C64, f64)> {
    let pp = parity_apply(psi)?;
    Ok(best_fit_scalar(&pp.components, &psi.components))
}

/// ±1 if ψ is a parity eigenstate within `tol`.
pub fn parity_eigenvalue(psi: &Bispinor, tol: f64) -> Result<Option<f64>> {
    let (cfit, defect) = parity_fit(psi)?;
    Ok((defect <= tol && (cfit.norm() - 1.0).abs() <= tol && cfit.im.abs() <= tol).then_some(cfit.re.signum()))
}

/// Helicity-basis spinors (u₊, u₋, v₊, v₋).
pub fn helicity_spinors(p: &FourMomentum) -> Result<[Bispinor; 4]> {
    if p.p3() == 0.0 {
        return Err(Error::UndefinedHelicity);
    }
    Ok([
        u_spinor(p, Half::Up, SpinorBasis::Helicity)?,
        u_spinor(p, Half::Down, SpinorBasis::Helicity)?,
        v_spinor(p, Half::Up, SpinorBasis::Helicity)?,
        v_spinor(p, Half::Down, SpinorBasis::Helicity)?,
    ])
}

/// `ĥ = (σ·n̂) ⊕ (σ·n̂)`.
pub fn helicity_operator(p: &FourMomentum) -> MatrixC {
    let sn = sigma_dot(p.n_hat());
    MatrixC::block_diag(&sn, &sn)
}

/// Relative norm of `[P̂, ĥ]ψ`, where P̂ includes the reflection 𝐩 → −𝐩.
pub fn parity_helicity_commutator(psi: &Bispinor) -> Result<f64> {
    let h = helicity_operator(&psi.p);
    // P̂(ĥψ): ĥψ is rebuilt at −𝐩 as ĥ(−p)ψ(−p), then γ⁰
    let reflected = build(&psi.p.reflected(), psi.kind, psi.sigma, psi.basis)?;
    let h_ref = helicity_operator(&reflected.p);
    let g0 = gamma(0, psi.basis.gamma_basis())?;
    let p_h = g0.apply(&h_ref.apply(&reflected.components));
    let h_p = h.apply(&parity_apply(psi)?.components);
    Ok(vnorm(&vsub(&p_h, &h_p)) / vnorm(&psi.components))
}

/// 2×2 unitary `W` with `u_h = Σ_σ W_{σh} u_σ` (chiral basis).
pub fn helicity_change_of_basis(p: &FourMomentum) -> Result<MatrixC> {
    let plus = helicity_spinor(p, 1)?;
    let minus = helicity_spinor(p, -1)?;
    Ok(MatrixC::from_rows(&[[plus[0], minus[0]], [plus[1], minus[1]]]))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BarutRoot {
    /// +1 or −1: the sign of the γ⁰W branch at rest.
    pub branch: i8,
    pub mass: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BarutSpectrum {
    pub alpha: f64,
    pub beta: f64,
    pub m: f64,
    pub roots: Vec<BarutRoot>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl BarutSpectrum {
    pub fn masses(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.mass).collect()
    }
}

/// Rest-frame `Det[γ⁰W + αW²/m − β]` (momentum image of `iγ∂ − α∂∂/m − β`, with `∂∂ → −p²`).
pub fn barut_determinant(w: f64, alpha: f64, beta: f64, m: f64) -> f64 {
    let op = &slash(w, [0.0; 3], GammaBasis::Chiral) + &MatrixC::identity(4).scale_re(alpha * w * w / m - beta);
    op.det().unwrap().re
}

/// Eigenvalue branch `±W + αW²/m − β` of the rest-frame operator.
fn barut_branch(branch: f64, w: f64, alpha: f64, beta: f64, m: f64) -> f64 {
    branch * w + alpha * w * w / m - beta
}

const BARUT_SCAN: usize = 10_000;

/// Positive masses W ∈ (0, 10m] of the Barut equation, by dense scan plus bisection on both
/// γ⁰ branches.
pub fn barut_mass_spectrum(alpha: f64, beta: f64, m: f64) -> BarutSpectrum {
    let wmax = 10.0 * m;
    let mut roots = Vec::new();
    for branch in [1.0, -1.0] {
        let f = |w: f64| barut_branch(branch, w, alpha, beta, m);
        let mut prev_w = 0.0;
        let mut prev = f(prev_w);
        for k in 1..=BARUT_SCAN {
            let w = wmax * k as f64 / BARUT_SCAN as f64;
            let cur = f(w);
            if cur == 0.0 {
                roots.push(BarutRoot { branch: branch as i8, mass: w });
            } else if prev != 0.0 && prev.signum() != cur.signum() {
                let (mut lo, mut hi) = (prev_w, w);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if f(mid).signum() == f(lo).signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                    if hi - lo <= f64::EPSILON * hi {
                        break;
                    }
                }
                roots.push(BarutRoot { branch: branch as i8, mass: 0.5 * (lo + hi) });
            }
            prev_w = w;
            prev = cur;
        }
    }
    roots.sort_by(|a, b| a.mass.total_cmp(&b.mass));
    let diagnostic = roots.is_empty().then(|| format!("no positive root in (0, {wmax}] for α={alpha}, β={beta}"));
    BarutSpectrum { alpha, beta, m, roots, diagnostic }
}

/// `‖W†W − I‖` for the helicity change of basis.
pub fn helicity_basis_unitarity(p: &FourMomentum) -> Result<f64> {
    let w = helicity_change_of_basis(p)?;
    Ok((&(&w.adjoint() * &w) - &MatrixC::identity(2)).max_abs())
}

/// `u_h − Σ_σ W_{σh} u_σ` (chiral), max modulus over both helicities.
pub fn helicity_basis_expansion_defect(p: &FourMomentum) -> Result<f64> {
    let w = helicity_change_of_basis(p)?;
    let us = [u_spinor(p, Half::Up, SpinorBasis::Chiral)?, u_spinor(p, Half::Down, SpinorBasis::Chiral)?];
    let mut worst: f64 = 0.0;
    for (j, h) in Half::BOTH.iter().enumerate() {
        let uh = u_spinor(p, *h, SpinorBasis::Helicity)?;
        let comb: Vec<C64> = (0..4).map(|k| w[(0, j)] * us[0].components[k] + w[(1, j)] * us[1].components[k]).collect();
        worst = worst.max(crate::matrix::vdiff(&uh.components, &comb));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{vdiff, vscale, ONE};

    const TOL: f64 = 1e-10;

    fn sample_p() -> FourMomentum {
        FourMomentum::new(1.7, [0.4, -2.2, 1.1])
    }

    /// Independent construction (Λ_R χ, Λ_L χ)/√2 with matrix exponentials via eigen-decomposition
    /// of σ·n̂ (eigenvalues ±1).
    fn oracle_u_chiral(p: &FourMomentum, up: bool) -> Vec<C64> {
        let phi = (p.e() / p.m).acosh();
        let n = p.n_hat();
        let sn = sigma_dot(n);
        let proj_p = (&MatrixC::identity(2) + &sn).scale_re(0.5);
        let proj_m = (&MatrixC::identity(2) - &sn).scale_re(0.5);
        let lr = &proj_p.scale_re((phi / 2.0).exp()) + &proj_m.scale_re((-phi / 2.0).exp());
        let ll = &proj_p.scale_re((-phi / 2.0).exp()) + &proj_m.scale_re((phi / 2.0).exp());
        let chi = if up { [ONE, ZERO] } else { [ZERO, ONE] };
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let a = lr.apply(&chi);
        let b = ll.apply(&chi);
        vec![a[0] * s, a[1] * s, b[0] * s, b[1] * s]
    }

    #[test]
    fn rest_columns() {
        let p = FourMomentum::rest(1.0);
        let u = u_spinor(&p, Half::Up, SpinorBasis::Standard).unwrap();
        assert_eq!(u.components, [ONE, ZERO, ZERO, ZERO]);
        let v = v_spinor(&p, Half::Up, SpinorBasis::Standard).unwrap();
        assert_eq!(v.components, [ZERO, ZERO, ONE, ZERO]);
    }

    #[test]
    fn z_axis_down_column() {
        let p = FourMomentum::new(2.0, [0.0, 0.0, 1.5]);
        let u = u_spinor(&p, Half::Down, SpinorBasis::Standard).unwrap();
        let (e, m) = (p.e(), p.m);
        let n = ((e + m) / (2.0 * m)).sqrt();
        let expect = [ZERO, re(n), ZERO, re(-n * 1.5 / (e + m))];
        assert!(vdiff(&u.components, &expect) < 1e-14);
    }

    #[test]
    fn chiral_matches_boost_oracle() {
        let p = sample_p();
        for (h, up) in [(Half::Up, true), (Half::Down, false)] {
            let u = u_spinor(&p, h, SpinorBasis::Chiral).unwrap();
            assert!(vdiff(&u.components, &oracle_u_chiral(&p, up)) < 1e-12);
            let v = v_spinor(&p, h, SpinorBasis::Chiral).unwrap();
            let g5u = gamma(5, GammaBasis::Chiral).unwrap().apply(&u.components);
            assert!(vdiff(&v.components, &g5u) < 1e-14);
        }
    }

    #[test]
    fn residuals_and_grams_all_bases() {
        let p = sample_p();
        for basis in [SpinorBasis::Chiral, SpinorBasis::Standard, SpinorBasis::Helicity] {
            for h in Half::BOTH {
                assert!(dirac_residual(&u_spinor(&p, h, basis).unwrap()) < TOL);
                assert!(dirac_residual(&v_spinor(&p, h, basis).unwrap()) < TOL);
            }
            let [uu, vv, uv] = gram_normalization(&p, basis).unwrap();
            assert!(uu.approx_eq(&MatrixC::identity(2), TOL), "{basis:?}");
            assert!(vv.approx_eq(&MatrixC::identity(2).scale_re(-1.0), TOL));
            assert!(uv.max_abs() < TOL);
        }
    }

    #[test]
    fn matrix_form_annihilates_chiral_spinors() {
        let p = sample_p();
        for h in Half::BOTH {
            let u = u_spinor(&p, h, SpinorBasis::Chiral).unwrap();
            let v = v_spinor(&p, h, SpinorBasis::Chiral).unwrap();
            assert!(vnorm(&chiral_matrix_form(&p, 1.0).apply(&u.components)) < TOL);
            assert!(vnorm(&chiral_matrix_form(&p, -1.0).apply(&v.components)) < TOL);
        }
    }

    #[test]
    fn parity_eigenvalues() {
        let p = sample_p();
        for basis in [SpinorBasis::Chiral, SpinorBasis::Standard] {
            for h in Half::BOTH {
                let u = u_spinor(&p, h, basis).unwrap();
                let v = v_spinor(&p, h, basis).unwrap();
                assert_eq!(parity_eigenvalue(&u, TOL).unwrap(), Some(1.0));
                assert_eq!(parity_eigenvalue(&v, TOL).unwrap(), Some(-1.0));
                let twice = parity_apply(&parity_apply(&u).unwrap()).unwrap();
                assert!(vdiff(&twice.components, &u.components) < TOL);
            }
        }
        // at rest only γ⁰ acts
        let r = FourMomentum::rest(1.0);
        let u = u_spinor(&r, Half::Down, SpinorBasis::Standard).unwrap();
        assert_eq!(parity_apply(&u).unwrap().components, u.components);
    }

    #[test]
    fn helicity_states_are_not_parity_eigenstates() {
        let p = sample_p();
        let hs = helicity_spinors(&p).unwrap();
        for s in &hs {
            let (_, defect) = parity_fit(s).unwrap();
            assert!(defect > 0.1);
            assert!(parity_helicity_commutator(s).unwrap() > 0.1);
            let h = helicity_operator(&p);
            let hs_ = h.apply(&s.components);
            // v = γ⁵u only flips the lower block sign, which commutes with ĥ
            assert!(vdiff(&hs_, &vscale(&s.components, re(s.sigma.sign() as f64))) < 1e-10);
        }
        assert!(helicity_basis_unitarity(&p).unwrap() < 1e-14);
        assert!(helicity_basis_expansion_defect(&p).unwrap() < 1e-12);
        assert_eq!(helicity_spinors(&FourMomentum::rest(1.0)).unwrap_err(), Error::UndefinedHelicity);
    }

    #[test]
    fn massless_is_rejected() {
        assert_eq!(u_spinor(&FourMomentum::new(0.0, [1.0, 0.0, 0.0]), Half::Up, SpinorBasis::Standard).unwrap_err(), Error::MasslessBoost);
    }

    #[test]
    fn barut_two_masses() {
        let m = 1.0;
        let s = barut_mass_spectrum(1.0, m, m);
        let masses = s.masses();
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert_eq!(masses.len(), 2);
        assert!((masses[0] - golden * m).abs() < 1e-12);
        assert!((masses[1] - (1.0 + golden) * m).abs() < 1e-12);
        // determinant scan oracle: minima of |Det| near the bisected roots
        for w in masses {
            assert!(barut_determinant(w, 1.0, m, m).abs() < 1e-20);
        }
        let dirac = barut_mass_spectrum(0.0, m, m);
        assert_eq!(dirac.roots.len(), 1);
        assert!((dirac.masses()[0] - m).abs() < 1e-12);
    }

    #[test]
    fn barut_empty_spectrum_has_diagnostic() {
        let s = barut_mass_spectrum(1.0, -5.0, 1.0);
        assert!(s.roots.is_empty());
        assert!(s.diagnostic.is_some());
    }
}
