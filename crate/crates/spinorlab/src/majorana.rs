//! Self/anti-self charge-conjugate λ and ρ spinors (chiral basis).
//!
//! λ^{S,A} = (±iΘφ_L*, φ_L) and ρ^{S,A} = (φ_R, ∓iΘφ_R*) with Θ = −iσ₂, built from rest
//! 2-spinors √(m/2)·e^{iθ}(1,0) for ↑ and √(m/2)·e^{iθ}(0,1) for ↓.

use serde::{Deserialize, Serialize};

use crate::algebra::{boost_matrix, gamma, helicity_spinor, sigma_dot, slash, FourMomentum, GammaBasis, Rep};
use crate::dirac::{dirac_bar, u_spinor, v_spinor, Half, SpinorBasis};
use crate::error::{Error, Result};
use crate::matrix::{best_fit_scalar, c, re, vconj, vdiff, vnorm, vscale, vsub, MatrixC, C64, I, ONE, ZERO};
use crate::report::{IdentityCheck, VerificationReport, Worst};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Lambda,
    Rho,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConjClass {
    /// self-conjugate, Cψ = +ψ
    S,
    /// anti-self-conjugate, Cψ = −ψ
    A,
}

impl ConjClass {
    pub fn sign(self) -> f64 {
        match self {
            ConjClass::S => 1.0,
            ConjClass::A => -1.0,
        }
    }

    pub fn swap(self) -> ConjClass {
        match self {
            ConjClass::S => ConjClass::A,
            ConjClass::A => ConjClass::S,
        }
    }
}

impl Family {
    pub fn swap(self) -> Family {
        match self {
            Family::Lambda => Family::Rho,
            Family::Rho => Family::Lambda,
        }
    }
}

pub const SPECIES: [(Family, ConjClass, Half); 8] = [
    (Family::Lambda, ConjClass::S, Half::Up),
    (Family::Lambda, ConjClass::S, Half::Down),
    (Family::Lambda, ConjClass::A, Half::Up),
    (Family::Lambda, ConjClass::A, Half::Down),
    (Family::Rho, ConjClass::S, Half::Up),
    (Family::Rho, ConjClass::S, Half::Down),
    (Family::Rho, ConjClass::A, Half::Up),
    (Family::Rho, ConjClass::A, Half::Down),
];

pub fn species_name(f: Family, k: ConjClass, eta: Half) -> String {
    let fam = match f {
        Family::Lambda => "λ",
        Family::Rho => "ρ",
    };
    let e = match eta {
        Half::Up => "↑",
        Half::Down => "↓",
    };
    format!("{fam}^{k:?}_{e}")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MajoranaSpinor {
    pub components: [C64; 4],
    pub family: Family,
    pub class: ConjClass,
    pub eta: Half,
    pub p: FourMomentum,
    pub theta1: f64,
    pub theta2: f64,
}

impl MajoranaSpinor {
    pub fn bar_dot(&self, other: &MajoranaSpinor) -> C64 {
        dirac_bar(&self.components, &other.components, GammaBasis::Chiral)
    }
}

/// Antilinear charge conjugation `ψ ↦ −e^{iθ}γ² ψ*` in the chiral basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeConjugation {
    pub theta: f64,
    pub matrix: MatrixC,
}

impl ChargeConjugation {
    pub fn new(theta: f64) -> Self {
        let g2 = gamma(2, GammaBasis::Chiral).unwrap();
        ChargeConjugation { theta, matrix: g2.scale(-C64::from_polar(1.0, theta)) }
    }

    pub fn apply(&self, psi: &[C64]) -> Vec<C64> {
        self.matrix.apply(&vconj(psi))
    }
}

pub fn charge_conjugate(psi: &[C64; 4], theta: f64) -> [C64; 4] {
    to4(ChargeConjugation::new(theta).apply(psi))
}

fn to4(v: Vec<C64>) -> [C64; 4] {
    [v[0], v[1], v[2], v[3]]
}

/// Θ = −iσ₂ = [[0, −1], [1, 0]].
pub fn theta_matrix() -> MatrixC {
    MatrixC::from_rows(&[[ZERO, -ONE], [ONE, ZERO]])
}

/// `Θ χ*` scaled by `s`.
fn theta_conj(chi: &[C64], s: C64) -> Vec<C64> {
    vscale(&theta_matrix().apply(&vconj(chi)), s)
}

/// Assemble the 4-spinor from the boosted 2-spinor carried by the family.
fn assemble(family: Family, class: ConjClass, two: &[C64]) -> [C64; 4] {
    // λ: lower = φ_L, upper = ±iΘφ_L*. ρ: upper = φ_R, lower = ∓iΘφ_R*.
    let s = class.sign();
    match family {
        Family::Lambda => {
            let up = theta_conj(two, c(0.0, s));
            [up[0], up[1], two[0], two[1]]
        }
        Family::Rho => {
            let lo = theta_conj(two, c(0.0, -s));
            [two[0], two[1], lo[0], lo[1]]
        }
    }
}

fn rest_two_spinor(m: f64, eta: Half, phase: f64) -> [C64; 2] {
    let a = C64::from_polar((m / 2.0).sqrt(), phase);
    match eta {
        Half::Up => [a, ZERO],
        Half::Down => [ZERO, a],
    }
}

/// Build a species at rest from 2-spinors with the given phases (θ₁ on ↑, θ₂ on ↓).
pub fn rest_from_two_spinors(family: Family, class: ConjClass, eta: Half, m: f64, theta1: f64, theta2: f64) -> MajoranaSpinor {
    let phase = match eta {
        Half::Up => theta1,
        Half::Down => theta2,
    };
    let chi = rest_two_spinor(m, eta, phase);
    MajoranaSpinor {
        components: assemble(family, class, &chi),
        family,
        class,
        eta,
        p: FourMomentum::rest(m),
        theta1,
        theta2,
    }
}

/// The rest-frame table: e.g. λ^S_↑(𝟎) = √(m/2)(0, i, 1, 0).
pub fn rest_table(family: Family, class: ConjClass, eta: Half, m: f64) -> [C64; 4] {
    let (o, z) = (ONE, ZERO);
    let col = match (family, class, eta) {
        (Family::Lambda, ConjClass::S, Half::Up) => [z, I, o, z],
        (Family::Lambda, ConjClass::S, Half::Down) => [-I, z, z, o],
        (Family::Lambda, ConjClass::A, Half::Up) => [z, -I, o, z],
        (Family::Lambda, ConjClass::A, Half::Down) => [I, z, z, o],
        (Family::Rho, ConjClass::S, Half::Up) => [o, z, z, -I],
        (Family::Rho, ConjClass::S, Half::Down) => [z, o, I, z],
        (Family::Rho, ConjClass::A, Half::Up) => [o, z, z, I],
        (Family::Rho, ConjClass::A, Half::Down) => [z, o, -I, z],
    };
    col.map(|x| x * (m / 2.0).sqrt())
}

pub fn lambda_rest(class: ConjClass, eta: Half, m: f64) -> MajoranaSpinor {
    from_table(Family::Lambda, class, eta, &FourMomentum::rest(m), rest_table(Family::Lambda, class, eta, m))
}

pub fn rho_rest(class: ConjClass, eta: Half, m: f64) -> MajoranaSpinor {
    from_table(Family::Rho, class, eta, &FourMomentum::rest(m), rest_table(Family::Rho, class, eta, m))
}

fn from_table(family: Family, class: ConjClass, eta: Half, p: &FourMomentum, components: [C64; 4]) -> MajoranaSpinor {
    MajoranaSpinor { components, family, class, eta, p: *p, theta1: 0.0, theta2: 0.0 }
}

/// Boosted closed forms with prefactor 1/(2√(E+m)).
pub fn boosted_table(family: Family, class: ConjClass, eta: Half, p: &FourMomentum) -> [C64; 4] {
    let e = p.e();
    let m = p.m;
    let f = 1.0 / (2.0 * (e + m).sqrt());
    let (pr, pl) = (p.p_r(), p.p_l());
    let pp = re(p.p_plus() + m);
    let pm = re(p.p_minus() + m);
    let col = match (family, class, eta) {
        (Family::Lambda, ConjClass::S, Half::Up) => [I * pl, I * pm, pm, -pr],
        (Family::Lambda, ConjClass::S, Half::Down) => [-I * pp, -I * pr, -pl, pp],
        (Family::Lambda, ConjClass::A, Half::Up) => [-I * pl, -I * pm, pm, -pr],
        (Family::Lambda, ConjClass::A, Half::Down) => [I * pp, I * pr, -pl, pp],
        (Family::Rho, ConjClass::S, Half::Up) => [pp, pr, I * pl, -I * pp],
        (Family::Rho, ConjClass::S, Half::Down) => [pl, pm, I * pm, -I * pr],
        (Family::Rho, ConjClass::A, Half::Up) => [pp, pr, -I * pl, I * pp],
        (Family::Rho, ConjClass::A, Half::Down) => [pl, pm, -I * pm, I * pr],
    };
    col.map(|x| x * f)
}

fn check_mass(p: &FourMomentum) -> Result<()> {
    if p.m <= 0.0 {
        Err(Error::MasslessBoost)
    } else {
        Ok(())
    }
}

/// λ^{class}_η(p) from the closed forms.
pub fn lambda(class: ConjClass, eta: Half, p: &FourMomentum) -> Result<MajoranaSpinor> {
    check_mass(p)?;
    Ok(from_table(Family::Lambda, class, eta, p, boosted_table(Family::Lambda, class, eta, p)))
}

/// ρ^{class}_η(p) from the closed forms.
pub fn rho(class: ConjClass, eta: Half, p: &FourMomentum) -> Result<MajoranaSpinor> {
    check_mass(p)?;
    Ok(from_table(Family::Rho, class, eta, p, boosted_table(Family::Rho, class, eta, p)))
}

pub fn species(family: Family, class: ConjClass, eta: Half, p: &FourMomentum) -> Result<MajoranaSpinor> {
    match family {
        Family::Lambda => lambda(class, eta, p),
        Family::Rho => rho(class, eta, p),
    }
}

/// `blockdiag(Λ_R, Λ_L)`.
pub fn bispinor_boost(p: &FourMomentum) -> Result<MatrixC> {
    Ok(MatrixC::block_diag(&boost_matrix(Rep::HalfZero, p)?, &boost_matrix(Rep::ZeroHalf, p)?))
}

/// The species obtained by boosting the rest spinor built from 2-spinors with phases θ₁, θ₂.
pub fn boosted_with_phases(
    family: Family,
    class: ConjClass,
    eta: Half,
    p: &FourMomentum,
    theta1: f64,
    theta2: f64,
) -> Result<MajoranaSpinor> {
    check_mass(p)?;
    let rest = rest_from_two_spinors(family, class, eta, p.m, theta1, theta2);
    let b = bispinor_boost(p)?;
    Ok(MajoranaSpinor { components: to4(b.apply(&rest.components)), p: *p, ..rest })
}

/// λ (or ρ) built from helicity eigenspinors of σ·n̂: the η = ↑ species uses h = +1.
pub fn helicity_species(family: Family, class: ConjClass, eta: Half, p: &FourMomentum) -> Result<MajoranaSpinor> {
    check_mass(p)?;
    let chi = helicity_spinor(p, eta.sign())?;
    let scale = (p.m / 2.0).sqrt();
    let rep = match family {
        Family::Lambda => Rep::ZeroHalf,
        Family::Rho => Rep::HalfZero,
    };
    let boosted = boost_matrix(rep, p)?.apply(&chi.map(|z| z * scale));
    Ok(MajoranaSpinor {
        components: assemble(family, class, &boosted),
        family,
        class,
        eta,
        p: *p,
        theta1: 0.0,
        theta2: 0.0,
    })
}

/// Result of the parity map: the target species and the measured global phase.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParityImage {
    pub image: MajoranaSpinor,
    pub phase: C64,
    /// Relative defect of `Pψ − phase·target`; nonzero means the phase is not global.
    pub defect: f64,
}

/// `γ⁰ψ(−𝐩)`; compares against the family- and class-swapped species with the same η.
pub fn parity_map(psi: &MajoranaSpinor) -> Result<ParityImage> {
    let reflected = species(psi.family, psi.class, psi.eta, &psi.p.reflected())?;
    let g0 = gamma(0, GammaBasis::Chiral)?;
    let out = to4(g0.apply(&reflected.components));
    let target = species(psi.family.swap(), psi.class.swap(), psi.eta, &psi.p)?;
    let (phase, defect) = best_fit_scalar(&out, &target.components);
    Ok(ParityImage { image: MajoranaSpinor { components: out, ..target }, phase, defect })
}

/// `(cos α ∓ iγ⁵ sin α)ψ`: minus sign for λ, plus sign for ρ.
pub fn chiral_gauge_transform(psi: &MajoranaSpinor, alpha: f64) -> MajoranaSpinor {
    let g5 = gamma(5, GammaBasis::Chiral).unwrap();
    let s = match psi.family {
        Family::Lambda => -1.0,
        Family::Rho => 1.0,
    };
    let op = &MatrixC::identity(4).scale_re(alpha.cos()) + &g5.scale(c(0.0, s * alpha.sin()));
    MajoranaSpinor { components: to4(op.apply(&psi.components)), ..psi.clone() }
}

/// `ĥ = (σ·n̂) ⊕ (σ·n̂)`.
fn helicity_op(p: &FourMomentum) -> MatrixC {
    let sn = sigma_dot(p.n_hat());
    MatrixC::block_diag(&sn, &sn)
}

/// min over s = ±1 of ‖(ĥ − s)ψ‖/‖ψ‖.
pub fn helicity_defect(psi: &MajoranaSpinor) -> f64 {
    let hpsi = helicity_op(&psi.p).apply(&psi.components);
    let n = vnorm(&psi.components);
    [1.0, -1.0]
        .iter()
        .map(|&s| vnorm(&vsub(&hpsi, &vscale(&psi.components, re(s)))) / n)
        .fold(f64::INFINITY, f64::min)
}

/// Bi-orthonormal product tables `ψ̄_a ψ_b` for the λ set and the ρ set, each indexed
/// (S↑, S↓, A↑, A↓), built with 2-spinor phases θ₁ (↑) and θ₂ (↓).
pub fn biorthonormal_grams(p: &FourMomentum, theta1: f64, theta2: f64) -> Result<(MatrixC, MatrixC)> {
    let labels = [(ConjClass::S, Half::Up), (ConjClass::S, Half::Down), (ConjClass::A, Half::Up), (ConjClass::A, Half::Down)];
    let table = |fam: Family| -> Result<MatrixC> {
        let sp: Vec<MajoranaSpinor> = labels
            .iter()
            .map(|&(k, e)| boosted_with_phases(fam, k, e, p, theta1, theta2))
            .collect::<Result<_>>()?;
        Ok(MatrixC::from_fn(4, 4, |i, j| sp[i].bar_dot(&sp[j])))
    };
    Ok((table(Family::Lambda)?, table(Family::Rho)?))
}

/// The printed products at θ₁ = θ₂ = 0 in units of m: λ̄^S_↑λ^S_↓ = −im, etc.; zero elsewhere.
pub fn expected_grams(m: f64) -> (MatrixC, MatrixC) {
    let mut l = MatrixC::zeros(4, 4);
    let mut r = MatrixC::zeros(4, 4);
    let im = c(0.0, m);
    l[(0, 1)] = -im;
    l[(1, 0)] = im;
    l[(2, 3)] = im;
    l[(3, 2)] = -im;
    r[(0, 1)] = im;
    r[(1, 0)] = -im;
    r[(2, 3)] = -im;
    r[(3, 2)] = im;
    (l, r)
}

/// The four relations ρ^S_↑ = −iλ^A_↓, ρ^S_↓ = +iλ^A_↑, ρ^A_↑ = +iλ^S_↓, ρ^A_↓ = −iλ^S_↑.
pub const RHO_LAMBDA: [(ConjClass, Half, ConjClass, Half, f64, &str); 4] = [
    (ConjClass::S, Half::Up, ConjClass::A, Half::Down, -1.0, "ρ^S_↑ = −iλ^A_↓"),
    (ConjClass::S, Half::Down, ConjClass::A, Half::Up, 1.0, "ρ^S_↓ = +iλ^A_↑"),
    (ConjClass::A, Half::Up, ConjClass::S, Half::Down, 1.0, "ρ^A_↑ = +iλ^S_↓"),
    (ConjClass::A, Half::Down, ConjClass::S, Half::Up, -1.0, "ρ^A_↓ = −iλ^S_↑"),
];

/// Max residuals of the four ρ↔λ relations at `p`.
pub fn rho_lambda_residuals(p: &FourMomentum) -> Result<[f64; 4]> {
    let mut out = [0.0; 4];
    for (i, &(rk, re_, lk, le, s, _)) in RHO_LAMBDA.iter().enumerate() {
        let r = rho(rk, re_, p)?;
        let l = lambda(lk, le, p)?;
        out[i] = vdiff(&r.components, &vscale(&l.components, c(0.0, s)));
    }
    Ok(out)
}

pub fn rho_lambda_relations(p: &FourMomentum, tol: f64) -> Result<VerificationReport> {
    let res = rho_lambda_residuals(p)?;
    let ids = RHO_LAMBDA
        .iter()
        .zip(res)
        .enumerate()
        .map(|(i, (rel, r))| IdentityCheck::upper(&format!("majorana.rho_lambda.{i}"), rel.5, r, tol))
        .collect();
    Ok(VerificationReport::new("majorana", 0, 1, tol, ids))
}

/// Frequency signs (s_λS, s_ρA, s_λA, s_ρS): a plane wave ψ(p)e^{−is p·x} turns iγ∂ into sγ·p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrequencyConvention {
    pub lambda_s: i8,
    pub rho_a: i8,
    pub lambda_a: i8,
    pub rho_s: i8,
}

impl FrequencyConvention {
    pub fn all() -> Vec<FrequencyConvention> {
        (0..16)
            .map(|b: u8| {
                let s = |k: u8| if b >> k & 1 == 0 { 1 } else { -1 };
                FrequencyConvention { lambda_s: s(0), rho_a: s(1), lambda_a: s(2), rho_s: s(3) }
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        let f = |s: i8| if s > 0 { "e^{−ip·x}" } else { "e^{+ip·x}" };
        format!(
            "λ^S: {}, ρ^A: {}, λ^A: {}, ρ^S: {}",
            f(self.lambda_s),
            f(self.rho_a),
            f(self.lambda_a),
            f(self.rho_s)
        )
    }
}

/// Residual norms of the four coupled equations for both η under one convention:
/// s γ·p λ^S − mρ^A, s γ·p ρ^A − mλ^S, s γ·p λ^A + mρ^S, s γ·p ρ^S + mλ^A.
pub fn coupled_residuals(p: &FourMomentum, conv: &FrequencyConvention) -> Result<[f64; 4]> {
    let ps = slash(p.e(), p.p, GammaBasis::Chiral);
    let m = p.m;
    let mut out = [0.0f64; 4];
    for eta in Half::BOTH {
        let ls = lambda(ConjClass::S, eta, p)?.components;
        let la = lambda(ConjClass::A, eta, p)?.components;
        let rs = rho(ConjClass::S, eta, p)?.components;
        let ra = rho(ConjClass::A, eta, p)?.components;
        let eq = |s: i8, x: &[C64; 4], ms: f64, y: &[C64; 4]| {
            let lhs = vscale(&ps.apply(x), re(s as f64));
            vnorm(&vsub(&lhs, &vscale(y, re(ms * m))))
        };
        let r = [
            eq(conv.lambda_s, &ls, 1.0, &ra),
            eq(conv.rho_a, &ra, 1.0, &ls),
            eq(conv.lambda_a, &la, -1.0, &rs),
            eq(conv.rho_s, &rs, -1.0, &la),
        ];
        for k in 0..4 {
            out[k] = out[k].max(r[k]);
        }
    }
    Ok(out)
}

/// Γ^μ = offdiag(γ^μ, γ^μ); returns Γ·p (8×8).
pub fn big_gamma_slash(p: &FourMomentum) -> MatrixC {
    let ps = slash(p.e(), p.p, GammaBasis::Chiral);
    MatrixC::off_diag(&ps, &ps)
}

/// Residuals of `[s₊Γ·p − m]Ψ₊` and `[s₋Γ·p + m]Ψ₋`, Ψ₊ = (ρ^A, λ^S), Ψ₋ = (ρ^S, λ^A).
pub fn eight_component_residuals(p: &FourMomentum, s_plus: i8, s_minus: i8) -> Result<[f64; 2]> {
    let gp = big_gamma_slash(p);
    let id = MatrixC::identity(8);
    let op_plus = &gp.scale_re(s_plus as f64) - &id.scale_re(p.m);
    let op_minus = &gp.scale_re(s_minus as f64) + &id.scale_re(p.m);
    let mut out = [0.0f64; 2];
    for eta in Half::BOTH {
        let cat = |a: [C64; 4], b: [C64; 4]| -> Vec<C64> { a.iter().chain(b.iter()).copied().collect() };
        let plus = cat(rho(ConjClass::A, eta, p)?.components, lambda(ConjClass::S, eta, p)?.components);
        let minus = cat(rho(ConjClass::S, eta, p)?.components, lambda(ConjClass::A, eta, p)?.components);
        out[0] = out[0].max(vnorm(&op_plus.apply(&plus)));
        out[1] = out[1].max(vnorm(&op_minus.apply(&minus)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DynamicalOutcome {
    /// Conventions that zero all four equations at every probed momentum.
    pub conventions: Vec<FrequencyConvention>,
    pub max_residual: f64,
    pub eight_plus: f64,
    pub eight_minus: f64,
}

/// Search the 2⁴ frequency-sign assignments over `momenta`; errors if none zeroes all four.
pub fn discover_frequency_convention(momenta: &[FourMomentum], tol: f64) -> Result<DynamicalOutcome> {
    let mut found = Vec::new();
    let mut best = f64::INFINITY;
    for conv in FrequencyConvention::all() {
        let mut w = Worst::default();
        for p in momenta {
            for r in coupled_residuals(p, &conv)? {
                w.push(r);
            }
        }
        best = best.min(w.0);
        if w.0 <= tol {
            found.push((conv, w.0));
        }
    }
    let Some(&(conv, max_residual)) = found.first() else {
        return Err(Error::Invalid(format!(
            "no frequency-sign convention zeroes the coupled equations (best max residual {best:e})"
        )));
    };
    if conv.lambda_s != conv.rho_a || conv.lambda_a != conv.rho_s {
        return Err(Error::Invalid("discovered convention mixes frequencies within an 8-component doublet".into()));
    }
    let mut eight = Worst::default();
    let mut eight_m = Worst::default();
    for p in momenta {
        let [a, b] = eight_component_residuals(p, conv.lambda_s, conv.lambda_a)?;
        eight.push(a);
        eight_m.push(b);
    }
    Ok(DynamicalOutcome {
        conventions: found.into_iter().map(|x| x.0).collect(),
        max_residual,
        eight_plus: eight.0,
        eight_minus: eight_m.0,
    })
}

pub fn dynamical_residuals(p: &FourMomentum, tol: f64) -> Result<VerificationReport> {
    let out = discover_frequency_convention(std::slice::from_ref(p), tol)?;
    let conv = out.conventions[0];
    let ids = vec![
        IdentityCheck::upper("majorana.coupled", "iγ∂λ^S − mρ^A = 0, iγ∂ρ^A − mλ^S = 0, iγ∂λ^A + mρ^S = 0, iγ∂ρ^S + mλ^A = 0", out.max_residual, tol)
            .note(conv.describe()),
        IdentityCheck::upper("majorana.eight_component.plus", "[iΓ∂ − m]Ψ₊ = 0", out.eight_plus, tol),
        IdentityCheck::upper("majorana.eight_component.minus", "[iΓ∂ + m]Ψ₋ = 0", out.eight_minus, tol),
    ];
    Ok(VerificationReport::new("majorana", 0, 1, tol, ids))
}

/// The ½-matrix taking (u₊½, u₋½, v₊½, v₋½) to (λ^S_↑, λ^S_↓, λ^A_↑, λ^A_↓).
pub fn connection_matrix() -> MatrixC {
    let o = ONE;
    MatrixC::from_rows(&[[o, I, -o, I], [-I, o, -I, -o], [o, -I, -o, -I], [I, o, I, -o]]).scale_re(0.5)
}

const LAMBDA_ORDER: [(ConjClass, Half); 4] =
    [(ConjClass::S, Half::Up), (ConjClass::S, Half::Down), (ConjClass::A, Half::Up), (ConjClass::A, Half::Down)];

/// `M·(u₊, u₋, v₊, v₋)` in the chiral basis, one 4-spinor per row of M.
pub fn connection_image(p: &FourMomentum) -> Result<Vec<[C64; 4]>> {
    let dirac = [
        u_spinor(p, Half::Up, SpinorBasis::Chiral)?.components,
        u_spinor(p, Half::Down, SpinorBasis::Chiral)?.components,
        v_spinor(p, Half::Up, SpinorBasis::Chiral)?.components,
        v_spinor(p, Half::Down, SpinorBasis::Chiral)?.components,
    ];
    let m = connection_matrix();
    Ok((0..4)
        .map(|i| std::array::from_fn(|k| (0..4).map(|j| m[(i, j)] * dirac[j][k]).sum()))
        .collect())
}

/// Global constant `c` with λ = c·M(u, v), fixed at rest from the largest component.
pub fn connection_calibration(m: f64) -> Result<C64> {
    let rest = FourMomentum::rest(m);
    let img = connection_image(&rest)?;
    let lam = lambda(ConjClass::S, Half::Up, &rest)?.components;
    let k = (0..4).max_by(|&a, &b| img[0][a].norm().total_cmp(&img[0][b].norm())).unwrap();
    Ok(lam[k] / img[0][k])
}

/// Max componentwise `|λ_i − c·(M(u,v))_i|` at `p` after rest-frame calibration.
pub fn connection_residual(p: &FourMomentum) -> Result<f64> {
    let cal = connection_calibration(p.m)?;
    let img = connection_image(p)?;
    let mut w: f64 = 0.0;
    for (i, &(k, e)) in LAMBDA_ORDER.iter().enumerate() {
        let lam = lambda(k, e, p)?.components;
        w = w.max(vdiff(&lam, &vscale(&img[i], cal)));
    }
    Ok(w)
}

/// Ξ = diag(e^{iφ}, e^{−iφ}) with φ the azimuth of 𝐩.
pub fn xi_matrix(p: &FourMomentum) -> MatrixC {
    let (_, phi) = p.angles();
    MatrixC::diag(&[C64::from_polar(1.0, phi), C64::from_polar(1.0, -phi)])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XiResiduals {
    /// ‖ΞΛ_RΞ⁻¹ − Λ_R*‖, ‖ΞΛ_LΞ⁻¹ − Λ_L*‖
    pub conjugation: [f64; 2],
    /// λ_S′ = λ_A*, λ_S″ = −iλ_S*, λ_S‴ = iγ⁰λ_A*, λ_S^IV = γ⁰λ_S* (max over η)
    pub transforms: [f64; 4],
}

pub fn xi_residuals(p: &FourMomentum) -> Result<XiResiduals> {
    if p.p3() == 0.0 {
        return Err(Error::UndefinedHelicity);
    }
    let xi = xi_matrix(p);
    let xinv = xi.inverse()?;
    let lr = boost_matrix(Rep::HalfZero, p)?;
    let ll = boost_matrix(Rep::ZeroHalf, p)?;
    let conj_res = |l: &MatrixC| (&(&(&xi * l) * &xinv) - &l.conj()).max_abs();
    let z = MatrixC::zeros(2, 2);
    let t1 = MatrixC::block_diag(&xi, &xi);
    let t2 = MatrixC::block_diag(&xi.scale(I), &xi.scale(-I));
    let t3 = MatrixC::off_diag(&xi.scale(I), &xi.scale(I));
    let t4 = MatrixC::block2(&z, &xi, &-&xi, &z);
    let g0 = gamma(0, GammaBasis::Chiral)?;
    let mut tr = [0.0f64; 4];
    for eta in Half::BOTH {
        let ls = helicity_species(Family::Lambda, ConjClass::S, eta, p)?.components;
        let la = helicity_species(Family::Lambda, ConjClass::A, eta, p)?.components;
        let (lsc, lac) = (vconj(&ls), vconj(&la));
        let r = [
            vdiff(&t1.apply(&ls), &lac),
            vdiff(&t2.apply(&ls), &vscale(&lsc, -I)),
            vdiff(&t3.apply(&ls), &vscale(&g0.apply(&lac), I)),
            vdiff(&t4.apply(&ls), &g0.apply(&lsc)),
        ];
        for k in 0..4 {
            tr[k] = tr[k].max(r[k]);
        }
    }
    Ok(XiResiduals { conjugation: [conj_res(&lr), conj_res(&ll)], transforms: tr })
}

pub fn xi_property(p: &FourMomentum, tol: f64) -> Result<VerificationReport> {
    let r = xi_residuals(p)?;
    let ids = vec![
        IdentityCheck::upper("majorana.xi.conjugation.R", "ΞΛ_RΞ⁻¹ = Λ_R*", r.conjugation[0], tol),
        IdentityCheck::upper("majorana.xi.conjugation.L", "ΞΛ_LΞ⁻¹ = Λ_L*", r.conjugation[1], tol),
        IdentityCheck::upper("majorana.xi.prime", "diag(Ξ,Ξ)λ_S = λ_A*", r.transforms[0], tol),
        IdentityCheck::upper("majorana.xi.double_prime", "diag(iΞ,−iΞ)λ_S = −iλ_S*", r.transforms[1], tol),
        IdentityCheck::upper("majorana.xi.triple_prime", "offdiag(iΞ,iΞ)λ_S = iγ⁰λ_A*", r.transforms[2], tol),
        IdentityCheck::upper("majorana.xi.fourth", "[[0,Ξ],[−Ξ,0]]λ_S = γ⁰λ_S*", r.transforms[3], tol),
    ];
    Ok(VerificationReport::new("majorana", 0, 1, tol, ids))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MasslessPoint {
    pub m_over_e: f64,
    /// ‖λ_↑‖/‖λ_↓‖ for the chosen class
    pub ratio: f64,
    /// closed form (E − |𝐩|)/m
    pub expected: f64,
    pub norm_down: f64,
}

/// The helicity-built λ^{class} pair as m → 0 at fixed E = 1 along `n`.
///
/// Uses the spectral form Λ_L χ_± = e^{∓φ/2} χ_± with e^{−φ/2} = √(m/(E+|𝐩|)), which stays
/// accurate when m ≪ E.
pub fn massless_sequence(class: ConjClass, n: [f64; 3], ks: &[i32]) -> Vec<MasslessPoint> {
    ks.iter()
        .map(|&k| {
            let e = 1.0;
            let m = 10f64.powi(-k) * e;
            let pmag = ((e - m) * (e + m)).sqrt();
            let p = FourMomentum::new(m, n.map(|x| x * pmag));
            let shrink = (m / (e + pmag)).sqrt(); // e^{−φ/2}
            let grow = ((e + pmag) / m).sqrt(); // e^{+φ/2}
            let scale = (m / 2.0).sqrt();
            let mk = |eta: Half, f: f64| {
                let chi = helicity_spinor(&p, eta.sign()).unwrap();
                let two = chi.map(|z| z * (scale * f));
                assemble(Family::Lambda, class, &two)
            };
            let up = mk(Half::Up, shrink);
            let down = mk(Half::Down, grow);
            MasslessPoint {
                m_over_e: m / e,
                ratio: vnorm(&up) / vnorm(&down),
                expected: m / (e + pmag),
                norm_down: vnorm(&down),
            }
        })
        .collect()
}

/// Least-squares slope of log(ratio) against log(m/E).
pub fn scaling_exponent(points: &[MasslessPoint]) -> f64 {
    let xs: Vec<f64> = points.iter().map(|p| p.m_over_e.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.ratio.ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

pub fn massless_limit(class: ConjClass, tol: f64) -> VerificationReport {
    let n = [0.48, -0.6, 0.64];
    let pts = massless_sequence(class, n, &[4, 5, 6, 7, 8]);
    let closed = pts.iter().map(|q| ((q.ratio - q.expected) / q.expected).abs()).fold(0.0, f64::max);
    let slope = scaling_exponent(&pts);
    let last = pts.last().unwrap();
    let min_down = pts.iter().map(|q| q.norm_down).fold(f64::INFINITY, f64::min);
    let ids = vec![
        IdentityCheck::upper(
            &format!("majorana.massless.{class:?}.ratio_at_1e-8"),
            "‖λ_↑‖/‖λ_↓‖ → 0 as m → 0",
            last.ratio,
            1e-3,
        ),
        IdentityCheck::upper(
            &format!("majorana.massless.{class:?}.closed_form"),
            "‖λ_↑‖/‖λ_↓‖ = (E − |𝐩|)/m (relative)",
            closed,
            1e-6,
        ),
        IdentityCheck::upper(
            &format!("majorana.massless.{class:?}.exponent"),
            "ratio ∝ (m/E)^1",
            (slope - 1.0).abs(),
            1e-3,
        )
        .note(format!("fitted exponent {slope:.6}")),
        IdentityCheck::lower(&format!("majorana.massless.{class:?}.down_survives"), "‖λ_↓‖ ≥ √E", min_down, 1.0),
    ];
    VerificationReport::new("majorana", 0, pts.len(), tol, ids)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-10;

    fn p0() -> FourMomentum {
        FourMomentum::new(1.3, [0.9, -1.4, 2.2])
    }

    #[test]
    fn charge_conjugation_matrix() {
        let cc = ChargeConjugation::new(0.0);
        let expect = MatrixC::from_rows(&[[ZERO, ZERO, ZERO, -I], [ZERO, ZERO, I, ZERO], [ZERO, I, ZERO, ZERO], [-I, ZERO, ZERO, ZERO]]);
        assert!(cc.matrix.approx_eq(&expect, 1e-15));
    }

    #[test]
    fn rest_tables_from_two_spinors() {
        for (f, k, e) in SPECIES {
            let built = rest_from_two_spinors(f, k, e, 2.0, 0.0, 0.0);
            assert!(vdiff(&built.components, &rest_table(f, k, e, 2.0)) < 1e-15, "{}", species_name(f, k, e));
        }
        // m = 2: λ^S_↑(0) = (0, i, 1, 0)
        assert!(vdiff(&lambda_rest(ConjClass::S, Half::Up, 2.0).components, &[ZERO, I, ONE, ZERO]) < 1e-15);
        let ra = rho_rest(ConjClass::A, Half::Up, 2.0);
        assert!(vdiff(&ra.components, &[ONE, ZERO, ZERO, I]) < 1e-15);
    }

    #[test]
    fn self_conjugacy_and_boost_paths() {
        let p = p0();
        for (f, k, e) in SPECIES {
            let s = species(f, k, e, &p).unwrap();
            let cs = charge_conjugate(&s.components, 0.0);
            assert!(vdiff(&cs, &vscale(&s.components, re(k.sign()))) < TOL);
            let b = boosted_with_phases(f, k, e, &p, 0.0, 0.0).unwrap();
            assert!(vdiff(&b.components, &s.components) < TOL);
        }
        let z = FourMomentum::new(1.0, [0.0, 0.0, 0.7]);
        let l = lambda(ConjClass::S, Half::Up, &z).unwrap();
        let f = 1.0 / (2.0 * (z.e() + 1.0).sqrt());
        let pm = z.p_minus() + 1.0;
        assert!(vdiff(&l.components, &[ZERO, c(0.0, f * pm), re(f * pm), ZERO]) < 1e-14);
    }

    #[test]
    fn grams_match_printed_products() {
        let p = p0();
        let (l, r) = biorthonormal_grams(&p, 0.0, 0.0).unwrap();
        let (el, er) = expected_grams(p.m);
        assert!(l.approx_eq(&el, TOL));
        assert!(r.approx_eq(&er, TOL));
    }

    #[test]
    fn phase_dependence_of_products() {
        // oracle: with φ_a = N e^{iθ₁}(1,0), φ_b = N e^{iθ₂}(0,1) at rest,
        // λ̄^S_↑λ^S_↓ = −2iN²cos(θ₁+θ₂), λ̄^S_↑λ^A_↓ = 2N² sin(θ₁+θ₂)
        let p = p0();
        let m = p.m;
        for &(t1, t2) in &[(0.3, 0.2), (1.0, 0.5707963267948966), (0.0, std::f64::consts::PI)] {
            let (l, _) = biorthonormal_grams(&p, t1, t2).unwrap();
            let s = t1 + t2;
            assert!((l[(0, 1)] - c(0.0, -m * s.cos())).norm() < TOL);
            assert!((l[(0, 3)] - re(m * s.sin())).norm() < TOL);
            assert!(l[(0, 0)].norm() < TOL && l[(0, 2)].norm() < TOL);
        }
    }

    #[test]
    fn parity_swaps_family_and_class() {
        let p = p0();
        for (f, k, e) in SPECIES {
            let img = parity_map(&species(f, k, e, &p).unwrap()).unwrap();
            assert!(img.defect < TOL);
            assert!((img.phase - ONE).norm() < TOL);
            assert_eq!(img.image.family, f.swap());
            assert_eq!(img.image.class, k.swap());
            let back = parity_map(&img.image).unwrap();
            assert_eq!(back.image.family, f);
        }
    }

    #[test]
    fn not_helicity_eigenstates() {
        let p = p0();
        for (f, k, e) in SPECIES {
            assert!(helicity_defect(&species(f, k, e, &p).unwrap()) > 0.1);
        }
    }

    #[test]
    fn rho_lambda() {
        let rep = rho_lambda_relations(&p0(), TOL).unwrap();
        assert_eq!(rep.identities.len(), 4);
        assert!(rep.passed);
        let rest = rho_lambda_residuals(&FourMomentum::rest(1.0)).unwrap();
        assert!(rest.iter().all(|&r| r == 0.0));
    }

    #[test]
    fn unique_frequency_convention() {
        let ps = [p0(), FourMomentum::new(0.4, [-3.0, 0.1, 0.2]), FourMomentum::rest(2.0)];
        let out = discover_frequency_convention(&ps, TOL).unwrap();
        assert_eq!(out.conventions.len(), 1);
        assert_eq!(out.conventions[0], FrequencyConvention { lambda_s: 1, rho_a: 1, lambda_a: -1, rho_s: -1 });
        assert!(out.eight_plus < TOL && out.eight_minus < TOL);
    }

    #[test]
    fn connection() {
        let m = connection_matrix();
        assert_eq!(m[(0, 2)], re(-0.5));
        assert!((&m * &m.adjoint()).approx_eq(&MatrixC::identity(4), 1e-15));
        assert!((m.det().unwrap().norm() - 1.0).abs() < 1e-14);
        let cal = connection_calibration(1.3).unwrap();
        assert!((cal - re(1.3f64.sqrt())).norm() < 1e-14);
        assert!(connection_residual(&p0()).unwrap() < 1e-9);
    }

    #[test]
    fn xi() {
        let rep = xi_property(&p0(), TOL).unwrap();
        assert!(rep.passed, "{:#?}", rep.failures());
        let xz = xi_matrix(&FourMomentum::new(1.0, [0.3, 0.0, 0.5]));
        assert!(xz.approx_eq(&MatrixC::identity(2), 1e-15));
    }

    #[test]
    fn massless() {
        for k in [ConjClass::S, ConjClass::A] {
            let rep = massless_limit(k, TOL);
            assert!(rep.passed, "{:#?}", rep.failures());
        }
    }

    proptest! {
        #[test]
        fn gauge_transform_preserves_class(alpha in -3.2f64..3.2, px in -5.0f64..5.0, py in -5.0f64..5.0, pz in -5.0f64..5.0, m in 0.1f64..5.0) {
            let p = FourMomentum::new(m, [px, py, pz]);
            for (f, k, e) in SPECIES {
                let t = chiral_gauge_transform(&species(f, k, e, &p).unwrap(), alpha);
                let ct = charge_conjugate(&t.components, 0.0);
                prop_assert!(vdiff(&ct, &vscale(&t.components, re(k.sign()))) < 1e-10);
            }
        }

        #[test]
        fn charge_conjugation_is_involution(v in proptest::collection::vec(-3.0f64..3.0, 8), th in 0.0f64..6.3) {
            let psi: [C64; 4] = std::array::from_fn(|i| c(v[2 * i], v[2 * i + 1]));
            let twice = charge_conjugate(&charge_conjugate(&psi, th), th);
            prop_assert!(vdiff(&twice, &psi) < 1e-12);
        }
    }
}
