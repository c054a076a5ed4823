//! Seeded identity suites over random on-shell momenta, one per module.
//!
//! Each suite evaluates its per-sample checks through [`map_indexed`] and folds the results
//! in index order, so reports are identical for the sequential and parallel paths.

use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{BoostParams, FourMomentum, GammaBasis};
use crate::dirac::{dirac_residual, gram_normalization, helicity_basis_unitarity, parity_eigenvalue, spinor, DiracKind, Half, SpinorBasis};
use crate::error::{Error, Result};
use crate::exact;
use crate::exec::{map_indexed, Execution};
use crate::majorana::{
    self, biorthonormal_grams, charge_conjugate, chiral_gauge_transform, connection_residual, discover_frequency_convention,
    expected_grams, parity_map, rho_lambda_residuals, species, xi_residuals, ConjClass, SPECIES,
};
use crate::matrix::{c, re, vdiff, vscale, MatrixC, C64, I, ONE, ZERO};
use crate::maxwell::{
    chiral_mass_dispersion, kg_factorization_defect_exact, kg_factorization_spin1, maxwell_residual, rs_characteristic_roots,
    rs_evolution_residual, FieldTriple, RSVector,
};
use crate::modeexpand::{
    self, cross_gram_defect, dirac_relations, frequency_split, polarization_tetrad, printed_a_matrix, printed_b_matrix,
    reflection_fit, spin1_reflection, tetrad_gram, transversality_defect, vector_a_matrix, vector_b_matrix, ModeSample,
    ReflectionConvention,
};
use crate::report::{IdentityCheck, Least, ReportBundle, VerificationReport, Worst};
use crate::sampling::{random_momentum, random_moving_momentum, rng_for, unit_vector};
use crate::weinberg::{
    boson_parity_of, coupled_residual, dispersion_spectrum, pi_covariance_defect, u1_boosted, u1_printed, u1_spinor, v1_spinor,
    wth_residual, Rep6, Spin,
};

/// Residual bound for the printed spin-1 columns under the wave operator.
pub const WTH_TOL: f64 = 1e-9;
/// Root positions of Det[E ∓ S·𝐩], relative to max(|𝐩|, 1).
pub const ROOT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Dirac,
    Majorana,
    Fock,
    Maxwell,
    Weinberg,
    ModeExpand,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Dirac, Suite::Majorana, Suite::Fock, Suite::Maxwell, Suite::Weinberg, Suite::ModeExpand];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dirac => "dirac",
            Suite::Majorana => "majorana",
            Suite::Fock => "fock",
            Suite::Maxwell => "maxwell",
            Suite::Weinberg => "weinberg",
            Suite::ModeExpand => "modeexpand",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub exec: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 7, samples: 1000, tol: crate::default_tolerance(), exec: Execution::default() }
    }
}

impl SuiteConfig {
    fn report(&self, suite: Suite, ids: Vec<IdentityCheck>) -> VerificationReport {
        VerificationReport::new(suite.name(), self.seed, self.samples, self.tol, ids)
    }
}

/// Independent per-sample stream for auxiliary draws (boosts, phases), separate from the
/// momentum stream.
fn aux_rng(seed: u64, index: usize, salt: u64) -> impl Rng {
    rng_for(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15), index)
}

/// Column-wise maxima of per-sample residual rows, in sample order.
fn sample_max<const N: usize, F>(cfg: &SuiteConfig, f: F) -> Result<[f64; N]>
where
    F: Fn(usize) -> Result<[f64; N]> + Sync + Send,
{
    let rows = map_indexed(cfg.exec, cfg.samples, f);
    let mut w = [Worst::default(); N];
    for r in rows {
        let r = r?;
        for k in 0..N {
            w[k].push(r[k]);
        }
    }
    Ok(w.map(|x| x.0))
}

fn bool_count(b: bool) -> f64 {
    if b {
        0.0
    } else {
        1.0
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<VerificationReport> {
    if cfg.samples == 0 || !(cfg.tol > 0.0) {
        return Err(Error::Invalid("samples must be ≥ 1 and tolerance > 0".into()));
    }
    match suite {
        Suite::Dirac => dirac_suite(cfg),
        Suite::Majorana => majorana_suite(cfg),
        Suite::Fock => fock_suite(cfg),
        Suite::Maxwell => maxwell_suite(cfg),
        Suite::Weinberg => weinberg_suite(cfg),
        Suite::ModeExpand => modeexpand_suite(cfg),
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Result<ReportBundle> {
    let reports = Suite::ALL.iter().map(|s| run_suite(*s, cfg)).collect::<Result<Vec<_>>>()?;
    Ok(ReportBundle::new(cfg.seed, cfg.samples, cfg.tol, reports))
}

// ---------------------------------------------------------------------------

const BASES: [SpinorBasis; 3] = [SpinorBasis::Standard, SpinorBasis::Chiral, SpinorBasis::Helicity];

fn basis_name(b: SpinorBasis) -> &'static str {
    match b {
        SpinorBasis::Standard => "standard",
        SpinorBasis::Chiral => "chiral",
        SpinorBasis::Helicity => "helicity",
    }
}

fn dirac_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    // per basis: wave-equation residual, Gram defect; then parity mismatches, helicity unitarity
    let w: [f64; 8] = sample_max(cfg, |i| {
        let p = random_momentum(cfg.seed, i);
        let mut out = [0.0f64; 8];
        for (b, basis) in BASES.into_iter().enumerate() {
            if basis == SpinorBasis::Helicity && p.p3() == 0.0 {
                continue;
            }
            for kind in [DiracKind::U, DiracKind::V] {
                for s in Half::BOTH {
                    out[2 * b] = out[2 * b].max(dirac_residual(&spinor(&p, kind, s, basis)?));
                }
            }
            let [uu, vv, uv] = gram_normalization(&p, basis)?;
            let id = MatrixC::identity(2);
            let g = (&uu - &id).max_abs().max((&vv + &id).max_abs()).max(uv.max_abs());
            out[2 * b + 1] = g;
        }
        let mut bad = 0.0;
        for basis in [SpinorBasis::Standard, SpinorBasis::Chiral] {
            for s in Half::BOTH {
                let u = spinor(&p, DiracKind::U, s, basis)?;
                let v = spinor(&p, DiracKind::V, s, basis)?;
                bad += bool_count(parity_eigenvalue(&u, cfg.tol)? == Some(1.0));
                bad += bool_count(parity_eigenvalue(&v, cfg.tol)? == Some(-1.0));
            }
        }
        out[6] = bad;
        out[7] = if p.p3() > 0.0 { helicity_basis_unitarity(&p)? } else { 0.0 };
        Ok(out)
    })?;
    let mut ids = Vec::new();
    for (b, basis) in BASES.into_iter().enumerate() {
        let n = basis_name(basis);
        ids.push(IdentityCheck::upper(&format!("dirac.wave_equation.{n}"), "(γ·p − m)u = 0, (γ·p + m)v = 0", w[2 * b], cfg.tol));
        ids.push(IdentityCheck::upper(&format!("dirac.normalization.{n}"), "ūu = δ, v̄v = −δ, ūv = 0", w[2 * b + 1], cfg.tol));
    }
    ids.push(IdentityCheck::exact("dirac.parity", "γ⁰u(−𝐩) = +u(𝐩), γ⁰v(−𝐩) = −v(𝐩)", w[6] as usize));
    ids.push(IdentityCheck::upper("dirac.helicity_basis.unitary", "W†W = I", w[7], cfg.tol));
    Ok(cfg.report(Suite::Dirac, ids))
}

fn majorana_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    // conjugacy, ρ↔λ, λ products, ρ products, parity phase, parity defect, connection,
    // gauge class, Ξ conjugation, Ξ transforms
    let w: [f64; 10] = sample_max(cfg, |i| {
        let p = random_momentum(cfg.seed, i);
        let mut out = [0.0f64; 10];
        for (f, k, e) in SPECIES {
            let s = species(f, k, e, &p)?;
            let cs = charge_conjugate(&s.components, 0.0);
            out[0] = out[0].max(vdiff(&cs, &vscale(&s.components, re(k.sign()))));
            let img = parity_map(&s)?;
            out[4] = out[4].max((img.phase - ONE).norm());
            out[5] = out[5].max(img.defect);
            let alpha = aux_rng(cfg.seed, i, 1).gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            let t = chiral_gauge_transform(&s, alpha);
            let ct = charge_conjugate(&t.components, 0.0);
            out[7] = out[7].max(vdiff(&ct, &vscale(&t.components, re(k.sign()))));
        }
        out[1] = rho_lambda_residuals(&p)?.into_iter().fold(0.0, f64::max);
        let (gl, gr) = biorthonormal_grams(&p, 0.0, 0.0)?;
        let (el, er) = expected_grams(p.m);
        out[2] = gl.distance(&el);
        out[3] = gr.distance(&er);
        out[6] = connection_residual(&p)?;
        let q = random_moving_momentum(cfg.seed, i);
        let xi = xi_residuals(&q)?;
        out[8] = xi.conjugation.into_iter().fold(0.0, f64::max);
        out[9] = xi.transforms.into_iter().fold(0.0, f64::max);
        Ok(out)
    })?;
    let tol = cfg.tol;
    let mut ids = vec![
        IdentityCheck::upper("majorana.conjugacy", "Cλ^S = +λ^S, Cλ^A = −λ^A (and ρ)", w[0], tol),
        IdentityCheck::upper("majorana.rho_lambda", "ρ^S_↑ = −iλ^A_↓, ρ^S_↓ = iλ^A_↑, ρ^A_↑ = iλ^S_↓, ρ^A_↓ = −iλ^S_↑", w[1], tol),
        IdentityCheck::upper("majorana.products.lambda", "λ̄^S_↑λ^S_↓ = −im, λ̄^A_↑λ^A_↓ = +im, others 0", w[2], tol),
        IdentityCheck::upper("majorana.products.rho", "ρ̄^S_↑ρ^S_↓ = +im, ρ̄^A_↑ρ^A_↓ = −im, others 0", w[3], tol),
        IdentityCheck::upper("majorana.parity.phase", "γ⁰ψ(−𝐩) = 1·(family- and class-swapped ψ)", w[4], tol),
        IdentityCheck::upper("majorana.parity.global", "parity image proportional to the swapped species", w[5], tol),
        IdentityCheck::upper("majorana.connection", "λ = c·M(u₊, u₋, v₊, v₋), c fixed at rest", w[6], tol)
            .note(format!("rest calibration c = √m (c² at m=1: {})", majorana::connection_calibration(1.0)?)),
        IdentityCheck::upper("majorana.gauge_class", "(cos α ∓ iγ⁵ sin α) preserves the conjugation class", w[7], tol),
        IdentityCheck::upper("majorana.xi.conjugation", "ΞΛ_{R,L}Ξ⁻¹ = Λ_{R,L}*", w[8], tol),
        IdentityCheck::upper("majorana.xi.transforms", "Ξ-transforms map λ^S to λ^A*, −iλ^S*, iγ⁰λ^A*, γ⁰λ^S*", w[9], tol),
    ];

    let momenta: Vec<FourMomentum> = (0..cfg.samples).map(|i| random_momentum(cfg.seed, i)).collect();
    match discover_frequency_convention(&momenta, tol) {
        Ok(out) => {
            let desc = out.conventions.iter().map(|c| c.describe()).collect::<Vec<_>>().join("; ");
            ids.push(
                IdentityCheck::upper("majorana.coupled", "iγ∂λ^S = mρ^A, iγ∂ρ^A = mλ^S, iγ∂λ^A = −mρ^S, iγ∂ρ^S = −mλ^A", out.max_residual, tol)
                    .note(desc),
            );
            ids.push(IdentityCheck::exact("majorana.coupled.unique", "exactly one frequency-sign convention", out.conventions.len() - 1));
            ids.push(IdentityCheck::upper("majorana.eight_component.plus", "[iΓ∂ − m]Ψ₊ = 0", out.eight_plus, tol));
            ids.push(IdentityCheck::upper("majorana.eight_component.minus", "[iΓ∂ + m]Ψ₋ = 0", out.eight_minus, tol));
        }
        Err(e) => ids.push(IdentityCheck::exact("majorana.coupled", "a frequency-sign convention exists", 1).note(e.to_string())),
    }
    for class in [ConjClass::S, ConjClass::A] {
        ids.extend(majorana::massless_limit(class, tol).identities);
    }
    Ok(cfg.report(Suite::Majorana, ids))
}

fn fock_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let r = crate::fockalg::fock_suite()?;
    Ok(cfg.report(Suite::Fock, r.identities))
}

/// Transverse plane wave with ω = |𝐤|: 𝐁 = 𝐤̂ × 𝐄, χ = 0.
fn transverse_wave(k: [f64; 3], e_dir: [f64; 3], phase: C64) -> FieldTriple {
    let kn = k.iter().map(|x| x * x).sum::<f64>().sqrt();
    let n = k.map(|x| x / kn);
    let d = e_dir[0] * n[0] + e_dir[1] * n[1] + e_dir[2] * n[2];
    let e = std::array::from_fn::<f64, 3, _>(|j| e_dir[j] - d * n[j]);
    let b = [n[1] * e[2] - n[2] * e[1], n[2] * e[0] - n[0] * e[2], n[0] * e[1] - n[1] * e[0]];
    FieldTriple { e: e.map(|x| phase * x), b: b.map(|x| phase * x), chi: ZERO, k, omega: kn }
}

fn maxwell_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    // root positions, identity defect, plane-wave residual, RS evolution, KG factorization,
    // chiral-mass spread, chiral-mass m_eff² defect
    let w: [f64; 7] = sample_max(cfg, |i| {
        let p = random_moving_momentum(cfg.seed, i);
        let k = p.p;
        let kn = p.p3();
        let scale = kn.max(1.0);
        let mut out = [0.0f64; 7];
        for sign in [1.0, -1.0] {
            let r = rs_characteristic_roots(k, sign)?;
            if r.roots.len() != 3 {
                out[0] = f64::INFINITY;
            } else {
                let want = [-kn, 0.0, kn];
                for (z, t) in r.roots.iter().zip(want) {
                    out[0] = out[0].max((z - re(t)).norm() / scale);
                }
            }
            out[1] = out[1].max(r.identity_defect);
        }
        let mut rng = aux_rng(cfg.seed, i, 2);
        let dir = unit_vector(&mut rng);
        let ph = C64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
        let wave = transverse_wave(k, dir, ph);
        let amp = crate::matrix::vnorm(&wave.e).max(f64::MIN_POSITIVE);
        out[2] = maxwell_residual(&wave).max_abs() / (amp * scale);
        let rs = RSVector::from_fields(&wave.e, &wave.b);
        // for a transverse wave both φ = 𝐄 + i𝐁 and ξ = 𝐄 − i𝐁 evolve at ω = |𝐤|
        let [a, b] = rs_evolution_residual(&rs, k, wave.omega);
        out[3] = a.max(b) / (amp * scale);
        let psi: [C64; 3] = std::array::from_fn(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let e = rng.gen_range(-2.0..2.0) * scale;
        let kg = kg_factorization_spin1(e, k, p.m, &psi);
        let want = vscale(&psi, re(e * e - kn * kn - p.m * p.m));
        out[4] = vdiff(&kg, &want) / (scale * scale + p.m * p.m);
        let m2 = p.m * rng.gen_range(0.0..0.9);
        let cd = chiral_mass_dispersion(p.m, m2, kn)?;
        let s2 = p.m * p.m;
        out[5] = cd.spread / s2.max(1e-300);
        out[6] = (cd.mass_sq - re(p.m * p.m - m2 * m2)).norm() / s2;
        Ok(out)
    })?;
    let mut kg_bad = 0;
    for e in -3i64..=3 {
        for x in -2i64..=2 {
            for y in -2i64..=2 {
                for z in -2i64..=2 {
                    kg_bad += !kg_factorization_defect_exact(e, [x, y, z]).is_zero() as usize;
                }
            }
        }
    }
    let tol = cfg.tol;
    let ids = vec![
        IdentityCheck::upper("maxwell.roots", "Det[E ∓ S·𝐩] = 0 ⇔ E ∈ {−|𝐩|, 0, +|𝐩|}", w[0], ROOT_TOL)
            .note("root error relative to max(|𝐩|, 1); E = 0 is the acausal stationary root"),
        IdentityCheck::upper("maxwell.characteristic", "Det[E ∓ S·𝐩] = E(E² − 𝐩²)", w[1], ROOT_TOL),
        IdentityCheck::upper("maxwell.plane_wave", "transverse wave with 𝐁 = 𝐤̂×𝐄, ω = |𝐤|, χ = 0 solves the equations", w[2], tol),
        IdentityCheck::upper("maxwell.rs_evolution", "ωφ = (S·𝐤)φ, ωξ = −(S·𝐤)ξ", w[3], tol),
        IdentityCheck::upper("maxwell.kg_factorization", "(E − S·𝐩)(E + S·𝐩)ψ − 𝐩(𝐩·ψ) − m²ψ = (E² − 𝐩² − m²)ψ", w[4], tol),
        IdentityCheck::exact("maxwell.kg_factorization.exact", "same identity over integer E, 𝐩 ∈ [−3,3]×[−2,2]³", kg_bad),
        IdentityCheck::upper("maxwell.chiral_mass.double_roots", "Det[γ·p + m₁ + m₂γ⁵] roots share one E² − 𝐩²", w[5], 1e-6),
        IdentityCheck::upper("maxwell.chiral_mass.shell", "m_eff² = m₁² − m₂²", w[6], 1e-6),
    ];
    Ok(cfg.report(Suite::Maxwell, ids))
}

fn weinberg_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let (ta, tb) = crate::weinberg::tucker_hammer_coefficients();
    // u residual, v residual, printed vs boost, coupled, parity mismatches, Π covariance,
    // TH degree mismatch, TH shell defect, TH zero root count, generic degree mismatch
    let w: [f64; 10] = sample_max(cfg, |i| {
        let p = random_moving_momentum(cfg.seed, i);
        let mut out = [0.0f64; 10];
        for sigma in [1i8, 0, -1] {
            let u = u1_spinor(&p, sigma, Rep6::Standard)?;
            let v = v1_spinor(&p, sigma, Rep6::Standard)?;
            out[0] = out[0].max(wth_residual(&u, ta, tb));
            out[1] = out[1].max(wth_residual(&v, ta, ta - 1.0));
            let printed = u1_printed(&p, sigma)?;
            let boosted = u1_boosted(&p, sigma, Rep6::Standard)?;
            out[2] = out[2].max(vdiff(&printed, &boosted.components) / crate::matrix::vnorm(&printed));
            let [r1, r2] = coupled_residual(&u)?;
            out[3] = out[3].max(r1).max(r2);
            out[4] += bool_count(boson_parity_of(&u, 1e-9)? == Some(1.0));
            out[4] += bool_count(boson_parity_of(&v, 1e-9)? == Some(-1.0));
        }
        let mut rng = aux_rng(cfg.seed, i, 3);
        let params = BoostParams::new(rng.gen_range(-2.0..2.0), unit_vector(&mut rng));
        for bar in [false, true] {
            let d = pi_covariance_defect(&p, &params, Spin::One, bar)?;
            out[5] = out[5].max(d);
        }
        let th = dispersion_spectrum(ta, tb, p.p, p.m)?;
        out[6] = bool_count(th.degree == 6);
        out[7] = th.max_shell_defect();
        out[8] = th.has_zero_root() as u8 as f64;
        let generic = dispersion_spectrum(0.3, 1.7, p.p, p.m)?;
        out[9] = bool_count(generic.degree == 12);
        Ok(out)
    })?;
    let tol = cfg.tol;
    let mut ids = vec![
        IdentityCheck::upper("weinberg.tucker_hammer.u", "O(A=1, B=2) u_σ = 0 (printed columns)", w[0], WTH_TOL)
            .note(format!("(A, B) = ({ta}, {tb}) from the coordinate-space coefficients")),
        IdentityCheck::upper("weinberg.tucker_hammer.v", "O(A, A−1) v_σ = 0, v = γ⁵u", w[1], WTH_TOL),
        IdentityCheck::upper("weinberg.printed_vs_boost", "printed u_σ(𝐩) = (mΛ_R e_σ, mΛ_L e_σ)/√2", w[2], tol),
        IdentityCheck::upper("weinberg.coupled", "Π̄(p)Φ = m²Ξ, Π(p)Ξ = m²Φ", w[3], tol),
        IdentityCheck::exact("weinberg.parity", "P u_σ = +u_σ, P v_σ = −v_σ", w[4] as usize),
        IdentityCheck::upper("weinberg.pi_covariance", "D Π(q) D† = Π(Λq)", w[5], WTH_TOL),
        IdentityCheck::exact("weinberg.dispersion.tucker_hammer.degree", "Det O(1,2) has degree 6 in E", w[6] as usize),
        IdentityCheck::upper("weinberg.dispersion.tucker_hammer.shell", "every root has E² = 𝐩² + m²", w[7], crate::weinberg::SHELL_TOL),
        IdentityCheck::exact("weinberg.dispersion.tucker_hammer.no_zero", "no root at E = 0 for 𝐩 ≠ 0", w[8] as usize),
        IdentityCheck::exact("weinberg.dispersion.generic.degree", "Det O(A,B) has degree 12 for generic (A, B)", w[9] as usize)
            .note("generic point (A, B) = (0.3, 1.7)"),
    ];
    ids.push(family_survey(&random_moving_momentum(cfg.seed, 0))?);
    Ok(cfg.report(Suite::Weinberg, ids))
}

/// Spectra of several B/(A+1) = 1 members and of Weinberg's (0, 1), as data.
fn family_survey(p: &FourMomentum) -> Result<IdentityCheck> {
    let mut chk = IdentityCheck::info("weinberg.dispersion.family", "root classes along B = A + 1 and at (0, 1)");
    for (a, b) in [(1.0, 2.0), (0.5, 1.5), (0.0, 1.0), (-0.5, 0.5), (2.0, 3.0)] {
        for (label, q) in [("𝐩", *p), ("|𝐩| = m", FourMomentum::new(p.m, p.n_hat().map(|x| x * p.m)))] {
            let s = dispersion_spectrum(a, b, q.p, q.m)?;
            let roots = s
                .roots
                .iter()
                .map(|r| format!("{:?}×{} E={:.4}{:+.4}i", r.class, r.multiplicity, r.energy.re, r.energy.im))
                .collect::<Vec<_>>()
                .join(", ");
            chk = chk.note(format!("(A,B)=({a},{b}) at {label}: degree {}, {roots}", s.degree));
        }
    }
    Ok(chk)
}

fn modeexpand_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let conv = ReflectionConvention::FourMomentum;
    let three = ReflectionConvention::ThreeMomentum;
    // cross-Gram std, chiral, relations compose, tetrad Gram, transversality, A involution,
    // B·B* = I, spin-1 fit defect, spin-1 scale − m², R² − I
    let w: [f64; 10] = sample_max(cfg, |i| {
        let k = random_moving_momentum(cfg.seed, i);
        let mut out = [0.0f64; 10];
        out[0] = cross_gram_defect(&k, conv, GammaBasis::Standard)?;
        out[1] = cross_gram_defect(&k, conv, GammaBasis::Chiral)?;
        let (b, a) = dirac_relations(&k)?;
        out[2] = b.compose_defect(&a)?;
        let t = polarization_tetrad(&k)?;
        let eta = MatrixC::diag(&[ONE, -ONE, -ONE, -ONE]);
        out[3] = tetrad_gram(&t).distance(&eta);
        out[4] = transversality_defect(&t) / (1.0 + k.p3() / k.m);
        let am = vector_a_matrix(&k, conv)?.matrix;
        let bm = vector_b_matrix(&k, conv)?.matrix;
        let id4 = MatrixC::identity(4);
        let gamma2 = (k.e() / k.m).powi(2);
        out[5] = (&am * &am).distance(&id4) / gamma2;
        out[6] = (&bm * &bm.conj()).distance(&id4) / (gamma2 * gamma2);
        let fit = reflection_fit(&k, conv)?;
        out[7] = fit.defect;
        out[8] = (fit.scale_over_m2 - ONE).norm();
        let r = spin1_reflection(&k)?;
        out[9] = (&r * &r).distance(&MatrixC::identity(3));
        Ok(out)
    })?;
    // data for the alternative "−k" reading
    let alt: Vec<(f64, f64)> = map_indexed(cfg.exec, cfg.samples.min(100), |i| {
        let k = random_moving_momentum(cfg.seed, i);
        let d = cross_gram_defect(&k, three, GammaBasis::Standard).unwrap_or(f64::NAN);
        let f = reflection_fit(&k, three).map(|f| f.defect).unwrap_or(f64::NAN);
        (d, f)
    });
    let mut alt_d = Least::default();
    let mut alt_f = Least::default();
    for (d, f) in alt {
        alt_d.push(d);
        alt_f.push(f);
    }

    let mut exact_bad = 0;
    let mut refl_bad = 0;
    for x in -3i64..=3 {
        for y in -3i64..=3 {
            for z in -3i64..=3 {
                if (x, y, z) == (0, 0, 0) {
                    continue;
                }
                exact_bad += !exact::dirac_relation_defect([x, y, z]).is_zero() as usize;
                refl_bad += !exact::reflection_involution_defect([x, y, z]).is_zero() as usize;
            }
        }
    }

    // which printed entries disagree with the oracle, across samples
    let n_diff = cfg.samples.min(100);
    let flags: Vec<(Vec<bool>, Vec<bool>)> = map_indexed(cfg.exec, n_diff, |i| {
        let k = random_moving_momentum(cfg.seed, i);
        let b = modeexpand::entry_diffs(&vector_b_matrix(&k, conv).unwrap().matrix, &printed_b_matrix(&k));
        let a = modeexpand::entry_diffs(&vector_a_matrix(&k, conv).unwrap().matrix, &printed_a_matrix(&k));
        (b.iter().map(|d| d.flagged).collect(), a.iter().map(|d| d.flagged).collect())
    });
    let k0 = random_moving_momentum(cfg.seed, 0);
    let mut tables = modeexpand::vector_matrix_checks(&k0, conv)?;
    for (t, which) in tables.iter_mut().zip([0usize, 1]) {
        let names: Vec<String> = t.diffs.iter().map(|d| d.entry.clone()).collect();
        let counts: Vec<String> = names
            .iter()
            .enumerate()
            .filter_map(|(j, n)| {
                let hits = flags.iter().filter(|f| if which == 0 { f.0[j] } else { f.1[j] }).count();
                (hits > 0).then(|| format!("{n}:{hits}"))
            })
            .collect();
        let msg = if counts.is_empty() { "none".to_string() } else { counts.join(" ") };
        t.notes.push(format!("entries flagged (relative diff > 1e-6) over {n_diff} samples: {msg}"));
    }

    // θ-split on a sample set with mixed energy signs and one E = 0 mode
    let mut samples: Vec<ModeSample> = (0..cfg.samples.min(64))
        .map(|i| {
            let k = random_momentum(cfg.seed, i).with_energy_sign(if i % 2 == 0 { 1.0 } else { -1.0 });
            ModeSample { k, amplitude: c(i as f64, 1.0) }
        })
        .collect();
    samples.push(ModeSample { k: FourMomentum::new(0.0, [0.0; 3]), amplitude: I });
    let split = frequency_split(&samples);
    let partition_bad = (split.reconstruct() != samples) as usize
        + (split.positive.len() + split.negative.len() + split.quarantined.len() != samples.len()) as usize
        + split.positive.iter().chain(&split.negative).filter(|e| !(e.k.p0() > 0.0)).count();
    let diag = split.quarantined.iter().map(|q| q.diagnostic.clone()).collect::<Vec<_>>().join("; ");

    let tol = cfg.tol;
    let mut ids = vec![
        IdentityCheck::exact("modeexpand.frequency_split.partition", "θ(k₀) + θ(−k₀) split is a partition that reconstructs the input", partition_bad),
        IdentityCheck::exact("modeexpand.frequency_split.zero_mode", "the k₀ = 0 sample is quarantined", split.quarantined.len().abs_diff(1))
            .note(diag),
        IdentityCheck::upper("modeexpand.cross_gram.standard", "v̄_μ(k)u_λ(−k) = −im(σ·n̂)", w[0], tol)
            .note("−k = (−E, −𝐤); residual relative to m"),
        IdentityCheck::upper("modeexpand.cross_gram.chiral", "same in the chiral basis", w[1], tol),
        IdentityCheck::info("modeexpand.cross_gram.three_momentum", "with −k = (E, −𝐤) instead")
            .note(format!("min defect over samples {:.3e}: the identity does not hold under this reading", alt_d.0)),
        IdentityCheck::upper("modeexpand.dirac_relations", "(iσ·n̂)(−iσ·n̂) = I", w[2], tol),
        IdentityCheck::exact("modeexpand.dirac_relations.exact", "(iσ·𝐤)(−iσ·𝐤) = 𝐤² I over integer 𝐤 ∈ [−3,3]³", exact_bad),
        IdentityCheck::upper("modeexpand.tetrad.gram", "ε*(k,a)·g·ε(k,b) = diag(1, −1, −1, −1)", w[3], tol),
        IdentityCheck::upper("modeexpand.tetrad.transverse", "k·ε(k, 1λ) = 0", w[4], tol),
        IdentityCheck::upper("modeexpand.vector_a.involution", "A(k)² = I", w[5], tol),
        IdentityCheck::upper("modeexpand.vector_b.involution", "B(k)B(k)* = I", w[6], tol),
    ];
    ids.extend(tables);
    ids.extend([
        IdentityCheck::upper("modeexpand.spin1.reflection_involution", "[1 − 2(S·n̂)²]² = I", w[9], tol),
        IdentityCheck::exact("modeexpand.spin1.reflection_involution.exact", "(𝐤²I − 2(S·𝐤)²)² = 𝐤⁴ I over integer 𝐤 ∈ [−3,3]³", refl_bad),
        IdentityCheck::upper("modeexpand.spin1.cross_gram_fit", "ū_σ(k)γ₄₄u_λ(−k) ∝ [1 − 2(S·n̂)²]", w[7], tol),
        IdentityCheck::upper("modeexpand.spin1.cross_gram_scale", "proportionality constant = m²", w[8], tol).note(format!(
            "with −k = (E, −𝐤) the fit defect is at least {:.3e}",
            alt_f.0
        )),
    ]);
    Ok(cfg.report(Suite::ModeExpand, ids))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(exec: Execution) -> SuiteConfig {
        SuiteConfig { seed: 3, samples: 40, tol: 1e-10, exec }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nosuch".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_on_a_small_run() {
        for s in Suite::ALL {
            let r = run_suite(s, &small(Execution::Parallel)).unwrap();
            let bad: Vec<_> = r.failures().iter().map(|c| (c.id.clone(), c.max_residual)).collect();
            assert!(r.passed, "{}: {bad:?}", s.name());
        }
    }

    #[test]
    fn sequential_and_parallel_reports_match() {
        let a = run_all(&small(Execution::Sequential)).unwrap();
        let b = run_all(&small(Execution::Parallel)).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn rejects_bad_config() {
        let mut cfg = small(Execution::Sequential);
        cfg.samples = 0;
        assert!(run_suite(Suite::Dirac, &cfg).is_err());
    }
}
