//! Mode-expansion relations: θ(k₀) frequency splitting, the Dirac cross-Gram v̄(k)u(−k),
//! (1/2,1/2) polarization vectors with the b†/a contraction matrices, and the spin-1
//! reflection R = I − 2(S·n̂)².
//!
//! "−k" defaults to the reversed four-momentum (E, 𝐤) → (−E, −𝐤), with the closed-form
//! spinors and polarization vectors continued to negative energy. Reversing only 𝐤 is
//! available as [`ReflectionConvention::ThreeMomentum`] for comparison.

use serde::{Deserialize, Serialize};

use crate::algebra::{dot3, sigma_dot, spin1_spherical, vector_boost, FourMomentum, GammaBasis, METRIC};
use crate::dirac::{dirac_bar, DiracKind, Half};
use crate::error::{Error, Result};
use crate::matrix::{best_fit_scalar, c, re, MatrixC, C64, I, ONE, ZERO};
use crate::report::{EntryDiff, IdentityCheck};
use crate::weinberg::{bmw_gamma6, Rep6};

/// Printed-vs-oracle entries above this relative difference are flagged.
pub const TYPO_FLAG: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionConvention {
    /// (E, 𝐤) → (−E, −𝐤)
    #[default]
    FourMomentum,
    /// 𝐤 → −𝐤 at fixed E > 0
    ThreeMomentum,
}

impl ReflectionConvention {
    pub const ALL: [ReflectionConvention; 2] = [ReflectionConvention::FourMomentum, ReflectionConvention::ThreeMomentum];

    pub fn name(self) -> &'static str {
        match self {
            ReflectionConvention::FourMomentum => "four_momentum",
            ReflectionConvention::ThreeMomentum => "three_momentum",
        }
    }

    /// Energy of "−k" given E(k) > 0.
    fn energy(self, e: f64) -> f64 {
        match self {
            ReflectionConvention::FourMomentum => -e,
            ReflectionConvention::ThreeMomentum => e,
        }
    }
}

fn check_direction(k: &FourMomentum) -> Result<()> {
    if k.m <= 0.0 {
        return Err(Error::MasslessBoost);
    }
    if k.p3() == 0.0 {
        return Err(Error::Invalid("direction n̂ undefined at 𝐤 = 0".into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// frequency splitting

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModeSample {
    pub k: FourMomentum,
    pub amplitude: C64,
}

/// A sample on one frequency branch, relabelled so that `k` has positive energy.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchEntry {
    pub index: usize,
    pub k: FourMomentum,
    pub amplitude: C64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quarantined {
    pub index: usize,
    pub sample: ModeSample,
    pub diagnostic: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FrequencySplit {
    /// φ⁺(k) = θ(k₀) φ(k)
    pub positive: Vec<BranchEntry>,
    /// φ⁻(k) = θ(k₀) φ(−k): stored at the reflected, positive-energy label
    pub negative: Vec<BranchEntry>,
    pub quarantined: Vec<Quarantined>,
}

impl FrequencySplit {
    /// The input samples in their original order, quarantined ones included.
    pub fn reconstruct(&self) -> Vec<ModeSample> {
        let mut all: Vec<(usize, ModeSample)> = Vec::new();
        for e in &self.positive {
            all.push((e.index, ModeSample { k: e.k, amplitude: e.amplitude }));
        }
        for e in &self.negative {
            let k = FourMomentum { energy_sign: -1.0, ..e.k.reflected() };
            all.push((e.index, ModeSample { k, amplitude: e.amplitude }));
        }
        for q in &self.quarantined {
            all.push((q.index, q.sample));
        }
        all.sort_by_key(|(i, _)| *i);
        all.into_iter().map(|(_, s)| s).collect()
    }

    /// `Err(ZeroFrequency)` for the first quarantined sample.
    pub fn check(&self) -> Result<()> {
        match self.quarantined.first() {
            Some(q) => Err(Error::ZeroFrequency { index: q.index }),
            None => Ok(()),
        }
    }
}

/// Splits samples by the sign of k₀. Samples with k₀ = 0 are quarantined with a diagnostic
/// rather than assigned to either branch.
pub fn frequency_split(samples: &[ModeSample]) -> FrequencySplit {
    let mut out = FrequencySplit::default();
    for (index, s) in samples.iter().enumerate() {
        let k0 = s.k.p0();
        if k0 > 0.0 {
            out.positive.push(BranchEntry { index, k: s.k, amplitude: s.amplitude });
        } else if k0 < 0.0 {
            let k = FourMomentum { energy_sign: 1.0, ..s.k.reflected() };
            out.negative.push(BranchEntry { index, k, amplitude: s.amplitude });
        } else {
            let diagnostic = Error::ZeroFrequency { index }.to_string();
            out.quarantined.push(Quarantined { index, sample: *s, diagnostic });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Dirac cross-Gram

/// Standard-representation u/v columns at 3-momentum `p` and energy `e` (either sign),
/// normalized to ūu = +1 at e > 0. For e < 0 the normalization √((e+m)/2m) is the
/// principal complex root.
fn dirac_column(p: [f64; 3], e: f64, m: f64, kind: DiracKind, sigma: Half) -> [C64; 4] {
    let n = re((e + m) / (2.0 * m)).sqrt();
    let d = e + m;
    let pz = re(p[2] / d);
    let pr = c(p[0], p[1]) / d;
    let pl = c(p[0], -p[1]) / d;
    let col = match (kind, sigma) {
        (DiracKind::U, Half::Up) => [ONE, ZERO, pz, pr],
        (DiracKind::U, Half::Down) => [ZERO, ONE, pl, -pz],
        (DiracKind::V, Half::Up) => [pz, pr, ONE, ZERO],
        (DiracKind::V, Half::Down) => [pl, -pz, ZERO, ONE],
    };
    col.map(|z| z * n)
}

fn in_basis(col: [C64; 4], basis: GammaBasis) -> Vec<C64> {
    match basis {
        GammaBasis::Standard => col.to_vec(),
        GammaBasis::Chiral => crate::algebra::basis_change().adjoint().apply(&col),
    }
}

/// Dirac spinor of `kind` at k itself (`reflect = None`) or at "−k".
pub fn dirac_mode_spinor(
    k: &FourMomentum,
    kind: DiracKind,
    sigma: Half,
    reflect: Option<ReflectionConvention>,
    basis: GammaBasis,
) -> Result<Vec<C64>> {
    if k.m <= 0.0 {
        return Err(Error::MasslessBoost);
    }
    let col = match reflect {
        None => dirac_column(k.p, k.e(), k.m, kind, sigma),
        Some(conv) => dirac_column(k.reflected().p, conv.energy(k.e()), k.m, kind, sigma),
    };
    Ok(in_basis(col, basis))
}

/// Λ_{μλ}(k) = v̄_μ(k) u_λ(−k) with spinors normalized to ūu = m.
pub fn dirac_cross_gram(k: &FourMomentum, conv: ReflectionConvention, basis: GammaBasis) -> Result<MatrixC> {
    check_direction(k)?;
    let mut g = MatrixC::zeros(2, 2);
    for (i, mu) in Half::BOTH.into_iter().enumerate() {
        let v = dirac_mode_spinor(k, DiracKind::V, mu, None, basis)?;
        for (j, la) in Half::BOTH.into_iter().enumerate() {
            let u = dirac_mode_spinor(k, DiracKind::U, la, Some(conv), basis)?;
            g[(i, j)] = dirac_bar(&v, &u, basis) * k.m;
        }
    }
    Ok(g)
}

/// −im(σ·n̂).
pub fn expected_cross_gram(k: &FourMomentum) -> MatrixC {
    sigma_dot(k.n_hat()).scale(c(0.0, -k.m))
}

/// max |Λ + im(σ·n̂)|, relative to m.
pub fn cross_gram_defect(k: &FourMomentum, conv: ReflectionConvention, basis: GammaBasis) -> Result<f64> {
    Ok(dirac_cross_gram(k, conv, basis)?.distance(&expected_cross_gram(k)) / k.m)
}

/// A linear relation `lhs = matrix · rhs` between operator labels at momentum `k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModeRelation {
    pub matrix: MatrixC,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub k: FourMomentum,
}

impl ModeRelation {
    fn new(matrix: MatrixC, lhs: Vec<String>, rhs: Vec<String>, k: FourMomentum) -> Result<Self> {
        if matrix.shape() != (lhs.len(), rhs.len()) {
            return Err(Error::ShapeMismatch { left: matrix.shape(), right: (lhs.len(), rhs.len()) });
        }
        Ok(ModeRelation { matrix, lhs, rhs, k })
    }

    /// ‖M·other − I‖ for a relation running the other way.
    pub fn compose_defect(&self, other: &ModeRelation) -> Result<f64> {
        let p = self.matrix.try_mul(&other.matrix)?;
        Ok(p.distance(&MatrixC::identity(p.rows())))
    }
}

fn labels(prefix: &str, names: &[&str], arg: &str) -> Vec<String> {
    names.iter().map(|n| format!("{prefix}_{n}({arg})")).collect()
}

/// b†(k) = i(σ·n̂) a(−k) and a(−k) = −i(σ·n̂) b†(k).
pub fn dirac_relations(k: &FourMomentum) -> Result<(ModeRelation, ModeRelation)> {
    check_direction(k)?;
    let sn = sigma_dot(k.n_hat());
    let hs = ["+1/2", "-1/2"];
    let b = ModeRelation::new(sn.scale(I), labels("b†", &hs, "k"), labels("a", &hs, "-k"), *k)?;
    let a = ModeRelation::new(sn.scale(-I), labels("a", &hs, "-k"), labels("b†", &hs, "k"), *k)?;
    Ok((b, a))
}

// ---------------------------------------------------------------------------
// (1/2,1/2) polarization vectors

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Polarization {
    /// 00: time-like
    Scalar,
    /// 11
    Plus,
    /// 1−1
    Minus,
    /// 10
    Zero,
}

impl Polarization {
    /// Row order of the printed matrices.
    pub const ALL: [Polarization; 4] = [Polarization::Scalar, Polarization::Plus, Polarization::Minus, Polarization::Zero];

    pub fn name(self) -> &'static str {
        match self {
            Polarization::Scalar => "00",
            Polarization::Plus => "11",
            Polarization::Minus => "1-1",
            Polarization::Zero => "10",
        }
    }

    /// +1 for the time-like label, −1 for the triad.
    pub fn metric_sign(self) -> f64 {
        match self {
            Polarization::Scalar => 1.0,
            _ => -1.0,
        }
    }

    /// Rest-frame vector (t, x, y, z).
    pub fn rest_vector(self) -> [C64; 4] {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        match self {
            Polarization::Scalar => [ONE, ZERO, ZERO, ZERO],
            Polarization::Plus => [ZERO, re(-h), c(0.0, -h), ZERO],
            Polarization::Minus => [ZERO, re(h), c(0.0, -h), ZERO],
            Polarization::Zero => [ZERO, ZERO, ZERO, ONE],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolarizationVector {
    /// Contravariant components ε^μ.
    pub components: [C64; 4],
    pub k: FourMomentum,
    pub label: Polarization,
}

/// Σ ε₁^μ g_μν ε₂^ν, no conjugation.
pub fn minkowski(a: &[C64; 4], b: &[C64; 4]) -> C64 {
    (0..4).map(|i| a[i] * b[i] * METRIC[i]).sum()
}

/// ε(k, λ) in closed form at energy `e` of either sign:
/// ε(00) = (e, 𝐤)/m, ε(1λ) = ((𝐤·𝐞)/m, 𝐞 + (𝐤·𝐞)𝐤/(m(e+m))).
pub fn polarization_closed_form(p: [f64; 3], e: f64, m: f64, label: Polarization) -> [C64; 4] {
    match label {
        Polarization::Scalar => [re(e / m), re(p[0] / m), re(p[1] / m), re(p[2] / m)],
        _ => {
            let r = label.rest_vector();
            let ke: C64 = (0..3).map(|i| r[i + 1] * p[i]).sum();
            let f = ke / (m * (e + m));
            [ke / m, r[1] + f * p[0], r[2] + f * p[1], r[3] + f * p[2]]
        }
    }
}

/// The rest tetrad boosted to `k` by the (1/2,1/2) vector boost; for negative energy sign,
/// the closed form continued to E → −E.
pub fn polarization_tetrad(k: &FourMomentum) -> Result<[PolarizationVector; 4]> {
    if k.m <= 0.0 {
        return Err(Error::MasslessBoost);
    }
    let tetrad = if k.energy_sign > 0.0 {
        let l = vector_boost(&k.boost_params()?);
        Polarization::ALL.map(|label| {
            let r = label.rest_vector();
            let components = std::array::from_fn(|mu| (0..4).map(|nu| r[nu] * l[mu][nu]).sum());
            PolarizationVector { components, k: *k, label }
        })
    } else {
        Polarization::ALL.map(|label| PolarizationVector {
            components: polarization_closed_form(k.p, k.p0(), k.m, label),
            k: *k,
            label,
        })
    };
    Ok(tetrad)
}

fn reflected_tetrad(k: &FourMomentum, conv: ReflectionConvention) -> Result<[PolarizationVector; 4]> {
    let mk = match conv {
        ReflectionConvention::FourMomentum => k.reflected().with_energy_sign(-1.0),
        ReflectionConvention::ThreeMomentum => k.reflected(),
    };
    polarization_tetrad(&mk)
}

/// G_ab = ε_a* · g · ε_b; diag(+1, −1, −1, −1) for an orthonormal tetrad.
pub fn tetrad_gram(t: &[PolarizationVector; 4]) -> MatrixC {
    MatrixC::from_fn(4, 4, |a, b| minkowski(&t[a].components.map(|z| z.conj()), &t[b].components))
}

/// max over the triad of |k·ε(k, 1λ)| / m.
pub fn transversality_defect(t: &[PolarizationVector; 4]) -> f64 {
    let k = t[0].k;
    let kv = [re(k.p0()), re(k.p[0]), re(k.p[1]), re(k.p[2])];
    t[1..].iter().map(|e| minkowski(&kv, &e.components).norm() / k.m).fold(0.0, f64::max)
}

fn contraction(k: &FourMomentum, conv: ReflectionConvention, conjugate: bool) -> Result<MatrixC> {
    check_direction(k)?;
    let ek = polarization_tetrad(k)?;
    let emk = reflected_tetrad(k, conv)?;
    Ok(MatrixC::from_fn(4, 4, |s, l| {
        let left = if conjugate { ek[s].components.map(|z| z.conj()) } else { ek[s].components };
        minkowski(&left, &emk[l].components) * ek[s].label.metric_sign()
    }))
}

fn pol_labels(prefix: &str, arg: &str) -> Vec<String> {
    Polarization::ALL.iter().map(|p| format!("{prefix}_{}({arg})", p.name())).collect()
}

/// b†_σ(k) = ∓ Σ_λ [ε(k,σ)·g·ε(−k,λ)] a_λ(−k), sign − for the triad.
pub fn vector_b_matrix(k: &FourMomentum, conv: ReflectionConvention) -> Result<ModeRelation> {
    ModeRelation::new(contraction(k, conv, false)?, pol_labels("b†", "k"), pol_labels("a", "-k"), *k)
}

/// As [`vector_b_matrix`] with ε*(k,σ) on the left.
pub fn vector_a_matrix(k: &FourMomentum, conv: ReflectionConvention) -> Result<ModeRelation> {
    ModeRelation::new(contraction(k, conv, true)?, pol_labels("a", "k"), pol_labels("a", "-k"), *k)
}

struct Kin {
    e: f64,
    m2: f64,
    k3: f64,
    kr: C64,
    kl: C64,
    k2: f64,
}

fn kin(k: &FourMomentum) -> Kin {
    Kin { e: k.e(), m2: k.m * k.m, k3: k.p[2], kr: k.p_r(), kl: k.p_l(), k2: k.p3_sq() }
}

/// The published b-matrix, including its E²/m² prefactor, transcribed verbatim.
pub fn printed_b_matrix(k: &FourMomentum) -> MatrixC {
    let Kin { e, m2, k3, kr, kl, k2 } = kin(k);
    let r2 = std::f64::consts::SQRT_2;
    let mid = -m2 * k3 * k3 / (e * e * k2) + kr * kl / (e * e);
    MatrixC::from_rows(&[
        [re(1.0 + k2 / (e * e)), kr * r2 / e, -kl * r2 / e, re(-2.0 * k3 / e)],
        [-kr * r2 / e, -kr * kr / k2, mid, kr * r2 * k3 / k2],
        [kl * r2 / e, mid, -kl * kl / k2, -kl * r2 * k3 / k2],
        [re(2.0 * k3 / e), kr * r2 * k3 / k2, -kl * r2 * k3 / k2, re(m2 / (e * e) - 2.0 * k3 / k2)],
    ])
    .scale_re(e * e / m2)
}

/// The published a-matrix, transcribed verbatim.
pub fn printed_a_matrix(k: &FourMomentum) -> MatrixC {
    let Kin { k3, kr, kl, k2, .. } = kin(k);
    let r2 = std::f64::consts::SQRT_2;
    let d = re(k3 * k3 / k2);
    MatrixC::from_rows(&[
        [-ONE, ZERO, ZERO, ZERO],
        [ZERO, d, kl * kl / k2, kl * r2 * k3 / k2],
        [ZERO, kr * kr / k2, d, -kr * r2 * k3 / k2],
        [ZERO, kr * r2 * k3 / k2, -kl * r2 * k3 / k2, re(1.0 - 2.0 * k3 * k3 / k2)],
    ])
}

/// Element-wise oracle-vs-printed table, rows and columns named by polarization label.
pub fn entry_diffs(oracle: &MatrixC, printed: &MatrixC) -> Vec<EntryDiff> {
    let mut out = Vec::new();
    for (i, a) in Polarization::ALL.iter().enumerate() {
        for (j, b) in Polarization::ALL.iter().enumerate() {
            out.push(EntryDiff::new(format!("({},{})", a.name(), b.name()), oracle[(i, j)], printed[(i, j)], TYPO_FLAG));
        }
    }
    out
}

/// Diff tables for both contraction matrices at `k`, as informational report entries.
pub fn vector_matrix_checks(k: &FourMomentum, conv: ReflectionConvention) -> Result<Vec<IdentityCheck>> {
    let b = vector_b_matrix(k, conv)?;
    let a = vector_a_matrix(k, conv)?;
    let bd = entry_diffs(&b.matrix, &printed_b_matrix(k));
    let ad = entry_diffs(&a.matrix, &printed_a_matrix(k));
    let summary = |d: &[EntryDiff]| {
        let flagged: Vec<&str> = d.iter().filter(|x| x.flagged).map(|x| x.entry.as_str()).collect();
        format!("{} of {} entries flagged: {}", flagged.len(), d.len(), flagged.join(" "))
    };
    let at = format!("k = ({:.4}, {:.4}, {:.4}), m = {:.4}, −k by {}", k.p[0], k.p[1], k.p[2], k.m, conv.name());
    Ok(vec![
        IdentityCheck::info("modeexpand.vector_b.diff", "b†(k) = ∓ ε(k,σ)·g·ε(−k,λ) a(−k) vs printed (E²/m²)(…)")
            .note(at.clone())
            .note(summary(&bd))
            .with_diffs(bd),
        IdentityCheck::info("modeexpand.vector_a.diff", "a(k) = ∓ ε*(k,σ)·g·ε(−k,λ) a(−k) vs printed matrix")
            .note(at)
            .note(summary(&ad))
            .with_diffs(ad),
    ])
}

// ---------------------------------------------------------------------------
// spin-1 reflection

/// R = I − 2(S·n̂)² in the S₃ eigenbasis (+1, 0, −1).
pub fn spin1_reflection(k: &FourMomentum) -> Result<MatrixC> {
    check_direction(k)?;
    let sn = dot3(&spin1_spherical(), k.n_hat());
    Ok(&MatrixC::identity(3) - &(&sn * &sn).scale_re(2.0))
}

/// Chiral (1,0)⊕(0,1) u_σ at 3-momentum `p`, energy `e` of either sign:
/// ((m + S·p + (S·p)²/(e+m)) e_σ, (m − S·p + (S·p)²/(e+m)) e_σ)/√2.
fn spin1_column(p: [f64; 3], e: f64, m: f64, sigma: usize) -> [C64; 6] {
    let sp = dot3(&spin1_spherical(), p);
    let sq = (&sp * &sp).scale_re(1.0 / (e + m));
    let mi = MatrixC::identity(3).scale_re(m);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let r = &(&mi + &sp) + &sq;
    let l = &(&mi - &sp) + &sq;
    std::array::from_fn(|i| if i < 3 { r[(i, sigma)] * h } else { l[(i - 3, sigma)] * h })
}

/// ū_σ(k) γ₄₄ u_λ(−k) with ū = u†γ₄₄ (chiral representation, normalization ūu = m²).
pub fn spin1_cross_gram(k: &FourMomentum, conv: ReflectionConvention) -> Result<MatrixC> {
    check_direction(k)?;
    let g44 = bmw_gamma6(4, 4, Rep6::Chiral)?;
    let mk = k.reflected();
    let (e, m) = (k.e(), k.m);
    Ok(MatrixC::from_fn(3, 3, |s, l| {
        let u = spin1_column(k.p, e, m, s);
        let w = g44.apply(&spin1_column(mk.p, conv.energy(e), m, l));
        u.iter().zip(&w).map(|(a, b)| a.conj() * b).sum()
    }))
}

/// Best scalar c with cross-Gram ≈ c·R, and the relative defect of that fit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReflectionFit {
    pub scale: C64,
    /// `scale / m²`
    pub scale_over_m2: C64,
    pub defect: f64,
}

pub fn reflection_fit(k: &FourMomentum, conv: ReflectionConvention) -> Result<ReflectionFit> {
    let r = spin1_reflection(k)?;
    let g = spin1_cross_gram(k, conv)?;
    let (scale, defect) = best_fit_scalar(g.entries(), r.entries());
    Ok(ReflectionFit { scale, scale_over_m2: scale / (k.m * k.m), defect })
}

/// a(k) = R a(−k) as a relation between spin-1 labels.
pub fn spin1_relation(k: &FourMomentum) -> Result<ModeRelation> {
    let names = ["+1", "0", "-1"];
    ModeRelation::new(spin1_reflection(k)?, labels("a", &names, "k"), labels("a", &names, "-k"), *k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{u_spinor, v_spinor, SpinorBasis};
    use crate::exact;
    use crate::matrix::vdiff;
    use crate::sampling::random_moving_momentum;
    use crate::weinberg::u1_boosted;

    const TOL: f64 = 1e-10;

    fn on(m: f64, p: [f64; 3]) -> FourMomentum {
        FourMomentum::new(m, p)
    }

    #[test]
    fn split_partitions_and_quarantines_zero_frequency() {
        let a = ModeSample { k: on(1.0, [0.1, 0.2, 0.3]), amplitude: c(1.0, 0.5) };
        let b = ModeSample { k: on(2.0, [0.0, -1.0, 0.4]).with_energy_sign(-1.0), amplitude: c(-0.3, 2.0) };
        let z = ModeSample { k: on(0.0, [0.0; 3]), amplitude: ONE };
        let s = frequency_split(&[a, b]);
        assert_eq!((s.positive.len(), s.negative.len()), (1, 1));
        assert_eq!(s.negative[0].k.p, [0.0, 1.0, -0.4]);
        assert!(s.negative[0].k.p0() > 0.0);
        assert_eq!(s.reconstruct(), vec![a, b]);
        assert!(frequency_split(&[a, a]).negative.is_empty());

        let s = frequency_split(&[a, z, b]);
        assert_eq!(s.quarantined.len(), 1);
        assert_eq!(s.check(), Err(Error::ZeroFrequency { index: 1 }));
        assert!(s.quarantined[0].diagnostic.contains("E=0 mode outside θ-split domain"));
        assert_eq!(s.reconstruct(), vec![a, z, b]);
    }

    #[test]
    fn continued_columns_match_dirac_module() {
        let k = on(1.3, [0.4, -0.7, 1.1]);
        for s in Half::BOTH {
            let u = u_spinor(&k, s, SpinorBasis::Standard).unwrap();
            let v = v_spinor(&k, s, SpinorBasis::Chiral).unwrap();
            let u2 = dirac_mode_spinor(&k, DiracKind::U, s, None, GammaBasis::Standard).unwrap();
            let v2 = dirac_mode_spinor(&k, DiracKind::V, s, None, GammaBasis::Chiral).unwrap();
            assert!(vdiff(&u.components, &u2) < 1e-14);
            assert!(vdiff(&v.components, &v2) < 1e-14);
        }
    }

    #[test]
    fn cross_gram_along_z() {
        let k = on(2.0, [0.0, 0.0, 1.5]);
        let g = dirac_cross_gram(&k, ReflectionConvention::FourMomentum, GammaBasis::Standard).unwrap();
        let want = MatrixC::diag(&[c(0.0, -2.0), c(0.0, 2.0)]);
        assert!(g.approx_eq(&want, 1e-12), "{g:?}");
    }

    #[test]
    fn cross_gram_random_and_basis_independent() {
        for i in 0..200 {
            let k = random_moving_momentum(11, i);
            for basis in [GammaBasis::Standard, GammaBasis::Chiral] {
                let d = cross_gram_defect(&k, ReflectionConvention::FourMomentum, basis).unwrap();
                assert!(d < TOL, "sample {i}: {d}");
            }
            let s = dirac_cross_gram(&k, ReflectionConvention::FourMomentum, GammaBasis::Standard).unwrap();
            let ch = dirac_cross_gram(&k, ReflectionConvention::FourMomentum, GammaBasis::Chiral).unwrap();
            assert!(s.distance(&ch) < TOL * k.m);
        }
    }

    #[test]
    fn three_momentum_reversal_is_not_the_printed_gram() {
        // Only 𝐤 reversed: Λ comes out as (|𝐤|/m)(σ·n̂)·m, not −im(σ·n̂).
        let k = on(1.0, [0.3, 0.4, 1.2]);
        let g = dirac_cross_gram(&k, ReflectionConvention::ThreeMomentum, GammaBasis::Standard).unwrap();
        assert!(cross_gram_defect(&k, ReflectionConvention::ThreeMomentum, GammaBasis::Standard).unwrap() > 0.1);
        let want = sigma_dot(k.n_hat()).scale_re(k.p3());
        assert!(g.approx_eq(&want, 1e-12), "{g:?}");
    }

    #[test]
    fn dirac_relations_compose_to_identity() {
        let k = on(1.0, [0.2, -0.5, 0.9]);
        let (b, a) = dirac_relations(&k).unwrap();
        assert!(b.compose_defect(&a).unwrap() < 1e-15);
        assert!(exact::dirac_relation_defect([1, -2, 3]).is_zero());
        assert!(ModeRelation::new(MatrixC::identity(2), vec!["x".into()], vec!["y".into()], k).is_err());
    }

    #[test]
    fn tetrad_rest_frame_and_orthonormality() {
        let t = polarization_tetrad(&FourMomentum::rest(1.7)).unwrap();
        for v in &t {
            assert_eq!(v.components, v.label.rest_vector());
        }
        let eta = MatrixC::diag(&[ONE, -ONE, -ONE, -ONE]);
        for i in 0..100 {
            let k = random_moving_momentum(5, i);
            let t = polarization_tetrad(&k).unwrap();
            assert!(tetrad_gram(&t).distance(&eta) < TOL);
            assert!(transversality_defect(&t) < TOL * (1.0 + k.p3() / k.m));
            for v in &t {
                let cf = polarization_closed_form(k.p, k.e(), k.m, v.label);
                assert!(vdiff(&cf, &v.components) < TOL * (1.0 + k.e() / k.m));
            }
        }
        assert!(polarization_tetrad(&on(0.0, [1.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn a_matrix_matches_print_and_b_corner_is_reported() {
        let k = on(1.3, [0.5, -0.2, 0.8]);
        let a = vector_a_matrix(&k, ReflectionConvention::FourMomentum).unwrap();
        assert!(a.matrix.distance(&printed_a_matrix(&k)) < 1e-12);
        assert!((a.matrix[(0, 0)] + ONE).norm() < 1e-12);
        let b = vector_b_matrix(&k, ReflectionConvention::FourMomentum).unwrap();
        let pb = printed_b_matrix(&k);
        let e2 = k.e() * k.e() / (k.m * k.m);
        assert!((pb[(0, 0)] - re(e2 * (1.0 + k.p3_sq() / (k.e() * k.e())))).norm() < 1e-12);
        let checks = vector_matrix_checks(&k, ReflectionConvention::FourMomentum).unwrap();
        assert_eq!(checks[0].diffs.len(), 16);
        assert!(checks.iter().all(|c| c.passed));
        assert!(checks[0].diffs.iter().any(|d| d.flagged));
        assert!(checks[1].diffs.iter().all(|d| !d.flagged));
        // both oracle relations are involutions: A² = I and B B* = I
        assert!((&a.matrix * &a.matrix).distance(&MatrixC::identity(4)) < 1e-12);
        assert!((&b.matrix * &b.matrix.conj()).distance(&MatrixC::identity(4)) < 1e-12);
    }

    #[test]
    fn reflection_along_z_and_involution() {
        let r = spin1_reflection(&on(1.0, [0.0, 0.0, 2.0])).unwrap();
        assert!(r.approx_eq(&MatrixC::diag(&[-ONE, ONE, -ONE]), 1e-15));
        for k in [[1, 2, 3], [0, 0, 1], [-4, 1, 7], [5, -5, 0]] {
            assert!(exact::reflection_involution_defect(k).is_zero());
        }
    }

    #[test]
    fn spin1_cross_gram_is_m2_times_reflection() {
        let k = on(1.0, [0.3, -0.6, 0.2]);
        let col = spin1_column(k.p, k.e(), k.m, 2);
        let boosted = u1_boosted(&k, -1, Rep6::Chiral).unwrap();
        assert!(vdiff(&col, &boosted.components) < 1e-13);
        for i in 0..50 {
            let k = random_moving_momentum(3, i);
            let f = reflection_fit(&k, ReflectionConvention::FourMomentum).unwrap();
            assert!(f.defect < 1e-10 && (f.scale_over_m2 - ONE).norm() < 1e-10, "{f:?}");
        }
        let f = reflection_fit(&k, ReflectionConvention::ThreeMomentum).unwrap();
        assert!(f.defect > 1e-3);
    }
}
