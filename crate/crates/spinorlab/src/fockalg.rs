//! One-particle Fock algebra of the λ/ρ field: creation/annihilation generators, the
//! symmetry maps U^s, U^c, Ṽ^c, V^T, and exact phase arithmetic on kets.
//!
//! Phases live in Z₄ = {1, i, −1, −i}; state coefficients are Gaussian integers, so every
//! check here is exact.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::dirac::Half;
use crate::error::{Error, Result};
use crate::matrix::{MatrixC, ONE, ZERO};
use crate::report::{IdentityCheck, VerificationReport};

pub type Gauss = Complex<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Species {
    /// particle operators a, a†
    A,
    /// antiparticle operators b, b†
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MomentumLabel {
    P,
    MinusP,
}

impl MomentumLabel {
    pub fn neg(self) -> Self {
        match self {
            MomentumLabel::P => MomentumLabel::MinusP,
            MomentumLabel::MinusP => MomentumLabel::P,
        }
    }
}

impl fmt::Display for MomentumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MomentumLabel::P => "p",
            MomentumLabel::MinusP => "−p",
        })
    }
}

fn arrow(h: Half) -> &'static str {
    match h {
        Half::Up => "↑",
        Half::Down => "↓",
    }
}

/// i^k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Phase(pub u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn mul(self, o: Phase) -> Phase {
        Phase((self.0 + o.0) % 4)
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn neg(self) -> Phase {
        self.mul(Phase::MINUS_ONE)
    }

    pub fn to_gauss(self) -> Gauss {
        match self.0 % 4 {
            0 => Gauss::new(1, 0),
            1 => Gauss::new(0, 1),
            2 => Gauss::new(-1, 0),
            _ => Gauss::new(0, -1),
        }
    }

    pub fn from_gauss(z: Gauss) -> Option<Phase> {
        match (z.re, z.im) {
            (1, 0) => Some(Phase(0)),
            (0, 1) => Some(Phase(1)),
            (-1, 0) => Some(Phase(2)),
            (0, -1) => Some(Phase(3)),
            _ => None,
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["+1", "+i", "−1", "−i"][self.0 as usize % 4])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub species: Species,
    pub daggered: bool,
    pub eta: Half,
    pub momentum: MomentumLabel,
}

impl Generator {
    pub fn new(species: Species, daggered: bool, eta: Half, momentum: MomentumLabel) -> Self {
        Generator { species, daggered, eta, momentum }
    }

    pub fn a(eta: Half, momentum: MomentumLabel) -> Self {
        Self::new(Species::A, false, eta, momentum)
    }

    pub fn a_dag(eta: Half, momentum: MomentumLabel) -> Self {
        Self::new(Species::A, true, eta, momentum)
    }

    pub fn b(eta: Half, momentum: MomentumLabel) -> Self {
        Self::new(Species::B, false, eta, momentum)
    }

    pub fn b_dag(eta: Half, momentum: MomentumLabel) -> Self {
        Self::new(Species::B, true, eta, momentum)
    }

    pub fn adjoint(self) -> Self {
        Generator { daggered: !self.daggered, ..self }
    }

    pub fn reflected(self) -> Self {
        Generator { momentum: self.momentum.neg(), ..self }
    }

    /// All 16 generators over the label set {p, −p}.
    pub fn all() -> Vec<Generator> {
        let mut out = Vec::with_capacity(16);
        for species in [Species::A, Species::B] {
            for daggered in [false, true] {
                for eta in Half::BOTH {
                    for momentum in [MomentumLabel::P, MomentumLabel::MinusP] {
                        out.push(Generator { species, daggered, eta, momentum });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.species {
            Species::A => "a",
            Species::B => "b",
        };
        let d = if self.daggered { "†" } else { "" };
        write!(f, "{s}{d}_{}({})", arrow(self.eta), self.momentum)
    }
}

/// |p, η⟩^± = a†_η(p)|0⟩ (+) or b†_η(p)|0⟩ (−).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ket {
    pub species: Species,
    pub eta: Half,
    pub momentum: MomentumLabel,
}

impl Ket {
    pub fn plus(eta: Half, momentum: MomentumLabel) -> Self {
        Ket { species: Species::A, eta, momentum }
    }

    pub fn minus(eta: Half, momentum: MomentumLabel) -> Self {
        Ket { species: Species::B, eta, momentum }
    }

    pub fn creator(self) -> Generator {
        Generator::new(self.species, true, self.eta, self.momentum)
    }

    pub fn reflected(self) -> Self {
        Ket { momentum: self.momentum.neg(), ..self }
    }

    pub fn all() -> Vec<Ket> {
        Generator::all()
            .into_iter()
            .filter(|g| g.daggered)
            .map(|g| Ket { species: g.species, eta: g.eta, momentum: g.momentum })
            .collect()
    }
}

impl fmt::Display for Ket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.species {
            Species::A => "+",
            Species::B => "−",
        };
        write!(f, "|{},{}⟩^{s}", self.momentum, arrow(self.eta))
    }
}

/// Finite Gaussian-integer combination of one-particle kets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockStateVector {
    pub terms: BTreeMap<Ket, Gauss>,
}

impl FockStateVector {
    pub fn ket(k: Ket) -> Self {
        Self::from_terms(&[(Gauss::new(1, 0), k)])
    }

    pub fn from_terms(terms: &[(Gauss, Ket)]) -> Self {
        let mut s = FockStateVector::default();
        for &(c, k) in terms {
            s.add(k, c);
        }
        s
    }

    pub fn add(&mut self, k: Ket, c: Gauss) {
        let e = self.terms.entry(k).or_insert(Gauss::new(0, 0));
        *e += c;
        if *e == Gauss::new(0, 0) {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: Gauss) -> Self {
        let mut out = FockStateVector::default();
        for (&k, &v) in &self.terms {
            out.add(k, v * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn reflected(&self) -> Self {
        let mut out = FockStateVector::default();
        for (&k, &v) in &self.terms {
            out.add(k.reflected(), v);
        }
        out
    }

    /// λ with `self = λ·other` (λ Gaussian rational given as a Gaussian integer ratio), if any.
    pub fn proportionality(&self, other: &FockStateVector) -> Option<(Gauss, Gauss)> {
        if self.terms.keys().ne(other.terms.keys()) || self.is_zero() {
            return None;
        }
        let (k0, &b0) = other.terms.iter().next()?;
        let a0 = self.terms[k0];
        // self = (a0/b0)·other  ⇔  b0·self = a0·other
        let ok = self.terms.iter().all(|(k, &a)| a * b0 == other.terms[k] * a0);
        ok.then_some((a0, b0))
    }
}

impl fmt::Display for FockStateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({}{:+}i){k}", c.re, c.im)).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetryMap {
    pub name: String,
    pub antiunitary: bool,
    /// U g U⁻¹ = phase · g′ for every generator g.
    pub action: BTreeMap<Generator, (Phase, Generator)>,
    /// Remarks about how the table was completed.
    pub notes: Vec<String>,
}

impl SymmetryMap {
    /// Complete a table given on half the generators: the adjoint of U g U⁻¹ = φg′ is
    /// U g† U⁻¹ = φ*g′†, for unitary and antiunitary U alike. Momentum entries on `p` are
    /// extended to `−p` by relabeling.
    fn from_primary(name: &str, antiunitary: bool, primary: &[(Generator, Phase, Generator)]) -> Self {
        let mut action = BTreeMap::new();
        for &(g, ph, h) in primary {
            for (g, h) in [(g, h), (g.reflected(), h.reflected())] {
                action.insert(g, (ph, h));
                action.insert(g.adjoint(), (ph.conj(), h.adjoint()));
            }
        }
        SymmetryMap { name: name.into(), antiunitary, action, notes: Vec::new() }
    }

    pub fn apply_generator(&self, g: &Generator) -> Result<(Phase, Generator)> {
        self.action.get(g).copied().ok_or_else(|| Error::UndefinedGenerator(format!("{} on {g}", self.name)))
    }

    /// Acts through the creators with an invariant vacuum; antiunitary maps conjugate
    /// coefficients first.
    pub fn apply_state(&self, s: &FockStateVector) -> Result<FockStateVector> {
        let mut out = FockStateVector::default();
        for (&k, &c) in &s.terms {
            let (ph, h) = self.apply_generator(&k.creator())?;
            if !h.daggered {
                return Err(Error::Invalid(format!("{} sends creator {} to annihilator {h}", self.name, k.creator())));
            }
            let c = if self.antiunitary { c.conj() } else { c };
            out.add(Ket { species: h.species, eta: h.eta, momentum: h.momentum }, c * ph.to_gauss());
        }
        Ok(out)
    }

    pub fn inverse(&self) -> SymmetryMap {
        // unitary: U⁻¹g′U = φ*g;  antiunitary: V⁻¹g′V = φg
        let action = self
            .action
            .iter()
            .map(|(&g, &(ph, h))| (h, (if self.antiunitary { ph } else { ph.conj() }, g)))
            .collect();
        SymmetryMap { name: format!("{}⁻¹", self.name), antiunitary: self.antiunitary, action, notes: Vec::new() }
    }

    pub fn is_bijection(&self) -> bool {
        let all = Generator::all();
        let mut images: Vec<Generator> = all.iter().filter_map(|g| self.action.get(g).map(|x| x.1)).collect();
        images.sort();
        images.dedup();
        images.len() == all.len() && self.action.len() == all.len()
    }
}

use Half::{Down, Up};
use MomentumLabel::{MinusP, P};

/// Space inversion.
pub fn u_s() -> SymmetryMap {
    let mut m = SymmetryMap::from_primary(
        "U^s",
        false,
        &[
            (Generator::a(Up, P), Phase::MINUS_I, Generator::a(Down, MinusP)),
            (Generator::a(Down, P), Phase::I, Generator::a(Up, MinusP)),
            (Generator::b_dag(Up, P), Phase::I, Generator::b_dag(Down, MinusP)),
            (Generator::b_dag(Down, P), Phase::MINUS_I, Generator::b_dag(Up, MinusP)),
        ],
    );
    m.notes.push("image of b†_↓(p) taken as −i b†_↑(−p) (daggered) so that the map is a bijection".into());
    m
}

/// Charge conjugation a → b, b† → −a†.
pub fn u_c() -> SymmetryMap {
    let mut prim = Vec::new();
    for eta in Half::BOTH {
        prim.push((Generator::a(eta, P), Phase::ONE, Generator::b(eta, P)));
        prim.push((Generator::b_dag(eta, P), Phase::MINUS_ONE, Generator::a_dag(eta, P)));
    }
    SymmetryMap::from_primary("U^c", false, &prim)
}

/// Charge conjugation with helicity flip: a_η → −b_{−η}, b†_η → +a†_{−η}.
pub fn v_c() -> SymmetryMap {
    let mut prim = Vec::new();
    for eta in Half::BOTH {
        prim.push((Generator::a(eta, P), Phase::MINUS_ONE, Generator::b(eta.flip(), P)));
        prim.push((Generator::b_dag(eta, P), Phase::ONE, Generator::a_dag(eta.flip(), P)));
    }
    SymmetryMap::from_primary("Ṽ^c", false, &prim)
}

/// Antiunitary time reversal.
pub fn v_t() -> SymmetryMap {
    SymmetryMap::from_primary(
        "V^T",
        true,
        &[
            (Generator::a_dag(Up, P), Phase::ONE, Generator::a_dag(Down, MinusP)),
            (Generator::a_dag(Down, P), Phase::MINUS_ONE, Generator::a_dag(Up, MinusP)),
            (Generator::b(Up, P), Phase::ONE, Generator::b(Down, MinusP)),
            (Generator::b(Down, P), Phase::MINUS_ONE, Generator::b(Up, MinusP)),
        ],
    )
}

pub fn all_maps() -> Vec<SymmetryMap> {
    vec![u_s(), u_c(), v_c(), v_t()]
}

pub fn map_by_name(name: &str) -> Result<SymmetryMap> {
    all_maps()
        .into_iter()
        .find(|m| m.name == name)
        .ok_or_else(|| Error::InvalidIndex(format!("unknown symmetry map {name}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Commute,
    Anticommute,
    Neither,
}

/// Compare m1∘m2 with m2∘m1 on the given kets.
pub fn classify(m1: &SymmetryMap, m2: &SymmetryMap, kets: &[Ket]) -> Result<Relation> {
    let (mut all_eq, mut all_opp) = (true, true);
    for &k in kets {
        let s = FockStateVector::ket(k);
        let x = m1.apply_state(&m2.apply_state(&s)?)?;
        let y = m2.apply_state(&m1.apply_state(&s)?)?;
        all_eq &= x == y;
        all_opp &= x == y.scale(Gauss::new(-1, 0));
    }
    Ok(match (all_eq, all_opp) {
        (true, _) => Relation::Commute,
        (false, true) => Relation::Anticommute,
        _ => Relation::Neither,
    })
}

/// Classify over all eight basis kets, and separately over the p and −p halves.
pub fn compose_check(m1: &SymmetryMap, m2: &SymmetryMap) -> Result<(Relation, VerificationReport)> {
    let all = Ket::all();
    let on_p: Vec<Ket> = all.iter().copied().filter(|k| k.momentum == P).collect();
    let on_mp: Vec<Ket> = all.iter().copied().filter(|k| k.momentum == MinusP).collect();
    let rel = classify(m1, m2, &all)?;
    let stable = classify(m1, m2, &on_p)? == rel && classify(m1, m2, &on_mp)? == rel;
    let id = format!("fock.compose.{}.{}", m1.name, m2.name);
    let ids = vec![
        IdentityCheck::info(&id, &format!("{}{} vs {}{} on one-particle kets", m1.name, m2.name, m2.name, m1.name))
            .note(format!("{rel:?}")),
        IdentityCheck::exact(&format!("{id}.relabel_stable"), "classification unchanged under p → −p", usize::from(!stable)),
    ];
    Ok((rel, VerificationReport::new("fock", 0, 1, 0.0, ids)))
}

/// The uniform phase of m² on all kets, if there is one.
pub fn square_phase(m: &SymmetryMap) -> Result<Option<Phase>> {
    let mut phase = None;
    for k in Ket::all() {
        let s = FockStateVector::ket(k);
        let sq = m.apply_state(&m.apply_state(&s)?)?;
        let Some((a, b)) = sq.proportionality(&s) else { return Ok(None) };
        if b != Gauss::new(1, 0) {
            return Ok(None);
        }
        let Some(ph) = Phase::from_gauss(a) else { return Ok(None) };
        match phase {
            None => phase = Some(ph),
            Some(q) if q != ph => return Ok(None),
            _ => {}
        }
    }
    Ok(phase)
}

/// `m|ψ⟩ = λ|ψ⟩` (strict) or `m|ψ⟩ = λ R|ψ⟩` with R the p → −p relabeling; λ ∈ Z₄.
pub fn eigenphase(m: &SymmetryMap, s: &FockStateVector, reflect: bool) -> Result<Option<Phase>> {
    let img = m.apply_state(s)?;
    let target = if reflect { s.reflected() } else { s.clone() };
    Ok(img.proportionality(&target).and_then(|(a, b)| if b == Gauss::new(1, 0) { Phase::from_gauss(a) } else { None }))
}

/// |p,↑⟩⁺ ± i|p,↑⟩⁻ with their U^c eigenphases.
pub fn c_eigenstates() -> Result<Vec<(FockStateVector, Phase)>> {
    let uc = u_c();
    let mut out = Vec::new();
    for s in [1, -1] {
        let st = FockStateVector::from_terms(&[(Gauss::new(1, 0), Ket::plus(Up, P)), (Gauss::new(0, s), Ket::minus(Up, P))]);
        let ph = eigenphase(&uc, &st, false)?
            .ok_or_else(|| Error::Invalid(format!("{st} is not a U^c eigenstate")))?;
        out.push((st, ph));
    }
    Ok(out)
}

/// |p,↑⟩⁺ ± i|p,↓⟩⁺, eigenstates of U^s up to p → −p.
pub fn parity_eigenstates() -> Result<Vec<(FockStateVector, Phase)>> {
    let us = u_s();
    let mut out = Vec::new();
    for s in [1, -1] {
        let st = FockStateVector::from_terms(&[(Gauss::new(1, 0), Ket::plus(Up, P)), (Gauss::new(0, s), Ket::plus(Down, P))]);
        let ph = eigenphase(&us, &st, true)?
            .ok_or_else(|| Error::Invalid(format!("{st} is not a parity eigenstate")))?;
        out.push((st, ph));
    }
    Ok(out)
}

/// All 1- and 2-term combinations of basis kets with Z₄ coefficients (first coefficient 1).
pub fn small_combinations() -> Vec<FockStateVector> {
    let kets = Ket::all();
    let mut out: Vec<FockStateVector> = kets.iter().map(|&k| FockStateVector::ket(k)).collect();
    for i in 0..kets.len() {
        for j in i + 1..kets.len() {
            for q in 0..4 {
                out.push(FockStateVector::from_terms(&[(Gauss::new(1, 0), kets[i]), (Phase(q).to_gauss(), kets[j])]));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimultaneousSearch {
    pub searched: usize,
    pub parity_eigen: usize,
    pub c_eigen: usize,
    /// states that are eigenstates of both (strict or reflected parity)
    pub simultaneous: Vec<String>,
}

pub fn simultaneous_eigenstate_search() -> Result<SimultaneousSearch> {
    let (us, uc) = (u_s(), u_c());
    let combos = small_combinations();
    let (mut np, mut nc, mut both) = (0, 0, Vec::new());
    for s in &combos {
        let p = eigenphase(&us, s, false)?.is_some() || eigenphase(&us, s, true)?.is_some();
        let c = eigenphase(&uc, s, false)?.is_some();
        np += usize::from(p);
        nc += usize::from(c);
        if p && c {
            both.push(s.to_string());
        }
    }
    Ok(SimultaneousSearch { searched: combos.len(), parity_eigen: np, c_eigen: nc, simultaneous: both })
}

/// `(2π)³ 2E_p δ³(𝐩 − 𝐩′) δ_{η,−η′}`, the nonzero value of an anticommutator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BracketValue {
    Zero,
    Normalization,
}

impl fmt::Display for BracketValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketValue::Zero => f.write_str("0"),
            BracketValue::Normalization => f.write_str("(2π)³ 2E_p δ³(p − p′) δ_{η,−η′}"),
        }
    }
}

/// Anticommutator {g1, g2} (symmetric). Nonzero only for an annihilator/creator pair of the
/// same species, equal momentum labels and opposite η.
pub fn bracket(g1: &Generator, g2: &Generator) -> BracketValue {
    let paired = g1.species == g2.species
        && g1.daggered != g2.daggered
        && g1.momentum == g2.momentum
        && g1.eta == g2.eta.flip();
    if paired {
        BracketValue::Normalization
    } else {
        BracketValue::Zero
    }
}

/// S(T) = diag(Θ, Θ) with Θ = [[0, −1], [1, 0]].
pub fn time_reversal_matrix() -> MatrixC {
    let th = MatrixC::from_rows(&[[ZERO, -ONE], [ONE, ZERO]]);
    MatrixC::block_diag(&th, &th)
}

/// The fock suite: every check here is exact.
pub fn fock_suite() -> Result<VerificationReport> {
    let mut ids = Vec::new();
    let (us, uc, vc) = (u_s(), u_c(), v_c());

    let mut inverse_failures = 0;
    let mut bij_failures = 0;
    for m in all_maps() {
        bij_failures += usize::from(!m.is_bijection());
        let inv = m.inverse();
        for g in Generator::all() {
            let (ph, h) = m.apply_generator(&g)?;
            let (ph2, g2) = inv.apply_generator(&h)?;
            // m⁻¹(φh) = φ·m⁻¹(h) for unitary, φ*·m⁻¹(h) for antiunitary
            let total = if m.antiunitary { ph.conj().mul(ph2) } else { ph.mul(ph2) };
            inverse_failures += usize::from(g2 != g || total != Phase::ONE);
        }
        for k in Ket::all() {
            for c in [Gauss::new(1, 0), Gauss::new(2, -3)] {
                let s = FockStateVector::ket(k).scale(c);
                inverse_failures += usize::from(inv.apply_state(&m.apply_state(&s)?)? != s);
            }
        }
    }
    ids.push(IdentityCheck::exact("fock.bijection", "every symmetry map permutes the generators up to a phase", bij_failures));
    ids.push(IdentityCheck::exact("fock.inverse", "m⁻¹ ∘ m = 1 on generators and states", inverse_failures));

    let tables = [
        (&us, Ket::plus(Up, P), Phase::I, Ket::plus(Down, MinusP), "U^s|p,↑⟩⁺ = +i|−p,↓⟩⁺"),
        (&vc, Ket::plus(Up, P), Phase::MINUS_ONE, Ket::minus(Down, P), "Ṽ^c|p,↑⟩⁺ = −|p,↓⟩⁻"),
        (&uc, Ket::plus(Up, P), Phase::ONE, Ket::minus(Up, P), "U^c|p,↑⟩⁺ = +|p,↑⟩⁻"),
    ];
    let mut table_fail = 0;
    for (m, k, ph, k2, _) in tables {
        let got = m.apply_state(&FockStateVector::ket(k))?;
        table_fail += usize::from(got != FockStateVector::ket(k2).scale(ph.to_gauss()));
    }
    let (g, h) = (Generator::a(Up, P), us.apply_generator(&Generator::a(Up, P))?);
    table_fail += usize::from(h != (Phase::MINUS_I, Generator::a(Down, MinusP)));
    ids.push(
        IdentityCheck::exact("fock.state_tables", "U^s|p,↑⟩⁺ = +i|−p,↓⟩⁺; Ṽ^c|p,↑⟩⁺ = −|p,↓⟩⁻; U^s a_↑(p) = −i a_↓(−p)", table_fail)
            .note(format!("{g} ↦ {}{}", h.0, h.1)),
    );

    let anti = v_t();
    let s = FockStateVector::ket(Ket::plus(Up, P)).scale(Gauss::new(0, 1));
    let img = anti.apply_state(&s)?;
    let expect = anti.apply_state(&FockStateVector::ket(Ket::plus(Up, P)))?.scale(Gauss::new(0, -1));
    ids.push(IdentityCheck::exact("fock.antiunitary", "V^T(c|ψ⟩) = c* V^T|ψ⟩", usize::from(img != expect)));

    let (r1, _) = compose_check(&uc, &us)?;
    let (r2, _) = compose_check(&vc, &us)?;
    let stable1 = compose_check(&uc, &us)?.1.passed;
    let stable2 = compose_check(&vc, &us)?.1.passed;
    ids.push(
        IdentityCheck::exact("fock.commute.Uc_Us", "U^c and U^s commute on every one-particle ket", usize::from(r1 != Relation::Commute || !stable1))
            .note(format!("{r1:?}")),
    );
    ids.push(
        IdentityCheck::exact("fock.anticommute.Vc_Us", "Ṽ^c and U^s anticommute on every one-particle ket", usize::from(r2 != Relation::Anticommute || !stable2))
            .note(format!("{r2:?}; vacuum taken as even, so the relation is stated on one-particle kets")),
    );
    let x = vc.apply_state(&us.apply_state(&FockStateVector::ket(Ket::plus(Up, P)))?)?;
    let y = us.apply_state(&vc.apply_state(&FockStateVector::ket(Ket::plus(Up, P)))?)?;
    let want_x = FockStateVector::ket(Ket::minus(Up, MinusP)).scale(Gauss::new(0, -1));
    ids.push(IdentityCheck::exact(
        "fock.anticommute.example",
        "Ṽ^cU^s|p,↑⟩⁺ = −i|−p,↑⟩⁻, U^sṼ^c|p,↑⟩⁺ = +i|−p,↑⟩⁻",
        usize::from(x != want_x) + usize::from(y != want_x.scale(Gauss::new(-1, 0))),
    ));

    let sq = square_phase(&uc)?;
    ids.push(
        IdentityCheck::exact("fock.uc_squared", "(U^c)² acts as a uniform phase on one-particle kets", usize::from(sq.is_none()))
            .note(format!("computed phase {}", sq.map(|p| p.to_string()).unwrap_or_else(|| "none".into()))),
    );

    let ce = c_eigenstates()?;
    let ce_fail = usize::from(ce[0].1 != Phase::MINUS_I) + usize::from(ce[1].1 != Phase::I);
    ids.push(IdentityCheck::exact("fock.c_eigenstates", "U^c(|p,↑⟩⁺ ± i|p,↑⟩⁻) = ∓i(|p,↑⟩⁺ ± i|p,↑⟩⁻)", ce_fail));
    let pe = parity_eigenstates()?;
    let pe_fail = usize::from(pe[0].1 != Phase::ONE)
        + usize::from(pe[1].1 != Phase::MINUS_ONE)
        + pe.iter().map(|(s, _)| usize::from(eigenphase(&uc, s, false).ok().flatten().is_some())).sum::<usize>();
    ids.push(IdentityCheck::exact(
        "fock.parity_eigenstates",
        "|p,↑⟩⁺ ± i|p,↓⟩⁺ have parity ±1 (up to p → −p) and are not U^c eigenstates",
        pe_fail,
    ));
    let search = simultaneous_eigenstate_search()?;
    ids.push(
        IdentityCheck::exact("fock.no_simultaneous", "no simultaneous P and U^c eigenstate", search.simultaneous.len()).note(format!(
            "{} one- and two-term combinations searched; {} parity eigenstates, {} U^c eigenstates",
            search.searched, search.parity_eigen, search.c_eigen
        )),
    );

    let mut br_fail = 0;
    for g1 in Generator::all() {
        for g2 in Generator::all() {
            let expect = g1.species == g2.species && g1.daggered != g2.daggered && g1.momentum == g2.momentum && g1.eta != g2.eta;
            br_fail += usize::from((bracket(&g1, &g2) == BracketValue::Normalization) != expect);
            br_fail += usize::from(bracket(&g1, &g2) != bracket(&g2, &g1));
        }
    }
    br_fail += usize::from(bracket(&Generator::a(Up, P), &Generator::a_dag(Down, P)) == BracketValue::Zero);
    br_fail += usize::from(bracket(&Generator::a(Up, P), &Generator::a_dag(Up, P)) != BracketValue::Zero);
    br_fail += usize::from(bracket(&Generator::a(Up, P), &Generator::b_dag(Down, P)) != BracketValue::Zero);
    ids.push(IdentityCheck::exact("fock.bracket", "{a_η′(p′), a†_η(p)} ∝ δ_{η,−η′}; {a, b†} = 0", br_fail));

    let st = time_reversal_matrix();
    let unit = (&st * &st.adjoint()).distance(&MatrixC::identity(4));
    let sig = (&(&st * &st.conj()) + &MatrixC::identity(4)).max_abs();
    ids.push(IdentityCheck::exact(
        "fock.time_reversal_matrix",
        "S(T) = diag(Θ, Θ) is unitary and S(T)S(T)* = −1",
        usize::from(unit != 0.0) + usize::from(sig != 0.0),
    ));

    ids[0].notes.extend(us.notes.iter().cloned());
    Ok(VerificationReport::new("fock", 0, 1, 0.0, ids))
}
