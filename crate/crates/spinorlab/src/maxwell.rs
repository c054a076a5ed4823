//! Maxwell-like equations with a scalar χ, Riemann–Silberstein evolution under ±S·𝐤, and the
//! root structure of Det[E ∓ S·𝐩] and of the chiral-mass Dirac operator.
//!
//! Fields are plane waves F₀e^{i(𝐤·𝐱 − ωt)}, so ∇ → i𝐤 and ∂_t → −iω.

use serde::{Deserialize, Serialize};

use crate::algebra::{dot3, gamma, slash, spin1_matrices, GammaBasis};
use crate::error::{Error, Result};
use crate::exact::{dot, gi, spin1_cartesian, GaussMatrix};
use crate::matrix::{re, vnorm, vscale, vsub, MatrixC, C64, I, ZERO};
use crate::poly::{clustered_roots, interpolate_checked, PolynomialC, RootCluster};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldTriple {
    pub e: [C64; 3],
    pub b: [C64; 3],
    /// Re χ and Im χ enter as the real and imaginary parts of this amplitude.
    pub chi: C64,
    pub k: [f64; 3],
    pub omega: f64,
}

impl FieldTriple {
    pub fn scaled(&self, s: f64) -> FieldTriple {
        FieldTriple {
            e: self.e.map(|x| x * s),
            b: self.b.map(|x| x * s),
            chi: self.chi * s,
            ..self.clone()
        }
    }

    /// Sum of the field amplitudes of two triples with the same k and ω.
    pub fn plus(&self, o: &FieldTriple) -> FieldTriple {
        FieldTriple {
            e: std::array::from_fn(|i| self.e[i] + o.e[i]),
            b: std::array::from_fn(|i| self.b[i] + o.b[i]),
            chi: self.chi + o.chi,
            ..self.clone()
        }
    }
}

/// Residuals of
/// ∇×𝐄 + ∂_t𝐁 − ∇Im χ, ∇×𝐁 − ∂_t𝐄 − ∇Re χ, ∇·𝐄 + ∂_t Re χ, ∇·𝐁 − ∂_t Im χ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaxwellResidual {
    pub curl_e: [C64; 3],
    pub curl_b: [C64; 3],
    pub div_e: C64,
    pub div_b: C64,
}

impl MaxwellResidual {
    pub fn max_abs(&self) -> f64 {
        self.curl_e
            .iter()
            .chain(&self.curl_b)
            .chain([&self.div_e, &self.div_b])
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn flatten(&self) -> Vec<C64> {
        let mut v = self.curl_e.to_vec();
        v.extend_from_slice(&self.curl_b);
        v.push(self.div_e);
        v.push(self.div_b);
        v
    }
}

fn to3(v: Vec<C64>) -> [C64; 3] {
    [v[0], v[1], v[2]]
}

/// Curls go through 𝐤×𝐕 = −i(S·𝐤)𝐕 with (S_i)_{jk} = −iε_{ijk}.
pub fn maxwell_residual(f: &FieldTriple) -> MaxwellResidual {
    let sk = dot3(&spin1_matrices(), f.k);
    let k_cross = |v: &[C64; 3]| vscale(&sk.apply(v), -I);
    let w = f.omega;
    let (chi_re, chi_im) = (f.chi.re, f.chi.im);
    let ik = f.k.map(|x| I * x);
    let curl_e = std::array::from_fn(|j| I * k_cross(&f.e)[j] - I * w * f.b[j] - ik[j] * chi_im);
    let curl_b = std::array::from_fn(|j| I * k_cross(&f.b)[j] + I * w * f.e[j] - ik[j] * chi_re);
    let div = |v: &[C64; 3]| -> C64 { (0..3).map(|j| ik[j] * v[j]).sum() };
    MaxwellResidual {
        curl_e,
        curl_b,
        div_e: div(&f.e) - I * w * chi_re,
        div_b: div(&f.b) + I * w * chi_im,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RSVector {
    pub phi: [C64; 3],
    pub xi: [C64; 3],
}

impl RSVector {
    /// φ = 𝐄 + i𝐁, ξ = 𝐄 − i𝐁.
    pub fn from_fields(e: &[C64; 3], b: &[C64; 3]) -> Self {
        RSVector {
            phi: std::array::from_fn(|i| e[i] + I * b[i]),
            xi: std::array::from_fn(|i| e[i] - I * b[i]),
        }
    }

    pub fn e(&self) -> [C64; 3] {
        std::array::from_fn(|i| (self.phi[i] + self.xi[i]) * 0.5)
    }

    pub fn b(&self) -> [C64; 3] {
        std::array::from_fn(|i| (self.phi[i] - self.xi[i]) * (-0.5 * I))
    }
}

/// Generators (S·𝐤, −S·𝐤) of i∂_tφ = (S·𝐩̂)φ and i∂_tξ = −(S·𝐩̂)ξ.
pub fn rs_evolution_matrices(k: [f64; 3]) -> (MatrixC, MatrixC) {
    let sk = dot3(&spin1_matrices(), k);
    let neg = -&sk;
    (sk, neg)
}

/// ‖ωφ − (S·𝐤)φ‖ and ‖ωξ + (S·𝐤)ξ‖ for a plane wave.
pub fn rs_evolution_residual(rs: &RSVector, k: [f64; 3], omega: f64) -> [f64; 2] {
    let (gp, gm) = rs_evolution_matrices(k);
    let r = |g: &MatrixC, v: &[C64; 3]| vnorm(&vsub(&vscale(v, re(omega)), &g.apply(v)));
    [r(&gp, &rs.phi), r(&gm, &rs.xi)]
}

/// Det[E·I − sign·S·𝐤].
pub fn rs_determinant(e: C64, k: [f64; 3], sign: f64) -> C64 {
    let sk = dot3(&spin1_matrices(), k).scale_re(sign);
    let m = &MatrixC::identity(3).scale(e) - &sk;
    m.det().unwrap_or(ZERO)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacteristicRoots {
    pub polynomial: PolynomialC,
    /// max |P(E) − E(E² − |𝐤|²)| / scale³ over five check energies
    pub identity_defect: f64,
    /// sorted by real part
    pub roots: Vec<C64>,
}

/// Characteristic polynomial of ±S·𝐤 interpolated in E, compared with E(E² − |𝐤|²), and its roots.
pub fn rs_characteristic_roots(k: [f64; 3], sign: f64) -> Result<CharacteristicRoots> {
    let k2: f64 = k.iter().map(|x| x * x).sum();
    let scale = k2.sqrt().max(1.0);
    let (poly, _) = interpolate_checked(|e| rs_determinant(re(e), k, sign), 4, scale)?;
    let poly = poly.trimmed(scale, 1e-13);
    let identity_defect = [-1.7, -0.45, 0.0, 0.8, 2.3]
        .iter()
        .map(|&t| {
            let e = t * scale;
            (poly.eval(re(e)) - re(e * (e * e - k2))).norm() / scale.powi(3)
        })
        .fold(0.0, f64::max);
    let mut roots = poly.roots()?;
    roots.sort_by(|a, b| a.re.total_cmp(&b.re));
    Ok(CharacteristicRoots { polynomial: poly, identity_defect, roots })
}

/// Null vector of S·𝐤 (the longitudinal mode), from the cross product of its two largest rows.
pub fn longitudinal_mode(k: [f64; 3]) -> Result<[C64; 3]> {
    let sk = dot3(&spin1_matrices(), k);
    let rows: Vec<[C64; 3]> = (0..3).map(|i| [sk[(i, 0)], sk[(i, 1)], sk[(i, 2)]]).collect();
    let mut best = ([ZERO; 3], 0.0);
    for i in 0..3 {
        for j in i + 1..3 {
            let (a, b) = (rows[i], rows[j]);
            let v = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
            let n = vnorm(&v);
            if n > best.1 {
                best = (v, n);
            }
        }
    }
    if best.1 == 0.0 {
        return Err(Error::Invalid("S·k has rank < 2".into()));
    }
    Ok(best.0.map(|z| z / best.1))
}

/// (E − S·𝐩)(E + S·𝐩)ψ − 𝐩(𝐩·ψ) − m²ψ.
pub fn kg_factorization_spin1(e: f64, p: [f64; 3], m: f64, psi: &[C64; 3]) -> [C64; 3] {
    let sp = dot3(&spin1_matrices(), p);
    let id = MatrixC::identity(3).scale_re(e);
    let lhs = (&(&id - &sp) * &(&id + &sp)).apply(psi);
    let pdot: C64 = (0..3).map(|i| psi[i] * p[i]).sum();
    to3((0..3).map(|i| lhs[i] - pdot * p[i] - psi[i] * (m * m)).collect())
}

/// Exact `(E − S·𝐩)(E + S·𝐩) − 𝐩𝐩ᵀ − (E² − 𝐩²)I` over the integers; zero means the residual of
/// [`kg_factorization_spin1`] is exactly (E² − 𝐩² − m²)ψ.
pub fn kg_factorization_defect_exact(e: i64, p: [i64; 3]) -> GaussMatrix {
    let sp = dot(&spin1_cartesian(), p);
    let id = GaussMatrix::identity(3).scale(gi(e, 0));
    let p2: i64 = p.iter().map(|x| x * x).sum();
    let lhs = &(&id - &sp) * &(&id + &sp);
    let ppt = GaussMatrix::from_fn(3, |i, j| gi(p[i] * p[j], 0));
    &(&lhs - &ppt) - &GaussMatrix::identity(3).scale(gi(e * e - p2, 0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiralDispersion {
    pub m1: f64,
    pub m2: f64,
    pub p3: f64,
    pub roots: Vec<RootCluster>,
    /// E² − 𝐩² averaged over the root clusters
    pub mass_sq: C64,
    /// max over roots of |(E² − 𝐩²) − mass_sq|
    pub spread: f64,
}

/// Det[γ·p + m₁ + m₂γ⁵] at 𝐩 = |𝐩|ẑ.
pub fn chiral_mass_determinant(e: f64, p3: f64, m1: f64, m2: f64) -> C64 {
    let g5 = gamma(5, GammaBasis::Chiral).unwrap();
    let op = &(&slash(e, [0.0, 0.0, p3], GammaBasis::Chiral) + &MatrixC::identity(4).scale_re(m1)) + &g5.scale_re(m2);
    op.det().unwrap_or(ZERO)
}

/// Roots in E of the quartic Det[γ·p + m₁ + m₂γ⁵] = 0 at fixed |𝐩|.
pub fn chiral_mass_dispersion(m1: f64, m2: f64, p3: f64) -> Result<ChiralDispersion> {
    let scale = (p3 * p3 + m1 * m1 + m2 * m2).sqrt().max(1e-3);
    let (poly, _) = interpolate_checked(|e| chiral_mass_determinant(e, p3, m1, m2), 5, scale)?;
    let poly = poly.trimmed(scale, 1e-12);
    if poly.degree() != 4 {
        return Err(Error::Invalid(format!("chiral-mass determinant has degree {}", poly.degree())));
    }
    let roots = clustered_roots(&poly, 1e-4 * scale)?;
    let shell: Vec<C64> = roots.iter().map(|r| r.center * r.center - p3 * p3).collect();
    let mass_sq = shell.iter().sum::<C64>() / shell.len() as f64;
    let spread = shell.iter().map(|s| (s - mass_sq).norm()).fold(0.0, f64::max);
    Ok(ChiralDispersion { m1, m2, p3, roots, mass_sq, spread })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{c, vdiff};
    use crate::exact::levi_civita;
    use proptest::prelude::*;

    fn eps_cross(a: [f64; 3], b: &[C64; 3]) -> [C64; 3] {
        std::array::from_fn(|i| {
            let mut s = ZERO;
            for j in 0..3 {
                for k in 0..3 {
                    s += b[k] * (levi_civita(i, j, k) as f64 * a[j]);
                }
            }
            s
        })
    }

    /// Componentwise evaluation with explicit Levi-Civita loops.
    fn oracle(f: &FieldTriple) -> Vec<C64> {
        let ce = eps_cross(f.k, &f.e);
        let cb = eps_cross(f.k, &f.b);
        let (cr, ci) = (f.chi.re, f.chi.im);
        let mut out = Vec::new();
        for j in 0..3 {
            out.push(I * ce[j] - I * f.omega * f.b[j] - I * f.k[j] * ci);
        }
        for j in 0..3 {
            out.push(I * cb[j] + I * f.omega * f.e[j] - I * f.k[j] * cr);
        }
        let de: C64 = (0..3).map(|j| I * f.k[j] * f.e[j]).sum();
        let db: C64 = (0..3).map(|j| I * f.k[j] * f.b[j]).sum();
        out.push(de - I * f.omega * cr);
        out.push(db + I * f.omega * ci);
        out
    }

    #[test]
    fn light_wave() {
        let f = FieldTriple { e: [re(1.0), ZERO, ZERO], b: [ZERO, re(1.0), ZERO], chi: ZERO, k: [0.0, 0.0, 1.0], omega: 1.0 };
        assert!(maxwell_residual(&f).max_abs() < 1e-15);
        let rs = RSVector::from_fields(&f.e, &f.b);
        assert!(rs_evolution_residual(&rs, f.k, f.omega).iter().all(|&r| r < 1e-15));
        assert!(vdiff(&rs.e(), &f.e) < 1e-15 && vdiff(&rs.b(), &f.b) < 1e-15);
    }

    #[test]
    fn static_uniform_b() {
        let f = FieldTriple { e: [ZERO; 3], b: [ZERO, ZERO, re(1.0)], chi: ZERO, k: [0.0; 3], omega: 0.0 };
        assert_eq!(maxwell_residual(&f).max_abs(), 0.0);
        // a longitudinal B with k ≠ 0 violates ∇·B = ∂_t Im χ
        let g = FieldTriple { k: [0.0, 0.0, 1.0], ..f };
        assert!((maxwell_residual(&g).div_b - I).norm() < 1e-15);
    }

    #[test]
    fn characteristic_polynomial() {
        let k = [0.0, 0.0, 1.0];
        let cr = rs_characteristic_roots(k, 1.0).unwrap();
        assert_eq!(cr.polynomial.degree(), 3);
        for (r, w) in cr.roots.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((r - re(w)).norm() < 1e-12);
        }
        assert!(cr.identity_defect < 1e-13);
    }

    #[test]
    fn null_vector_is_longitudinal() {
        let k = [0.3, -1.2, 0.7];
        let v = longitudinal_mode(k).unwrap();
        let sk = dot3(&spin1_matrices(), k);
        assert!(vnorm(&sk.apply(&v)) < 1e-14);
        let kn = vnorm(&k.map(re));
        let khat = k.map(|x| re(x / kn));
        let overlap: C64 = (0..3).map(|i| v[i].conj() * khat[i]).sum();
        assert!((overlap.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn kg_factorization() {
        let p = [0.4, -0.3, 1.1];
        let m: f64 = 0.7;
        let psi = [c(1.0, 0.2), c(-0.5, 0.3), c(0.0, 1.0)];
        let e_on = (p.iter().map(|x| x * x).sum::<f64>() + m * m).sqrt();
        assert!(vnorm(&kg_factorization_spin1(e_on, p, m, &psi)) < 1e-14);
        let e_off = 2.0;
        let want = vscale(&psi, re(e_off * e_off - p.iter().map(|x| x * x).sum::<f64>() - m * m));
        assert!(vdiff(&kg_factorization_spin1(e_off, p, m, &psi), &want) < 1e-14);
        // massless, E = |p|
        let e0 = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(vnorm(&kg_factorization_spin1(e0, p, 0.0, &psi)) < 1e-14);
        assert!(kg_factorization_defect_exact(3, [1, -2, 5]).is_zero());
    }

    #[test]
    fn chiral_mass() {
        let d = chiral_mass_dispersion(1.3, 0.0, 0.8).unwrap();
        assert!((d.mass_sq - re(1.69)).norm() < 1e-10);
        assert!(d.roots.iter().all(|r| r.multiplicity == 2));
        for i in 0..10 {
            let p3 = 0.1 + 0.7 * i as f64;
            let d = chiral_mass_dispersion(0.0, 0.9, p3).unwrap();
            // determinant oracle: (p² − m₁² + m₂²)², so E² − 𝐩² = m₁² − m₂²
            assert!((d.mass_sq - re(-0.81)).norm() < 1e-9, "{p3} {:?}", d.mass_sq);
            assert!(d.spread < 1e-9);
        }
        let g = chiral_mass_dispersion(1.1, 0.4, 2.0).unwrap();
        assert_eq!(g.roots.len(), 2);
        assert!(g.roots.iter().all(|r| r.multiplicity == 2));
        assert!((g.mass_sq - re(1.21 - 0.16)).norm() < 1e-9);
        // direct determinant identity at a few points
        for e in [0.3, 1.7, -2.2] {
            let s: f64 = e * e - 4.0;
            let want = (s - 1.21 + 0.16).powi(2);
            assert!((chiral_mass_determinant(e, 2.0, 1.1, 0.4) - re(want)).norm() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn residual_matches_componentwise_oracle(v in proptest::collection::vec(-2.0f64..2.0, 18)) {
            let f = FieldTriple {
                e: [c(v[0], v[1]), c(v[2], v[3]), c(v[4], v[5])],
                b: [c(v[6], v[7]), c(v[8], v[9]), c(v[10], v[11])],
                chi: c(v[12], v[13]),
                k: [v[14], v[15], v[16]],
                omega: v[17],
            };
            let r = maxwell_residual(&f).flatten();
            prop_assert!(vdiff(&r, &oracle(&f)) < 1e-13);
            // linear under real scaling and addition
            let g = f.scaled(-1.7);
            let lin = maxwell_residual(&f.plus(&g)).flatten();
            let sum: Vec<C64> = r.iter().zip(maxwell_residual(&g).flatten()).map(|(a, b)| a + b).collect();
            prop_assert!(vdiff(&lin, &sum) < 1e-12);
        }

        #[test]
        fn exact_square_identity(p in proptest::array::uniform3(-20i64..20), e in -30i64..30) {
            prop_assert!(crate::exact::spin1_square_defect(p).is_zero());
            prop_assert!(kg_factorization_defect_exact(e, p).is_zero());
        }

        #[test]
        fn rs_roots(k in proptest::array::uniform3(-5.0f64..5.0), sign in prop_oneof![Just(1.0), Just(-1.0)]) {
            let kn = k.iter().map(|x| x * x).sum::<f64>().sqrt();
            prop_assume!(kn > 1e-3);
            let cr = rs_characteristic_roots(k, sign).unwrap();
            let want = [-kn, 0.0, kn];
            for (r, w) in cr.roots.iter().zip(want) {
                prop_assert!((r - re(w)).norm() < 1e-12 * kn.max(1.0), "{:?} vs {:?}", cr.roots, want);
            }
        }
    }
}
