use num_complex::Complex64 as C64;
use proptest::prelude::*;

use spinorlab::algebra::{FourMomentum, GammaBasis};
use spinorlab::dirac::{dirac_residual, gram_normalization, spinor, DiracKind, Half, SpinorBasis};
use spinorlab::exec::{map_indexed, Execution};
use spinorlab::majorana::{charge_conjugate, species, ConjClass, Family};
use spinorlab::matrix::{vdiff, MatrixC};
use spinorlab::maxwell::rs_characteristic_roots;
use spinorlab::modeexpand::{
    cross_gram_defect, dirac_relations, frequency_split, polarization_tetrad, spin1_reflection, tetrad_gram,
    transversality_defect, ModeSample, ReflectionConvention,
};
use spinorlab::suites::{run_suite, Suite, SuiteConfig};

const TOL: f64 = 1e-10;

fn momentum(max_ratio: f64) -> impl Strategy<Value = FourMomentum> {
    (0.1f64..10.0, 0.0f64..max_ratio, -1.0f64..1.0, 0.0f64..std::f64::consts::TAU).prop_map(|(m, r, ct, phi)| {
        let st = (1.0 - ct * ct).sqrt();
        let p = m * r;
        FourMomentum::new(m, [p * st * phi.cos(), p * st * phi.sin(), p * ct])
    })
}

fn moving() -> impl Strategy<Value = FourMomentum> {
    momentum(10.0).prop_filter("needs a direction", |k| k.p3() > 1e-3 * k.m)
}

fn half() -> impl Strategy<Value = Half> {
    prop_oneof![Just(Half::Up), Just(Half::Down)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dirac_spinors_solve_wave_equation(k in momentum(10.0), s in half()) {
        for basis in [SpinorBasis::Standard, SpinorBasis::Chiral, SpinorBasis::Helicity] {
            for kind in [DiracKind::U, DiracKind::V] {
                let psi = spinor(&k, kind, s, basis).unwrap();
                prop_assert!(dirac_residual(&psi) <= TOL * k.e().max(1.0), "{basis:?} {kind:?}");
            }
        }
    }

    #[test]
    fn dirac_grams_are_orthonormal(k in momentum(10.0)) {
        for basis in [SpinorBasis::Standard, SpinorBasis::Chiral, SpinorBasis::Helicity] {
            let [uu, vv, uv] = gram_normalization(&k, basis).unwrap();
            let id = MatrixC::identity(2);
            prop_assert!(uu.distance(&id) <= TOL);
            prop_assert!(vv.distance(&id.scale_re(-1.0)) <= TOL);
            prop_assert!(uv.max_abs() <= TOL);
        }
    }

    #[test]
    fn majorana_spinors_are_charge_conjugation_eigenstates(
        k in momentum(10.0),
        eta in half(),
        rho in any::<bool>(),
    ) {
        let family = if rho { Family::Rho } else { Family::Lambda };
        for class in [ConjClass::S, ConjClass::A] {
            let psi = species(family, class, eta, &k).unwrap();
            let cpsi = charge_conjugate(&psi.components, 0.0);
            let expect: Vec<C64> = psi.components.iter().map(|z| z * class.sign()).collect();
            prop_assert!(vdiff(&cpsi, &expect) <= TOL * k.e().max(1.0));
        }
    }

    #[test]
    fn rs_roots_are_zero_and_light_cone(kx in -10.0f64..10.0, ky in -10.0f64..10.0, kz in -10.0f64..10.0) {
        let k = [kx, ky, kz];
        let n = (kx * kx + ky * ky + kz * kz).sqrt();
        for sign in [1.0, -1.0] {
            let r = rs_characteristic_roots(k, sign).unwrap();
            prop_assert_eq!(r.roots.len(), 3);
            for (root, want) in r.roots.iter().zip([-n, 0.0, n]) {
                prop_assert!((root - want).norm() <= 1e-12 * n.max(1.0), "{root} vs {want}");
            }
        }
    }

    #[test]
    fn frequency_split_partitions_and_reconstructs(
        raw in prop::collection::vec((momentum(5.0), -1i8..=1, -1.0f64..1.0, -1.0f64..1.0), 0..40),
    ) {
        let samples: Vec<ModeSample> = raw
            .iter()
            .map(|&(k, s, a, b)| {
                let k = if s == 0 { FourMomentum { energy_sign: 0.0, ..k } } else { k.with_energy_sign(s as f64) };
                ModeSample { k, amplitude: C64::new(a, b) }
            })
            .collect();
        let split = frequency_split(&samples);
        prop_assert_eq!(split.positive.len() + split.negative.len() + split.quarantined.len(), samples.len());
        prop_assert!(split.positive.iter().chain(&split.negative).all(|e| e.k.p0() > 0.0));
        prop_assert_eq!(split.check().is_ok(), split.quarantined.is_empty());
        prop_assert_eq!(split.reconstruct(), samples);
    }

    #[test]
    fn cross_gram_is_basis_independent(k in moving()) {
        for basis in [GammaBasis::Standard, GammaBasis::Chiral] {
            prop_assert!(cross_gram_defect(&k, ReflectionConvention::FourMomentum, basis).unwrap() <= TOL);
        }
    }

    #[test]
    fn dirac_mode_relations_invert(k in moving()) {
        let (b, a) = dirac_relations(&k).unwrap();
        prop_assert!(b.compose_defect(&a).unwrap() <= 1e-14);
        prop_assert!(a.compose_defect(&b).unwrap() <= 1e-14);
    }

    #[test]
    fn spin1_reflection_is_involution(k in moving()) {
        let r = spin1_reflection(&k).unwrap();
        prop_assert!((&r * &r).distance(&MatrixC::identity(3)) <= 1e-14);
    }

    #[test]
    fn polarization_tetrad_is_orthonormal(k in moving(), negative in any::<bool>()) {
        let k = if negative { k.with_energy_sign(-1.0) } else { k };
        let t = polarization_tetrad(&k).unwrap();
        let g = MatrixC::diag(&[1.0, -1.0, -1.0, -1.0].map(|x| C64::new(x, 0.0)));
        let scale = (k.e() / k.m).powi(2);
        prop_assert!(tetrad_gram(&t).distance(&g) <= TOL * scale);
        prop_assert!(transversality_defect(&t) <= TOL * scale);
    }

    #[test]
    fn parallel_map_preserves_order(n in 0usize..500) {
        let f = |i: usize| (i as f64).sqrt().to_bits();
        prop_assert_eq!(map_indexed(Execution::Parallel, n, f), map_indexed(Execution::Sequential, n, f));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn reports_are_deterministic_per_seed(seed in any::<u64>()) {
        let run = |exec| {
            let cfg = SuiteConfig { seed, samples: 20, exec, ..SuiteConfig::default() };
            serde_json::to_string(&run_suite(Suite::ModeExpand, &cfg).unwrap()).unwrap()
        };
        let a = run(Execution::Parallel);
        prop_assert_eq!(&a, &run(Execution::Parallel));
        prop_assert_eq!(&a, &run(Execution::Sequential));
    }
}
