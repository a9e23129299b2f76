use proptest::prelude::*;
use su3_fusion::alcove::zeta_pow;
use su3_fusion::level_profiles::{profile_direct, profile_formula, sigma_enum, verify_property_p};
use su3_fusion::multiplicity::{classical_multiplicity, is_admissible, semimagic_multiplicity};
use su3_fusion::oblades::{enumerate_couplings, psi_oblade, psi_triple, weights_of};
use su3_fusion::{fusion_coefficient, k0_min, thresholds, Level, Triple, Truncation, Weight};

fn weight(max: u32) -> impl Strategy<Value = Weight> {
    (0..=max, 0..=max).prop_map(|(a, b)| Weight::new(a, b))
}

fn triple(max: u32) -> impl Strategy<Value = Triple> {
    (weight(max), weight(max), weight(max)).prop_map(|(l, m, n)| Triple::new(l, m, n))
}

fn admissible(max: u32) -> impl Strategy<Value = Triple> {
    triple(max).prop_filter("admissible", |&t| is_admissible(t))
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn zeta_has_order_three((k, a, b) in (0u32..20).prop_flat_map(|k| (Just(k), 0..=k)).prop_flat_map(|(k, a)| (Just(k), Just(a), 0..=k - a))) {
        let l = Level::new(k);
        let w = Weight::new(a, b);
        let once = zeta_pow(l, w, 1).unwrap();
        prop_assert!(once.is_integrable(l));
        prop_assert_eq!(zeta_pow(l, w, 3).unwrap(), w);
        if once != w {
            prop_assert_ne!(zeta_pow(l, w, 2).unwrap(), w);
        }
    }

    #[test]
    fn conjugation_is_involutive(w in weight(30)) {
        prop_assert_eq!(w.conjugate().conjugate(), w);
        prop_assert_eq!((w.triality() + w.conjugate().triality()) % 3, 0);
    }

    #[test]
    fn coefficient_symmetries(t in triple(9), k in 0u32..22) {
        let l = Level::new(k);
        let n = fusion_coefficient(t, l);
        prop_assert_eq!(fusion_coefficient(t.swapped(), l), n);
        prop_assert_eq!(fusion_coefficient(t.conjugated(), l), n);
        prop_assert_eq!(fusion_coefficient(t.frobenius(), l), n);
        prop_assert_eq!(semimagic_multiplicity(t).at_level(k), n);
    }

    #[test]
    fn ramp_shape(t in admissible(10)) {
        let p = thresholds(t).unwrap();
        let mut prev = 0;
        for k in 0..=p.k0_max + 3 {
            let n = fusion_coefficient(t, Level::new(k));
            let step = if k < p.k0_min || k > p.k0_max { 0 } else { 1 };
            prop_assert_eq!(n, if k < p.k0_min { 0 } else { prev + step });
            prev = n;
        }
        prop_assert_eq!(prev, classical_multiplicity(t));
    }

    #[test]
    fn threshold_shift(t in admissible(8), u in 0u32..5, v in 0u32..5) {
        let s = Triple::new(
            Weight::new(t.lam.l1 + u, t.lam.l2 + v),
            Weight::new(t.mu.l1 + u, t.mu.l2 + v),
            Weight::new(t.nu.l1 + v, t.nu.l2 + u),
        );
        prop_assert_eq!(k0_min(s).unwrap(), k0_min(t).unwrap() + u + v);
    }

    #[test]
    fn psi_involution(t in admissible(10)) {
        let p = psi_triple(t).unwrap();
        prop_assert_eq!(psi_triple(p).unwrap(), t);
        prop_assert_eq!(classical_multiplicity(p), classical_multiplicity(t));
        prop_assert_eq!(k0_min(p).unwrap(), k0_min(t).unwrap());
        for perm in PERMS {
            prop_assert_eq!(psi_triple(t.permuted(perm)).unwrap(), p.permuted(perm));
        }
    }

    #[test]
    fn psi_on_couplings(t in admissible(10)) {
        let target = psi_triple(t).unwrap();
        for o in enumerate_couplings(t) {
            let image = psi_oblade(&o).unwrap();
            prop_assert_eq!(image.threshold(), o.threshold());
            prop_assert_eq!(weights_of(&image), target);
            prop_assert_eq!(psi_oblade(&image).unwrap(), o);
        }
    }

    #[test]
    fn profiles_and_conjugation(lam in weight(8), mu in weight(8)) {
        let direct = profile_direct(lam, mu);
        prop_assert_eq!(&profile_formula(lam, mu).1, &direct);
        let bar = profile_direct(lam, mu.conjugate());
        prop_assert_eq!(&bar.rows, &direct.rows);
        let first_column: u32 = direct.rows.iter().map(|r| r[0]).sum();
        prop_assert_eq!(first_column as usize, sigma_enum(lam, mu).distinct());
        for k in direct.k_min..=direct.k_max {
            prop_assert!(verify_property_p(lam, mu, Truncation::finite(k)));
        }
    }
}
