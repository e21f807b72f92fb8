use proptest::prelude::*;

use racah::random::{rng, usl2_element};
use racah::usl2::{commutator, USl2Element};

fn element(seed: u64) -> USl2Element {
    usl2_element(&mut rng(seed), 3, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(s in any::<u64>()) {
        let (u, v, w) = (element(s), element(s ^ 1), element(s ^ 2));
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    }

    #[test]
    fn multiplication_distributes(s in any::<u64>()) {
        let (u, v, w) = (element(s), element(s ^ 1), element(s ^ 2));
        prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
        prop_assert_eq!(&(&v + &w) * &u, &(&v * &u) + &(&w * &u));
    }

    #[test]
    fn unit_and_zero(s in any::<u64>()) {
        let u = element(s);
        prop_assert_eq!(&USl2Element::one() * &u, u.clone());
        prop_assert_eq!(&u * &USl2Element::one(), u.clone());
        prop_assert!((&u * &USl2Element::zero()).is_zero());
        prop_assert!((&u - &u).is_zero());
    }

    #[test]
    fn stored_coefficients_are_nonzero(s in any::<u64>()) {
        let p = &element(s) * &element(s ^ 7);
        prop_assert!(p.terms().all(|(_, c)| *c != racah::scalar::zero()));
    }

    #[test]
    fn jacobi_identity(s in any::<u64>()) {
        let (u, v, w) = (element(s), element(s ^ 1), element(s ^ 2));
        let total = &(&commutator(&u, &commutator(&v, &w)) + &commutator(&v, &commutator(&w, &u)))
            + &commutator(&w, &commutator(&u, &v));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn grading_is_multiplicative(s in any::<u64>()) {
        let (u, v) = (element(s), element(s ^ 3));
        let (du, dv) = (u.decompose(), v.decompose());
        prop_assert!(du.is_consistent());
        prop_assert_eq!(du.sum(), u.clone());
        for m in du.degrees() {
            for n in dv.degrees() {
                let p = &du.component(m) * &dv.component(n);
                prop_assert!(p.is_homogeneous(m + n));
            }
        }
    }

    #[test]
    fn casimir_is_central(s in any::<u64>()) {
        let u = element(s);
        prop_assert!(commutator(&USl2Element::casimir(), &u).is_zero());
    }
}
