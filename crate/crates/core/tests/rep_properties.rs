use proptest::prelude::*;

use racah::random::{rng, tensor_element};
use racah::rep::{build_irrep, evaluate, random_points};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_multiplicative(s in any::<u64>(), d in 1usize..=4) {
        let u = tensor_element(&mut rng(s), 3, 2);
        let v = tensor_element(&mut rng(s ^ 1), 3, 2);
        let rep = build_irrep(d).unwrap();
        let p = &random_points(s, 1)[0];
        prop_assert_eq!(evaluate(&(&u * &v), &rep, p), &evaluate(&u, &rep, p) * &evaluate(&v, &rep, p));
        prop_assert_eq!(evaluate(&(&u + &v), &rep, p), &evaluate(&u, &rep, p) + &evaluate(&v, &rep, p));
    }

    #[test]
    fn irreps_satisfy_the_relations(d in 1usize..=6) {
        let rep = build_irrep(d).unwrap();
        for defect in rep.relation_defects() {
            prop_assert!(defect.is_zero());
        }
    }
}
