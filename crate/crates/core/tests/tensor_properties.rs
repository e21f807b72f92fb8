use proptest::prelude::*;

use racah::random::{rng, tensor_element};
use racah::TensorElement;

fn element(seed: u64) -> TensorElement {
    tensor_element(&mut rng(seed), 3, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn no_zero_divisors(s in any::<u64>()) {
        let (u, v) = (element(s), element(s ^ 5));
        prop_assume!(!u.is_zero() && !v.is_zero());
        prop_assert!(!(&u * &v).is_zero());
    }

    #[test]
    fn multiplication_is_associative(s in any::<u64>()) {
        let (u, v, w) = (element(s), element(s ^ 1), element(s ^ 2));
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    }

    #[test]
    fn components_sum_back_and_multiply_by_degree(s in any::<u64>()) {
        let (u, v) = (element(s), element(s ^ 9));
        let parts = u.components();
        let total = parts.values().fold(TensorElement::zero(), |acc, p| &acc + p);
        prop_assert_eq!(total, u.clone());
        for (m, p) in &parts {
            prop_assert_eq!(p.project(*m), p.clone());
            for (n, q) in v.components() {
                let pq = p * &q;
                prop_assert_eq!(pq.project(m + n), pq.clone());
            }
        }
    }

    #[test]
    fn polynomial_part_is_central(s in any::<u64>()) {
        let u = element(s);
        for x in [TensorElement::a(), TensorElement::b(), TensorElement::c()] {
            prop_assert_eq!(&x * &u, &u * &x);
        }
    }
}
