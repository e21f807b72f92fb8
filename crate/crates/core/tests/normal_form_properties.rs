use proptest::prelude::*;

use racah::random::{racah_expr, racah_nf_bounded, rng};
use racah::{embed, embed_nf, normalize, RacahNF};

fn nf(seed: u64) -> RacahNF {
    racah_nf_bounded(&mut rng(seed), 2, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn product_is_associative(s in any::<u64>()) {
        let (u, v, w) = (nf(s), nf(s ^ 1), nf(s ^ 2));
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    }

    #[test]
    fn products_keep_d_exponent_bounded(s in any::<u64>()) {
        let p = &nf(s) * &nf(s ^ 4);
        prop_assert!(p.max_d_exponent() <= 1);
    }

    #[test]
    fn normalization_is_idempotent(s in any::<u64>()) {
        let u = racah_expr(&mut rng(s), 4, 4);
        let once = normalize(&u);
        prop_assert_eq!(normalize(&once.to_expr()), once);
    }

    #[test]
    fn embedding_respects_normalization(s in any::<u64>()) {
        let u = racah_expr(&mut rng(s), 4, 4);
        prop_assert_eq!(embed_nf(&normalize(&u)), embed(&u));
    }

    #[test]
    fn embedding_is_multiplicative(s in any::<u64>()) {
        let u = racah_nf_bounded(&mut rng(s), 2, 2);
        let v = racah_nf_bounded(&mut rng(s ^ 3), 2, 2);
        prop_assert_eq!(embed_nf(&(&u * &v)), &embed_nf(&u) * &embed_nf(&v));
    }

    #[test]
    fn nonzero_elements_have_nonzero_products(s in any::<u64>()) {
        let u = racah_nf_bounded(&mut rng(s), 2, 2);
        let v = racah_nf_bounded(&mut rng(s ^ 6), 2, 2);
        prop_assume!(!u.is_zero() && !v.is_zero());
        prop_assert!(!(&u * &v).is_zero());
    }
}
