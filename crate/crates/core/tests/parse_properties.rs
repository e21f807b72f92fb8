use proptest::prelude::*;

use racah::parse::{parse_racah, parse_tensor};
use racah::random::{racah_expr, racah_nf_bounded, rng, tensor_element};
use racah::tensor::evaluate_expr;
use racah::normalize;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_trees_parse_back(s in any::<u64>()) {
        let u = racah_expr(&mut rng(s), 4, 4);
        let back = parse_racah(&u.to_string()).unwrap();
        prop_assert_eq!(normalize(&back), normalize(&u));
    }

    #[test]
    fn printed_normal_forms_parse_back(s in any::<u64>()) {
        let nf = racah_nf_bounded(&mut rng(s), 4, 4);
        let back = parse_racah(&nf.to_text()).unwrap();
        prop_assert_eq!(normalize(&back), nf);
    }

    #[test]
    fn printed_tensor_elements_parse_back(s in any::<u64>()) {
        let v = tensor_element(&mut rng(s), 4, 2);
        let back = parse_tensor(&v.to_text()).unwrap();
        prop_assert_eq!(evaluate_expr(&back), v);
    }
}
