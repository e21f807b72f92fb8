use proptest::prelude::*;

use racah::independence::{leading_monomial, y_product, RankedMonomial};
use racah::poly::Monomial;

fn monomial() -> impl Strategy<Value = RankedMonomial> {
    (0u32..4, 0u32..4, 0u32..4, 0u32..4).prop_map(|(h, i, j, k)| RankedMonomial::new(h, i, j, k))
}

proptest! {
    #[test]
    fn rank_is_additive(m in monomial(), n in monomial()) {
        prop_assert_eq!(m.mul(&n).rank(), m.rank() + n.rank());
    }

    #[test]
    fn leading_monomials_multiply(a in 0u32..3, b in 0u32..3, c in 0u32..3, d in 0u32..3,
                                  e in 0u32..2, f in 0u32..2, g in 0u32..2, h in 0u32..2) {
        let p = y_product(a, b, c, d);
        let q = y_product(e, f, g, h);
        let lp = leading_monomial(&p).unwrap();
        let lq = leading_monomial(&q).unwrap();
        prop_assert_eq!(leading_monomial(&(&p * &q)).unwrap(), lp.mul(&lq));
    }
}
