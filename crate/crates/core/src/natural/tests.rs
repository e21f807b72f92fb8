use super::*;
use crate::tensor::AbcPoly;

#[test]
fn unit_and_generators() {
    assert_eq!(embed(&Expr::int(1)), TensorElement::one());
    assert_eq!(embed(&g(RacahGen::A)), generator_image_a());
    let delta = embed(&g(RacahGen::Delta));
    let expected = &closed_form_delta() - &lambda();
    assert_eq!(
        &delta - &lambda(),
        expected,
    );
    let abc_part: AbcPoly = [
        (AbcMonomial::new(2, 0, 0), int(1)),
        (AbcMonomial::new(1, 0, 0), int(1)),
        (AbcMonomial::new(0, 2, 0), int(1)),
        (AbcMonomial::new(0, 1, 0), int(1)),
        (AbcMonomial::new(0, 0, 2), int(1)),
        (AbcMonomial::new(0, 0, 1), int(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(&delta - &lambda(), TensorElement::abc(&abc_part));
}

#[test]
fn homomorphism_suite() {
    let rep = verify_homomorphism();
    assert!(rep.passed(), "{rep}");
    let ab = commutator(&generator_image_a(), &generator_image_b());
    let x = USl2Element::x();
    let z = USl2Element::z();
    assert_eq!(
        ab.abc_coefficient(&AbcMonomial::new(1, 1, 0)),
        (&z + &x).scale(&int(2))
    );
}

#[test]
fn rewrite_rules_hold_under_embedding() {
    let rep = verify_rewrite_rules();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn normal_form_embeds_like_the_expression() {
    use RacahGen::*;
    let u = Expr::comm(g(D), g(C) * g(A)) + g(OmegaB) * g(B) * g(D) - g(Gamma) * g(C).pow(2);
    assert_eq!(embed_nf(&normalize(&u)), embed(&u));
}

#[test]
fn image_centrality() {
    let rep = verify_image_centrality();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn component_tables() {
    let rep = verify_homogeneous_tables();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn casimir_image_tables() {
    let rep = verify_casimir_images();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn random_oracles_small() {
    let rep = verify_normal_form_oracle(1, 40, 5, 4);
    assert!(rep.passed(), "{rep}");
    let rep = verify_no_zero_divisors(2, 10, 2);
    assert!(rep.passed(), "{rep}");
}
