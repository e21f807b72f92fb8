use super::*;
use crate::scalar::int;
use RacahGen::*;

fn tuple(t: [u32; 7]) -> RacahMonomial {
    RacahMonomial::from_tuple(t).unwrap()
}

#[test]
fn b_times_a() {
    let nf = normalize(&(g(B) * g(A)));
    assert_eq!(nf.len(), 2);
    assert_eq!(nf.coeff(&tuple([1, 0, 1, 0, 0, 0, 0])), int(1));
    assert_eq!(nf.coeff(&tuple([0, 1, 0, 0, 0, 0, 0])), int(-2));
    assert_eq!(nf.to_text(), "-2 D + A B");
}

#[test]
fn eliminated_leaves() {
    let c = normalize(&g(C));
    let expected = normalize(&(g(Delta) - g(A) - g(B)));
    assert_eq!(c, expected);
    assert_eq!(c.len(), 3);
    let gamma = normalize(&g(Gamma));
    assert_eq!(gamma, normalize(&(-(g(Alpha) + g(Beta)))));
}

#[test]
fn casimirs() {
    assert_eq!(
        normalize(&g(OmegaA)),
        RacahNF::monomial(tuple([0, 0, 0, 1, 0, 0, 0]))
    );
    assert_eq!(
        normalize(&casimir_element(CasimirKind::A)),
        normalize(&g(OmegaA))
    );
    for which in [CasimirKind::B, CasimirKind::C] {
        let diff = normalize(&(g(which.generator()) - g(OmegaA)));
        assert!(!diff.is_zero() || which == CasimirKind::A);
        for (m, _) in diff.terms() {
            let t = m.tuple();
            assert_eq!(&t[..4], &[0, 0, 0, 0], "{which:?}: {diff}");
        }
    }
}

#[test]
fn bilinear_form_examples() {
    assert_eq!(
        bilinear_form(&(g(A) * g(B)), &[1, 0, 1, 0, 0, 0, 0]).unwrap(),
        int(1)
    );
    assert_eq!(
        bilinear_form(&(g(B) * g(A)), &[0, 1, 0, 0, 0, 0, 0]).unwrap(),
        int(-2)
    );
    let v = [2, 1, 3, 1, 0, 2, 1];
    let e = basis_expr(&tuple(v));
    assert_eq!(bilinear_form(&e, &v).unwrap(), int(1));
    assert_eq!(normalize(&e).len(), 1);
    assert!(matches!(
        bilinear_form(&g(A), &[0, 2, 0, 0, 0, 0, 0]),
        Err(Error::InvalidTuple(_))
    ));
}

#[test]
fn centrality_reports() {
    for gen in [Alpha, Beta, Gamma, Delta, OmegaA, OmegaB, OmegaC] {
        let rep = check_centrality(gen.name(), &g(gen));
        assert!(rep.passed(), "{rep}");
    }
    let rep = check_centrality("A", &g(A));
    assert!(!rep.passed());
    assert!(rep.failures().any(|c| c.id.ends_with("A.B")));
}

#[test]
fn d_squared_has_no_high_d() {
    let nf = normalize(&g(D).pow(3));
    assert!(nf.max_d_exponent() <= 1);
    let nf = normalize(&(g(D) * g(B) * g(A) * g(D) * g(C)));
    assert!(nf.max_d_exponent() <= 1);
}

#[test]
fn read_back_is_idempotent() {
    let u = Expr::comm(g(D), g(A) * g(C)) + g(OmegaB) * g(B) - g(Gamma).pow(2);
    let nf = normalize(&u);
    assert_eq!(normalize(&nf.to_expr()), nf);
}

#[test]
fn associativity_on_letters() {
    let letters = [g(A), g(B), g(C), g(D)];
    for x in &letters {
        for y in &letters {
            for z in &letters {
                let left = normalize(&((x.clone() * y.clone()) * z.clone()));
                let xyz = normalize(x).mul_ref(&normalize(&(y.clone() * z.clone())));
                assert_eq!(left, xyz, "({x} {y}) {z}");
            }
        }
    }
}
