//! The elements `R`, `L`, `θ`, `ϑ` and the laws they satisfy.

use crate::error::Error;
use crate::report::VerificationReport;
use crate::scalar::int;
use crate::usl2::USl2Element;

use super::{abc_linear, commutator, AbcPoly, TensorElement};

/// The four structural elements, built once.
#[derive(Clone, Debug)]
pub struct Structural {
    pub r: TensorElement,
    pub l: TensorElement,
    pub theta: TensorElement,
    pub vartheta: TensorElement,
}

impl Structural {
    pub fn new() -> Self {
        let y = TensorElement::usl2(&USl2Element::y());
        let nu_x = TensorElement::usl2(&USl2Element::nu_x());
        let nu_z = TensorElement::usl2(&USl2Element::nu_z());
        let two = int(2);
        // R = 2 ⊗ yν_x + 2(c+a-b+1) ⊗ ν_x
        let r = &(&y * &nu_x).scale(&two) + &(&TensorElement::abc(&abc_linear(1, -1, 1, 1)) * &nu_x).scale(&two);
        // L = -2 ⊗ yν_z - 2(a-b-c-1) ⊗ ν_z
        let l = &(&y * &nu_z).scale(&-&two) - &(&TensorElement::abc(&abc_linear(1, -1, -1, -1)) * &nu_z).scale(&two);
        let theta = &y - &TensorElement::b();
        let vartheta = &y + &TensorElement::a();
        Structural {
            r,
            l,
            theta,
            vartheta,
        }
    }
}

impl Default for Structural {
    fn default() -> Self {
        Self::new()
    }
}

/// One of `R`, `L`, `theta`, `vartheta`.
pub fn structural(name: &str) -> Result<TensorElement, Error> {
    let s = Structural::new();
    match name {
        "R" => Ok(s.r),
        "L" => Ok(s.l),
        "theta" | "θ" => Ok(s.theta),
        "vartheta" | "ϑ" => Ok(s.vartheta),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

fn lin(ka: i64, kb: i64, kc: i64, k: i64) -> TensorElement {
    TensorElement::abc(&abc_linear(ka, kb, kc, k))
}

/// Bracket and shift laws of `R`, `L`, `θ`, `ϑ`, the closed forms of `RL`
/// and `LR`, and the mutual commutation of `θ, ϑ, RL, LR, [R,L]`.
pub fn verify_structural_laws() -> VerificationReport {
    let mut rep = VerificationReport::new("structural");
    let Structural {
        r,
        l,
        theta,
        vartheta,
    } = Structural::new();
    let y = TensorElement::usl2(&USl2Element::y());
    let lam = TensorElement::usl2(&USl2Element::casimir());

    for (name, v) in [("R", &r), ("L", &l), ("theta", &theta), ("vartheta", &vartheta)] {
        rep.record(format!("nonzero.{name}"), format!("{name} ≠ 0"), !v.is_zero(), || "element is zero".into());
    }
    for (name, v, n) in [("R", &r, 1), ("L", &l, -1), ("theta", &theta, 0), ("vartheta", &vartheta, 0)] {
        rep.record(
            format!("degree.{name}"),
            format!("{name} is homogeneous of degree {n}"),
            v.is_homogeneous(n),
            || format!("degrees {:?}", v.degrees()),
        );
    }

    // A♮ and B♮ rewritten through ν_x, ν_z.
    let a_nat = crate::natural::generator_image_a();
    let b_nat = crate::natural::generator_image_b();
    let y_plus_a = &y + &TensorElement::a();
    let y_minus_b = &y - &TensorElement::b();
    rep.check_eq(
        "nu-form.A",
        "A♮ = (1⊗y + a⊗1)(1⊗y + (a+1)⊗1) + R",
        &a_nat,
        &(&(&y_plus_a * &y_plus_a.shifted(1)) + &r),
    );
    rep.check_eq(
        "nu-form.B",
        "B♮ = (1⊗y - b⊗1)(1⊗y - (b+1)⊗1) + L",
        &b_nat,
        &(&(&y_minus_b * &y_minus_b.shifted(-1)) + &l),
    );

    rep.check_eq("bracket.R-y", "[R,1⊗y] = R", &commutator(&r, &y), &r);
    rep.check_eq("bracket.y-L", "[1⊗y,L] = L", &commutator(&y, &l), &l);
    rep.check_eq("bracket.R-theta", "[R,θ] = R", &commutator(&r, &theta), &r);
    rep.check_eq("bracket.R-vartheta", "[R,ϑ] = R", &commutator(&r, &vartheta), &r);
    rep.check_eq("bracket.theta-L", "[θ,L] = L", &commutator(&theta, &l), &l);
    rep.check_eq("bracket.vartheta-L", "[ϑ,L] = L", &commutator(&vartheta, &l), &l);

    rep.check_eq("shift.theta-R", "θR = R(θ - 1⊗1)", &(&theta * &r), &(&r * &theta.shifted(-1)));
    rep.check_eq("shift.vartheta-R", "ϑR = R(ϑ - 1⊗1)", &(&vartheta * &r), &(&r * &vartheta.shifted(-1)));
    rep.check_eq("shift.theta-L", "θL = L(θ + 1⊗1)", &(&theta * &l), &(&l * &theta.shifted(1)));
    rep.check_eq("shift.vartheta-L", "ϑL = L(ϑ + 1⊗1)", &(&vartheta * &l), &(&l * &vartheta.shifted(1)));

    let rl = &r * &l;
    let lr = &l * &r;
    let y_sq_plus = &y * &y.shifted(1);
    let y_sq_minus = &y * &y.shifted(-1);
    let rl_closed = &(&(&y + &lin(1, -1, 1, 1)) * &(&y + &lin(1, -1, -1, 0))) * &(&y_sq_plus - &lam);
    let lr_closed = &(&(&y + &lin(1, -1, 1, 0)) * &(&y + &lin(1, -1, -1, -1))) * &(&y_sq_minus - &lam);
    rep.check_eq(
        "closed-form.RL",
        "RL = (1⊗y + (c+a-b+1)⊗1)(1⊗y + (a-b-c)⊗1)(1⊗y(y+1) - 1⊗Λ)",
        &rl,
        &rl_closed,
    );
    rep.check_eq(
        "closed-form.LR",
        "LR = (1⊗y + (c+a-b)⊗1)(1⊗y + (a-b-c-1)⊗1)(1⊗y(y-1) - 1⊗Λ)",
        &lr,
        &lr_closed,
    );

    let rl_bracket = commutator(&r, &l);
    for (name, v) in [("RL", &rl), ("LR", &lr), ("[R,L]", &rl_bracket)] {
        rep.record(
            format!("degree.{name}"),
            format!("{name} is homogeneous of degree 0"),
            v.is_homogeneous(0),
            || format!("degrees {:?}", v.degrees()),
        );
    }

    let family = [
        ("theta", &theta),
        ("vartheta", &vartheta),
        ("RL", &rl),
        ("LR", &lr),
        ("[R,L]", &rl_bracket),
    ];
    for (i, (n1, v1)) in family.iter().enumerate() {
        for (n2, v2) in family.iter().skip(i + 1) {
            rep.check_zero(
                format!("commute.{n1}.{n2}"),
                format!("[{n1},{n2}] = 0"),
                &commutator(v1, v2),
            );
        }
    }
    rep
}

/// The basis `a^r b^s c^t ⊗ Λ^i y^j ν_x^n` (or `ν_z^n`), up to
/// the given exponent cap, expanded into canonical form.
pub fn lambda_basis(max_exp: u32, raising: bool) -> Vec<TensorElement> {
    let lam = USl2Element::casimir();
    let y = USl2Element::y();
    let nu = if raising { USl2Element::nu_x() } else { USl2Element::nu_z() };
    let mut out = Vec::new();
    for r in 0..=max_exp {
        for s in 0..=max_exp {
            for t in 0..=max_exp {
                let p = AbcPoly::monomial(super::AbcMonomial::new(r, s, t));
                for i in 0..=max_exp {
                    for j in 0..=max_exp {
                        for n in 0..=max_exp {
                            let u = &(&lam.pow(i) * &y.pow(j)) * &nu.pow(n);
                            out.push(TensorElement::tensor(&p, &u));
                        }
                    }
                }
            }
        }
    }
    out
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_of;
    use crate::tensor::grade_project_tensor;

    #[test]
    fn named_elements() {
        let y = TensorElement::usl2(&USl2Element::y());
        assert_eq!(structural("theta").unwrap(), &y - &TensorElement::b());
        assert!(structural("Q").is_err());
        let l = structural("L").unwrap();
        assert_eq!(grade_project_tensor(&l, -1), l);
        let s = Structural::new();
        let rl = &s.r * &s.l;
        assert_eq!(grade_project_tensor(&rl, 0), rl);
        assert!(grade_project_tensor(&s.theta, -1).is_zero());
    }

    #[test]
    fn laws_hold() {
        let rep = verify_structural_laws();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn lambda_basis_is_independent() {
        for raising in [true, false] {
            let basis = lambda_basis(1, raising);
            let rank = rank_of(basis.iter().map(|v| v.terms()));
            assert_eq!(rank, basis.len());
        }
    }
}
