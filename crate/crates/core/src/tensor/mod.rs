//! The tensor product F[a,b,c] ⊗ U(sl2).
//!
//! Elements are kept grouped by their enveloping-algebra monomial: each PBW
//! monomial carries a nonzero polynomial in `a, b, c`. This is the same
//! sparse map `(a^r b^s c^t, e^i h^j f^k) -> scalar` with the pairs
//! regrouped, and it lets a product call the PBW multiplier once per pair of
//! enveloping monomials instead of once per pair of terms.

mod structural;
mod symbols;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::poly::{Monomial, Poly};
use crate::render;
use crate::report::Witness;
use crate::scalar::{self, int, Scalar};
use crate::usl2::{add_exp, mul_monomials, PbwMonomial, USl2Element};

pub use structural::{lambda_basis, structural, verify_structural_laws, Structural};
pub use symbols::{evaluate_expr, TensorExpr, TensorSym};

/// The commutative monomial `a^a b^b c^c`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbcMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl AbcMonomial {
    pub const ONE: AbcMonomial = AbcMonomial { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        AbcMonomial { a, b, c }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn text(&self) -> String {
        [
            render::power_text("a", self.a),
            render::power_text("b", self.b),
            render::power_text("c", self.c),
        ]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
    }

    pub fn latex(&self) -> String {
        [
            render::power_latex("a", self.a),
            render::power_latex("b", self.b),
            render::power_latex("c", self.c),
        ]
        .into_iter()
        .flatten()
        .collect()
    }
}

impl Monomial for AbcMonomial {
    fn mul(&self, other: &Self) -> Self {
        AbcMonomial {
            a: add_exp(self.a, other.a),
            b: add_exp(self.b, other.b),
            c: add_exp(self.c, other.c),
        }
    }
}

pub type AbcPoly = Poly<AbcMonomial>;

/// `ka·a + kb·b + kc·c + k`.
pub fn abc_linear(ka: i64, kb: i64, kc: i64, k: i64) -> AbcPoly {
    [
        (AbcMonomial::new(1, 0, 0), int(ka)),
        (AbcMonomial::new(0, 1, 0), int(kb)),
        (AbcMonomial::new(0, 0, 1), int(kc)),
        (AbcMonomial::ONE, int(k)),
    ]
    .into_iter()
    .collect()
}

/// A key of the flat term map, ordered by commutative part first.
pub type TensorKey = (AbcMonomial, PbwMonomial);

#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<PbwMonomial, AbcPoly>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::tensor(&AbcPoly::constant(c), &USl2Element::one())
    }

    /// `p ⊗ u`.
    pub fn tensor(p: &AbcPoly, u: &USl2Element) -> Self {
        let mut out = Self::zero();
        for (m, c) in u.terms() {
            out.add_poly(*m, &p.scale(c));
        }
        out
    }

    /// `p ⊗ 1`.
    pub fn abc(p: &AbcPoly) -> Self {
        Self::tensor(p, &USl2Element::one())
    }

    /// `1 ⊗ u`.
    pub fn usl2(u: &USl2Element) -> Self {
        Self::tensor(&AbcPoly::one(), u)
    }

    pub fn a() -> Self {
        Self::abc(&abc_linear(1, 0, 0, 0))
    }

    pub fn b() -> Self {
        Self::abc(&abc_linear(0, 1, 0, 0))
    }

    pub fn c() -> Self {
        Self::abc(&abc_linear(0, 0, 1, 0))
    }

    pub fn term(abc: AbcMonomial, pbw: PbwMonomial, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_poly(pbw, &AbcPoly::term(abc, c));
        out
    }

    fn add_poly(&mut self, m: PbwMonomial, p: &AbcPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry = entry.add_ref(p);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (commutative, enveloping) monomial pairs with nonzero
    /// coefficient.
    pub fn len(&self) -> usize {
        self.terms.values().map(Poly::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in `(a^r b^s c^t, e^i h^j f^k)` lexicographic order.
    pub fn terms(&self) -> Vec<(TensorKey, Scalar)> {
        let mut out: Vec<(TensorKey, Scalar)> = self
            .terms
            .iter()
            .flat_map(|(pbw, p)| p.terms().map(move |(abc, c)| ((*abc, *pbw), c.clone())))
            .collect();
        out.sort_by_key(|x| x.0);
        out
    }

    /// Terms grouped by enveloping monomial.
    pub fn by_pbw(&self) -> impl Iterator<Item = (&PbwMonomial, &AbcPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, abc: &AbcMonomial, pbw: &PbwMonomial) -> Scalar {
        self.terms
            .get(pbw)
            .map(|p| p.coeff(abc))
            .unwrap_or_else(Scalar::zero)
    }

    /// The U(sl2)-coefficient of `abc` when the element is read as a
    /// polynomial in `a, b, c` with coefficients in U(sl2).
    pub fn abc_coefficient(&self, abc: &AbcMonomial) -> USl2Element {
        let mut out = USl2Element::zero();
        for (pbw, p) in &self.terms {
            out.add_term(*pbw, p.coeff(abc));
        }
        out
    }

    /// All commutative monomials that occur.
    pub fn abc_support(&self) -> Vec<AbcMonomial> {
        let mut v: Vec<AbcMonomial> = self
            .terms
            .values()
            .flat_map(|p| p.terms().map(|(m, _)| *m))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TensorElement {
            terms: self.terms.iter().map(|(m, p)| (*m, p.scale(c))).collect(),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_poly(*m, p);
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_poly(*m, &p.neg_ref());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        TensorElement {
            terms: self.terms.iter().map(|(m, p)| (*m, p.neg_ref())).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<PbwMonomial, AbcPoly> = BTreeMap::new();
        for (m1, p1) in &self.terms {
            for (m2, p2) in &other.terms {
                let prod = p1.mul_ref(p2);
                for (m, k) in mul_monomials(m1, m2) {
                    let scaled = prod.scale(&k);
                    let entry = acc.entry(m).or_default();
                    *entry = entry.add_ref(&scaled);
                }
            }
        }
        acc.retain(|_, p| !p.is_zero());
        TensorElement { terms: acc }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// `u + k(1⊗1)`.
    pub fn shifted(&self, k: i64) -> Self {
        self + &Self::constant(int(k))
    }

    /// A unit polynomial part is written through its coefficient, as in
    /// `1/2 ⊗ h`.
    pub fn to_text(&self) -> String {
        render::sum_text(self.terms().into_iter().map(|((abc, pbw), c)| {
            let right = if pbw.is_one() { "1".to_string() } else { pbw.text() };
            if abc.is_one() {
                (c.signum(), format!("{} ⊗ {right}", scalar::render(&c.abs())))
            } else {
                (c, format!("{} ⊗ {right}", abc.text()))
            }
        }))
    }

    pub fn to_latex(&self) -> String {
        render::sum_latex(self.terms().into_iter().map(|((abc, pbw), c)| {
            let right = if pbw.is_one() { "1".to_string() } else { pbw.latex() };
            if abc.is_one() {
                (c.signum(), format!("{}\\otimes {right}", scalar::render_latex(&c.abs())))
            } else {
                (c, format!("{}\\otimes {right}", abc.latex()))
            }
        }))
    }

    pub fn to_structured(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .into_iter()
                .map(|((abc, pbw), c)| {
                    json!({
                        "abc": { "a": abc.a, "b": abc.b, "c": abc.c },
                        "pbw": { "e": pbw.e, "h": pbw.h, "f": pbw.f },
                        "coeff": scalar::render(&c),
                    })
                })
                .collect(),
        )
    }

    /// The homogeneous component of degree `n`: `1 ⊗ π_n` applied termwise.
    pub fn project(&self, n: i64) -> Self {
        TensorElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, p)| (*m, p.clone()))
                .collect(),
        }
    }

    /// Degrees of the nonzero homogeneous components.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(PbwMonomial::degree).collect();
        d.sort();
        d.dedup();
        d
    }

    pub fn components(&self) -> BTreeMap<i64, TensorElement> {
        self.degrees().into_iter().map(|n| (n, self.project(n))).collect()
    }

    pub fn is_homogeneous(&self, n: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }
}

crate::impl_ring_ops!(TensorElement);

impl From<&USl2Element> for TensorElement {
    fn from(u: &USl2Element) -> Self {
        TensorElement::usl2(u)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({})", self.to_text())
    }
}

impl Witness for TensorElement {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn witness_text(&self) -> String {
        let n = self.len();
        if n > 40 {
            let head: Vec<String> = self
                .terms()
                .into_iter()
                .take(8)
                .map(|((abc, pbw), c)| format!("{} [{}|{}]", scalar::render(&c), abc.text(), pbw.text()))
                .collect();
            format!("{n} terms, first: {}", head.join(", "))
        } else {
            self.to_text()
        }
    }
}

pub fn tensor_multiply(u: &TensorElement, v: &TensorElement) -> TensorElement {
    u * v
}

pub fn commutator(u: &TensorElement, v: &TensorElement) -> TensorElement {
    &(u * v) - &(v * u)
}

pub fn anticommutator(u: &TensorElement, v: &TensorElement) -> TensorElement {
    &(u * v) + &(v * u)
}

pub fn grade_project_tensor(u: &TensorElement, n: i64) -> TensorElement {
    u.project(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(e: u32, h: u32, f: u32) -> TensorElement {
        TensorElement::usl2(&USl2Element::monomial(e, h, f))
    }

    #[test]
    fn products() {
        let a = TensorElement::a();
        let b = TensorElement::b();
        let (e, f, h) = (u(1, 0, 0), u(0, 0, 1), u(0, 1, 0));
        assert_eq!(&a * &e, TensorElement::term(AbcMonomial::new(1, 0, 0), PbwMonomial::new(1, 0, 0), int(1)));
        assert_eq!(&f * &e, &u(1, 0, 1) - &h);
        let lhs = &(&a * &e) * &(&b * &f);
        assert_eq!(lhs, TensorElement::term(AbcMonomial::new(1, 1, 0), PbwMonomial::new(1, 0, 1), int(1)));
        assert!(commutator(&a, &e).is_zero());
        assert_eq!(&TensorElement::one() * &lhs, lhs);
    }

    #[test]
    fn projection() {
        let lam = TensorElement::usl2(&USl2Element::casimir());
        let v = &lam + &(&TensorElement::a() * &u(0, 0, 1));
        assert_eq!(grade_project_tensor(&v, 1), &TensorElement::a() * &u(0, 0, 1));
        assert_eq!(grade_project_tensor(&v, 0), lam);
        let sum = v.components().values().fold(TensorElement::zero(), |acc, c| &acc + c);
        assert_eq!(sum, v);
    }

    #[test]
    fn term_order_and_text() {
        let v = &(&TensorElement::b() * &u(1, 0, 0)) + &(&TensorElement::a().pow(2) * &u(0, 1, 3));
        assert_eq!(v.to_text(), "b ⊗ e + a^2 ⊗ h f^3");
        assert_eq!(TensorElement::one().to_text(), "1 ⊗ 1");
        assert_eq!(v.to_latex(), "b\\otimes e + a^{2}\\otimes hf^{3}");
    }
}
