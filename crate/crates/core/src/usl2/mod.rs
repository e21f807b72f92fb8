//! The enveloping algebra U(sl2) in Poincaré–Birkhoff–Witt normal form.
//!
//! Elements are stored as sparse sums of ordered monomials `e^i h^j f^k`.
//! Multiplication never builds an unordered word: the right factor is
//! absorbed one generator at a time into an intermediate form
//! `Σ e^a p(h) f^b`, where `p` is a polynomial in `h`, using
//!
//! ```text
//! p(h) e     = e p(h + 2)
//! f^b e      = e f^b - b (h + b - 1) f^(b-1)
//! f^b h      = (h + 2b) f^b
//! ```
//!
//! Each step either consumes one generator of the right factor or lowers the
//! `f`-exponent of a term, so the well-founded measure is the pair
//! (generators of the right factor still to absorb, `f`-exponent of the term
//! being processed), ordered lexicographically. All three rules follow from
//! `he - eh = 2e`, `hf - fh = -2f` and `ef - fe = h`.

mod grading;
mod identities;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::Error;
use crate::render;
use crate::report::Witness;
use crate::scalar::{self, frac, int, Scalar};

pub use grading::GradedDecomposition;
pub use identities::{
    ef_power_identity, verify_casimir_properties, verify_commutator_lemmas, verify_pbw_bases,
};

/// The ordered monomial `e^e h^h f^f`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub e: u32,
    pub h: u32,
    pub f: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { e: 0, h: 0, f: 0 };

    pub fn new(e: u32, h: u32, f: u32) -> Self {
        PbwMonomial { e, h, f }
    }

    /// Degree in the Z-grading: `f`-exponent minus `e`-exponent.
    pub fn degree(&self) -> i64 {
        i64::from(self.f) - i64::from(self.e)
    }

    pub fn total_degree(&self) -> u32 {
        self.e + self.h + self.f
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn text(&self) -> String {
        [
            render::power_text("e", self.e),
            render::power_text("h", self.h),
            render::power_text("f", self.f),
        ]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
    }

    pub fn latex(&self) -> String {
        [
            render::power_latex("e", self.e),
            render::power_latex("h", self.h),
            render::power_latex("f", self.f),
        ]
        .into_iter()
        .flatten()
        .collect()
    }
}

pub(crate) fn add_exp(a: u32, b: u32) -> u32 {
    a.checked_add(b)
        .unwrap_or_else(|| panic!("exponent overflow: {a} + {b} does not fit in u32"))
}

/// Dense polynomial in `h`, lowest degree first.
type HPoly = Vec<Scalar>;

fn hpoly_add_into(acc: &mut HPoly, p: &HPoly, scale: &Scalar) {
    if acc.len() < p.len() {
        acc.resize(p.len(), Scalar::zero());
    }
    for (a, c) in acc.iter_mut().zip(p) {
        *a += c * scale;
    }
}

/// `p(h) (h + a)`.
fn hpoly_mul_linear(p: &HPoly, a: &Scalar) -> HPoly {
    let mut out = vec![Scalar::zero(); p.len() + 1];
    for (j, c) in p.iter().enumerate() {
        out[j + 1] += c;
        out[j] += c * a;
    }
    out
}

/// `p(h + s)` by Horner's rule.
fn hpoly_shift(p: &HPoly, s: &Scalar) -> HPoly {
    let mut out: HPoly = Vec::new();
    for c in p.iter().rev() {
        out = hpoly_mul_linear(&out, s);
        if out.is_empty() {
            out.push(Scalar::zero());
        }
        out[0] += c;
    }
    out
}

/// Product of two PBW monomials, as a list of (monomial, coefficient).
pub fn mul_monomials(left: &PbwMonomial, right: &PbwMonomial) -> Vec<(PbwMonomial, Scalar)> {
    if right.e == 0 && left.f == 0 {
        // Already ordered: e^a h^j · e^0 h^m f^n.
        return vec![(
            PbwMonomial::new(left.e, add_exp(left.h, right.h), right.f),
            Scalar::one(),
        )];
    }
    let mut hp = vec![Scalar::zero(); left.h as usize + 1];
    hp[left.h as usize] = Scalar::one();
    let mut state: BTreeMap<(u32, u32), HPoly> = BTreeMap::new();
    state.insert((left.e, left.f), hp);

    let two = int(2);
    for _ in 0..right.e {
        let mut next: BTreeMap<(u32, u32), HPoly> = BTreeMap::new();
        for ((ea, fb), p) in state {
            let moved = hpoly_shift(&p, &two);
            hpoly_add_into(
                next.entry((add_exp(ea, 1), fb)).or_default(),
                &moved,
                &Scalar::one(),
            );
            if fb > 0 {
                let b = int(i64::from(fb));
                let tail = hpoly_mul_linear(&p, &(&b - Scalar::one()));
                hpoly_add_into(next.entry((ea, fb - 1)).or_default(), &tail, &-b);
            }
        }
        state = next;
    }

    let mut out: BTreeMap<PbwMonomial, Scalar> = BTreeMap::new();
    for ((ea, fb), mut p) in state {
        let shift = int(2 * i64::from(fb));
        for _ in 0..right.h {
            p = hpoly_mul_linear(&p, &shift);
        }
        let f = add_exp(fb, right.f);
        for (j, c) in p.into_iter().enumerate() {
            if !c.is_zero() {
                *out.entry(PbwMonomial::new(ea, j as u32, f)).or_default() += c;
            }
        }
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// An element of U(sl2) as a sparse map from PBW monomials to nonzero scalars.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct USl2Element {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl USl2Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(PbwMonomial::ONE, c)
    }

    pub fn term(m: PbwMonomial, c: Scalar) -> Self {
        let mut u = Self::zero();
        u.add_term(m, c);
        u
    }

    pub fn monomial(e: u32, h: u32, f: u32) -> Self {
        Self::term(PbwMonomial::new(e, h, f), Scalar::one())
    }

    pub fn e() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn h() -> Self {
        Self::monomial(0, 1, 0)
    }

    pub fn f() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `x = -f - h/2`.
    pub fn x() -> Self {
        -Self::f() - Self::h().scale(&frac(1, 2))
    }

    /// `y = h/2`.
    pub fn y() -> Self {
        Self::h().scale(&frac(1, 2))
    }

    /// `z = e - h/2`.
    pub fn z() -> Self {
        Self::e() - Self::h().scale(&frac(1, 2))
    }

    /// `ν_x = f/2`.
    pub fn nu_x() -> Self {
        Self::f().scale(&frac(1, 2))
    }

    /// `ν_z = e/2`.
    pub fn nu_z() -> Self {
        Self::e().scale(&frac(1, 2))
    }

    /// The normalized Casimir `Λ = ef + h(h-2)/4`.
    pub fn casimir() -> Self {
        let h = Self::h();
        Self::e() * Self::f() + (&h * &(&h - &Self::constant(int(2)))).scale(&frac(1, 4))
    }

    /// The element `w = zyx + zx`.
    pub fn w() -> Self {
        let (x, y, z) = (Self::x(), Self::y(), Self::z());
        &(&(&z * &y) * &x) + &(&z * &x)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        USl2Element {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, k) in mul_monomials(m1, m2) {
                    out.add_term(m, &c * k);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// `u + c·1`.
    pub fn shifted(&self, c: i64) -> Self {
        self + &Self::constant(int(c))
    }

    pub fn to_text(&self) -> String {
        render::sum_text(self.terms.iter().map(|(m, c)| (c.clone(), m.text())))
    }

    pub fn to_latex(&self) -> String {
        render::sum_latex(self.terms.iter().map(|(m, c)| (c.clone(), m.latex())))
    }

    pub fn to_structured(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    json!({
                        "pbw": { "e": m.e, "h": m.h, "f": m.f },
                        "coeff": scalar::render(c),
                    })
                })
                .collect(),
        )
    }
}

crate::impl_ring_ops!(USl2Element);

impl fmt::Display for USl2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for USl2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "USl2Element({})", self.to_text())
    }
}

impl Witness for USl2Element {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn witness_text(&self) -> String {
        self.to_text()
    }
}

/// `uv - vu`.
pub fn commutator(u: &USl2Element, v: &USl2Element) -> USl2Element {
    &(u * v) - &(v * u)
}

/// `uv + vu`.
pub fn anticommutator(u: &USl2Element, v: &USl2Element) -> USl2Element {
    &(u * v) + &(v * u)
}

pub fn pbw_multiply(u: &USl2Element, v: &USl2Element) -> USl2Element {
    u * v
}

/// The equitable generator named `x`, `y` or `z`.
pub fn equitable(name: &str) -> Result<USl2Element, Error> {
    match name {
        "x" => Ok(USl2Element::x()),
        "y" => Ok(USl2Element::y()),
        "z" => Ok(USl2Element::z()),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

pub fn casimir() -> USl2Element {
    USl2Element::casimir()
}

pub fn w_element() -> USl2Element {
    USl2Element::w()
}

/// The homogeneous component of degree `n` (terms with `k - i = n`).
pub fn grade_project(u: &USl2Element, n: i64) -> USl2Element {
    USl2Element {
        terms: u
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == n)
            .map(|(m, c)| (*m, c.clone()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: u32, h: u32, f: u32) -> USl2Element {
        USl2Element::monomial(e, h, f)
    }

    #[test]
    fn defining_relations() {
        let (e, f, h) = (USl2Element::e(), USl2Element::f(), USl2Element::h());
        assert_eq!(&f * &e, &m(1, 0, 1) - &h);
        assert_eq!(&h * &e, &m(1, 1, 0) + &e.scale(&int(2)));
        assert_eq!(&f * &h, &m(0, 1, 1) + &f.scale(&int(2)));
        assert_eq!(commutator(&h, &f), f.scale(&int(-2)));
        assert_eq!(commutator(&e, &f), h);
    }

    #[test]
    fn unit_law() {
        let v = &m(2, 1, 3) - &m(0, 0, 1).scale(&frac(3, 7));
        assert_eq!(&USl2Element::one() * &v, v);
        assert_eq!(&v * &USl2Element::one(), v);
        assert!(commutator(&v, &v).is_zero());
    }

    #[test]
    fn f_power_past_e() {
        // f^2 e = e f^2 - 2 (h + 1) f
        let lhs = &m(0, 0, 2) * &m(1, 0, 0);
        let rhs = &(&m(1, 0, 2) - &m(0, 1, 1).scale(&int(2))) - &m(0, 0, 1).scale(&int(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn equitable_generators_and_casimir() {
        assert_eq!(equitable("x").unwrap(), -&(&m(0, 0, 1) + &m(0, 1, 0).scale(&frac(1, 2))));
        assert_eq!(equitable("y").unwrap(), m(0, 1, 0).scale(&frac(1, 2)));
        assert_eq!(equitable("z").unwrap(), &m(1, 0, 0) - &m(0, 1, 0).scale(&frac(1, 2)));
        assert!(equitable("q").is_err());
        let expected = &(&m(1, 0, 1) + &m(0, 2, 0).scale(&frac(1, 4))) - &m(0, 1, 0).scale(&frac(1, 2));
        assert_eq!(casimir(), expected);
        assert!(commutator(&casimir(), &USl2Element::e()).is_zero());
    }

    #[test]
    fn projections() {
        let lam = casimir();
        assert_eq!(grade_project(&lam, 0), lam);
        assert!(grade_project(&lam, 1).is_zero());
        assert_eq!(grade_project(&USl2Element::f(), 1), USl2Element::f());
    }

    #[test]
    fn rendering() {
        assert_eq!(casimir().to_text(), "-1/2 h + 1/4 h^2 + e f");
        assert_eq!(m(2, 1, 1).to_latex(), "e^{2}hf");
        assert_eq!(USl2Element::zero().to_text(), "0");
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_aborts() {
        let big = USl2Element::monomial(0, 0, u32::MAX);
        let _ = &big * &USl2Element::f();
    }
}
