use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde_json::json;

use super::{casimir_element, g, CasimirKind, RacahExpr, RacahGen};
use crate::error::Error;
use crate::expr::{Expr, Semantics};
use crate::render;
use crate::report::Witness;
use crate::scalar::{frac, int, Scalar};

/// A basis monomial `A^a D^d B^b Ω_A^omega α^alpha δ^delta β^beta`.
///
/// The derived order compares the exponent tuple `(i, j, k, ℓ, r, s, t)`
/// lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RacahMonomial {
    pub a: u32,
    pub d: u8,
    pub b: u32,
    pub omega: u32,
    pub alpha: u32,
    pub delta: u32,
    pub beta: u32,
}

type Word = (u32, u8, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Letter {
    A,
    D,
    B,
}

impl RacahMonomial {
    pub const ONE: RacahMonomial = RacahMonomial {
        a: 0,
        d: 0,
        b: 0,
        omega: 0,
        alpha: 0,
        delta: 0,
        beta: 0,
    };

    /// Builds the monomial for `(i, j, k, ℓ, r, s, t)`; `j` must be 0 or 1.
    pub fn from_tuple(t: [u32; 7]) -> Result<Self, Error> {
        if t[1] > 1 {
            return Err(Error::InvalidTuple(format!("{t:?}")));
        }
        Ok(RacahMonomial {
            a: t[0],
            d: t[1] as u8,
            b: t[2],
            omega: t[3],
            alpha: t[4],
            delta: t[5],
            beta: t[6],
        })
    }

    pub fn tuple(&self) -> [u32; 7] {
        [
            self.a,
            u32::from(self.d),
            self.b,
            self.omega,
            self.alpha,
            self.delta,
            self.beta,
        ]
    }

    fn word(&self) -> Word {
        (self.a, self.d, self.b)
    }

    fn from_word(w: Word) -> Self {
        RacahMonomial {
            a: w.0,
            d: w.1,
            b: w.2,
            ..Self::ONE
        }
    }

    fn central(&self) -> Self {
        RacahMonomial {
            a: 0,
            d: 0,
            b: 0,
            ..*self
        }
    }

    fn is_central(&self) -> bool {
        self.a == 0 && self.d == 0 && self.b == 0
    }

    /// Multiplies by a central monomial (only its central exponents are used).
    fn times_central(&self, c: &RacahMonomial) -> Self {
        RacahMonomial {
            omega: self.omega + c.omega,
            alpha: self.alpha + c.alpha,
            delta: self.delta + c.delta,
            beta: self.beta + c.beta,
            ..*self
        }
    }

    /// Filtration degree with `A, B, δ` of degree 1, `D` of degree 2,
    /// `α, β` of degree 3 and `Ω_A` of degree 4.
    pub fn filtration_degree(&self) -> u32 {
        self.a
            + 2 * u32::from(self.d)
            + self.b
            + 4 * self.omega
            + 3 * self.alpha
            + self.delta
            + 3 * self.beta
    }

    fn factors(&self) -> [(RacahGen, u32); 7] {
        [
            (RacahGen::A, self.a),
            (RacahGen::D, u32::from(self.d)),
            (RacahGen::B, self.b),
            (RacahGen::OmegaA, self.omega),
            (RacahGen::Alpha, self.alpha),
            (RacahGen::Delta, self.delta),
            (RacahGen::Beta, self.beta),
        ]
    }

    pub fn text(&self) -> String {
        use crate::expr::SymbolName;
        self.factors()
            .iter()
            .filter_map(|(gen, n)| render::power_text(gen.name(), *n))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn latex(&self) -> String {
        self.factors()
            .iter()
            .filter_map(|(gen, n)| render::power_latex(gen.latex(), *n))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for RacahMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.text();
        f.write_str(if t.is_empty() { "1" } else { &t })
    }
}

/// An element of the Racah algebra in normal form.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RacahNF {
    terms: BTreeMap<RacahMonomial, Scalar>,
}

impl RacahNF {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(RacahMonomial::ONE, c)
    }

    pub fn term(m: RacahMonomial, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn monomial(m: RacahMonomial) -> Self {
        Self::term(m, Scalar::one())
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

    pub fn terms(&self) -> impl Iterator<Item = (&RacahMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &RacahMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: RacahMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RacahNF {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
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
        with_rewriter(|rw| rw.mul(self, other))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// Largest exponent of `D` over the support (0 for the zero element).
    pub fn max_d_exponent(&self) -> u32 {
        self.terms.keys().map(|m| u32::from(m.d)).max().unwrap_or(0)
    }

    /// True when every monomial only involves central symbols.
    pub fn is_central_polynomial(&self) -> bool {
        self.terms.keys().all(RacahMonomial::is_central)
    }

    /// Reads the normal form back as an expression in the generators.
    pub fn to_expr(&self) -> RacahExpr {
        let mut out: Option<RacahExpr> = None;
        for (m, c) in &self.terms {
            let base = super::basis_expr(m);
            let term = if c.is_one() {
                base
            } else if *m == RacahMonomial::ONE {
                Expr::scalar(c.clone())
            } else {
                base.scaled(c.clone())
            };
            out = Some(match out {
                None => term,
                Some(acc) => acc + term,
            });
        }
        out.unwrap_or_else(|| Expr::int(0))
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
                        "monomial": m.tuple(),
                        "coeff": crate::scalar::render(c),
                    })
                })
                .collect(),
        )
    }
}

crate::impl_ring_ops!(RacahNF);

impl fmt::Display for RacahNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RacahNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RacahNF({})", self.to_text())
    }
}

impl Witness for RacahNF {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn witness_text(&self) -> String {
        self.to_text()
    }
}

/// Rewrites `u` into the `A^i D^j B^k Ω_A^ℓ α^r δ^s β^t` basis.
pub fn normalize(u: &RacahExpr) -> RacahNF {
    with_rewriter(|rw| rw.normalize(u))
}

thread_local! {
    static REWRITER: RefCell<Rewriter> = RefCell::new(Rewriter::default());
}

fn with_rewriter<T>(f: impl FnOnce(&mut Rewriter) -> T) -> T {
    REWRITER.with(|rw| f(&mut rw.borrow_mut()))
}

/// The rewriting engine, with a cache of `word · letter` reductions.
#[derive(Default)]
struct Rewriter {
    memo: HashMap<(Word, Letter), RacahNF>,
    d_squared: Option<RacahNF>,
    omega_b: Option<RacahNF>,
    omega_c: Option<RacahNF>,
    in_d_squared: bool,
}

struct Normalizer<'a> {
    rw: RefCell<&'a mut Rewriter>,
}

impl Semantics<RacahGen> for Normalizer<'_> {
    type Value = RacahNF;

    fn symbol(&self, s: &RacahGen) -> RacahNF {
        self.rw.borrow_mut().leaf(*s)
    }

    fn constant(&self, c: &Scalar) -> RacahNF {
        RacahNF::constant(c.clone())
    }

    fn add(&self, a: &RacahNF, b: &RacahNF) -> RacahNF {
        a.add_ref(b)
    }

    fn sub(&self, a: &RacahNF, b: &RacahNF) -> RacahNF {
        a.sub_ref(b)
    }

    fn neg(&self, a: &RacahNF) -> RacahNF {
        a.neg_ref()
    }

    fn mul(&self, a: &RacahNF, b: &RacahNF) -> RacahNF {
        self.rw.borrow_mut().mul(a, b)
    }

    fn scale(&self, c: &Scalar, a: &RacahNF) -> RacahNF {
        a.scale(c)
    }
}

fn word(i: u32, j: u8, k: u32) -> RacahNF {
    RacahNF::monomial(RacahMonomial::from_word((i, j, k)))
}

fn central(omega: u32, alpha: u32, delta: u32, beta: u32) -> RacahMonomial {
    RacahMonomial {
        omega,
        alpha,
        delta,
        beta,
        ..RacahMonomial::ONE
    }
}

impl Rewriter {
    fn normalize(&mut self, u: &RacahExpr) -> RacahNF {
        let sem = Normalizer {
            rw: RefCell::new(self),
        };
        u.eval(&sem)
    }

    fn leaf(&mut self, s: RacahGen) -> RacahNF {
        use RacahGen::*;
        match s {
            A => word(1, 0, 0),
            B => word(0, 0, 1),
            D => word(0, 1, 0),
            C => RacahNF::monomial(central(0, 0, 1, 0))
                .sub_ref(&word(1, 0, 0))
                .sub_ref(&word(0, 0, 1)),
            Alpha => RacahNF::monomial(central(0, 1, 0, 0)),
            Beta => RacahNF::monomial(central(0, 0, 0, 1)),
            Delta => RacahNF::monomial(central(0, 0, 1, 0)),
            Gamma => RacahNF::monomial(central(0, 1, 0, 0))
                .add_ref(&RacahNF::monomial(central(0, 0, 0, 1)))
                .neg_ref(),
            OmegaA => RacahNF::monomial(central(1, 0, 0, 0)),
            OmegaB => {
                if self.omega_b.is_none() {
                    let nf = self.normalize(&casimir_element(CasimirKind::B));
                    self.omega_b = Some(nf);
                }
                self.omega_b.clone().unwrap()
            }
            OmegaC => {
                if self.omega_c.is_none() {
                    let nf = self.normalize(&casimir_element(CasimirKind::C));
                    self.omega_c = Some(nf);
                }
                self.omega_c.clone().unwrap()
            }
        }
    }

    fn mul(&mut self, x: &RacahNF, y: &RacahNF) -> RacahNF {
        let mut out = RacahNF::zero();
        for (m, c) in &y.terms {
            let cen = m.central();
            let mut acc = RacahNF {
                terms: x
                    .terms
                    .iter()
                    .map(|(n, d)| (n.times_central(&cen), d * c))
                    .collect(),
            };
            for _ in 0..m.a {
                acc = self.mul_letter(&acc, Letter::A);
            }
            for _ in 0..m.d {
                acc = self.mul_letter(&acc, Letter::D);
            }
            for _ in 0..m.b {
                acc = self.mul_letter(&acc, Letter::B);
            }
            out = out.add_ref(&acc);
        }
        out
    }

    fn mul_letter(&mut self, x: &RacahNF, l: Letter) -> RacahNF {
        let mut out = RacahNF::zero();
        for (m, c) in &x.terms {
            let cen = m.central();
            let prod = self.word_letter(m.word(), l);
            for (n, d) in &prod.terms {
                out.add_term(n.times_central(&cen), d * c);
            }
        }
        out
    }

    fn word_letter(&mut self, w: Word, l: Letter) -> RacahNF {
        if let Some(hit) = self.memo.get(&(w, l)) {
            return hit.clone();
        }
        let result = self.reduce_word_letter(w, l);
        self.memo.insert((w, l), result.clone());
        result
    }

    fn reduce_word_letter(&mut self, w: Word, l: Letter) -> RacahNF {
        let (i, j, k) = w;
        match l {
            Letter::B => word(i, j, k + 1),
            Letter::A if k > 0 => {
                // X B A = (X A) B - 2 X D
                let x = word(i, j, k - 1);
                let xa = self.mul_letter(&x, Letter::A);
                let xab = self.mul_letter(&xa, Letter::B);
                let xd = self.mul_letter(&x, Letter::D);
                xab.sub_ref(&xd.scale(&int(2)))
            }
            Letter::A if j == 1 => {
                // A^i D A = A^i (A D - A² - 2AB + 2D + δA - α)
                let mut out = word(i + 1, 1, 0);
                out.add_term(RacahMonomial::from_word((i + 2, 0, 0)), int(-1));
                out.add_term(RacahMonomial::from_word((i + 1, 0, 1)), int(-2));
                out.add_term(RacahMonomial::from_word((i, 1, 0)), int(2));
                out.add_term(
                    RacahMonomial::from_word((i + 1, 0, 0)).times_central(&central(0, 0, 1, 0)),
                    int(1),
                );
                out.add_term(
                    RacahMonomial::from_word((i, 0, 0)).times_central(&central(0, 1, 0, 0)),
                    int(-1),
                );
                out
            }
            Letter::A => word(i + 1, 0, 0),
            Letter::D if k > 0 => {
                // X B D = X (D B - 2AB + 2D + δB - B² + β)
                let x = word(i, j, k - 1);
                let xd = self.mul_letter(&x, Letter::D);
                let xdb = self.mul_letter(&xd, Letter::B);
                let xa = self.mul_letter(&x, Letter::A);
                let xab = self.mul_letter(&xa, Letter::B);
                let mut out = xdb.sub_ref(&xab.scale(&int(2)));
                out = out.add_ref(&xd.scale(&int(2)));
                out.add_term(
                    RacahMonomial::from_word((i, j, k)).times_central(&central(0, 0, 1, 0)),
                    int(1),
                );
                out.add_term(RacahMonomial::from_word((i, j, k + 1)), int(-1));
                out.add_term(
                    RacahMonomial::from_word((i, j, k - 1)).times_central(&central(0, 0, 0, 1)),
                    int(1),
                );
                out
            }
            Letter::D if j == 0 => word(i, 1, 0),
            Letter::D => {
                let d2 = self.d_squared();
                self.mul(&word(i, 0, 0), &d2)
            }
        }
    }

    /// `D² = Ω_A - (BAC + CAB)/2 - A² - Bγ + Cβ + Aδ` in normal form.
    fn d_squared(&mut self) -> RacahNF {
        if let Some(nf) = &self.d_squared {
            return nf.clone();
        }
        assert!(
            !self.in_d_squared,
            "rewriting D² re-entered the D² rule"
        );
        self.in_d_squared = true;
        use RacahGen::*;
        let half = frac(1, 2);
        let rhs = g(OmegaA)
            - (Expr::product(vec![g(B), g(A), g(C)]) + Expr::product(vec![g(C), g(A), g(B)]))
                .scaled(half)
            - g(A).pow(2)
            - g(B) * g(Gamma)
            + g(C) * g(Beta)
            + g(A) * g(Delta);
        let nf = self.normalize(&rhs);
        self.in_d_squared = false;
        self.d_squared = Some(nf.clone());
        nf
    }
}
