//! Free expression trees and their evaluation in a target algebra.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::scalar::{self, Scalar};

/// An expression over leaf symbols `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr<S> {
    Symbol(S),
    Scalar(Scalar),
    Add(Box<Expr<S>>, Box<Expr<S>>),
    Sub(Box<Expr<S>>, Box<Expr<S>>),
    Neg(Box<Expr<S>>),
    Mul(Box<Expr<S>>, Box<Expr<S>>),
    Scale(Scalar, Box<Expr<S>>),
    Commutator(Box<Expr<S>>, Box<Expr<S>>),
    Anticommutator(Box<Expr<S>>, Box<Expr<S>>),
    Pow(Box<Expr<S>>, u32),
}

/// How to interpret an expression: leaves, constants and the ring operations.
pub trait Semantics<S> {
    type Value: Clone;

    fn symbol(&self, s: &S) -> Self::Value;
    fn constant(&self, c: &Scalar) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, c: &Scalar, a: &Self::Value) -> Self::Value;
}

impl<S> Expr<S> {
    pub fn sym(s: S) -> Self {
        Expr::Symbol(s)
    }

    pub fn scalar(c: Scalar) -> Self {
        Expr::Scalar(c)
    }

    pub fn int(n: i64) -> Self {
        Expr::Scalar(scalar::int(n))
    }

    pub fn comm(a: Self, b: Self) -> Self {
        Expr::Commutator(Box::new(a), Box::new(b))
    }

    pub fn anti(a: Self, b: Self) -> Self {
        Expr::Anticommutator(Box::new(a), Box::new(b))
    }

    pub fn pow(self, n: u32) -> Self {
        Expr::Pow(Box::new(self), n)
    }

    pub fn scaled(self, c: Scalar) -> Self {
        Expr::Scale(c, Box::new(self))
    }

    /// Product of a nonempty list of factors, left-associated.
    pub fn product(factors: Vec<Self>) -> Self {
        let mut it = factors.into_iter();
        let first = it.next().expect("product of at least one factor");
        it.fold(first, |acc, f| Expr::Mul(Box::new(acc), Box::new(f)))
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Symbol(_) | Expr::Scalar(_) => 1,
            Expr::Neg(a) | Expr::Scale(_, a) | Expr::Pow(a, _) => 1 + a.depth(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Commutator(a, b)
            | Expr::Anticommutator(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn symbols(&self) -> Vec<&S> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols<'a>(&'a self, out: &mut Vec<&'a S>) {
        match self {
            Expr::Symbol(s) => out.push(s),
            Expr::Scalar(_) => {}
            Expr::Neg(a) | Expr::Scale(_, a) | Expr::Pow(a, _) => a.collect_symbols(out),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Commutator(a, b)
            | Expr::Anticommutator(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }

    /// Evaluates bottom-up; `[u,v]` and `{u,v}` expand to `uv ∓ vu`.
    pub fn eval<M: Semantics<S>>(&self, m: &M) -> M::Value {
        match self {
            Expr::Symbol(s) => m.symbol(s),
            Expr::Scalar(c) => m.constant(c),
            Expr::Add(a, b) => m.add(&a.eval(m), &b.eval(m)),
            Expr::Sub(a, b) => m.sub(&a.eval(m), &b.eval(m)),
            Expr::Neg(a) => m.neg(&a.eval(m)),
            Expr::Mul(a, b) => m.mul(&a.eval(m), &b.eval(m)),
            Expr::Scale(c, a) => m.scale(c, &a.eval(m)),
            Expr::Commutator(a, b) => {
                let (x, y) = (a.eval(m), b.eval(m));
                m.sub(&m.mul(&x, &y), &m.mul(&y, &x))
            }
            Expr::Anticommutator(a, b) => {
                let (x, y) = (a.eval(m), b.eval(m));
                m.add(&m.mul(&x, &y), &m.mul(&y, &x))
            }
            Expr::Pow(a, n) => {
                let x = a.eval(m);
                let mut acc = m.constant(&Scalar::one());
                for _ in 0..*n {
                    acc = m.mul(&acc, &x);
                }
                acc
            }
        }
    }
}

impl<S> std::ops::Add for Expr<S> {
    type Output = Expr<S>;
    fn add(self, rhs: Self) -> Self {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl<S> std::ops::Sub for Expr<S> {
    type Output = Expr<S>;
    fn sub(self, rhs: Self) -> Self {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl<S> std::ops::Mul for Expr<S> {
    type Output = Expr<S>;
    fn mul(self, rhs: Self) -> Self {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl<S> std::ops::Neg for Expr<S> {
    type Output = Expr<S>;
    fn neg(self) -> Self {
        Expr::Neg(Box::new(self))
    }
}

/// Leaf symbols that know their surface syntax.
pub trait SymbolName {
    fn name(&self) -> &'static str;
}

/// Renders in the input grammar, fully parenthesized where precedence needs it.
impl<S: SymbolName> fmt::Display for Expr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, 0))
    }
}

// precedence: 0 sum, 1 unary minus, 2 product, 3 power/atom
fn render<S: SymbolName>(e: &Expr<S>, ctx: u8) -> String {
    let (text, prec) = match e {
        Expr::Symbol(s) => (s.name().to_string(), 3),
        Expr::Scalar(c) => {
            if c.is_negative() {
                (format!("-{}", scalar::render(&-c)), 1)
            } else {
                (scalar::render(c), if c.denom().is_one() { 3 } else { 2 })
            }
        }
        Expr::Add(a, b) => (format!("{} + {}", render(a, 0), render(b, 1)), 0),
        Expr::Sub(a, b) => (format!("{} - {}", render(a, 0), render(b, 1)), 0),
        Expr::Neg(a) => (format!("-{}", render(a, 2)), 1),
        Expr::Mul(a, b) => (format!("{} * {}", render(a, 2), render(b, 3)), 2),
        Expr::Scale(c, a) => {
            let c = if c.is_zero() { "0".to_string() } else { format!("({})", scalar::render(c)) };
            (format!("{c} * {}", render(a, 3)), 2)
        }
        Expr::Commutator(a, b) => (format!("[{}, {}]", render(a, 0), render(b, 0)), 3),
        Expr::Anticommutator(a, b) => (format!("{{{}, {}}}", render(a, 0), render(b, 0)), 3),
        Expr::Pow(a, n) => (format!("{}^{n}", render(a, 4)), 3),
    };
    if prec < ctx || (ctx == 4 && !matches!(e, Expr::Symbol(_) | Expr::Commutator(..) | Expr::Anticommutator(..))) {
        format!("({text})")
    } else {
        text
    }
}
