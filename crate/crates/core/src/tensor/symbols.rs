//! Named elements of `F[a,b,c] ⊗ U(sl2)` for expression trees.

use crate::expr::{Expr, Semantics, SymbolName};
use crate::scalar::Scalar;
use crate::usl2::USl2Element;

use super::TensorElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TensorSym {
    X,
    Y,
    Z,
    E,
    F,
    H,
    Lambda,
    NuX,
    NuZ,
    W,
    A,
    B,
    C,
}

impl TensorSym {
    pub const ALL: [TensorSym; 13] = [
        TensorSym::X,
        TensorSym::Y,
        TensorSym::Z,
        TensorSym::E,
        TensorSym::F,
        TensorSym::H,
        TensorSym::Lambda,
        TensorSym::NuX,
        TensorSym::NuZ,
        TensorSym::W,
        TensorSym::A,
        TensorSym::B,
        TensorSym::C,
    ];

    pub fn from_name(name: &str) -> Option<TensorSym> {
        Some(match name {
            "x" => TensorSym::X,
            "y" => TensorSym::Y,
            "z" => TensorSym::Z,
            "e" => TensorSym::E,
            "f" => TensorSym::F,
            "h" => TensorSym::H,
            "Lambda" | "Λ" => TensorSym::Lambda,
            "nu_x" | "ν_x" => TensorSym::NuX,
            "nu_z" | "ν_z" => TensorSym::NuZ,
            "w" => TensorSym::W,
            "a" => TensorSym::A,
            "b" => TensorSym::B,
            "c" => TensorSym::C,
            _ => return None,
        })
    }

    pub fn value(&self) -> TensorElement {
        let u = |v: USl2Element| TensorElement::usl2(&v);
        match self {
            TensorSym::X => u(USl2Element::x()),
            TensorSym::Y => u(USl2Element::y()),
            TensorSym::Z => u(USl2Element::z()),
            TensorSym::E => u(USl2Element::e()),
            TensorSym::F => u(USl2Element::f()),
            TensorSym::H => u(USl2Element::h()),
            TensorSym::Lambda => u(USl2Element::casimir()),
            TensorSym::NuX => u(USl2Element::nu_x()),
            TensorSym::NuZ => u(USl2Element::nu_z()),
            TensorSym::W => u(USl2Element::w()),
            TensorSym::A => TensorElement::a(),
            TensorSym::B => TensorElement::b(),
            TensorSym::C => TensorElement::c(),
        }
    }
}

impl SymbolName for TensorSym {
    fn name(&self) -> &'static str {
        match self {
            TensorSym::X => "x",
            TensorSym::Y => "y",
            TensorSym::Z => "z",
            TensorSym::E => "e",
            TensorSym::F => "f",
            TensorSym::H => "h",
            TensorSym::Lambda => "Lambda",
            TensorSym::NuX => "nu_x",
            TensorSym::NuZ => "nu_z",
            TensorSym::W => "w",
            TensorSym::A => "a",
            TensorSym::B => "b",
            TensorSym::C => "c",
        }
    }
}

pub type TensorExpr = Expr<TensorSym>;

struct Direct;

impl Semantics<TensorSym> for Direct {
    type Value = TensorElement;

    fn symbol(&self, s: &TensorSym) -> TensorElement {
        s.value()
    }

    fn constant(&self, c: &Scalar) -> TensorElement {
        TensorElement::constant(c.clone())
    }

    fn add(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        a + b
    }

    fn sub(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        a - b
    }

    fn neg(&self, a: &TensorElement) -> TensorElement {
        -a
    }

    fn mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        a * b
    }

    fn scale(&self, c: &Scalar, a: &TensorElement) -> TensorElement {
        a.scale(c)
    }
}

/// Expands a tensor-side expression to canonical form.
pub fn evaluate_expr(u: &TensorExpr) -> TensorElement {
    u.eval(&Direct)
}
