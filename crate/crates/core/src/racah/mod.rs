//! The Racah algebra: free expressions over its generators and a rewriting
//! system onto the basis `A^i D^j B^k Ω^ℓ α^r δ^s β^t` with `j ∈ {0,1}` and
//! `Ω = Ω_A`.
//!
//! # Rewrite rules
//!
//! Leaves are first eliminated into the letters `A, D, B` and the central
//! symbols `Ω_A, α, δ, β`:
//!
//! ```text
//! C   -> δ - A - B
//! γ   -> -α - β                      (α + β + γ = [δ, D] = 0)
//! Ω_B -> normal form of D² + (CBA + ABC)/2 + B² + Cα - Aγ - Bδ
//! Ω_C -> normal form of D² + (ACB + BCA)/2 + C² + Aβ - Bα - Cδ
//! ```
//!
//! Words in `A, D, B` are ordered `A < D < B` with:
//!
//! ```text
//! B A -> A B - 2D
//! D A -> A D - A² - 2 A B + 2D + δ A - α
//! B D -> D B - 2 A B + 2D + δ B - B² + β
//! D D -> Ω_A - (B A C + C A B)/2 - A² - B γ + C β + A δ   (then reduced)
//! ```
//!
//! The exchange rules for `D` come from expanding `α = [A,D] + AC - BA` and
//! `β = [B,D] + BA - CB` with `C = δ - A - B` and `BA = AB - 2D`. The `D²`
//! rule is the definition of `Ω_A` solved for `D²`; its right-hand side has
//! filtration degree 3 (weighting `A, B` by 1 and `D` by 2), so computing it
//! never needs the `D²` rule itself.
//!
//! Central symbols commute with everything and are carried as exponents.
//! A product is reduced by absorbing the right factor one letter at a time
//! into a normal word. Every rule lowers, lexicographically, the filtration
//! degree of a word, then its length, then its number of inversions against
//! `A < D < B`, which bounds the rewriting.

mod normal_form;

use std::fmt;

use crate::error::Error;
use crate::expr::{Expr, SymbolName};
use crate::report::VerificationReport;
use crate::scalar::frac;

pub use normal_form::{normalize, RacahMonomial, RacahNF};

/// The generators and named elements of the Racah algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RacahGen {
    A,
    B,
    C,
    D,
    Alpha,
    Beta,
    Gamma,
    Delta,
    OmegaA,
    OmegaB,
    OmegaC,
}

impl RacahGen {
    pub const ALL: [RacahGen; 11] = [
        RacahGen::A,
        RacahGen::B,
        RacahGen::C,
        RacahGen::D,
        RacahGen::Alpha,
        RacahGen::Beta,
        RacahGen::Gamma,
        RacahGen::Delta,
        RacahGen::OmegaA,
        RacahGen::OmegaB,
        RacahGen::OmegaC,
    ];

    pub const GENERATORS: [RacahGen; 4] = [RacahGen::A, RacahGen::B, RacahGen::C, RacahGen::D];

    pub fn from_name(name: &str) -> Option<RacahGen> {
        Some(match name {
            "A" => RacahGen::A,
            "B" => RacahGen::B,
            "C" => RacahGen::C,
            "D" => RacahGen::D,
            "alpha" | "α" => RacahGen::Alpha,
            "beta" | "β" => RacahGen::Beta,
            "gamma" | "γ" => RacahGen::Gamma,
            "delta" | "δ" => RacahGen::Delta,
            "OmegaA" | "Ω_A" => RacahGen::OmegaA,
            "OmegaB" | "Ω_B" => RacahGen::OmegaB,
            "OmegaC" | "Ω_C" => RacahGen::OmegaC,
            _ => return None,
        })
    }

    pub fn latex(&self) -> &'static str {
        match self {
            RacahGen::A => "A",
            RacahGen::B => "B",
            RacahGen::C => "C",
            RacahGen::D => "D",
            RacahGen::Alpha => "\\alpha",
            RacahGen::Beta => "\\beta",
            RacahGen::Gamma => "\\gamma",
            RacahGen::Delta => "\\delta",
            RacahGen::OmegaA => "\\Omega_A",
            RacahGen::OmegaB => "\\Omega_B",
            RacahGen::OmegaC => "\\Omega_C",
        }
    }
}

impl SymbolName for RacahGen {
    fn name(&self) -> &'static str {
        match self {
            RacahGen::A => "A",
            RacahGen::B => "B",
            RacahGen::C => "C",
            RacahGen::D => "D",
            RacahGen::Alpha => "alpha",
            RacahGen::Beta => "beta",
            RacahGen::Gamma => "gamma",
            RacahGen::Delta => "delta",
            RacahGen::OmegaA => "OmegaA",
            RacahGen::OmegaB => "OmegaB",
            RacahGen::OmegaC => "OmegaC",
        }
    }
}

impl fmt::Display for RacahGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type RacahExpr = Expr<RacahGen>;

pub fn g(gen: RacahGen) -> RacahExpr {
    Expr::Symbol(gen)
}

/// Which of the three Casimir elements `Ω_A`, `Ω_B`, `Ω_C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CasimirKind {
    A,
    B,
    C,
}

impl CasimirKind {
    pub const ALL: [CasimirKind; 3] = [CasimirKind::A, CasimirKind::B, CasimirKind::C];

    pub fn generator(&self) -> RacahGen {
        match self {
            CasimirKind::A => RacahGen::OmegaA,
            CasimirKind::B => RacahGen::OmegaB,
            CasimirKind::C => RacahGen::OmegaC,
        }
    }
}

/// The defining expression of `Ω_A`, `Ω_B` or `Ω_C`:
///
/// ```text
/// Ω_A = D² + (BAC + CAB)/2 + A² + Bγ - Cβ - Aδ
/// Ω_B = D² + (CBA + ABC)/2 + B² + Cα - Aγ - Bδ
/// Ω_C = D² + (ACB + BCA)/2 + C² + Aβ - Bα - Cδ
/// ```
pub fn casimir_element(which: CasimirKind) -> RacahExpr {
    use RacahGen::*;
    // (x, y, z, p, q): D² + (z x y + y x z)/2 ... with the cyclic pattern
    // Ω_X = D² + (Y X Z + Z X Y)/2 + X² + Y·γ_Z - Z·β_Y - X·δ
    let (x, y, z, cy, cz) = match which {
        CasimirKind::A => (A, B, C, Gamma, Beta),
        CasimirKind::B => (B, C, A, Alpha, Gamma),
        CasimirKind::C => (C, A, B, Beta, Alpha),
    };
    let half = frac(1, 2);
    g(D).pow(2)
        + (Expr::product(vec![g(y), g(x), g(z)]) + Expr::product(vec![g(z), g(x), g(y)])).scaled(half)
        + g(x).pow(2)
        + g(y) * g(cy)
        - g(z) * g(cz)
        - g(x) * g(Delta)
}

/// `⟨u, v⟩`: the coefficient of the basis element `v` in the normal form
/// of `u`.
pub fn bilinear_form(u: &RacahExpr, v: &[u32; 7]) -> Result<crate::scalar::Scalar, Error> {
    let m = RacahMonomial::from_tuple(*v)?;
    Ok(normalize(u).coeff(&m))
}

/// Checks that `[expr, g]` normalizes to zero for `g ∈ {A, B, C, D}`.
pub fn check_centrality(label: &str, expr: &RacahExpr) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("centrality.{label}"));
    for gen in RacahGen::GENERATORS {
        let bracket = normalize(&Expr::comm(expr.clone(), g(gen)));
        rep.check_zero(
            format!("{label}.{gen}"),
            format!("[{label},{gen}] = 0 in the Racah algebra"),
            &bracket,
        );
    }
    rep
}

/// The basis element `A^i D^j B^k Ω_A^ℓ α^r δ^s β^t` as an expression.
pub fn basis_expr(m: &RacahMonomial) -> RacahExpr {
    use RacahGen::*;
    let mut factors = Vec::new();
    for (gen, n) in [
        (A, m.a),
        (D, u32::from(m.d)),
        (B, m.b),
        (OmegaA, m.omega),
        (Alpha, m.alpha),
        (Delta, m.delta),
        (Beta, m.beta),
    ] {
        if n > 0 {
            factors.push(if n == 1 { g(gen) } else { g(gen).pow(n) });
        }
    }
    if factors.is_empty() {
        Expr::int(1)
    } else {
        Expr::product(factors)
    }
}

#[cfg(test)]
mod tests;
