//! The homomorphism `♮` from the Racah algebra into `F[a,b,c] ⊗ U(sl2)`,
//! and the verification suites built on it.

mod tables;

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::expr::{Expr, Semantics};
use crate::racah::{casimir_element, g, normalize, CasimirKind, RacahExpr, RacahGen, RacahMonomial, RacahNF};
use crate::report::VerificationReport;
use crate::scalar::{frac, int, Scalar};
use crate::tensor::{abc_linear, commutator, AbcMonomial, TensorElement};
use crate::usl2::USl2Element;

pub use tables::{verify_casimir_images, verify_homogeneous_tables};

fn u(v: USl2Element) -> TensorElement {
    TensorElement::usl2(&v)
}

fn lin(ka: i64, kb: i64, kc: i64, k: i64) -> TensorElement {
    TensorElement::abc(&abc_linear(ka, kb, kc, k))
}

/// `a(a+1)`, `b(b+1)` or `c(c+1)` as `p ⊗ 1`, selected by index 0, 1, 2.
pub(crate) fn quad(index: usize) -> TensorElement {
    let v = match index {
        0 => TensorElement::a(),
        1 => TensorElement::b(),
        _ => TensorElement::c(),
    };
    &v * &v.shifted(1)
}

pub(crate) fn lambda() -> TensorElement {
    u(USl2Element::casimir())
}

/// `a(a+1)⊗1 + (b-c-a)⊗x + (a+b-c+1)⊗y - 1⊗xy`.
pub fn generator_image_a() -> TensorElement {
    let (x, y) = (USl2Element::x(), USl2Element::y());
    &(&(&quad(0) + &(&lin(-1, 1, -1, 0) * &u(x.clone()))) + &(&lin(1, 1, -1, 1) * &u(y.clone())))
        - &u(&x * &y)
}

/// `b(b+1)⊗1 + (c-a-b)⊗y + (b+c-a+1)⊗z - 1⊗yz`.
pub fn generator_image_b() -> TensorElement {
    let (y, z) = (USl2Element::y(), USl2Element::z());
    &(&(&quad(1) + &(&lin(-1, -1, 1, 0) * &u(y.clone()))) + &(&lin(-1, 1, 1, 1) * &u(z.clone())))
        - &u(&y * &z)
}

/// `c(c+1)⊗1 + (a-b-c)⊗z + (c+a-b+1)⊗x - 1⊗zx`.
pub fn generator_image_c() -> TensorElement {
    let (z, x) = (USl2Element::z(), USl2Element::x());
    &(&(&quad(2) + &(&lin(1, -1, -1, 0) * &u(z.clone()))) + &(&lin(1, -1, 1, 1) * &u(x.clone())))
        - &u(&z * &x)
}

/// `1⊗w + (c+b(c+a-b))⊗x + (a+c(a+b-c))⊗y + (b+a(b+c-a))⊗z
///  + (b-c)⊗xy + (c-a)⊗yz + (a-b)⊗zx`.
pub fn generator_image_d() -> TensorElement {
    let (x, y, z) = (USl2Element::x(), USl2Element::y(), USl2Element::z());
    let (a, b, c) = (TensorElement::a(), TensorElement::b(), TensorElement::c());
    let cx = &c + &(&b * &lin(1, -1, 1, 0));
    let cy = &a + &(&c * &lin(1, 1, -1, 0));
    let cz = &b + &(&a * &lin(-1, 1, 1, 0));
    let mut out = u(USl2Element::w());
    out += &(&cx * &u(x.clone()));
    out += &(&cy * &u(y.clone()));
    out += &(&cz * &u(z.clone()));
    out += &(&lin(0, 1, -1, 0) * &u(&x * &y));
    out += &(&lin(-1, 0, 1, 0) * &u(&y * &z));
    out += &(&lin(1, -1, 0, 0) * &u(&z * &x));
    out
}

/// `(1⊗Λ - p_i⊗1)(p_j⊗1 - p_k⊗1)` with `p_0 = a(a+1)` etc.; the closed
/// forms of `α♮`, `β♮`, `γ♮` for `(i,j,k)` = (0,1,2), (1,2,0), (2,0,1).
fn central_closed_form(i: usize, j: usize, k: usize) -> TensorElement {
    &(&lambda() - &quad(i)) * &(&quad(j) - &quad(k))
}

pub fn closed_form_alpha() -> TensorElement {
    central_closed_form(0, 1, 2)
}

pub fn closed_form_beta() -> TensorElement {
    central_closed_form(1, 2, 0)
}

pub fn closed_form_gamma() -> TensorElement {
    central_closed_form(2, 0, 1)
}

/// `1⊗Λ + a(a+1)⊗1 + b(b+1)⊗1 + c(c+1)⊗1`.
pub fn closed_form_delta() -> TensorElement {
    &(&(&lambda() + &quad(0)) + &quad(1)) + &quad(2)
}

/// The displayed closed form of the image of `Ω_A`, `Ω_B` or `Ω_C`:
/// `(Λ + p_i - p_j - p_k)(p_i Λ - p_j p_k) - (Λ + p_i)(p_j + p_k)`.
pub fn casimir_image_closed_form(which: CasimirKind) -> TensorElement {
    let (i, j, k) = match which {
        CasimirKind::A => (0, 1, 2),
        CasimirKind::B => (1, 2, 0),
        CasimirKind::C => (2, 0, 1),
    };
    let lam = lambda();
    let (pi, pj, pk) = (quad(i), quad(j), quad(k));
    let first = &(&(&(&lam + &pi) - &pj) - &pk) * &(&(&pi * &lam) - &(&pj * &pk));
    let second = &(&lam + &pi) * &(&pj + &pk);
    &first - &second
}

/// Images of every named element of the Racah algebra.
///
/// `α♮..δ♮` are the displayed closed forms; `Ω_A♮..Ω_C♮` are computed by
/// embedding their defining expressions.
#[derive(Clone, Debug)]
pub struct GeneratorImageTable {
    images: HashMap<RacahGen, TensorElement>,
}

impl GeneratorImageTable {
    pub fn new() -> Self {
        let mut images = HashMap::new();
        images.insert(RacahGen::A, generator_image_a());
        images.insert(RacahGen::B, generator_image_b());
        images.insert(RacahGen::C, generator_image_c());
        images.insert(RacahGen::D, generator_image_d());
        images.insert(RacahGen::Alpha, closed_form_alpha());
        images.insert(RacahGen::Beta, closed_form_beta());
        images.insert(RacahGen::Gamma, closed_form_gamma());
        images.insert(RacahGen::Delta, closed_form_delta());
        let mut table = GeneratorImageTable { images };
        for which in CasimirKind::ALL {
            let img = casimir_element(which).eval(&Embedder { table: &table });
            table.images.insert(which.generator(), img);
        }
        table
    }

    /// The table shared by every `embed` call.
    pub fn shared() -> &'static GeneratorImageTable {
        static TABLE: OnceLock<GeneratorImageTable> = OnceLock::new();
        TABLE.get_or_init(GeneratorImageTable::new)
    }

    pub fn get(&self, gen: RacahGen) -> &TensorElement {
        &self.images[&gen]
    }

    pub fn entries(&self) -> impl Iterator<Item = (RacahGen, &TensorElement)> {
        RacahGen::ALL.into_iter().map(|gen| (gen, self.get(gen)))
    }
}

impl Default for GeneratorImageTable {
    fn default() -> Self {
        Self::new()
    }
}

struct Embedder<'a> {
    table: &'a GeneratorImageTable,
}

impl Semantics<RacahGen> for Embedder<'_> {
    type Value = TensorElement;

    fn symbol(&self, s: &RacahGen) -> TensorElement {
        self.table.get(*s).clone()
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

/// `u♮`, by homomorphic extension over the generator images.
pub fn embed(u: &RacahExpr) -> TensorElement {
    u.eval(&Embedder {
        table: GeneratorImageTable::shared(),
    })
}

/// Embeds normal forms, caching the images of generator powers.
#[derive(Default)]
pub struct NormalFormEmbedder {
    powers: HashMap<(RacahGen, u32), TensorElement>,
}

impl NormalFormEmbedder {
    pub fn new() -> Self {
        Self::default()
    }

    fn power(&mut self, gen: RacahGen, n: u32) -> TensorElement {
        if n == 0 {
            return TensorElement::one();
        }
        if let Some(p) = self.powers.get(&(gen, n)) {
            return p.clone();
        }
        let p = &self.power(gen, n - 1) * GeneratorImageTable::shared().get(gen);
        self.powers.insert((gen, n), p.clone());
        p
    }

    /// The image of a single basis monomial.
    pub fn monomial(&mut self, m: &RacahMonomial) -> TensorElement {
        let word = &(&self.power(RacahGen::A, m.a) * &self.power(RacahGen::D, u32::from(m.d)))
            * &self.power(RacahGen::B, m.b);
        let central = &(&(&self.power(RacahGen::OmegaA, m.omega) * &self.power(RacahGen::Alpha, m.alpha))
            * &self.power(RacahGen::Delta, m.delta))
            * &self.power(RacahGen::Beta, m.beta);
        &word * &central
    }

    pub fn embed(&mut self, nf: &RacahNF) -> TensorElement {
        let mut out = TensorElement::zero();
        for (m, c) in nf.terms() {
            out += &self.monomial(m).scale(c);
        }
        out
    }
}

/// The image of a normal form.
pub fn embed_nf(nf: &RacahNF) -> TensorElement {
    NormalFormEmbedder::new().embed(nf)
}

/// One row of the coefficient table for `[A♮,B♮] = 2D♮`: an `a,b,c`
/// monomial with the two coefficients written in `U(sl2)`.
struct CoefficientRow {
    label: &'static str,
    abc: AbcMonomial,
    bracket_side: USl2Element,
    d_side: USl2Element,
}

fn coefficient_rows() -> Vec<CoefficientRow> {
    use crate::usl2::commutator as br;
    let (x, y, z, w) = (USl2Element::x(), USl2Element::y(), USl2Element::z(), USl2Element::w());
    let (xy, yz, zx) = (&x * &y, &y * &z, &z * &x);
    let two = int(2);
    let row = |label, abc: (u32, u32, u32), bracket_side, d_side| CoefficientRow {
        label,
        abc: AbcMonomial::new(abc.0, abc.1, abc.2),
        bracket_side,
        d_side,
    };
    vec![
        row("a^2", (2, 0, 0), &(&br(&x, &y) - &br(&y, &z)) - &br(&z, &x), z.scale(&-&two)),
        row("b^2", (0, 2, 0), &(&br(&y, &z) - &br(&z, &x)) - &br(&x, &y), x.scale(&-&two)),
        row("c^2", (0, 0, 2), &(&br(&z, &x) - &br(&x, &y)) - &br(&y, &z), y.scale(&-&two)),
        row("ab", (1, 1, 0), br(&z, &x).scale(&two), (&z + &x).scale(&two)),
        row("bc", (0, 1, 1), br(&x, &y).scale(&two), (&x + &y).scale(&two)),
        row("ca", (1, 0, 1), br(&y, &z).scale(&two), (&y + &z).scale(&two)),
        row(
            "a",
            (1, 0, 0),
            &(&br(&(&x - &y), &yz) - &br(&(&y + &z), &xy)) + &br(&z, &x),
            (&(&zx - &yz) + &y).scale(&two),
        ),
        row(
            "b",
            (0, 1, 0),
            &(&(&br(&(&z - &y), &xy) - &br(&(&x + &y), &yz)) - &br(&z, &x)) + &br(&y, &z).scale(&two),
            (&(&xy - &zx) + &z).scale(&two),
        ),
        row(
            "c",
            (0, 0, 1),
            &(&br(&(&y + &z), &xy) + &br(&(&x + &y), &yz)) + &br(&z, &x),
            (&(&yz - &xy) + &x).scale(&two),
        ),
        row(
            "1",
            (0, 0, 0),
            &(&(&br(&y, &z) - &br(&y, &yz)) + &br(&z, &xy)) + &br(&xy, &yz),
            w.scale(&two),
        ),
    ]
}

/// The defining relations of the Racah algebra hold for the generator
/// images, the central images match their closed forms, and every row of
/// the coefficient table for `[A♮,B♮] = 2D♮` holds.
pub fn verify_homomorphism() -> VerificationReport {
    let mut rep = VerificationReport::new("homomorphism");
    let (a, b, c, d) = (
        generator_image_a(),
        generator_image_b(),
        generator_image_c(),
        generator_image_d(),
    );
    let two_d = d.scale(&int(2));
    let ab = commutator(&a, &b);
    rep.check_eq("bracket.AB", "[A♮,B♮] = 2D♮", &ab, &two_d);
    rep.check_eq("bracket.BC", "[B♮,C♮] = 2D♮", &commutator(&b, &c), &two_d);
    rep.check_eq("bracket.CA", "[C♮,A♮] = 2D♮", &commutator(&c, &a), &two_d);

    let alpha = &(&commutator(&a, &d) + &(&a * &c)) - &(&b * &a);
    let beta = &(&commutator(&b, &d) + &(&b * &a)) - &(&c * &b);
    let gamma = &(&commutator(&c, &d) + &(&c * &b)) - &(&a * &c);
    let delta = &(&a + &b) + &c;
    rep.check_eq("alpha", "[A♮,D♮] + A♮C♮ - B♮A♮ = α♮ (closed form)", &alpha, &closed_form_alpha());
    rep.check_eq("beta", "[B♮,D♮] + B♮A♮ - C♮B♮ = β♮ (closed form)", &beta, &closed_form_beta());
    rep.check_eq("gamma", "[C♮,D♮] + C♮B♮ - A♮C♮ = γ♮ (closed form)", &gamma, &closed_form_gamma());
    rep.check_eq("delta", "A♮ + B♮ + C♮ = δ♮ (closed form)", &delta, &closed_form_delta());
    rep.check_zero(
        "alpha+beta+gamma",
        "α♮ + β♮ + γ♮ = 0",
        &(&(&closed_form_alpha() + &closed_form_beta()) + &closed_form_gamma()),
    );

    let rows = coefficient_rows();
    for row in &rows {
        rep.check_eq(
            format!("table.{}.bracket", row.label),
            format!("coefficient of {} in [A♮,B♮]", row.label),
            &ab.abc_coefficient(&row.abc),
            &row.bracket_side,
        );
        rep.check_eq(
            format!("table.{}.2D", row.label),
            format!("coefficient of {} in 2D♮", row.label),
            &two_d.abc_coefficient(&row.abc),
            &row.d_side,
        );
        rep.check_eq(
            format!("table.{}", row.label),
            format!("table row {}: both coefficients agree", row.label),
            &row.bracket_side,
            &row.d_side,
        );
    }
    let listed: Vec<AbcMonomial> = rows.iter().map(|r| r.abc).collect();
    for (name, v) in [("bracket", &ab), ("2D", &two_d)] {
        let extra: Vec<AbcMonomial> = v
            .abc_support()
            .into_iter()
            .filter(|m| !listed.contains(m))
            .collect();
        rep.record(
            format!("table.support.{name}"),
            "only a², b², c², ab, bc, ca, a, b, c, 1 occur",
            extra.is_empty(),
            || format!("unexpected monomials {extra:?}"),
        );
    }
    rep
}

/// Each rewrite rule of the normal-form algorithm holds after applying `♮`.
pub fn verify_rewrite_rules() -> VerificationReport {
    use RacahGen::*;
    let mut rep = VerificationReport::new("rewrite-rules");
    let half = frac(1, 2);
    let rules: Vec<(&str, RacahExpr, RacahExpr)> = vec![
        ("C", g(C), g(Delta) - g(A) - g(B)),
        ("gamma", g(Gamma), -(g(Alpha) + g(Beta))),
        ("BA", g(B) * g(A), g(A) * g(B) - g(D).scaled(int(2))),
        (
            "DA",
            g(D) * g(A),
            g(A) * g(D) - g(A).pow(2) - (g(A) * g(B)).scaled(int(2)) + g(D).scaled(int(2))
                + g(Delta) * g(A)
                - g(Alpha),
        ),
        (
            "BD",
            g(B) * g(D),
            g(D) * g(B) - (g(A) * g(B)).scaled(int(2)) + g(D).scaled(int(2)) + g(Delta) * g(B)
                - g(B).pow(2)
                + g(Beta),
        ),
        (
            "DD",
            g(D).pow(2),
            g(OmegaA)
                - (Expr::product(vec![g(B), g(A), g(C)]) + Expr::product(vec![g(C), g(A), g(B)]))
                    .scaled(half)
                - g(A).pow(2)
                - g(B) * g(Gamma)
                + g(C) * g(Beta)
                + g(A) * g(Delta),
        ),
    ];
    for (name, lhs, rhs) in rules {
        rep.check_eq(
            format!("rule.{name}"),
            format!("({lhs})♮ = ({rhs})♮"),
            &embed(&lhs),
            &embed(&rhs),
        );
    }
    for gen in [Alpha, Beta, Gamma, Delta, OmegaA] {
        for other in RacahGen::GENERATORS {
            rep.check_zero(
                format!("central.{gen}.{other}"),
                format!("[{gen}♮,{other}♮] = 0"),
                &commutator(&embed(&g(gen)), &embed(&g(other))),
            );
        }
    }
    rep
}

/// The images of `α, β, γ, δ, Ω_A, Ω_B, Ω_C` commute with `A♮, B♮, C♮, D♮`.
pub fn verify_image_centrality() -> VerificationReport {
    use RacahGen::*;
    let mut rep = VerificationReport::new("image-centrality");
    let table = GeneratorImageTable::shared();
    for gen in [Alpha, Beta, Gamma, Delta, OmegaA, OmegaB, OmegaC] {
        for other in RacahGen::GENERATORS {
            rep.check_zero(
                format!("{gen}.{other}"),
                format!("[{gen}♮,{other}♮] = 0"),
                &commutator(table.get(gen), table.get(other)),
            );
        }
    }
    rep
}

/// The master oracle: for `count` seeded random expressions of depth at
/// most `depth`, `embed(normalize(u)) = embed(u)`, every normal form keeps
/// the exponent of `D` in `{0,1}`, and re-normalizing the read-back
/// expression is the identity.
pub fn verify_normal_form_oracle(seed: u64, count: usize, depth: u32, budget: u32) -> VerificationReport {
    let mut rep = VerificationReport::new("normal-form");
    let mut rng = crate::random::rng(seed);
    let exprs: Vec<RacahExpr> = (0..count)
        .map(|_| crate::random::racah_expr(&mut rng, depth, budget))
        .collect();
    let outcomes: Vec<[bool; 3]> = exprs
        .par_iter()
        .map(|u| {
            let nf = normalize(u);
            let sound = embed_nf(&nf) == embed(u);
            let bounded = nf.max_d_exponent() <= 1;
            let idempotent = normalize(&nf.to_expr()) == nf;
            [sound, bounded, idempotent]
        })
        .collect();
    let checks: [(&str, &str, usize); 3] = [
        ("soundness", "embed(normalize(u)) = embed(u)", 0),
        ("d-exponent", "every normal form has D exponent 0 or 1", 1),
        ("idempotence", "normalize(read-back of normalize(u)) = normalize(u)", 2),
    ];
    for (id, statement, slot) in checks {
        let bad = outcomes.iter().position(|o| !o[slot]);
        rep.record(
            id,
            format!("{statement} for {count} random expressions of depth ≤ {depth}"),
            bad.is_none(),
            || {
                let i = bad.unwrap_or(0);
                format!("expression #{i}: {}", exprs[i])
            },
        );
    }
    rep.note(format!("seed {seed}, {count} expressions, depth ≤ {depth}, filtration degree ≤ {budget}"));
    rep
}

/// For `pairs` seeded random pairs of nonzero normal forms of filtration
/// degree at most `degree`, the product is
/// nonzero, and its image is the (nonzero) product of the images.
pub fn verify_no_zero_divisors(seed: u64, pairs: usize, degree: u32) -> VerificationReport {
    let mut rep = VerificationReport::new("zero-divisors");
    let mut rng = crate::random::rng(seed);
    let mut inputs = Vec::with_capacity(pairs);
    while inputs.len() < pairs {
        let u = crate::random::racah_nf_bounded(&mut rng, 3, degree);
        let v = crate::random::racah_nf_bounded(&mut rng, 3, degree);
        if !u.is_zero() && !v.is_zero() {
            inputs.push((u, v));
        }
    }
    let outcomes: Vec<(bool, bool)> = inputs
        .par_iter()
        .map(|(u, v)| {
            let uv = u * v;
            let image = &embed_nf(u) * &embed_nf(v);
            (!uv.is_zero() && !image.is_zero(), embed_nf(&uv) == image)
        })
        .collect();
    let nonzero = outcomes.iter().position(|o| !o.0);
    rep.record(
        "nonzero-product",
        format!("u·v ≠ 0 and u♮v♮ ≠ 0 for {pairs} random nonzero pairs"),
        nonzero.is_none(),
        || {
            let (u, v) = &inputs[nonzero.unwrap_or(0)];
            format!("pair #{}: {u} and {v}", nonzero.unwrap_or(0))
        },
    );
    let agree = outcomes.iter().position(|o| !o.1);
    rep.record(
        "product-image",
        "(u·v)♮ = u♮ v♮ on the same pairs",
        agree.is_none(),
        || format!("pair #{}", agree.unwrap_or(0)),
    );
    rep.note(format!("seed {seed}, {pairs} pairs, filtration degree ≤ {degree} per factor"));
    rep
}

#[cfg(test)]
mod tests;
