//! Seeded generators for expressions, normal forms and algebra elements.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::expr::Expr;
use crate::racah::{RacahExpr, RacahGen, RacahMonomial, RacahNF};
use crate::scalar::{frac, Scalar};
use crate::tensor::{AbcMonomial, TensorElement};
use crate::usl2::{PbwMonomial, USl2Element};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ bound` and `1 ≤ q ≤ bound`.
pub fn small_rational(rng: &mut Rng64, bound: i64) -> Scalar {
    frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// A nonzero `p/q` with `|p| ≤ bound` and `1 ≤ q ≤ bound`.
pub fn nonzero_rational(rng: &mut Rng64, bound: i64) -> Scalar {
    loop {
        let c = small_rational(rng, bound);
        if c != frac(0, 1) {
            return c;
        }
    }
}

/// Filtration weight of a named element: `A, B, C, δ` count 1, `D` counts 2,
/// `α, β, γ` count 3 and the Casimir elements count 4.
pub fn weight(gen: RacahGen) -> u32 {
    use RacahGen::*;
    match gen {
        A | B | C | Delta => 1,
        D => 2,
        Alpha | Beta | Gamma => 3,
        OmegaA | OmegaB | OmegaC => 4,
    }
}

/// A random expression tree of depth at most `depth` (a leaf has depth 1)
/// whose filtration degree is at most `budget`.
pub fn racah_expr(rng: &mut Rng64, depth: u32, budget: u32) -> RacahExpr {
    if depth <= 1 || budget == 0 || rng.gen_bool(0.2) {
        return leaf(rng, budget);
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => racah_expr(rng, d, budget) + racah_expr(rng, d, budget),
        1 => racah_expr(rng, d, budget) - racah_expr(rng, d, budget),
        2 | 3 => {
            let left = rng.gen_range(0..=budget);
            racah_expr(rng, d, left) * racah_expr(rng, d, budget - left)
        }
        4 => {
            let left = rng.gen_range(0..=budget);
            Expr::comm(racah_expr(rng, d, left), racah_expr(rng, d, budget - left))
        }
        5 => {
            let left = rng.gen_range(0..=budget);
            Expr::anti(racah_expr(rng, d, left), racah_expr(rng, d, budget - left))
        }
        6 => racah_expr(rng, d, budget).scaled(nonzero_rational(rng, 5)),
        _ => {
            let n = rng.gen_range(0..=3u32);
            let base = budget.checked_div(n).unwrap_or(budget);
            racah_expr(rng, d, base).pow(n)
        }
    }
}

fn leaf(rng: &mut Rng64, budget: u32) -> RacahExpr {
    let choices: Vec<RacahGen> = RacahGen::ALL
        .into_iter()
        .filter(|gen| weight(*gen) <= budget)
        .collect();
    if choices.is_empty() || rng.gen_bool(0.15) {
        return Expr::scalar(small_rational(rng, 5));
    }
    Expr::sym(choices[rng.gen_range(0..choices.len())])
}

/// A random normal form with up to `terms` terms and exponents up to
/// `max_exp`.
pub fn racah_nf(rng: &mut Rng64, terms: usize, max_exp: u32) -> RacahNF {
    let mut out = RacahNF::zero();
    for _ in 0..terms {
        let mut t = [0u32; 7];
        for (idx, slot) in t.iter_mut().enumerate() {
            *slot = if idx == 1 {
                rng.gen_range(0..=1)
            } else if idx >= 3 {
                rng.gen_range(0..=max_exp.min(1))
            } else {
                rng.gen_range(0..=max_exp)
            };
        }
        let m = RacahMonomial::from_tuple(t).expect("D exponent drawn from {0,1}");
        out.add_term(m, nonzero_rational(rng, 5));
    }
    out
}

/// A random normal form with up to `terms` terms, each of filtration degree
/// at most `degree`.
pub fn racah_nf_bounded(rng: &mut Rng64, terms: usize, degree: u32) -> RacahNF {
    let mut out = RacahNF::zero();
    for _ in 0..terms {
        let m = loop {
            let t = [
                rng.gen_range(0..=degree),
                rng.gen_range(0..=1),
                rng.gen_range(0..=degree),
                rng.gen_range(0..=degree / 4),
                rng.gen_range(0..=degree / 3),
                rng.gen_range(0..=degree),
                rng.gen_range(0..=degree / 3),
            ];
            let m = RacahMonomial::from_tuple(t).expect("D exponent drawn from {0,1}");
            if m.filtration_degree() <= degree {
                break m;
            }
        };
        out.add_term(m, nonzero_rational(rng, 5));
    }
    out
}

pub fn pbw_monomial(rng: &mut Rng64, max_exp: u32) -> PbwMonomial {
    PbwMonomial {
        e: rng.gen_range(0..=max_exp),
        h: rng.gen_range(0..=max_exp),
        f: rng.gen_range(0..=max_exp),
    }
}

pub fn usl2_element(rng: &mut Rng64, terms: usize, max_exp: u32) -> USl2Element {
    let mut out = USl2Element::zero();
    for _ in 0..terms {
        out.add_term(pbw_monomial(rng, max_exp), small_rational(rng, 5));
    }
    out
}

pub fn tensor_element(rng: &mut Rng64, terms: usize, max_exp: u32) -> TensorElement {
    let mut out = TensorElement::zero();
    for _ in 0..terms {
        let abc = AbcMonomial::new(
            rng.gen_range(0..=max_exp),
            rng.gen_range(0..=max_exp),
            rng.gen_range(0..=max_exp),
        );
        out += &TensorElement::term(abc, pbw_monomial(rng, max_exp), small_rational(rng, 5));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = racah_expr(&mut rng(3), 6, 6);
        let b = racah_expr(&mut rng(3), 6, 6);
        assert_eq!(a, b);
        assert!(a.depth() <= 6);
    }

    #[test]
    fn rationals_stay_small() {
        let mut r = rng(1);
        for _ in 0..200 {
            let c = small_rational(&mut r, 10);
            assert!(c.numer().magnitude() <= &10u32.into());
            assert!(c.denom() <= &10.into());
        }
    }
}
