//! Leading monomials under the rank `5h + i + 3j + 2k`, algebraic
//! independence of `θ` (or `ϑ`) with the central images, and finite-scale
//! injectivity certificates for `♮`.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::linalg::SparseMatrix;
use crate::natural::{lambda, quad, GeneratorImageTable, NormalFormEmbedder};
use crate::poly::{Monomial, Poly};
use crate::racah::{RacahGen, RacahMonomial};
use crate::render;
use crate::report::VerificationReport;
use crate::scalar::{int, Scalar};
use crate::tensor::{Structural, TensorElement};

/// The monomial `x1^h x2^i x3^j x4^k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankedMonomial {
    pub h: u32,
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl RankedMonomial {
    pub fn new(h: u32, i: u32, j: u32, k: u32) -> Self {
        RankedMonomial { h, i, j, k }
    }

    pub fn rank(&self) -> u64 {
        5 * u64::from(self.h) + u64::from(self.i) + 3 * u64::from(self.j) + 2 * u64::from(self.k)
    }

    pub fn text(&self) -> String {
        [
            render::power_text("x1", self.h),
            render::power_text("x2", self.i),
            render::power_text("x3", self.j),
            render::power_text("x4", self.k),
        ]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
    }
}

impl Monomial for RankedMonomial {
    fn mul(&self, o: &Self) -> Self {
        RankedMonomial {
            h: self.h + o.h,
            i: self.i + o.i,
            j: self.j + o.j,
            k: self.k + o.k,
        }
    }
}

impl fmt::Display for RankedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.text();
        f.write_str(if t.is_empty() { "1" } else { &t })
    }
}

pub type QuadPoly = Poly<RankedMonomial>;

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::sum_text(
            self.terms().map(|(m, c)| (c.clone(), m.text())),
        ))
    }
}

/// The variable `x_n` for `n` in `1..=4`.
pub fn x(n: usize) -> QuadPoly {
    let mut m = RankedMonomial::default();
    match n {
        1 => m.h = 1,
        2 => m.i = 1,
        3 => m.j = 1,
        4 => m.k = 1,
        _ => panic!("variable index {n} outside 1..=4"),
    }
    QuadPoly::monomial(m)
}

fn poly(terms: &[(i64, [u32; 4])]) -> QuadPoly {
    terms
        .iter()
        .map(|(c, e)| (RankedMonomial::new(e[0], e[1], e[2], e[3]), int(*c)))
        .collect()
}

/// `y_1, ..., y_4` for `n` in `1..=4`.
pub fn y(n: usize) -> QuadPoly {
    match n {
        1 => poly(&[
            (1, [2, 1, 0, 0]),
            (1, [1, 2, 0, 0]),
            (-1, [1, 1, 1, 0]),
            (-1, [1, 1, 0, 1]),
            (-1, [1, 0, 1, 1]),
            (-1, [0, 1, 1, 1]),
            (1, [0, 0, 2, 1]),
            (1, [0, 0, 1, 2]),
            (-1, [1, 0, 1, 0]),
            (-1, [1, 0, 0, 1]),
            (-1, [0, 1, 1, 0]),
            (-1, [0, 1, 0, 1]),
        ]),
        2 => poly(&[(1, [1, 0, 1, 0]), (-1, [1, 0, 0, 1]), (-1, [0, 1, 1, 0]), (1, [0, 1, 0, 1])]),
        3 => poly(&[(1, [1, 0, 0, 1]), (-1, [1, 1, 0, 0]), (-1, [0, 0, 1, 1]), (1, [0, 1, 1, 0])]),
        4 => poly(&[(1, [1, 0, 0, 0]), (1, [0, 1, 0, 0]), (1, [0, 0, 1, 0]), (1, [0, 0, 0, 1])]),
        _ => panic!("index {n} outside 1..=4"),
    }
}

/// The unique monomial of maximal rank in `p`.
pub fn leading_monomial(p: &QuadPoly) -> Result<RankedMonomial, Error> {
    let mut best: Option<RankedMonomial> = None;
    let mut tie: Option<RankedMonomial> = None;
    for (m, _) in p.terms() {
        match best {
            None => best = Some(*m),
            Some(b) if m.rank() > b.rank() => {
                best = Some(*m);
                tie = None;
            }
            Some(b) if m.rank() == b.rank() => tie = Some(*m),
            _ => {}
        }
    }
    match (best, tie) {
        (None, _) => Err(Error::ZeroPolynomial),
        (Some(b), Some(t)) => Err(Error::RankTie(b.to_string(), t.to_string())),
        (Some(b), None) => Ok(b),
    }
}

/// `y1^r y2^s y3^t y4^u`.
pub fn y_product(r: u32, s: u32, t: u32, u: u32) -> QuadPoly {
    y(1).pow(r).mul_ref(&y(2).pow(s)).mul_ref(&y(3).pow(t)).mul_ref(&y(4).pow(u))
}

/// Evaluates a polynomial in `x1..x4` at a rational point.
pub fn eval_at(p: &QuadPoly, point: &[Scalar; 4]) -> Scalar {
    p.eval_with(Scalar::zero(), |m, c| {
        c * crate::scalar::pow(&point[0], m.h)
            * crate::scalar::pow(&point[1], m.i)
            * crate::scalar::pow(&point[2], m.j)
            * crate::scalar::pow(&point[3], m.k)
    })
}

/// For every `r, s, t, u ≤ max_exp`, the leading monomial of
/// `y1^r y2^s y3^t y4^u` is `x1^{2r+s+t+u} x2^r x3^s x4^t` with coefficient
/// 1, and `(r, s, t, u)` is recovered as `(i, j, k, h - 2i - j - k)`.
pub fn verify_leading_monomial_law(max_exp: u32) -> VerificationReport {
    let mut rep = VerificationReport::new("leading-monomial");
    let mut rng = crate::random::rng(0x5eed);
    let points: Vec<[Scalar; 4]> = (0..3)
        .map(|_| std::array::from_fn(|_| crate::random::small_rational(&mut rng, 10)))
        .collect();
    let ys: Vec<QuadPoly> = (1..=4).map(y).collect();
    for r in 0..=max_exp {
        for s in 0..=max_exp {
            for t in 0..=max_exp {
                for u in 0..=max_exp {
                    let id = format!("{r}{s}{t}{u}");
                    let p = y_product(r, s, t, u);
                    let expected = RankedMonomial::new(2 * r + s + t + u, r, s, t);
                    let got = leading_monomial(&p);
                    let ok = matches!(&got, Ok(m) if *m == expected) && p.coeff(&expected).is_one();
                    rep.record(
                        format!("leading.{id}"),
                        format!("leading monomial of y1^{r} y2^{s} y3^{t} y4^{u} is {expected} with coefficient 1"),
                        ok,
                        || format!("got {got:?} with coefficient {}", p.coeff(&expected)),
                    );
                    let solved = got.as_ref().ok().and_then(|m| {
                        let u2 = i64::from(m.h) - 2 * i64::from(m.i) - i64::from(m.j) - i64::from(m.k);
                        (u2 >= 0).then_some((m.i, m.j, m.k, u2 as u32))
                    });
                    rep.record(
                        format!("solve.{id}"),
                        "r = i, s = j, t = k, u = h - 2i - j - k recovers the exponents",
                        solved == Some((r, s, t, u)),
                        || format!("recovered {solved:?}"),
                    );
                    let bad_point = points.iter().position(|pt| {
                        let direct: Scalar = [r, s, t, u]
                            .iter()
                            .zip(&ys)
                            .map(|(e, yi)| crate::scalar::pow(&eval_at(yi, pt), *e))
                            .fold(Scalar::one(), |acc, v| acc * v);
                        direct != eval_at(&p, pt)
                    });
                    rep.record(
                        format!("expansion.{id}"),
                        "expanded product agrees with the factors at random points",
                        bad_point.is_none(),
                        || format!("mismatch at point {bad_point:?}"),
                    );
                }
            }
        }
    }
    rep
}

/// Substitutes tensor elements for `x1..x4`.
pub fn substitute(p: &QuadPoly, values: &[TensorElement; 4]) -> TensorElement {
    let mut cache: HashMap<(usize, u32), TensorElement> = HashMap::new();
    let mut power = |idx: usize, n: u32| -> TensorElement {
        cache
            .entry((idx, n))
            .or_insert_with(|| values[idx].pow(n))
            .clone()
    };
    let mut out = TensorElement::zero();
    for (m, c) in p.terms() {
        let term = &(&(&power(0, m.h) * &power(1, m.i)) * &power(2, m.j)) * &power(3, m.k);
        out += &term.scale(c);
    }
    out
}

/// Monomials `v0^n v1^l v2^r v3^s v4^t` of total degree at most `d`,
/// as exponent tuples.
fn exponent_tuples(d: u32) -> Vec<[u32; 5]> {
    let mut out = Vec::new();
    for n in 0..=d {
        for l in 0..=d - n {
            for r in 0..=d - n - l {
                for s in 0..=d - n - l - r {
                    for t in 0..=d - n - l - r - s {
                        out.push([n, l, r, s, t]);
                    }
                }
            }
        }
    }
    out
}

/// Exact rank of the monomials of total degree `≤ d` in five elements.
fn monomial_rank(elements: &[TensorElement; 5], d: u32) -> (usize, usize) {
    let powers: Vec<Vec<TensorElement>> = elements
        .iter()
        .map(|e| {
            let mut v = vec![TensorElement::one()];
            for i in 1..=d as usize {
                let next = &v[i - 1] * e;
                v.push(next);
            }
            v
        })
        .collect();
    let tuples = exponent_tuples(d);
    let vectors: Vec<_> = tuples
        .par_iter()
        .map(|ex| {
            let mut m = TensorElement::one();
            for (idx, e) in ex.iter().enumerate() {
                if *e > 0 {
                    m = &m * &powers[idx][*e as usize];
                }
            }
            m.terms()
        })
        .collect();
    let (matrix, _) = SparseMatrix::from_vectors(vectors);
    (tuples.len(), matrix.rank())
}

/// The elements `θ` (or `ϑ`), `Ω_A♮`, `α♮`, `β♮`, `δ♮` are algebraically
/// independent: their monomials of total degree `≤ max_total_degree` have
/// full exact rank. Also checks that these elements are `X_0`, `y_1..y_4`
/// evaluated at `X_1 = 1⊗Λ`, `X_2 = a(a+1)`, `X_3 = b(b+1)`, `X_4 = c(c+1)`.
pub fn verify_theta_independence(max_total_degree: u32) -> VerificationReport {
    let mut rep = VerificationReport::new("independence");
    let table = GeneratorImageTable::shared();
    let values = [lambda(), quad(0), quad(1), quad(2)];
    let names = ["Ω_A♮", "α♮", "β♮", "δ♮"];
    let gens = [RacahGen::OmegaA, RacahGen::Alpha, RacahGen::Beta, RacahGen::Delta];
    for (n, (name, gen)) in names.iter().zip(gens).enumerate() {
        rep.check_eq(
            format!("substitution.y{}", n + 1),
            format!("y{}(X1, X2, X3, X4) = {name}", n + 1),
            &substitute(&y(n + 1), &values),
            table.get(gen),
        );
    }
    let s = Structural::new();
    for (label, first) in [("theta", s.theta), ("vartheta", s.vartheta)] {
        let elements = [
            first,
            table.get(RacahGen::OmegaA).clone(),
            table.get(RacahGen::Alpha).clone(),
            table.get(RacahGen::Beta).clone(),
            table.get(RacahGen::Delta).clone(),
        ];
        let (count, rank) = monomial_rank(&elements, max_total_degree);
        rep.record(
            format!("rank.{label}"),
            format!(
                "monomials of total degree ≤ {max_total_degree} in {label}, Ω_A♮, α♮, β♮, δ♮ are linearly independent"
            ),
            rank == count,
            || format!("rank {rank} of {count} monomials"),
        );
        rep.note(format!("{label}: {count} monomials, rank {rank}"));
    }
    rep
}

pub const DEFAULT_TUPLE_LIMIT: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateStatus {
    Pass,
    Fail,
}

/// A finite-scale witness for injectivity: the images of every basis
/// element within the caps are linearly independent.
#[derive(Clone, Debug, Serialize)]
pub struct InjectivityCertificate {
    pub caps: [u32; 7],
    pub dimension: usize,
    pub rank: usize,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
    pub status: CertificateStatus,
    #[serde(skip)]
    pub matrix: SparseMatrix,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl InjectivityCertificate {
    pub fn passed(&self) -> bool {
        self.status == CertificateStatus::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("certificate serializes");
        v["scope"] = "finite-scale evidence for the listed caps, not a proof".into();
        v
    }

    /// The coefficient matrix as sparse triplets (one row per basis tuple).
    pub fn triplets(&self) -> String {
        self.matrix.triplets()
    }
}

impl fmt::Display for InjectivityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "injectivity certificate caps={:?}: dimension {}, rank {}, {:.3}s, {}",
            self.caps,
            self.dimension,
            self.rank,
            self.elapsed.as_secs_f64(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Every basis tuple `(i, j, k, ℓ, r, s, t)` with each entry at most the
/// matching cap (and `j ≤ 1`).
pub fn basis_tuples(caps: [u32; 7]) -> Vec<RacahMonomial> {
    let caps = {
        let mut c = caps;
        c[1] = c[1].min(1);
        c
    };
    let mut out = vec![[0u32; 7]];
    for (idx, cap) in caps.iter().enumerate() {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=*cap).map(move |v| {
                    let mut t = t;
                    t[idx] = v;
                    t
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|t| RacahMonomial::from_tuple(t).expect("D exponent capped at 1"))
        .collect()
}

fn tuple_count(caps: [u32; 7]) -> usize {
    caps.iter()
        .enumerate()
        .map(|(idx, c)| if idx == 1 { (*c).min(1) as usize + 1 } else { *c as usize + 1 })
        .product()
}

/// Embeds every basis element within `caps`, and certifies that the
/// coefficient matrix has full exact rank.
pub fn injectivity_certificate(caps: [u32; 7], limit: usize) -> Result<InjectivityCertificate, Error> {
    let count = tuple_count(caps);
    if count > limit {
        return Err(Error::CapLimitExceeded { count, limit });
    }
    let start = Instant::now();
    let tuples = basis_tuples(caps);
    let vectors: Vec<_> = tuples
        .par_iter()
        .map_init(NormalFormEmbedder::new, |emb, m| emb.monomial(m).terms())
        .collect();
    let (matrix, _) = SparseMatrix::from_vectors(vectors);
    let rank = matrix.rank();
    Ok(InjectivityCertificate {
        caps,
        dimension: tuples.len(),
        rank,
        elapsed: start.elapsed(),
        status: if rank == tuples.len() {
            CertificateStatus::Pass
        } else {
            CertificateStatus::Fail
        },
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(RankedMonomial::new(1, 0, 1, 0).rank(), 8);
        assert_eq!(RankedMonomial::new(0, 1, 0, 1).rank(), 3);
        let ranks: Vec<u64> = [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)]
            .iter()
            .map(|&(h, i, j, k)| RankedMonomial::new(h, i, j, k).rank())
            .collect();
        assert_eq!(ranks, vec![8, 7, 4, 3]);
    }

    #[test]
    fn leading_monomials() {
        assert_eq!(leading_monomial(&y(2)).unwrap(), RankedMonomial::new(1, 0, 1, 0));
        assert_eq!(leading_monomial(&QuadPoly::one()).unwrap(), RankedMonomial::default());
        assert_eq!(
            leading_monomial(&y_product(1, 1, 1, 1)).unwrap(),
            RankedMonomial::new(5, 1, 1, 1)
        );
        assert_eq!(
            leading_monomial(&y_product(2, 0, 0, 0)).unwrap(),
            RankedMonomial::new(4, 2, 0, 0)
        );
        assert_eq!(leading_monomial(&QuadPoly::zero()), Err(Error::ZeroPolynomial));
        let tie = &x(1) + &poly(&[(1, [0, 2, 1, 0])]);
        assert!(matches!(leading_monomial(&tie), Err(Error::RankTie(_, _))));
    }

    #[test]
    fn law_for_small_exponents() {
        let rep = verify_leading_monomial_law(1);
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.checks.len(), 16 * 3);
    }

    #[test]
    fn independence_degree_one() {
        let rep = verify_theta_independence(1);
        assert!(rep.passed(), "{rep}");
        assert!(rep.notes.iter().any(|n| n.contains("6 monomials, rank 6")));
        let rep0 = verify_theta_independence(0);
        assert!(rep0.notes.iter().any(|n| n.contains("1 monomials, rank 1")));
    }

    #[test]
    fn small_certificates() {
        let c = injectivity_certificate([0; 7], DEFAULT_TUPLE_LIMIT).unwrap();
        assert_eq!((c.dimension, c.rank), (1, 1));
        let c = injectivity_certificate([1, 1, 1, 0, 0, 0, 0], DEFAULT_TUPLE_LIMIT).unwrap();
        assert_eq!((c.dimension, c.rank), (8, 8));
        assert!(c.passed());
        assert!(c.triplets().starts_with("% 8 "));
        assert!(matches!(
            injectivity_certificate([9; 7], 100),
            Err(Error::CapLimitExceeded { .. })
        ));
    }
}
