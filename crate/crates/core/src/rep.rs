//! Evaluation in finite-dimensional irreducible representations of `sl2`,
//! with rational values substituted for `a, b, c`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::Error;
use crate::expr::Semantics;
use crate::natural::{casimir_image_closed_form, GeneratorImageTable};
use crate::racah::{casimir_element, CasimirKind, RacahGen};
use crate::report::{VerificationReport, Witness};
use crate::scalar::{self, frac, int, Scalar};
use crate::tensor::TensorElement;
use crate::usl2::{PbwMonomial, USl2Element};

/// A dense square matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        self.entries[i * self.n + j] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `Some(c)` when the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        let c = if self.n == 0 { Scalar::zero() } else { self.get(0, 0).clone() };
        (*self == Self::scalar(self.n, c.clone())).then_some(c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| &acc * self)
    }

    pub fn to_text(&self) -> String {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| scalar::render(self.get(i, j)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = o.get(k, j);
                    if !y.is_zero() {
                        out.entries[i * n + j] += x * y;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}]", self.to_text().replace('\n', "; "))
    }
}

impl Witness for Matrix {
    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }

    fn witness_text(&self) -> String {
        self.to_text()
    }
}

/// The `d`-dimensional irreducible representation: `H v_k = (d-1-2k) v_k`,
/// `F v_k = v_{k+1}`, `E v_k = k(d-k) v_{k-1}`.
#[derive(Clone, Debug)]
pub struct IrrepMatrices {
    pub d: usize,
    pub e: Matrix,
    pub f: Matrix,
    pub h: Matrix,
}

pub fn build_irrep(d: usize) -> Result<IrrepMatrices, Error> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut e = Matrix::zero(d);
    let mut f = Matrix::zero(d);
    let mut h = Matrix::zero(d);
    let di = d as i64;
    for k in 0..d {
        let ki = k as i64;
        h.set(k, k, int(di - 1 - 2 * ki));
        if k + 1 < d {
            f.set(k + 1, k, Scalar::one());
        }
        if k > 0 {
            e.set(k - 1, k, int(ki * (di - ki)));
        }
    }
    Ok(IrrepMatrices { d, e, f, h })
}

impl IrrepMatrices {
    /// `[H,E] - 2E`, `[H,F] + 2F`, `[E,F] - H`.
    pub fn relation_defects(&self) -> [Matrix; 3] {
        let br = |x: &Matrix, y: &Matrix| &(x * y) - &(y * x);
        [
            &br(&self.h, &self.e) - &self.e.scale(&int(2)),
            &br(&self.h, &self.f) + &self.f.scale(&int(2)),
            &br(&self.e, &self.f) - &self.h,
        ]
    }
}

/// Rational values for `a, b, c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPoint {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl EvaluationPoint {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Self {
        EvaluationPoint { a, b, c }
    }
}

impl fmt::Display for EvaluationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            scalar::render(&self.a),
            scalar::render(&self.b),
            scalar::render(&self.c)
        )
    }
}

/// `n` points with numerators and denominators bounded by 10.
pub fn random_points(seed: u64, n: usize) -> Vec<EvaluationPoint> {
    let mut rng = crate::random::rng(seed);
    (0..n)
        .map(|_| {
            EvaluationPoint::new(
                crate::random::small_rational(&mut rng, 10),
                crate::random::small_rational(&mut rng, 10),
                crate::random::small_rational(&mut rng, 10),
            )
        })
        .collect()
}

/// Evaluates tensor elements in one representation at one point, caching
/// the matrices of PBW monomials.
pub struct Evaluator<'a> {
    rep: &'a IrrepMatrices,
    point: &'a EvaluationPoint,
    pbw: HashMap<PbwMonomial, Matrix>,
}

impl<'a> Evaluator<'a> {
    pub fn new(rep: &'a IrrepMatrices, point: &'a EvaluationPoint) -> Self {
        Evaluator {
            rep,
            point,
            pbw: HashMap::new(),
        }
    }

    fn monomial(&mut self, m: &PbwMonomial) -> Matrix {
        if let Some(x) = self.pbw.get(m) {
            return x.clone();
        }
        let v = &(&self.rep.e.pow(m.e) * &self.rep.h.pow(m.h)) * &self.rep.f.pow(m.f);
        self.pbw.insert(*m, v.clone());
        v
    }

    pub fn eval(&mut self, u: &TensorElement) -> Matrix {
        let mut out = Matrix::zero(self.rep.d);
        for (pbw, poly) in u.by_pbw() {
            let coeff = poly.eval_with(Scalar::zero(), |m, c| {
                c * scalar::pow(&self.point.a, m.a)
                    * scalar::pow(&self.point.b, m.b)
                    * scalar::pow(&self.point.c, m.c)
            });
            if !coeff.is_zero() {
                out = &out + &self.monomial(pbw).scale(&coeff);
            }
        }
        out
    }
}

/// `u` acting in the `d`-dimensional irreducible representation at `p`.
pub fn evaluate(u: &TensorElement, rep: &IrrepMatrices, p: &EvaluationPoint) -> Matrix {
    Evaluator::new(rep, p).eval(u)
}

/// Evaluates a Racah-algebra expression tree directly over matrices, from
/// the evaluated images of `A, B, C, D, α, β, γ, δ`.
struct MatrixSemantics {
    n: usize,
    leaves: HashMap<RacahGen, Matrix>,
}

impl Semantics<RacahGen> for MatrixSemantics {
    type Value = Matrix;

    fn symbol(&self, s: &RacahGen) -> Matrix {
        self.leaves[s].clone()
    }

    fn constant(&self, c: &Scalar) -> Matrix {
        Matrix::scalar(self.n, c.clone())
    }

    fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a + b
    }

    fn sub(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a - b
    }

    fn neg(&self, a: &Matrix) -> Matrix {
        -a
    }

    fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a * b
    }

    fn scale(&self, c: &Scalar, a: &Matrix) -> Matrix {
        a.scale(c)
    }
}

fn check_one(d: usize, p: &EvaluationPoint) -> VerificationReport {
    use RacahGen::*;
    let tag = format!("d{d}.{p}");
    let mut rep = VerificationReport::new(tag.clone());
    let irrep = build_irrep(d).expect("positive dimension");
    let [de, df, dh] = irrep.relation_defects();
    rep.check_zero("sl2.HE", "[H,E] = 2E", &de);
    rep.check_zero("sl2.HF", "[H,F] = -2F", &df);
    rep.check_zero("sl2.EF", "[E,F] = H", &dh);

    let mut ev = Evaluator::new(&irrep, p);
    let lam = ev.eval(&TensorElement::usl2(&USl2Element::casimir()));
    let expected = frac((d * d) as i64 - 1, 4);
    rep.record(
        "Lambda",
        "1⊗Λ acts as (d²-1)/4 times the identity",
        lam.as_scalar() == Some(expected.clone()),
        || lam.to_text(),
    );

    let table = GeneratorImageTable::shared();
    let m: HashMap<RacahGen, Matrix> = RacahGen::ALL
        .into_iter()
        .map(|gen| (gen, ev.eval(table.get(gen))))
        .collect();
    let br = |x: &Matrix, y: &Matrix| &(x * y) - &(y * x);
    let two_d = m[&D].scale(&int(2));
    rep.check_eq("bracket.AB", "[A♮,B♮] = 2D♮", &br(&m[&A], &m[&B]), &two_d);
    rep.check_eq("bracket.BC", "[B♮,C♮] = 2D♮", &br(&m[&B], &m[&C]), &two_d);
    rep.check_eq("bracket.CA", "[C♮,A♮] = 2D♮", &br(&m[&C], &m[&A]), &two_d);
    let alpha = &(&br(&m[&A], &m[&D]) + &(&m[&A] * &m[&C])) - &(&m[&B] * &m[&A]);
    let beta = &(&br(&m[&B], &m[&D]) + &(&m[&B] * &m[&A])) - &(&m[&C] * &m[&B]);
    let gamma = &(&br(&m[&C], &m[&D]) + &(&m[&C] * &m[&B])) - &(&m[&A] * &m[&C]);
    let delta = &(&m[&A] + &m[&B]) + &m[&C];
    rep.check_eq("alpha", "[A♮,D♮] + A♮C♮ - B♮A♮ = α♮", &alpha, &m[&Alpha]);
    rep.check_eq("beta", "[B♮,D♮] + B♮A♮ - C♮B♮ = β♮", &beta, &m[&Beta]);
    rep.check_eq("gamma", "[C♮,D♮] + C♮B♮ - A♮C♮ = γ♮", &gamma, &m[&Gamma]);
    rep.check_eq("delta", "A♮ + B♮ + C♮ = δ♮", &delta, &m[&Delta]);

    let sem = MatrixSemantics {
        n: d,
        leaves: m.clone(),
    };
    for which in CasimirKind::ALL {
        let tree = casimir_element(which).eval(&sem);
        let closed = ev.eval(&casimir_image_closed_form(which));
        rep.check_eq(
            format!("casimir.{which:?}"),
            format!("Ω_{which:?} evaluated from its definition equals the closed form"),
            &tree,
            &closed,
        );
    }
    for gen in [Alpha, Beta, Gamma, Delta, OmegaA, OmegaB, OmegaC] {
        for other in RacahGen::GENERATORS {
            rep.check_zero(
                format!("central.{gen}.{other}"),
                format!("[{gen}♮,{other}♮] = 0"),
                &br(&m[&gen], &m[&other]),
            );
        }
    }
    rep
}

/// Checks the Racah relations, the central identities, centrality and the
/// Casimir images as exact matrix identities for every dimension and point.
pub fn oracle_check_relations(dims: &[usize], points: &[EvaluationPoint]) -> Result<VerificationReport, Error> {
    if dims.contains(&0) {
        return Err(Error::ZeroDimension);
    }
    let jobs: Vec<(usize, &EvaluationPoint)> = dims
        .iter()
        .flat_map(|d| points.iter().map(move |p| (*d, p)))
        .collect();
    let parts: Vec<VerificationReport> = jobs.par_iter().map(|(d, p)| check_one(*d, p)).collect();
    let mut rep = VerificationReport::new("representations");
    for part in parts {
        rep.extend(part);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;

    #[test]
    fn small_irreps() {
        assert!(matches!(build_irrep(0), Err(Error::ZeroDimension)));
        let one = build_irrep(1).unwrap();
        assert!(one.e.is_zero() && one.f.is_zero() && one.h.is_zero());
        let two = build_irrep(2).unwrap();
        assert_eq!(*two.e.get(0, 1), int(1));
        assert_eq!(*two.f.get(1, 0), int(1));
        assert_eq!(two.h.as_scalar(), None);
        for d in 1..=6 {
            let r = build_irrep(d).unwrap();
            assert!(r.relation_defects().iter().all(Matrix::is_zero));
            let lam = evaluate(&TensorElement::usl2(&USl2Element::casimir()), &r, &random_points(1, 1)[0]);
            assert_eq!(lam.as_scalar(), Some(frac((d * d) as i64 - 1, 4)));
        }
    }

    #[test]
    fn substitution() {
        let r = build_irrep(3).unwrap();
        let p = EvaluationPoint::new(int(2), int(0), int(0));
        assert_eq!(evaluate(&TensorElement::a(), &r, &p), Matrix::scalar(3, int(2)));
        let (e, f, h) = (USl2Element::e(), USl2Element::f(), USl2Element::h());
        let rel = &(&(&e * &f) - &(&f * &e)) - &h;
        assert!(evaluate(&TensorElement::usl2(&rel), &r, &p).is_zero());
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let mut rng = random::rng(11);
        let r = build_irrep(4).unwrap();
        let p = random_points(5, 1).remove(0);
        for _ in 0..20 {
            let u = random::tensor_element(&mut rng, 4, 2);
            let v = random::tensor_element(&mut rng, 4, 2);
            assert_eq!(evaluate(&(&u * &v), &r, &p), &evaluate(&u, &r, &p) * &evaluate(&v, &r, &p));
        }
    }

    #[test]
    fn relations_in_small_dimensions() {
        let p = EvaluationPoint::new(int(1), frac(1, 2), int(-3));
        let rep = oracle_check_relations(&[1, 2], &[p]).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
