//! Sparse commutative polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// A monomial in finitely many commuting indeterminates.
pub trait Monomial: Copy + Ord + Default + Hash + Debug {
    /// Product of two monomials (exponent addition).
    fn mul(&self, other: &Self) -> Self;
}

/// A finite map from monomials to nonzero scalars.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<M: Monomial> {
    terms: BTreeMap<M, Scalar>,
}

impl<M: Monomial> Default for Poly<M> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial> Poly<M> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(M::default(), c)
    }

    pub fn term(m: M, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: M) -> Self {
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

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<M, Scalar> {
        self.terms
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c·m`, pruning the entry if it cancels.
    pub fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
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
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
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

    /// Substitutes a value for every monomial and sums in the target ring.
    pub fn eval_with<T, F>(&self, zero: T, mut value: F) -> T
    where
        T: std::ops::Add<T, Output = T>,
        F: FnMut(&M, &Scalar) -> T,
    {
        self.terms
            .iter()
            .fold(zero, |acc, (m, c)| acc + value(m, c))
    }
}

impl<M: Monomial> FromIterator<(M, Scalar)> for Poly<M> {
    fn from_iter<I: IntoIterator<Item = (M, Scalar)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl<M: Monomial> std::ops::Add<&Poly<M>> for &Poly<M> {
    type Output = Poly<M>;
    fn add(self, rhs: &Poly<M>) -> Poly<M> {
        self.add_ref(rhs)
    }
}

impl<M: Monomial> std::ops::Sub<&Poly<M>> for &Poly<M> {
    type Output = Poly<M>;
    fn sub(self, rhs: &Poly<M>) -> Poly<M> {
        self.sub_ref(rhs)
    }
}

impl<M: Monomial> std::ops::Mul<&Poly<M>> for &Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: &Poly<M>) -> Poly<M> {
        self.mul_ref(rhs)
    }
}

impl<M: Monomial> std::ops::Add for Poly<M> {
    type Output = Poly<M>;
    fn add(self, rhs: Poly<M>) -> Poly<M> {
        self.add_ref(&rhs)
    }
}

impl<M: Monomial> std::ops::Sub for Poly<M> {
    type Output = Poly<M>;
    fn sub(self, rhs: Poly<M>) -> Poly<M> {
        self.sub_ref(&rhs)
    }
}

impl<M: Monomial> std::ops::Mul for Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: Poly<M>) -> Poly<M> {
        self.mul_ref(&rhs)
    }
}

impl<M: Monomial> std::ops::Neg for Poly<M> {
    type Output = Poly<M>;
    fn neg(self) -> Poly<M> {
        self.neg_ref()
    }
}
