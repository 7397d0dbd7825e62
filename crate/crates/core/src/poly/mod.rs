//! Dense univariate polynomials over an arbitrary [`Ring`].
//!
//! A [`Poly`] is just a normalized coefficient vector; all arithmetic goes
//! through a [`PolyRing`], which knows the coefficient ring and the name of
//! the variable. `PolyRing` is itself a [`Ring`], so `PolyRing<PolyRing<Integers>>`
//! models `(Z[x])[y]`.

mod division;
mod quadratic;

pub use division::PseudoDivResult;
pub use quadratic::{conj_poly, lift_integer_poly, norm_poly};
pub use division::pseudo_divide;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::ring::{Ring, RingSpec};

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`,
/// which compares below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients in ascending order of exponent, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    /// Applies `f` to every coefficient. The caller guarantees that nonzero
    /// coefficients map to nonzero values, or passes the result through
    /// [`PolyRing::poly`].
    pub fn map<F, T>(&self, f: F) -> Vec<T>
    where
        F: FnMut(&E) -> T,
    {
        self.coeffs.iter().map(f).collect()
    }
}

/// The ring `R[var]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
    var: String,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        PolyRing {
            base,
            var: var.into(),
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing
    /// zeros.
    pub fn poly(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints<I>(&self, coeffs: I) -> Poly<R::Elem>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let coeffs = coeffs
            .into_iter()
            .map(|c| self.base.from_int(&c.into()))
            .collect();
        self.poly(coeffs)
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.poly(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        if self.base.is_zero(&c) {
            return Poly::zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.push(c);
        Poly { coeffs }
    }

    /// The variable itself.
    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn scale(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.poly(f.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// `f · x^k`.
    pub fn shift(&self, f: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if f.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(f.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation at `k`.
    pub fn eval(&self, f: &Poly<R::Elem>, k: &R::Elem) -> R::Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, k), c))
    }

    /// Composition `f(h)`.
    pub fn compose(&self, f: &Poly<R::Elem>, h: &Poly<R::Elem>) -> Poly<R::Elem> {
        f.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            self.add(&self.mul(&acc, h), &self.constant(c.clone()))
        })
    }

    /// Applies a ring homomorphism coefficient-wise into another polynomial ring.
    pub fn map_into<S: Ring, F>(&self, target: &PolyRing<S>, f: &Poly<R::Elem>, mut hom: F) -> Poly<S::Elem>
    where
        F: FnMut(&R::Elem) -> S::Elem,
    {
        target.poly(f.coeffs.iter().map(&mut hom).collect())
    }

    fn add_coeffs(&self, a: &[R::Elem], b: &[R::Elem], negate_b: bool) -> Poly<R::Elem> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (a.get(i), b.get(i)) {
                (Some(x), Some(y)) if negate_b => self.base.sub(x, y),
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) if negate_b => self.base.neg(y),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        self.poly(out)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;
    const GCD_DOMAIN: bool = R::GCD_DOMAIN;

    fn spec(&self) -> RingSpec {
        RingSpec::PolyTower {
            base: Box::new(self.base.spec()),
            var: self.var.clone(),
        }
    }
    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add_coeffs(&a.coeffs, &b.coeffs, false)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add_coeffs(&a.coeffs, &b.coeffs, true)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.poly(out)
    }
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Option<Self::Elem>> {
        self.divides_exact(b, a)
    }
    fn is_unit(&self, a: &Self::Elem) -> Result<bool> {
        match a.degree() {
            Degree::Finite(0) => self.base.is_unit(&a.coeffs[0]),
            _ => Ok(false),
        }
    }
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.poly_gcd(a, b)
    }
    fn is_negative(&self, a: &Self::Elem) -> bool {
        a.lc().is_some_and(|c| self.base.is_negative(c))
    }
}

pub fn poly_eval<R: Ring>(ring: &PolyRing<R>, f: &Poly<R::Elem>, k: &R::Elem) -> R::Elem {
    ring.eval(f, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;

    fn zx() -> PolyRing<Integers> {
        PolyRing::new(Integers, "x")
    }

    #[test]
    fn degree_ordering() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert!(Degree::Finite(2) > Degree::Finite(1));
        assert_eq!(Poly::<BigInt>::zero().degree(), Degree::NegInfinity);
    }

    #[test]
    fn normalization_drops_trailing_zeros() {
        let r = zx();
        let f = r.from_ints([1, 2, 0, 0]);
        assert_eq!(f.degree(), Degree::Finite(1));
        assert!(r.from_ints([0, 0]).is_zero());
        let g = r.from_ints([1, 2, 3]);
        assert!(r.sub(&g, &g).is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let r = zx();
        assert_eq!(r.eval(&r.from_ints([1, 0, 1]), &BigInt::from(4)), BigInt::from(17));
        assert_eq!(r.eval(&Poly::zero(), &BigInt::from(99)), BigInt::from(0));
        let fermat = r.from_ints([0, -1, 0, 0, 0, 1]);
        assert_eq!(r.eval(&fermat, &BigInt::from(2)), BigInt::from(30));
    }

    #[test]
    fn multiplication_and_composition() {
        let r = zx();
        let a = r.from_ints([1, 1]);
        let b = r.from_ints([-1, 1]);
        assert_eq!(r.mul(&a, &b), r.from_ints([-1, 0, 1]));
        // (x+1)∘(x-1) = x
        assert_eq!(r.compose(&a, &b), r.x());
        assert_eq!(r.pow(&a, 3), r.from_ints([1, 3, 3, 1]));
    }

    #[test]
    fn tower_arithmetic() {
        let zx = zx();
        let zxy = PolyRing::new(zx.clone(), "y");
        // (x + y)² = x² + 2xy + y²
        let s = zxy.poly(vec![zx.x(), zx.one()]);
        let sq = zxy.mul(&s, &s);
        assert_eq!(sq.coeffs()[0], zx.from_ints([0, 0, 1]));
        assert_eq!(sq.coeffs()[1], zx.from_ints([0, 2]));
        assert_eq!(sq.coeffs()[2], zx.one());
        // evaluate at y = x - 1
        let at = zxy.eval(&sq, &zx.from_ints([-1, 1]));
        assert_eq!(at, zx.from_ints([1, -4, 4]));
    }

    #[test]
    fn units_of_polynomial_rings() {
        let r = zx();
        assert!(r.is_unit(&r.from_ints([-1])).unwrap());
        assert!(!r.is_unit(&r.from_ints([2])).unwrap());
        assert!(!r.is_unit(&r.x()).unwrap());
    }
}
