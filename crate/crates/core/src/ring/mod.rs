//! Coefficient rings.
//!
//! A [`Ring`] value carries the parameters of the ring (the `d` of `Z[√d]`,
//! the denominator set of a localization) and performs arithmetic on plain
//! element values. Elements never carry a back-pointer to their ring.

mod factor;
mod integers;
mod localized;
mod quadratic;
mod spec;

pub use factor::{factorize, is_probable_prime, is_probable_prime_with_rounds, FactorBudget, FactorReport};
pub use integers::{Integers, Rationals};
pub use localized::Localized;
pub use quadratic::{quad_conj, quad_norm, QuadInt, QuadRat, Quadratic, QuadraticField};
pub use spec::{DenominatorSet, RingSpec};

use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;

/// An integral domain with exact arithmetic.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    /// Whether [`Ring::gcd`] returns a true greatest common divisor. Rings
    /// that are not known to be GCD domains return only a common divisor.
    const GCD_DOMAIN: bool;

    fn spec(&self) -> RingSpec;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Returns `Some(c)` with `a = b·c` when `b` divides `a`.
    ///
    /// `b` must be nonzero.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Option<Self::Elem>>;

    fn is_unit(&self, a: &Self::Elem) -> Result<bool>;

    /// Unit-normalized greatest common divisor (or common divisor, see
    /// [`Ring::GCD_DOMAIN`]). `gcd(0, 0) = 0`.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// True when the canonical associate of `a` is `-a`, e.g. for negative
    /// integers.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut exp: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `b | a`, with `b ≠ 0`.
    fn divides(&self, b: &Self::Elem, a: &Self::Elem) -> Result<bool> {
        Ok(self.div_exact(a, b)?.is_some())
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// A ring embedded in a field of fractions that we can compute in.
pub trait HasFractionField: Ring {
    type Frac: Field;

    fn fraction_field(&self) -> Self::Frac;
    fn embed(&self, a: &Self::Elem) -> <Self::Frac as Ring>::Elem;
    /// The preimage of a field element, when it lies in the ring.
    fn restrict(&self, a: &<Self::Frac as Ring>::Elem) -> Result<Option<Self::Elem>>;
}

/// Subrings of `Q` containing `Z`: elements have an integer numerator up to
/// units, and a rational prime is either inverted or stays prime.
pub trait IntegerLike: Ring {
    /// Integer numerator of the reduced form.
    fn numerator(&self, a: &Self::Elem) -> BigInt;
    /// Whether the rational prime `p` is invertible in the ring.
    fn inverts_prime(&self, p: &BigInt) -> bool;
    fn budget(&self) -> FactorBudget;
}

/// Checked `b | a` on ring elements.
pub fn ring_divides<R: Ring>(ring: &R, b: &R::Elem, a: &R::Elem) -> Result<bool> {
    if ring.is_zero(b) {
        return Err(crate::Error::Precondition("divisor must be nonzero".into()));
    }
    ring.divides(b, a)
}

pub fn ring_is_unit<R: Ring>(ring: &R, a: &R::Elem) -> Result<bool> {
    ring.is_unit(a)
}
