use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{FactorBudget, Field, HasFractionField, IntegerLike, Ring, RingSpec};
use crate::error::{Error, Result};

/// The ring `Z`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;
    const GCD_DOMAIN: bool = true;

    fn spec(&self) -> RingSpec {
        RingSpec::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Result<Option<BigInt>> {
        if b.is_zero() {
            return Err(Error::Precondition("division by zero".into()));
        }
        let (q, r) = a.div_rem(b);
        Ok(r.is_zero().then_some(q))
    }
    fn is_unit(&self, a: &BigInt) -> Result<bool> {
        Ok(a.abs().is_one())
    }
    fn gcd(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        Ok(a.gcd(b))
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.sign() == Sign::Minus
    }
}

impl IntegerLike for Integers {
    fn numerator(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn inverts_prime(&self, _p: &BigInt) -> bool {
        false
    }
    fn budget(&self) -> FactorBudget {
        FactorBudget::default()
    }
}

impl HasFractionField for Integers {
    type Frac = Rationals;

    fn fraction_field(&self) -> Rationals {
        Rationals
    }
    fn embed(&self, a: &BigInt) -> BigRational {
        BigRational::from_integer(a.clone())
    }
    fn restrict(&self, a: &BigRational) -> Result<Option<BigInt>> {
        Ok(a.is_integer().then(|| a.to_integer()))
    }
}

/// The field `Q`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;
    const GCD_DOMAIN: bool = true;

    fn spec(&self) -> RingSpec {
        RingSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn div_exact(&self, a: &BigRational, b: &BigRational) -> Result<Option<BigRational>> {
        if b.is_zero() {
            return Err(Error::Precondition("division by zero".into()));
        }
        Ok(Some(a / b))
    }
    fn is_unit(&self, a: &BigRational) -> Result<bool> {
        Ok(!a.is_zero())
    }
    fn gcd(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        Ok(if a.is_zero() && b.is_zero() {
            BigRational::zero()
        } else {
            BigRational::one()
        })
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

impl HasFractionField for Rationals {
    type Frac = Rationals;

    fn fraction_field(&self) -> Rationals {
        Rationals
    }
    fn embed(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn restrict(&self, a: &BigRational) -> Result<Option<BigRational>> {
        Ok(Some(a.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn integer_divisibility() {
        let z = Integers;
        assert!(z.divides(&big(5), &big(120)).unwrap());
        assert!(z.divides(&big(5), &big(3120)).unwrap());
        assert!(!z.divides(&big(5), &big(3121)).unwrap());
        assert_eq!(z.div_exact(&big(-12), &big(4)).unwrap(), Some(big(-3)));
        assert!(z.div_exact(&big(1), &big(0)).is_err());
    }

    #[test]
    fn integer_units() {
        let z = Integers;
        assert!(z.is_unit(&big(1)).unwrap());
        assert!(z.is_unit(&big(-1)).unwrap());
        assert!(!z.is_unit(&big(0)).unwrap());
        assert!(!z.is_unit(&big(2)).unwrap());
    }

    #[test]
    fn gcd_is_positive() {
        assert_eq!(Integers.gcd(&big(-6), &big(9)).unwrap(), big(3));
        assert_eq!(Integers.gcd(&big(0), &big(-4)).unwrap(), big(4));
        assert_eq!(Integers.gcd(&big(0), &big(0)).unwrap(), big(0));
    }

    #[test]
    fn rationals_are_a_field() {
        let q = Rationals;
        let half = BigRational::new(big(1), big(2));
        assert!(q.is_unit(&half).unwrap());
        assert!(!q.is_unit(&q.zero()).unwrap());
        assert_eq!(q.inv(&half), Some(q.from_int(&big(2))));
        assert!(q.divides(&half, &q.from_int(&big(7))).unwrap());
    }
}
