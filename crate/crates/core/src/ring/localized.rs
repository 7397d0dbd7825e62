use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{DenominatorSet, FactorBudget, HasFractionField, IntegerLike, Rationals, Ring, RingSpec};
use crate::error::{Error, Result};

/// `Z[S⁻¹]`: rationals whose reduced denominator has all its prime factors in
/// the denominator set. Elements are reduced fractions with positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localized {
    set: DenominatorSet,
    budget: FactorBudget,
}

impl Localized {
    pub fn new(set: DenominatorSet) -> Result<Self> {
        Self::with_budget(set, FactorBudget::default())
    }

    pub fn with_budget(set: DenominatorSet, budget: FactorBudget) -> Result<Self> {
        set.validate()?;
        Ok(Localized { set, budget })
    }

    pub fn set(&self) -> &DenominatorSet {
        &self.set
    }

    /// Builds `num/den`, rejecting denominators outside the set.
    pub fn element(&self, num: BigInt, den: BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        let value = BigRational::new(num, den);
        self.check(&value)?;
        Ok(value)
    }

    /// Ensures a rational lies in the ring.
    pub fn check(&self, value: &BigRational) -> Result<()> {
        if self.contains(value)? {
            Ok(())
        } else {
            Err(Error::NotInRing(value.to_string()))
        }
    }

    pub fn contains(&self, value: &BigRational) -> Result<bool> {
        if value.denom().is_one() {
            return Ok(true);
        }
        self.set.is_s_number(value.denom(), &self.budget)
    }
}

impl Ring for Localized {
    type Elem = BigRational;
    const GCD_DOMAIN: bool = true;

    fn spec(&self) -> RingSpec {
        RingSpec::Localized(self.set.clone())
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
        let c = a / b;
        Ok(self.contains(&c)?.then_some(c))
    }
    fn is_unit(&self, a: &BigRational) -> Result<bool> {
        if a.is_zero() {
            return Ok(false);
        }
        self.set.is_s_number(a.numer(), &self.budget)
    }
    fn gcd(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        let g = a.numer().gcd(b.numer());
        if g.is_zero() {
            return Ok(BigRational::zero());
        }
        let (_, outside) = self.set.split(&g, &self.budget)?;
        Ok(BigRational::from_integer(outside))
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

impl IntegerLike for Localized {
    fn numerator(&self, a: &BigRational) -> BigInt {
        a.numer().clone()
    }
    fn inverts_prime(&self, p: &BigInt) -> bool {
        self.set.contains_prime(p)
    }
    fn budget(&self) -> FactorBudget {
        self.budget
    }
}

impl HasFractionField for Localized {
    type Frac = Rationals;

    fn fraction_field(&self) -> Rationals {
        Rationals
    }
    fn embed(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn restrict(&self, a: &BigRational) -> Result<Option<BigRational>> {
        Ok(self.contains(a)?.then(|| a.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(big(n), big(d))
    }

    fn zw() -> Localized {
        Localized::new("mod:1,4,+2".parse().unwrap()).unwrap()
    }

    #[test]
    fn construction_checks_denominators() {
        let r = zw();
        assert!(r.element(big(3), big(10)).is_ok());
        assert!(matches!(r.element(big(1), big(3)), Err(Error::NotInRing(_))));
        // 6/9 reduces to 2/3, still rejected
        assert!(r.element(big(6), big(9)).is_err());
        // 9/3 reduces to 3
        assert!(r.element(big(9), big(3)).is_ok());
    }

    #[test]
    fn units_of_zw() {
        let r = zw();
        assert!(r.is_unit(&frac(10, 1)).unwrap());
        assert!(!r.is_unit(&frac(3, 1)).unwrap());
        assert!(r.is_unit(&frac(-13, 5)).unwrap());
        assert!(!r.is_unit(&frac(0, 1)).unwrap());
    }

    #[test]
    fn divisibility() {
        let r = Localized::new(DenominatorSet::DividesN(big(6))).unwrap();
        // 5 | 1 fails, 2 | 1 holds
        assert!(!r.divides(&frac(5, 1), &frac(1, 1)).unwrap());
        assert!(r.divides(&frac(2, 1), &frac(1, 1)).unwrap());
        assert_eq!(r.div_exact(&frac(10, 1), &frac(4, 1)).unwrap(), Some(frac(5, 2)));
    }

    #[test]
    fn gcd_strips_units() {
        let r = Localized::new(DenominatorSet::DividesN(big(6))).unwrap();
        assert_eq!(r.gcd(&frac(12, 1), &frac(30, 1)).unwrap(), frac(1, 1));
        assert_eq!(r.gcd(&frac(20, 1), &frac(-50, 3)).unwrap(), frac(5, 1));
    }

    #[test]
    fn incomplete_factorization_surfaces() {
        let r = Localized::with_budget(
            "mod:1,4,+2".parse().unwrap(),
            FactorBudget {
                trial_bound: 10,
                mr_rounds: 4,
            },
        )
        .unwrap();
        // 1009·1013: both ≡ 1 mod 4 and invisible to trial division ≤ 10
        let n = frac(1009 * 1013, 1);
        assert!(matches!(r.is_unit(&n), Err(Error::FactorizationIncomplete { .. })));
        // a visible prime outside the set settles it anyway
        let n = frac(3 * 1009 * 1013, 1);
        assert!(!r.is_unit(&n).unwrap());
    }
}
