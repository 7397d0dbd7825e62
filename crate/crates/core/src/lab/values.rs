//! Checks driven by polynomial values: integer-valuedness, unit-valuedness,
//! and two-square decompositions of primes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::sample::{sample_elements, SamplePlan, Sampler};
use super::scan::{par_map, ScanOptions};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::{is_probable_prime, Rationals};

/// Whether `h ∈ Q[x]` maps every integer to an integer. A polynomial of
/// degree `n` does so iff `h(0), …, h(n)` are integers.
pub fn int_membership(ring: &PolyRing<Rationals>, h: &Poly<BigRational>) -> bool {
    let n = h.degree().finite().unwrap_or(0);
    (0..=n).all(|k| {
        ring.eval(h, &BigRational::from_integer(BigInt::from(k)))
            .is_integer()
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitExample<E> {
    pub index: usize,
    pub k: E,
    pub value: E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitScanReport<E> {
    pub samples: usize,
    /// Every decided value was a unit. Inconclusive samples do not count
    /// against it.
    pub all_units: bool,
    /// First non-unit value in sample order.
    pub non_unit_example: Option<UnitExample<E>>,
    pub non_units: usize,
    pub inconclusive: usize,
}

/// Evaluates `f` on the plan's samples and reports whether every value is a
/// unit of the coefficient ring.
pub fn unit_valued_scan<R: Sampler>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    plan: &SamplePlan,
    opts: &ScanOptions,
) -> Result<UnitScanReport<R::Elem>> {
    let base = ring.base();
    let samples = sample_elements(base, plan, opts.quad_box);
    let outcomes = par_map(&samples, opts.parallel, |k| {
        let value = ring.eval(f, k);
        (base.is_unit(&value), value)
    });
    let mut report = UnitScanReport {
        samples: samples.len(),
        all_units: true,
        non_unit_example: None,
        non_units: 0,
        inconclusive: 0,
    };
    for (index, (k, (unit, value))) in samples.into_iter().zip(outcomes).enumerate() {
        match unit {
            Ok(true) => {}
            Ok(false) => {
                report.all_units = false;
                report.non_units += 1;
                if report.non_unit_example.is_none() {
                    report.non_unit_example = Some(UnitExample { index, k, value });
                }
            }
            Err(Error::FactorizationIncomplete { .. }) => report.inconclusive += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// `p = a² + b²` with `0 < a ≤ b`, found by direct search.
pub fn sum_two_squares(p: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    if !is_probable_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let mut a = BigInt::one();
    while &a * &a * 2u32 <= *p {
        let rest: BigInt = p - &a * &a;
        let b = rest.sqrt();
        if &b * &b == rest {
            return Ok(Some((a, b)));
        }
        a += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, Localized};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(big(n), big(d))
    }

    #[test]
    fn int_membership_examples() {
        let r = PolyRing::new(Rationals, "x");
        let z = q(0, 1);
        let fermat = r.poly(vec![z.clone(), q(-1, 5), z.clone(), z.clone(), z.clone(), q(1, 5)]);
        assert!(int_membership(&r, &fermat));
        let triangular = r.poly(vec![z.clone(), q(1, 2), q(1, 2)]);
        assert!(int_membership(&r, &triangular));
        for k in -100..=100 {
            assert!(r.eval(&triangular, &q(k, 1)).is_integer());
        }
        assert!(!int_membership(&r, &r.poly(vec![q(1, 2), z.clone(), q(1, 2)])));
        assert!(int_membership(&r, &Poly::zero()));
        assert!(!int_membership(&r, &r.poly(vec![q(1, 3)])));
    }

    #[test]
    fn unit_scans() {
        let w = PolyRing::new(Localized::new("mod:1,4,+2".parse().unwrap()).unwrap(), "x");
        let plan = SamplePlan::random(500, 1, -1000, 1000).unwrap();
        let rep = unit_valued_scan(&w, &w.from_ints([1, 0, 1]), &plan, &ScanOptions::default()).unwrap();
        assert!(rep.all_units, "{rep:?}");
        assert_eq!(rep.inconclusive, 0);

        let z5 = PolyRing::new(Localized::new("except:5".parse().unwrap()).unwrap(), "x");
        let rep = unit_valued_scan(&z5, &z5.from_ints([1, 5]), &plan, &ScanOptions::default()).unwrap();
        assert!(rep.all_units);

        let z = PolyRing::new(Integers, "x");
        let rep = unit_valued_scan(
            &z,
            &z.from_ints([1, 0, 1]),
            &SamplePlan::range(2, 10).unwrap(),
            &ScanOptions::default(),
        )
        .unwrap();
        let ex = rep.non_unit_example.unwrap();
        assert_eq!((ex.index, ex.k, ex.value), (0, big(2), big(5)));
    }

    #[test]
    fn two_squares() {
        assert_eq!(sum_two_squares(&big(13)).unwrap(), Some((big(2), big(3))));
        assert_eq!(sum_two_squares(&big(2)).unwrap(), Some((big(1), big(1))));
        assert_eq!(sum_two_squares(&big(7)).unwrap(), None);
        assert_eq!(sum_two_squares(&big(15)), Err(Error::NotPrime(big(15))));
    }
}
