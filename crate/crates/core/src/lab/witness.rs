//! Prime witnesses: primes `p` with `p | g(k)` and `g(k) ≠ 0` for some sample.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::sample::{sample_elements, SamplePlan, Sampler};
use super::scan::{par_map, ScanOptions};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::{factorize, FactorBudget, IntegerLike};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport<E> {
    pub poly: Poly<E>,
    pub samples: usize,
    /// Samples with `g(k) = 0`.
    pub zero_values: usize,
    /// Witness prime → smallest sample exhibiting it. Keys are ascending.
    pub witnesses: BTreeMap<BigInt, E>,
    /// Primes dividing the exclusion constant.
    pub excluded: Vec<BigInt>,
    /// Values whose factorization hit the budget. Their small prime factors
    /// are still recorded.
    pub incomplete_values: usize,
}

impl<E> WitnessReport<E> {
    pub fn primes(&self) -> Vec<BigInt> {
        self.witnesses.keys().cloned().collect()
    }
}

/// Enumerates the non-inverted primes dividing nonzero values `g(k)`, minus
/// the primes of `exclude_c`.
pub fn ipp_witnesses<R>(
    ring: &PolyRing<R>,
    g: &Poly<R::Elem>,
    plan: &SamplePlan,
    exclude_c: &BigInt,
    budget: &FactorBudget,
    opts: &ScanOptions,
) -> Result<WitnessReport<R::Elem>>
where
    R: IntegerLike + Sampler,
    R::Elem: Ord,
{
    if g.degree().finite().unwrap_or(0) < 1 {
        return Err(Error::Precondition("witness enumeration needs deg g ≥ 1".into()));
    }
    if exclude_c.is_zero() {
        return Err(Error::Precondition("exclusion constant must be nonzero".into()));
    }
    let base = ring.base();
    let c_report = factorize(&exclude_c.abs(), budget);
    if !c_report.complete {
        return Err(Error::FactorizationIncomplete {
            value: c_report.cofactor.clone(),
        });
    }
    let excluded: Vec<BigInt> = c_report.primes().cloned().collect();

    let samples = sample_elements(base, plan, opts.quad_box);
    let per_sample = par_map(&samples, opts.parallel, |k| {
        let value = ring.eval(g, k);
        if base.is_zero(&value) {
            return None;
        }
        let report = factorize(&base.numerator(&value).abs(), budget);
        let primes: Vec<BigInt> = report
            .primes()
            .filter(|p| !base.inverts_prime(p) && !excluded.contains(p))
            .cloned()
            .collect();
        Some((primes, report.complete))
    });

    let mut out = WitnessReport {
        poly: g.clone(),
        samples: samples.len(),
        zero_values: 0,
        witnesses: BTreeMap::new(),
        excluded,
        incomplete_values: 0,
    };
    for (k, found) in samples.into_iter().zip(per_sample) {
        let Some((primes, complete)) = found else {
            out.zero_values += 1;
            continue;
        };
        if !complete {
            out.incomplete_values += 1;
        }
        for p in primes {
            out.witnesses
                .entry(p)
                .and_modify(|best| {
                    if k < *best {
                        *best = k.clone();
                    }
                })
                .or_insert_with(|| k.clone());
        }
    }
    verify(ring, &out)?;
    Ok(out)
}

fn verify<R: IntegerLike>(ring: &PolyRing<R>, report: &WitnessReport<R::Elem>) -> Result<()> {
    for (p, k) in &report.witnesses {
        let value = ring.base().numerator(&ring.eval(&report.poly, k));
        if value.is_zero() || !value.is_multiple_of(p) || report.excluded.contains(p) {
            return Err(Error::InternalInvariantViolation(format!(
                "witness {p} at k = {k:?} does not check out"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, Localized};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn witnesses_of(r: &PolyRing<Integers>, g: &Poly<BigInt>, lo: i64, hi: i64, c: i64) -> WitnessReport<BigInt> {
        ipp_witnesses(
            r,
            g,
            &SamplePlan::range(lo, hi).unwrap(),
            &big(c),
            &FactorBudget::default(),
            &ScanOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn x2_plus_1_small_range() {
        let r = PolyRing::new(Integers, "x");
        let g = r.from_ints([1, 0, 1]);
        let rep = witnesses_of(&r, &g, 1, 6, 1);
        assert_eq!(rep.primes(), [2, 5, 13, 17, 37].map(big));
        assert_eq!(rep.witnesses[&big(5)], big(2));
        assert_eq!(rep.witnesses[&big(13)], big(5));
    }

    #[test]
    fn exclusion_drops_primes_of_c() {
        let r = PolyRing::new(Integers, "x");
        let g = r.from_ints([1, 0, 1]);
        let all = witnesses_of(&r, &g, 1, 200, 1);
        let cut = witnesses_of(&r, &g, 1, 200, 10);
        let mut expected = all.primes();
        expected.retain(|p| p != &big(2) && p != &big(5));
        assert_eq!(cut.primes(), expected);
        assert_eq!(cut.excluded, [2, 5].map(big));
    }

    #[test]
    fn shifted_primes_are_witnesses() {
        // (x − 3)(x + 2) at p + 3 equals p(p + 5)
        let r = PolyRing::new(Integers, "x");
        let g = r.from_ints([-6, -1, 1]);
        let rep = witnesses_of(&r, &g, 0, 120, 1);
        for p in [2, 3, 5, 7, 11, 13, 101, 113] {
            assert!(rep.witnesses.contains_key(&big(p)), "{p}");
        }
        assert_eq!(rep.zero_values, 1);
    }

    #[test]
    fn localization_removes_inverted_primes() {
        let zx = PolyRing::new(Integers, "x");
        let loc = PolyRing::new(Localized::new("1/n:6".parse().unwrap()).unwrap(), "x");
        let plan = SamplePlan::range(-60, 60).unwrap();
        let budget = FactorBudget::default();
        let opts = ScanOptions::default();
        let over_z = ipp_witnesses(&zx, &zx.from_ints([5, 3, 1]), &plan, &big(1), &budget, &opts).unwrap();
        let over_loc = ipp_witnesses(&loc, &loc.from_ints([5, 3, 1]), &plan, &big(1), &budget, &opts).unwrap();
        let mut expected = over_z.primes();
        expected.retain(|p| p != &big(2) && p != &big(3));
        assert_eq!(over_loc.primes(), expected);
    }

    #[test]
    fn small_budget_counts_incomplete_values() {
        let r = PolyRing::new(Integers, "x");
        let g = r.from_ints([0, 1009 * 1013]);
        let budget = FactorBudget {
            trial_bound: 10,
            mr_rounds: 4,
        };
        let rep = ipp_witnesses(
            &r,
            &g,
            &SamplePlan::range(1, 4).unwrap(),
            &big(1),
            &budget,
            &ScanOptions::default(),
        )
        .unwrap();
        assert_eq!(rep.incomplete_values, 4);
        assert_eq!(rep.primes(), [2, 3].map(big));
    }

    #[test]
    fn rejects_constant_polynomials() {
        let r = PolyRing::new(Integers, "x");
        let err = ipp_witnesses(
            &r,
            &r.from_ints([7]),
            &SamplePlan::default(),
            &big(1),
            &FactorBudget::default(),
            &ScanOptions::default(),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }
}
