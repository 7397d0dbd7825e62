use num_bigint::{BigInt, RandBigInt};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ring::{Integers, Localized, QuadInt, Quadratic, Rationals, Ring};

/// Finite stand-in for "all k in D".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SamplePlan {
    /// Every integer in `[k_min, k_max]`, in increasing order.
    Range { k_min: BigInt, k_max: BigInt },
    /// `count` seeded draws. Integer-valued parts come from `[k_min, k_max]`;
    /// rings with richer elements draw those too (see [`Sampler`]).
    Random {
        count: usize,
        seed: u64,
        k_min: BigInt,
        k_max: BigInt,
    },
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan::Range {
            k_min: BigInt::from(-1000),
            k_max: BigInt::from(1000),
        }
    }
}

impl SamplePlan {
    pub fn range(k_min: impl Into<BigInt>, k_max: impl Into<BigInt>) -> Result<Self> {
        let (k_min, k_max) = (k_min.into(), k_max.into());
        if k_min > k_max {
            return Err(Error::Precondition(format!("empty range [{k_min}, {k_max}]")));
        }
        Ok(SamplePlan::Range { k_min, k_max })
    }

    pub fn random(count: usize, seed: u64, k_min: impl Into<BigInt>, k_max: impl Into<BigInt>) -> Result<Self> {
        let (k_min, k_max) = (k_min.into(), k_max.into());
        if count == 0 {
            return Err(Error::Precondition("sample count must be at least 1".into()));
        }
        if k_min > k_max {
            return Err(Error::Precondition(format!("empty range [{k_min}, {k_max}]")));
        }
        Ok(SamplePlan::Random {
            count,
            seed,
            k_min,
            k_max,
        })
    }

    pub fn bounds(&self) -> (&BigInt, &BigInt) {
        match self {
            SamplePlan::Range { k_min, k_max } | SamplePlan::Random { k_min, k_max, .. } => (k_min, k_max),
        }
    }

    /// Integer samples of the plan.
    pub fn integers(&self) -> Vec<BigInt> {
        match self {
            SamplePlan::Range { k_min, k_max } => {
                let mut out = Vec::new();
                let mut k = k_min.clone();
                while &k <= k_max {
                    out.push(k.clone());
                    k += 1;
                }
                out
            }
            SamplePlan::Random {
                count,
                seed,
                k_min,
                k_max,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let hi = k_max + 1;
                (0..*count).map(|_| rng.gen_bigint_range(k_min, &hi)).collect()
            }
        }
    }

    /// Integer pairs: the full grid for ranges, `count` pairs otherwise.
    pub fn pairs(&self) -> Vec<(BigInt, BigInt)> {
        match self {
            SamplePlan::Range { .. } => {
                let ks = self.integers();
                ks.iter()
                    .flat_map(|a| ks.iter().map(move |b| (a.clone(), b.clone())))
                    .collect()
            }
            SamplePlan::Random {
                count,
                seed,
                k_min,
                k_max,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let hi = k_max + 1;
                (0..*count)
                    .map(|_| (rng.gen_bigint_range(k_min, &hi), rng.gen_bigint_range(k_min, &hi)))
                    .collect()
            }
        }
    }
}

/// Default half-width of the coefficient box for `Z[√d]` samples.
pub const DEFAULT_QUAD_BOX: u64 = 50;

/// Rings that know how to draw random elements of themselves.
pub trait Sampler: Ring {
    fn draw(&self, rng: &mut ChaCha8Rng, k_min: &BigInt, k_max: &BigInt, quad_box: u64) -> Self::Elem;
}

fn draw_int(rng: &mut ChaCha8Rng, k_min: &BigInt, k_max: &BigInt) -> BigInt {
    rng.gen_bigint_range(k_min, &(k_max + 1))
}

impl Sampler for Integers {
    fn draw(&self, rng: &mut ChaCha8Rng, k_min: &BigInt, k_max: &BigInt, _: u64) -> BigInt {
        draw_int(rng, k_min, k_max)
    }
}

impl Sampler for Rationals {
    fn draw(&self, rng: &mut ChaCha8Rng, k_min: &BigInt, k_max: &BigInt, _: u64) -> BigRational {
        let den: u32 = rng.gen_range(1..=12);
        BigRational::new(draw_int(rng, k_min, k_max), den.into())
    }
}

impl Sampler for Localized {
    /// A numerator from the range over a product of up to two small
    /// inverted primes.
    fn draw(&self, rng: &mut ChaCha8Rng, k_min: &BigInt, k_max: &BigInt, _: u64) -> BigRational {
        let primes = self.set().small_primes(8, 2000);
        let num = draw_int(rng, k_min, k_max);
        let mut den = BigInt::one();
        if !primes.is_empty() {
            for _ in 0..rng.gen_range(0..=2) {
                den *= &primes[rng.gen_range(0..primes.len())];
            }
        }
        BigRational::new(num, den)
    }
}

impl Sampler for Quadratic {
    fn draw(&self, rng: &mut ChaCha8Rng, _: &BigInt, _: &BigInt, quad_box: u64) -> QuadInt {
        let b = quad_box as i64;
        QuadInt::new(rng.gen_range(-b..=b), rng.gen_range(-b..=b))
    }
}

/// Ring elements for a plan: ranges embed integers, random plans draw
/// ring-specific elements.
pub fn sample_elements<R: Sampler>(ring: &R, plan: &SamplePlan, quad_box: u64) -> Vec<R::Elem> {
    match plan {
        SamplePlan::Range { .. } => plan.integers().iter().map(|k| ring.from_int(k)).collect(),
        SamplePlan::Random {
            count,
            seed,
            k_min,
            k_max,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count).map(|_| ring.draw(&mut rng, k_min, k_max, quad_box)).collect()
        }
    }
}

/// Number of integer samples in a range plan, without materializing it.
pub fn plan_len(plan: &SamplePlan) -> BigInt {
    match plan {
        SamplePlan::Range { k_min, k_max } => k_max - k_min + 1,
        SamplePlan::Random { count, .. } => BigInt::from(*count),
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    #[test]
    fn ranges_are_inclusive_and_ordered() {
        let plan = SamplePlan::range(-2, 2).unwrap();
        assert_eq!(plan.integers(), (-2..=2).map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(plan_len(&plan), BigInt::from(5));
        assert!(SamplePlan::range(3, 2).is_err());
        assert_eq!(plan.pairs().len(), 25);
    }

    #[test]
    fn random_plans_are_reproducible() {
        let plan = SamplePlan::random(50, 7, -10, 10).unwrap();
        let a = plan.integers();
        assert_eq!(a, plan.integers());
        assert!(a.iter().all(|k| k >= &BigInt::from(-10) && k <= &BigInt::from(10)));
        let other = SamplePlan::random(50, 8, -10, 10).unwrap();
        assert_ne!(a, other.integers());
        assert!(SamplePlan::random(0, 1, 0, 1).is_err());
    }

    #[test]
    fn localized_draws_stay_in_the_ring() {
        let ring = Localized::new("mod:1,4,+2".parse().unwrap()).unwrap();
        let plan = SamplePlan::random(200, 3, -100, 100).unwrap();
        let xs = sample_elements(&ring, &plan, DEFAULT_QUAD_BOX);
        assert!(xs.iter().all(|x| ring.contains(x).unwrap()));
        assert!(xs.iter().any(|x| !x.denom().is_one()));
        assert!(xs.iter().any(|x| x.is_zero() || x.denom().is_one()));
    }

    #[test]
    fn quadratic_draws_respect_the_box() {
        let ring = Quadratic::new(2).unwrap();
        let plan = SamplePlan::random(100, 1, 0, 0).unwrap();
        let xs = sample_elements(&ring, &plan, 3);
        assert!(xs.iter().all(|z| z.x.magnitude() <= &3u32.into() && z.y.magnitude() <= &3u32.into()));
    }
}
