//! Trial division and Miller-Rabin.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Limits for [`factorize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub trial_bound: u64,
    pub mr_rounds: u32,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_bound: 1_000_000,
            mr_rounds: 24,
        }
    }
}

/// Outcome of [`factorize`]: `sign · Π pᵏ · cofactor = input`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub input: BigInt,
    pub factors: Vec<(BigInt, u32)>,
    /// Unfactored remainder, 1 when the factorization is complete.
    pub cofactor: BigInt,
    pub complete: bool,
}

impl FactorReport {
    pub fn negative(&self) -> bool {
        self.input.sign() == Sign::Minus
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Recomputes the input from the parts.
    pub fn reconstruct(&self) -> BigInt {
        let mut acc = self.cofactor.clone();
        for (p, k) in &self.factors {
            acc *= num_traits::pow(p.clone(), *k as usize);
        }
        if self.negative() {
            -acc
        } else {
            acc
        }
    }
}

// Deterministic for n < 3.3·10²⁴.
const SMALL_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const MR_SEED: u64 = 0x5eed_d1b1_5ab1_e000;

pub fn is_probable_prime(n: &BigInt) -> bool {
    is_probable_prime_with_rounds(n, FactorBudget::default().mr_rounds)
}

/// Miller-Rabin with the first twelve prime bases, plus `rounds` extra bases
/// from a fixed-seed generator when `n ≥ 2⁶⁴`.
pub fn is_probable_prime_with_rounds(n: &BigInt, rounds: u32) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    let n = n.magnitude();
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &SMALL_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let witness = |a: &BigUint| -> bool {
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                return true;
            }
            if x == one {
                return false;
            }
        }
        false
    };
    if !SMALL_BASES.iter().all(|&a| witness(&BigUint::from(a))) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MR_SEED);
    let words = n.bits().div_ceil(64) as usize + 1;
    let span = n - 3u32;
    for _ in 0..rounds {
        let mut digits = Vec::with_capacity(words * 2);
        for _ in 0..words {
            let w = rng.next_u64();
            digits.push(w as u32);
            digits.push((w >> 32) as u32);
        }
        let a = BigUint::new(digits) % &span + 2u32;
        if !witness(&a) {
            return false;
        }
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &SMALL_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Trial division up to `budget.trial_bound`, then a primality test on the
/// remaining cofactor. Incompleteness is reported, never raised.
///
/// # Panics
///
/// If `n` is zero.
pub fn factorize(n: &BigInt, budget: &FactorBudget) -> FactorReport {
    assert!(!n.is_zero(), "cannot factor zero");
    let bound = budget.trial_bound.max(2);
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rem = n.magnitude().clone();

    let push = |p: u64, k: u32, factors: &mut Vec<(BigInt, u32)>| {
        if k > 0 {
            factors.push((BigInt::from(p), k));
        }
    };

    // strip 2 and 3, then walk 6k ± 1
    for p in [2u64, 3] {
        let mut k = 0;
        while (&rem % p).is_zero() {
            rem /= p;
            k += 1;
        }
        push(p, k, &mut factors);
    }
    let mut candidate = 5u64;
    let mut step = 2u64;
    let mut trial_exhausted = false;
    loop {
        if rem.is_one() {
            break;
        }
        if candidate > bound {
            trial_exhausted = true;
            break;
        }
        if let Some(small) = rem.to_u64() {
            if candidate.checked_mul(candidate).map_or(true, |sq| sq > small) {
                break;
            }
            let mut k = 0;
            let mut r = small;
            while r % candidate == 0 {
                r /= candidate;
                k += 1;
            }
            if k > 0 {
                rem = BigUint::from(r);
                push(candidate, k, &mut factors);
            }
        } else {
            if (&rem % candidate).is_zero() {
                let mut k = 0;
                while (&rem % candidate).is_zero() {
                    rem /= candidate;
                    k += 1;
                }
                push(candidate, k, &mut factors);
            }
        }
        candidate += step;
        step = 6 - step;
    }

    let mut complete = true;
    let mut cofactor = BigInt::one();
    if !rem.is_one() {
        let rem_int = BigInt::from(rem);
        // with no divisor ≤ √rem found, rem is prime
        let proven_prime = !trial_exhausted || rem_int.sqrt() < BigInt::from(candidate);
        if proven_prime || is_probable_prime_with_rounds(&rem_int, budget.mr_rounds) {
            factors.push((rem_int, 1));
        } else {
            cofactor = rem_int;
            complete = false;
        }
    }
    factors.sort();
    FactorReport {
        input: n.clone(),
        factors,
        cofactor,
        complete,
    }
}
