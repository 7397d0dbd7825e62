use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::{factorize, is_probable_prime, FactorBudget};
use crate::error::{Error, Result};

/// Runtime descriptor of a coefficient ring.
///
/// The textual form (`Display`/`FromStr`) is the one accepted by the
/// command line: `z`, `q`, `zloc:<set>`, `quad:<d>`. Towers print as
/// `base[var]` and are not parseable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Integers,
    Rationals,
    Localized(DenominatorSet),
    Quadratic { d: i64 },
    /// `Q(√d)`, the fraction field of `Z[√d]`.
    QuadraticField { d: i64 },
    PolyTower { base: Box<RingSpec>, var: String },
}

/// The set of primes inverted in a localization `Z[S⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DenominatorSet {
    /// Primes dividing `n ≥ 1`, i.e. `Z[1/n]`.
    DividesN(BigInt),
    Primes(Vec<BigInt>),
    /// Primes `p ≡ r (mod m)`, together with an explicit list.
    Residue {
        r: BigInt,
        m: BigInt,
        extra: Vec<BigInt>,
    },
    /// Every prime except the listed ones, e.g. `Z_(p)`.
    AllExcept(Vec<BigInt>),
}

impl RingSpec {
    pub fn validate(&self) -> Result<()> {
        self.validate_depth(0)
    }

    fn validate_depth(&self, depth: usize) -> Result<()> {
        match self {
            RingSpec::Integers | RingSpec::Rationals => Ok(()),
            RingSpec::Localized(set) => set.validate(),
            RingSpec::Quadratic { d } | RingSpec::QuadraticField { d } => validate_quadratic_d(*d),
            RingSpec::PolyTower { base, .. } => {
                if depth >= 2 {
                    return Err(Error::InvalidRing("tower nesting deeper than two".into()));
                }
                base.validate_depth(depth + 1)
            }
        }
    }
}

pub(crate) fn validate_quadratic_d(d: i64) -> Result<()> {
    if d == 0 || d == 1 {
        return Err(Error::InvalidRing(format!("d = {d} does not give a quadratic ring")));
    }
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return Err(Error::InvalidRing(format!("d = {d} is not squarefree")));
        }
        p += 1;
    }
    Ok(())
}

fn check_primes(list: &[BigInt]) -> Result<()> {
    match list.iter().find(|p| !is_probable_prime(p)) {
        Some(p) => Err(Error::InvalidRing(format!("{p} is not prime"))),
        None => Ok(()),
    }
}

impl DenominatorSet {
    pub fn validate(&self) -> Result<()> {
        match self {
            DenominatorSet::DividesN(n) => {
                if n < &BigInt::one() {
                    return Err(Error::InvalidRing(format!("1/n needs n ≥ 1, got {n}")));
                }
                Ok(())
            }
            DenominatorSet::Primes(list) | DenominatorSet::AllExcept(list) => check_primes(list),
            DenominatorSet::Residue { r, m, extra } => {
                if m < &BigInt::one() || r.is_negative() || r >= m {
                    return Err(Error::InvalidRing(format!(
                        "residue class needs 0 ≤ r < m, m ≥ 1; got r = {r}, m = {m}"
                    )));
                }
                check_primes(extra)
            }
        }
    }

    /// Whether the prime `p` is inverted.
    pub fn contains_prime(&self, p: &BigInt) -> bool {
        match self {
            DenominatorSet::DividesN(n) => (n % p).is_zero(),
            DenominatorSet::Primes(list) => list.contains(p),
            DenominatorSet::Residue { r, m, extra } => &p.mod_floor(m) == r || extra.contains(p),
            DenominatorSet::AllExcept(list) => !list.contains(p),
        }
    }

    /// Splits `|n|` as `s · t` where `s` has all its primes in the set and
    /// `t` none of them. `n` must be nonzero.
    pub fn split(&self, n: &BigInt, budget: &FactorBudget) -> Result<(BigInt, BigInt)> {
        let mut rest = n.abs();
        let mut inside = BigInt::one();
        let peel = |rest: &mut BigInt, inside: &mut BigInt, q: &BigInt| {
            if q.is_one() || q.is_zero() {
                return;
            }
            loop {
                let g = rest.gcd(q);
                if g.is_one() {
                    break;
                }
                *rest /= &g;
                *inside *= &g;
            }
        };
        match self {
            DenominatorSet::DividesN(m) => peel(&mut rest, &mut inside, m),
            DenominatorSet::Primes(list) => {
                for p in list {
                    peel(&mut rest, &mut inside, p);
                }
            }
            DenominatorSet::AllExcept(list) => {
                // peel the excluded primes, then swap roles
                let mut outside = BigInt::one();
                for p in list {
                    peel(&mut rest, &mut outside, p);
                }
                return Ok((rest, outside));
            }
            DenominatorSet::Residue { .. } => {
                let report = factorize(&rest, budget);
                let mut outside = BigInt::one();
                for (p, k) in &report.factors {
                    let pk = num_traits::pow(p.clone(), *k as usize);
                    if self.contains_prime(p) {
                        inside *= pk;
                    } else {
                        outside *= pk;
                    }
                }
                if !report.complete {
                    return Err(Error::FactorizationIncomplete {
                        value: report.cofactor,
                    });
                }
                return Ok((inside, outside));
            }
        }
        Ok((inside, rest))
    }

    /// Whether every prime factor of the nonzero `n` is in the set.
    pub fn is_s_number(&self, n: &BigInt, budget: &FactorBudget) -> Result<bool> {
        if let DenominatorSet::Residue { .. } = self {
            // a single prime outside the set decides the question even when
            // the factorization is incomplete
            let report = factorize(n, budget);
            if report.primes().any(|p| !self.contains_prime(p)) {
                return Ok(false);
            }
            if !report.complete {
                return Err(Error::FactorizationIncomplete {
                    value: report.cofactor,
                });
            }
            return Ok(true);
        }
        let (_, outside) = self.split(n, budget)?;
        Ok(outside.is_one())
    }

    /// The first `count` inverted primes in increasing order, searching no
    /// further than `limit`.
    pub fn small_primes(&self, count: usize, limit: u64) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = match self {
            // finite sets are listed directly
            DenominatorSet::DividesN(n) => {
                factorize(n, &FactorBudget::default()).primes().cloned().collect()
            }
            DenominatorSet::Primes(list) => list.clone(),
            DenominatorSet::Residue { extra, m, r } => {
                let mut out = extra.clone();
                for p in 2..=limit {
                    let p = BigInt::from(p);
                    if out.len() >= count + extra.len() {
                        break;
                    }
                    if &p.mod_floor(m) == r && is_probable_prime(&p) {
                        out.push(p);
                    }
                }
                out
            }
            DenominatorSet::AllExcept(list) => (2..=limit)
                .map(BigInt::from)
                .filter(|p| !list.contains(p) && is_probable_prime(p))
                .take(count)
                .collect(),
        };
        out.sort();
        out.dedup();
        out.truncate(count);
        out
    }
}

fn join(list: &[BigInt]) -> String {
    list.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for DenominatorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DenominatorSet::DividesN(n) => write!(f, "1/n:{n}"),
            DenominatorSet::Primes(list) => write!(f, "primes:{}", join(list)),
            DenominatorSet::Residue { r, m, extra } => {
                write!(f, "mod:{r},{m}")?;
                for p in extra {
                    write!(f, ",+{p}")?;
                }
                Ok(())
            }
            DenominatorSet::AllExcept(list) => write!(f, "except:{}", join(list)),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "z"),
            RingSpec::Rationals => write!(f, "q"),
            RingSpec::Localized(set) => write!(f, "zloc:{set}"),
            RingSpec::Quadratic { d } => write!(f, "quad:{d}"),
            RingSpec::QuadraticField { d } => write!(f, "quadfield:{d}"),
            RingSpec::PolyTower { base, var } => write!(f, "{base}[{var}]"),
        }
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::InvalidRing(format!("expected an integer, got {s:?}")))
}

fn parse_list(s: &str) -> Result<Vec<BigInt>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_int)
        .collect()
}

impl FromStr for DenominatorSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let set = if let Some(rest) = s.strip_prefix("1/n:") {
            DenominatorSet::DividesN(parse_int(rest)?)
        } else if let Some(rest) = s.strip_prefix("primes:") {
            DenominatorSet::Primes(parse_list(rest)?)
        } else if let Some(rest) = s.strip_prefix("except:") {
            DenominatorSet::AllExcept(parse_list(rest)?)
        } else if let Some(rest) = s.strip_prefix("mod:") {
            let mut parts = rest.split(',');
            let r = parse_int(parts.next().unwrap_or(""))?;
            let m = parse_int(
                parts
                    .next()
                    .ok_or_else(|| Error::InvalidRing("mod:<r>,<m> needs a modulus".into()))?,
            )?;
            let mut extra = Vec::new();
            for part in parts {
                let p = part.trim().strip_prefix('+').ok_or_else(|| {
                    Error::InvalidRing(format!("extra primes are written +p, got {part:?}"))
                })?;
                extra.push(parse_int(p)?);
            }
            DenominatorSet::Residue { r, m, extra }
        } else {
            return Err(Error::InvalidRing(format!("unknown localization {s:?}")));
        };
        set.validate()?;
        Ok(set)
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let spec = match s {
            "z" | "Z" => RingSpec::Integers,
            "q" | "Q" => RingSpec::Rationals,
            _ => {
                if let Some(rest) = s.strip_prefix("zloc:") {
                    RingSpec::Localized(rest.parse()?)
                } else if let Some(rest) = s.strip_prefix("quad:") {
                    let d: i64 = rest
                        .trim()
                        .parse()
                        .map_err(|_| Error::InvalidRing(format!("bad d in {s:?}")))?;
                    RingSpec::Quadratic { d }
                } else {
                    return Err(Error::InvalidRing(format!("unknown ring {s:?}")));
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn parse_and_print() {
        for text in ["z", "q", "zloc:1/n:6", "zloc:mod:1,4,+2", "zloc:except:5", "quad:-1", "quad:2"] {
            let spec: RingSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn rejects_bad_descriptors() {
        for text in ["quad:4", "quad:1", "quad:0", "quad:-12", "zloc:1/n:0", "zloc:mod:4,4", "zloc:except:4", "w"] {
            assert!(text.parse::<RingSpec>().is_err(), "{text}");
        }
        let deep = RingSpec::PolyTower {
            base: Box::new(RingSpec::PolyTower {
                base: Box::new(RingSpec::PolyTower {
                    base: Box::new(RingSpec::Integers),
                    var: "x".into(),
                }),
                var: "y".into(),
            }),
            var: "z".into(),
        };
        assert!(deep.validate().is_err());
    }

    #[test]
    fn s_numbers() {
        let b = FactorBudget::default();
        let w: DenominatorSet = "mod:1,4,+2".parse().unwrap();
        assert!(w.is_s_number(&big(10), &b).unwrap());
        assert!(!w.is_s_number(&big(3), &b).unwrap());
        assert!(w.is_s_number(&big(-1), &b).unwrap());

        let sixth = DenominatorSet::DividesN(big(6));
        assert!(sixth.is_s_number(&big(72), &b).unwrap());
        assert!(!sixth.is_s_number(&big(30), &b).unwrap());
        assert_eq!(sixth.split(&big(-60), &b).unwrap(), (big(12), big(5)));

        let z5 = DenominatorSet::AllExcept(vec![big(5)]);
        assert!(z5.is_s_number(&big(7 * 11 * 13), &b).unwrap());
        assert!(!z5.is_s_number(&big(35), &b).unwrap());
        assert_eq!(z5.split(&big(50), &b).unwrap(), (big(2), big(25)));
    }

    #[test]
    fn small_primes_in_sets() {
        let w: DenominatorSet = "mod:1,4,+2".parse().unwrap();
        assert_eq!(w.small_primes(4, 1000), vec![big(2), big(5), big(13), big(17)]);
        let z5 = DenominatorSet::AllExcept(vec![big(5)]);
        assert_eq!(z5.small_primes(3, 1000), vec![big(2), big(3), big(7)]);
        assert_eq!(DenominatorSet::DividesN(big(12)).small_primes(5, 10), vec![big(2), big(3)]);
        assert!(DenominatorSet::DividesN(big(1)).small_primes(5, 10).is_empty());
    }
}
