//! `Z[√d]` and its fraction field `Q(√d)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::spec::validate_quadratic_d;
use super::{Field, HasFractionField, Ring, RingSpec};
use crate::error::{Error, Result};

/// `x + y√d` with integer parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadInt {
    pub x: BigInt,
    pub y: BigInt,
}

impl QuadInt {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        QuadInt {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }
}

/// `x + y√d` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadRat {
    pub x: BigRational,
    pub y: BigRational,
}

impl QuadRat {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        QuadRat { x, y }
    }

    pub fn from_int(n: &BigInt) -> Self {
        QuadRat {
            x: BigRational::from_integer(n.clone()),
            y: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// The ring `Z[√d]`, `d` squarefree and not 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadratic {
    d: i64,
}

impl Quadratic {
    pub fn new(d: i64) -> Result<Self> {
        validate_quadratic_d(d)?;
        Ok(Quadratic { d })
    }

    /// The Gaussian integers.
    pub fn gaussian() -> Self {
        Quadratic { d: -1 }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn conj(&self, z: &QuadInt) -> QuadInt {
        QuadInt {
            x: z.x.clone(),
            y: -&z.y,
        }
    }

    /// `x² − d·y²`.
    pub fn norm(&self, z: &QuadInt) -> BigInt {
        &z.x * &z.x - BigInt::from(self.d) * &z.y * &z.y
    }
}

pub fn quad_conj(ring: &Quadratic, z: &QuadInt) -> QuadInt {
    ring.conj(z)
}

pub fn quad_norm(ring: &Quadratic, z: &QuadInt) -> BigInt {
    ring.norm(z)
}

impl Ring for Quadratic {
    type Elem = QuadInt;
    // Z[√d] need not be a UFD; gcd is only the integer content
    const GCD_DOMAIN: bool = false;

    fn spec(&self) -> RingSpec {
        RingSpec::Quadratic { d: self.d }
    }
    fn zero(&self) -> QuadInt {
        QuadInt::default()
    }
    fn one(&self) -> QuadInt {
        QuadInt::new(1, 0)
    }
    fn from_int(&self, n: &BigInt) -> QuadInt {
        QuadInt {
            x: n.clone(),
            y: BigInt::zero(),
        }
    }
    fn is_zero(&self, a: &QuadInt) -> bool {
        a.x.is_zero() && a.y.is_zero()
    }
    fn add(&self, a: &QuadInt, b: &QuadInt) -> QuadInt {
        QuadInt {
            x: &a.x + &b.x,
            y: &a.y + &b.y,
        }
    }
    fn sub(&self, a: &QuadInt, b: &QuadInt) -> QuadInt {
        QuadInt {
            x: &a.x - &b.x,
            y: &a.y - &b.y,
        }
    }
    fn neg(&self, a: &QuadInt) -> QuadInt {
        QuadInt {
            x: -&a.x,
            y: -&a.y,
        }
    }
    fn mul(&self, a: &QuadInt, b: &QuadInt) -> QuadInt {
        let d = BigInt::from(self.d);
        QuadInt {
            x: &a.x * &b.x + d * &a.y * &b.y,
            y: &a.x * &b.y + &a.y * &b.x,
        }
    }
    fn div_exact(&self, a: &QuadInt, b: &QuadInt) -> Result<Option<QuadInt>> {
        if self.is_zero(b) {
            return Err(Error::Precondition("division by zero".into()));
        }
        let n = self.norm(b);
        let t = self.mul(a, &self.conj(b));
        let (qx, rx) = t.x.div_rem(&n);
        let (qy, ry) = t.y.div_rem(&n);
        Ok((rx.is_zero() && ry.is_zero()).then_some(QuadInt { x: qx, y: qy }))
    }
    fn is_unit(&self, a: &QuadInt) -> Result<bool> {
        Ok(self.norm(a).abs().is_one())
    }
    fn gcd(&self, a: &QuadInt, b: &QuadInt) -> Result<QuadInt> {
        let g = a.x.gcd(&a.y).gcd(&b.x).gcd(&b.y);
        Ok(self.from_int(&g))
    }
    fn is_negative(&self, a: &QuadInt) -> bool {
        a.x.is_negative() || (a.x.is_zero() && a.y.is_negative())
    }
}

/// The field `Q(√d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticField {
    d: i64,
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<Self> {
        validate_quadratic_d(d)?;
        Ok(QuadraticField { d })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn norm(&self, z: &QuadRat) -> BigRational {
        &z.x * &z.x - BigRational::from_integer(self.d.into()) * &z.y * &z.y
    }
}

impl Ring for QuadraticField {
    type Elem = QuadRat;
    const GCD_DOMAIN: bool = true;

    fn spec(&self) -> RingSpec {
        RingSpec::QuadraticField { d: self.d }
    }
    fn zero(&self) -> QuadRat {
        QuadRat::from_int(&BigInt::zero())
    }
    fn one(&self) -> QuadRat {
        QuadRat::from_int(&BigInt::one())
    }
    fn from_int(&self, n: &BigInt) -> QuadRat {
        QuadRat::from_int(n)
    }
    fn is_zero(&self, a: &QuadRat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &QuadRat, b: &QuadRat) -> QuadRat {
        QuadRat::new(&a.x + &b.x, &a.y + &b.y)
    }
    fn sub(&self, a: &QuadRat, b: &QuadRat) -> QuadRat {
        QuadRat::new(&a.x - &b.x, &a.y - &b.y)
    }
    fn neg(&self, a: &QuadRat) -> QuadRat {
        QuadRat::new(-&a.x, -&a.y)
    }
    fn mul(&self, a: &QuadRat, b: &QuadRat) -> QuadRat {
        let d = BigRational::from_integer(self.d.into());
        QuadRat::new(&a.x * &b.x + d * &a.y * &b.y, &a.x * &b.y + &a.y * &b.x)
    }
    fn div_exact(&self, a: &QuadRat, b: &QuadRat) -> Result<Option<QuadRat>> {
        match self.inv(b) {
            Some(inv) => Ok(Some(self.mul(a, &inv))),
            None => Err(Error::Precondition("division by zero".into())),
        }
    }
    fn is_unit(&self, a: &QuadRat) -> Result<bool> {
        Ok(!a.is_zero())
    }
    fn gcd(&self, a: &QuadRat, b: &QuadRat) -> Result<QuadRat> {
        Ok(if a.is_zero() && b.is_zero() {
            self.zero()
        } else {
            self.one()
        })
    }
    fn is_negative(&self, a: &QuadRat) -> bool {
        a.x.is_negative() || (a.x.is_zero() && a.y.is_negative())
    }
}

impl Field for QuadraticField {
    fn inv(&self, a: &QuadRat) -> Option<QuadRat> {
        if a.is_zero() {
            return None;
        }
        // d is not a square, so the norm of a nonzero element is nonzero
        let n = self.norm(a);
        Some(QuadRat::new(&a.x / &n, -&a.y / &n))
    }
}

impl HasFractionField for Quadratic {
    type Frac = QuadraticField;

    fn fraction_field(&self) -> QuadraticField {
        QuadraticField { d: self.d }
    }
    fn embed(&self, a: &QuadInt) -> QuadRat {
        QuadRat::new(
            BigRational::from_integer(a.x.clone()),
            BigRational::from_integer(a.y.clone()),
        )
    }
    fn restrict(&self, a: &QuadRat) -> Result<Option<QuadInt>> {
        Ok((a.x.is_integer() && a.y.is_integer()).then(|| QuadInt {
            x: a.x.to_integer(),
            y: a.y.to_integer(),
        }))
    }
}
