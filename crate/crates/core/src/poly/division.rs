//! Pseudo-division, content, exact and fraction-field divisibility, gcd.

use crate::error::{Error, Result};
use crate::poly::{Degree, Poly, PolyRing};
use crate::ring::{Field, HasFractionField, Ring};

/// `scale · f = divisor · quotient + remainder` with `scale = lc(divisor)^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoDivResult<E> {
    pub s: usize,
    pub quotient: Poly<E>,
    pub remainder: Poly<E>,
    pub scale: E,
}

impl<R: Ring> PolyRing<R> {
    /// Classical pseudo-division with `s = max(deg f − deg g + 1, 0)`.
    pub fn pseudo_divide(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Result<PseudoDivResult<R::Elem>> {
        let dg = match g.degree() {
            Degree::NegInfinity => return Err(Error::DivisorZero),
            Degree::Finite(0) => return Err(Error::DivisorConstant),
            Degree::Finite(d) => d,
        };
        let base = self.base();
        let lc = g.lc().expect("nonzero divisor");
        let s = match f.degree() {
            Degree::Finite(df) if df >= dg => df - dg + 1,
            _ => {
                return Ok(PseudoDivResult {
                    s: 0,
                    quotient: Poly::zero(),
                    remainder: f.clone(),
                    scale: base.one(),
                })
            }
        };

        let mut quotient = Poly::zero();
        let mut remainder = f.clone();
        let mut pending = s;
        while let Degree::Finite(dr) = remainder.degree() {
            if dr < dg {
                break;
            }
            let lead = self.monomial(remainder.lc().unwrap().clone(), dr - dg);
            quotient = self.add(&self.scale(&quotient, lc), &lead);
            remainder = self.sub(&self.scale(&remainder, lc), &self.mul(&lead, g));
            pending -= 1;
        }
        // steps skipped by early cancellation still owe their factor of lc
        if pending > 0 {
            let fix = base.pow(lc, pending as u32);
            quotient = self.scale(&quotient, &fix);
            remainder = self.scale(&remainder, &fix);
        }
        Ok(PseudoDivResult {
            s,
            quotient,
            remainder,
            scale: base.pow(lc, s as u32),
        })
    }

    /// Unit-normalized gcd of the coefficients.
    pub fn content(&self, f: &Poly<R::Elem>) -> Result<R::Elem> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let base = self.base();
        let mut acc = base.zero();
        for c in f.coeffs() {
            acc = base.gcd(&acc, c)?;
            if base.is_one(&acc) {
                break;
            }
        }
        Ok(acc)
    }

    pub fn primitive_part(&self, f: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        let c = self.content(f)?;
        self.divide_by_constant(f, &c)?
            .ok_or_else(|| Error::InternalInvariantViolation("content does not divide a coefficient".into()))
    }

    /// `(content, primitive part)`.
    pub fn content_split(&self, f: &Poly<R::Elem>) -> Result<(R::Elem, Poly<R::Elem>)> {
        let c = self.content(f)?;
        let p = self
            .divide_by_constant(f, &c)?
            .ok_or_else(|| Error::InternalInvariantViolation("content does not divide a coefficient".into()))?;
        Ok((c, p))
    }

    fn divide_by_constant(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Result<Option<Poly<R::Elem>>> {
        let mut out = Vec::with_capacity(f.coeffs().len());
        for a in f.coeffs() {
            match self.base().div_exact(a, c)? {
                Some(q) => out.push(q),
                None => return Ok(None),
            }
        }
        Ok(Some(self.poly(out)))
    }

    /// Long division in `R[x]` that only succeeds when every quotient
    /// coefficient lies in `R` and the remainder vanishes.
    fn exact_long_division(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Result<Option<Poly<R::Elem>>> {
        let dg = g.degree().finite().expect("nonzero divisor");
        let lc = g.lc().unwrap();
        let mut remainder = f.clone();
        let mut quotient = Poly::zero();
        while let Degree::Finite(dr) = remainder.degree() {
            if dr < dg {
                return Ok(None);
            }
            let c = match self.base().div_exact(remainder.lc().unwrap(), lc)? {
                Some(c) => c,
                None => return Ok(None),
            };
            let term = self.monomial(c, dr - dg);
            remainder = self.sub(&remainder, &self.mul(&term, g));
            quotient = self.add(&quotient, &term);
        }
        Ok(Some(quotient))
    }

    /// Returns `q` with `f = g·q` in `R[x]`, or `None` when `g ∤ f`.
    ///
    /// Constant divisors are tested coefficient-wise. Otherwise both sides
    /// are split into content and primitive part (when `R` has a true gcd),
    /// the primitive parts are pseudo-divided, and a zero pseudo-remainder
    /// is turned into an explicit quotient whose coefficients must lie in
    /// `R`. The product `g·q` is always re-expanded and compared with `f`.
    pub fn divides_exact(&self, g: &Poly<R::Elem>, f: &Poly<R::Elem>) -> Result<Option<Poly<R::Elem>>> {
        let dg = match g.degree() {
            Degree::NegInfinity => return Err(Error::DivisorZero),
            Degree::Finite(d) => d,
        };
        if f.is_zero() {
            return Ok(Some(Poly::zero()));
        }
        if f.degree() < g.degree() {
            return Ok(None);
        }
        let q = if dg == 0 {
            match self.divide_by_constant(f, &g.coeffs()[0])? {
                Some(q) => q,
                None => return Ok(None),
            }
        } else if R::GCD_DOMAIN {
            let (cg, pg) = self.content_split(g)?;
            let (cf, pf) = self.content_split(f)?;
            let Some(cq) = self.base().div_exact(&cf, &cg)? else {
                return Ok(None);
            };
            if !self.pseudo_divide(&pf, &pg)?.remainder.is_zero() {
                return Ok(None);
            }
            // Gauss: pg | pf in K[x] with both primitive gives pg | pf in R[x]
            let Some(pq) = self.exact_long_division(&pf, &pg)? else {
                return Ok(None);
            };
            self.scale(&pq, &cq)
        } else {
            if !self.pseudo_divide(f, g)?.remainder.is_zero() {
                return Ok(None);
            }
            match self.exact_long_division(f, g)? {
                Some(q) => q,
                None => return Ok(None),
            }
        };
        if self.mul(g, &q) != *f {
            return Err(Error::InternalInvariantViolation(
                "quotient does not re-expand to the dividend".into(),
            ));
        }
        Ok(Some(q))
    }

    /// Greatest common divisor via primitive pseudo-remainder sequences.
    /// Over rings without a true gcd this degrades to the gcd of contents.
    pub fn poly_gcd(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        let normalize = |p: Poly<R::Elem>| if self.is_negative(&p) { self.neg(&p) } else { p };
        if a.is_zero() && b.is_zero() {
            return Ok(Poly::zero());
        }
        if a.is_zero() {
            return Ok(normalize(b.clone()));
        }
        if b.is_zero() {
            return Ok(normalize(a.clone()));
        }
        let (ca, pa) = self.content_split(a)?;
        let (cb, pb) = self.content_split(b)?;
        let c = self.base().gcd(&ca, &cb)?;
        if !R::GCD_DOMAIN {
            return Ok(self.constant(c));
        }
        let (mut p, mut q) = if pa.degree() >= pb.degree() { (pa, pb) } else { (pb, pa) };
        loop {
            match q.degree() {
                Degree::NegInfinity => break,
                // a primitive constant is a unit
                Degree::Finite(0) => {
                    p = self.one();
                    break;
                }
                _ => {}
            }
            let r = self.pseudo_divide(&p, &q)?.remainder;
            p = q;
            q = if r.is_zero() { r } else { self.primitive_part(&r)? };
        }
        Ok(normalize(self.scale(&p, &c)))
    }
}

impl<R: Field> PolyRing<R> {
    /// Euclidean division over a field.
    pub fn div_rem(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Result<(Poly<R::Elem>, Poly<R::Elem>)> {
        let dg = g.degree().finite().ok_or(Error::DivisorZero)?;
        let inv = self.base().inv(g.lc().unwrap()).ok_or(Error::DivisorZero)?;
        let mut remainder = f.clone();
        let mut quotient = Poly::zero();
        while let Degree::Finite(dr) = remainder.degree() {
            if dr < dg {
                break;
            }
            let term = self.monomial(self.base().mul(remainder.lc().unwrap(), &inv), dr - dg);
            remainder = self.sub(&remainder, &self.mul(&term, g));
            quotient = self.add(&quotient, &term);
        }
        Ok((quotient, remainder))
    }
}

impl<R: HasFractionField> PolyRing<R> {
    /// The polynomial ring over the fraction field, same variable.
    pub fn fraction_ring(&self) -> PolyRing<R::Frac> {
        PolyRing::new(self.base().fraction_field(), self.var())
    }

    pub fn embed(&self, f: &Poly<R::Elem>) -> Poly<<R::Frac as Ring>::Elem> {
        let k = self.fraction_ring();
        self.map_into(&k, f, |c| self.base().embed(c))
    }

    /// `f/g` in `K[x]` when the division leaves no remainder.
    pub fn divides_in_fraction_field(
        &self,
        g: &Poly<R::Elem>,
        f: &Poly<R::Elem>,
    ) -> Result<Option<Poly<<R::Frac as Ring>::Elem>>> {
        if g.is_zero() {
            return Err(Error::DivisorZero);
        }
        let k = self.fraction_ring();
        let (q, r) = k.div_rem(&self.embed(f), &self.embed(g))?;
        Ok(r.is_zero().then_some(q))
    }
}

pub fn pseudo_divide<R: Ring>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<PseudoDivResult<R::Elem>> {
    ring.pseudo_divide(f, g)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::ring::{Integers, Localized, QuadInt, Quadratic, Rationals};

    fn zx() -> PolyRing<Integers> {
        PolyRing::new(Integers, "x")
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn monic_divisor_is_ordinary_division() {
        let r = zx();
        let res = r.pseudo_divide(&r.from_ints([1, 0, 1]), &r.x()).unwrap();
        assert_eq!(res.s, 2);
        assert_eq!(res.quotient, r.x());
        assert_eq!(res.remainder, r.one());
        assert_eq!(res.scale, BigInt::from(1));
    }

    #[test]
    fn lucas_jr1_quotient() {
        let r = zx();
        let f = r.from_ints([-4, 0, -12, 0, 16]);
        let g = r.from_ints([-1, 1]);
        let res = r.pseudo_divide(&f, &g).unwrap();
        assert!(res.remainder.is_zero());
        assert_eq!(res.quotient, r.from_ints([4, 4, 16, 16]));
        assert_eq!(r.divides_exact(&g, &f).unwrap(), Some(r.from_ints([4, 4, 16, 16])));
    }

    #[test]
    fn pseudo_division_identity_non_monic() {
        let r = zx();
        let f = r.from_ints([0, -1, 0, 0, 0, 1]);
        let g = r.from_ints([-1, 0, 2]);
        let res = r.pseudo_divide(&f, &g).unwrap();
        assert_eq!(res.s, 4);
        assert_eq!(res.scale, BigInt::from(16));
        assert!(res.remainder.degree() < g.degree());
        let lhs = r.scale(&f, &res.scale);
        let rhs = r.add(&r.mul(&g, &res.quotient), &res.remainder);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pseudo_division_errors_and_short_dividend() {
        let r = zx();
        assert_eq!(r.pseudo_divide(&r.x(), &Poly::zero()), Err(Error::DivisorZero));
        assert_eq!(r.pseudo_divide(&r.x(), &r.from_ints([3])), Err(Error::DivisorConstant));
        let res = r.pseudo_divide(&r.from_ints([5]), &r.x()).unwrap();
        assert_eq!(res.s, 0);
        assert_eq!(res.remainder, r.from_ints([5]));
    }

    #[test]
    fn content_examples() {
        let r = zx();
        let (c, p) = r.content_split(&r.from_ints([3, 9, 6])).unwrap();
        assert_eq!(c, BigInt::from(3));
        assert_eq!(p, r.from_ints([1, 3, 2]));
        assert_eq!(r.content(&r.from_ints([1, 0, 1])).unwrap(), BigInt::from(1));
        let (c, p) = r.content_split(&r.from_ints([2, 4])).unwrap();
        assert_eq!((c, p), (BigInt::from(2), r.from_ints([1, 2])));
        // sign travels with the primitive part
        let (c, p) = r.content_split(&r.from_ints([-2, -4])).unwrap();
        assert_eq!((c, p), (BigInt::from(2), r.from_ints([-1, -2])));
        assert_eq!(r.content(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn divides_exact_examples() {
        let r = zx();
        assert_eq!(r.divides_exact(&r.from_ints([5]), &r.from_ints([0, -1, 0, 0, 0, 1])).unwrap(), None);
        let g = r.from_ints([-1, 0, 2]);
        let f = r.from_ints([0, -4, 0, 8]);
        assert_eq!(r.divides_exact(&g, &f).unwrap(), Some(r.from_ints([0, 4])));
        // content obstruction: 2x + 2 does not divide x + 1 over Z
        assert_eq!(r.divides_exact(&r.from_ints([2, 2]), &r.from_ints([1, 1])).unwrap(), None);
        // but it does over Z[1/2]
        let loc = Localized::new("1/n:2".parse().unwrap()).unwrap();
        let lx = PolyRing::new(loc, "x");
        let g = lx.from_ints([2, 2]);
        let f = lx.from_ints([1, 1]);
        assert_eq!(lx.divides_exact(&g, &f).unwrap(), Some(lx.poly(vec![q(1, 2)])));
        assert_eq!(r.divides_exact(&Poly::zero(), &r.x()), Err(Error::DivisorZero));
        assert_eq!(r.divides_exact(&r.x(), &Poly::zero()).unwrap(), Some(Poly::zero()));
    }

    #[test]
    fn divides_over_gaussian_integers() {
        let gi = PolyRing::new(Quadratic::gaussian(), "x");
        // (x + i)(x − i) = x² + 1
        let a = gi.poly(vec![QuadInt::new(0, 1), QuadInt::new(1, 0)]);
        let b = gi.poly(vec![QuadInt::new(0, -1), QuadInt::new(1, 0)]);
        let f = gi.mul(&a, &b);
        assert_eq!(f, gi.from_ints([1, 0, 1]));
        assert_eq!(gi.divides_exact(&a, &f).unwrap(), Some(b.clone()));
        // (1+i)x + 2 divides 2x + 2 − 2i ... check via an explicit product
        let c = gi.poly(vec![QuadInt::new(2, 0), QuadInt::new(1, 1)]);
        let prod = gi.mul(&c, &b);
        assert_eq!(gi.divides_exact(&c, &prod).unwrap(), Some(b));
        assert_eq!(gi.divides_exact(&c, &gi.from_ints([1, 0, 1])).unwrap(), None);
    }

    #[test]
    fn fraction_field_examples() {
        let r = zx();
        let res = r
            .divides_in_fraction_field(&r.from_ints([5]), &r.from_ints([0, -1, 0, 0, 0, 1]))
            .unwrap()
            .unwrap();
        let qx = PolyRing::new(Rationals, "x");
        assert_eq!(res, qx.poly(vec![q(0, 1), q(-1, 5), q(0, 1), q(0, 1), q(0, 1), q(1, 5)]));
        assert_eq!(r.divides_in_fraction_field(&r.x(), &r.x()).unwrap(), Some(qx.one()));
        assert_eq!(
            r.divides_in_fraction_field(&r.from_ints([1, 1]), &r.from_ints([-1, 0, 1])).unwrap(),
            Some(qx.from_ints([-1, 1]))
        );
        assert_eq!(r.divides_in_fraction_field(&r.x(), &r.from_ints([1, 0, 1])).unwrap(), None);
    }

    #[test]
    fn gcd_over_integers() {
        let r = zx();
        let a = r.mul(&r.from_ints([1, 1]), &r.from_ints([-2, 0, 3]));
        let b = r.mul(&r.from_ints([1, 1]), &r.from_ints([5, 7]));
        assert_eq!(r.poly_gcd(&a, &b).unwrap(), r.from_ints([1, 1]));
        let a = r.scale(&a, &BigInt::from(-6));
        let b = r.scale(&b, &BigInt::from(4));
        assert_eq!(r.poly_gcd(&a, &b).unwrap(), r.from_ints([2, 2]));
        assert_eq!(r.poly_gcd(&r.from_ints([1, 0, 1]), &r.from_ints([-1, 1])).unwrap(), r.one());
    }

    #[test]
    fn bivariate_divisibility() {
        let zx = zx();
        let zxy = PolyRing::new(zx.clone(), "y");
        // g = x·y + 1, q = y − x
        let g = zxy.poly(vec![zx.one(), zx.x()]);
        let qq = zxy.poly(vec![zx.neg(&zx.x()), zx.one()]);
        let f = zxy.mul(&g, &qq);
        assert_eq!(zxy.divides_exact(&g, &f).unwrap(), Some(qq));
        // 2x·y is not a divisor of x·y + 1
        let h = zxy.poly(vec![zx.zero(), zx.from_ints([0, 2])]);
        assert_eq!(zxy.divides_exact(&h, &g).unwrap(), None);
        let res = zxy.pseudo_divide(&f, &h).unwrap();
        assert_eq!(res.scale, zx.pow(&zx.from_ints([0, 2]), res.s as u32));
    }
}
