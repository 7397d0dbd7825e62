//! Conjugate and norm polynomials over `Z[√d]`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::{Integers, QuadInt, Quadratic, Ring};

/// Conjugates every coefficient.
pub fn conj_poly(ring: &PolyRing<Quadratic>, f: &Poly<QuadInt>) -> Poly<QuadInt> {
    let q = ring.base();
    ring.poly(f.coeffs().iter().map(|c| q.conj(c)).collect())
}

/// `f · conj(f)`, returned over `Z`.
pub fn norm_poly(ring: &PolyRing<Quadratic>, f: &Poly<QuadInt>) -> Result<Poly<BigInt>> {
    let product = ring.mul(f, &conj_poly(ring, f));
    let zx = PolyRing::new(Integers, ring.var());
    let mut coeffs = Vec::with_capacity(product.coeffs().len());
    for c in product.coeffs() {
        if !c.y.is_zero() {
            return Err(Error::InternalInvariantViolation(format!(
                "norm polynomial has a √d component {}",
                c.y
            )));
        }
        coeffs.push(c.x.clone());
    }
    Ok(zx.poly(coeffs))
}

/// Embeds an integer polynomial into `Z[√d][x]`.
pub fn lift_integer_poly(ring: &PolyRing<Quadratic>, f: &Poly<BigInt>) -> Poly<QuadInt> {
    ring.poly(f.coeffs().iter().map(|c| ring.base().from_int(c)).collect())
}
