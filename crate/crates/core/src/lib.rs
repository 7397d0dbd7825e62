//! Exact polynomial divisibility over integer-like coefficient rings.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: coefficient rings (integers, rationals, localizations of the
//!   integers, quadratic rings `Z[√d]`) together with factorization and
//!   primality services.
//! * [`poly`]: dense univariate polynomials over any [`ring::Ring`],
//!   including polynomial rings themselves, so `(Z[x])[y]` comes for free.
//! * [`lucas`]: Lucas sequences attached to the Pell equation
//!   `x² − (a²−1)y² = 1` and the congruences they satisfy.
//! * [`lab`]: evaluation scans, divisibility verdicts, prime-witness
//!   enumeration and related experiments.

pub mod error;
pub mod lab;
pub mod lucas;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use poly::{Degree, Poly, PolyRing, PseudoDivResult};
pub use ring::{
    DenominatorSet, FactorBudget, FactorReport, Integers, Localized, QuadInt, QuadRat, Quadratic,
    QuadraticField, Rationals, Ring, RingSpec,
};
