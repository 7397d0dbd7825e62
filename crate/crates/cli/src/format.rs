//! Canonical text for ring elements and polynomials. Everything printed here
//! parses back to the same value.

use divlab_core::{Integers, Localized, Poly, PolyRing, QuadInt, QuadRat, Quadratic, QuadraticField, Rationals, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A coefficient split into sign and magnitude text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coeff {
    pub negative: bool,
    /// Text of the absolute value. Self-delimiting, so it can be followed by
    /// `*x` as is.
    pub body: String,
    /// The absolute value is 1 and can be elided before a monomial.
    pub unit: bool,
}

pub trait Notation: Ring {
    fn render(&self, e: &Self::Elem) -> Coeff;
}

fn int_coeff(n: &BigInt) -> Coeff {
    Coeff {
        negative: n.is_negative(),
        body: n.magnitude().to_string(),
        unit: n.magnitude().is_one(),
    }
}

fn rat_coeff(q: &BigRational) -> Coeff {
    let a = q.abs();
    let body = if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    };
    Coeff {
        negative: q.is_negative(),
        body,
        unit: a.is_one(),
    }
}

fn radical(d: i64) -> String {
    if d == -1 {
        "i".into()
    } else {
        format!("sqrt({d})")
    }
}

/// `x + y·√d` from already rendered parts.
fn quad_coeff(x: Coeff, x_zero: bool, y: Coeff, y_zero: bool, d: i64) -> Coeff {
    if y_zero {
        return x;
    }
    let unit = radical(d);
    let y_text = if y.unit { unit } else { format!("{}*{unit}", y.body) };
    if x_zero {
        return Coeff {
            negative: y.negative,
            body: y_text,
            unit: false,
        };
    }
    // both parts negative: pull the sign out front
    let negative = x.negative && y.negative;
    let x_sign = if x.negative && !negative { "-" } else { "" };
    let op = if y.negative == negative { "+" } else { "-" };
    Coeff {
        negative,
        body: format!("({x_sign}{} {op} {y_text})", x.body),
        unit: false,
    }
}

impl Notation for Integers {
    fn render(&self, e: &BigInt) -> Coeff {
        int_coeff(e)
    }
}

impl Notation for Rationals {
    fn render(&self, e: &BigRational) -> Coeff {
        rat_coeff(e)
    }
}

impl Notation for Localized {
    fn render(&self, e: &BigRational) -> Coeff {
        rat_coeff(e)
    }
}

impl Notation for Quadratic {
    fn render(&self, e: &QuadInt) -> Coeff {
        quad_coeff(int_coeff(&e.x), e.x.is_zero(), int_coeff(&e.y), e.y.is_zero(), self.d())
    }
}

impl Notation for QuadraticField {
    fn render(&self, e: &QuadRat) -> Coeff {
        quad_coeff(rat_coeff(&e.x), e.x.is_zero(), rat_coeff(&e.y), e.y.is_zero(), self.d())
    }
}

/// Signed text of a single element.
pub fn format_elem<R: Notation>(ring: &R, e: &R::Elem) -> String {
    let c = ring.render(e);
    if c.negative {
        format!("-{}", c.body)
    } else {
        c.body
    }
}

fn power(var: &str, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{k}")),
    }
}

fn join_terms(terms: Vec<(Coeff, Vec<String>)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, monomial)) in terms.into_iter().enumerate() {
        let sign = match (i, c.negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sign);
        let mut factors = Vec::new();
        if monomial.is_empty() || !c.unit {
            factors.push(c.body);
        }
        factors.extend(monomial);
        out.push_str(&factors.join("*"));
    }
    out
}

fn univariate_terms<R: Notation>(ring: &PolyRing<R>, f: &Poly<R::Elem>, tail: Option<String>) -> Vec<(Coeff, Vec<String>)> {
    let base = ring.base();
    f.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !base.is_zero(c))
        .map(|(k, c)| {
            let monomial = power(ring.var(), k).into_iter().chain(tail.clone()).collect();
            (base.render(c), monomial)
        })
        .collect()
}

/// Descending powers, zero terms omitted, unit coefficients elided.
pub fn format_poly<R: Notation>(ring: &PolyRing<R>, f: &Poly<R::Elem>) -> String {
    join_terms(univariate_terms(ring, f, None))
}

/// Terms ordered by descending power of the outer variable, then of the
/// inner one.
pub fn format_bivariate<R: Notation>(ring: &PolyRing<PolyRing<R>>, f: &Poly<Poly<R::Elem>>) -> String {
    let inner = ring.base();
    let terms = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(j, c)| univariate_terms(inner, c, power(ring.var(), j)))
        .collect();
    join_terms(terms)
}
