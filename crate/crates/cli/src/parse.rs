//! Polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | base ('^' uint)?
//! base   := uint | 'x' | 'y' | 'i' | 'sqrt' '(' '-'? uint ')' | '(' expr ')'
//! ```
//!
//! Unary minus binds looser than `^`, so `-x^2` is `-(x^2)`. A divisor must
//! be constant; `a/b` is how rational coefficients are written.

use std::fmt;

use divlab_core::{Integers, Localized, Poly, PolyRing, Quadratic, Rationals, Ring};
use num_bigint::BigInt;
use thiserror::Error;

/// Exponents above this are rejected before expansion.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("ring mismatch at offset {pos}: {detail}")]
    RingMismatch { pos: usize, detail: String },
    #[error("variable arity at offset {pos}: y is not allowed here")]
    VariableArity { pos: usize },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::RingMismatch { pos, .. } | ParseError::VariableArity { pos } => {
                *pos
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Num(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            other => {
                return Err(ParseError::Syntax {
                    pos: start,
                    expected: "a number, variable, operator or parenthesis".into(),
                    found: format!("'{other}'"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

/// Expression tree with source offsets where evaluation can fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// `sqrt(d)`; `i` is `sqrt(-1)`.
    Sqrt { d: i64, pos: usize },
    Var { name: char, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div { num: Box<Expr>, den: Box<Expr>, pos: usize },
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Offset of the first use of `y`, if any.
    pub fn y_position(&self) -> Option<usize> {
        match self {
            Expr::Var { name: 'y', pos } => Some(*pos),
            Expr::Int(_) | Expr::Sqrt { .. } | Expr::Var { .. } => None,
            Expr::Neg(e) | Expr::Pow(e, _) => e.y_position(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.y_position().or_else(|| b.y_position()),
            Expr::Div { num, den, .. } => num.y_position().or_else(|| den.y_position()),
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            expected: expected.into(),
            found: self.peek().to_string(),
        })
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(expected)
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    let (pos, _) = self.bump();
                    lhs = Expr::Div {
                        num: Box::new(lhs),
                        den: Box::new(self.factor()?),
                        pos,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump().1 {
            Tok::Num(n) => match u32::try_from(&n) {
                Ok(e) if e <= MAX_EXPONENT => Ok(Expr::Pow(Box::new(base), e)),
                _ => Err(ParseError::Syntax {
                    pos,
                    expected: format!("an exponent of at most {MAX_EXPONENT}"),
                    found: format!("number {n}"),
                }),
            },
            other => Err(ParseError::Syntax {
                pos,
                expected: "a nonnegative integer exponent".into(),
                found: other.to_string(),
            }),
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        const EXPECTED: &str = "a number, 'x', 'y', 'i', 'sqrt' or '('";
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "x" | "y" => {
                    self.bump();
                    Ok(Expr::Var {
                        name: name.chars().next().unwrap(),
                        pos,
                    })
                }
                "i" => {
                    self.bump();
                    Ok(Expr::Sqrt { d: -1, pos })
                }
                "sqrt" => {
                    self.bump();
                    self.expect(Tok::LParen, "'('")?;
                    let negative = *self.peek() == Tok::Minus;
                    if negative {
                        self.bump();
                    }
                    let Tok::Num(n) = self.peek().clone() else {
                        return self.fail("an integer radicand");
                    };
                    let d = i64::try_from(&n).ok().filter(|d| *d <= i64::MAX / 2);
                    let Some(d) = d else {
                        return self.fail("a radicand that fits in 62 bits");
                    };
                    self.bump();
                    self.expect(Tok::RParen, "')'")?;
                    Ok(Expr::Sqrt {
                        d: if negative { -d } else { d },
                        pos,
                    })
                }
                _ => self.fail(EXPECTED),
            },
            _ => self.fail(EXPECTED),
        }
    }
}

/// Parses `text` into an expression tree without interpreting it in a ring.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("an operator or end of input");
    }
    Ok(e)
}

/// Coefficient rings the parser can build literals in.
pub trait Literal: Ring {
    /// The element `sqrt(d)`, if the ring has it.
    fn sqrt_literal(&self, _d: i64) -> Option<Self::Elem> {
        None
    }
}

impl Literal for Integers {}
impl Literal for Rationals {}
impl Literal for Localized {}

impl Literal for Quadratic {
    fn sqrt_literal(&self, d: i64) -> Option<Self::Elem> {
        (d == self.d()).then(|| divlab_core::QuadInt::new(0, 1))
    }
}

type Bi<R> = PolyRing<PolyRing<R>>;
type BiPoly<R> = Poly<Poly<<R as Ring>::Elem>>;

/// The constant of a nonzero polynomial of degree 0 in both variables.
fn constant_of<R: Ring>(f: &BiPoly<R>) -> Option<R::Elem> {
    match f.coeffs() {
        [c] => match c.coeffs() {
            [k] => Some(k.clone()),
            _ => None,
        },
        _ => None,
    }
}

fn eval<R: Literal>(ring: &Bi<R>, e: &Expr) -> Result<BiPoly<R>, ParseError> {
    let inner = ring.base();
    let base = inner.base();
    Ok(match e {
        Expr::Int(n) => ring.constant(inner.constant(base.from_int(n))),
        Expr::Sqrt { d, pos } => {
            let Some(s) = base.sqrt_literal(*d) else {
                let name = if *d == -1 { "i".to_string() } else { format!("sqrt({d})") };
                return Err(ParseError::RingMismatch {
                    pos: *pos,
                    detail: format!("{name} is not in {}", base.spec()),
                });
            };
            ring.constant(inner.constant(s))
        }
        Expr::Var { name: 'y', .. } => ring.x(),
        Expr::Var { .. } => ring.constant(inner.x()),
        Expr::Neg(a) => ring.neg(&eval(ring, a)?),
        Expr::Add(a, b) => ring.add(&eval(ring, a)?, &eval(ring, b)?),
        Expr::Sub(a, b) => ring.sub(&eval(ring, a)?, &eval(ring, b)?),
        Expr::Mul(a, b) => ring.mul(&eval(ring, a)?, &eval(ring, b)?),
        Expr::Pow(a, k) => ring.pow(&eval(ring, a)?, *k),
        Expr::Div { num, den, pos } => {
            let n = eval(ring, num)?;
            let d = eval(ring, den)?;
            if d.is_zero() {
                return Err(ParseError::RingMismatch {
                    pos: *pos,
                    detail: "division by zero".into(),
                });
            }
            let Some(c) = constant_of::<R>(&d) else {
                return Err(ParseError::RingMismatch {
                    pos: *pos,
                    detail: "divisor must be a constant".into(),
                });
            };
            let mut outer = Vec::with_capacity(n.coeffs().len());
            for row in n.coeffs() {
                let mut cs = Vec::with_capacity(row.coeffs().len());
                for a in row.coeffs() {
                    match base.div_exact(a, &c) {
                        Ok(Some(q)) => cs.push(q),
                        _ => {
                            return Err(ParseError::RingMismatch {
                                pos: *pos,
                                detail: format!("quotient is not in {}", base.spec()),
                            })
                        }
                    }
                }
                outer.push(inner.poly(cs));
            }
            ring.poly(outer)
        }
    })
}

fn tower<R: Literal>(ring: &PolyRing<R>) -> Bi<R> {
    PolyRing::new(ring.clone(), "y")
}

/// Parses a univariate polynomial in `x`.
pub fn parse_poly<R: Literal>(text: &str, ring: &PolyRing<R>) -> Result<Poly<R::Elem>, ParseError> {
    let e = parse_expr(text)?;
    if let Some(pos) = e.y_position() {
        return Err(ParseError::VariableArity { pos });
    }
    let bi = eval(&tower(ring), &e)?;
    Ok(bi.into_coeffs().into_iter().next().unwrap_or_else(Poly::zero))
}

/// Parses a polynomial in `x` and `y` as an element of `(R[x])[y]`.
pub fn parse_bivariate<R: Literal>(text: &str, ring: &Bi<R>) -> Result<BiPoly<R>, ParseError> {
    eval(ring, &parse_expr(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zx() -> PolyRing<Integers> {
        PolyRing::new(Integers, "x")
    }

    #[test]
    fn integer_polynomials() {
        let r = zx();
        assert_eq!(parse_poly("16*x^4 - 12*x^2 - 4", &r).unwrap(), r.from_ints([-4, 0, -12, 0, 16]));
        assert_eq!(parse_poly("x^0", &r).unwrap(), r.one());
        assert_eq!(parse_poly(" (x+1) * (x-1) ", &r).unwrap(), r.from_ints([-1, 0, 1]));
        assert_eq!(parse_poly("-x^2", &r).unwrap(), r.from_ints([0, 0, -1]));
        assert_eq!(parse_poly("--x", &r).unwrap(), r.x());
        assert_eq!(parse_poly("2^10", &r).unwrap(), r.from_ints([1024]));
        assert_eq!(parse_poly("(4*x^2 - 2)/2", &r).unwrap(), r.from_ints([-1, 0, 2]));
    }

    #[test]
    fn gaussian_literals() {
        let r = PolyRing::new(Quadratic::gaussian(), "x");
        let q = divlab_core::QuadInt::new;
        let f = parse_poly("(1 - i)*x^2 + 3*i*x + 1", &r).unwrap();
        assert_eq!(f, r.poly(vec![q(1, 0), q(0, 3), q(1, -1)]));
        assert_eq!(parse_poly("sqrt(-1)", &r).unwrap(), parse_poly("i", &r).unwrap());
        assert_eq!(parse_poly("i*i", &r).unwrap(), r.from_ints([-1]));
    }

    #[test]
    fn rational_coefficients() {
        let r = PolyRing::new(Rationals, "x");
        let f = parse_poly("1/5*x^5 - 1/5*x", &r).unwrap();
        let fifth = num_rational::BigRational::new(1.into(), 5.into());
        assert_eq!(f.coeff(5), Some(&fifth));
        assert_eq!(f.coeff(1), Some(&-fifth));
    }

    #[test]
    fn ring_mismatches() {
        let r = zx();
        assert!(matches!(parse_poly("1/2*x", &r), Err(ParseError::RingMismatch { pos: 1, .. })));
        assert!(matches!(parse_poly("x + i", &r), Err(ParseError::RingMismatch { pos: 4, .. })));
        assert!(matches!(parse_poly("x/x", &r), Err(ParseError::RingMismatch { .. })));
        assert!(matches!(parse_poly("x/0", &r), Err(ParseError::RingMismatch { .. })));
        let sqrt2 = PolyRing::new(Quadratic::new(2).unwrap(), "x");
        assert!(matches!(parse_poly("sqrt(3)", &sqrt2), Err(ParseError::RingMismatch { .. })));
        let loc = PolyRing::new(Localized::new("1/n:6".parse().unwrap()).unwrap(), "x");
        assert!(parse_poly("x/3 + 1/4", &loc).is_ok());
        assert!(matches!(parse_poly("x/5", &loc), Err(ParseError::RingMismatch { .. })));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let r = zx();
        let cases = [("", 0), ("x +", 3), ("2x", 1), ("x^-1", 2), ("(x + 1", 6), ("x $ 1", 2), ("x^y", 2), ("x ^ 2 ^ 2", 6)];
        for (text, pos) in cases {
            match parse_poly(text, &r) {
                Err(e @ ParseError::Syntax { .. }) => assert_eq!(e.pos(), pos, "{text}: {e}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn y_needs_bivariate_mode() {
        let r = zx();
        assert_eq!(parse_poly("x + y", &r), Err(ParseError::VariableArity { pos: 4 }));
        let bi = PolyRing::new(r.clone(), "y");
        let f = parse_bivariate("x*y + 1", &bi).unwrap();
        assert_eq!(f, bi.poly(vec![r.one(), r.x()]));
    }
}
