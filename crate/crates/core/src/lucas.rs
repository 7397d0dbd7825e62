//! Lucas sequences `X_n(a)`, `Y_n(a)` solving `x² − (a²−1)y² = 1`.
//!
//! `X_0 = 1, X_1 = a, Y_0 = 0, Y_1 = 1` and both satisfy
//! `U_{n+1} = 2a·U_n − U_{n−1}`. At `a = 1` the recurrence degenerates to
//! `X_n = 1, Y_n = n`, which is also used as the closed form there.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::{Integers, Ring};

/// `X_0..=X_upto` and `Y_0..=Y_upto`, numeric (`T = BigInt`) or symbolic in
/// the parameter (`T = Poly<BigInt>`, `a` is `None`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasTable<T> {
    pub a: Option<BigInt>,
    pub xs: Vec<T>,
    pub ys: Vec<T>,
}

impl<T> LucasTable<T> {
    pub fn upto(&self) -> usize {
        self.xs.len() - 1
    }
}

pub fn lucas_table(a: &BigInt, upto: usize) -> LucasTable<BigInt> {
    let (xs, ys) = if a.is_one() {
        ((0..=upto).map(|_| BigInt::one()).collect(), (0..=upto).map(BigInt::from).collect())
    } else {
        let two_a = a * 2;
        let step = |prev: &BigInt, cur: &BigInt| &two_a * cur - prev;
        (
            run_recurrence(BigInt::one(), a.clone(), upto, step),
            run_recurrence(BigInt::zero(), BigInt::one(), upto, step),
        )
    };
    LucasTable {
        a: Some(a.clone()),
        xs,
        ys,
    }
}

/// The table as polynomials in the parameter, named `var`.
pub fn lucas_poly_table(upto: usize, var: &str) -> LucasTable<Poly<BigInt>> {
    let zx = PolyRing::new(Integers, var);
    let two_x = zx.from_ints([0, 2]);
    let step = |prev: &Poly<BigInt>, cur: &Poly<BigInt>| zx.sub(&zx.mul(&two_x, cur), prev);
    LucasTable {
        a: None,
        xs: run_recurrence(zx.one(), zx.x(), upto, step),
        ys: run_recurrence(zx.zero(), zx.one(), upto, step),
    }
}

fn run_recurrence<T: Clone>(first: T, second: T, upto: usize, step: impl Fn(&T, &T) -> T) -> Vec<T> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(first);
    if upto >= 1 {
        out.push(second);
    }
    for n in 2..=upto {
        let next = step(&out[n - 2], &out[n - 1]);
        out.push(next);
    }
    out
}

pub fn lucas_eval(n: usize, a: &BigInt) -> (BigInt, BigInt) {
    if a.is_one() {
        return (BigInt::one(), BigInt::from(n));
    }
    let mut t = lucas_table(a, n);
    (t.xs.pop().unwrap(), t.ys.pop().unwrap())
}

pub fn lucas_poly(n: usize) -> (Poly<BigInt>, Poly<BigInt>) {
    let mut t = lucas_poly_table(n, "x");
    (t.xs.pop().unwrap(), t.ys.pop().unwrap())
}

/// `X_n(a)² − (a²−1)·Y_n(a)² = 1`.
pub fn pell_verify(n: usize, a: &BigInt) -> bool {
    let (x, y) = lucas_eval(n, a);
    let d = a * a - 1;
    &x * &x - d * &y * &y == BigInt::one()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CongruenceKind {
    /// `Y_n(a) ≡ n (mod a−1)`
    Jr1,
    /// `X_n(a) − (a−k)Y_n(a) ≡ kⁿ (mod 2ak−k²−1)`
    Jr2,
    /// `Y_{2n}(a) ≡ 0 (mod X_n(a))`
    Jr3,
    /// `Y_{4ni+m} ≡ Y_m` and `Y_{4ni+2n+m} ≡ −Y_m (mod X_n)`
    ShiftPlus,
    /// `Y_{4ni−m} ≡ −Y_m` and `Y_{4ni+2n−m} ≡ Y_m (mod X_n)`
    ShiftMinus,
}

impl CongruenceKind {
    pub fn name(self) -> &'static str {
        match self {
            CongruenceKind::Jr1 => "jr1",
            CongruenceKind::Jr2 => "jr2",
            CongruenceKind::Jr3 => "jr3",
            CongruenceKind::ShiftPlus => "shift+",
            CongruenceKind::ShiftMinus => "shift-",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CongruenceParams {
    pub n: usize,
    pub k: Option<u64>,
    pub i: Option<usize>,
    pub m: Option<usize>,
}

impl CongruenceParams {
    pub fn new(n: usize) -> Self {
        CongruenceParams {
            n,
            ..Default::default()
        }
    }

    pub fn with_k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_shift(mut self, i: usize, m: usize) -> Self {
        self.i = Some(i);
        self.m = Some(m);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceOutcome {
    Holds,
    Fails,
    /// The modulus is zero, so the congruence says nothing.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceVerdict<T> {
    pub kind: CongruenceKind,
    pub params: CongruenceParams,
    /// `None` for symbolic checks.
    pub a: Option<BigInt>,
    pub modulus: T,
    /// One residue per congruence; the shift kinds check two.
    pub residues: Vec<T>,
    pub outcome: CongruenceOutcome,
    /// The modulus is a unit, so the congruence holds trivially.
    pub trivial_modulus: bool,
}

impl<T> CongruenceVerdict<T> {
    pub fn holds(&self) -> bool {
        self.outcome == CongruenceOutcome::Holds
    }
}

fn shift_indices(kind: CongruenceKind, p: &CongruenceParams) -> Result<(usize, usize, usize, usize)> {
    let n = p.n;
    let i = p.i.ok_or_else(|| Error::Precondition("shift congruences need i".into()))?;
    let m = p.m.ok_or_else(|| Error::Precondition("shift congruences need m".into()))?;
    if i < 1 {
        return Err(Error::Precondition("shift congruences need i ≥ 1".into()));
    }
    let base = 4 * n * i;
    let (first, second) = match kind {
        CongruenceKind::ShiftPlus => (base + m, base + 2 * n + m),
        _ => {
            if m > base {
                return Err(Error::Precondition(format!("index 4ni − m = {base} − {m} is negative")));
            }
            (base - m, base + 2 * n - m)
        }
    };
    Ok((n, m, first, second))
}

/// Largest Lucas index a congruence touches.
fn max_index(kind: CongruenceKind, p: &CongruenceParams) -> Result<usize> {
    let max_index = match kind {
        CongruenceKind::Jr1 | CongruenceKind::Jr2 => {
            if kind == CongruenceKind::Jr2 && p.k.is_none() {
                return Err(Error::Precondition("JR2 needs k".into()));
            }
            p.n
        }
        CongruenceKind::Jr3 => 2 * p.n,
        CongruenceKind::ShiftPlus | CongruenceKind::ShiftMinus => {
            let (n, m, first, second) = shift_indices(kind, p)?;
            n.max(m).max(first).max(second)
        }
    };
    Ok(max_index)
}

/// Builds `(modulus, [lhs…])` from a table, with the arithmetic supplied by
/// `ring` so the same code serves numbers and polynomials.
fn congruence_terms<R: Ring>(
    ring: &R,
    kind: CongruenceKind,
    p: &CongruenceParams,
    a: &R::Elem,
    xs: &[R::Elem],
    ys: &[R::Elem],
) -> Result<(R::Elem, Vec<R::Elem>)> {
    let n = p.n;
    let int = |v: u64| ring.from_int(&BigInt::from(v));
    Ok(match kind {
        CongruenceKind::Jr1 => (ring.sub(a, &ring.one()), vec![ring.sub(&ys[n], &int(n as u64))]),
        CongruenceKind::Jr2 => {
            let k = p.k.unwrap();
            let kk = int(k);
            // 2ak − k² − 1
            let k_sq_plus_one = ring.from_int(&(BigInt::from(k).pow(2) + 1));
            let modulus = ring.sub(&ring.mul(&ring.mul(&int(2), a), &kk), &k_sq_plus_one);
            let kn = ring.from_int(&num_traits::pow(BigInt::from(k), n));
            let lhs = ring.sub(&ring.sub(&xs[n], &ring.mul(&ring.sub(a, &kk), &ys[n])), &kn);
            (modulus, vec![lhs])
        }
        CongruenceKind::Jr3 => (xs[n].clone(), vec![ys[2 * n].clone()]),
        CongruenceKind::ShiftPlus | CongruenceKind::ShiftMinus => {
            let (_, m, first, second) = shift_indices(kind, p)?;
            let (r1, r2) = if kind == CongruenceKind::ShiftPlus {
                (ring.sub(&ys[first], &ys[m]), ring.add(&ys[second], &ys[m]))
            } else {
                (ring.add(&ys[first], &ys[m]), ring.sub(&ys[second], &ys[m]))
            };
            (xs[n].clone(), vec![r1, r2])
        }
    })
}

/// Checks one congruence numerically at parameter `a`. Residues are reduced
/// into `[0, |modulus|)`.
pub fn congruence_check(kind: CongruenceKind, params: &CongruenceParams, a: &BigInt) -> Result<CongruenceVerdict<BigInt>> {
    let max_index = max_index(kind, params)?;
    let table = lucas_table(a, max_index);
    let (modulus, lhs) = congruence_terms(&Integers, kind, params, a, &table.xs, &table.ys)?;
    let (residues, outcome) = if modulus.is_zero() {
        (lhs, CongruenceOutcome::Vacuous)
    } else {
        let m = modulus.abs();
        let residues: Vec<BigInt> = lhs.iter().map(|v| v.mod_floor(&m)).collect();
        let outcome = if residues.iter().all(Zero::is_zero) {
            CongruenceOutcome::Holds
        } else {
            CongruenceOutcome::Fails
        };
        (residues, outcome)
    };
    Ok(CongruenceVerdict {
        kind,
        params: params.clone(),
        a: Some(a.clone()),
        trivial_modulus: modulus.abs().is_one(),
        modulus,
        residues,
        outcome,
    })
}

/// Checks the polynomial form of a congruence: the modulus polynomial must
/// divide each left-hand side in `Z[x]`, certified by exact division.
pub fn congruence_check_symbolic(kind: CongruenceKind, params: &CongruenceParams) -> Result<CongruenceVerdict<Poly<BigInt>>> {
    let max_index = max_index(kind, params)?;
    let zx = PolyRing::new(Integers, "x");
    let table = lucas_poly_table(max_index, "x");
    let (modulus, lhs) = congruence_terms(&zx, kind, params, &zx.x(), &table.xs, &table.ys)?;
    if modulus.is_zero() {
        return Ok(CongruenceVerdict {
            kind,
            params: params.clone(),
            a: None,
            modulus,
            residues: lhs,
            outcome: CongruenceOutcome::Vacuous,
            trivial_modulus: false,
        });
    }
    let mut residues = Vec::with_capacity(lhs.len());
    for f in &lhs {
        residues.push(symbolic_residue(&zx, &modulus, f)?);
    }
    let outcome = if residues.iter().all(Poly::is_zero) {
        CongruenceOutcome::Holds
    } else {
        CongruenceOutcome::Fails
    };
    Ok(CongruenceVerdict {
        kind,
        params: params.clone(),
        a: None,
        trivial_modulus: zx.is_unit(&modulus)?,
        modulus,
        residues,
        outcome,
    })
}

/// Zero iff `g | f` in `Z[x]`; otherwise a nonzero witness of the failure.
fn symbolic_residue(zx: &PolyRing<Integers>, g: &Poly<BigInt>, f: &Poly<BigInt>) -> Result<Poly<BigInt>> {
    if zx.divides_exact(g, f)?.is_some() {
        return Ok(Poly::zero());
    }
    let residue = if g.degree() == crate::poly::Degree::Finite(0) {
        let c = &g.coeffs()[0];
        zx.poly(f.coeffs().iter().map(|a| a.mod_floor(&c.abs())).collect())
    } else {
        zx.pseudo_divide(f, g)?.remainder
    };
    // a zero pseudo-remainder can still hide a content obstruction
    Ok(if residue.is_zero() { f.clone() } else { residue })
}

/// Smallest `y ∈ [1, y_cap]` with `d·y² + 1` a perfect square.
pub fn pell_fundamental(d: &BigInt, y_cap: u64) -> Result<Option<(BigInt, BigInt)>> {
    if d < &BigInt::from(2) {
        return Err(Error::Precondition(format!("d must be at least 2, got {d}")));
    }
    if d.sqrt().pow(2) == *d {
        return Err(Error::DIsSquare(d.clone()));
    }
    for y in 1..=y_cap {
        let y = BigInt::from(y);
        let v: BigInt = d * &y * &y + 1;
        let x = v.sqrt();
        if &x * &x == v {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}
