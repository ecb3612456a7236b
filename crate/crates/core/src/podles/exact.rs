//! Exact arithmetic for the quantum-sphere representations.
//!
//! Eigenvalues live in the quadratic field Q(sqrt(4c+1)); the lowering
//! entries are square roots of such numbers and are kept symbolically as
//! `coef * sqrt(radicand)`. Addition of incommensurable radicals is
//! fallible by design — the shipped relation checks never need it, and a
//! failure would mean a residual that is not exactly zero.

use super::PodlesError;
use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Approximate a big rational in double precision without overflowing on
/// huge numerators or denominators: mantissas from the leading digits,
/// exponents balanced before dividing.
pub(crate) fn rat_to_f64(r: &BigRational) -> f64 {
    fn parts(x: &BigInt) -> (f64, i32) {
        let s = x.magnitude().to_string();
        let take = s.len().min(17);
        let lead: f64 = s[..take].parse().expect("digits parse");
        (lead, (s.len() - take) as i32)
    }
    if r.is_zero() {
        return 0.0;
    }
    let (mn, en) = parts(r.numer());
    let (md, ed) = parts(r.denom());
    let sign = if r.numer().sign() == Sign::Minus { -1.0 } else { 1.0 };
    sign * (mn / md) * 10f64.powi(en - ed)
}

/// The rational square root of `r`, when it has one.
pub(crate) fn perfect_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// An element `a + b*sqrt(d)` of Q(sqrt(d)), with `d` fixed per
/// representation. When `d` is a perfect square the value collapses to a
/// plain rational at construction, so `b != 0` implies irrationality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRat {
    a: BigRational,
    b: BigRational,
    d: BigRational,
}

impl QuadRat {
    pub fn new(a: BigRational, b: BigRational, d: BigRational) -> Self {
        match perfect_sqrt(&d) {
            Some(s) if !b.is_zero() => QuadRat {
                a: a + b * s,
                b: BigRational::zero(),
                d,
            },
            _ => QuadRat { a, b, d },
        }
    }

    pub fn from_rational(a: BigRational, d: BigRational) -> Self {
        QuadRat {
            a,
            b: BigRational::zero(),
            d,
        }
    }

    pub fn zero(d: BigRational) -> Self {
        Self::from_rational(BigRational::zero(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn discriminant(&self) -> &BigRational {
        &self.d
    }

    fn assert_same_field(&self, other: &Self) {
        debug_assert_eq!(self.d, other.d, "mixed quadratic fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        QuadRat {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        QuadRat {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        QuadRat {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        QuadRat {
            a: &self.a * &other.a + &self.b * &other.b * &self.d,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QuadRat {
            a: &self.a * k,
            b: &self.b * k,
            d: self.d.clone(),
        }
    }

    /// Exact sign via comparison of `a` against `-b*sqrt(d)`.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&BigRational::zero());
        }
        if self.a.is_zero() {
            return self.b.cmp(&BigRational::zero());
        }
        match (self.a.is_positive(), self.b.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            // opposite signs: the sign is decided by |a|^2 vs b^2*d,
            // carried by whichever side dominates
            (true, false) | (false, true) => {
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * &self.d;
                match lhs.cmp(&rhs) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => self.a.cmp(&BigRational::zero()),
                    Ordering::Less => self.b.cmp(&BigRational::zero()),
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * rat_to_f64(&self.d).sqrt()
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).sign()
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let radical = format!("sqrt({})", self.d);
        let b_part = if self.b.is_one() {
            radical
        } else if self.b == -BigRational::one() {
            format!("-{radical}")
        } else {
            format!("{}*{}", self.b, radical)
        };
        if self.a.is_zero() {
            write!(f, "{b_part}")
        } else if let Some(stripped) = b_part.strip_prefix('-') {
            write!(f, "{} - {stripped}", self.a)
        } else {
            write!(f, "{} + {}", self.a, b_part)
        }
    }
}

/// A real value that is either in Q(sqrt(d)) or of the form
/// `coef * sqrt(radicand)` with both parts in Q(sqrt(d)).
#[derive(Clone, Debug, PartialEq)]
pub enum ExactVal {
    Quad(QuadRat),
    Root { coef: QuadRat, radicand: QuadRat },
}

impl ExactVal {
    pub fn zero(d: BigRational) -> Self {
        ExactVal::Quad(QuadRat::zero(d))
    }

    /// `sqrt(q)` for `q >= 0`, collapsing to the rational root when one
    /// exists.
    pub fn sqrt_of(q: QuadRat) -> Self {
        if q.is_zero() {
            return ExactVal::Quad(q);
        }
        if q.is_rational() {
            if let Some(s) = perfect_sqrt(q.rational_part()) {
                return ExactVal::Quad(QuadRat::from_rational(s, q.discriminant().clone()));
            }
        }
        let one = QuadRat::from_rational(BigRational::one(), q.discriminant().clone());
        ExactVal::Root {
            coef: one,
            radicand: q,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactVal::Quad(q) => q.is_zero(),
            ExactVal::Root { coef, .. } => coef.is_zero(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (ExactVal::Quad(x), ExactVal::Quad(y)) => ExactVal::Quad(x.mul(y)),
            (ExactVal::Quad(x), ExactVal::Root { coef, radicand })
            | (ExactVal::Root { coef, radicand }, ExactVal::Quad(x)) => {
                let c = x.mul(coef);
                if c.is_zero() {
                    ExactVal::Quad(c)
                } else {
                    ExactVal::Root {
                        coef: c,
                        radicand: radicand.clone(),
                    }
                }
            }
            (
                ExactVal::Root { coef: c1, radicand: r1 },
                ExactVal::Root { coef: c2, radicand: r2 },
            ) => {
                let c = c1.mul(c2);
                if r1 == r2 {
                    ExactVal::Quad(c.mul(r1))
                } else if c.is_zero() {
                    ExactVal::Quad(c)
                } else {
                    ExactVal::Root {
                        coef: c,
                        radicand: r1.mul(r2),
                    }
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PodlesError> {
        match (self, other) {
            (ExactVal::Quad(x), ExactVal::Quad(y)) => Ok(ExactVal::Quad(x.add(y))),
            (ExactVal::Quad(x), r @ ExactVal::Root { .. })
            | (r @ ExactVal::Root { .. }, ExactVal::Quad(x)) => {
                if x.is_zero() {
                    Ok(r.clone())
                } else {
                    Err(PodlesError::Inexact(format!(
                        "cannot add rational {x} to radical term exactly"
                    )))
                }
            }
            (
                ExactVal::Root { coef: c1, radicand: r1 },
                ExactVal::Root { coef: c2, radicand: r2 },
            ) => {
                if r1 == r2 {
                    let c = c1.add(c2);
                    if c.is_zero() {
                        Ok(ExactVal::Quad(QuadRat::zero(c.discriminant().clone())))
                    } else {
                        Ok(ExactVal::Root {
                            coef: c,
                            radicand: r1.clone(),
                        })
                    }
                } else {
                    Err(PodlesError::Inexact(
                        "cannot add incommensurable radicals exactly".into(),
                    ))
                }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PodlesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            ExactVal::Quad(q) => ExactVal::Quad(q.neg()),
            ExactVal::Root { coef, radicand } => ExactVal::Root {
                coef: coef.neg(),
                radicand: radicand.clone(),
            },
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactVal::Quad(q) => q.to_f64(),
            ExactVal::Root { coef, radicand } => coef.to_f64() * radicand.to_f64().sqrt(),
        }
    }
}

/// A sparse exact matrix; all entries real.
#[derive(Clone, Debug)]
pub struct ExactMat {
    pub dim: usize,
    d: BigRational,
    entries: std::collections::BTreeMap<(usize, usize), ExactVal>,
}

impl ExactMat {
    pub fn zero(dim: usize, d: BigRational) -> Self {
        ExactMat {
            dim,
            d,
            entries: std::collections::BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize, d: BigRational) -> Self {
        let mut m = Self::zero(dim, d.clone());
        let one = ExactVal::Quad(QuadRat::from_rational(BigRational::one(), d));
        for i in 0..dim {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn diagonal(entries: Vec<QuadRat>, d: BigRational) -> Self {
        let mut m = Self::zero(entries.len(), d);
        for (i, q) in entries.into_iter().enumerate() {
            m.set(i, i, ExactVal::Quad(q));
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactVal) {
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> ExactVal {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| ExactVal::zero(self.d.clone()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &ExactVal)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// All entries are real, so the adjoint is the transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero(self.dim, self.d.clone());
        for (&(i, j), v) in &self.entries {
            m.set(j, i, v.clone());
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PodlesError> {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim, self.d.clone());
        for (&(i, k), a) in &self.entries {
            for j in 0..other.dim {
                let b = match other.entries.get(&(k, j)) {
                    Some(b) => b,
                    None => continue,
                };
                let cur = out.get(i, j);
                let v = cur.add(&a.mul(b))?;
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PodlesError> {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            let cur = out.get(i, j);
            out.set(i, j, cur.sub(v)?);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &QuadRat) -> Self {
        let mut out = Self::zero(self.dim, self.d.clone());
        let kv = ExactVal::Quad(k.clone());
        for (&(i, j), v) in &self.entries {
            out.set(i, j, v.mul(&kv));
        }
        out
    }

    /// Columns `0..=dim-2` — how the operator acts on every basis vector
    /// except the truncation edge.
    pub fn interior_is_zero(&self) -> bool {
        self.entries.keys().all(|&(_, j)| j == self.dim - 1)
    }

    /// Euclidean norm of the final column.
    pub fn edge_norm(&self) -> f64 {
        let mut s = 0.0;
        for (&(_, j), v) in &self.entries {
            if j == self.dim - 1 {
                let x = v.to_f64();
                s += x * x;
            }
        }
        s.sqrt()
    }

    /// Largest entry magnitude over the interior columns; for the banded
    /// residuals this equals their operator norm restricted to the interior.
    pub fn interior_norm(&self) -> f64 {
        self.entries
            .iter()
            .filter(|(&(_, j), _)| j != self.dim - 1)
            .map(|(_, v)| v.to_f64().abs())
            .fold(0.0, f64::max)
    }
}
