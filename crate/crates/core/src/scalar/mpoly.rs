//! Multivariate polynomials over the Gaussian rationals.
//!
//! Monomials are kept in graded lexicographic order so that leading terms,
//! display order, and GCD normalisation are all deterministic.

use super::gaussian::GaussRat;
use crate::sym::Sym;
use num::Zero;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A commutative monomial: sorted `(variable, exponent)` pairs, exponents > 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(Vec<(Sym, u32)>);

impl Mono {
    pub fn unit() -> Self {
        Mono(Vec::new())
    }

    pub fn var(s: Sym) -> Self {
        Mono(vec![(s, 1)])
    }

    pub fn var_pow(s: Sym, k: u32) -> Self {
        if k == 0 {
            Mono::unit()
        } else {
            Mono(vec![(s, k)])
        }
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, s: &Sym) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| v == s)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &Sym> {
        self.0.iter().map(|(v, _)| v)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => {
                        out.push((va.clone(), *ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb.clone(), *eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    out.extend(a.by_ref().cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(b.by_ref().cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Mono(out)
    }

    /// `self / other` when every exponent of `other` fits inside `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut b = other.0.iter().peekable();
        for (v, e) in &self.0 {
            match b.peek() {
                Some((vb, eb)) if vb == v => {
                    if eb > e {
                        return None;
                    }
                    if e - eb > 0 {
                        out.push((v.clone(), e - eb));
                    }
                    b.next();
                }
                Some((vb, _)) if vb < v => return None,
                _ => out.push((v.clone(), *e)),
            }
        }
        if b.next().is_some() {
            return None;
        }
        Some(Mono(out))
    }

    /// Drop a variable entirely (used when extracting univariate coefficients).
    fn without(&self, s: &Sym) -> Mono {
        Mono(self.0.iter().filter(|(v, _)| v != s).cloned().collect())
    }
}

/// Graded lex: compare total degree first, then earliest variable with the
/// larger exponent wins. Variables compare by name.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.0.iter(), other.0.iter());
        loop {
            match (a.next(), b.next()) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Polynomial as a sparse monomial -> coefficient map; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    terms: BTreeMap<Mono, GaussRat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(), c);
        }
        MPoly { terms }
    }

    pub fn var(s: Sym) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(s), GaussRat::one());
        MPoly { terms }
    }

    pub fn term(m: Mono, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::unit()))
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.terms.is_empty() {
            return Some(GaussRat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn vars(&self) -> BTreeSet<Sym> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().cloned())
            .collect()
    }

    /// Leading term in graded lex order.
    pub fn leading(&self) -> Option<(&Mono, &GaussRat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    fn insert_add(&mut self, m: Mono, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn conj(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Scale so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, lc)) => self.scale(&lc.inv()),
        }
    }

    /// Exact division: `Some(q)` with `self = q * other`, else `None`.
    pub fn div_exact(&self, other: &MPoly) -> Option<MPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut q = MPoly::zero();
        let mut r = self.clone();
        let (lm_b, lc_b) = other.leading().expect("nonzero divisor");
        while let Some((lm_r, lc_r)) = r.leading() {
            let m = lm_r.div(lm_b)?;
            let c = lc_r / lc_b;
            let t = MPoly::term(m, c);
            r = r.sub(&t.mul(other));
            q = q.add(&t);
        }
        Some(q)
    }

    pub fn degree_in(&self, x: &Sym) -> u32 {
        self.terms.keys().map(|m| m.exponent(x)).max().unwrap_or(0)
    }

    /// Coefficient of `x^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, x: &Sym, k: u32) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(x) == k {
                out.insert_add(m.without(x), c.clone());
            }
        }
        out
    }

    fn mul_var_pow(&self, x: &Sym, k: u32) -> MPoly {
        if k == 0 {
            return self.clone();
        }
        let shift = Mono::var_pow(x.clone(), k);
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&shift), c.clone()))
                .collect(),
        }
    }

    /// Substitute constants for (a subset of) the variables.
    pub fn substitute(&self, bindings: &BTreeMap<Sym, GaussRat>) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in &m.0 {
                match bindings.get(v) {
                    Some(val) => {
                        let mut p = GaussRat::one();
                        for _ in 0..*e {
                            p = &p * val;
                        }
                        coeff = &coeff * &p;
                    }
                    None => rest.push((v.clone(), *e)),
                }
            }
            out.insert_add(Mono(rest), coeff);
        }
        out
    }
}

/// Pseudo-remainder of `a` by `b` viewed as univariate polynomials in `x`.
/// The result equals `lc_x(b)^k * a mod b` for some `k`, which is all the
/// primitive PRS below needs.
fn prem(a: &MPoly, b: &MPoly, x: &Sym) -> MPoly {
    let db = b.degree_in(x);
    let lcb = b.coeff_in(x, db);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(x);
        if dr < db {
            break;
        }
        let lcr = r.coeff_in(x, dr);
        // r <- lcb*r - lcr*x^(dr-db)*b ; the x^dr terms cancel exactly.
        r = r.mul(&lcb).sub(&lcr.mul_var_pow(x, dr - db).mul(b));
    }
    r
}

/// Content of `a` with respect to `x`: the GCD of its `x`-coefficients.
fn content_in(a: &MPoly, x: &Sym) -> MPoly {
    let mut g = MPoly::zero();
    for k in 0..=a.degree_in(x) {
        let c = a.coeff_in(x, k);
        if !c.is_zero() {
            g = gcd(&g, &c);
        }
    }
    g
}

/// Monic GCD over the Gaussian rationals, via primitive pseudo-remainder
/// sequences. `gcd(0, b)` is the monic form of `b`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let vars: BTreeSet<Sym> = a.vars().union(&b.vars()).cloned().collect();
    let x = match vars.iter().next_back() {
        // Two nonzero constants: units in a field.
        None => return MPoly::one(),
        Some(x) => x.clone(),
    };
    let (da, db) = (a.degree_in(&x), b.degree_in(&x));
    // If x is missing from one side, the common divisor cannot involve x and
    // must divide every x-coefficient of the other side.
    if da == 0 {
        return gcd(a, &content_in(b, &x));
    }
    if db == 0 {
        return gcd(&content_in(a, &x), b);
    }
    let ca = content_in(a, &x);
    let cb = content_in(b, &x);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(&x) < q.degree_in(&x) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = prem(&p, &q, &x);
        if r.is_zero() {
            return c.mul(&q).monic();
        }
        if r.degree_in(&x) == 0 {
            // Coprime as univariate polynomials in x.
            return c.monic();
        }
        let cr = content_in(&r, &x);
        p = q;
        q = r.div_exact(&cr).expect("content divides");
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let s = if m.is_unit() {
                c.to_string()
            } else if c.is_one() {
                m.to_string()
            } else if (-c).is_one() {
                format!("-{m}")
            } else {
                let cs = c.to_string();
                // A genuinely complex coefficient needs parentheses in front
                // of a monomial.
                if !c.is_real() && !c.re.is_zero() {
                    format!("({cs})*{m}")
                } else {
                    format!("{cs}*{m}")
                }
            };
            parts.push(s);
        }
        let joined = parts.join(" + ").replace(" + -", " - ");
        write!(f, "{joined}")
    }
}
