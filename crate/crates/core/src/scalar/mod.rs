//! Exact scalar arithmetic for coefficient fields.
//!
//! A [`Scalar`] is a rational function over the Gaussian rationals in a set of
//! named parameters. Values are kept in a canonical form (numerator and
//! denominator coprime, denominator monic in graded lex order), so structural
//! equality coincides with mathematical equality.

pub mod gaussian;
pub mod mpoly;

pub use gaussian::GaussRat;
pub use mpoly::{gcd, MPoly, Mono};

use crate::sym::Sym;
use num::BigRational;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("denominator vanishes after substituting parameters in {0}")]
    DenominatorVanishes(String),
}

/// Canonical rational function `num / den`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    num: MPoly,
    den: MPoly,
}

impl Scalar {
    fn make(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "scalar with zero denominator");
        if num.is_zero() {
            return Scalar {
                num: MPoly::zero(),
                den: MPoly::one(),
            };
        }
        let g = gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    pub fn zero() -> Self {
        Scalar {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn i() -> Self {
        Scalar {
            num: MPoly::constant(GaussRat::i()),
            den: MPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            num: MPoly::constant(GaussRat::from_int(n)),
            den: MPoly::one(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar {
            num: MPoly::constant(GaussRat::from_ratio(num, den)),
            den: MPoly::one(),
        }
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Scalar {
            num: MPoly::constant(c),
            den: MPoly::one(),
        }
    }

    pub fn var(name: &str) -> Self {
        Scalar {
            num: MPoly::var(Sym::from(name)),
            den: MPoly::one(),
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        Scalar {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        Scalar::make(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        Scalar::make(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::make(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// Integer powers; negative exponents invert (panics on zero base).
    pub fn pow(&self, k: i64) -> Scalar {
        if k < 0 {
            assert!(!self.is_zero(), "negative power of zero scalar");
            let inv = Scalar::make(self.den.clone(), self.num.clone());
            return inv.pow(-k);
        }
        let mut out = Scalar::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Coefficient-wise complex conjugation (parameters are treated as real).
    pub fn conj(&self) -> Scalar {
        Scalar::make(self.num.conj(), self.den.conj())
    }

    pub fn vars(&self) -> BTreeSet<Sym> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    /// Bind (a subset of) the parameters to exact values.
    pub fn substitute(&self, bindings: &BTreeMap<Sym, GaussRat>) -> Result<Scalar, ScalarError> {
        let den = self.den.substitute(bindings);
        if den.is_zero() {
            return Err(ScalarError::DenominatorVanishes(self.to_string()));
        }
        Ok(Scalar::make(self.num.substitute(bindings), den))
    }

    /// The value as a Gaussian rational, when no parameters remain.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n / &d)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let g = self.as_gauss()?;
        g.is_real().then_some(g.re)
    }

    /// `(re, im)` as floats, when no parameters remain.
    pub fn to_complex_f64(&self) -> Option<(f64, f64)> {
        Some(self.as_gauss()?.to_f64())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // parenthesize whenever the bare string would re-associate around
        // the division: internal +/- (complex constants like 1+i), a
        // nested /, or a * in the denominator
        let internal_sign =
            |s: &str| s.get(1..).is_some_and(|t| t.contains(['+', '-']));
        let num = {
            let s = self.num.to_string();
            if self.num.num_terms() > 1 || s.contains('/') || internal_sign(&s) {
                format!("({s})")
            } else {
                s
            }
        };
        let den = {
            let s = self.den.to_string();
            if self.den.num_terms() > 1 || s.contains(['*', '/']) || internal_sign(&s) {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{num}/{den}")
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
