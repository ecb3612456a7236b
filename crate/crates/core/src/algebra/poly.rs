//! Noncommutative polynomials: finite scalar combinations of words.

use super::word::Word;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Element of the free algebra over [`Scalar`], stored as word -> coefficient
/// with zero coefficients pruned.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::word(Word::one())
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(w, Scalar::one())
    }

    pub fn gen(name: &str) -> Self {
        NCPoly::word(Word::gen(name))
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::term(Word::one(), c)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in it {
            p.insert_add(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn insert_add(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert_add(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Bind (a subset of) the scalar parameters in every coefficient.
    pub fn substitute(
        &self,
        bindings: &std::collections::BTreeMap<crate::sym::Sym, crate::scalar::GaussRat>,
    ) -> Result<NCPoly, crate::scalar::ScalarError> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.insert_add(w.clone(), c.substitute(bindings)?);
        }
        Ok(out)
    }

    /// Product in the free algebra (no rewriting).
    pub fn free_mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.insert_add(wa.concat(wb), ca.mul(cb));
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    /// Context-free rendering in the internal term order; presentations
    /// provide precedence-aware formatting.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format_term(w, c))
            .collect();
        write!(f, "{}", parts.join(" + ").replace(" + -", " - "))
    }
}

/// Render one `coefficient * word` factor pair.
pub(crate) fn format_term(w: &Word, c: &Scalar) -> String {
    if w.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return w.to_string();
    }
    if c.neg().is_one() {
        return format!("-{w}");
    }
    let cs = c.to_string();
    let needs_parens = cs.contains('/')
        || cs.contains(" + ")
        || cs.contains(" - ")
        || (cs.contains('+') && !cs.starts_with('('));
    if needs_parens {
        format!("({cs})*{w}")
    } else {
        format!("{cs}*{w}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = NCPoly::gen("a");
        let b = NCPoly::gen("b");
        let ab = a.free_mul(&b);
        let ba = b.free_mul(&a);
        assert_ne!(ab, ba, "free product must not commute");
        let comm = ab.sub(&ba);
        assert_eq!(comm.num_terms(), 2);
        assert!(comm.sub(&comm).is_zero());
        let sum = a.add(&a);
        assert_eq!(sum.coeff(&Word::gen("a")), Scalar::from_int(2));
    }

    #[test]
    fn display_terms() {
        let p = NCPoly::gen("a")
            .scale(&Scalar::i().mul(&Scalar::var("kappa")).neg())
            .add(&NCPoly::one());
        let s = p.to_string();
        assert!(s.contains("1"), "identity term: {s}");
        assert!(s.contains("i*kappa*a") || s.contains("-i*kappa*a"), "{s}");
    }
}
