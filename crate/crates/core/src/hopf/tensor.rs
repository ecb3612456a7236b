//! Tensor-product elements: scalar combinations of word tuples.

use crate::algebra::{AlgebraError, NCPoly, Presentation, Word};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Element of the `legs`-fold tensor power of a free algebra, with each leg
/// kept in normal form by the owning presentation. Zero coefficients are
/// pruned; the leg count is fixed for a given value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPoly {
    legs: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorPoly {
    pub fn zero(legs: usize) -> Self {
        TensorPoly {
            legs,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn unit(legs: usize) -> Self {
        TensorPoly::term(vec![Word::one(); legs], Scalar::one())
    }

    pub fn term(words: Vec<Word>, c: Scalar) -> Self {
        let legs = words.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(words, c);
        }
        TensorPoly { legs, terms }
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn insert_add(&mut self, words: Vec<Word>, c: Scalar) {
        assert_eq!(words.len(), self.legs, "tensor leg count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&words) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&words);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(words, c);
            }
        }
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        assert_eq!(self.legs, other.legs, "tensor leg count mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert_add(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> TensorPoly {
        TensorPoly {
            legs: self.legs,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero(self.legs);
        }
        TensorPoly {
            legs: self.legs,
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Leg-wise product: concatenate words in each leg, then renormalise.
    pub fn mul(&self, other: &TensorPoly, pres: &Presentation) -> Result<TensorPoly, AlgebraError> {
        assert_eq!(self.legs, other.legs, "tensor leg count mismatch");
        let mut out = TensorPoly::zero(self.legs);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let words: Vec<Word> = wa
                    .iter()
                    .zip(wb)
                    .map(|(a, b)| a.concat(b))
                    .collect();
                out.insert_add(words, ca.mul(cb));
            }
        }
        out.reduce(pres)
    }

    /// Normal-order every leg; a leg whose normal form has several words
    /// fans the term out into several tensor terms.
    pub fn reduce(&self, pres: &Presentation) -> Result<TensorPoly, AlgebraError> {
        let mut out = TensorPoly::zero(self.legs);
        for (words, c) in &self.terms {
            // expand leg by leg
            let mut partial: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c.clone())];
            for w in words {
                let nf = pres.reduce(&NCPoly::word(w.clone()))?;
                let mut next = Vec::new();
                for (prefix, k) in &partial {
                    for (nw, nc) in nf.terms() {
                        let mut p = prefix.clone();
                        p.push(nw.clone());
                        next.push((p, k.mul(nc)));
                    }
                }
                partial = next;
            }
            for (words, k) in partial {
                out.insert_add(words, k);
            }
        }
        Ok(out)
    }

    /// Replace leg `leg` by the two legs of a coproduct-style expansion,
    /// given by `expand`; used to build `(Δ ⊗ id)Δ` and friends.
    pub fn expand_leg<E>(&self, leg: usize, mut expand: E) -> Result<TensorPoly, super::HopfError>
    where
        E: FnMut(&Word) -> Result<TensorPoly, super::HopfError>,
    {
        assert!(leg < self.legs, "leg index out of range");
        let mut out = TensorPoly::zero(self.legs + 1);
        for (words, c) in &self.terms {
            let inner = expand(&words[leg])?;
            debug_assert_eq!(inner.legs(), 2);
            for (pair, k) in inner.terms() {
                let mut w = Vec::with_capacity(self.legs + 1);
                w.extend(words[..leg].iter().cloned());
                w.extend(pair.iter().cloned());
                w.extend(words[leg + 1..].iter().cloned());
                out.insert_add(w, c.mul(k));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (words, c) in &self.terms {
            let tensor = words
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(" (x) ");
            let part = if c.is_one() {
                tensor
            } else if c.neg().is_one() {
                format!("-{tensor}")
            } else {
                let cs = c.to_string();
                if cs.contains('/') || cs.contains('+') || cs.contains(" - ") {
                    format!("({cs})*{tensor}")
                } else {
                    format!("{cs}*{tensor}")
                }
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + ").replace(" + -", " - "))
    }
}
