//! Words in the free monoid on a generator alphabet.

use crate::sym::Sym;
use serde::Serialize;
use std::fmt;

/// A product of generators, empty word = identity.
///
/// The derived ordering (length-insensitive, symbol by symbol) is only used
/// to keep term maps deterministic; presentations compare words in graded
/// lex order with respect to their own generator precedence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<Sym>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn gen(s: impl Into<Sym>) -> Self {
        Word(vec![s.into()])
    }

    pub fn from_names(names: &[&str]) -> Self {
        Word(names.iter().map(|n| Sym::from(*n)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn syms(&self) -> &[Sym] {
        &self.0
    }

    /// Does `pat` occur starting at position `at`?
    pub fn matches_at(&self, pat: &Word, at: usize) -> bool {
        at + pat.len() <= self.len() && self.0[at..at + pat.len()] == pat.0[..]
    }

    /// Replace `self[at .. at+len]`, returning the (prefix, suffix) context.
    pub fn split_around(&self, at: usize, len: usize) -> (Word, Word) {
        (
            Word(self.0[..at].to_vec()),
            Word(self.0[at + len..].to_vec()),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_and_match() {
        let ab = Word::from_names(&["a", "b"]);
        let bc = Word::from_names(&["b", "c"]);
        let abbc = ab.concat(&bc);
        assert_eq!(abbc.len(), 4);
        assert!(abbc.matches_at(&Word::from_names(&["b", "b"]), 1));
        assert!(!abbc.matches_at(&bc, 0));
        let (pre, post) = abbc.split_around(1, 2);
        assert_eq!(pre, Word::from_names(&["a"]));
        assert_eq!(post, Word::from_names(&["c"]));
    }

    #[test]
    fn display() {
        assert_eq!(Word::one().to_string(), "1");
        assert_eq!(Word::from_names(&["x0", "x1"]).to_string(), "x0*x1");
    }
}
