//! Free *-algebra words, noncommutative polynomials, and rewriting
//! presentations.

mod poly;
mod presentation;
mod word;

pub use poly::NCPoly;
pub use presentation::{
    AlgebraDef, CriticalPair, Presentation, RewriteRule, StarClosureReport,
};
pub use word::Word;

use crate::scalar::ScalarError;
use crate::sym::Sym;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("generator `{name}` is not declared ({context})")]
    UndeclaredGenerator { name: Sym, context: String },
    #[error("symbol `{0}` is declared twice")]
    DuplicateGenerator(Sym),
    #[error("star map is not an involution: `{0}` -> `{1}` -> `{2}`")]
    StarNotInvolution(Sym, Sym, Sym),
    #[error("relation `{0} = 0` forces a nonzero constant to vanish")]
    InconsistentRelation(String),
    #[error("relation is identically zero and defines no rewrite rule")]
    EmptyRelation,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
