//! Parsed form of an `.alg` document, before symbol resolution.

use super::lexer::Pos;

#[derive(Clone, Debug)]
pub enum Expr {
    Int(i64),
    /// The imaginary unit, written `i`.
    Imag,
    /// Parameter or generator reference, resolved by the builder.
    Ident(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, i64, Pos),
}

/// Sum of two-leg tensor terms; each term is a sign and its leg expressions.
#[derive(Clone, Debug)]
pub struct TensorExpr {
    pub terms: Vec<TensorTerm>,
}

#[derive(Clone, Debug)]
pub struct TensorTerm {
    pub negated: bool,
    pub legs: Vec<Expr>,
    pub pos: Pos,
}

#[derive(Clone, Debug)]
pub struct AlgebraDoc {
    pub name: String,
    pub params: Vec<(String, Pos)>,
    pub gens: Vec<(String, Pos)>,
    pub stars: Vec<(String, String, Pos)>,
    pub grouplikes: Vec<(String, String, Pos)>,
    pub rels: Vec<Expr>,
    pub coproducts: Vec<(String, TensorExpr, Pos)>,
    pub counits: Vec<(String, Expr, Pos)>,
    pub antipodes: Vec<(String, Expr, Pos)>,
}
