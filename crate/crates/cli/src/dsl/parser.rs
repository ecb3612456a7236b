//! Recursive-descent parser for the `.alg` language.
//!
//! ```text
//! document    := 'algebra' IDENT '{' statement* '}'
//! statement   := 'params' ':' idents ';'
//!              | 'gens' ':' idents ';'
//!              | 'star' ':' IDENT '<->' IDENT ';'
//!              | 'grouplike' ':' IDENT ',' IDENT ';'
//!              | 'rel' ':' expr ';'
//!              | 'coproduct' ':' IDENT '->' tensor_expr ';'
//!              | 'counit' ':' IDENT '->' expr ';'
//!              | 'antipode' ':' IDENT '->' expr ';'
//! tensor_expr := ['-'] tensor_term (('+'|'-') tensor_term)*
//! tensor_term := term ('(x)' term)+
//! expr        := ['-'] term (('+'|'-') term)*
//! term        := factor (('*'|'/') factor)*
//! factor      := atom ['^' ['-'] INT]
//! atom        := INT | 'i' | IDENT | '(' expr ')'
//! ```
//!
//! Scalars are rational literals, `i`, and declared parameters; there are
//! no floating-point literals.

use std::fmt;

use super::ast::{AlgebraDoc, Expr, TensorExpr, TensorTerm};
use super::lexer::{lex, Pos, Spanned, Tok};

#[derive(Clone, Debug)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_document(text: &str) -> Result<AlgebraDoc, ParseError> {
    let toks = lex(text).map_err(|e| ParseError {
        pos: e.pos,
        message: e.message,
    })?;
    let mut p = Parser { toks, at: 0 };
    let doc = p.document()?;
    p.expect_eof()?;
    Ok(doc)
}

/// Parse a standalone expression, as used by `--expr` flags.
pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text).map_err(|e| ParseError {
        pos: e.pos,
        message: e.message,
    })?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.at.min(self.toks.len() - 1)]
    }

    fn next(&mut self) -> Spanned {
        let t = self.peek().clone();
        if self.at < self.toks.len() - 1 {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.peek().pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, wanted: Tok) -> Result<Spanned, ParseError> {
        if self.peek().tok == wanted {
            Ok(self.next())
        } else {
            self.err(format!("expected {wanted}, found {}", self.peek().tok))
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        if self.peek().tok == Tok::Eof {
            Ok(())
        } else {
            self.err(format!("expected end of input, found {}", self.peek().tok))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        match self.peek().tok.clone() {
            Tok::Ident(name) => {
                let pos = self.peek().pos;
                self.next();
                Ok((name, pos))
            }
            other => self.err(format!("expected {what}, found {other}")),
        }
    }

    fn document(&mut self) -> Result<AlgebraDoc, ParseError> {
        let (kw, _) = self.ident("keyword `algebra`")?;
        if kw != "algebra" {
            return self.err(format!("expected keyword `algebra`, found `{kw}`"));
        }
        let name = self.algebra_name()?;
        self.expect(Tok::LBrace)?;
        let mut doc = AlgebraDoc {
            name,
            params: Vec::new(),
            gens: Vec::new(),
            stars: Vec::new(),
            grouplikes: Vec::new(),
            rels: Vec::new(),
            coproducts: Vec::new(),
            counits: Vec::new(),
            antipodes: Vec::new(),
        };
        loop {
            if self.peek().tok == Tok::RBrace {
                self.next();
                break;
            }
            self.statement(&mut doc)?;
        }
        Ok(doc)
    }

    fn statement(&mut self, doc: &mut AlgebraDoc) -> Result<(), ParseError> {
        let (head, pos) = self.ident(
            "statement keyword (`params`, `gens`, `star`, `grouplike`, `rel`, `coproduct`, `counit`, `antipode`)",
        )?;
        self.expect(Tok::Colon)?;
        match head.as_str() {
            "params" => {
                let list = self.ident_list()?;
                doc.params.extend(list);
            }
            "gens" => {
                let list = self.ident_list()?;
                doc.gens.extend(list);
            }
            "star" => {
                let (a, p) = self.ident("generator name")?;
                self.expect(Tok::BiArrow)?;
                let (b, _) = self.ident("generator name")?;
                doc.stars.push((a, b, p));
            }
            "grouplike" => {
                let (a, p) = self.ident("generator name")?;
                self.expect(Tok::Comma)?;
                let (b, _) = self.ident("generator name")?;
                doc.grouplikes.push((a, b, p));
            }
            "rel" => {
                let e = self.expr()?;
                doc.rels.push(e);
            }
            "coproduct" => {
                let (g, p) = self.ident("generator name")?;
                self.expect(Tok::Arrow)?;
                let t = self.tensor_expr()?;
                doc.coproducts.push((g, t, p));
            }
            "counit" => {
                let (g, p) = self.ident("generator name")?;
                self.expect(Tok::Arrow)?;
                let e = self.expr()?;
                doc.counits.push((g, e, p));
            }
            "antipode" => {
                let (g, p) = self.ident("generator name")?;
                self.expect(Tok::Arrow)?;
                let e = self.expr()?;
                doc.antipodes.push((g, e, p));
            }
            other => {
                return Err(ParseError {
                    pos,
                    message: format!("unknown statement keyword `{other}`"),
                });
            }
        }
        self.expect(Tok::Semi)?;
        Ok(())
    }

    /// Algebra names may contain hyphens (`kminkowski4d-paper-bracket`);
    /// segments after a `-` can be identifiers or plain numbers.
    fn algebra_name(&mut self) -> Result<String, ParseError> {
        let (mut name, _) = self.ident("algebra name")?;
        while self.peek().tok == Tok::Minus {
            self.next();
            match self.peek().tok.clone() {
                Tok::Ident(seg) => {
                    self.next();
                    name.push('-');
                    name.push_str(&seg);
                }
                Tok::Int(n) => {
                    self.next();
                    name.push('-');
                    name.push_str(&n.to_string());
                }
                other => {
                    return self.err(format!("expected a name segment after `-`, found {other}"))
                }
            }
        }
        Ok(name)
    }

    fn ident_list(&mut self) -> Result<Vec<(String, Pos)>, ParseError> {
        let mut out = vec![self.ident("name")?];
        while self.peek().tok == Tok::Comma {
            self.next();
            out.push(self.ident("name")?);
        }
        Ok(out)
    }

    fn tensor_expr(&mut self) -> Result<TensorExpr, ParseError> {
        let mut terms = Vec::new();
        let mut negated = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        loop {
            terms.push(self.tensor_term(negated)?);
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    negated = false;
                }
                Tok::Minus => {
                    self.next();
                    negated = true;
                }
                _ => break,
            }
        }
        Ok(TensorExpr { terms })
    }

    fn tensor_term(&mut self, negated: bool) -> Result<TensorTerm, ParseError> {
        let pos = self.peek().pos;
        let mut legs = vec![self.term()?];
        while self.peek().tok == Tok::TensorSep {
            self.next();
            legs.push(self.term()?);
        }
        if legs.len() < 2 {
            return Err(ParseError {
                pos,
                message: "tensor term needs at least two legs separated by `(x)`".into(),
            });
        }
        Ok(TensorTerm { negated, legs, pos })
    }

    pub(super) fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.peek().tok == Tok::Minus {
            self.next();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    let pos = self.peek().pos;
                    self.next();
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?), pos);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            let pos = self.peek().pos;
            self.next();
            let negative = if self.peek().tok == Tok::Minus {
                self.next();
                true
            } else {
                false
            };
            match self.peek().tok {
                Tok::Int(n) => {
                    self.next();
                    let exp = if negative { -n } else { n };
                    Ok(Expr::Pow(Box::new(base), exp, pos))
                }
                ref other => Err(ParseError {
                    pos: self.peek().pos,
                    message: format!("expected integer exponent after `^`, found {other}"),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.peek().pos;
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.next();
                Ok(Expr::Int(n))
            }
            Tok::Ident(name) => {
                self.next();
                if name == "i" {
                    Ok(Expr::Imag)
                } else {
                    Ok(Expr::Ident(name, pos))
                }
            }
            Tok::LParen => {
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(ParseError {
                pos,
                message: format!("expected a number, symbol, or `(`, found {other}"),
            }),
        }
    }
}
