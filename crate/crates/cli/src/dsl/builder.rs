//! Resolve a parsed [`AlgebraDoc`] into a rewriting presentation and
//! optional Hopf structure, with named-symbol diagnostics.

use std::collections::BTreeSet;
use std::fmt;

use hopflab_core::hopf::{HopfData, TensorPoly};
use hopflab_core::{AlgebraDef, NCPoly, Presentation, Scalar, Sym};

use super::ast::{AlgebraDoc, Expr, TensorExpr};
use super::lexer::Pos;

#[derive(Clone, Debug)]
pub struct BuildError {
    pub pos: Option<Pos>,
    pub message: String,
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pos {
            Some(p) => write!(f, "{p}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for BuildError {}

fn fail<T>(pos: Option<Pos>, message: impl Into<String>) -> Result<T, BuildError> {
    Err(BuildError {
        pos,
        message: message.into(),
    })
}

/// A fully built algebra: presentation plus Hopf data when the document
/// declares any coalgebra structure.
pub struct BuiltAlgebra {
    pub presentation: Presentation,
    pub hopf: Option<HopfData>,
}

/// Symbol environment for expression evaluation.
pub struct Env {
    pub params: BTreeSet<String>,
    pub gens: BTreeSet<String>,
}

impl Env {
    pub fn of_presentation(pres: &Presentation) -> Env {
        Env {
            params: pres.params().iter().map(|s| s.to_string()).collect(),
            gens: pres.gens().iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Expression value: scalar or noncommutative polynomial in the free algebra.
enum Val {
    S(Scalar),
    P(NCPoly),
}

impl Val {
    fn into_poly(self) -> NCPoly {
        match self {
            Val::S(s) => NCPoly::constant(s),
            Val::P(p) => p,
        }
    }
}

pub fn eval_poly(e: &Expr, env: &Env) -> Result<NCPoly, BuildError> {
    Ok(eval(e, env)?.into_poly())
}

pub fn eval_scalar(e: &Expr, env: &Env) -> Result<Scalar, BuildError> {
    match eval(e, env)? {
        Val::S(s) => Ok(s),
        Val::P(p) => {
            // a polynomial with only the empty word is still a scalar
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (None, _) => Ok(Scalar::zero()),
                (Some((w, c)), None) if w.is_empty() => Ok(c.clone()),
                _ => fail(None, "expected a scalar expression, found generator terms"),
            }
        }
    }
}

fn eval(e: &Expr, env: &Env) -> Result<Val, BuildError> {
    match e {
        Expr::Int(n) => Ok(Val::S(Scalar::from_int(*n))),
        Expr::Imag => Ok(Val::S(Scalar::i())),
        Expr::Ident(name, pos) => {
            if env.gens.contains(name) {
                Ok(Val::P(NCPoly::gen(name)))
            } else if env.params.contains(name) {
                Ok(Val::S(Scalar::var(name)))
            } else {
                fail(Some(*pos), format!("undeclared symbol `{name}`"))
            }
        }
        Expr::Neg(inner) => Ok(match eval(inner, env)? {
            Val::S(s) => Val::S(s.neg()),
            Val::P(p) => Val::P(p.neg()),
        }),
        Expr::Add(a, b) => binop(eval(a, env)?, eval(b, env)?, false),
        Expr::Sub(a, b) => binop(eval(a, env)?, eval(b, env)?, true),
        Expr::Mul(a, b) => Ok(match (eval(a, env)?, eval(b, env)?) {
            (Val::S(x), Val::S(y)) => Val::S(x.mul(&y)),
            (Val::S(x), Val::P(q)) => Val::P(q.scale(&x)),
            (Val::P(p), Val::S(y)) => Val::P(p.scale(&y)),
            (Val::P(p), Val::P(q)) => Val::P(p.free_mul(&q)),
        }),
        Expr::Div(a, b, pos) => {
            let num = eval(a, env)?;
            let den = match eval(b, env)? {
                Val::S(s) => s,
                Val::P(p) => {
                    return fail(
                        Some(*pos),
                        format!("divisor must be a scalar, found `{p}`"),
                    )
                }
            };
            if den.is_zero() {
                return fail(Some(*pos), "division by zero");
            }
            let inv = Scalar::one().div(&den).expect("nonzero scalar inverts");
            Ok(match num {
                Val::S(s) => Val::S(s.mul(&inv)),
                Val::P(p) => Val::P(p.scale(&inv)),
            })
        }
        Expr::Pow(base, exp, pos) => match eval(base, env)? {
            Val::S(s) => {
                if *exp < 0 && s.is_zero() {
                    return fail(Some(*pos), "zero cannot be raised to a negative power");
                }
                Ok(Val::S(s.pow(*exp)))
            }
            Val::P(p) => {
                if *exp < 0 {
                    return fail(
                        Some(*pos),
                        "generator expressions only take nonnegative powers",
                    );
                }
                let mut acc = NCPoly::one();
                for _ in 0..*exp {
                    acc = acc.free_mul(&p);
                }
                Ok(Val::P(acc))
            }
        },
    }
}

fn binop(a: Val, b: Val, subtract: bool) -> Result<Val, BuildError> {
    Ok(match (a, b) {
        (Val::S(x), Val::S(y)) => Val::S(if subtract { x.sub(&y) } else { x.add(&y) }),
        (x, y) => {
            let p = x.into_poly();
            let q = y.into_poly();
            Val::P(if subtract { p.sub(&q) } else { p.add(&q) })
        }
    })
}

fn eval_tensor(t: &TensorExpr, env: &Env) -> Result<TensorPoly, BuildError> {
    let mut out = TensorPoly::zero(2);
    for term in &t.terms {
        if term.legs.len() != 2 {
            return fail(
                Some(term.pos),
                format!("coproducts have exactly two legs, found {}", term.legs.len()),
            );
        }
        let left = eval_poly(&term.legs[0], env)?;
        let right = eval_poly(&term.legs[1], env)?;
        let sign = if term.negated {
            Scalar::one().neg()
        } else {
            Scalar::one()
        };
        for (w1, c1) in left.terms() {
            for (w2, c2) in right.terms() {
                out.insert_add(
                    vec![w1.clone(), w2.clone()],
                    c1.mul(c2).mul(&sign),
                );
            }
        }
    }
    Ok(out)
}

pub fn build_algebra(doc: &AlgebraDoc) -> Result<BuiltAlgebra, BuildError> {
    // --- symbol tables -----------------------------------------------------
    let mut seen = BTreeSet::new();
    for (name, pos) in doc.params.iter().chain(doc.gens.iter()) {
        if name == "i" || name == "x" {
            return fail(
                Some(*pos),
                format!("`{name}` is reserved (imaginary unit / tensor separator)"),
            );
        }
        if !seen.insert(name.clone()) {
            return fail(Some(*pos), format!("symbol `{name}` is declared twice"));
        }
    }
    if doc.gens.is_empty() {
        return fail(None, "an algebra needs at least one generator");
    }
    let env = Env {
        params: doc.params.iter().map(|(n, _)| n.clone()).collect(),
        gens: doc.gens.iter().map(|(n, _)| n.clone()).collect(),
    };
    let check_gen = |name: &String, pos: Pos| -> Result<(), BuildError> {
        if env.gens.contains(name) {
            Ok(())
        } else {
            fail(Some(pos), format!("undeclared generator `{name}`"))
        }
    };
    for (a, b, pos) in doc.stars.iter().chain(doc.grouplikes.iter()) {
        check_gen(a, *pos)?;
        check_gen(b, *pos)?;
    }

    // --- presentation ------------------------------------------------------
    let relations: Vec<NCPoly> = doc
        .rels
        .iter()
        .map(|e| eval_poly(e, &env))
        .collect::<Result<_, _>>()?;
    let def = AlgebraDef {
        name: doc.name.clone(),
        params: doc.params.iter().map(|(n, _)| Sym::from(n.as_str())).collect(),
        gens: doc.gens.iter().map(|(n, _)| Sym::from(n.as_str())).collect(),
        star_pairs: doc
            .stars
            .iter()
            .map(|(a, b, _)| (Sym::from(a.as_str()), Sym::from(b.as_str())))
            .collect(),
        grouplike_pairs: doc
            .grouplikes
            .iter()
            .map(|(a, b, _)| (Sym::from(a.as_str()), Sym::from(b.as_str())))
            .collect(),
        relations,
    };
    let presentation = Presentation::build(def)
        .map_err(|e| BuildError {
            pos: None,
            message: format!("cannot build presentation: {e}"),
        })?;

    // --- hopf structure ----------------------------------------------------
    let has_hopf = !doc.coproducts.is_empty()
        || !doc.counits.is_empty()
        || !doc.antipodes.is_empty()
        || !doc.grouplikes.is_empty();
    if !has_hopf {
        return Ok(BuiltAlgebra {
            presentation,
            hopf: None,
        });
    }
    let grouplike_names: BTreeSet<&String> = doc
        .grouplikes
        .iter()
        .flat_map(|(a, b, _)| [a, b])
        .collect();
    let mut hopf = HopfData::new();
    for (g, ginv, _) in &doc.grouplikes {
        hopf.set_grouplike(g.as_str(), ginv.as_str());
        hopf.set_grouplike(ginv.as_str(), g.as_str());
    }
    let unique = |items: &[(String, Pos)], what: &str| -> Result<(), BuildError> {
        let mut seen = BTreeSet::new();
        for (g, pos) in items {
            if !seen.insert(g.clone()) {
                return fail(Some(*pos), format!("duplicate {what} for generator `{g}`"));
            }
            if grouplike_names.contains(g) {
                return fail(
                    Some(*pos),
                    format!("generator `{g}` is grouplike; its {what} is implied"),
                );
            }
        }
        Ok(())
    };
    unique(
        &doc.coproducts
            .iter()
            .map(|(g, _, p)| (g.clone(), *p))
            .collect::<Vec<_>>(),
        "coproduct",
    )?;
    unique(
        &doc.counits
            .iter()
            .map(|(g, _, p)| (g.clone(), *p))
            .collect::<Vec<_>>(),
        "counit",
    )?;
    unique(
        &doc.antipodes
            .iter()
            .map(|(g, _, p)| (g.clone(), *p))
            .collect::<Vec<_>>(),
        "antipode",
    )?;
    for (g, _, pos) in doc.coproducts.iter() {
        check_gen(g, *pos)?;
    }
    for (g, _, pos) in doc.counits.iter().chain(doc.antipodes.iter()) {
        check_gen(g, *pos)?;
    }
    for (name, _) in &doc.gens {
        if grouplike_names.contains(name) {
            continue;
        }
        let cop = doc.coproducts.iter().find(|(g, _, _)| g == name);
        let cou = doc.counits.iter().find(|(g, _, _)| g == name);
        let ant = doc.antipodes.iter().find(|(g, _, _)| g == name);
        match (cop, cou, ant) {
            (Some((_, t, _)), Some((_, ce, _)), Some((_, ae, _))) => {
                let coproduct = eval_tensor(t, &env)?;
                let counit = eval_scalar(ce, &env)?;
                let antipode = eval_poly(ae, &env)?;
                hopf.set(name.as_str(), coproduct, counit, antipode);
            }
            (None, None, None) => {
                return fail(
                    None,
                    format!(
                        "generator `{name}` has no coproduct/counit/antipode; \
                         declare all three or none at all"
                    ),
                );
            }
            _ => {
                return fail(
                    None,
                    format!(
                        "generator `{name}` has partial Hopf data; \
                         coproduct, counit, and antipode must all be given"
                    ),
                );
            }
        }
    }
    hopf.validate(&presentation).map_err(|e| BuildError {
        pos: None,
        message: format!("incomplete Hopf data: {e}"),
    })?;
    Ok(BuiltAlgebra {
        presentation,
        hopf: Some(hopf),
    })
}

/// Evaluate a standalone expression against a presentation's symbols and
/// return it as a polynomial in the free algebra (not yet normal-ordered).
pub fn expr_for_presentation(text: &str, pres: &Presentation) -> Result<NCPoly, BuildError> {
    let ast = super::parser::parse_expression(text).map_err(|e| BuildError {
        pos: Some(e.pos),
        message: e.message,
    })?;
    eval_poly(&ast, &Env::of_presentation(pres))
}
