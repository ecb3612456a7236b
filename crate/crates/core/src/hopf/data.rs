//! Coalgebra structure data and the Hopf-axiom checker.

use super::tensor::TensorPoly;
use super::HopfError;
use crate::algebra::{NCPoly, Presentation, Word};
use crate::scalar::Scalar;
use crate::sym::Sym;
use std::collections::BTreeMap;
use std::fmt;

/// Per-generator coproduct, counit, and antipode. Extended to the whole
/// algebra multiplicatively (Δ, ε) and anti-multiplicatively (S).
#[derive(Clone, Debug, Default)]
pub struct HopfData {
    coproduct: BTreeMap<Sym, TensorPoly>,
    counit: BTreeMap<Sym, Scalar>,
    antipode: BTreeMap<Sym, NCPoly>,
}

impl HopfData {
    pub fn new() -> Self {
        HopfData::default()
    }

    pub fn set(&mut self, g: impl Into<Sym>, coproduct: TensorPoly, counit: Scalar, antipode: NCPoly) {
        let g = g.into();
        assert_eq!(coproduct.legs(), 2, "coproduct must have two legs");
        self.coproduct.insert(g.clone(), coproduct);
        self.counit.insert(g.clone(), counit);
        self.antipode.insert(g, antipode);
    }

    /// Δg = g⊗1 + 1⊗g, ε(g) = 0, S(g) = −g.
    pub fn set_primitive(&mut self, g: impl Into<Sym>) {
        let g = g.into();
        let d = TensorPoly::term(vec![Word::gen(g.clone()), Word::one()], Scalar::one()).add(
            &TensorPoly::term(vec![Word::one(), Word::gen(g.clone())], Scalar::one()),
        );
        self.set(g.clone(), d, Scalar::zero(), NCPoly::word(Word::gen(g)).neg());
    }

    /// Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
    pub fn set_grouplike(&mut self, g: impl Into<Sym>, inverse: impl Into<Sym>) {
        let g = g.into();
        let d = TensorPoly::term(vec![Word::gen(g.clone()), Word::gen(g.clone())], Scalar::one());
        self.set(g, d, Scalar::one(), NCPoly::word(Word::gen(inverse.into())));
    }

    pub fn has(&self, g: &Sym) -> bool {
        self.coproduct.contains_key(g)
    }

    pub fn coproduct_of(&self, g: &Sym) -> Result<&TensorPoly, HopfError> {
        self.coproduct
            .get(g)
            .ok_or_else(|| HopfError::MissingStructure(g.clone()))
    }

    pub fn counit_of(&self, g: &Sym) -> Result<&Scalar, HopfError> {
        self.counit
            .get(g)
            .ok_or_else(|| HopfError::MissingStructure(g.clone()))
    }

    pub fn antipode_of(&self, g: &Sym) -> Result<&NCPoly, HopfError> {
        self.antipode
            .get(g)
            .ok_or_else(|| HopfError::MissingStructure(g.clone()))
    }

    /// Every generator of `pres` must carry all three structure maps.
    pub fn validate(&self, pres: &Presentation) -> Result<(), HopfError> {
        for g in pres.gens() {
            self.coproduct_of(g)?;
            self.counit_of(g)?;
            self.antipode_of(g)?;
        }
        Ok(())
    }
}

/// Multiplicative extension of the generator coproducts; legs normal ordered.
pub fn coproduct(p: &NCPoly, pres: &Presentation, hopf: &HopfData) -> Result<TensorPoly, HopfError> {
    let mut out = TensorPoly::zero(2);
    for (w, c) in p.terms() {
        let mut acc = TensorPoly::unit(2);
        for g in w.syms() {
            acc = acc.mul(hopf.coproduct_of(g)?, pres)?;
        }
        out = out.add(&acc.scale(c));
    }
    Ok(out)
}

/// Multiplicative extension of the counit; ε(1) = 1.
pub fn counit(p: &NCPoly, _pres: &Presentation, hopf: &HopfData) -> Result<Scalar, HopfError> {
    let mut out = Scalar::zero();
    for (w, c) in p.terms() {
        let mut acc = c.clone();
        for g in w.syms() {
            acc = acc.mul(hopf.counit_of(g)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Anti-multiplicative extension of the antipode, normal ordered.
pub fn antipode(p: &NCPoly, pres: &Presentation, hopf: &HopfData) -> Result<NCPoly, HopfError> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NCPoly::one();
        for g in w.syms().iter().rev() {
            acc = pres.multiply(&acc, hopf.antipode_of(g)?)?;
        }
        out = out.add(&acc.scale(c));
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    CoproductRespectsRelations,
    CounitRespectsRelations,
    AntipodeRespectsRelations,
    Coassociativity,
    CounitLaw,
    AntipodeLaw,
}

pub const ALL_AXIOMS: [Axiom; 6] = [
    Axiom::CoproductRespectsRelations,
    Axiom::CounitRespectsRelations,
    Axiom::AntipodeRespectsRelations,
    Axiom::Coassociativity,
    Axiom::CounitLaw,
    Axiom::AntipodeLaw,
];

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::CoproductRespectsRelations => "coproduct-respects-relations",
            Axiom::CounitRespectsRelations => "counit-respects-relations",
            Axiom::AntipodeRespectsRelations => "antipode-respects-relations",
            Axiom::Coassociativity => "coassociativity",
            Axiom::CounitLaw => "counit-law",
            Axiom::AntipodeLaw => "antipode-law",
        };
        write!(f, "{s}")
    }
}

/// A concrete nonzero residual: the element it came from, and the residual
/// in whatever space the axiom lives in.
#[derive(Clone, Debug)]
pub struct Witness {
    pub element: String,
    pub residual: Residual,
}

#[derive(Clone, Debug)]
pub enum Residual {
    Poly(NCPoly),
    Tensor(TensorPoly),
    Value(Scalar),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Poly(p) => write!(f, "{p}"),
            Residual::Tensor(t) => write!(f, "{t}"),
            Residual::Value(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub witnesses: Vec<Witness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub degree: u32,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("all axioms are always present")
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.axiom)
            .collect()
    }
}

/// Every word over the alphabet with length in `1..=max_len`, in graded lex
/// order of the generator list.
pub fn words_up_to(gens: &[Sym], max_len: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer = vec![Word::one()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in gens {
                next.push(w.concat(&Word::gen(g.clone())));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Verify the Hopf axioms on all generator words up to `degree`:
/// Δ/ε/S send each defining relation to zero, Δ is coassociative, and the
/// counit and antipode laws hold. Equalities are decided by exact normal-form
/// comparison; every failure carries the offending element and residual.
pub fn check_hopf(
    pres: &Presentation,
    hopf: &HopfData,
    degree: u32,
) -> Result<AxiomReport, HopfError> {
    if degree == 0 {
        return Err(HopfError::DegreeMustBePositive);
    }
    hopf.validate(pres)?;

    let mut checks: Vec<AxiomCheck> = ALL_AXIOMS
        .iter()
        .map(|&axiom| AxiomCheck {
            axiom,
            witnesses: Vec::new(),
        })
        .collect();
    let mut witness = |axiom: Axiom, element: String, residual: Residual| {
        checks
            .iter_mut()
            .find(|c| c.axiom == axiom)
            .expect("axiom present")
            .witnesses
            .push(Witness { element, residual });
    };

    // structure maps respect the defining relations
    for rule in pres.rules() {
        let lhs = NCPoly::word(rule.lhs.clone());
        let rel = format!("{} - ({})", rule.lhs, pres.format_poly(&rule.rhs));

        let d = coproduct(&lhs, pres, hopf)?.sub(&coproduct(&rule.rhs, pres, hopf)?);
        if !d.is_zero() {
            witness(Axiom::CoproductRespectsRelations, rel.clone(), Residual::Tensor(d));
        }
        let e = counit(&lhs, pres, hopf)?.sub(&counit(&rule.rhs, pres, hopf)?);
        if !e.is_zero() {
            witness(Axiom::CounitRespectsRelations, rel.clone(), Residual::Value(e));
        }
        let s = antipode(&lhs, pres, hopf)?.sub(&antipode(&rule.rhs, pres, hopf)?);
        if !s.is_zero() {
            witness(Axiom::AntipodeRespectsRelations, rel.clone(), Residual::Poly(s));
        }
    }

    // pointwise laws on all words up to the requested degree
    for w in words_up_to(pres.gens(), degree) {
        let p = NCPoly::word(w.clone());
        let dw = coproduct(&p, pres, hopf)?;

        // (Δ⊗id)Δ = (id⊗Δ)Δ
        let left = dw.expand_leg(0, |leg| {
            coproduct(&NCPoly::word(leg.clone()), pres, hopf)
        })?;
        let right = dw.expand_leg(1, |leg| {
            coproduct(&NCPoly::word(leg.clone()), pres, hopf)
        })?;
        let coassoc = left.sub(&right);
        if !coassoc.is_zero() {
            witness(Axiom::Coassociativity, w.to_string(), Residual::Tensor(coassoc));
        }

        // (ε⊗id)Δ = id = (id⊗ε)Δ
        let nf = pres.reduce(&p)?;
        let mut left = NCPoly::zero();
        let mut right = NCPoly::zero();
        for (legs, c) in dw.terms() {
            let e0 = counit(&NCPoly::word(legs[0].clone()), pres, hopf)?;
            let e1 = counit(&NCPoly::word(legs[1].clone()), pres, hopf)?;
            left.insert_add(legs[1].clone(), c.mul(&e0));
            right.insert_add(legs[0].clone(), c.mul(&e1));
        }
        let lres = pres.reduce(&left)?.sub(&nf);
        if !lres.is_zero() {
            witness(Axiom::CounitLaw, format!("(eps (x) id) delta({w})"), Residual::Poly(lres));
        }
        let rres = pres.reduce(&right)?.sub(&nf);
        if !rres.is_zero() {
            witness(Axiom::CounitLaw, format!("(id (x) eps) delta({w})"), Residual::Poly(rres));
        }

        // m(S⊗id)Δ = ε(·)1 = m(id⊗S)Δ
        let target = NCPoly::constant(counit(&p, pres, hopf)?);
        let mut mleft = NCPoly::zero();
        let mut mright = NCPoly::zero();
        for (legs, c) in dw.terms() {
            let s0 = antipode(&NCPoly::word(legs[0].clone()), pres, hopf)?;
            let s1 = antipode(&NCPoly::word(legs[1].clone()), pres, hopf)?;
            mleft = mleft.add(
                &pres
                    .multiply(&s0, &NCPoly::word(legs[1].clone()))?
                    .scale(c),
            );
            mright = mright.add(
                &pres
                    .multiply(&NCPoly::word(legs[0].clone()), &s1)?
                    .scale(c),
            );
        }
        let lres = mleft.sub(&target);
        if !lres.is_zero() {
            witness(Axiom::AntipodeLaw, w.to_string(), Residual::Poly(lres));
        }
        let rres = mright.sub(&target);
        if !rres.is_zero() {
            witness(
                Axiom::AntipodeLaw,
                format!("m(id (x) S) delta({w})"),
                Residual::Poly(rres),
            );
        }
    }

    Ok(AxiomReport { degree, checks })
}
