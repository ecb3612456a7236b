//! Generator/relation presentations with normal ordering by rewriting.
//!
//! A presentation fixes a generator precedence (declaration order), a star
//! involution on generators, optional group-like inverse pairs, and a list of
//! rewrite rules oriented by the induced graded lex order on words. Normal
//! ordering repeatedly rewrites the leftmost reducible factor; because every
//! rule strictly decreases the graded lex order, this always terminates.

use super::poly::{format_term, NCPoly};
use super::word::Word;
use super::AlgebraError;
use crate::scalar::Scalar;
use crate::sym::Sym;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// One oriented rule `lhs -> rhs`; every word of `rhs` is strictly smaller
/// than `lhs` in the presentation's graded lex order.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// Input data for [`Presentation::build`]: relations are polynomials read as
/// `relation = 0` and oriented automatically.
#[derive(Clone, Debug, Default)]
pub struct AlgebraDef {
    pub name: String,
    pub params: Vec<Sym>,
    pub gens: Vec<Sym>,
    /// Pairs `(g, h)` with `g* = h` (and `h* = g`); generators not listed
    /// are self-adjoint.
    pub star_pairs: Vec<(Sym, Sym)>,
    /// Pairs `(g, g_inv)` of mutually inverse group-like generators; the
    /// contractions `g*g_inv -> 1` and `g_inv*g -> 1` are added as rules.
    pub grouplike_pairs: Vec<(Sym, Sym)>,
    pub relations: Vec<NCPoly>,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    params: Vec<Sym>,
    gens: Vec<Sym>,
    prec: BTreeMap<Sym, usize>,
    star: BTreeMap<Sym, Sym>,
    grouplike: BTreeMap<Sym, Sym>,
    rules: Vec<RewriteRule>,
}

/// One completed confluence test: a word reducible in two ways, both normal
/// forms, and their difference.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub rule_a: usize,
    pub rule_b: usize,
    pub superposition: Word,
    pub left_normal: NCPoly,
    pub right_normal: NCPoly,
    pub residual: NCPoly,
}

impl CriticalPair {
    pub fn joinable(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Whether the starred form of a rule is again provable from the rules.
#[derive(Clone, Debug)]
pub struct StarClosureReport {
    pub rule: usize,
    pub residual: NCPoly,
}

impl StarClosureReport {
    pub fn closed(&self) -> bool {
        self.residual.is_zero()
    }
}

impl Presentation {
    pub fn build(def: AlgebraDef) -> Result<Self, AlgebraError> {
        let mut prec = BTreeMap::new();
        for (i, g) in def.gens.iter().enumerate() {
            if prec.insert(g.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateGenerator(g.clone()));
            }
        }
        for p in &def.params {
            if prec.contains_key(p) {
                return Err(AlgebraError::DuplicateGenerator(p.clone()));
            }
        }

        let mut star: BTreeMap<Sym, Sym> = def
            .gens
            .iter()
            .map(|g| (g.clone(), g.clone()))
            .collect();
        for (a, b) in &def.star_pairs {
            for s in [a, b] {
                if !prec.contains_key(s) {
                    return Err(AlgebraError::UndeclaredGenerator {
                        name: s.clone(),
                        context: format!("star pair in `{}`", def.name),
                    });
                }
            }
            star.insert(a.clone(), b.clone());
            star.insert(b.clone(), a.clone());
        }
        for (g, h) in &star {
            let back = &star[h];
            if back != g {
                return Err(AlgebraError::StarNotInvolution(
                    g.clone(),
                    h.clone(),
                    back.clone(),
                ));
            }
        }

        let mut grouplike = BTreeMap::new();
        for (g, ginv) in &def.grouplike_pairs {
            for s in [g, ginv] {
                if !prec.contains_key(s) {
                    return Err(AlgebraError::UndeclaredGenerator {
                        name: s.clone(),
                        context: format!("group-like pair in `{}`", def.name),
                    });
                }
            }
            grouplike.insert(g.clone(), ginv.clone());
            grouplike.insert(ginv.clone(), g.clone());
        }

        let mut pres = Presentation {
            name: def.name,
            params: def.params,
            gens: def.gens,
            prec,
            star,
            grouplike,
            rules: Vec::new(),
        };

        let mut relations = def.relations;
        for (g, ginv) in &def.grouplike_pairs {
            for (a, b) in [(g, ginv), (ginv, g)] {
                relations.push(
                    NCPoly::word(Word(vec![a.clone(), b.clone()])).sub(&NCPoly::one()),
                );
            }
        }
        for rel in relations {
            let rule = pres.orient(rel)?;
            pres.rules.push(rule);
        }
        Ok(pres)
    }

    /// Turn `relation = 0` into a rule by solving for the graded-lex
    /// greatest word.
    fn orient(&self, rel: NCPoly) -> Result<RewriteRule, AlgebraError> {
        for (w, _) in rel.terms() {
            self.check_word(w)?;
        }
        let lead = rel
            .terms()
            .map(|(w, _)| w.clone())
            .max_by(|a, b| self.word_cmp(a, b));
        let lead = match lead {
            None => return Err(AlgebraError::EmptyRelation),
            Some(w) => w,
        };
        if lead.is_empty() {
            return Err(AlgebraError::InconsistentRelation(rel.to_string()));
        }
        let c = rel.coeff(&lead);
        let mut rhs = NCPoly::zero();
        for (w, k) in rel.terms() {
            if *w != lead {
                rhs.insert_add(w.clone(), k.div(&c).expect("nonzero leading coefficient").neg());
            }
        }
        Ok(RewriteRule { lhs: lead, rhs })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &[Sym] {
        &self.params
    }

    pub fn gens(&self) -> &[Sym] {
        &self.gens
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn star_of(&self, g: &Sym) -> Result<&Sym, AlgebraError> {
        self.star.get(g).ok_or_else(|| AlgebraError::UndeclaredGenerator {
            name: g.clone(),
            context: format!("star involution of `{}`", self.name),
        })
    }

    pub fn is_grouplike(&self, g: &Sym) -> bool {
        self.grouplike.contains_key(g)
    }

    pub fn inverse_of(&self, g: &Sym) -> Option<&Sym> {
        self.grouplike.get(g)
    }

    pub fn grouplike_pairs(&self) -> impl Iterator<Item = (&Sym, &Sym)> {
        self.grouplike.iter()
    }

    pub fn check_word(&self, w: &Word) -> Result<(), AlgebraError> {
        for s in w.syms() {
            if !self.prec.contains_key(s) {
                return Err(AlgebraError::UndeclaredGenerator {
                    name: s.clone(),
                    context: format!("word `{w}` in `{}`", self.name),
                });
            }
        }
        Ok(())
    }

    /// Graded lex order on words induced by generator precedence.
    pub fn word_cmp(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.syms().iter().zip(b.syms()) {
                let ord = self.prec[x].cmp(&self.prec[y]);
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }

    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (ridx, rule) in self.rules.iter().enumerate() {
                if w.matches_at(&rule.lhs, pos) {
                    return Some((pos, ridx));
                }
            }
        }
        None
    }

    /// Normal-order a polynomial: rewrite the leftmost reducible factor
    /// (lowest-index rule on ties) until no rule applies.
    pub fn reduce(&self, p: &NCPoly) -> Result<NCPoly, AlgebraError> {
        for (w, _) in p.terms() {
            self.check_word(w)?;
        }
        let mut out = NCPoly::zero();
        let mut stack: Vec<(Word, Scalar)> =
            p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((w, c)) = stack.pop() {
            match self.find_redex(&w) {
                None => out.insert_add(w, c),
                Some((pos, ridx)) => {
                    let rule = &self.rules[ridx];
                    let (pre, post) = w.split_around(pos, rule.lhs.len());
                    for (rw, rc) in rule.rhs.terms() {
                        stack.push((pre.concat(rw).concat(&post), c.mul(rc)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product followed by normal ordering.
    pub fn multiply(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.reduce(&a.free_mul(b))
    }

    /// `[a, b] = ab - ba`, normal ordered.
    pub fn commutator(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, AlgebraError> {
        Ok(self.multiply(a, b)?.sub(&self.multiply(b, a)?))
    }

    /// Star anti-involution: reverse words, apply the generator involution,
    /// conjugate coefficients, then normal order.
    pub fn star(&self, p: &NCPoly) -> Result<NCPoly, AlgebraError> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut rev = Vec::with_capacity(w.len());
            for s in w.syms().iter().rev() {
                rev.push(self.star_of(s)?.clone());
            }
            out.insert_add(Word(rev), c.conj());
        }
        self.reduce(&out)
    }

    /// All overlap and containment superpositions of rule left-hand sides,
    /// each resolved to a pair of normal forms. Every residual zero means the
    /// rewriting system is locally confluent, hence normal forms are unique.
    pub fn critical_pairs(&self) -> Result<Vec<CriticalPair>, AlgebraError> {
        let mut out = Vec::new();
        for (a, ra) in self.rules.iter().enumerate() {
            for (b, rb) in self.rules.iter().enumerate() {
                let la = ra.lhs.len();
                let lb = rb.lhs.len();
                // proper overlap: a suffix of lhs_a is a prefix of lhs_b
                for k in 1..la.min(lb) {
                    if ra.lhs.syms()[la - k..] != rb.lhs.syms()[..k] {
                        continue;
                    }
                    let (pre_a, _) = ra.lhs.split_around(la - k, k);
                    let (_, suf_b) = rb.lhs.split_around(0, k);
                    let superposition = ra.lhs.concat(&suf_b);
                    let left = ra.rhs.free_mul(&NCPoly::word(suf_b.clone()));
                    let right = NCPoly::word(pre_a.clone()).free_mul(&rb.rhs);
                    out.push(self.resolve_pair(a, b, superposition, left, right)?);
                }
                // containment: lhs_b occurs inside lhs_a
                if a != b && lb <= la {
                    for pos in 0..=la - lb {
                        if lb == la && a > b {
                            // identical-length containment is symmetric;
                            // keep one orientation
                            continue;
                        }
                        if !ra.lhs.matches_at(&rb.lhs, pos) {
                            continue;
                        }
                        let (pre, post) = ra.lhs.split_around(pos, lb);
                        let left = ra.rhs.clone();
                        let right = NCPoly::word(pre)
                            .free_mul(&rb.rhs)
                            .free_mul(&NCPoly::word(post));
                        out.push(self.resolve_pair(a, b, ra.lhs.clone(), left, right)?);
                    }
                }
            }
        }
        Ok(out)
    }

    fn resolve_pair(
        &self,
        rule_a: usize,
        rule_b: usize,
        superposition: Word,
        left: NCPoly,
        right: NCPoly,
    ) -> Result<CriticalPair, AlgebraError> {
        let left_normal = self.reduce(&left)?;
        let right_normal = self.reduce(&right)?;
        let residual = left_normal.sub(&right_normal);
        Ok(CriticalPair {
            rule_a,
            rule_b,
            superposition,
            left_normal,
            right_normal,
            residual,
        })
    }

    /// For each rule, reduce the starred relation `star(lhs) - star(rhs)`;
    /// a nonzero residual flags a presentation that is not star-closed.
    pub fn check_star_closure(&self) -> Result<Vec<StarClosureReport>, AlgebraError> {
        let mut out = Vec::new();
        for (i, rule) in self.rules.iter().enumerate() {
            let lhs_star = self.star(&NCPoly::word(rule.lhs.clone()))?;
            let rhs_star = self.star(&rule.rhs)?;
            out.push(StarClosureReport {
                rule: i,
                residual: lhs_star.sub(&rhs_star),
            });
        }
        Ok(out)
    }

    /// Render with terms sorted descending in the presentation's graded lex
    /// order, so leading (most normal-ordered-out) terms come first.
    pub fn format_poly(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Word, &Scalar)> = p.terms().collect();
        terms.sort_by(|(wa, _), (wb, _)| self.word_cmp(wb, wa));
        let parts: Vec<String> = terms.iter().map(|(w, c)| format_term(w, c)).collect();
        parts.join(" + ").replace(" + -", " - ")
    }

    /// All normal words of length at most `max_len`, in graded lex order.
    /// These span the algebra up to that degree.
    pub fn normal_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::one()];
        let mut layer = vec![Word::one()];
        for _ in 1..=max_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in &self.gens {
                    let ext = w.concat(&Word::gen(g.clone()));
                    if self.find_redex(&ext).is_none() {
                        next.push(ext);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two generators with x1*x0 = x0*x1 - i*kappa*x1.
    fn plane() -> Presentation {
        let kappa = Scalar::var("kappa");
        let rel = NCPoly::word(Word::from_names(&["x1", "x0"]))
            .sub(&NCPoly::word(Word::from_names(&["x0", "x1"])))
            .add(&NCPoly::term(
                Word::gen("x1"),
                Scalar::i().mul(&kappa),
            ));
        Presentation::build(AlgebraDef {
            name: "plane".into(),
            params: vec![Sym::from("kappa")],
            gens: vec![Sym::from("x0"), Sym::from("x1")],
            star_pairs: vec![],
            grouplike_pairs: vec![],
            relations: vec![rel],
        })
        .unwrap()
    }

    #[test]
    fn orientation_picks_the_greater_word() {
        let p = plane();
        assert_eq!(p.rules().len(), 1);
        assert_eq!(p.rules()[0].lhs, Word::from_names(&["x1", "x0"]));
    }

    #[test]
    fn reduce_two_steps() {
        let p = plane();
        // x1*x0*x0 -> x0*x0*x1 - 2*i*kappa*x0*x1 - kappa^2*x1
        let input = NCPoly::word(Word::from_names(&["x1", "x0", "x0"]));
        let nf = p.reduce(&input).unwrap();
        let kappa = Scalar::var("kappa");
        let mut expect = NCPoly::word(Word::from_names(&["x0", "x0", "x1"]));
        expect.insert_add(
            Word::from_names(&["x0", "x1"]),
            Scalar::i().mul(&kappa).mul(&Scalar::from_int(-2)),
        );
        expect.insert_add(Word::gen("x1"), kappa.pow(2).neg());
        assert_eq!(nf, expect);
        // idempotence of normal ordering
        assert_eq!(p.reduce(&nf).unwrap(), nf);
    }

    #[test]
    fn commutator_matches_rule() {
        let p = plane();
        let x0 = NCPoly::gen("x0");
        let x1 = NCPoly::gen("x1");
        let c = p.commutator(&x0, &x1).unwrap();
        let expect = NCPoly::term(Word::gen("x1"), Scalar::i().mul(&Scalar::var("kappa")));
        assert_eq!(c, expect);
    }

    #[test]
    fn undeclared_generator_is_reported() {
        let p = plane();
        let q = NCPoly::gen("y");
        let err = p.reduce(&q).unwrap_err();
        assert!(matches!(err, AlgebraError::UndeclaredGenerator { .. }));
    }

    #[test]
    fn single_rule_is_confluent() {
        let p = plane();
        let pairs = p.critical_pairs().unwrap();
        assert!(pairs.iter().all(|cp| cp.joinable()));
    }

    #[test]
    fn normal_words_enumeration() {
        let p = plane();
        // length <= 2: 1, x0, x1, x0*x0, x0*x1, x1*x1 (x1*x0 is reducible)
        let words = p.normal_words(2);
        assert_eq!(words.len(), 6);
        assert!(!words.contains(&Word::from_names(&["x1", "x0"])));
    }

    #[test]
    fn grouplike_contractions() {
        let def = AlgebraDef {
            name: "loop".into(),
            params: vec![],
            gens: vec![Sym::from("g"), Sym::from("gi")],
            star_pairs: vec![],
            grouplike_pairs: vec![(Sym::from("g"), Sym::from("gi"))],
            relations: vec![],
        };
        let p = Presentation::build(def).unwrap();
        let w = NCPoly::word(Word::from_names(&["g", "g", "gi", "gi", "g"]));
        assert_eq!(p.reduce(&w).unwrap(), NCPoly::gen("g"));
    }
}
