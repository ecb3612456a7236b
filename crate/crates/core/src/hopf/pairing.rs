//! Hopf duality pairings between two presented algebras.
//!
//! A pairing is seeded on generator pairs and extended by the duality rules
//! ⟨pq, r⟩ = ⟨p⊗q, Δr⟩ and ⟨p, rs⟩ = ⟨Δp, r⊗s⟩, with the unit pairing to
//! the counit of the other side. Evaluation recurses to those base cases and
//! reports an error if it cannot, rather than silently returning zero.

use super::data::{coproduct, counit, HopfData};
use super::HopfError;
use crate::algebra::{NCPoly, Presentation, Word};
use crate::scalar::Scalar;
use crate::sym::Sym;
use std::collections::BTreeMap;
use std::fmt;

/// Generator-level pairing table; pairs not listed read as zero.
#[derive(Clone, Debug, Default)]
pub struct PairingTable {
    entries: BTreeMap<(Sym, Sym), Scalar>,
}

impl PairingTable {
    pub fn new() -> Self {
        PairingTable::default()
    }

    pub fn set(&mut self, a: impl Into<Sym>, b: impl Into<Sym>, value: Scalar) {
        let key = (a.into(), b.into());
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn get(&self, a: &Sym, b: &Sym) -> Scalar {
        self.entries
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Sym, Sym), &Scalar)> {
        self.entries.iter()
    }
}

/// Everything needed to evaluate one pairing: the two algebras with their
/// coalgebra data and the generator table.
pub struct DualityContext<'a> {
    pub pres_a: &'a Presentation,
    pub hopf_a: &'a HopfData,
    pub pres_b: &'a Presentation,
    pub hopf_b: &'a HopfData,
    pub table: &'a PairingTable,
    /// Recursion budget; the default in [`pair`] is ample for polynomial
    /// coproducts and guards against non-terminating expansions.
    pub budget: u32,
}

pub const DEFAULT_PAIR_BUDGET: u32 = 256;

/// Bilinear extension of the pairing to whole polynomials.
pub fn pair(a: &NCPoly, b: &NCPoly, ctx: &DualityContext) -> Result<Scalar, HopfError> {
    let mut out = Scalar::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let v = pair_words(wa, wb, ctx, ctx.budget)?;
            out = out.add(&v.mul(ca).mul(cb));
        }
    }
    Ok(out)
}

fn pair_words(wa: &Word, wb: &Word, ctx: &DualityContext, budget: u32) -> Result<Scalar, HopfError> {
    if budget == 0 {
        return Err(HopfError::PairingBudgetExceeded {
            left: wa.to_string(),
            right: wb.to_string(),
        });
    }
    let budget = budget - 1;

    // unit conventions: ⟨1, r⟩ = ε_B(r), ⟨p, 1⟩ = ε_A(p)
    if wa.is_empty() {
        return counit(&NCPoly::word(wb.clone()), ctx.pres_b, ctx.hopf_b);
    }
    if wb.is_empty() {
        return counit(&NCPoly::word(wa.clone()), ctx.pres_a, ctx.hopf_a);
    }
    if wa.len() == 1 && wb.len() == 1 {
        return Ok(ctx.table.get(&wa.syms()[0], &wb.syms()[0]));
    }

    if wa.len() > 1 {
        // ⟨g·rest, r⟩ = Σ ⟨g, r(1)⟩⟨rest, r(2)⟩ over Δ_B(r)
        let (_, rest) = wa.split_around(0, 1);
        let g = Word::gen(wa.syms()[0].clone());
        let db = coproduct(&NCPoly::word(wb.clone()), ctx.pres_b, ctx.hopf_b)?;
        let mut out = Scalar::zero();
        for (legs, c) in db.terms() {
            let x = pair_words(&g, &legs[0], ctx, budget)?;
            if x.is_zero() {
                continue;
            }
            let y = pair_words(&rest, &legs[1], ctx, budget)?;
            out = out.add(&c.mul(&x).mul(&y));
        }
        return Ok(out);
    }

    // single generator on the left, longer word on the right:
    // ⟨p, h·rest⟩ = Σ ⟨p(1), h⟩⟨p(2), rest⟩ over Δ_A(p)
    let h = Word::gen(wb.syms()[0].clone());
    let (_, rest) = wb.split_around(0, 1);
    let da = coproduct(&NCPoly::word(wa.clone()), ctx.pres_a, ctx.hopf_a)?;
    let mut out = Scalar::zero();
    for (legs, c) in da.terms() {
        let x = pair_words(&legs[0], &h, ctx, budget)?;
        if x.is_zero() {
            continue;
        }
        let y = pair_words(&legs[1], &rest, ctx, budget)?;
        out = out.add(&c.mul(&x).mul(&y));
    }
    Ok(out)
}

/// One line of the compatibility audit.
#[derive(Clone, Debug)]
pub struct CompatEntry {
    /// Which check: a defining relation of A paired against a B-monomial, or
    /// a generator bracket matched against the tensor expansion.
    pub kind: CompatKind,
    pub left: String,
    pub right: String,
    pub residual: Scalar,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompatKind {
    Relation,
    Bracket,
}

impl fmt::Display for CompatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompatKind::Relation => write!(f, "relation"),
            CompatKind::Bracket => write!(f, "bracket"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PairingCompatReport {
    pub degree: u32,
    pub entries: Vec<CompatEntry>,
}

impl PairingCompatReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.residual.is_zero())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CompatEntry> {
        self.entries.iter().filter(|e| !e.residual.is_zero())
    }
}

/// Audit the pairing against the algebra structure of A:
///
/// * every defining relation of A pairs to zero with every normal B-word up
///   to `degree`;
/// * for every generator pair (p, q) of A and normal B-word r, the reduced
///   commutator satisfies ⟨[p,q], r⟩ = ⟨p⊗q − q⊗p, Δr⟩.
pub fn check_pairing_compat(ctx: &DualityContext, degree: u32) -> Result<PairingCompatReport, HopfError> {
    if degree < 2 {
        return Err(HopfError::DegreeTooSmallForCompat);
    }
    let b_words = ctx.pres_b.normal_words(degree as usize);
    let mut entries = Vec::new();

    for rule in ctx.pres_a.rules() {
        let rel = NCPoly::word(rule.lhs.clone()).sub(&rule.rhs);
        let rel_str = format!("{} - ({})", rule.lhs, ctx.pres_a.format_poly(&rule.rhs));
        for w in &b_words {
            let residual = pair(&rel, &NCPoly::word(w.clone()), ctx)?;
            entries.push(CompatEntry {
                kind: CompatKind::Relation,
                left: rel_str.clone(),
                right: w.to_string(),
                residual,
            });
        }
    }

    let gens = ctx.pres_a.gens().to_vec();
    for (i, p) in gens.iter().enumerate() {
        for q in gens.iter().skip(i + 1) {
            let pp = NCPoly::gen(p.as_str());
            let qq = NCPoly::gen(q.as_str());
            let bracket = ctx.pres_a.commutator(&pp, &qq)?;
            for w in &b_words {
                let lhs = pair(&bracket, &NCPoly::word(w.clone()), ctx)?;
                // ⟨p⊗q − q⊗p, Δr⟩ without reducing pq in A
                let dr = coproduct(&NCPoly::word(w.clone()), ctx.pres_b, ctx.hopf_b)?;
                let mut rhs = Scalar::zero();
                for (legs, c) in dr.terms() {
                    let forward = pair_words(&Word::gen(p.clone()), &legs[0], ctx, ctx.budget)?
                        .mul(&pair_words(&Word::gen(q.clone()), &legs[1], ctx, ctx.budget)?);
                    let backward = pair_words(&Word::gen(q.clone()), &legs[0], ctx, ctx.budget)?
                        .mul(&pair_words(&Word::gen(p.clone()), &legs[1], ctx, ctx.budget)?);
                    rhs = rhs.add(&c.mul(&forward.sub(&backward)));
                }
                entries.push(CompatEntry {
                    kind: CompatKind::Bracket,
                    left: format!("[{p}, {q}]"),
                    right: w.to_string(),
                    residual: lhs.sub(&rhs),
                });
            }
        }
    }

    Ok(PairingCompatReport { degree, entries })
}
