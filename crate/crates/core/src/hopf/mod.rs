//! Hopf-algebra structure maps, axiom verification, and duality pairings.

mod data;
mod pairing;
mod tensor;

pub use data::{
    antipode, check_hopf, coproduct, counit, words_up_to, Axiom, AxiomCheck, AxiomReport,
    HopfData, Residual, Witness, ALL_AXIOMS,
};
pub use pairing::{
    check_pairing_compat, pair, CompatEntry, CompatKind, DualityContext, PairingCompatReport,
    PairingTable, DEFAULT_PAIR_BUDGET,
};
pub use tensor::TensorPoly;

use crate::algebra::AlgebraError;
use crate::sym::Sym;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("generator `{0}` has no coproduct/counit/antipode data")]
    MissingStructure(Sym),
    #[error("axiom checking degree must be at least 1")]
    DegreeMustBePositive,
    #[error("pairing compatibility needs degree at least 2")]
    DegreeTooSmallForCompat,
    #[error("pairing of `{left}` with `{right}` did not reach base cases within the recursion budget")]
    PairingBudgetExceeded { left: String, right: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraDef, NCPoly, Presentation, Word};
    use crate::scalar::Scalar;

    /// 2D coordinate algebra x0, x1 with x1*x0 = x0*x1 - (i/kappa)*x1 and
    /// primitive coproducts.
    fn coords() -> (Presentation, HopfData) {
        let ik = Scalar::i().div(&Scalar::var("kappa")).unwrap();
        let rel = NCPoly::word(Word::from_names(&["x1", "x0"]))
            .sub(&NCPoly::word(Word::from_names(&["x0", "x1"])))
            .add(&NCPoly::term(Word::gen("x1"), ik));
        let pres = Presentation::build(AlgebraDef {
            name: "coords2".into(),
            params: vec![Sym::from("kappa")],
            gens: vec![Sym::from("x0"), Sym::from("x1")],
            relations: vec![rel],
            ..Default::default()
        })
        .unwrap();
        let mut hopf = HopfData::new();
        hopf.set_primitive("x0");
        hopf.set_primitive("x1");
        (pres, hopf)
    }

    /// 2D translation sector P0, P1 with group-like E adjoined:
    /// everything commutes, ΔP1 = P1⊗E + 1⊗P1, ΔP0 primitive.
    fn translations() -> (Presentation, HopfData) {
        let syms = |names: &[&str]| names.iter().map(|n| Sym::from(*n)).collect::<Vec<_>>();
        let mut relations = Vec::new();
        let order = ["P0", "P1", "E", "Einv"];
        for (i, a) in order.iter().enumerate() {
            for b in order.iter().skip(i + 1) {
                if (*a, *b) == ("E", "Einv") {
                    continue; // handled by the group-like contraction rules
                }
                relations.push(
                    NCPoly::word(Word::from_names(&[b, a]))
                        .sub(&NCPoly::word(Word::from_names(&[a, b]))),
                );
            }
        }
        let pres = Presentation::build(AlgebraDef {
            name: "trans2".into(),
            params: vec![Sym::from("kappa")],
            gens: syms(&["P0", "P1", "E", "Einv"]),
            grouplike_pairs: vec![(Sym::from("E"), Sym::from("Einv"))],
            relations,
            ..Default::default()
        })
        .unwrap();
        let mut hopf = HopfData::new();
        hopf.set_primitive("P0");
        // ΔP1 = P1 ⊗ E + 1 ⊗ P1, S(P1) = -P1*Einv
        let d = TensorPoly::term(vec![Word::gen("P1"), Word::gen("E")], Scalar::one()).add(
            &TensorPoly::term(vec![Word::one(), Word::gen("P1")], Scalar::one()),
        );
        hopf.set(
            "P1",
            d,
            Scalar::zero(),
            NCPoly::word(Word::from_names(&["P1", "Einv"])).neg(),
        );
        hopf.set_grouplike("E", "Einv");
        hopf.set_grouplike("Einv", "E");
        (pres, hopf)
    }

    fn xp_table() -> PairingTable {
        let mut t = PairingTable::new();
        let ik = Scalar::i().div(&Scalar::var("kappa")).unwrap();
        t.set("x0", "P0", Scalar::i());
        t.set("x1", "P1", Scalar::i());
        t.set("x0", "E", ik.neg());
        t.set("x0", "Einv", ik);
        t
    }

    #[test]
    fn translations_pass_hopf_axioms() {
        let (pres, hopf) = translations();
        let report = check_hopf(&pres, &hopf, 3).unwrap();
        assert!(report.all_passed(), "failures: {:?}", report.failed_axioms());
    }

    #[test]
    fn generator_pairings() {
        let (pres_a, hopf_a) = coords();
        let (pres_b, hopf_b) = translations();
        let table = xp_table();
        let ctx = DualityContext {
            pres_a: &pres_a,
            hopf_a: &hopf_a,
            pres_b: &pres_b,
            hopf_b: &hopf_b,
            table: &table,
            budget: DEFAULT_PAIR_BUDGET,
        };
        let x1 = NCPoly::gen("x1");
        let p1 = NCPoly::gen("P1");
        assert_eq!(pair(&x1, &p1, &ctx).unwrap(), Scalar::i());
        assert!(pair(&NCPoly::gen("x0"), &p1, &ctx).unwrap().is_zero());
        // unit conventions
        assert!(pair(&NCPoly::one(), &NCPoly::one(), &ctx).unwrap().is_one());
        assert!(pair(&NCPoly::one(), &p1, &ctx).unwrap().is_zero());
        assert!(pair(&NCPoly::one(), &NCPoly::gen("E"), &ctx).unwrap().is_one());
    }

    #[test]
    fn squared_pairing_value() {
        let (pres_a, hopf_a) = coords();
        let (pres_b, hopf_b) = translations();
        let table = xp_table();
        let ctx = DualityContext {
            pres_a: &pres_a,
            hopf_a: &hopf_a,
            pres_b: &pres_b,
            hopf_b: &hopf_b,
            table: &table,
            budget: DEFAULT_PAIR_BUDGET,
        };
        let x1sq = NCPoly::word(Word::from_names(&["x1", "x1"]));
        let p1sq = NCPoly::word(Word::from_names(&["P1", "P1"]));
        assert_eq!(pair(&x1sq, &p1sq, &ctx).unwrap(), Scalar::from_int(-2));
        // single generator against the square of the group-like element
        let e2 = NCPoly::word(Word::from_names(&["E", "E"]));
        let expect = Scalar::i()
            .div(&Scalar::var("kappa"))
            .unwrap()
            .mul(&Scalar::from_int(-2));
        assert_eq!(pair(&NCPoly::gen("x0"), &e2, &ctx).unwrap(), expect);
        // primitive against a product of two translations vanishes
        let pp = NCPoly::word(Word::from_names(&["P1", "P0"]));
        assert!(pair(&NCPoly::gen("x1"), &pp, &ctx).unwrap().is_zero());
    }

    #[test]
    fn compat_audit_flags_the_wrong_bracket() {
        let (pres_b, hopf_b) = translations();
        let table = xp_table();
        let (pres_good, hopf_a) = coords();

        let good = DualityContext {
            pres_a: &pres_good,
            hopf_a: &hopf_a,
            pres_b: &pres_b,
            hopf_b: &hopf_b,
            table: &table,
            budget: DEFAULT_PAIR_BUDGET,
        };
        let report = check_pairing_compat(&good, 2).unwrap();
        assert!(report.all_passed(), "unexpected failures: {:?}",
            report.failures().collect::<Vec<_>>());

        // same pairing, but the bracket drops the factor i
        let k_inv = Scalar::one().div(&Scalar::var("kappa")).unwrap();
        let rel = NCPoly::word(Word::from_names(&["x1", "x0"]))
            .sub(&NCPoly::word(Word::from_names(&["x0", "x1"])))
            .add(&NCPoly::term(Word::gen("x1"), k_inv.clone()));
        let pres_bad = Presentation::build(AlgebraDef {
            name: "coords2-literal".into(),
            params: vec![Sym::from("kappa")],
            gens: vec![Sym::from("x0"), Sym::from("x1")],
            relations: vec![rel],
            ..Default::default()
        })
        .unwrap();
        let bad = DualityContext {
            pres_a: &pres_bad,
            hopf_a: &hopf_a,
            pres_b: &pres_b,
            hopf_b: &hopf_b,
            table: &table,
            budget: DEFAULT_PAIR_BUDGET,
        };
        let report = check_pairing_compat(&bad, 2).unwrap();
        assert!(!report.all_passed());
        // the relation x1*x0 - x0*x1 + (1/kappa)*x1 pairs with P1 to (1+i)/kappa
        let expect = Scalar::one().add(&Scalar::i()).div(&Scalar::var("kappa")).unwrap();
        let hit = report
            .failures()
            .find(|e| e.kind == CompatKind::Relation && e.right == "P1")
            .expect("relation failure against P1");
        assert_eq!(hit.residual, expect);
    }

    #[test]
    fn runaway_coproduct_hits_the_budget() {
        // Word-squaring coproducts on both sides never reach a base case:
        // ⟨g, h²⟩ expands through ⟨g², h⟩ back to ⟨g, h²⟩.
        let one_gen = |name: &str, g: &str| {
            Presentation::build(AlgebraDef {
                name: name.into(),
                gens: vec![Sym::from(g)],
                ..Default::default()
            })
            .unwrap()
        };
        let squaring = |g: &str| {
            let mut hopf = HopfData::new();
            hopf.set(
                g,
                TensorPoly::term(
                    vec![Word::from_names(&[g, g]), Word::gen(g)],
                    Scalar::one(),
                ),
                Scalar::zero(),
                NCPoly::gen(g).neg(),
            );
            hopf
        };
        let pres_a = one_gen("runaway-a", "g");
        let pres_b = one_gen("runaway-b", "h");
        let hopf_a = squaring("g");
        let hopf_b = squaring("h");
        let table = PairingTable::new();
        let ctx = DualityContext {
            pres_a: &pres_a,
            hopf_a: &hopf_a,
            pres_b: &pres_b,
            hopf_b: &hopf_b,
            table: &table,
            budget: 32,
        };
        let right = NCPoly::word(Word::from_names(&["h", "h"]));
        let err = pair(&NCPoly::gen("g"), &right, &ctx).unwrap_err();
        assert!(matches!(err, HopfError::PairingBudgetExceeded { .. }));
    }
}
