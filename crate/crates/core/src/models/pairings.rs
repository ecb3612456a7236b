//! Duality pairing bundles: two presented algebras, their coalgebra data,
//! and a generator-level pairing table.

use super::presets::build_model;
use super::{Bindings, ModelError};
use crate::algebra::{AlgebraDef, NCPoly, Presentation, Word};
use crate::hopf::{DualityContext, HopfData, PairingTable, DEFAULT_PAIR_BUDGET};
use crate::scalar::Scalar;
use crate::sym::Sym;

/// A ready-to-evaluate duality pairing between algebras A and B.
#[derive(Clone, Debug)]
pub struct PairingBundle {
    pub name: String,
    pub pres_a: Presentation,
    pub hopf_a: HopfData,
    pub pres_b: Presentation,
    pub hopf_b: HopfData,
    pub table: PairingTable,
    pub notes: Vec<String>,
    /// True for the convention variant that the compatibility audit flags.
    pub audit_fails: bool,
}

impl PairingBundle {
    /// Borrow the bundle as an evaluation context with the default budget.
    pub fn context(&self) -> DualityContext<'_> {
        DualityContext {
            pres_a: &self.pres_a,
            hopf_a: &self.hopf_a,
            pres_b: &self.pres_b,
            hopf_b: &self.hopf_b,
            table: &self.table,
            budget: DEFAULT_PAIR_BUDGET,
        }
    }
}

/// Catalogue order of the pairing bundles.
pub fn pairing_names() -> &'static [&'static str] {
    &["lorentz-duality", "xP-duality", "xP-duality-paper-bracket"]
}

pub fn build_pairing(name: &str) -> Result<PairingBundle, ModelError> {
    match name {
        "lorentz-duality" => lorentz_duality(),
        "xP-duality" => xp_duality(false),
        "xP-duality-paper-bracket" => xp_duality(true),
        other => Err(ModelError::UnknownPairing(other.to_string())),
    }
}

/// Coordinates against translations: ⟨x^mu, P_nu⟩ = i on the diagonal, and
/// the group-like E pairs with x0 through its linear truncation.
fn xp_duality(literal_bracket: bool) -> Result<PairingBundle, ModelError> {
    let a_name = if literal_bracket {
        "kminkowski4d-paper-bracket"
    } else {
        "kminkowski4d"
    };
    let a = build_model(a_name, &Bindings::new())?;
    let b = build_model("ktranslations4d", &Bindings::new())?;

    let mut table = PairingTable::new();
    for mu in 0..4 {
        table.set(format!("x{mu}"), format!("P{mu}"), Scalar::i());
    }
    let i_over_kappa = Scalar::i().div(&Scalar::var("kappa")).expect("kappa != 0");
    table.set("x0", "E", i_over_kappa.neg());
    table.set("x0", "Einv", i_over_kappa);

    let name = if literal_bracket {
        "xP-duality-paper-bracket"
    } else {
        "xP-duality"
    };
    let notes = if literal_bracket {
        vec![
            "same table as xP-duality but against the (1/kappa)-bracket coordinates".into(),
            "the compatibility audit flags it: relations no longer pair to zero".into(),
        ]
    } else {
        vec![
            "diagonal table <x_mu, P_mu> = i; <x0, E> = -i/kappa from the linear \
             truncation of the group-like E"
                .into(),
            "compatible with the (i/kappa)-bracket at audit degree 2 and 3".into(),
        ]
    };
    Ok(PairingBundle {
        name: name.into(),
        pres_a: a.presentation,
        hopf_a: a.hopf.expect("coordinate model carries Hopf data"),
        pres_b: b.presentation,
        hopf_b: b.hopf.expect("translation model carries Hopf data"),
        table,
        notes,
        audit_fails: literal_bracket,
    })
}

/// Matrix entries of a 4x4 Lorentz transformation paired with boost/rotation
/// generators: ⟨L^mu_nu, M_ab⟩ = i(delta^mu_a eta_nu_b - delta^mu_b eta_nu_a).
///
/// Both sides are shipped relation-free: the table and the coproducts are all
/// the audit and the pairing evaluator use, and cross-relations among the
/// matrix entries are deliberately out of scope.
fn lorentz_duality() -> Result<PairingBundle, ModelError> {
    let eta: [i64; 4] = [1, -1, -1, -1];

    let l_names: Vec<String> = (0..4)
        .flat_map(|mu| (0..4).map(move |nu| format!("L{mu}{nu}")))
        .collect();
    let pres_a = Presentation::build(AlgebraDef {
        name: "lorentz-matrix".into(),
        gens: l_names.iter().map(|n| Sym::from(n.as_str())).collect(),
        ..Default::default()
    })?;
    let mut hopf_a = HopfData::new();
    for mu in 0..4usize {
        for nu in 0..4usize {
            let mut delta = crate::hopf::TensorPoly::zero(2);
            for rho in 0..4 {
                delta = delta.add(&crate::hopf::TensorPoly::term(
                    vec![
                        Word::gen(format!("L{mu}{rho}")),
                        Word::gen(format!("L{rho}{nu}")),
                    ],
                    Scalar::one(),
                ));
            }
            let counit = if mu == nu { Scalar::one() } else { Scalar::zero() };
            // matrix inverse via the metric: S(L^mu_nu) = eta_mu eta_nu L^nu_mu
            let sign = Scalar::from_int(eta[mu] * eta[nu]);
            let antipode = NCPoly::term(Word::gen(format!("L{nu}{mu}")), sign);
            hopf_a.set(format!("L{mu}{nu}"), delta, counit, antipode);
        }
    }

    let m_pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .collect();
    let pres_b = Presentation::build(AlgebraDef {
        name: "lorentz-generators".into(),
        gens: m_pairs.iter().map(|(a, b)| Sym::from(format!("M{a}{b}"))).collect(),
        ..Default::default()
    })?;
    let mut hopf_b = HopfData::new();
    for (a, b) in &m_pairs {
        hopf_b.set_primitive(format!("M{a}{b}"));
    }

    let mut table = PairingTable::new();
    for mu in 0..4usize {
        for (nu, &eta_nu) in eta.iter().enumerate() {
            for (a, b) in &m_pairs {
                let mut v = 0;
                if mu == *a && nu == *b {
                    v += eta_nu;
                }
                if mu == *b && nu == *a {
                    v -= eta_nu;
                }
                if v != 0 {
                    table.set(
                        format!("L{mu}{nu}"),
                        format!("M{a}{b}"),
                        Scalar::i().mul(&Scalar::from_int(v)),
                    );
                }
            }
        }
    }

    Ok(PairingBundle {
        name: "lorentz-duality".into(),
        pres_a,
        hopf_a,
        pres_b,
        hopf_b,
        table,
        notes: vec![
            "generator-level table <L^mu_nu, M_ab> = i(delta^mu_a eta_nub - delta^mu_b eta_nua), \
             eta = diag(1,-1,-1,-1)"
                .into(),
            "matrix coproduct on the L side, primitive generators on the M side; \
             no cross-relations are asserted"
                .into(),
        ],
        audit_fails: false,
    })
}

/// A deliberately broken quantum-sphere presentation: the `B A` rule drops
/// its deformation factor, so the `Bs B A` overlap resolves two ways.
/// Test fixture only; not listed in the catalogue.
pub fn corrupted_podles() -> Presentation {
    let good = build_model("podles", &Bindings::new())
        .expect("podles preset builds")
        .presentation;
    let mut relations: Vec<NCPoly> = good
        .rules()
        .iter()
        .map(|r| NCPoly::word(r.lhs.clone()).sub(&r.rhs))
        .collect();
    relations[0] = NCPoly::word(Word::from_names(&["B", "A"]))
        .sub(&NCPoly::word(Word::from_names(&["A", "B"])));
    Presentation::build(AlgebraDef {
        name: "podles-corrupted".into(),
        params: good.params().to_vec(),
        gens: good.gens().to_vec(),
        star_pairs: vec![(Sym::from("B"), Sym::from("Bs"))],
        relations,
        ..Default::default()
    })
    .expect("corrupted fixture still orients")
}
