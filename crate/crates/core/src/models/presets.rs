//! The model presets: presentations plus optional Hopf structure.

use super::{Bindings, ModelError};
use crate::algebra::{AlgebraDef, NCPoly, Presentation, Word};
use crate::hopf::{HopfData, TensorPoly};
use crate::scalar::Scalar;
use crate::sym::Sym;
use num::{BigInt, BigRational, One, Signed, Zero};

/// A named presentation, optionally with coalgebra structure, ready for the
/// axiom and confluence checkers.
#[derive(Clone, Debug)]
pub struct ModelEntry {
    pub name: String,
    pub presentation: Presentation,
    pub hopf: Option<HopfData>,
    /// Convention notes shown by the catalogue listing.
    pub notes: Vec<String>,
    /// True only for the negative-control model that fails the antipode
    /// axiom by construction.
    pub known_failing: bool,
}

/// Catalogue order of the model presets.
pub fn model_names() -> &'static [&'static str] {
    &[
        "cartesian-sphere",
        "kminkowski2d",
        "kminkowski4d",
        "kminkowski4d-paper-bracket",
        "kpoincare2d",
        "ktranslations4d",
        "ktranslations4d-paper-antipode",
        "podles",
        "so11fun",
    ]
}

fn w(names: &[&str]) -> NCPoly {
    NCPoly::word(Word::from_names(names))
}

/// Relation `b·a − a·b = 0`, oriented so the generator declared later moves
/// right.
fn commute(a: &str, b: &str) -> NCPoly {
    w(&[b, a]).sub(&w(&[a, b]))
}

fn syms(names: &[&str]) -> Vec<Sym> {
    names.iter().map(|n| Sym::from(*n)).collect()
}

pub fn build_model(name: &str, bindings: &Bindings) -> Result<ModelEntry, ModelError> {
    let mut entry = match name {
        "cartesian-sphere" => cartesian_sphere(),
        "kminkowski2d" => kminkowski2d(),
        "kminkowski4d" => kminkowski4d(false),
        "kminkowski4d-paper-bracket" => kminkowski4d(true),
        "kpoincare2d" => kpoincare2d(),
        "ktranslations4d" => ktranslations4d(false),
        "ktranslations4d-paper-antipode" => ktranslations4d(true),
        "podles" => podles(),
        "so11fun" => so11fun(),
        other => return Err(ModelError::UnknownModel(other.to_string())),
    }?;
    if !bindings.is_empty() {
        entry = bind_entry(entry, bindings)?;
    }
    Ok(entry)
}

/// Re-build a model's presentation with parameters bound to exact rationals.
/// Structure maps of the shipped presets are parameter-free, so only the
/// relations change.
fn bind_entry(entry: ModelEntry, bindings: &Bindings) -> Result<ModelEntry, ModelError> {
    let pres = &entry.presentation;
    for name in bindings.keys() {
        if !pres.params().contains(name) {
            return Err(ModelError::UnknownParameter {
                model: entry.name.clone(),
                name: name.to_string(),
            });
        }
    }
    check_domains(&entry.name, bindings)?;

    let gauss: std::collections::BTreeMap<Sym, crate::scalar::GaussRat> = bindings
        .iter()
        .map(|(k, v)| {
            (
                k.clone(),
                crate::scalar::GaussRat::new(v.clone(), BigRational::zero()),
            )
        })
        .collect();
    let grouplike_pairs = grouplike_pairs_of(pres);
    // the final 2 rules per group-like pair are the auto-added contractions;
    // drop them here because build() will append them again
    let user_rules = pres.rules().len() - 2 * grouplike_pairs.len();
    let relations: Result<Vec<NCPoly>, _> = pres.rules()[..user_rules]
        .iter()
        .map(|r| {
            NCPoly::word(r.lhs.clone())
                .sub(&r.rhs)
                .substitute(&gauss)
        })
        .collect();
    let rebuilt = Presentation::build(AlgebraDef {
        name: pres.name().to_string(),
        params: pres
            .params()
            .iter()
            .filter(|p| !bindings.contains_key(p))
            .cloned()
            .collect(),
        gens: pres.gens().to_vec(),
        star_pairs: star_pairs_of(pres),
        grouplike_pairs,
        relations: relations?,
    })?;
    Ok(ModelEntry {
        presentation: rebuilt,
        ..entry
    })
}

fn star_pairs_of(pres: &Presentation) -> Vec<(Sym, Sym)> {
    let mut out = Vec::new();
    for g in pres.gens() {
        if let Ok(s) = pres.star_of(g) {
            if s != g && !out.contains(&(s.clone(), g.clone())) {
                out.push((g.clone(), s.clone()));
            }
        }
    }
    out
}

fn grouplike_pairs_of(pres: &Presentation) -> Vec<(Sym, Sym)> {
    let mut out = Vec::new();
    for (g, gi) in pres.grouplike_pairs() {
        if !out.contains(&(gi.clone(), g.clone())) {
            out.push((g.clone(), gi.clone()));
        }
    }
    out
}

fn check_domains(model: &str, bindings: &Bindings) -> Result<(), ModelError> {
    let violation = |message: &str| {
        Err(ModelError::DomainViolation {
            model: model.to_string(),
            message: message.to_string(),
        })
    };
    match model {
        "podles" => {
            if let Some(mu) = bindings.get(&Sym::from("mu")) {
                if mu.is_zero() || mu.abs() >= BigRational::one() {
                    return violation("mu must satisfy 0 < |mu| < 1");
                }
            }
            if let Some(c) = bindings.get(&Sym::from("c")) {
                if c.is_negative() {
                    return violation("c must be nonnegative");
                }
            }
        }
        "cartesian-sphere" => {
            if let Some(c) = bindings.get(&Sym::from("c")) {
                let quarter = BigRational::new(BigInt::from(-1), BigInt::from(4));
                if *c <= quarter {
                    return violation("c must exceed -1/4 for a real radius");
                }
            }
        }
        _ => {
            if let Some(k) = bindings.get(&Sym::from("kappa")) {
                if k.is_zero() {
                    return violation("kappa must be nonzero");
                }
            }
        }
    }
    Ok(())
}

fn kminkowski2d() -> Result<ModelEntry, ModelError> {
    let ik = Scalar::i().mul(&Scalar::var("kappa"));
    let rel = commute("x0", "x1").add(&NCPoly::term(Word::gen("x1"), ik));
    let pres = Presentation::build(AlgebraDef {
        name: "kminkowski2d".into(),
        params: syms(&["kappa"]),
        gens: syms(&["x0", "x1"]),
        relations: vec![rel],
        ..Default::default()
    })?;
    let mut hopf = HopfData::new();
    hopf.set_primitive("x0");
    hopf.set_primitive("x1");
    Ok(ModelEntry {
        name: "kminkowski2d".into(),
        presentation: pres,
        hopf: Some(hopf),
        notes: vec![
            "two commuting-limit coordinates with [x0, x1] = i*kappa*x1".into(),
            "kappa is local to this model and not identified across presets".into(),
        ],
        known_failing: false,
    })
}

fn kminkowski4d(literal_bracket: bool) -> Result<ModelEntry, ModelError> {
    let factor = if literal_bracket {
        Scalar::one().div(&Scalar::var("kappa")).unwrap()
    } else {
        Scalar::i().div(&Scalar::var("kappa")).unwrap()
    };
    let mut relations = Vec::new();
    for xj in ["x1", "x2", "x3"] {
        relations.push(commute("x0", xj).add(&NCPoly::term(Word::gen(xj), factor.clone())));
    }
    for (i, xi) in ["x1", "x2", "x3"].iter().enumerate() {
        for xj in ["x1", "x2", "x3"].iter().skip(i + 1) {
            relations.push(commute(xi, xj));
        }
    }
    let name = if literal_bracket {
        "kminkowski4d-paper-bracket"
    } else {
        "kminkowski4d"
    };
    let pres = Presentation::build(AlgebraDef {
        name: name.into(),
        params: syms(&["kappa"]),
        gens: syms(&["x0", "x1", "x2", "x3"]),
        relations,
        ..Default::default()
    })?;
    let mut hopf = HopfData::new();
    for g in ["x0", "x1", "x2", "x3"] {
        hopf.set_primitive(g);
    }
    let notes = if literal_bracket {
        vec![
            "alternate convention [x0, xj] = (1/kappa)*xj without the factor i".into(),
            "negative control: the duality audit flags it and star closure \
             reports residual (2/kappa)*xj on each bracket rule"
                .into(),
        ]
    } else {
        vec![
            "canonical bracket [x0, xj] = (i/kappa)*xj".into(),
            "the factor i keeps the bracket star-consistent for self-adjoint coordinates".into(),
        ]
    };
    Ok(ModelEntry {
        name: name.into(),
        presentation: pres,
        hopf: Some(hopf),
        notes,
        known_failing: false,
    })
}

fn ktranslations4d(paper_antipode: bool) -> Result<ModelEntry, ModelError> {
    let order = ["P0", "P1", "P2", "P3", "E", "Einv"];
    let mut relations = Vec::new();
    for (i, a) in order.iter().enumerate() {
        for b in order.iter().skip(i + 1) {
            if (*a, *b) == ("E", "Einv") {
                continue; // the group-like contraction rules cover this pair
            }
            relations.push(commute(a, b));
        }
    }
    let name = if paper_antipode {
        "ktranslations4d-paper-antipode"
    } else {
        "ktranslations4d"
    };
    let pres = Presentation::build(AlgebraDef {
        name: name.into(),
        params: syms(&["kappa"]),
        gens: syms(&order),
        grouplike_pairs: vec![(Sym::from("E"), Sym::from("Einv"))],
        relations,
        ..Default::default()
    })?;
    let mut hopf = HopfData::new();
    hopf.set_primitive("P0");
    for p in ["P1", "P2", "P3"] {
        let d = TensorPoly::term(vec![Word::gen(p), Word::gen("E")], Scalar::one()).add(
            &TensorPoly::term(vec![Word::one(), Word::gen(p)], Scalar::one()),
        );
        let antipode = if paper_antipode {
            NCPoly::gen(p).neg()
        } else {
            NCPoly::word(Word::from_names(&[p, "Einv"])).neg()
        };
        hopf.set(p, d, Scalar::zero(), antipode);
    }
    hopf.set_grouplike("E", "Einv");
    hopf.set_grouplike("Einv", "E");
    let notes = if paper_antipode {
        vec![
            "variant with S(P_i) = -P_i on the twisted translations".into(),
            "fails the antipode axiom with residual P_i - P_i*E; kept as a negative control".into(),
        ]
    } else {
        vec![
            "commuting translations with adjoined invertible group-like E".into(),
            "antipode S(P_i) = -P_i*Einv compensates the twisted coproduct leg".into(),
        ]
    };
    Ok(ModelEntry {
        name: name.into(),
        presentation: pres,
        hopf: Some(hopf),
        notes,
        known_failing: paper_antipode,
    })
}

fn so11fun() -> Result<ModelEntry, ModelError> {
    let constraint = w(&["M01", "M01"])
        .sub(&w(&["M00", "M00"]))
        .add(&NCPoly::one());
    let pres = Presentation::build(AlgebraDef {
        name: "so11fun".into(),
        gens: syms(&["M00", "M01"]),
        relations: vec![commute("M00", "M01"), constraint],
        ..Default::default()
    })?;
    let hopf = Some(boost_hopf()?);
    Ok(ModelEntry {
        name: "so11fun".into(),
        presentation: pres,
        hopf,
        notes: vec![
            "commuting hyperbolic matrix entries with M00^2 - M01^2 = 1".into(),
            "matrix coproduct delta(M) = M (x) M; antipode is the eta-transpose".into(),
        ],
        known_failing: false,
    })
}

/// Shared coalgebra data of the 2x2 boost matrix entries M00, M01.
fn boost_hopf() -> Result<HopfData, ModelError> {
    let mut hopf = HopfData::new();
    let d00 = TensorPoly::term(vec![Word::gen("M00"), Word::gen("M00")], Scalar::one()).add(
        &TensorPoly::term(vec![Word::gen("M01"), Word::gen("M01")], Scalar::one()),
    );
    hopf.set("M00", d00, Scalar::one(), NCPoly::gen("M00"));
    let d01 = TensorPoly::term(vec![Word::gen("M00"), Word::gen("M01")], Scalar::one()).add(
        &TensorPoly::term(vec![Word::gen("M01"), Word::gen("M00")], Scalar::one()),
    );
    hopf.set("M01", d01, Scalar::zero(), NCPoly::gen("M01").neg());
    Ok(hopf)
}

fn kpoincare2d() -> Result<ModelEntry, ModelError> {
    let ik = Scalar::i().mul(&Scalar::var("kappa"));
    let t = |names: &[&str], c: &Scalar| NCPoly::term(Word::from_names(names), c.clone());

    let mut relations = vec![
        commute("M00", "M01"),
        w(&["M01", "M01"]).sub(&w(&["M00", "M00"])).add(&NCPoly::one()),
    ];
    // [u0, M00] = i*kappa*(M00^2 - 1)
    relations.push(
        commute("M00", "u0")
            .sub(&t(&["M00", "M00"], &ik))
            .add(&NCPoly::constant(ik.clone())),
    );
    // [u0, M01] = i*kappa*M00*M01
    relations.push(commute("M01", "u0").sub(&t(&["M00", "M01"], &ik)));
    // [u1, M00] = i*kappa*M01*(M00 - 1)
    relations.push(
        commute("M00", "u1")
            .sub(&t(&["M01", "M00"], &ik))
            .add(&t(&["M01"], &ik)),
    );
    // [u1, M01] = i*kappa*M00*(M00 - 1)
    relations.push(
        commute("M01", "u1")
            .sub(&t(&["M00", "M00"], &ik))
            .add(&t(&["M00"], &ik)),
    );
    // [u0, u1] = i*kappa*u1
    relations.push(commute("u0", "u1").add(&t(&["u1"], &ik)));

    let pres = Presentation::build(AlgebraDef {
        name: "kpoincare2d".into(),
        params: syms(&["kappa"]),
        gens: syms(&["M00", "M01", "u0", "u1"]),
        relations,
        ..Default::default()
    })?;

    let mut hopf = boost_hopf()?;
    // delta(u^mu) = u^mu (x) 1 + M^mu_nu (x) u^nu
    let du0 = TensorPoly::term(vec![Word::gen("u0"), Word::one()], Scalar::one())
        .add(&TensorPoly::term(vec![Word::gen("M00"), Word::gen("u0")], Scalar::one()))
        .add(&TensorPoly::term(vec![Word::gen("M01"), Word::gen("u1")], Scalar::one()));
    // S(u^mu) = -eta^{mu nu} M^rho_nu eta_{rho lam} u^lam
    let su0 = t(&["M00", "u0"], &Scalar::one())
        .neg()
        .add(&t(&["M01", "u1"], &Scalar::one()));
    hopf.set("u0", du0, Scalar::zero(), su0);
    let du1 = TensorPoly::term(vec![Word::gen("u1"), Word::one()], Scalar::one())
        .add(&TensorPoly::term(vec![Word::gen("M01"), Word::gen("u0")], Scalar::one()))
        .add(&TensorPoly::term(vec![Word::gen("M00"), Word::gen("u1")], Scalar::one()));
    let su1 = t(&["M01", "u0"], &Scalar::one()).sub(&t(&["M00", "u1"], &Scalar::one()));
    hopf.set("u1", du1, Scalar::zero(), su1);

    Ok(ModelEntry {
        name: "kpoincare2d".into(),
        presentation: pres,
        hopf: Some(hopf),
        notes: vec![
            "boost-matrix entries acting on two twisted translations".into(),
            "cross-relations for M01 completed as the unique vector-field extension \
             that keeps M00^2 - M01^2 central; centrality is tested in-repo"
                .into(),
        ],
        known_failing: false,
    })
}

fn podles() -> Result<ModelEntry, ModelError> {
    let mu2 = Scalar::var("mu").pow(2);
    let mu4 = Scalar::var("mu").pow(4);
    let c = Scalar::var("c");
    let quad = |top: &Scalar, lin: &Scalar| {
        // lin*A - top*A^2 + c
        NCPoly::term(Word::gen("A"), lin.clone())
            .sub(&NCPoly::term(Word::from_names(&["A", "A"]), top.clone()))
            .add(&NCPoly::constant(c.clone()))
    };
    let relations = vec![
        // B A = mu^2 A B
        w(&["B", "A"]).sub(&w(&["A", "B"]).scale(&mu2)),
        // B* A = mu^-2 A B*
        w(&["Bs", "A"]).sub(&w(&["A", "Bs"]).scale(&Scalar::var("mu").pow(-2))),
        // B* B = A - A^2 + c
        w(&["Bs", "B"]).sub(&quad(&Scalar::one(), &Scalar::one())),
        // B B* = mu^2 A - mu^4 A^2 + c
        w(&["B", "Bs"]).sub(&quad(&mu4, &mu2)),
    ];
    let pres = Presentation::build(AlgebraDef {
        name: "podles".into(),
        params: syms(&["mu", "c"]),
        gens: syms(&["A", "B", "Bs"]),
        star_pairs: vec![(Sym::from("B"), Sym::from("Bs"))],
        relations,
        ..Default::default()
    })?;
    Ok(ModelEntry {
        name: "podles".into(),
        presentation: pres,
        hopf: None,
        notes: vec![
            "quantum-sphere generators A, B, B* with mu-deformed relations".into(),
            "lowering spectrum uses lambda_pm = 1/2 +- (c + 1/4)^(1/2), \
             the roots of lambda - lambda^2 + c = 0 forced by chain termination"
                .into(),
        ],
        known_failing: false,
    })
}

fn cartesian_sphere() -> Result<ModelEntry, ModelError> {
    let r2 = Scalar::var("c").add(&Scalar::from_ratio(1, 4));
    let sphere = w(&["x3", "x3"])
        .add(&w(&["x2", "x2"]))
        .add(&w(&["x1", "x1"]))
        .sub(&NCPoly::constant(r2));
    let pres = Presentation::build(AlgebraDef {
        name: "cartesian-sphere".into(),
        params: syms(&["c"]),
        gens: syms(&["x1", "x2", "x3"]),
        relations: vec![
            commute("x1", "x2"),
            commute("x1", "x3"),
            commute("x2", "x3"),
            sphere,
        ],
        ..Default::default()
    })?;
    Ok(ModelEntry {
        name: "cartesian-sphere".into(),
        presentation: pres,
        hopf: None,
        notes: vec![
            "commuting coordinates constrained to a sphere of squared radius c + 1/4".into(),
            "classical target of the quantum-sphere representations at mu -> 1".into(),
        ],
        known_failing: false,
    })
}
