//! Acceptance gate for the workspace: one test per release criterion.
//!
//! Every test prints exactly one `criterion N (...): PASS|FAIL` line (visible
//! with `--nocapture`); the assertions behind the line are exact wherever the
//! arithmetic is exact, and use the pinned 1e-12 tolerance where floating
//! point is involved.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, Output};

use nalgebra::{Complex, DMatrix, DVector};
use num::BigRational;

use hopflab_core::algebra::{NCPoly, Word};
use hopflab_core::hopf::{check_hopf, check_pairing_compat, pair, Axiom, CompatKind};
use hopflab_core::igl::{
    act, convergence_order, convergence_study, position_operators, GridFunction, GroupElt2,
    LogGrid,
};
use hopflab_core::models::{
    build_model, build_pairing, corrupted_podles, model_names, Bindings,
};
use hopflab_core::podles::{
    build_rep, classical_embedding_check, radius, relation_residuals, spectrum, Branch, Radius,
};
use hopflab_core::scalar::Scalar;
use hopflab_core::sym::Sym;
use hopflab_core::twoparticle::{compose_hamiltonian, entanglement_entropy, singlet, TensorState};

type C64 = Complex<f64>;

const TOL: f64 = 1e-12;
const FLAGGED: &str = "ktranslations4d-paper-antipode";

fn criterion(number: u32, title: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("criterion {number} ({title}): PASS"),
        Err(cause) => {
            println!("criterion {number} ({title}): FAIL");
            resume_unwind(cause);
        }
    }
}

fn entry(name: &str) -> hopflab_core::models::ModelEntry {
    build_model(name, &Bindings::new()).unwrap_or_else(|e| panic!("{name}: {e}"))
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_1_hopf_axioms() {
    criterion(1, "Hopf axioms at degree 3 across the catalogue", || {
        let mut saw_flagged = false;
        for name in model_names() {
            let entry = entry(name);
            let Some(hopf) = entry.hopf else {
                assert!(!entry.known_failing, "{name}: flagged but has no Hopf data");
                continue;
            };
            let report = check_hopf(&entry.presentation, &hopf, 3).unwrap();
            if *name == FLAGGED {
                saw_flagged = true;
                assert!(entry.known_failing, "{name} must be marked known-failing");
                assert_eq!(
                    report.failed_axioms(),
                    vec![Axiom::AntipodeLaw],
                    "{name} must fail exactly the antipode law"
                );
                let check = report.check(Axiom::AntipodeLaw);
                for i in 1..=3 {
                    let element = format!("P{i}");
                    let residual = format!("P{i} - P{i}*E");
                    assert!(
                        check
                            .witnesses
                            .iter()
                            .any(|w| w.element == element && w.residual.to_string() == residual),
                        "{name}: expected witness {element} with residual {residual}, got {:?}",
                        check
                            .witnesses
                            .iter()
                            .map(|w| (w.element.clone(), w.residual.to_string()))
                            .collect::<Vec<_>>()
                    );
                }
            } else {
                assert!(!entry.known_failing, "{name} unexpectedly marked known-failing");
                assert!(
                    report.all_passed(),
                    "{name} fails axioms {:?}",
                    report.failed_axioms()
                );
            }
        }
        assert!(saw_flagged, "catalogue must contain the flagged variant");

        // the corrected-antipode sibling of the flagged model passes
        let fixed = entry("ktranslations4d");
        let report = check_hopf(&fixed.presentation, &fixed.hopf.unwrap(), 3).unwrap();
        assert!(report.all_passed());
    });
}

#[test]
fn criterion_2_confluence() {
    criterion(2, "local confluence of every shipped rewriting system", || {
        for name in model_names() {
            let pres = entry(name).presentation;
            let pairs = pres.critical_pairs().unwrap();
            assert!(
                pairs.iter().all(|cp| cp.joinable()),
                "{name} has a non-joinable overlap"
            );
        }
        let bad = corrupted_podles();
        let pairs = bad.critical_pairs().unwrap();
        assert!(
            pairs.iter().any(|cp| !cp.joinable()),
            "the corrupted fixture must expose a nonzero residual"
        );
    });
}

#[test]
fn criterion_3_duality_pairing() {
    criterion(3, "duality values and the compatibility audit", || {
        let bundle = build_pairing("xP-duality").unwrap();
        let ctx = bundle.context();

        // generator table is exactly i on the diagonal
        for mu in 0..4 {
            for nu in 0..4 {
                let a = NCPoly::gen(format!("x{mu}").as_str());
                let b = NCPoly::gen(format!("P{nu}").as_str());
                let v = pair(&a, &b, &ctx).unwrap();
                let want = if mu == nu { Scalar::i() } else { Scalar::zero() };
                assert!(v.sub(&want).is_zero(), "<x{mu}, P{nu}> = {v}");
            }
        }

        // squared value through the evaluator
        let left = NCPoly::word(Word::from_names(&["x1", "x1"]));
        let right = NCPoly::word(Word::from_names(&["P1", "P1"]));
        let value = pair(&left, &right, &ctx).unwrap();
        assert!(
            value.sub(&Scalar::from_int(-2)).is_zero(),
            "<x1^2, P1^2> = {value}, expected -2"
        );

        // independent oracle: expand delta(P1)^2 leg by leg and pair against
        // x1 using only the generator table and the counit, never the
        // recursive evaluator
        let p1 = Sym::from("P1");
        let dp1 = bundle.hopf_b.coproduct_of(&p1).expect("P1 has a coproduct");
        let counit_of = |s: &Sym| -> Scalar {
            bundle
                .hopf_b
                .counit_of(s)
                .cloned()
                .unwrap_or_else(|_| Scalar::one()) // group-likes count 1, P's count 0
        };
        let base = |s: &Sym| -> Scalar {
            if *s == p1 { Scalar::i() } else { Scalar::zero() }
        };
        // <x1, s_1 ... s_k> = sum_j <x1, s_j> prod_{l != j} eps(s_l)
        let pair_x1 = |w: &Word| -> Scalar {
            let syms = w.syms();
            let mut total = Scalar::zero();
            for j in 0..syms.len() {
                let mut term = base(&syms[j]);
                for (l, s) in syms.iter().enumerate() {
                    if l != j {
                        term = term.mul(&counit_of(s));
                    }
                }
                total = total.add(&term);
            }
            total
        };
        let mut oracle = Scalar::zero();
        for (legs1, c1) in dp1.terms() {
            for (legs2, c2) in dp1.terms() {
                let wl = legs1[0].concat(&legs2[0]);
                let wr = legs1[1].concat(&legs2[1]);
                let coef = c1.mul(c2);
                oracle = oracle.add(&pair_x1(&wl).mul(&pair_x1(&wr)).mul(&coef));
            }
        }
        assert!(
            oracle.sub(&Scalar::from_int(-2)).is_zero(),
            "brute-force expansion gives {oracle}, expected -2"
        );
        assert!(value.sub(&oracle).is_zero());

        // canonical convention passes the audit
        let good = check_pairing_compat(&ctx, 2).unwrap();
        assert!(
            good.all_passed(),
            "canonical audit failures: {:?}",
            good.failures()
                .map(|e| format!("{} <{}, {}> {}", e.kind, e.left, e.right, e.residual))
                .collect::<Vec<_>>()
        );
        assert_eq!(good.entries.len(), 324);

        // the bracket without the factor i is flagged with residual (1+i)/kappa
        let bad = build_pairing("xP-duality-paper-bracket").unwrap();
        assert!(bad.audit_fails);
        let report = check_pairing_compat(&bad.context(), 2).unwrap();
        assert!(!report.all_passed());
        let expected = Scalar::one()
            .add(&Scalar::i())
            .div(&Scalar::var("kappa"))
            .unwrap();
        assert!(
            report
                .failures()
                .any(|e| e.kind == CompatKind::Relation && e.residual.sub(&expected).is_zero()),
            "expected a relation failure with residual {expected}"
        );
    });
}

#[test]
fn criterion_4_sphere_truncations() {
    criterion(4, "quantum-sphere lattice: interior, edge, spectrum", || {
        for (p, q) in [(1i64, 4i64), (1, 2), (3, 4)] {
            let mu = BigRational::new(p.into(), q.into());
            let mu_f = p as f64 / q as f64;
            for c_int in 0i64..=2 {
                let c = BigRational::from_integer(c_int.into());
                let c_f = c_int as f64;
                for branch in [Branch::Plus, Branch::Minus] {
                    if branch == Branch::Minus && c_int == 0 {
                        // the minus chain degenerates at c = 0; the
                        // constructor must refuse it rather than hand back
                        // the zero representation
                        assert!(build_rep(branch, &mu, &c, 8).is_err());
                        continue;
                    }
                    let lam = match branch {
                        Branch::Plus => 0.5 + (c_f + 0.25).sqrt(),
                        Branch::Minus => 0.5 - (c_f + 0.25).sqrt(),
                    };
                    for dim in [2usize, 8, 64] {
                        let label = format!("mu={p}/{q} c={c_int} {branch:?} N={dim}");
                        let rep = build_rep(branch, &mu, &c, dim).unwrap();
                        let report = relation_residuals(&rep).unwrap();

                        // interior identically zero, decided in exact arithmetic
                        assert!(report.interior_exact(), "{label}: interior not exact");
                        assert_eq!(report.max_interior(), 0.0, "{label}");

                        // edge defect equals the dropped matrix element c(N)
                        let n = dim as i32;
                        let predicted =
                            lam * mu_f.powi(2 * n) - lam * lam * mu_f.powi(4 * n) + c_f;
                        assert!(
                            (report.max_edge() - predicted).abs() < TOL,
                            "{label}: edge {} vs predicted {predicted}",
                            report.max_edge()
                        );

                        // spectrum of A is lam * mu^(2k)
                        let got = spectrum(&rep);
                        let mut want: Vec<f64> =
                            (0..n).map(|k| lam * mu_f.powi(2 * k)).collect();
                        want.sort_by(|x, y| y.partial_cmp(x).unwrap());
                        assert_eq!(got.len(), want.len());
                        for (g, w) in got.iter().zip(&want) {
                            assert!((g - w).abs() < TOL, "{label}: eigenvalue {g} vs {w}");
                        }

                        // c(0) = 0 identically: the lowering chain terminates,
                        // so the first column of B is exactly zero
                        assert!(
                            rep.b.column(0).iter().all(|z| z.re == 0.0 && z.im == 0.0),
                            "{label}: B e_0 != 0"
                        );
                        let bsb = &rep.b_star * &rep.b;
                        assert_eq!(bsb[(0, 0)], C64::new(0.0, 0.0), "{label}");
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_5_classical_limit() {
    criterion(5, "classical embedding residual and sphere radii", || {
        for c_int in [0i64, 2] {
            let c = BigRational::from_integer(c_int.into());
            let worst = classical_embedding_check(&c, 100, 7).unwrap();
            assert!(worst < TOL, "c={c_int}: embedding residual {worst}");
        }
        match radius(&BigRational::from_integer(0.into())).unwrap() {
            Radius::Rational(r) => {
                assert_eq!(r, BigRational::new(1.into(), 2.into()));
            }
            Radius::Real(r) => panic!("radius(0) should be exact, got {r}"),
        }
        match radius(&BigRational::from_integer(2.into())).unwrap() {
            Radius::Rational(r) => {
                assert_eq!(r, BigRational::new(3.into(), 2.into()));
            }
            Radius::Real(r) => panic!("radius(2) should be exact, got {r}"),
        }
    });
}

#[test]
fn criterion_6_two_particle() {
    criterion(6, "two-particle flip, composite spectrum, entanglement", || {
        let lam_up = 1.25f64;
        let lam_down = -0.75f64;
        let h = DMatrix::from_diagonal(&DVector::from_vec(vec![
            C64::new(lam_up, 0.0),
            C64::new(lam_down, 0.0),
        ]));
        let sys = compose_hamiltonian(&h).unwrap();
        let v = singlet();

        // K v = -v exactly
        let kv = &sys.k * &v.values;
        assert_eq!(kv, v.values.map(|z| -z));

        // H2 v = (lam_up + lam_down) v within 1e-12
        let h2v = &sys.h2 * &v.values;
        let want = v.values.map(|z| z * C64::new(lam_up + lam_down, 0.0));
        assert!((h2v - want).norm() < TOL);

        // normalized singlet entropy is ln 2
        let ent = entanglement_entropy(&v).unwrap();
        assert!((ent - std::f64::consts::LN_2).abs() < TOL, "entropy {ent}");

        // product states carry no entanglement
        let a = DVector::from_vec(vec![C64::new(0.6, 0.3), C64::new(-0.2, 0.7)]);
        let b = DVector::from_vec(vec![C64::new(0.1, -0.4), C64::new(0.9, 0.2)]);
        let product = TensorState::product(&a, &b);
        let ent = entanglement_entropy(&product).unwrap();
        assert!(ent.abs() < TOL, "product entropy {ent}");
    });
}

#[test]
fn criterion_7_affine_group_operators() {
    criterion(7, "affine group, lattice action, spectrum, convergence", || {
        // group axioms, exact on dyadic rationals
        let elems: Vec<GroupElt2> = (-2..=2)
            .flat_map(|m| {
                (-4..=4).map(move |k| {
                    GroupElt2::new(k as f64 / 4.0, (2.0f64).powi(m)).unwrap()
                })
            })
            .collect();
        let id = GroupElt2::identity();
        for g in &elems {
            assert_eq!(g.mul(&id), *g);
            assert_eq!(id.mul(g), *g);
            assert_eq!(g.mul(&g.inv()), id);
        }
        for g1 in elems.iter().step_by(4) {
            for g2 in elems.iter().step_by(5) {
                for g3 in elems.iter().step_by(7) {
                    assert_eq!(g1.mul(g2).mul(g3), g1.mul(&g2.mul(g3)));
                }
            }
        }

        // representation homomorphism, exact for lattice dilations acting on
        // an interior-supported function
        let lambda = -1.0;
        let kappa = 1.0;
        let grid = LogGrid::default_grid();
        let mut values = DVector::from_element(grid.size, C64::new(0.0, 0.0));
        for j in 100..150 {
            let xi = grid.node(j);
            values[j] = C64::new((xi - 1.0).exp(), 0.5 * xi);
        }
        let phi = GridFunction::new(grid, values).unwrap();
        let g1 = GroupElt2::new(0.0, grid.ratio.powi(9)).unwrap();
        let g2 = GroupElt2::new(0.0, grid.ratio.powi(-13)).unwrap();
        let two_step = act(lambda, &g1, &act(lambda, &g2, &phi));
        let one_step = act(lambda, &g1.mul(&g2), &phi);
        assert!(!one_step.resampled);
        assert_eq!(two_step.values, one_step.values);

        // X1 spectrum is the positive lattice, exactly
        let ops = position_operators(lambda, kappa, &grid).unwrap();
        let spectrum = ops.x1_spectrum();
        assert_eq!(spectrum.len(), grid.size);
        for (j, s) in spectrum.iter().enumerate() {
            assert_eq!(*s, -kappa * lambda * grid.node(j));
            assert!(*s > 0.0);
        }

        // commutator residual falls off at second order across four halvings
        let rows = convergence_study(lambda, kappa, &grid, 4).unwrap();
        assert_eq!(rows.len(), 5);
        for w in rows.windows(2) {
            assert!(w[1].residual < w[0].residual, "residuals must decrease");
        }
        let orders = convergence_order(&rows).unwrap();
        assert_eq!(orders.len(), 4);
        for o in &orders {
            assert!((o - 2.0).abs() <= 0.2, "observed order {o}");
        }
    });
}

// ---------------------------------------------------------------------------
// criterion 8: the installed binary

fn repo_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopflab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("no signal")
}

#[test]
fn criterion_8_cli_contract() {
    criterion(8, "CLI golden files, exit codes, byte stability", || {
        use hopflab_cli::dsl::{build_algebra, parse_document, render_algebra};

        // golden-file round trips: every shipped .alg is a fixed point
        for name in model_names() {
            let path = repo_root().join("models").join(format!("{name}.alg"));
            let text = std::fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            let built = build_algebra(&parse_document(&text).unwrap()).unwrap();
            let printed = render_algebra(&built.presentation, built.hopf.as_ref());
            assert_eq!(printed, text, "{name}.alg is not canonical");
        }

        // exit-code contract: 0 pass, 1 failed verification, 2 usage
        assert_eq!(exit_code(&["check", "kminkowski2d"]), 0);
        assert_eq!(exit_code(&["check", FLAGGED]), 1);
        let flagged_file = repo_root().join("models").join(format!("{FLAGGED}.alg"));
        assert_eq!(exit_code(&["check", flagged_file.to_str().unwrap()]), 1);
        assert_eq!(exit_code(&["check", "no-such-model"]), 2);
        assert_eq!(exit_code(&["--bogus-flag"]), 2);
        assert_eq!(
            exit_code(&["nf", "--model", "kminkowski2d", "--expr", "x1*zz"]),
            2
        );
        assert_eq!(
            exit_code(&["pair", "--pairing", "xP-duality", "--compat"]),
            0
        );
        assert_eq!(
            exit_code(&["pair", "--pairing", "xP-duality-paper-bracket", "--compat"]),
            1
        );

        // JSON and CSV outputs are byte-stable across consecutive runs
        let tmp = std::env::temp_dir().join(format!("hopflab-acceptance-{}", std::process::id()));
        std::fs::create_dir_all(&tmp).unwrap();
        let file = |stem: &str| tmp.join(stem).to_str().unwrap().to_string();

        let a = run(&["models", "--json"]);
        let b = run(&["models", "--json"]);
        assert!(a.status.success() && b.status.success());
        assert_eq!(a.stdout, b.stdout, "models --json not stable");

        let a = run(&["check", "kminkowski2d", "--degree", "3", "--json"]);
        let b = run(&["check", "kminkowski2d", "--degree", "3", "--json"]);
        assert_eq!(a.stdout, b.stdout, "check --json not stable");

        let pod = |out: &str| {
            [
                "podles", "--mu", "1/2", "--c", "1", "--sign", "minus", "--dim", "16",
                "--spectrum", out, "--json",
            ]
            .map(String::from)
        };
        let fa = file("pod-a.csv");
        let fb = file("pod-b.csv");
        let a = run(&pod(&fa).iter().map(|s| s.as_str()).collect::<Vec<_>>());
        let b = run(&pod(&fb).iter().map(|s| s.as_str()).collect::<Vec<_>>());
        assert!(a.status.success() && b.status.success());
        assert_eq!(a.stdout, b.stdout, "podles --json not stable");
        assert_eq!(
            std::fs::read(&fa).unwrap(),
            std::fs::read(&fb).unwrap(),
            "podles spectrum CSV not stable"
        );

        let ig = |out: &str| {
            ["igl", "--grid", "256", "--refine", "2", "--csv", out, "--json"].map(String::from)
        };
        let fa = file("igl-a.csv");
        let fb = file("igl-b.csv");
        let a = run(&ig(&fa).iter().map(|s| s.as_str()).collect::<Vec<_>>());
        let b = run(&ig(&fb).iter().map(|s| s.as_str()).collect::<Vec<_>>());
        assert!(a.status.success() && b.status.success());
        assert_eq!(a.stdout, b.stdout, "igl --json not stable");
        assert_eq!(
            std::fs::read(&fa).unwrap(),
            std::fs::read(&fb).unwrap(),
            "igl convergence CSV not stable"
        );

        let _ = std::fs::remove_dir_all(&tmp);
    });
}
