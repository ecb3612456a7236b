//! Subcommand implementations. Every runner returns the process exit code:
//! 0 for all-pass, 1 for a failed verification; usage and parse problems
//! surface as errors and exit 2.

use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use nalgebra::{Complex, DMatrix, DVector};
use num::BigRational;
use serde_json::json;

use hopflab_core::hopf::{check_hopf, check_pairing_compat, pair, HopfData};
use hopflab_core::igl::{self, LogGrid};
use hopflab_core::models::{build_model, build_pairing, list_catalog, model_names, Bindings};
use hopflab_core::podles::{build_rep, relation_residuals, spectrum, Branch};
use hopflab_core::twoparticle;
use hopflab_core::Presentation;

use crate::dsl;
use crate::report::{print_json, sci, write_text};

type C64 = Complex<f64>;

// ---------------------------------------------------------------------------
// check

pub struct CheckOpts {
    pub target: String,
    pub degree: u32,
    pub json: bool,
}

fn load_target(target: &str) -> anyhow::Result<(Presentation, Option<HopfData>)> {
    if model_names().contains(&target) {
        let entry = build_model(target, &Bindings::new())?;
        return Ok((entry.presentation, entry.hopf));
    }
    let text = std::fs::read_to_string(target)
        .with_context(|| format!("`{target}` is neither a catalogue model nor a readable file"))?;
    let doc = dsl::parse_document(&text).map_err(|e| anyhow!("{target}:{e}"))?;
    let built = dsl::build_algebra(&doc).map_err(|e| anyhow!("{target}:{e}"))?;
    Ok((built.presentation, built.hopf))
}

pub fn run_check(opts: CheckOpts) -> anyhow::Result<i32> {
    let (pres, hopf) = load_target(&opts.target)?;
    let hopf = hopf.ok_or_else(|| {
        anyhow!("`{}` declares no coproduct/counit/antipode data to check", opts.target)
    })?;
    let pairs = pres.critical_pairs()?;
    let confluent = pairs.iter().all(|p| p.joinable());
    let star_reports = pres.check_star_closure()?;
    let star_open: Vec<usize> = star_reports
        .iter()
        .filter(|r| !r.closed())
        .map(|r| r.rule)
        .collect();
    let report = check_hopf(&pres, &hopf, opts.degree)?;
    let passed = confluent && report.all_passed();

    if opts.json {
        let axioms: Vec<serde_json::Value> = report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "axiom": c.axiom.to_string(),
                    "passed": c.passed(),
                    "witnesses": c.witnesses.iter().map(|w| json!({
                        "element": w.element,
                        "residual": w.residual.to_string(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        print_json(&json!({
            "algebra": pres.name(),
            "axioms": axioms,
            "command": "check",
            "confluent": confluent,
            "degree": opts.degree,
            "passed": passed,
            "star_open_rules": star_open,
        }));
    } else {
        println!("algebra {} (degree {})", pres.name(), opts.degree);
        println!(
            "confluence: {}",
            if confluent { "pass" } else { "FAIL" }
        );
        if !star_open.is_empty() {
            println!("note: rules {star_open:?} are not star-closed");
        }
        for c in &report.checks {
            if c.passed() {
                println!("axiom {}: pass", c.axiom);
            } else {
                println!("axiom {}: FAIL ({} witnesses)", c.axiom, c.witnesses.len());
                for w in c.witnesses.iter().take(3) {
                    println!("  element {}: residual {}", w.element, w.residual);
                }
            }
        }
        println!("result: {}", if passed { "pass" } else { "FAIL" });
    }
    Ok(if passed { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// nf

pub struct NfOpts {
    pub model: Option<String>,
    pub file: Option<PathBuf>,
    pub expr: String,
    pub json: bool,
}

pub fn run_nf(opts: NfOpts) -> anyhow::Result<i32> {
    let target = match (&opts.model, &opts.file) {
        (Some(m), None) => m.clone(),
        (None, Some(f)) => f.display().to_string(),
        _ => bail!("give exactly one of --model or --file"),
    };
    let (pres, _) = load_target(&target)?;
    let input = dsl::expr_for_presentation(&opts.expr, &pres).map_err(|e| anyhow!("--expr {e}"))?;
    let reduced = pres.reduce(&input)?;
    let rendered = dsl::poly_string(&pres, &reduced);
    if opts.json {
        print_json(&json!({
            "algebra": pres.name(),
            "command": "nf",
            "input": opts.expr,
            "normal_form": rendered,
            "term_count": reduced.num_terms(),
        }));
    } else {
        println!("{rendered}");
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// pair

pub struct PairOpts {
    pub pairing: String,
    pub left: Option<String>,
    pub right: Option<String>,
    pub compat: bool,
    pub degree: u32,
    pub json: bool,
}

pub fn run_pair(opts: PairOpts) -> anyhow::Result<i32> {
    let bundle = build_pairing(&opts.pairing)?;
    let ctx = bundle.context();
    if opts.compat {
        let report = check_pairing_compat(&ctx, opts.degree)?;
        let passed = report.all_passed();
        if opts.json {
            let failures: Vec<serde_json::Value> = report
                .failures()
                .map(|f| {
                    json!({
                        "kind": f.kind.to_string(),
                        "left": f.left,
                        "residual": f.residual.to_string(),
                        "right": f.right,
                    })
                })
                .collect();
            print_json(&json!({
                "checked": report.entries.len(),
                "command": "pair-compat",
                "degree": opts.degree,
                "failures": failures,
                "pairing": bundle.name,
                "passed": passed,
            }));
        } else {
            println!(
                "pairing {} compatibility at degree {}: {} checks, {}",
                bundle.name,
                opts.degree,
                report.entries.len(),
                if passed { "pass" } else { "FAIL" }
            );
            for f in report.failures().take(5) {
                println!("  {} <{}, {}> residual {}", f.kind, f.left, f.right, f.residual);
            }
        }
        return Ok(if passed { 0 } else { 1 });
    }
    let (left_text, right_text) = match (&opts.left, &opts.right) {
        (Some(l), Some(r)) => (l.clone(), r.clone()),
        _ => bail!("give --left and --right expressions, or --compat"),
    };
    let left = dsl::expr_for_presentation(&left_text, &bundle.pres_a)
        .map_err(|e| anyhow!("--left {e}"))?;
    let right = dsl::expr_for_presentation(&right_text, &bundle.pres_b)
        .map_err(|e| anyhow!("--right {e}"))?;
    let value = pair(&left, &right, &ctx)?;
    if opts.json {
        print_json(&json!({
            "command": "pair",
            "left": left_text,
            "pairing": bundle.name,
            "right": right_text,
            "value": value.to_string(),
        }));
    } else {
        println!("{value}");
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// models

pub struct ModelsOpts {
    pub json: bool,
    pub emit: Option<PathBuf>,
}

pub fn run_models(opts: ModelsOpts) -> anyhow::Result<i32> {
    if let Some(dir) = &opts.emit {
        std::fs::create_dir_all(dir)
            .with_context(|| format!("cannot create {}", dir.display()))?;
        for name in model_names() {
            let entry = build_model(name, &Bindings::new())?;
            let text = dsl::render_algebra(&entry.presentation, entry.hopf.as_ref());
            let path = dir.join(format!("{name}.alg"));
            write_text(&path, &text)?;
            println!("wrote {}", path.display());
        }
        return Ok(0);
    }
    let catalog = list_catalog();
    if opts.json {
        print_json(&json!({
            "catalog": catalog,
            "command": "models",
        }));
    } else {
        for line in catalog {
            let flag = if line.known_failing { "  [known-failing]" } else { "" };
            let params = if line.parameters.is_empty() {
                String::new()
            } else {
                format!("  params: {}", line.parameters.join(", "))
            };
            println!("{:32} {}{params}{flag}", line.name, line.kind);
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// podles

pub struct PodlesOpts {
    pub mu: String,
    pub c: String,
    pub sign: String,
    pub dim: usize,
    pub spectrum: Option<PathBuf>,
    pub json: bool,
}

fn parse_rational(text: &str, what: &str) -> anyhow::Result<BigRational> {
    BigRational::from_str(text)
        .map_err(|_| anyhow!("--{what} wants a rational like 1/2 or 3, got `{text}`"))
}

pub fn run_podles(opts: PodlesOpts) -> anyhow::Result<i32> {
    let mu = parse_rational(&opts.mu, "mu")?;
    let c = parse_rational(&opts.c, "c")?;
    let branch = Branch::from_str(&opts.sign).map_err(|e| anyhow!("--sign: {e}"))?;
    let rep = build_rep(branch, &mu, &c, opts.dim)?;
    let report = relation_residuals(&rep)?;
    let spectrum = spectrum(&rep);
    if let Some(path) = &opts.spectrum {
        let mut out = String::from("k,eigenvalue\n");
        for (k, v) in spectrum.iter().enumerate() {
            out.push_str(&format!("{k},{}\n", sci(*v)));
        }
        write_text(path, &out)?;
    }
    let passed = report.interior_exact();
    if opts.json {
        print_json(&json!({
            "branch": branch.to_string(),
            "c": opts.c,
            "command": "podles",
            "dim": opts.dim,
            "interior_exact": report.interior_exact(),
            "max_edge_residual": report.max_edge(),
            "max_interior_residual": report.max_interior(),
            "mu": opts.mu,
            "passed": passed,
            "relations": report.relations,
            "spectrum_top": spectrum.first().copied(),
        }));
    } else {
        println!(
            "podles branch {} mu {} c {} dim {}",
            branch, opts.mu, opts.c, opts.dim
        );
        for r in &report.relations {
            println!(
                "relation {:28} interior {} edge {}",
                r.relation,
                if r.interior_exactly_zero { "exact 0".into() } else { sci(r.interior) },
                sci(r.edge)
            );
        }
        println!("result: {}", if passed { "pass" } else { "FAIL" });
    }
    Ok(if passed { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// twoparticle

pub struct TwoOpts {
    pub levels: String,
    pub json: bool,
}

pub fn run_twoparticle(opts: TwoOpts) -> anyhow::Result<i32> {
    let levels: Vec<f64> = opts
        .levels
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| anyhow!("--levels wants comma-separated numbers, got `{s}`")))
        .collect::<Result<_, _>>()?;
    if levels.len() != 2 {
        bail!("--levels wants exactly two energies for the spin-1/2 pair, got {}", levels.len());
    }
    let h = DMatrix::from_diagonal(&DVector::from_iterator(
        2,
        levels.iter().map(|x| C64::new(*x, 0.0)),
    ));
    let sys = twoparticle::compose_hamiltonian(&h)?;
    let v = twoparticle::singlet();

    let k2 = &sys.k * &sys.k;
    let flip_involutive = k2 == DMatrix::<C64>::identity(4, 4);
    let kv = &sys.k * &v.values;
    let flip_antisymmetric = kv == -&v.values;
    let target = levels[0] + levels[1];
    let h2v = &sys.h2 * &v.values;
    let eigen_residual = (&h2v - &v.values * C64::new(target, 0.0)).norm();
    let entropy = twoparticle::entanglement_entropy(&v)?;
    let schmidt = twoparticle::schmidt_spectrum(&v)?;
    let product = twoparticle::TensorState::product(
        &DVector::from_vec(vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)]),
        &DVector::from_vec(vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)]),
    );
    let product_entropy = twoparticle::entanglement_entropy(&product)?;
    let ln2 = 2f64.ln();
    let tol = 1e-12;
    let passed = flip_involutive
        && flip_antisymmetric
        && eigen_residual < tol
        && (entropy - ln2).abs() < tol
        && product_entropy.abs() < tol;

    if opts.json {
        print_json(&json!({
            "command": "twoparticle",
            "composite_eigenvalue": target,
            "composite_eigenvalue_residual": eigen_residual,
            "flip_antisymmetric_on_singlet": flip_antisymmetric,
            "flip_involutive": flip_involutive,
            "levels": levels,
            "passed": passed,
            "product_entropy": product_entropy,
            "singlet_entropy": entropy,
            "singlet_entropy_target": ln2,
            "singlet_norm_sq": v.norm_sq(),
            "singlet_schmidt_spectrum": schmidt,
            "singlet_state": v.values.iter().map(|z| vec![z.re, z.im]).collect::<Vec<_>>(),
        }));
    } else {
        println!("flip involution: {}", if flip_involutive { "pass" } else { "FAIL" });
        println!(
            "singlet flip eigenvalue -1: {}",
            if flip_antisymmetric { "pass" } else { "FAIL" }
        );
        println!(
            "composite eigenvalue {}: residual {}",
            target,
            sci(eigen_residual)
        );
        println!("singlet entropy {} (ln 2 = {})", sci(entropy), sci(ln2));
        println!("product entropy {}", sci(product_entropy));
        println!("result: {}", if passed { "pass" } else { "FAIL" });
    }
    Ok(if passed { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// igl

pub struct IglOpts {
    pub lambda: f64,
    pub kappa: f64,
    pub grid: usize,
    pub refine: usize,
    pub xi_min: f64,
    pub ratio: Option<f64>,
    pub csv: Option<PathBuf>,
    pub spectrum: Option<PathBuf>,
    pub json: bool,
}

pub fn run_igl(opts: IglOpts) -> anyhow::Result<i32> {
    let ratio = opts.ratio.unwrap_or_else(|| 2f64.powf(1.0 / 32.0));
    let grid = LogGrid::new(opts.xi_min, ratio, opts.grid)?;
    if let Some(path) = &opts.spectrum {
        let mut values: Vec<f64> = (0..grid.size)
            .map(|j| -opts.kappa * opts.lambda * grid.node(j))
            .collect();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut out = String::from("k,eigenvalue\n");
        for (k, v) in values.iter().enumerate() {
            out.push_str(&format!("{k},{}\n", sci(*v)));
        }
        write_text(path, &out)?;
    }
    let rows = igl::convergence_study(opts.lambda, opts.kappa, &grid, opts.refine)?;
    let exact = rows.iter().any(|r| r.residual == 0.0);
    let orders: Vec<f64> = if exact || rows.len() < 2 {
        Vec::new()
    } else {
        igl::convergence_order(&rows)?
    };
    let passed = exact || orders.iter().all(|o| (o - 2.0).abs() <= 0.2);

    if let Some(path) = &opts.csv {
        let mut out = String::from("h,residual,order\n");
        for (k, row) in rows.iter().enumerate() {
            let order = if k == 0 || orders.is_empty() {
                String::new()
            } else {
                sci(orders[k - 1])
            };
            out.push_str(&format!("{},{},{order}\n", sci(row.log_step), sci(row.residual)));
        }
        write_text(path, &out)?;
    }
    if opts.json {
        let json_rows: Vec<serde_json::Value> = rows
            .iter()
            .enumerate()
            .map(|(k, r)| {
                json!({
                    "grid_size": r.grid_size,
                    "log_step": r.log_step,
                    "order": if k == 0 || orders.is_empty() {
                        serde_json::Value::Null
                    } else {
                        json!(orders[k - 1])
                    },
                    "residual": r.residual,
                })
            })
            .collect();
        print_json(&json!({
            "command": "igl",
            "exact": exact,
            "kappa": opts.kappa,
            "lambda": opts.lambda,
            "passed": passed,
            "rows": json_rows,
        }));
    } else {
        println!("igl lambda {} kappa {}", opts.lambda, opts.kappa);
        println!("{:>8}  {:>22}  {:>22}  order", "grid", "h", "residual");
        for (k, r) in rows.iter().enumerate() {
            let order = if k == 0 || orders.is_empty() {
                "-".to_string()
            } else {
                format!("{:.3}", orders[k - 1])
            };
            println!(
                "{:>8}  {:>22}  {:>22}  {order}",
                r.grid_size,
                sci(r.log_step),
                sci(r.residual)
            );
        }
        println!("result: {}", if passed { "pass" } else { "FAIL" });
    }
    Ok(if passed { 0 } else { 1 })
}

