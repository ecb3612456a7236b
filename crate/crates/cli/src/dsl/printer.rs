//! Canonical `.alg` rendering of a built algebra. The printer defines the
//! canonical form: parsing its output and printing again is the identity,
//! which is what makes golden files byte-stable.

use hopflab_core::hopf::HopfData;
use hopflab_core::{NCPoly, Presentation, Scalar, Sym, Word};

/// Scalar in a product position: `(1, "...")` means the magnitude string
/// should be prefixed with a minus sign by the caller.
fn positive_form(c: &Scalar) -> (bool, String) {
    let s = c.to_string();
    if s.starts_with('-') {
        let n = c.neg().to_string();
        if !n.starts_with('-') {
            return (true, n);
        }
    }
    (false, s)
}

fn term_string(w: &Word, c: &Scalar) -> String {
    let word = if w.is_empty() {
        None
    } else {
        Some(w.to_string())
    };
    if c.is_one() {
        return word.unwrap_or_else(|| "1".into());
    }
    if c.neg().is_one() {
        return format!("-{}", word.unwrap_or_else(|| "1".into()));
    }
    let (negative, magnitude) = positive_form(c);
    let coeff = format!("({magnitude})");
    let body = match word {
        Some(w) => format!("{coeff}*{w}"),
        None => coeff,
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Render a polynomial with terms in descending presentation order, in a
/// form the expression grammar re-parses exactly.
pub fn poly_string(pres: &Presentation, p: &NCPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(&Word, &Scalar)> = p.terms().collect();
    terms.sort_by(|(wa, _), (wb, _)| pres.word_cmp(wb, wa));
    let parts: Vec<String> = terms.iter().map(|(w, c)| term_string(w, c)).collect();
    parts.join(" + ").replace(" + -", " - ")
}

fn tensor_term_string(words: &[Word], c: &Scalar) -> String {
    let legs: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let body = legs.join(" (x) ");
    if c.is_one() {
        return body;
    }
    if c.neg().is_one() {
        return format!("-{body}");
    }
    let (negative, magnitude) = positive_form(c);
    let s = format!("({magnitude})*{body}");
    if negative {
        format!("-{s}")
    } else {
        s
    }
}

fn scalar_string(c: &Scalar) -> String {
    c.to_string()
}

fn star_pairs(pres: &Presentation) -> Vec<(Sym, Sym)> {
    let mut out: Vec<(Sym, Sym)> = Vec::new();
    for g in pres.gens() {
        if let Ok(s) = pres.star_of(g) {
            if s != g && !out.contains(&(s.clone(), g.clone())) {
                out.push((g.clone(), s.clone()));
            }
        }
    }
    out
}

fn grouplike_pairs(pres: &Presentation) -> Vec<(Sym, Sym)> {
    let index = |g: &Sym| pres.gens().iter().position(|h| h == g).unwrap_or(usize::MAX);
    let mut out: Vec<(Sym, Sym)> = Vec::new();
    for (g, gi) in pres.grouplike_pairs() {
        if index(g) <= index(gi) && !out.contains(&(g.clone(), gi.clone())) {
            out.push((g.clone(), gi.clone()));
        }
    }
    out.sort_by_key(|(g, _)| index(g));
    out
}

/// Canonical `.alg` document for a presentation and its optional Hopf data.
pub fn render_algebra(pres: &Presentation, hopf: Option<&HopfData>) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {} {{\n", pres.name()));
    if !pres.params().is_empty() {
        let names: Vec<String> = pres.params().iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("  params: {};\n", names.join(", ")));
    }
    let gen_names: Vec<String> = pres.gens().iter().map(|g| g.to_string()).collect();
    out.push_str(&format!("  gens: {};\n", gen_names.join(", ")));
    for (a, b) in star_pairs(pres) {
        out.push_str(&format!("  star: {a} <-> {b};\n"));
    }
    let grouplikes = grouplike_pairs(pres);
    for (g, gi) in &grouplikes {
        out.push_str(&format!("  grouplike: {g}, {gi};\n"));
    }
    // the tail of the rule list holds the two implied contraction rules per
    // grouplike pair; everything before it is a user relation
    let user_rules = pres.rules().len() - 2 * grouplikes.len();
    for rule in &pres.rules()[..user_rules] {
        let relation = NCPoly::word(rule.lhs.clone()).sub(&rule.rhs);
        out.push_str(&format!("  rel: {};\n", poly_string(pres, &relation)));
    }
    if let Some(hopf) = hopf {
        let grouplike_members: Vec<&Sym> =
            grouplikes.iter().flat_map(|(a, b)| [a, b]).collect();
        for g in pres.gens() {
            if grouplike_members.contains(&g) {
                continue;
            }
            let coproduct = hopf
                .coproduct_of(g)
                .expect("validated Hopf data covers every generator");
            let counit = hopf.counit_of(g).expect("validated");
            let antipode = hopf.antipode_of(g).expect("validated");
            let terms: Vec<String> = coproduct
                .terms()
                .map(|(ws, c)| tensor_term_string(ws, c))
                .collect();
            let cop = terms.join(" + ").replace(" + -", " - ");
            out.push_str(&format!("  coproduct: {g} -> {cop};\n"));
            out.push_str(&format!("  counit: {g} -> {};\n", scalar_string(counit)));
            out.push_str(&format!(
                "  antipode: {g} -> {};\n",
                poly_string(pres, antipode)
            ));
        }
    }
    out.push_str("}\n");
    out
}
