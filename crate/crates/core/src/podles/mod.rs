//! Finite windows of the quantum-sphere irreducible representations.
//!
//! For parameters `mu` in (0,1) and `c >= 0` the generators act on an
//! orthonormal chain f_0, f_1, ... by
//!
//! ```text
//! A f_k = lambda * mu^(2k) f_k,          lambda = 1/2 +- sqrt(c + 1/4)
//! B f_k = sqrt(cw(k)) f_(k-1),           cw(k) = a_k - a_k^2 + c
//! ```
//!
//! with `cw(0) = 0` forced by the choice of lambda, so the chain terminates
//! at the bottom. Truncating to the first N basis vectors preserves every
//! relation exactly except on the final basis vector, where the cut raising
//! chain leaves the residual `cw(N)`; the report keeps that edge column
//! separate from the interior.

mod exact;

pub use exact::{ExactMat, ExactVal, QuadRat};

use exact::{perfect_sqrt, rat_to_f64};
use nalgebra::{Complex, DMatrix};
use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

type C64 = Complex<f64>;

#[derive(Debug, Error)]
pub enum PodlesError {
    #[error("podles representation: {0}")]
    Domain(String),
    #[error("cw({k}) is negative on the {branch} branch; the lowering chain breaks at k = {k}")]
    NegativeChainWeight { branch: Branch, k: usize },
    #[error("exact arithmetic failed: {0}")]
    Inexact(String),
}

/// Which root of `lambda - lambda^2 + c = 0` seeds the eigenvalue chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Plus => write!(f, "plus"),
            Branch::Minus => write!(f, "minus"),
        }
    }
}

impl FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(Branch::Plus),
            "minus" | "-" => Ok(Branch::Minus),
            other => Err(format!("unknown branch `{other}` (expected plus or minus)")),
        }
    }
}

/// A truncated representation: exact spectral data plus dense double-precision
/// matrices for the generators.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub branch: Branch,
    pub mu: BigRational,
    pub c: BigRational,
    pub dim: usize,
    /// Basis labels f0..f(N-1).
    pub labels: Vec<String>,
    pub a: DMatrix<C64>,
    pub b: DMatrix<C64>,
    pub b_star: DMatrix<C64>,
    // exact data the float matrices are projected from
    diag: Vec<QuadRat>,
    lower: Vec<ExactVal>,
    disc: BigRational,
}

/// Interior/edge residual norms for one defining relation.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationResidual {
    pub relation: String,
    /// True when the residual vanishes identically on columns 0..N-2 in
    /// exact arithmetic (not merely below a tolerance).
    pub interior_exactly_zero: bool,
    pub interior: f64,
    pub edge: f64,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ResidualReport {
    pub relations: Vec<RelationResidual>,
}

impl ResidualReport {
    pub fn max_interior(&self) -> f64 {
        self.relations.iter().map(|r| r.interior).fold(0.0, f64::max)
    }

    pub fn max_edge(&self) -> f64 {
        self.relations.iter().map(|r| r.edge).fold(0.0, f64::max)
    }

    pub fn interior_exact(&self) -> bool {
        self.relations.iter().all(|r| r.interior_exactly_zero)
    }
}

fn domain(msg: impl Into<String>) -> PodlesError {
    PodlesError::Domain(msg.into())
}

pub fn build_rep(
    branch: Branch,
    mu: &BigRational,
    c: &BigRational,
    dim: usize,
) -> Result<MatrixRep, PodlesError> {
    if !mu.is_positive() || *mu >= BigRational::one() {
        return Err(domain(format!("mu = {mu} is outside (0, 1)")));
    }
    if c.is_negative() {
        return Err(domain(format!("c = {c} is negative")));
    }
    if branch == Branch::Minus && c.is_zero() {
        return Err(domain(
            "the minus branch needs c > 0 (at c = 0 it degenerates to the zero chain)",
        ));
    }
    if dim < 2 {
        return Err(domain(format!("dimension {dim} is below the minimum of 2")));
    }

    let disc = BigRational::from(BigInt::from(4)) * c + BigRational::one();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let lambda = match branch {
        Branch::Plus => QuadRat::new(half.clone(), half.clone(), disc.clone()),
        Branch::Minus => QuadRat::new(half.clone(), -half.clone(), disc.clone()),
    };

    let mu2 = mu * mu;
    let mut diag = Vec::with_capacity(dim);
    let mut ak = lambda;
    for _ in 0..dim {
        diag.push(ak.clone());
        ak = ak.scale(&mu2);
    }

    let cq = QuadRat::from_rational(c.clone(), disc.clone());
    let chain_weight =
        |a: &QuadRat| -> QuadRat { a.sub(&a.mul(a)).add(&cq) };
    debug_assert!(chain_weight(&diag[0]).is_zero(), "cw(0) = 0 by the root choice");

    let mut lower = Vec::with_capacity(dim - 1);
    for (k, d) in diag.iter().enumerate().skip(1) {
        let cw = chain_weight(d);
        if cw.sign() == Ordering::Less {
            return Err(PodlesError::NegativeChainWeight { branch, k });
        }
        lower.push(ExactVal::sqrt_of(cw));
    }

    let a = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            C64::new(diag[i].to_f64(), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let b = DMatrix::from_fn(dim, dim, |i, j| {
        if j >= 1 && i == j - 1 {
            C64::new(lower[j - 1].to_f64(), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let b_star = b.adjoint();

    Ok(MatrixRep {
        branch,
        mu: mu.clone(),
        c: c.clone(),
        dim,
        labels: (0..dim).map(|k| format!("f{k}")).collect(),
        a,
        b,
        b_star,
        diag,
        lower,
        disc,
    })
}

impl MatrixRep {
    /// Shifted diagonal generator `e0 = 2A - 1`.
    pub fn e0(&self) -> DMatrix<C64> {
        let id = DMatrix::<C64>::identity(self.dim, self.dim);
        &self.a * C64::new(2.0, 0.0) - id
    }

    /// `e1 = iB`.
    pub fn e1(&self) -> DMatrix<C64> {
        &self.b * C64::new(0.0, 1.0)
    }

    /// `e(-1) = -iB*`, the star partner of `e1`.
    pub fn e_minus1(&self) -> DMatrix<C64> {
        &self.b_star * C64::new(0.0, -1.0)
    }

    pub fn exact_a(&self) -> ExactMat {
        ExactMat::diagonal(self.diag.clone(), self.disc.clone())
    }

    pub fn exact_b(&self) -> ExactMat {
        let mut m = ExactMat::zero(self.dim, self.disc.clone());
        for (idx, v) in self.lower.iter().enumerate() {
            m.set(idx, idx + 1, v.clone());
        }
        m
    }

    /// The exact chain weight `cw(k) = a_k - a_k^2 + c`, defined for any
    /// `k` including the truncation index `N`.
    pub fn chain_weight(&self, k: usize) -> QuadRat {
        let mu2 = &self.mu * &self.mu;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let lambda = match self.branch {
            Branch::Plus => QuadRat::new(half.clone(), half, self.disc.clone()),
            Branch::Minus => QuadRat::new(half.clone(), -half, self.disc.clone()),
        };
        let mut ak = lambda;
        for _ in 0..k {
            ak = ak.scale(&mu2);
        }
        let cq = QuadRat::from_rational(self.c.clone(), self.disc.clone());
        ak.sub(&ak.mul(&ak)).add(&cq)
    }
}

/// Exact residual of each defining relation, split into the interior
/// columns and the truncation edge.
pub fn relation_residuals(rep: &MatrixRep) -> Result<ResidualReport, PodlesError> {
    let a = rep.exact_a();
    let b = rep.exact_b();
    let bs = b.adjoint();
    let id = ExactMat::identity(rep.dim, rep.disc.clone());

    let q = |r: BigRational| QuadRat::from_rational(r, rep.disc.clone());
    let mu2 = q(&rep.mu * &rep.mu);
    let mu4 = mu2.mul(&mu2);
    let cq = q(rep.c.clone());

    let aa = a.mul(&a)?;
    let quad_plain = a.sub(&aa)?.sub(&id.scale(&cq.neg()))?;
    let quad_deformed = a
        .scale(&mu2)
        .sub(&aa.scale(&mu4))?
        .sub(&id.scale(&cq.neg()))?;

    let residuals = vec![
        ("BA - mu^2 AB", b.mul(&a)?.sub(&a.mul(&b)?.scale(&mu2))?),
        ("BsB - (A - A^2 + c)", bs.mul(&b)?.sub(&quad_plain)?),
        (
            "BBs - (mu^2 A - mu^4 A^2 + c)",
            b.mul(&bs)?.sub(&quad_deformed)?,
        ),
        ("A - A*", a.sub(&a.adjoint())?),
    ];

    Ok(ResidualReport {
        relations: residuals
            .into_iter()
            .map(|(name, m)| RelationResidual {
                relation: name.to_string(),
                interior_exactly_zero: m.interior_is_zero(),
                interior: m.interior_norm(),
                edge: m.edge_norm(),
            })
            .collect(),
    })
}

/// Eigenvalues of the diagonal generator from the double-precision matrix,
/// sorted descending.
pub fn spectrum(rep: &MatrixRep) -> Vec<f64> {
    let real = DMatrix::<f64>::from_fn(rep.dim, rep.dim, |i, j| rep.a[(i, j)].re);
    let mut eig: Vec<f64> = real
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eig.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    eig
}

/// The same eigenvalues in exact form, sorted descending by exact comparison.
pub fn exact_spectrum(rep: &MatrixRep) -> Vec<QuadRat> {
    let mut diag = rep.diag.clone();
    diag.sort_by(|x, y| y.cmp(x));
    diag
}

/// The sphere radius `sqrt(4c+1)/2`, exact when the discriminant is a
/// perfect square.
#[derive(Clone, Debug, PartialEq)]
pub enum Radius {
    Rational(BigRational),
    Real(f64),
}

impl Radius {
    pub fn to_f64(&self) -> f64 {
        match self {
            Radius::Rational(r) => rat_to_f64(r),
            Radius::Real(x) => *x,
        }
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Rational(r) => write!(f, "{r}"),
            Radius::Real(x) => write!(f, "{x}"),
        }
    }
}

pub fn radius(c: &BigRational) -> Result<Radius, PodlesError> {
    let quarter = BigRational::new(BigInt::from(-1), BigInt::from(4));
    if *c <= quarter {
        return Err(domain(format!("c = {c} must exceed -1/4")));
    }
    let disc = BigRational::from(BigInt::from(4)) * c + BigRational::one();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    Ok(match perfect_sqrt(&disc) {
        Some(s) => Radius::Rational(s * half),
        None => Radius::Real(rat_to_f64(&disc).sqrt() / 2.0),
    })
}

/// Sample the round-sphere parametrisation and verify that the Cartesian
/// image lands on the sphere of radius `sqrt(4c+1)/2`, and that the
/// commutative specialisations of the sphere relations hold pointwise.
/// Returns the largest absolute residual seen.
pub fn classical_embedding_check(
    c: &BigRational,
    samples: usize,
    seed: u64,
) -> Result<f64, PodlesError> {
    let r = radius(c)?;
    if samples == 0 {
        return Err(domain("sample count must be positive"));
    }
    let r2 = r.to_f64() * r.to_f64();
    let cf = rat_to_f64(c);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let theta: f64 = rng.random_range(0.0..std::f64::consts::PI);
        let psi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let rad = r2.sqrt();
        let e0 = 2.0 * rad * theta.cos();
        let e_plus = C64::new(0.0, 1.0) * rad * theta.sin() * C64::new(0.0, psi).exp();
        let e_minus = -C64::new(0.0, 1.0) * rad * theta.sin() * C64::new(0.0, -psi).exp();

        // e_+ = i(x1 + i x2), e0 = 2 x3
        let xy = e_plus * C64::new(0.0, -1.0);
        let (x1, x2) = (xy.re, xy.im);
        let x3 = e0 / 2.0;
        worst = worst.max((x1 * x1 + x2 * x2 + x3 * x3 - r2).abs());

        // star structure of the sampled frame
        worst = worst.max((e_plus.conj() - e_minus).norm());

        // commutative (mu -> 1) sphere relations with a = x3 + 1/2,
        // b = x1 + i x2
        let av = x3 + 0.5;
        let bv = C64::new(x1, x2);
        let q = av - av * av + cf;
        worst = worst.max((bv.conj() * bv - q).norm());
        worst = worst.max((bv * bv.conj() - q).norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rep(branch: Branch, mu: (i64, i64), c: (i64, i64), dim: usize) -> MatrixRep {
        build_rep(branch, &rat(mu.0, mu.1), &rat(c.0, c.1), dim).unwrap()
    }

    #[test]
    fn plus_branch_quarter_chain() {
        // mu = 1/2, c = 0: lambda = 1 and A = diag(1, 1/4, 1/16, 1/64)
        let r = rep(Branch::Plus, (1, 2), (0, 1), 4);
        let spec = exact_spectrum(&r);
        let expect = [rat(1, 1), rat(1, 4), rat(1, 16), rat(1, 64)];
        for (got, want) in spec.iter().zip(&expect) {
            assert!(got.is_rational());
            assert_eq!(got.rational_part(), want);
        }
    }

    #[test]
    fn lowering_entry_is_exact_at_c_two() {
        // mu = 1/2, c = 2: lambda = 2 and cw(1) = 9/4, so the first lowering
        // entry is exactly 3/2
        let r = rep(Branch::Plus, (1, 2), (2, 1), 4);
        let b = r.exact_b();
        let entry = b.get(0, 1);
        assert_eq!(
            entry,
            ExactVal::Quad(QuadRat::from_rational(rat(3, 2), rat(9, 1)))
        );
        assert_eq!(r.chain_weight(1), QuadRat::from_rational(rat(9, 4), rat(9, 1)));
    }

    #[test]
    fn bottom_of_chain_is_annihilated() {
        for &c in &[(0i64, 1i64), (1, 1), (2, 1)] {
            let r = rep(Branch::Plus, (1, 2), c, 6);
            // column 0 of B is empty: B f_0 = 0
            for i in 0..6 {
                assert_eq!(r.b[(i, 0)], C64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn interior_residuals_vanish_exactly_on_the_lattice() {
        let mus = [(1i64, 4i64), (1, 2), (3, 4)];
        let cs = [(0i64, 1i64), (1, 1), (2, 1)];
        let dims = [2usize, 8, 64];
        for &mu in &mus {
            for &c in &cs {
                for &n in &dims {
                    for branch in [Branch::Plus, Branch::Minus] {
                        if branch == Branch::Minus && c.0 == 0 {
                            continue;
                        }
                        let r = rep(branch, mu, c, n);
                        let report = relation_residuals(&r).unwrap();
                        assert!(
                            report.interior_exact(),
                            "interior residual nonzero for mu={mu:?} c={c:?} N={n} {branch}"
                        );
                        assert_eq!(report.max_interior(), 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn edge_residual_matches_the_cut_chain_weight() {
        // mu = 1/2, c = 0, N = 8: cw(8) = 2^-16 (1 - 2^-16) = 65535/2^32
        let r = rep(Branch::Plus, (1, 2), (0, 1), 8);
        let report = relation_residuals(&r).unwrap();
        let bbs = &report.relations[2];
        assert!(bbs.relation.starts_with("BBs"));
        let expect = 65535.0 / 4294967296.0;
        assert!((bbs.edge - expect).abs() < 1e-20, "edge = {}", bbs.edge);
        // every other relation survives truncation untouched
        assert_eq!(report.relations[0].edge, 0.0, "BA rule has no edge defect");
        assert_eq!(report.relations[1].edge, 0.0, "BsB has no edge defect");
        assert_eq!(report.relations[3].edge, 0.0, "A is exactly self-adjoint");
        // cross-check against the chain-weight formula
        assert!((r.chain_weight(8).to_f64() - expect).abs() < 1e-20);
    }

    #[test]
    fn edge_residual_tends_to_c_or_zero() {
        // c > 0: the edge defect approaches c itself; c = 0: it decays
        // exponentially
        let c2 = rat(2, 1);
        let e8 = relation_residuals(&rep(Branch::Plus, (1, 2), (2, 1), 8))
            .unwrap()
            .max_edge();
        let e16 = relation_residuals(&rep(Branch::Plus, (1, 2), (2, 1), 16))
            .unwrap()
            .max_edge();
        let cf = rat_to_f64(&c2);
        assert!((e16 - cf).abs() < (e8 - cf).abs());
        assert!((e16 - cf).abs() < 1e-8);

        let z8 = relation_residuals(&rep(Branch::Plus, (1, 2), (0, 1), 8))
            .unwrap()
            .max_edge();
        let z16 = relation_residuals(&rep(Branch::Plus, (1, 2), (0, 1), 16))
            .unwrap()
            .max_edge();
        assert!(z16 < z8 / 100.0);
    }

    #[test]
    fn commutator_of_lowering_pair_is_diagonal() {
        let r = rep(Branch::Plus, (1, 2), (1, 1), 8);
        let b = r.exact_b();
        let bs = b.adjoint();
        let comm = bs.mul(&b).unwrap().sub(&b.mul(&bs).unwrap()).unwrap();
        for (&(i, j), _) in comm.entries() {
            assert_eq!(i, j, "commutator must be diagonal");
        }
        // interior entries follow cw(k) - cw(k+1)
        for k in 0..7 {
            let want = r.chain_weight(k).sub(&r.chain_weight(k + 1));
            assert_eq!(comm.get(k, k), ExactVal::Quad(want));
        }
    }

    #[test]
    fn float_and_exact_spectra_agree() {
        for (branch, c) in [(Branch::Plus, (1i64, 1i64)), (Branch::Minus, (2, 1))] {
            let r = rep(branch, (3, 4), c, 16);
            let float = spectrum(&r);
            let exact = exact_spectrum(&r);
            assert_eq!(float.len(), exact.len());
            for (f, e) in float.iter().zip(&exact) {
                assert!((f - e.to_f64()).abs() < 1e-12);
            }
            // descending order
            for w in float.windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn two_by_two_spectrum() {
        let r = rep(Branch::Plus, (1, 2), (2, 1), 2);
        let spec = exact_spectrum(&r);
        assert_eq!(spec[0].rational_part(), &rat(2, 1));
        assert_eq!(spec[1].rational_part(), &rat(1, 2));
    }

    #[test]
    fn e_matrices_have_the_right_star_structure() {
        let r = rep(Branch::Plus, (1, 2), (1, 1), 6);
        let e0 = r.e0();
        let e1 = r.e1();
        let em = r.e_minus1();
        assert!((&e0 - e0.adjoint()).norm() < 1e-15);
        assert!((e1.adjoint() - &em).norm() < 1e-15, "e1* = e(-1)");
        // spectrum of e0 = 2A - 1 stays inside (-1, 2*lambda - 1]
        for k in 0..6 {
            let v = e0[(k, k)].re;
            assert!(v > -1.0 && v <= 2.0 * exact_spectrum(&r)[0].to_f64() - 1.0 + 1e-15);
        }
    }

    #[test]
    fn domain_violations_are_rejected() {
        let ok = rat(1, 2);
        assert!(build_rep(Branch::Plus, &rat(0, 1), &ok, 4).is_err());
        assert!(build_rep(Branch::Plus, &rat(1, 1), &ok, 4).is_err());
        assert!(build_rep(Branch::Plus, &rat(3, 2), &ok, 4).is_err());
        assert!(build_rep(Branch::Plus, &ok, &rat(-1, 1), 4).is_err());
        assert!(build_rep(Branch::Plus, &ok, &ok, 1).is_err());
        assert!(build_rep(Branch::Minus, &ok, &rat(0, 1), 4).is_err());
        assert!(build_rep(Branch::Minus, &ok, &rat(2, 1), 4).is_ok());
    }

    #[test]
    fn radius_examples() {
        assert_eq!(radius(&rat(0, 1)).unwrap(), Radius::Rational(rat(1, 2)));
        assert_eq!(radius(&rat(2, 1)).unwrap(), Radius::Rational(rat(3, 2)));
        match radius(&rat(1, 1)).unwrap() {
            Radius::Real(x) => assert!((x - 5f64.sqrt() / 2.0).abs() < 1e-15),
            other => panic!("expected irrational radius, got {other}"),
        }
        assert!(radius(&rat(-1, 4)).is_err());
        assert!(radius(&rat(-1, 2)).is_err());
    }

    #[test]
    fn classical_embedding_lands_on_the_sphere() {
        for c in [rat(0, 1), rat(2, 1)] {
            let worst = classical_embedding_check(&c, 100, 7).unwrap();
            assert!(worst < 1e-12, "residual {worst} for c = {c}");
        }
        assert!(classical_embedding_check(&rat(-1, 2), 10, 7).is_err());
        assert!(classical_embedding_check(&rat(0, 1), 0, 7).is_err());
    }

    #[test]
    fn seeded_embedding_check_is_deterministic() {
        let a = classical_embedding_check(&rat(1, 1), 50, 42).unwrap();
        let b = classical_embedding_check(&rat(1, 1), 50, 42).unwrap();
        assert_eq!(a, b);
    }
}
