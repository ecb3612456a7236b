//! The affine group of the real line (translations and dilatations) acting
//! on functions over a geometric lattice on the half-line, together with
//! discretised coordinate operators and their commutator diagnostics.
//!
//! The half-line carries the scale-invariant measure `dxi/xi`, which the
//! geometric lattice `xi_j = xi_min * r^j` turns into a uniform measure in
//! `log xi`. Dilatations by lattice-commensurate factors then act as exact
//! index shifts, and the derivative `xi d/dxi` becomes a plain central
//! difference in the log coordinate.

use nalgebra::{Complex, DMatrix, DVector};
use thiserror::Error;

type C64 = Complex<f64>;

const LATTICE_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum IglError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("usage error: {0}")]
    Usage(String),
}

/// Element (b, a) of the affine group: translation part `b`, dilatation
/// part `a > 0`. The product is `(b1, a1)(b2, a2) = (b1 + a1*b2, a1*a2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElt2 {
    pub b: f64,
    pub a: f64,
}

impl GroupElt2 {
    pub fn new(b: f64, a: f64) -> Result<Self, IglError> {
        if a <= 0.0 || !a.is_finite() || !b.is_finite() {
            return Err(IglError::Domain(format!(
                "dilatation part must be positive and finite, got (b, a) = ({b}, {a})"
            )));
        }
        Ok(GroupElt2 { b, a })
    }

    pub fn identity() -> Self {
        GroupElt2 { b: 0.0, a: 1.0 }
    }

    pub fn mul(&self, other: &GroupElt2) -> GroupElt2 {
        GroupElt2 {
            b: self.b + self.a * other.b,
            a: self.a * other.a,
        }
    }

    pub fn inv(&self) -> GroupElt2 {
        GroupElt2 {
            b: -self.b / self.a,
            a: 1.0 / self.a,
        }
    }
}

/// Geometric lattice `xi_j = xi_min * r^j`, `j = 0..size-1`, on the
/// positive half-line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogGrid {
    pub xi_min: f64,
    pub ratio: f64,
    pub size: usize,
}

impl LogGrid {
    pub fn new(xi_min: f64, ratio: f64, size: usize) -> Result<Self, IglError> {
        if xi_min <= 0.0 || !xi_min.is_finite() {
            return Err(IglError::Domain(format!("xi_min must be positive, got {xi_min}")));
        }
        if ratio <= 1.0 || !ratio.is_finite() {
            return Err(IglError::Domain(format!("ratio must exceed 1, got {ratio}")));
        }
        if size < 2 {
            return Err(IglError::Domain(format!("grid needs at least 2 nodes, got {size}")));
        }
        Ok(LogGrid { xi_min, ratio, size })
    }

    /// Desk-scale default: `xi_min = 2^-4`, `r = 2^(1/32)`, 256 nodes.
    pub fn default_grid() -> Self {
        LogGrid {
            xi_min: 0.0625,
            ratio: 2f64.powf(1.0 / 32.0),
            size: 256,
        }
    }

    pub fn node(&self, j: usize) -> f64 {
        self.xi_min * self.ratio.powi(j as i32)
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.size).map(|j| self.node(j)).collect()
    }

    /// Log-step `h = ln r`, the uniform spacing in the log coordinate.
    pub fn log_step(&self) -> f64 {
        self.ratio.ln()
    }

    /// Halve the log-step while keeping both endpoints: `r -> sqrt(r)`,
    /// `size -> 2*size - 1`.
    pub fn refine(&self) -> LogGrid {
        LogGrid {
            xi_min: self.xi_min,
            ratio: self.ratio.sqrt(),
            size: 2 * self.size - 1,
        }
    }
}

/// Complex samples at the nodes of a [`LogGrid`]. `resampled` records that
/// some dilatation in the history was not lattice-commensurate, so values
/// carry nearest-node resampling error.
#[derive(Clone, Debug)]
pub struct GridFunction {
    pub grid: LogGrid,
    pub values: DVector<C64>,
    pub resampled: bool,
}

impl GridFunction {
    pub fn new(grid: LogGrid, values: DVector<C64>) -> Result<Self, IglError> {
        if values.len() != grid.size {
            return Err(IglError::Domain(format!(
                "value count {} does not match grid size {}",
                values.len(),
                grid.size
            )));
        }
        Ok(GridFunction {
            grid,
            values,
            resampled: false,
        })
    }

    pub fn from_fn(grid: LogGrid, f: impl Fn(f64) -> C64) -> Self {
        let values = DVector::from_iterator(grid.size, (0..grid.size).map(|j| f(grid.node(j))));
        GridFunction {
            grid,
            values,
            resampled: false,
        }
    }

    /// Inner product for the measure `dxi/xi`: uniform weight `ln r` in the
    /// log coordinate, conjugate-linear in the first slot.
    pub fn inner(&self, other: &GridFunction) -> C64 {
        let w = self.grid.log_step();
        self.values.dotc(&other.values) * C64::new(w, 0.0)
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }
}

/// Apply the representation with character parameter `lambda`:
/// `(R(g) phi)(xi_j) = exp(i*lambda*b*xi_j) * phi(a*xi_j)`.
///
/// For `a = r^m` the dilated argument lands on the lattice and the action
/// is an exact index shift (indices outside the window read zero). Other
/// `a` fall back to the nearest lattice exponent and the result is flagged
/// as resampled.
pub fn act(lambda: f64, g: &GroupElt2, phi: &GridFunction) -> GridFunction {
    let grid = phi.grid;
    let shift_exact = g.a.ln() / grid.ratio.ln();
    let shift = shift_exact.round();
    let off_lattice = (shift_exact - shift).abs() > LATTICE_TOL;
    let m = shift as i64;
    let n = grid.size as i64;
    let values = DVector::from_iterator(
        grid.size,
        (0..n).map(|j| {
            let src = j + m;
            if src < 0 || src >= n {
                C64::new(0.0, 0.0)
            } else {
                let phase = C64::from_polar(1.0, lambda * g.b * grid.node(j as usize));
                phase * phi.values[src as usize]
            }
        }),
    );
    GridFunction {
        grid,
        values,
        resampled: phi.resampled || off_lattice,
    }
}

/// Project periodic samples of `f(b, a)` onto the character `exp(i*lambda*b)`:
/// a Riemann-sum Fourier coefficient `sum_t dt * exp(-i*lambda*b_t) * f(b_t, .)`
/// over one period `L` of the translation coordinate.
///
/// `samples` holds one row per translation node `b_t = t*L/P` and one
/// column per payload entry (typically a dilatation node). `lambda` must be
/// an integer multiple of `2*pi/L`.
pub fn sector_project(
    samples: &DMatrix<C64>,
    period: f64,
    lambda: f64,
) -> Result<DVector<C64>, IglError> {
    if period <= 0.0 || !period.is_finite() {
        return Err(IglError::Domain(format!("period must be positive, got {period}")));
    }
    let p = samples.nrows();
    if p == 0 {
        return Err(IglError::Domain("need at least one translation sample".into()));
    }
    let harmonic = lambda * period / std::f64::consts::TAU;
    if (harmonic - harmonic.round()).abs() > LATTICE_TOL {
        return Err(IglError::Usage(format!(
            "lambda = {lambda} is not an integer multiple of 2*pi/period = {}",
            std::f64::consts::TAU / period
        )));
    }
    let dt = period / p as f64;
    let mut out = DVector::zeros(samples.ncols());
    for t in 0..p {
        let phase = C64::from_polar(dt, -lambda * (t as f64) * dt);
        for j in 0..samples.ncols() {
            out[j] += phase * samples[(t, j)];
        }
    }
    Ok(out)
}

/// The pair of coordinate operators on a grid window: `X1` multiplies by
/// `-kappa*lambda*xi_j` and `X0 = i*kappa*D` with `D` the antisymmetric
/// central difference in `log xi` (Dirichlet truncation at both ends).
#[derive(Clone, Debug)]
pub struct OperatorPair {
    pub x0: DMatrix<C64>,
    pub x1: DMatrix<C64>,
    pub lambda: f64,
    pub kappa: f64,
    pub grid: LogGrid,
}

pub fn position_operators(lambda: f64, kappa: f64, grid: &LogGrid) -> Result<OperatorPair, IglError> {
    if grid.size < 3 {
        return Err(IglError::Domain(format!(
            "central differences need at least 3 nodes, got {}",
            grid.size
        )));
    }
    let m = grid.size;
    let x1 = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            C64::new(-kappa * lambda * grid.node(j), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let coef = kappa / (2.0 * grid.log_step());
    let mut x0 = DMatrix::zeros(m, m);
    for j in 0..m {
        if j + 1 < m {
            x0[(j, j + 1)] = C64::new(0.0, coef);
        }
        if j >= 1 {
            x0[(j, j - 1)] = C64::new(0.0, -coef);
        }
    }
    Ok(OperatorPair {
        x0,
        x1,
        lambda,
        kappa,
        grid: *grid,
    })
}

impl OperatorPair {
    /// Ascending real spectrum of the diagonal coordinate `X1`.
    pub fn x1_spectrum(&self) -> Vec<f64> {
        let mut s: Vec<f64> = (0..self.grid.size).map(|j| self.x1[(j, j)].re).collect();
        s.sort_by(|a, b| a.partial_cmp(b).unwrap());
        s
    }

    /// Dense-matrix residual of `[X0, X1] - i*kappa*X1` against the
    /// Gaussian probe. Cross-check for the matrix-free path; quadratic in
    /// the grid size, so keep it to modest windows.
    pub fn probe_residual(&self) -> f64 {
        let phi = gaussian_probe(&self.grid).values;
        let comm = &self.x0 * (&self.x1 * &phi) - &self.x1 * (&self.x0 * &phi);
        let target = (&self.x1 * &phi) * C64::new(0.0, self.kappa);
        let err = comm - target;
        weighted_interior_ratio(&self.grid, &err, &phi)
    }
}

/// Smooth probe concentrated on the grid interior: a Gaussian in the log
/// coordinate centred mid-window with width one tenth of the window span.
/// Refined grids share endpoints, so the probe is the same continuum
/// function across a refinement sequence.
pub fn gaussian_probe(grid: &LogGrid) -> GridFunction {
    let s0 = grid.node(0).ln();
    let s1 = grid.node(grid.size - 1).ln();
    let mid = 0.5 * (s0 + s1);
    let sigma = (s1 - s0) / 10.0;
    GridFunction::from_fn(*grid, |xi| {
        let s = xi.ln();
        C64::new((-(s - mid) * (s - mid) / (2.0 * sigma * sigma)).exp(), 0.0)
    })
}

fn weighted_interior_ratio(grid: &LogGrid, err: &DVector<C64>, phi: &DVector<C64>) -> f64 {
    let m = grid.size;
    let num: f64 = (1..m - 1).map(|j| err[j].norm_sqr()).sum();
    let den: f64 = (0..m).map(|j| phi[j].norm_sqr()).sum();
    (num / den).sqrt()
}

/// Residual of the coordinate commutation relation `[X0, X1] = i*kappa*X1`
/// measured on the Gaussian probe over interior nodes. Matrix-free: `X1`
/// is diagonal and `X0` a three-point stencil, so the cost is linear in
/// the grid size even for the finest refinements.
pub fn commutator_residual(lambda: f64, kappa: f64, grid: &LogGrid) -> Result<f64, IglError> {
    if grid.size < 3 {
        return Err(IglError::Domain(format!(
            "central differences need at least 3 nodes, got {}",
            grid.size
        )));
    }
    let m = grid.size;
    let phi = gaussian_probe(grid).values;
    let f: Vec<f64> = (0..m).map(|j| -kappa * lambda * grid.node(j)).collect();
    let coef = C64::new(0.0, kappa / (2.0 * grid.log_step()));
    let stencil = |v: &DVector<C64>, j: usize| {
        let up = if j + 1 < m { v[j + 1] } else { C64::new(0.0, 0.0) };
        let down = if j >= 1 { v[j - 1] } else { C64::new(0.0, 0.0) };
        coef * (up - down)
    };
    let x1phi = DVector::from_iterator(m, (0..m).map(|j| phi[j] * C64::new(f[j], 0.0)));
    let x0phi = DVector::from_iterator(m, (0..m).map(|j| stencil(&phi, j)));
    let err = DVector::from_iterator(
        m,
        (0..m).map(|j| {
            let comm = stencil(&x1phi, j) - x0phi[j] * C64::new(f[j], 0.0);
            comm - x1phi[j] * C64::new(0.0, kappa)
        }),
    );
    Ok(weighted_interior_ratio(grid, &err, &phi))
}

/// One row of a refinement study: log-step, probe residual.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct ConvergenceRow {
    pub grid_size: usize,
    pub log_step: f64,
    pub residual: f64,
}

/// Run the commutator residual on `refinements + 1` grids obtained by
/// repeated log-step halving of `base`.
pub fn convergence_study(
    lambda: f64,
    kappa: f64,
    base: &LogGrid,
    refinements: usize,
) -> Result<Vec<ConvergenceRow>, IglError> {
    let mut rows = Vec::with_capacity(refinements + 1);
    let mut grid = *base;
    for _ in 0..=refinements {
        rows.push(ConvergenceRow {
            grid_size: grid.size,
            log_step: grid.log_step(),
            residual: commutator_residual(lambda, kappa, &grid)?,
        });
        grid = grid.refine();
    }
    Ok(rows)
}

/// Observed orders `log2(res_k / res_{k+1})` between successive rows of a
/// refinement study. Needs at least two rows.
pub fn convergence_order(rows: &[ConvergenceRow]) -> Result<Vec<f64>, IglError> {
    if rows.len() < 2 {
        return Err(IglError::Usage(format!(
            "order estimation needs at least 2 grids, got {}",
            rows.len()
        )));
    }
    Ok(rows
        .windows(2)
        .map(|w| (w[0].residual / w[1].residual).log2())
        .collect())
}
