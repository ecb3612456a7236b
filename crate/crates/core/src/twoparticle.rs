//! Two identical particles: the flip operator, symmetrised Hamiltonians,
//! the singlet state, and entanglement diagnostics.
//!
//! The composite Hamiltonian is built literally as
//! `H2 = H (x) id + K (H (x) id) K^-1` with `K` the particle interchange;
//! for the plain flip this equals `H (x) id + id (x) H`, and `[H2, K] = 0`
//! expresses that the two particles are identical.

use nalgebra::{Complex, DMatrix, DVector};
use thiserror::Error;

type C64 = Complex<f64>;

const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum TwoParticleError {
    #[error("hamiltonian is not hermitian (defect {0:.3e})")]
    NonHermitian(f64),
    #[error("state dimension {got} does not match factors {left} x {right}")]
    DimensionMismatch { got: usize, left: usize, right: usize },
    #[error("the zero state has no entanglement entropy")]
    ZeroState,
}

/// A vector on an `left (x) right` product basis, stored row-major:
/// component `i*right + j` multiplies `e_i (x) e_j`.
#[derive(Clone, Debug)]
pub struct TensorState {
    pub values: DVector<C64>,
    pub left: usize,
    pub right: usize,
}

impl TensorState {
    pub fn new(values: DVector<C64>, left: usize, right: usize) -> Result<Self, TwoParticleError> {
        if values.len() != left * right {
            return Err(TwoParticleError::DimensionMismatch {
                got: values.len(),
                left,
                right,
            });
        }
        Ok(TensorState { values, left, right })
    }

    pub fn product(v: &DVector<C64>, w: &DVector<C64>) -> Self {
        let mut values = DVector::zeros(v.len() * w.len());
        for i in 0..v.len() {
            for j in 0..w.len() {
                values[i * w.len() + j] = v[i] * w[j];
            }
        }
        TensorState {
            values,
            left: v.len(),
            right: w.len(),
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.values.norm_squared()
    }

    /// The state as a `left x right` coefficient matrix, the object whose
    /// singular values carry the Schmidt spectrum.
    pub fn coefficient_matrix(&self) -> DMatrix<C64> {
        DMatrix::from_fn(self.left, self.right, |i, j| self.values[i * self.right + j])
    }
}

/// Interchange operator on an `n (x) n` product space: `K(v (x) w) = w (x) v`.
pub fn flip(n: usize) -> DMatrix<C64> {
    let mut k = DMatrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            k[(j * n + i, i * n + j)] = C64::new(1.0, 0.0);
        }
    }
    k
}

/// A one-particle Hamiltonian with its symmetrised two-particle composite.
#[derive(Clone, Debug)]
pub struct TwoParticleSystem {
    pub h: DMatrix<C64>,
    pub k: DMatrix<C64>,
    pub h2: DMatrix<C64>,
    pub dim: usize,
}

pub fn compose_hamiltonian(h: &DMatrix<C64>) -> Result<TwoParticleSystem, TwoParticleError> {
    let defect = (h - h.adjoint()).norm();
    if defect > HERMITIAN_TOL {
        return Err(TwoParticleError::NonHermitian(defect));
    }
    let n = h.nrows();
    let id = DMatrix::<C64>::identity(n, n);
    let k = flip(n);
    let h_first = h.kronecker(&id);
    // K is an involution, so K^-1 = K
    let h_second = &k * &h_first * &k;
    let h2 = &h_first + &h_second;
    Ok(TwoParticleSystem {
        h: h.clone(),
        k,
        h2,
        dim: n,
    })
}

/// The antisymmetric spin combination `e(+1/2) (x) e(-1/2) - e(-1/2) (x) e(+1/2)`,
/// deliberately left unnormalised (its norm-square is 2). Basis index 0 is
/// the up label.
pub fn singlet() -> TensorState {
    let mut values = DVector::zeros(4);
    values[1] = C64::new(1.0, 0.0);
    values[2] = C64::new(-1.0, 0.0);
    TensorState {
        values,
        left: 2,
        right: 2,
    }
}

/// Schmidt coefficients of the normalised state: the singular values of its
/// coefficient matrix divided by the state norm, in descending order. Their
/// squares sum to one.
pub fn schmidt_spectrum(state: &TensorState) -> Result<Vec<f64>, TwoParticleError> {
    let total = state.norm_sq();
    if total == 0.0 {
        return Err(TwoParticleError::ZeroState);
    }
    let norm = total.sqrt();
    Ok(state
        .coefficient_matrix()
        .singular_values()
        .iter()
        .map(|s| s / norm)
        .collect())
}

/// Von Neumann entropy (natural log) of the reduced density matrix of the
/// normalised state, computed through the Schmidt/singular spectrum of the
/// coefficient matrix.
pub fn entanglement_entropy(state: &TensorState) -> Result<f64, TwoParticleError> {
    let mut entropy = 0.0;
    for s in schmidt_spectrum(state)? {
        let p = s * s;
        if p > 0.0 {
            entropy -= p * p.ln();
        }
    }
    // clamp tiny negative rounding from p ~ 1 states
    Ok(entropy.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn basis(n: usize, i: usize) -> DVector<C64> {
        let mut v = DVector::zeros(n);
        v[i] = c(1.0, 0.0);
        v
    }

    #[test]
    fn flip_swaps_basis_factors() {
        let k = flip(2);
        let e1 = basis(2, 0);
        let e2 = basis(2, 1);
        let v = TensorState::product(&e1, &e2);
        let swapped = TensorState::product(&e2, &e1);
        assert_eq!(&k * &v.values, swapped.values);
        // symmetric vectors are fixed
        let vv = TensorState::product(&e2, &e2);
        assert_eq!(&k * &vv.values, vv.values);
    }

    #[test]
    fn flip_is_a_symmetric_involution_with_trace_n() {
        for n in [1usize, 2, 3, 5] {
            let k = flip(n);
            let id = DMatrix::<C64>::identity(n * n, n * n);
            assert_eq!(&k * &k, id, "K^2 = id exactly");
            assert_eq!(k.adjoint(), k, "K* = K exactly");
            let trace: C64 = k.trace();
            assert_eq!(trace, c(n as f64, 0.0));
            // permutation matrix: every column has exactly one 1
            for j in 0..n * n {
                let col_sum: f64 = (0..n * n).map(|i| k[(i, j)].norm()).sum();
                assert_eq!(col_sum, 1.0);
            }
        }
    }

    #[test]
    fn composite_of_diagonal_hamiltonian() {
        let h = DMatrix::from_diagonal(&DVector::from_vec(vec![c(1.0, 0.0), c(3.0, 0.0)]));
        let sys = compose_hamiltonian(&h).unwrap();
        // H (x) id + id (x) H, diagonal entries are the pair sums
        let expect = [2.0, 4.0, 4.0, 6.0];
        for (i, want) in expect.iter().enumerate() {
            assert_eq!(sys.h2[(i, i)], c(*want, 0.0));
        }
        let kron_form = h.kronecker(&DMatrix::identity(2, 2))
            + DMatrix::<C64>::identity(2, 2).kronecker(&h);
        assert_eq!(sys.h2, kron_form);
    }

    #[test]
    fn composite_commutes_with_flip_and_stays_hermitian() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in [2usize, 3] {
            let raw = DMatrix::from_fn(n, n, |_, _| {
                c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            let h = (&raw + raw.adjoint()) * c(0.5, 0.0);
            let sys = compose_hamiltonian(&h).unwrap();
            assert!((&sys.h2 - sys.h2.adjoint()).norm() < 1e-12);
            let comm = &sys.h2 * &sys.k - &sys.k * &sys.h2;
            assert!(comm.norm() < 1e-12, "[H2, K] = 0");
        }
    }

    #[test]
    fn zero_hamiltonian_composes_to_zero() {
        let h = DMatrix::<C64>::zeros(3, 3);
        let sys = compose_hamiltonian(&h).unwrap();
        assert_eq!(sys.h2, DMatrix::<C64>::zeros(9, 9));
    }

    #[test]
    fn non_hermitian_input_is_rejected() {
        let mut h = DMatrix::<C64>::zeros(2, 2);
        h[(0, 1)] = c(1.0, 0.0);
        assert!(matches!(
            compose_hamiltonian(&h),
            Err(TwoParticleError::NonHermitian(_))
        ));
    }

    #[test]
    fn composite_spectrum_is_pair_sums() {
        let h = DMatrix::from_diagonal(&DVector::from_vec(vec![
            c(-0.5, 0.0),
            c(0.5, 0.0),
            c(2.0, 0.0),
        ]));
        let sys = compose_hamiltonian(&h).unwrap();
        let mut eig: Vec<f64> = sys.h2.symmetric_eigen().eigenvalues.iter().copied().collect();
        eig.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut expect: Vec<f64> = (0..3)
            .flat_map(|i| (0..3).map(move |j| [-0.5, 0.5, 2.0][i] + [-0.5, 0.5, 2.0][j]))
            .collect();
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (g, w) in eig.iter().zip(&expect) {
            assert!((g - w).abs() < 1e-12);
        }
    }

    #[test]
    fn singlet_is_antisymmetric_with_norm_two() {
        let v = singlet();
        assert_eq!(v.norm_sq(), 2.0);
        let k = flip(2);
        assert_eq!(&k * &v.values, -&v.values, "Kv = -v");
    }

    #[test]
    fn singlet_is_an_h2_eigenvector() {
        let h = DMatrix::from_diagonal(&DVector::from_vec(vec![c(1.0, 0.0), c(3.0, 0.0)]));
        let sys = compose_hamiltonian(&h).unwrap();
        let v = singlet();
        let hv = &sys.h2 * &v.values;
        assert_eq!(hv, &v.values * c(4.0, 0.0), "H2 v = (1 + 3) v");
    }

    #[test]
    fn singlet_entropy_is_ln_two() {
        let s = entanglement_entropy(&singlet()).unwrap();
        assert!((s - 2f64.ln()).abs() < 1e-12, "entropy {s}");
    }

    #[test]
    fn schmidt_spectra_of_reference_states() {
        // the singlet splits evenly: two coefficients 1/sqrt(2)
        let s = schmidt_spectrum(&singlet()).unwrap();
        let half = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(s.len(), 2);
        assert!((s[0] - half).abs() < 1e-12 && (s[1] - half).abs() < 1e-12, "{s:?}");

        // a product state is Schmidt rank one
        let p = TensorState::product(&basis(2, 0), &basis(3, 2));
        let s = schmidt_spectrum(&p).unwrap();
        assert!((s[0] - 1.0).abs() < 1e-12, "{s:?}");
        assert!(s[1..].iter().all(|x| x.abs() < 1e-12), "{s:?}");

        assert!(schmidt_spectrum(&TensorState::product(
            &DVector::zeros(2),
            &basis(2, 0)
        ))
        .is_err());
    }

    #[test]
    fn product_states_have_zero_entropy() {
        let v = DVector::from_vec(vec![c(0.6, 0.1), c(-0.3, 0.7)]);
        let w = DVector::from_vec(vec![c(0.2, 0.0), c(0.5, -0.4), c(1.0, 1.0)]);
        let s = entanglement_entropy(&TensorState::product(&v, &w)).unwrap();
        assert!(s.abs() < 1e-12);
    }

    #[test]
    fn zero_state_is_rejected() {
        let z = TensorState::new(DVector::zeros(4), 2, 2).unwrap();
        assert!(matches!(
            entanglement_entropy(&z),
            Err(TwoParticleError::ZeroState)
        ));
        assert!(TensorState::new(DVector::zeros(5), 2, 2).is_err());
    }

    fn random_unitary(n: usize, rng: &mut impl Rng) -> DMatrix<C64> {
        let raw = DMatrix::from_fn(n, n, |_, _| {
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        raw.qr().q()
    }

    #[test]
    fn entropy_is_invariant_under_local_unitaries() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let base = singlet();
        let s0 = entanglement_entropy(&base).unwrap();
        for _ in 0..5 {
            let u = random_unitary(2, &mut rng);
            let w = random_unitary(2, &mut rng);
            let local = u.kronecker(&w);
            let rotated = TensorState::new(&local * &base.values, 2, 2).unwrap();
            let s = entanglement_entropy(&rotated).unwrap();
            assert!((s - s0).abs() < 1e-12);
        }
    }

    #[test]
    fn singlet_entropy_is_maximal_on_two_qubits() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let cap = 2f64.ln();
        for _ in 0..50 {
            let values = DVector::from_fn(4, |_, _| {
                c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            let state = TensorState::new(values, 2, 2).unwrap();
            let s = entanglement_entropy(&state).unwrap();
            assert!(s <= cap + 1e-12);
        }
    }
}
