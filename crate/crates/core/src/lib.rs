//! hopflab-core: exact normal ordering, Hopf-axiom checking, duality
//! pairings, and numerical representation tools for a family of
//! noncommutative *-algebras.
//!
//! The crate is organised in layers:
//!
//! * [`scalar`] — exact coefficient field: rational functions over the
//!   Gaussian rationals in named parameters.
//! * [`algebra`] — free *-algebra words, rewrite presentations, normal
//!   ordering, and confluence diagnostics.
//! * [`hopf`] — coproduct/counit/antipode data, axiom checking with
//!   explicit witnesses, and duality pairings.
//! * [`models`] — the built-in catalogue of presentations and pairings.
//! * [`podles`] — irreducible representation matrices on finite windows,
//!   exact and floating point.
//! * [`twoparticle`] — flip-symmetrised two-particle Hamiltonians and
//!   entanglement diagnostics.
//! * [`igl`] — the affine group of the line acting on log-lattice
//!   functions, and discrete position operators.

pub mod algebra;
pub mod hopf;
pub mod igl;
pub mod models;
pub mod podles;
pub mod scalar;
pub mod sym;
pub mod twoparticle;

pub use algebra::{AlgebraDef, NCPoly, Presentation, RewriteRule, Word};
pub use scalar::{GaussRat, MPoly, Scalar};
pub use sym::Sym;
