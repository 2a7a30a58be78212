//! Exact computer algebra for punctual Quot schemes.
//!
//! This crate constructs the fiber `F_n = Quot_C^n(E)_q` of the Quot-to-Chow
//! morphism for a rank-`r` locally free sheaf on a curve, at the level of
//! closed points and defining ideals, and provides the machinery to verify
//! its structural properties by two independent routes:
//!
//! * symbolically, via multivariate polynomial arithmetic over exact
//!   coefficient rings (ℚ, prime fields, dual numbers) and Buchberger-based
//!   Gröbner bases (elimination ideals, Krull dimension, Jacobian singular
//!   ideals, quadric ranks);
//! * combinatorially, via exhaustive enumeration of t-invariant submodules
//!   of `(F_q[t]/(t^n))^r` in canonical echelon form, their quotient
//!   partition types, and the incidence correspondences between consecutive
//!   colengths.
//!
//! The crate is `no_std` (with `alloc`); IO, report formats and the command
//! line live in the companion `quotlab` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod field;
pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod quot;
pub mod submodule;

pub use error::Error;
pub use field::{FieldElement, FieldKind};
pub use groebner::{
    buchberger, eliminate, krull_dim, normal_form, projective_closure, quadric_rank,
    singular_ideal, GroebnerBasis, Ideal,
};
pub use matrix::symbolic_det;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{poly_op, Binding, PolyOp, Polynomial, RingCtx};
pub use quot::{
    binomial, chart_matrix, chart_var_name, divisor_witness, image_ideal, plucker_minors,
    plucker_of_submodule, plucker_subsets, plucker_var_name, projective_solutions, vanishes_at,
    ChartMatrix, CompiledFpPoly, PluckerPoint, QuotIdeal,
};
pub use submodule::{
    enumerate_submodules, incidence_pairs, socle_parts, IncidencePair, Partition, Submodule,
};

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
