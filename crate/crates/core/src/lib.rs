//! Exact-arithmetic toolkit for graded lattice-point counting on convex
//! polytopes.
//!
//! The crate computes, over arbitrary-precision rationals:
//!
//! - classical Ehrhart data: lattice points of dilations `mP` and their
//!   counting sequence ([`polytope`]);
//! - the bigraded refinement of that sequence, in which the coefficient of
//!   `t^m` is a polynomial in `q` recording dimensions of graded pieces
//!   attached to `(mP) ∩ Z^n` ([`harmonic`]);
//! - three independent pipelines for those dimensions (vanishing-order
//!   filtrations, lowest parts of binomial expansions, and apolarity
//!   kernels), cross-checked against each other;
//! - desk-scale diagnostics for a rational triangle whose graded algebra
//!   exhibits unbounded generator growth ([`gk`]).
//!
//! Everything is exact: scalars are [`linalg::Rational`], elimination is
//! fraction-free, and no floating point is used anywhere.

pub mod cli;
pub mod gk;
pub mod harmonic;
pub mod linalg;
pub mod poly;
pub mod polytope;

pub use harmonic::{q_ehrhart, BigradedTable, FiltrationTable, HarmonicBasis, Method};
pub use linalg::{kernel_basis, rank, reduced_echelon, Rational, RationalMatrix};
pub use poly::{MultiPoly, TruncatedSeries};
pub use polytope::{LatticePointSet, Polytope};
