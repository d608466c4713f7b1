//! Exact order relations between generalized diagonals of positive
//! semi-definite matrices.
//!
//! For a matrix `X` and a permutation `σ`, the generalized diagonal is the
//! product `X_σ = x_{1,σ(1)} x_{2,σ(2)} ⋯ x_{n,σ(n)}`. This crate decides,
//! for any pair of permutations, whether `|X_σ| ≤ |X_τ|` (or `X_σ ≤ X_τ`)
//! holds for every PSD matrix, and ships the machinery to check each verdict
//! numerically:
//!
//! - [`perm`]: permutations, parsing, cycle decomposition.
//! - [`order`]: cycle inclusion order, cycle-reversal equivalence, the class
//!   order, Bruhat order and the verdict classifier.
//! - [`matrix`]: dense complex matrices, PSD certification and log-domain
//!   generalized diagonals.
//! - [`construct`]: seeded Gram-matrix generators and the ε-Gram matrix.
//! - [`verify`]: exhaustive poset checks, Monte-Carlo trials and the
//!   counterexample finder.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod construct;
mod error;
pub mod matrix;
pub mod order;
pub mod perm;
pub mod verify;

pub use error::Error;
pub use matrix::{CertifiedMatrix, ComplexMatrix, DiagonalValue, PsdCertificate, PsdVerdict};
pub use order::{classify, EquivClassRep, Relation, RelationVerdict, Setting, Witness};
pub use perm::{Cycle, CycleDecomposition, Permutation};

pub type Result<T, E = Error> = core::result::Result<T, E>;
