//! Resultant matrices for unmixed multihomogeneous systems.
//!
//! A system of type `(l_1, ..., l_r; d_1, ..., d_r)` consists of `n + 1`
//! polynomials, `n = l_1 + ... + l_r`, each of degree `d_k` in the `k`-th
//! group of `l_k + 1` homogeneous variables. For a degree vector `m` the
//! crate computes the terms of the associated Weyman complex, classifies and
//! enumerates determinantal degree vectors, builds explicit Sylvester and
//! Bezout resultant matrices, and checks them against a brute-force oracle.
//!
//! Module map:
//!
//! - [`exact`]: big-integer binomials, sparse polynomials, exact determinants,
//!   modular rank.
//! - [`cohomology`]: Bott dimensions of line-bundle cohomology and complex terms.
//! - [`degree_vectors`]: defects, search boxes, enumeration and the explicit
//!   Sylvester/Bezout degree-vector families.
//! - [`builders`]: monomial bases, Sylvester matrices, Bezoutians and Bezout
//!   matrices, randomized rank tests.
//! - [`oracle`]: specializations with forced common roots and determinant
//!   cross-checks.

pub mod builders;
pub mod cohomology;
pub mod degree_vectors;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod system;

pub use error::Error;
pub use system::{DegreeVector, Permutation, SystemData};
