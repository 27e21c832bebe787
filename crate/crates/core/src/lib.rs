//! Quasi-cyclic codes of index 1½ over odd prime fields.
//!
//! A code of co-index `2m` lives in `R_2m x R_m`, where `R_n = GF(p)[X]/<X^n - 1>`,
//! and is invariant under the permutation that rotates the first `2m` and the
//! last `m` coordinates simultaneously. The crate builds the one-generator
//! codes `C_{a,a'} = {(f a, f a') : f in R_2m}`, computes their generator
//! polynomial, dimension, generator matrix and minimum distance, and studies
//! the random ensemble obtained by drawing `(a, a')` uniformly from
//! `<(X^m + 1)(X - 1)> x <X - 1>`.

pub mod algebra;
pub mod bounds;
pub mod ensemble;
pub mod error;
pub mod qc15;

pub use error::{Error, Result};
