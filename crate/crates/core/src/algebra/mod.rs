//! Exact arithmetic: GF(p), polynomials, the rings `R_n`, cyclotomic cosets
//! and row reduction.

pub mod cosets;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod ring;

pub use cosets::{check_coprime, cyclotomic_cosets, ell_m, CosetPartition};
pub use field::{FieldElement, FieldSpec};
pub use matrix::{Matrix, RowReducer};
pub use poly::{poly_gcd, poly_gcd_all, Poly};
pub use ring::{crt_combine, crt_split, RingElement};
