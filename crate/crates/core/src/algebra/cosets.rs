//! q-cyclotomic cosets modulo m.
//!
//! The coset of `s` is its orbit under `s -> s*q mod m`. When `gcd(m, q) = 1`
//! the coset sizes are exactly the degrees of the irreducible factors of
//! `X^m - 1` over GF(q), with the coset `{0}` matching the factor `X - 1`.
//! Everything downstream only needs those degrees, so no factorization is
//! performed.

use super::field::FieldSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    m: usize,
    q: u32,
    /// Sorted cosets, ordered by their least element; `cosets[0] == [0]`.
    cosets: Vec<Vec<usize>>,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Fails unless `m >= 1` and `gcd(m, p) = 1`.
pub fn check_coprime(m: usize, field: FieldSpec) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroLength);
    }
    if gcd(m as u64, field.p() as u64) != 1 {
        return Err(Error::NotCoprime { m, q: field.p() });
    }
    Ok(())
}

impl CosetPartition {
    pub fn new(m: usize, field: FieldSpec) -> Result<Self> {
        check_coprime(m, field)?;
        let q = field.p() as u64 % m as u64;
        let mut seen = vec![false; m];
        let mut cosets = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut coset = Vec::new();
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                coset.push(t);
                t = ((t as u64 * q) % m as u64) as usize;
            }
            coset.sort_unstable();
            cosets.push(coset);
        }
        Ok(Self {
            m,
            q: field.p(),
            cosets,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Sizes of the cosets other than `{0}`: the degrees `d_j` of the
    /// irreducible factors of `(X^m - 1)/(X - 1)`.
    pub fn nonzero_sizes(&self) -> Vec<usize> {
        self.cosets[1..].iter().map(Vec::len).collect()
    }

    /// The number `h` of irreducible factors of `(X^m - 1)/(X - 1)`.
    pub fn nonzero_count(&self) -> usize {
        self.cosets.len() - 1
    }
}

pub fn cyclotomic_cosets(m: usize, field: FieldSpec) -> Result<CosetPartition> {
    CosetPartition::new(m, field)
}

/// Least degree of an irreducible factor of `(X^m - 1)/(X - 1)`.
pub fn ell_m(m: usize, field: FieldSpec) -> Result<usize> {
    let part = CosetPartition::new(m, field)?;
    part.nonzero_sizes()
        .into_iter()
        .min()
        .ok_or(Error::NoNonzeroCoset(m))
}
