//! Prime fields GF(p) for odd primes p.

use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

/// An odd prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Rejects 2 and every composite.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Residue of an arbitrary integer.
    #[inline]
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn elem(&self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            p: self.p,
        }
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        let s = x + y;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, x: u32, y: u32) -> u32 {
        if x >= y {
            x - y
        } else {
            x + self.p - y
        }
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        if x == 0 {
            0
        } else {
            self.p - x
        }
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        ((x as u64 * y as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut x: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    /// Inverse by Fermat's little theorem.
    pub fn inv(&self, x: u32) -> Result<u32> {
        if x.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, self.p as u64 - 2))
    }

    /// The inverse of 2, which exists since p is odd.
    pub fn half(&self) -> u32 {
        self.p.div_ceil(2)
    }

    /// `p^e`, or `None` on overflow.
    pub fn size_pow(&self, e: usize) -> Option<u64> {
        (self.p as u64).checked_pow(u32::try_from(e).ok()?)
    }
}

/// A residue modulo the prime of its [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    p: u32,
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<FieldSpec> {
        if self.p != other.p {
            return Err(Error::FieldMismatch(self.p, other.p));
        }
        Ok(self.spec())
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self {
            value: f.add(self.value, other.value),
            p: self.p,
        })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self {
            value: f.sub(self.value, other.value),
            p: self.p,
        })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self {
            value: f.mul(self.value, other.value),
            p: self.p,
        })
    }

    pub fn inv(self) -> Result<Self> {
        Ok(Self {
            value: self.spec().inv(self.value)?,
            p: self.p,
        })
    }
}

impl Neg for FieldElement {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            value: self.spec().neg(self.value),
            p: self.p,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
