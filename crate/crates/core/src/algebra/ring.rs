//! The quotient rings `R_n = GF(p)[X] / <X^n - 1>` and the CRT split of
//! `R_2m` across `X^m - 1` and `X^m + 1`.

use std::fmt;

use rand::Rng;

use super::field::FieldSpec;
use super::poly::{parse_coeff_list, write_coeff_list, Poly};
use crate::error::{Error, Result};

/// An element of `R_n`, stored as exactly `n` ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl RingElement {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Self {
            field,
            coeffs: vec![0; n],
        }
    }

    pub fn one(field: FieldSpec, n: usize) -> Self {
        Self::x_pow(field, n, 0)
    }

    /// `X^k` reduced in `R_n`.
    pub fn x_pow(field: FieldSpec, n: usize, k: usize) -> Self {
        let mut e = Self::zero(field, n);
        e.coeffs[k % n] = 1;
        e
    }

    /// Reduces a polynomial modulo `X^n - 1` by folding exponents.
    pub fn from_poly(n: usize, f: &Poly) -> Self {
        assert!(n > 0, "R_0 is not a ring of words");
        let field = f.field();
        let mut coeffs = vec![0; n];
        for (i, &c) in f.coeffs().iter().enumerate() {
            coeffs[i % n] = field.add(coeffs[i % n], c);
        }
        Self { field, coeffs }
    }

    /// Takes residues already in `[0, p)`; `coeffs.len()` becomes `n`.
    pub fn from_raw(field: FieldSpec, coeffs: Vec<u32>) -> Self {
        assert!(!coeffs.is_empty());
        debug_assert!(coeffs.iter().all(|&c| c < field.p()));
        Self { field, coeffs }
    }

    pub fn from_ints(field: FieldSpec, n: usize, coeffs: &[i64]) -> Self {
        Self::from_poly(n, &Poly::from_ints(field, coeffs))
    }

    /// Parses the ascending coefficient text format. Lists longer than `n`
    /// wrap around, as `X^n = 1`.
    pub fn parse(field: FieldSpec, n: usize, text: &str) -> Result<Self> {
        Ok(Self::from_ints(field, n, &parse_coeff_list(text)?))
    }

    pub fn random<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> Self {
        let coeffs = (0..n).map(|_| rng.random_range(0..field.p())).collect();
        Self { field, coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The co-length `n` of the ring.
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Canonical lift to a polynomial of degree below `n`.
    pub fn to_poly(&self) -> Poly {
        Poly::from_raw(self.field, self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        if self.n() != other.n() {
            return Err(Error::RingMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&x, &y)| f.add(x, y))
            .collect();
        Ok(Self { field: f, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&x, &y)| f.sub(x, y))
            .collect();
        Ok(Self { field: f, coeffs })
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self {
            field: f,
            coeffs: self.coeffs.iter().map(|&x| f.mul(x, c)).collect(),
        }
    }

    /// Cyclic convolution.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n();
        let f = self.field;
        let p = f.p() as u64;
        let mut acc = vec![0u64; n];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.coeffs.iter().enumerate() {
                let k = if i + j >= n { i + j - n } else { i + j };
                acc[k] = (acc[k] + x as u64 * y as u64) % p;
            }
        }
        Ok(Self {
            field: f,
            coeffs: acc.into_iter().map(|c| c as u32).collect(),
        })
    }

    /// Multiplication by `X`: a right rotation of the coefficient vector.
    pub fn shift(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.rotate_right(1);
        Self {
            field: self.field,
            coeffs,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coeff_list(f, &self.coeffs)
    }
}

/// Splits `f` in `R_2m` into `(f mod X^m - 1, f mod X^m + 1)`.
pub fn crt_split(f: &RingElement) -> (RingElement, Poly) {
    assert!(f.n().is_multiple_of(2), "crt_split needs an element of R_2m");
    let m = f.n() / 2;
    let field = f.field;
    let (lo, hi) = f.coeffs.split_at(m);
    let minus = lo.iter().zip(hi).map(|(&x, &y)| field.add(x, y)).collect();
    let plus = lo.iter().zip(hi).map(|(&x, &y)| field.sub(x, y)).collect();
    (
        RingElement {
            field,
            coeffs: minus,
        },
        Poly::from_raw(field, plus),
    )
}

/// Inverse of [`crt_split`]: `u * (X^m + 1)/2 - v * (X^m - 1)/2` in `R_2m`.
pub fn crt_combine(u: &RingElement, v: &Poly) -> Result<RingElement> {
    let m = u.n();
    let field = u.field;
    if v.field() != field {
        return Err(Error::FieldMismatch(field.p(), v.field().p()));
    }
    if v.degree().is_some_and(|d| d >= m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: v.coeffs().len(),
        });
    }
    let two_m = 2 * m;
    let half = Poly::monomial(field, field.half() as i64, 0);
    let e_minus = Poly::x_pow_plus_one(field, m).mul(&half);
    let e_plus = Poly::x_pow_minus_one(field, m).mul(&half);
    let f = u.to_poly().mul(&e_minus).sub(&v.mul(&e_plus));
    Ok(RingElement::from_poly(two_m, &f))
}
