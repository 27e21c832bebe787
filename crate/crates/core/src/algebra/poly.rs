//! Dense univariate polynomials over GF(p).
//!
//! Coefficients are stored in ascending order (`coeffs[i]` is the coefficient
//! of `X^i`) with no trailing zeros, so the zero polynomial is the empty
//! vector and its degree is `None`.

use std::fmt;

use super::field::{FieldElement, FieldSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(field: FieldSpec) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::monomial(field, 1, 0)
    }

    /// `c * X^k`.
    pub fn monomial(field: FieldSpec, c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = field.reduce(c);
        Self::from_raw(field, coeffs)
    }

    /// Builds from residues already in `[0, p)`.
    pub fn from_raw(field: FieldSpec, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.p()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    /// Builds from arbitrary integers, reducing each modulo p.
    pub fn from_ints(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::from_raw(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    pub fn from_elements(field: FieldSpec, coeffs: &[FieldElement]) -> Result<Self> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.spec() != field {
                return Err(Error::FieldMismatch(field.p(), c.spec().p()));
            }
            raw.push(c.value());
        }
        Ok(Self::from_raw(field, raw))
    }

    /// `X^n - 1`.
    pub fn x_pow_minus_one(field: FieldSpec, n: usize) -> Self {
        Self::x_pow_plus_const(field, n, -1)
    }

    /// `X^n + 1`.
    pub fn x_pow_plus_one(field: FieldSpec, n: usize) -> Self {
        Self::x_pow_plus_const(field, n, 1)
    }

    fn x_pow_plus_const(field: FieldSpec, n: usize, c: i64) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.add(coeffs[0], field.reduce(c));
        Self::from_raw(field, coeffs)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn elements(&self) -> Vec<FieldElement> {
        self.coeffs
            .iter()
            .map(|&c| self.field.elem(c as i64))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_raw(self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_raw(self.field, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_raw(
            self.field,
            self.coeffs.iter().map(|&c| self.field.neg(c)).collect(),
        )
    }

    pub fn scale(&self, c: u32) -> Self {
        Self::from_raw(
            self.field,
            self.coeffs.iter().map(|&x| self.field.mul(x, c)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        Self::from_raw(f, out)
    }

    /// Euclidean division: `self = q * g + r` with `deg r < deg g`.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        debug_assert_eq!(self.field, g.field);
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let Some(df) = self.degree() else {
            return Ok((Self::zero(f), Self::zero(f)));
        };
        if df < dg {
            return Ok((Self::zero(f), self.clone()));
        }
        let lead_inv = f.inv(g.coeffs[dg])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; df - dg + 1];
        for k in (0..=df - dg).rev() {
            let c = f.mul(rem[k + dg], lead_inv);
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, gj));
            }
        }
        rem.truncate(dg);
        Ok((Self::from_raw(f, quot), Self::from_raw(f, rem)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divmod(g)?.1)
    }

    /// Whether `self` divides `other`; the zero polynomial divides only zero.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("leading coefficient is nonzero")),
        }
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// Parses a comma-separated list of ascending integer coefficients,
    /// reducing each modulo p. An empty string is the zero polynomial.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self> {
        Ok(Self::from_ints(field, &parse_coeff_list(text)?))
    }
}

/// Splits `"2,1,-1"` into integers. Whitespace around entries is ignored.
pub fn parse_coeff_list(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(text.to_string()))
        })
        .collect()
}

/// Writes residues comma-separated, the zero polynomial as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        write_coeff_list(f, &self.coeffs)
    }
}

pub(crate) fn write_coeff_list(f: &mut fmt::Formatter<'_>, coeffs: &[u32]) -> fmt::Result {
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

/// Monic greatest common divisor. `gcd(f, 0) = monic(f)` and `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(&b).expect("divisor is nonzero");
        a = b;
        b = r;
    }
    a.monic()
}

/// Monic gcd of several polynomials.
pub fn poly_gcd_all<'a>(field: FieldSpec, polys: impl IntoIterator<Item = &'a Poly>) -> Poly {
    polys
        .into_iter()
        .fold(Poly::zero(field), |acc, p| poly_gcd(&acc, p))
}
