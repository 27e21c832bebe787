//! One-generator quasi-cyclic codes of index 1½ and co-index `2m`.
//!
//! For `(a, a')` in `R_2m x R_m` the code is the image of
//! `f -> (f a mod X^2m - 1, f a' mod X^m - 1)`. Its kernel is generated by
//! `h = (X^2m - 1)/g` with
//!
//! ```text
//! g = gcd(a, X^m + 1) * gcd(a, a', X^m - 1)
//! ```
//!
//! so the dimension is `deg h`. Codewords are words of length `3m`: the `2m`
//! coefficients of the first component followed by the `m` of the second.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::algebra::{
    check_coprime, poly_gcd, poly_gcd_all, FieldElement, FieldSpec, Matrix, Poly, RingElement,
    RowReducer,
};
use crate::error::{Error, Result};

/// Default ceiling on the number of codewords visited by exhaustive routines.
pub const DEFAULT_ENUM_LIMIT: u64 = 1 << 24;

/// A word of `F^2m x F^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    m: usize,
    p: u32,
    coords: Vec<u32>,
}

impl Word {
    pub fn new(field: FieldSpec, m: usize, coords: Vec<u32>) -> Result<Self> {
        if coords.len() != 3 * m {
            return Err(Error::DimensionMismatch {
                expected: 3 * m,
                got: coords.len(),
            });
        }
        Ok(Self {
            m,
            p: field.p(),
            coords: coords.into_iter().map(|c| c % field.p()).collect(),
        })
    }

    pub fn zero(field: FieldSpec, m: usize) -> Self {
        Self {
            m,
            p: field.p(),
            coords: vec![0; 3 * m],
        }
    }

    /// Concatenates an element of `R_2m` and one of `R_m`.
    pub fn from_pair(left: &RingElement, right: &RingElement) -> Result<Self> {
        let m = right.n();
        if left.n() != 2 * m {
            return Err(Error::RingMismatch(left.n(), 2 * m));
        }
        if left.field() != right.field() {
            return Err(Error::FieldMismatch(left.field().p(), right.field().p()));
        }
        let mut coords = left.coeffs().to_vec();
        coords.extend_from_slice(right.coeffs());
        Ok(Self {
            m,
            p: left.field().p(),
            coords,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn elements(&self) -> Vec<FieldElement> {
        let f = FieldSpec::new(self.p as u64).expect("word built from a valid field");
        self.coords.iter().map(|&c| f.elem(c as i64)).collect()
    }

    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// Symbols concatenated when `p < 10` (`"000022"`), otherwise joined by `:`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.p < 10 { "" } else { ":" };
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The permutation ξ: rotates the first `2m` and the last `m` coordinates
/// right by one position, independently.
pub fn shift_xi(w: &Word) -> Word {
    let mut coords = w.coords.clone();
    let (left, right) = coords.split_at_mut(2 * w.m);
    left.rotate_right(1);
    right.rotate_right(1);
    Word {
        m: w.m,
        p: w.p,
        coords,
    }
}

fn check_pair(a: &RingElement, a_prime: &RingElement) -> Result<usize> {
    let m = a_prime.n();
    if a.n() != 2 * m {
        return Err(Error::RingMismatch(a.n(), 2 * m));
    }
    if a.field() != a_prime.field() {
        return Err(Error::FieldMismatch(a.field().p(), a_prime.field().p()));
    }
    check_coprime(m, a.field())?;
    Ok(m)
}

/// `g = gcd(a, X^m + 1) * gcd(a, a', X^m - 1)`, monic.
pub fn compute_g(a: &RingElement, a_prime: &RingElement) -> Result<Poly> {
    let m = check_pair(a, a_prime)?;
    let field = a.field();
    let a = a.to_poly();
    let plus = poly_gcd(&a, &Poly::x_pow_plus_one(field, m));
    let minus = poly_gcd_all(
        field,
        [&a, &a_prime.to_poly(), &Poly::x_pow_minus_one(field, m)],
    );
    Ok(plus.mul(&minus))
}

/// `h = (X^2m - 1)/g`, monic.
pub fn compute_h(g: &Poly, m: usize) -> Result<Poly> {
    let (q, r) = Poly::x_pow_minus_one(g.field(), 2 * m).divmod(g)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor(2 * m));
    }
    Ok(q.monic())
}

/// Row `i` holds the coefficients of `X^i v(X)` in `R_n`.
pub fn build_circulant(v: &RingElement) -> Matrix {
    let n = v.n();
    let mut rows = Vec::with_capacity(n);
    let mut row = v.clone();
    for _ in 0..n {
        rows.push(row.coeffs().to_vec());
        row = row.shift();
    }
    Matrix::from_rows(v.field(), n, rows)
}

/// The circulants of `a` and `a'` and the `2m x 3m` matrix `Â = (A | A' over A')`,
/// whose row space is the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantBlock {
    pub a: Matrix,
    pub a_prime: Matrix,
    pub ahat: Matrix,
}

pub fn build_ahat(a: &RingElement, a_prime: &RingElement) -> Result<CirculantBlock> {
    let m = a_prime.n();
    if a.n() != 2 * m {
        return Err(Error::RingMismatch(a.n(), 2 * m));
    }
    let ca = build_circulant(a);
    let cp = build_circulant(a_prime);
    let rows = (0..2 * m)
        .map(|i| {
            let mut r = ca.row(i).to_vec();
            r.extend_from_slice(cp.row(i % m));
            r
        })
        .collect();
    let ahat = Matrix::from_rows(a.field(), 3 * m, rows);
    Ok(CirculantBlock {
        a: ca,
        a_prime: cp,
        ahat,
    })
}

/// A constructed code `C_{a,a'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qc15Code {
    field: FieldSpec,
    m: usize,
    a: RingElement,
    a_prime: RingElement,
    g: Poly,
    h: Poly,
    dim: usize,
    gen_matrix: Matrix,
}

/// Minimum distance together with a codeword attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDistance {
    pub d: usize,
    pub length: usize,
    pub witness: Word,
}

impl MinDistance {
    /// `d / 3m`.
    pub fn relative(&self) -> f64 {
        self.d as f64 / self.length as f64
    }
}

pub fn construct_code(a: &RingElement, a_prime: &RingElement) -> Result<Qc15Code> {
    Qc15Code::new(a, a_prime)
}

impl Qc15Code {
    /// Computes `g`, `h`, the dimension, and a generator matrix made of the
    /// rows of `Â` that raise the rank when scanned top-down.
    pub fn new(a: &RingElement, a_prime: &RingElement) -> Result<Self> {
        let g = compute_g(a, a_prime)?;
        let m = a_prime.n();
        let h = compute_h(&g, m)?;
        let dim = h.degree().expect("h divides X^2m - 1 so it is nonzero");
        let field = a.field();
        let block = build_ahat(a, a_prime)?;
        let mut reducer = RowReducer::new(field, 3 * m);
        let mut rows = Vec::with_capacity(dim);
        for row in block.ahat.rows() {
            if rows.len() == dim {
                break;
            }
            if reducer.insert(row) {
                rows.push(row.clone());
            }
        }
        debug_assert_eq!(rows.len(), dim);
        Ok(Self {
            field,
            m,
            a: a.clone(),
            a_prime: a_prime.clone(),
            g,
            h,
            dim,
            gen_matrix: Matrix::from_rows(field, 3 * m, rows),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn length(&self) -> usize {
        3 * self.m
    }

    pub fn a(&self) -> &RingElement {
        &self.a
    }

    pub fn a_prime(&self) -> &RingElement {
        &self.a_prime
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rate(&self) -> f64 {
        self.dim as f64 / self.length() as f64
    }

    pub fn gen_matrix(&self) -> &Matrix {
        &self.gen_matrix
    }

    /// The map γ: `f -> (f a, f a')`.
    pub fn encode(&self, f: &RingElement) -> Result<Word> {
        if f.n() != 2 * self.m {
            return Err(Error::RingMismatch(f.n(), 2 * self.m));
        }
        let left = f.mul(&self.a)?;
        let f_short = RingElement::from_poly(self.m, &f.to_poly());
        let right = f_short.mul(&self.a_prime)?;
        Word::from_pair(&left, &right)
    }

    /// `y * G` for a message of `dim` symbols.
    pub fn encode_message(&self, y: &[FieldElement]) -> Result<Word> {
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut raw = Vec::with_capacity(y.len());
        for e in y {
            if e.spec() != self.field {
                return Err(Error::FieldMismatch(self.field.p(), e.spec().p()));
            }
            raw.push(e.value());
        }
        Ok(Word {
            m: self.m,
            p: self.field.p(),
            coords: self.gen_matrix.left_mul(&raw),
        })
    }

    fn check_enum(&self, limit: u64) -> Result<()> {
        check_enum_size(self.field, self.dim, limit)
    }

    /// All `p^dim` codewords.
    pub fn enumerate_codewords(&self, limit: u64) -> Result<BTreeSet<Word>> {
        self.check_enum(limit)?;
        let mut out = BTreeSet::new();
        out.insert(Word::zero(self.field, self.m));
        for_each_nonzero_codeword(&self.gen_matrix, |w, _| {
            out.insert(Word {
                m: self.m,
                p: self.field.p(),
                coords: w.to_vec(),
            });
            ControlFlow::Continue(())
        });
        Ok(out)
    }

    /// Exhaustive minimum nonzero weight. The witness is the first minimum
    /// found in enumeration order.
    pub fn min_distance(&self, limit: u64) -> Result<MinDistance> {
        if self.dim == 0 {
            return Err(Error::ZeroCode);
        }
        self.check_enum(limit)?;
        let mut best: Option<(usize, Vec<u32>)> = None;
        for_each_nonzero_codeword(&self.gen_matrix, |w, wt| {
            if best.as_ref().is_none_or(|(d, _)| wt < *d) {
                best = Some((wt, w.to_vec()));
                // weight 1 cannot be beaten
                if wt == 1 {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        let (d, coords) = best.expect("a code of positive dimension has a nonzero word");
        Ok(MinDistance {
            d,
            length: self.length(),
            witness: Word {
                m: self.m,
                p: self.field.p(),
                coords,
            },
        })
    }

    /// A nonzero codeword of weight at most `max_weight`, if one exists.
    /// Stops at the first one found.
    pub fn find_word_within(&self, max_weight: usize, limit: u64) -> Result<Option<Word>> {
        if self.dim == 0 || max_weight == 0 {
            return Ok(None);
        }
        self.check_enum(limit)?;
        let mut found = None;
        for_each_nonzero_codeword(&self.gen_matrix, |w, wt| {
            if wt <= max_weight {
                found = Some(w.to_vec());
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        Ok(found.map(|coords| Word {
            m: self.m,
            p: self.field.p(),
            coords,
        }))
    }

    /// Serializable summary with polynomials in the ascending text format.
    pub fn report(&self) -> CodeReport {
        CodeReport {
            q: self.field.p(),
            m: self.m,
            length: self.length(),
            a: self.a.to_string(),
            a_prime: self.a_prime.to_string(),
            g: self.g.to_string(),
            h: self.h.to_string(),
            dim: self.dim,
            rate: self.rate(),
            gen_matrix: self.gen_matrix.rows().to_vec(),
            min_distance: None,
            relative_distance: None,
            witness: None,
            codewords: None,
        }
    }
}

/// JSON view of a [`Qc15Code`].
#[derive(Debug, Clone, Serialize)]
pub struct CodeReport {
    pub q: u32,
    pub m: usize,
    pub length: usize,
    pub a: String,
    pub a_prime: String,
    pub g: String,
    pub h: String,
    pub dim: usize,
    pub rate: f64,
    pub gen_matrix: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relative_distance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codewords: Option<Vec<String>>,
}

/// Fails when `p^exponent` exceeds `limit`.
pub fn check_enum_size(field: FieldSpec, exponent: usize, limit: u64) -> Result<()> {
    match field.size_pow(exponent) {
        Some(n) if n <= limit => Ok(()),
        _ => Err(Error::EnumerationTooLarge {
            q: field.p(),
            exponent,
            limit,
        }),
    }
}

/// Visits every nonzero `y * G` in p-ary Gray-code order, so consecutive
/// words differ by one generator row. The visitor gets the word and its
/// Hamming weight.
pub fn for_each_nonzero_codeword<F>(gen: &Matrix, mut visit: F)
where
    F: FnMut(&[u32], usize) -> ControlFlow<()>,
{
    let k = gen.num_rows();
    if k == 0 {
        return;
    }
    let p = gen.field().p();
    let mut counter = vec![0u32; k];
    let mut word = vec![0u32; gen.num_cols()];
    loop {
        // base-p increment; the first digit that does not wrap is the Gray
        // digit that moves by +1
        let mut j = 0;
        loop {
            if j == k {
                return;
            }
            counter[j] += 1;
            if counter[j] < p {
                break;
            }
            counter[j] = 0;
            j += 1;
        }
        let mut wt = 0;
        for (x, &r) in word.iter_mut().zip(gen.row(j)) {
            let s = *x + r;
            *x = if s >= p { s - p } else { s };
            wt += (*x != 0) as usize;
        }
        if visit(&word, wt).is_break() {
            return;
        }
    }
}
