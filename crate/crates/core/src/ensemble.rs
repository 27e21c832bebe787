//! The random ensemble of codes `C_{a,a'}` with `(a, a')` drawn uniformly from
//! `J+_2m x J_m`, where `J+_2m = <(X^m + 1)(X - 1)>` in `R_2m` and
//! `J_m = <X - 1>` in `R_m`.
//!
//! Exact routines sweep the whole probability space (or an ideal) and return
//! rationals; Monte-Carlo routines draw seeded trials. The event
//! "`Δ(C) <= δ`" is read as "some nonzero codeword has weight at most
//! `⌊3mδ⌋`", so the zero code never satisfies it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    check_coprime, crt_split, cyclotomic_cosets, poly_gcd, FieldSpec, Poly, RingElement,
};
use crate::bounds::{delta_prob_bound, QaryEntropy};
use crate::error::{Error, Result};
use crate::qc15::{check_enum_size, Qc15Code};

/// A sample of `J+_2m x J_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RestrictedPair {
    a: RingElement,
    a_prime: RingElement,
}

impl RestrictedPair {
    /// Checks that `(X^m + 1)(X - 1)` divides `a` in `R_2m` and `X - 1`
    /// divides `a'` in `R_m`.
    pub fn new(a: RingElement, a_prime: RingElement) -> Result<Self> {
        let m = a_prime.n();
        if a.n() != 2 * m {
            return Err(Error::RingMismatch(a.n(), 2 * m));
        }
        if !in_j_plus(&a) {
            return Err(Error::Domain(format!("{a} is not in <(X^m+1)(X-1)>")));
        }
        if a_prime.to_poly().eval(1) != 0 {
            return Err(Error::Domain(format!("{a_prime} is not in <X-1>")));
        }
        Ok(Self { a, a_prime })
    }

    pub fn a(&self) -> &RingElement {
        &self.a
    }

    pub fn a_prime(&self) -> &RingElement {
        &self.a_prime
    }

    pub fn code(&self) -> Result<Qc15Code> {
        Qc15Code::new(&self.a, &self.a_prime)
    }
}

/// Membership in `J+_2m`: zero residue mod `X^m + 1`, and the residue mod
/// `X^m - 1` vanishes at 1.
pub fn in_j_plus(a: &RingElement) -> bool {
    if !a.n().is_multiple_of(2) {
        return false;
    }
    let (minus, plus) = crt_split(a);
    plus.is_zero() && minus.to_poly().eval(1) == 0
}

/// `(X^m + 1)(X - 1)`.
pub fn j_plus_generator(field: FieldSpec, m: usize) -> Poly {
    Poly::x_pow_plus_one(field, m).mul(&Poly::from_ints(field, &[-1, 1]))
}

/// Uniform draw: `a = f (X^m + 1)(X - 1)` and `a' = f' (X - 1)` with `f`, `f'`
/// uniform in `R_2m`, `R_m`. Multiplication by a fixed element is a linear
/// surjection onto the ideal with equal-size fibers, so the image is uniform.
pub fn sample_pair<R: Rng + ?Sized>(
    field: FieldSpec,
    m: usize,
    rng: &mut R,
) -> Result<RestrictedPair> {
    check_coprime(m, field)?;
    let gen = RingElement::from_poly(2 * m, &j_plus_generator(field, m));
    let gen_prime = RingElement::from_poly(m, &Poly::from_ints(field, &[-1, 1]));
    let f = RingElement::random(field, 2 * m, rng);
    let f_prime = RingElement::random(field, m, rng);
    Ok(RestrictedPair {
        a: f.mul(&gen)?,
        a_prime: f_prime.mul(&gen_prime)?,
    })
}

/// The RNG for trial `t` of a run seeded with `seed`; independent of the
/// order in which trials execute.
pub fn trial_rng(seed: u64, t: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t);
    rng
}

/// Dimension of the ideal `<b>` of `R_n`: `n - deg gcd(b, X^n - 1)`, 0 for `b = 0`.
pub fn ideal_dim(b: &RingElement) -> usize {
    let n = b.n();
    let g = poly_gcd(&b.to_poly(), &Poly::x_pow_minus_one(b.field(), n));
    n - g.degree().expect("gcd with X^n - 1 is nonzero")
}

/// Every element of the ideal `<b>` of `R_n`, listed as `g f` with
/// `g = gcd(b, X^n - 1)` and `deg f < n - deg g`.
pub fn ideal_elements(b: &RingElement, limit: u64) -> Result<Vec<RingElement>> {
    let field = b.field();
    let n = b.n();
    let g = poly_gcd(&b.to_poly(), &Poly::x_pow_minus_one(field, n));
    let d = n - g.degree().expect("gcd with X^n - 1 is nonzero");
    check_enum_size(field, d, limit)?;
    let p = field.p() as u64;
    let count = p.pow(d as u32);
    Ok((0..count)
        .map(|mut idx| {
            let f: Vec<u32> = (0..d)
                .map(|_| {
                    let c = (idx % p) as u32;
                    idx /= p;
                    c
                })
                .collect();
            RingElement::from_poly(n, &g.mul(&Poly::from_raw(field, f)))
        })
        .collect())
}

/// All of `J+_2m`, `p^(m-1)` elements.
pub fn enumerate_j_plus(field: FieldSpec, m: usize, limit: u64) -> Result<Vec<RingElement>> {
    check_coprime(m, field)?;
    ideal_elements(
        &RingElement::from_poly(2 * m, &j_plus_generator(field, m)),
        limit,
    )
}

/// All of `J_m`, `p^(m-1)` elements.
pub fn enumerate_j_m(field: FieldSpec, m: usize, limit: u64) -> Result<Vec<RingElement>> {
    check_coprime(m, field)?;
    ideal_elements(
        &RingElement::from_poly(m, &Poly::from_ints(field, &[-1, 1])),
        limit,
    )
}

/// `⌊3mδ⌋`, with a small allowance so that e.g. `δ = 1/3` gives exactly `m`.
pub fn threshold_weight(m: usize, delta: f64) -> usize {
    (3.0 * m as f64 * delta + 1e-9).floor().max(0.0) as usize
}

fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::Domain(format!("delta = {delta} outside [0, 1]")));
    }
    Ok(())
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn weight_histogram(elems: &[RingElement]) -> Vec<u64> {
    let n = elems.first().map_or(0, RingElement::n);
    let mut hist = vec![0u64; n + 1];
    for e in elems {
        hist[e.weight()] += 1;
    }
    hist
}

/// Exact `E(X_b) = Pr(1 <= w(b a, b a') <= ⌊3mδ⌋)` over uniform `(a, a')`.
///
/// The map `(a, a') -> (b a, b a')` is linear onto `I_b x I'_b` with equal
/// fibers, so the probability is a count over that product.
pub fn exact_xb_expectation(b: &RingElement, delta: f64, limit: u64) -> Result<BigRational> {
    check_delta(delta)?;
    if !in_j_plus(b) {
        return Err(Error::Domain(format!("{b} is not in <(X^m+1)(X-1)>")));
    }
    let m = b.n() / 2;
    let t = threshold_weight(m, delta);
    let left = ideal_elements(b, limit)?;
    let right = ideal_elements(&RingElement::from_poly(m, &b.to_poly()), limit)?;
    let (h1, h2) = (weight_histogram(&left), weight_histogram(&right));
    let mut within = 0u64;
    for (w1, &c1) in h1.iter().enumerate() {
        for (w2, &c2) in h2.iter().enumerate() {
            if w1 + w2 <= t {
                within += c1 * c2;
            }
        }
    }
    // drop the zero word, which has weight 0
    let total = left.len() as u64 * right.len() as u64;
    Ok(ratio(within - 1, total))
}

/// Which probability an [`EnsembleReport`] estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Event {
    /// `Pr(Δ(C) <= δ)`: some nonzero codeword has weight `<= ⌊3mδ⌋`.
    DeltaLeq,
    /// `Pr(Δ(C) > δ)`, the complement; zero codes land here.
    DeltaGt,
    /// `Pr(dim C = m - 1)`.
    FullRank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Montecarlo,
}

/// Outcome of an exact sweep or a Monte-Carlo run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleReport {
    pub q: u32,
    pub m: usize,
    pub delta: Option<f64>,
    pub event: Event,
    pub mode: Mode,
    /// Trials drawn, or pairs swept in exact mode.
    pub trials: u64,
    pub hits: u64,
    pub estimate: f64,
    pub exact: Option<f64>,
    /// `exact` as a reduced fraction.
    pub exact_fraction: Option<String>,
    /// Analytic bound on the reported event: an upper bound for `delta_leq`,
    /// a lower bound for `delta_gt`; not clamped to `[0, 1]`.
    pub bound: Option<f64>,
    /// Trials (or pairs) whose code is `{0}`.
    pub zero_codes: u64,
    /// Trials (or pairs) whose code has dimension `m - 1`.
    pub full_rank: u64,
    pub seed: Option<u64>,
}

impl EnsembleReport {
    pub fn zero_code_fraction(&self) -> f64 {
        self.zero_codes as f64 / self.trials as f64
    }

    pub fn full_rank_fraction(&self) -> f64 {
        self.full_rank as f64 / self.trials as f64
    }

    /// `sqrt(p (1 - p) / n)` at the estimate; zero in exact mode.
    pub fn std_error(&self) -> f64 {
        match self.mode {
            Mode::Exact => 0.0,
            Mode::Montecarlo => (self.estimate * (1.0 - self.estimate) / self.trials as f64).sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    low_weight: u64,
    zero: u64,
    full_rank: u64,
}

impl Tally {
    fn merge(self, o: Self) -> Self {
        Self {
            low_weight: self.low_weight + o.low_weight,
            zero: self.zero + o.zero,
            full_rank: self.full_rank + o.full_rank,
        }
    }
}

fn classify(pair: &RestrictedPair, t: usize, limit: u64) -> Result<Tally> {
    let code = pair.code()?;
    let m = code.m();
    let low = code.find_word_within(t, limit)?.is_some();
    Ok(Tally {
        low_weight: low as u64,
        zero: (code.dim() == 0) as u64,
        full_rank: (code.dim() == m - 1) as u64,
    })
}

fn all_pairs(field: FieldSpec, m: usize, limit: u64) -> Result<Vec<RestrictedPair>> {
    check_coprime(m, field)?;
    check_enum_size(field, 2 * (m - 1), limit)?;
    let left = enumerate_j_plus(field, m, limit)?;
    let right = enumerate_j_m(field, m, limit)?;
    Ok(left
        .iter()
        .flat_map(|a| {
            right.iter().map(move |ap| RestrictedPair {
                a: a.clone(),
                a_prime: ap.clone(),
            })
        })
        .collect())
}

/// Exact `Pr(Δ(C) <= δ)` by sweeping all `p^(2(m-1))` pairs.
pub fn exact_delta_leq_prob(
    field: FieldSpec,
    m: usize,
    delta: f64,
    limit: u64,
) -> Result<EnsembleReport> {
    check_delta(delta)?;
    let pairs = all_pairs(field, m, limit)?;
    let t = threshold_weight(m, delta);
    let tally = pairs
        .par_iter()
        .map(|pr| classify(pr, t, limit))
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))?;
    let total = pairs.len() as u64;
    let exact = ratio(tally.low_weight, total);
    let value = exact.to_f64().unwrap_or(f64::NAN);
    Ok(EnsembleReport {
        q: field.p(),
        m,
        delta: Some(delta),
        event: Event::DeltaLeq,
        mode: Mode::Exact,
        trials: total,
        hits: tally.low_weight,
        estimate: value,
        exact: Some(value),
        exact_fraction: Some(exact.to_string()),
        bound: m_bound(field, m, delta),
        zero_codes: tally.zero,
        full_rank: tally.full_rank,
        seed: None,
    })
}

fn m_bound(field: FieldSpec, m: usize, delta: f64) -> Option<f64> {
    if m < 2 {
        return None;
    }
    delta_prob_bound(field, m, delta).ok()
}

/// Monte-Carlo estimate of `Pr(Δ(C) > δ)`.
pub fn mc_delta_prob(
    field: FieldSpec,
    m: usize,
    delta: f64,
    trials: u64,
    seed: u64,
    limit: u64,
) -> Result<EnsembleReport> {
    check_delta(delta)?;
    if trials == 0 {
        return Err(Error::EmptyTrialSet);
    }
    check_coprime(m, field)?;
    // largest possible dimension is m - 1
    check_enum_size(field, m - 1, limit)?;
    let t = threshold_weight(m, delta);
    let tally = (0..trials)
        .into_par_iter()
        .map(|i| {
            let pair = sample_pair(field, m, &mut trial_rng(seed, i))?;
            classify(&pair, t, limit)
        })
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))?;
    let hits = trials - tally.low_weight;
    Ok(EnsembleReport {
        q: field.p(),
        m,
        delta: Some(delta),
        event: Event::DeltaGt,
        mode: Mode::Montecarlo,
        trials,
        hits,
        estimate: hits as f64 / trials as f64,
        exact: None,
        exact_fraction: None,
        bound: m_bound(field, m, delta).map(|b| 1.0 - b),
        zero_codes: tally.zero,
        full_rank: tally.full_rank,
        seed: Some(seed),
    })
}

/// `Π_j (1 - q^{-2 d_j})` over the nonzero cyclotomic coset sizes `d_j`.
pub fn exact_fullrank_prob(field: FieldSpec, m: usize) -> Result<BigRational> {
    let part = cyclotomic_cosets(m, field)?;
    let q = BigInt::from(field.p());
    Ok(part
        .nonzero_sizes()
        .into_iter()
        .fold(BigRational::one(), |acc, d| {
            let den = num_traits::pow(q.clone(), 2 * d);
            acc * BigRational::new(den.clone() - 1, den)
        }))
}

/// Exhaustive census of `dim C = m - 1` over all pairs.
pub fn exact_fullrank_census(field: FieldSpec, m: usize, limit: u64) -> Result<EnsembleReport> {
    let pairs = all_pairs(field, m, limit)?;
    let (full, zero) = pairs
        .par_iter()
        .map(|pr| {
            let g = crate::qc15::compute_g(&pr.a, &pr.a_prime)?;
            let dim = 2 * m - g.degree().expect("g is nonzero");
            Ok(((dim == m - 1) as u64, (dim == 0) as u64))
        })
        .try_reduce(|| (0, 0), |x, y| Ok((x.0 + y.0, x.1 + y.1)))?;
    let total = pairs.len() as u64;
    let exact = ratio(full, total);
    let value = exact.to_f64().unwrap_or(f64::NAN);
    Ok(EnsembleReport {
        q: field.p(),
        m,
        delta: None,
        event: Event::FullRank,
        mode: Mode::Exact,
        trials: total,
        hits: full,
        estimate: value,
        exact: Some(value),
        exact_fraction: Some(exact.to_string()),
        bound: None,
        zero_codes: zero,
        full_rank: full,
        seed: None,
    })
}

/// Monte-Carlo estimate of `Pr(dim C = m - 1)`; dimensions come from `g`
/// alone, so no enumeration happens.
pub fn mc_fullrank_prob(
    field: FieldSpec,
    m: usize,
    trials: u64,
    seed: u64,
) -> Result<EnsembleReport> {
    if trials == 0 {
        return Err(Error::EmptyTrialSet);
    }
    check_coprime(m, field)?;
    let (full, zero) = (0..trials)
        .into_par_iter()
        .map(|i| {
            let pair = sample_pair(field, m, &mut trial_rng(seed, i))?;
            let g = crate::qc15::compute_g(&pair.a, &pair.a_prime)?;
            let dim = 2 * m - g.degree().expect("g is nonzero");
            Ok(((dim + 1 == m) as u64, (dim == 0) as u64))
        })
        .try_reduce(|| (0, 0), |x, y| Ok((x.0 + y.0, x.1 + y.1)))?;
    let exact = exact_fullrank_prob(field, m)?;
    Ok(EnsembleReport {
        q: field.p(),
        m,
        delta: None,
        event: Event::FullRank,
        mode: Mode::Montecarlo,
        trials,
        hits: full,
        estimate: full as f64 / trials as f64,
        exact: exact.to_f64(),
        exact_fraction: Some(exact.to_string()),
        bound: None,
        zero_codes: zero,
        full_rank: full,
        seed: Some(seed),
    })
}

/// Number of ideals of `R_2m` inside `J+_2m` of each dimension `d`
/// (including the zero ideal at `d = 0`). Ideals correspond to subsets of the
/// irreducible factors of `(X^m - 1)/(X - 1)`, so this counts subsets of the
/// nonzero coset sizes by their sum.
pub fn count_ideals_by_dim(field: FieldSpec, m: usize) -> Result<BTreeMap<usize, u64>> {
    let sizes = cyclotomic_cosets(m, field)?.nonzero_sizes();
    let mut counts = vec![0u64; m];
    counts[0] = 1;
    for s in sizes {
        for d in (s..m).rev() {
            counts[d] += counts[d - s];
        }
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect())
}

/// `m^{d/ℓ_m}`, the bound on the number of `d`-dimensional ideals in `J+_2m`.
pub fn ideal_count_bound(m: usize, ell: usize, d: usize) -> f64 {
    (m as f64).powf(d as f64 / ell as f64)
}

/// Ball count in an ideal next to its entropy bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereCount {
    /// Elements of `<b>` of weight at most `w`, zero included.
    pub exact: u64,
    /// `q^{d_b h_q(w/n)}`.
    pub bound: f64,
    /// Whether `w/n <= 1 - 1/q`, where the bound is claimed to hold.
    pub applies: bool,
}

pub fn sphere_count_check(b: &RingElement, w: usize, limit: u64) -> Result<SphereCount> {
    let n = b.n();
    if w > n {
        return Err(Error::Domain(format!("radius {w} exceeds length {n}")));
    }
    let q = b.field().p();
    let elems = ideal_elements(b, limit)?;
    let d_b = ideal_dim(b);
    let exact = elems.iter().filter(|e| e.weight() <= w).count() as u64;
    let x = w as f64 / n as f64;
    let bound = (q as f64).powf(d_b as f64 * QaryEntropy::new(q)?.eval(x)?);
    Ok(SphereCount {
        exact,
        bound,
        applies: x <= 1.0 - 1.0 / q as f64,
    })
}
