#![allow(dead_code)]

use std::collections::BTreeSet;

use qc15::algebra::{FieldSpec, RingElement};
use qc15::qc15::{build_ahat, shift_xi, Qc15Code, Word};

/// Row space of Âhat, by multiplying every `y` in `F^{2m}` through it.
pub fn ahat_row_space(a: &RingElement, a_prime: &RingElement) -> BTreeSet<Word> {
    let f = a.field();
    let m = a_prime.n();
    let ahat = build_ahat(a, a_prime).unwrap().ahat;
    let p = f.p();
    let mut y = vec![0u32; 2 * m];
    let mut out = BTreeSet::new();
    loop {
        out.insert(Word::new(f, m, ahat.left_mul(&y)).unwrap());
        let Some(j) = y.iter().position(|&c| c + 1 < p) else {
            break;
        };
        y[j] += 1;
        y[..j].iter_mut().for_each(|c| *c = 0);
    }
    out
}

/// The image of `f -> (f a, f a')` over all of `R_2m`.
pub fn image_of_all(code: &Qc15Code) -> BTreeSet<Word> {
    let f = code.field();
    let n = 2 * code.m();
    let p = f.p();
    let mut c = vec![0u32; n];
    let mut out = BTreeSet::new();
    loop {
        out.insert(code.encode(&RingElement::from_raw(f, c.clone())).unwrap());
        let Some(j) = c.iter().position(|&x| x + 1 < p) else {
            break;
        };
        c[j] += 1;
        c[..j].iter_mut().for_each(|x| *x = 0);
    }
    out
}

pub fn shift_closed(words: &BTreeSet<Word>) -> bool {
    words.iter().all(|w| words.contains(&shift_xi(w)))
}

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}
