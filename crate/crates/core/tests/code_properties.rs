mod common;

use common::{ahat_row_space, gf, image_of_all, shift_closed};
use qc15::algebra::{Poly, RingElement};
use qc15::ensemble::{sample_pair, trial_rng};
use qc15::qc15::{construct_code, DEFAULT_ENUM_LIMIT};
use qc15::Error;

#[test]
fn generator_rows_span_the_ahat_row_space() {
    for (p, m, trials) in [(3, 2, 40), (3, 4, 8), (5, 2, 20), (7, 1, 10)] {
        let f = gf(p);
        for t in 0..trials {
            let mut rng = trial_rng(1000 + p, t);
            let a = RingElement::random(f, 2 * m, &mut rng);
            let ap = RingElement::random(f, m, &mut rng);
            let code = construct_code(&a, &ap).unwrap();
            let words = code.enumerate_codewords(DEFAULT_ENUM_LIMIT).unwrap();
            assert_eq!(words, ahat_row_space(&a, &ap), "a={a} a'={ap}");
            assert_eq!(words.len() as u64, p.pow(code.dim() as u32));
            assert_eq!(code.gen_matrix().rank(), code.dim());
        }
    }
}

#[test]
fn image_equals_enumeration_and_kernel_is_h() {
    let f = gf(3);
    for t in 0..15 {
        let mut rng = trial_rng(5, t);
        let a = RingElement::random(f, 8, &mut rng);
        let ap = RingElement::random(f, 4, &mut rng);
        let code = construct_code(&a, &ap).unwrap();
        let words = code.enumerate_codewords(DEFAULT_ENUM_LIMIT).unwrap();
        assert_eq!(image_of_all(&code), words);
        assert!(shift_closed(&words));
        let h = RingElement::from_poly(8, code.h());
        for k in 0..8 {
            let multiple = h.mul(&RingElement::x_pow(f, 8, k)).unwrap();
            assert!(code.encode(&multiple).unwrap().is_zero());
        }
        assert_eq!(code.g().mul(code.h()), Poly::x_pow_minus_one(f, 8));
    }
}

#[test]
fn min_distance_matches_brute_force() {
    let f = gf(3);
    for t in 0..30 {
        let mut rng = trial_rng(9, t);
        let a = RingElement::random(f, 8, &mut rng);
        let ap = RingElement::random(f, 4, &mut rng);
        let code = construct_code(&a, &ap).unwrap();
        let words = ahat_row_space(&a, &ap);
        let brute = words
            .iter()
            .filter(|w| !w.is_zero())
            .map(|w| w.weight())
            .min();
        match code.min_distance(DEFAULT_ENUM_LIMIT) {
            Ok(d) => {
                assert_eq!(Some(d.d), brute);
                assert_eq!(d.witness.weight(), d.d);
                assert!(words.contains(&d.witness));
            }
            Err(e) => {
                assert_eq!(e, Error::ZeroCode);
                assert_eq!(brute, None);
            }
        }
    }
    // all-ones a and a' give the repetition-like code {c(1..1 | 1..1)}
    for m in [2, 4, 5] {
        let ones = |n: usize| RingElement::from_ints(f, n, &vec![1; n]);
        let code = construct_code(&ones(2 * m), &ones(m)).unwrap();
        assert_eq!(code.dim(), 1);
        assert_eq!(code.min_distance(DEFAULT_ENUM_LIMIT).unwrap().d, 3 * m);
    }
}

#[test]
fn restricted_codes_have_repeated_halves() {
    for (p, m) in [(3, 2), (3, 4), (3, 5), (5, 3)] {
        let f = gf(p);
        for t in 0..20 {
            let pair = sample_pair(f, m, &mut trial_rng(3, t)).unwrap();
            let code = pair.code().unwrap();
            assert!(code.dim() < m);
            for w in code.enumerate_codewords(DEFAULT_ENUM_LIMIT).unwrap() {
                let c = w.coords();
                assert_eq!(c[..m], c[m..2 * m]);
                // every block sums to zero, so no codeword has weight 1
                assert_ne!(w.weight(), 1);
            }
        }
    }
}

#[test]
fn invalid_inputs() {
    assert!(matches!(
        qc15::algebra::FieldSpec::new(4),
        Err(Error::NotOddPrime(4))
    ));
    assert!(matches!(
        qc15::algebra::FieldSpec::new(2),
        Err(Error::NotOddPrime(2))
    ));
    let f = gf(5);
    let e = construct_code(&RingElement::one(f, 10), &RingElement::one(f, 5));
    assert_eq!(e.unwrap_err(), Error::NotCoprime { m: 5, q: 5 });
}
