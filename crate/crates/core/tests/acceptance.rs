//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines come out in order; exits nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use common::{ahat_row_space, gf, shift_closed};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use qc15::algebra::{crt_combine, crt_split, ell_m, poly_gcd, FieldSpec, Poly, RingElement};
use qc15::bounds::{delta_prob_bound, delta_star, entropy_hq, entropy_inv, exb_bound};
use qc15::ensemble::{
    count_ideals_by_dim, enumerate_j_plus, exact_delta_leq_prob, exact_fullrank_census,
    exact_fullrank_prob, exact_xb_expectation, ideal_count_bound, ideal_dim, mc_delta_prob,
    sphere_count_check, trial_rng,
};
use qc15::qc15::{construct_code, shift_xi, Word, DEFAULT_ENUM_LIMIT};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn words(list: &str) -> BTreeSet<Word> {
    list.split_whitespace()
        .map(|s| {
            let c: Vec<u32> = s.bytes().map(|b| (b - b'0') as u32).collect();
            Word::new(gf(3), c.len() / 3, c).unwrap()
        })
        .collect()
}

fn example_one() -> Outcome {
    let f = gf(3);
    let code = construct_code(
        &RingElement::from_ints(f, 4, &[2, 1, 2, 1]),
        &RingElement::from_ints(f, 2, &[1, 1]),
    )
    .map_err(|e| e.to_string())?;
    ensure(
        code.g() == &Poly::from_ints(f, &[1, 0, 1]),
        format!("g = {}", code.g()),
    )?;
    ensure(
        code.h() == &Poly::from_ints(f, &[-1, 0, 1]),
        format!("h = {}", code.h()),
    )?;
    ensure(code.dim() == 2, format!("dim = {}", code.dim()))?;
    ensure(
        code.gen_matrix().rows() == [vec![2, 1, 2, 1, 1, 1], vec![1, 2, 1, 2, 1, 1]],
        "generator matrix differs",
    )?;
    let listed = words("000000 212111 121222 121211 212122 000022 000011 121200 212100");
    ensure(
        code.enumerate_codewords(DEFAULT_ENUM_LIMIT).unwrap() == listed,
        "codeword set differs",
    )?;
    let d = code.min_distance(DEFAULT_ENUM_LIMIT).unwrap().d;
    ensure(d == 2, format!("d = {d}"))?;
    Ok("g=X^2+1, dim 2, 9 codewords, d=2".into())
}

fn example_two() -> Outcome {
    let f = gf(3);
    let code = construct_code(
        &RingElement::from_ints(f, 4, &[2, 1]),
        &RingElement::from_ints(f, 2, &[2, 1]),
    )
    .map_err(|e| e.to_string())?;
    ensure(
        code.g() == &Poly::from_ints(f, &[-1, 1]),
        format!("g = {}", code.g()),
    )?;
    let h = Poly::from_ints(f, &[1, 0, 1]).mul(&Poly::from_ints(f, &[1, 1]));
    ensure(code.h() == &h, format!("h = {}", code.h()))?;
    ensure(code.dim() == 3, format!("dim = {}", code.dim()))?;
    ensure(
        code.gen_matrix().rows()
            == [
                vec![2, 1, 0, 0, 2, 1],
                vec![0, 2, 1, 0, 1, 2],
                vec![0, 0, 2, 1, 2, 1],
            ],
        "generator matrix differs",
    )?;
    let listed = words(
        "000000 002121 001212 021012 020100 022221 012021 \
         011112 010200 210021 212112 211200 201000 200121 \
         202212 222012 221100 220221 120012 122100 121221 \
         111021 110112 112200 102000 101121 100212",
    );
    ensure(
        code.enumerate_codewords(DEFAULT_ENUM_LIMIT).unwrap() == listed,
        "codeword set differs",
    )?;
    Ok("g=X-1, dim 3, 27 codewords".into())
}

fn threshold_constant() -> Outcome {
    let d = delta_star(3).map_err(|e| e.to_string())?;
    ensure(0.106 < d && d < 0.107, format!("delta_star(3) = {d}"))?;
    Ok(format!("delta_star(3) = {d:.6}"))
}

fn fullrank_exact() -> Outcome {
    let f = gf(3);
    let mut parts = Vec::new();
    for (m, want) in [(2, (8, 9)), (4, (640, 729))] {
        let census = exact_fullrank_census(f, m, DEFAULT_ENUM_LIMIT).map_err(|e| e.to_string())?;
        let swept = BigRational::new(census.hits.into(), census.trials.into());
        let formula = exact_fullrank_prob(f, m).unwrap();
        let want = BigRational::new(want.0.into(), want.1.into());
        ensure(
            swept == formula && formula == want,
            format!("m={m}: sweep {swept}, product {formula}"),
        )?;
        parts.push(format!("m={m}: {swept} over {} pairs", census.trials));
    }
    Ok(parts.join("; "))
}

fn xb_lemma() -> Outcome {
    let f = gf(3);
    let mut checked = 0;
    let mut tightest = f64::INFINITY;
    for m in [2, 4] {
        for b in enumerate_j_plus(f, m, DEFAULT_ENUM_LIMIT).unwrap() {
            for delta in [0.1, 0.2, 0.3] {
                let e = exact_xb_expectation(&b, delta, DEFAULT_ENUM_LIMIT)
                    .map_err(|e| e.to_string())?;
                let bound = exb_bound(3, ideal_dim(&b), m, delta).unwrap();
                let e = e.to_f64().unwrap();
                ensure(
                    e <= bound + 1e-12,
                    format!("m={m} b={b} delta={delta}: E={e} > {bound}"),
                )?;
                tightest = tightest.min(bound - e);
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (b, m, delta) cases, min slack {tightest:.4}"
    ))
}

fn delta_lemma() -> Outcome {
    let f = gf(3);
    let mut parts = Vec::new();
    for delta in [0.05, 0.1] {
        let r = exact_delta_leq_prob(f, 4, delta, DEFAULT_ENUM_LIMIT).map_err(|e| e.to_string())?;
        let bound = delta_prob_bound(f, 4, delta).unwrap();
        let exact = r.exact.unwrap();
        ensure(exact <= bound, format!("delta={delta}: {exact} > {bound}"))?;
        parts.push(format!("delta={delta}: {exact} <= {bound:.4}"));
    }
    Ok(parts.join("; "))
}

fn ideal_counts() -> Outcome {
    let mut checked = 0;
    for p in [3u64, 5] {
        let f = gf(p);
        for m in 2..=30usize {
            if (m as u64).is_multiple_of(p) {
                continue;
            }
            let ell = ell_m(m, f).unwrap();
            let counts: BTreeMap<usize, u64> = count_ideals_by_dim(f, m).unwrap();
            for (&d, &c) in &counts {
                if d == 0 {
                    continue;
                }
                ensure(
                    d >= ell,
                    format!("q={p} m={m}: ideal of dim {d} < ell {ell}"),
                )?;
                let bound = ideal_count_bound(m, ell, d);
                ensure(
                    c as f64 <= bound,
                    format!("q={p} m={m} d={d}: {c} > {bound}"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (q, m, d) counts within m^(d/ell)"))
}

fn asymptotic_trend() -> Outcome {
    let f = gf(3);
    let delta = 0.106;
    let seed = 42;
    let trials = 2000;
    let mut rows = Vec::new();
    for m in [5, 7, 11, 13] {
        let r = mc_delta_prob(f, m, delta, trials, seed, DEFAULT_ENUM_LIMIT)
            .map_err(|e| e.to_string())?;
        rows.push(r);
    }
    let summary: Vec<String> = rows
        .iter()
        .map(|r| format!("m={}: {:.4}", r.m, r.estimate))
        .collect();
    for w in rows.windows(2) {
        let slack = 2.0 * (w[0].std_error().powi(2) + w[1].std_error().powi(2)).sqrt();
        ensure(
            w[1].estimate >= w[0].estimate - slack,
            format!(
                "drop from m={} to m={}: {}",
                w[0].m,
                w[1].m,
                summary.join(", ")
            ),
        )?;
    }
    let last = rows.last().unwrap();
    ensure(
        last.estimate >= 0.9,
        format!("m=13 estimate {}", last.estimate),
    )?;
    let exact = exact_fullrank_prob(f, 13).unwrap().to_f64().unwrap();
    let se = (exact * (1.0 - exact) / trials as f64).sqrt();
    let frac = last.full_rank_fraction();
    ensure(
        frac >= exact - 3.0 * se,
        format!("full-rank fraction {frac} below {exact} - 3 SE"),
    )?;
    Ok(format!(
        "Pr(Delta > 0.106): {}; m=13 rate 12/39 = {:.4}, full-rank {frac:.4} vs exact {exact:.4}",
        summary.join(", "),
        12.0 / 39.0
    ))
}

fn oracle_equivalence() -> Outcome {
    let f = gf(3);
    let mut total = 0;
    for (m, count) in [(2, 50), (4, 10)] {
        for t in 0..count {
            let mut rng = trial_rng(2718, (m * 1000 + t) as u64);
            let a = RingElement::random(f, 2 * m, &mut rng);
            let ap = RingElement::random(f, m, &mut rng);
            let code = construct_code(&a, &ap).map_err(|e| e.to_string())?;
            let from_g = code.enumerate_codewords(DEFAULT_ENUM_LIMIT).unwrap();
            ensure(
                from_g == ahat_row_space(&a, &ap),
                format!("m={m}, a={a}, a'={ap}: sets differ"),
            )?;
            total += 1;
        }
    }
    Ok(format!("{total} random codes match their Ahat row space"))
}

/// Generator `gcd(b, X^n - 1)` of every ideal of `R_n`.
fn all_ideal_generators(f: FieldSpec, n: usize) -> Vec<RingElement> {
    let modulus = Poly::x_pow_minus_one(f, n);
    let p = f.p() as u64;
    let mut seen = BTreeSet::new();
    for idx in 0..p.pow(n as u32) {
        let mut i = idx;
        let c: Vec<u32> = (0..n)
            .map(|_| {
                let d = (i % p) as u32;
                i /= p;
                d
            })
            .collect();
        let g = poly_gcd(&Poly::from_raw(f, c), &modulus);
        seen.insert(g.coeffs().to_vec());
    }
    seen.into_iter()
        .map(|c| RingElement::from_poly(n, &Poly::from_raw(f, c)))
        .collect()
}

fn property_suites() -> Outcome {
    let f = gf(3);
    // shift closure
    for t in 0..20u64 {
        let mut rng = trial_rng(31, t);
        let m = if t % 2 == 0 { 2 } else { 4 };
        let a = RingElement::random(f, 2 * m, &mut rng);
        let ap = RingElement::random(f, m, &mut rng);
        let words = construct_code(&a, &ap)
            .unwrap()
            .enumerate_codewords(DEFAULT_ENUM_LIMIT)
            .unwrap();
        ensure(
            shift_closed(&words),
            format!("a={a} a'={ap} not shift-closed"),
        )?;
        ensure(
            words.iter().all(|w| shift_xi(w).weight() == w.weight()),
            "shift changed a weight",
        )?;
    }
    // CRT roundtrip over all of R_8
    for idx in 0..3u32.pow(8) {
        let c: Vec<u32> = (0..8).map(|k| idx / 3u32.pow(k) % 3).collect();
        let x = RingElement::from_raw(f, c);
        let (u, v) = crt_split(&x);
        ensure(
            crt_combine(&u, &v).unwrap() == x,
            format!("CRT roundtrip failed at {x}"),
        )?;
    }
    // gcd axioms
    for t in 0..500u64 {
        let mut rng = trial_rng(32, t);
        let a = RingElement::random(f, 7, &mut rng).to_poly();
        let b = RingElement::random(f, 5, &mut rng).to_poly();
        let g = poly_gcd(&a, &b);
        ensure(g == poly_gcd(&b, &a), "gcd not symmetric")?;
        if a.is_zero() && b.is_zero() {
            continue;
        }
        ensure(
            g.is_monic() && g.divides(&a) && g.divides(&b),
            format!("gcd({a}, {b}) = {g}"),
        )?;
    }
    // entropy roundtrip
    for q in [3u32, 5, 7] {
        for i in 0..=1000 {
            let y = i as f64 / 1000.0;
            let x = entropy_inv(q, y).unwrap();
            let err = (entropy_hq(q, x).unwrap() - y).abs();
            ensure(err <= 1e-9, format!("q={q} y={y}: error {err}"))?;
        }
    }
    // sphere counts on every ideal of R_4 and R_8
    let mut spheres = 0;
    for n in [4, 8] {
        for b in all_ideal_generators(f, n) {
            for w in 0..=n {
                let s = sphere_count_check(&b, w, DEFAULT_ENUM_LIMIT).unwrap();
                if s.applies {
                    ensure(
                        s.exact as f64 <= s.bound * (1.0 + 1e-12),
                        format!("n={n} b={b} w={w}: {} > {}", s.exact, s.bound),
                    )?;
                    spheres += 1;
                }
            }
        }
    }
    Ok(format!(
        "shift, CRT, gcd, entropy suites clean; {spheres} sphere counts within bound"
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "first worked example",
            budget: Duration::from_secs(1),
            run: example_one,
        },
        Criterion {
            id: 2,
            name: "second worked example",
            budget: Duration::from_secs(1),
            run: example_two,
        },
        Criterion {
            id: 3,
            name: "threshold constant",
            budget: Duration::from_secs(1),
            run: threshold_constant,
        },
        Criterion {
            id: 4,
            name: "exact full-rank probability",
            budget: Duration::from_secs(5),
            run: fullrank_exact,
        },
        Criterion {
            id: 5,
            name: "E(X_b) bound",
            budget: Duration::from_secs(30),
            run: xb_lemma,
        },
        Criterion {
            id: 6,
            name: "Pr(Delta <= delta) bound",
            budget: Duration::from_secs(30),
            run: delta_lemma,
        },
        Criterion {
            id: 7,
            name: "ideal-count bound",
            budget: Duration::from_secs(5),
            run: ideal_counts,
        },
        Criterion {
            id: 8,
            name: "asymptotic trend",
            budget: Duration::from_secs(600),
            run: asymptotic_trend,
        },
        Criterion {
            id: 9,
            name: "Ahat oracle equivalence",
            budget: Duration::from_secs(60),
            run: oracle_equivalence,
        },
        Criterion {
            id: 10,
            name: "property suites",
            budget: Duration::from_secs(60),
            run: property_suites,
        },
    ];
    let only: Option<u32> = std::env::var("QC15_CRITERION")
        .ok()
        .and_then(|s| s.parse().ok());
    let mut failed = 0;
    for c in criteria.iter().filter(|c| only.is_none_or(|k| k == c.id)) {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > c.budget => Err(format!("{d}; over time budget {:?}", c.budget)),
            o => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "criterion {:>2} {tag} {} [{:.2?}]: {detail}",
            c.id, c.name, elapsed
        );
        failed += outcome.is_err() as u32;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
