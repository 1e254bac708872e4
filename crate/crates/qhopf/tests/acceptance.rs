//! Acceptance suite. Each test covers one acceptance criterion and
//! prints a single pass/fail line; run with `--nocapture` to see them.

use std::process::Command;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qhopf::bundles::{
    build_e, build_f, chern_pairing, closed_form_pairing, closed_form_trace, mat_trace,
    numeric_check, tau0, tau1, Sign,
};
use qhopf::exactq::RatQ;
use qhopf::hopf::{
    check_antipode_axiom, check_coaction_grading, check_coassociativity, check_counit_axiom,
};
use qhopf::ncalg::{Letter, NCPoly, PbwMonomial};
use qhopf::refrewrite::normalize_random_order;
use qhopf::sample;

fn report(n: u32, what: &str, ok: bool) {
    println!(
        "acceptance {n}: {what} ... {}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {n} failed: {what}");
}

#[test]
fn criterion_01_idempotency() {
    let ok = (-6..=6).all(|mu| build_e(mu).is_idempotent() && build_f(mu).is_idempotent());
    report(1, "e_mu and f_mu idempotent for |mu| <= 6", ok);
}

#[test]
fn criterion_02_chern_pairing_e() {
    let ok = (-6..=6).all(|mu| {
        tau1(&mat_trace(&build_e(mu))).unwrap() == RatQ::from_int(mu)
    });
    report(2, "tau1(Tr(e_mu)) = mu for |mu| <= 6", ok);
}

#[test]
fn criterion_03_chern_pairing_f() {
    let ok = (-6..=6).all(|mu| {
        tau1(&mat_trace(&build_f(mu))).unwrap() == RatQ::from_int(-mu)
    });
    report(3, "tau1(Tr(f_mu)) = -mu for |mu| <= 6", ok);
}

#[test]
fn criterion_04_rank_pairing() {
    let ok = (-6..=6).all(|mu| tau0(&mat_trace(&build_e(mu))).unwrap() == RatQ::one());
    report(4, "tau0(Tr(e_mu)) = 1 for |mu| <= 6", ok);
}

#[test]
fn criterion_05_per_degree_terms() {
    let neg = chern_pairing(&build_e(-2)).unwrap();
    let pos = chern_pairing(&build_e(2)).unwrap();
    let ok = neg.per_degree_terms[&1] == RatQ::from_int(-1).sub(&RatQ::q_pow(-2))
        && neg.per_degree_terms[&2] == RatQ::from_int(-1).add(&RatQ::q_pow(-2))
        && pos.per_degree_terms[&1] == RatQ::one().add(&RatQ::q_pow(2))
        && pos.per_degree_terms[&2] == RatQ::one().sub(&RatQ::q_pow(2))
        && neg.chern_pairing == -2
        && pos.chern_pairing == 2;
    report(5, "per-degree terms of the mu = +/-2 pairings", ok);
}

#[test]
fn criterion_06_closed_forms() {
    let traces = (-6..=6).all(|mu| closed_form_trace(mu) == mat_trace(&build_e(mu)));
    let pairings = (1..=4u32).all(|n| {
        closed_form_pairing(n, Sign::Negative) == RatQ::from_int(-(n as i64))
            && closed_form_pairing(n, Sign::Positive) == RatQ::from_int(n as i64)
    });
    report(6, "closed-form traces and pairings collapse exactly", traces && pairings);
}

#[test]
fn criterion_07_hopf_axioms() {
    let mut samples: Vec<NCPoly> = Letter::ALL.iter().map(|&l| NCPoly::generator(l)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    for _ in 0..100 {
        samples.push(sample::random_element(&mut rng, 3, 3));
    }
    let mut ok = check_coassociativity(&samples)
        && check_counit_axiom(&samples)
        && check_antipode_axiom(&samples);
    for ea in 0..=5u32 {
        for eb in 0..=5 - ea {
            for ec in 0..=5 - ea - eb {
                for ed in 0..=5 - ea - eb - ec {
                    if let Some(m) = PbwMonomial::new(ea, eb, ec, ed) {
                        ok &= check_coaction_grading(&NCPoly::monomial(m, RatQ::one()));
                    }
                }
            }
        }
    }
    report(7, "coassociativity, counit, antipode, coaction grading", ok);
}

#[test]
fn criterion_08_rewriting() {
    let mut rng = ChaCha8Rng::seed_from_u64(2027);
    let mut ok = true;
    for _ in 0..500 {
        let x = sample::random_element(&mut rng, 4, 2);
        let y = sample::random_element(&mut rng, 4, 2);
        let z = sample::random_element(&mut rng, 4, 2);
        ok &= x.mul(&y).mul(&z) == x.mul(&y.mul(&z));
    }
    for _ in 0..500 {
        let word = sample::random_word(&mut rng, 8);
        let via_blocks = qhopf::ncalg::normalize_letters(&word);
        let via_random_order = normalize_random_order(&word, &mut rng);
        ok &= via_blocks == via_random_order;
    }
    report(8, "500 associativity and 500 confluence cases", ok);
}

#[test]
fn criterion_09_numeric() {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut ok = true;
    for q0 in [half, two] {
        for mu in -4..=4 {
            let r = numeric_check(&build_e(mu), &q0).unwrap();
            ok &= r.exact_residual.is_zero()
                && r.float_residual < 1e-9
                && r.pairing_matches()
                && r.symbolic_pairing == mu;
        }
    }
    report(9, "numeric cross-check at q0 = 1/2 and 2", ok);
}

#[test]
fn criterion_10_verify_report() {
    let bin = env!("CARGO_BIN_EXE_qhopf");
    let run = || {
        Command::new(bin)
            .args(["verify", "--mu-range", "-4..4", "--format", "json"])
            .output()
            .expect("spawn qhopf")
    };
    let out1 = run();
    let out2 = run();
    let mut ok = out1.status.success() && out1.stdout == out2.stdout;
    let report_json: serde_json::Value =
        serde_json::from_slice(&out1.stdout).expect("verify emits JSON");
    let pairs: Vec<(i64, i64)> = report_json["observed_pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_i64().unwrap(), p[1].as_i64().unwrap()))
        .collect();
    let expected: Vec<(i64, i64)> = (-4..=4).map(|mu| (1, mu)).collect();
    ok &= pairs == expected;
    report(10, "verify pairing table (1, mu) and reproducibility", ok);
}
