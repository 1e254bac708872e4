//! Seeded random generation of words, monomials and algebra elements,
//! shared by the verification suites and the tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::exactq::RatQ;
use crate::ncalg::{Letter, NCPoly, PbwMonomial};

pub fn random_letter<R: Rng>(rng: &mut R) -> Letter {
    Letter::ALL[rng.gen_range(0..4)]
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_letter(rng)).collect()
}

/// Small coefficient: an integer in [-3, 3] \ {0} times q^e, e in [-2, 2].
pub fn random_coeff<R: Rng>(rng: &mut R) -> RatQ {
    let mut n = 0i64;
    while n == 0 {
        n = rng.gen_range(-3..=3);
    }
    RatQ::from_int(n).mul(&RatQ::q_pow(rng.gen_range(-2..=2)))
}

pub fn random_monomial<R: Rng>(rng: &mut R, max_deg: u32) -> PbwMonomial {
    loop {
        let ea = rng.gen_range(0..=max_deg);
        let eb = rng.gen_range(0..=max_deg.saturating_sub(ea));
        let ec = rng.gen_range(0..=max_deg.saturating_sub(ea + eb));
        let ed = if ea > 0 {
            0
        } else {
            rng.gen_range(0..=max_deg.saturating_sub(eb + ec))
        };
        if let Some(m) = PbwMonomial::new(ea, eb, ec, ed) {
            return m;
        }
    }
}

/// Random element as a short combination of random PBW monomials.
pub fn random_element<R: Rng>(rng: &mut R, max_deg: u32, max_terms: usize) -> NCPoly {
    let mut out = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.add_term(random_monomial(rng, max_deg), &random_coeff(rng));
    }
    out
}

/// Random coinvariant monomial (z-degree zero): either a zeta-type
/// monomial b^n c^n, or one of the a- or d-families with balanced
/// exponents.
pub fn random_coinvariant_monomial<R: Rng>(rng: &mut R, max_deg: u32) -> PbwMonomial {
    let half = max_deg / 2;
    match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(0..=half);
            PbwMonomial::new(0, n, n, 0).unwrap()
        }
        1 => {
            // a^k b^(k+m) c^m
            let k = rng.gen_range(0..=half.min(max_deg / 3 + 1));
            let m = rng.gen_range(0..=half.saturating_sub(k));
            PbwMonomial::new(k, k + m, m, 0).unwrap()
        }
        _ => {
            // b^l c^(l+n) d^n
            let n = rng.gen_range(0..=half.min(max_deg / 3 + 1));
            let l = rng.gen_range(0..=half.saturating_sub(n));
            PbwMonomial::new(0, l, l + n, n).unwrap()
        }
    }
}

pub fn random_coinvariant<R: Rng>(rng: &mut R, max_deg: u32, max_terms: usize) -> NCPoly {
    let mut out = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.add_term(random_coinvariant_monomial(rng, max_deg), &random_coeff(rng));
    }
    out
}

/// Random rational q0 avoiding 0 and +-1, for evaluation tests.
pub fn random_q0<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let n = rng.gen_range(-9i64..=9);
        let d = rng.gen_range(1i64..=9);
        if n == 0 || n.abs() == d {
            continue;
        }
        return BigRational::new(BigInt::from(n), BigInt::from(d));
    }
}

/// Random rational function of modest degree, for field-axiom tests.
pub fn random_ratq<R: Rng>(rng: &mut R, max_deg: i64) -> RatQ {
    let mut num = RatQ::zero();
    for _ in 0..rng.gen_range(1..=3) {
        num = num.add(&RatQ::from_int(rng.gen_range(-4..=4)).mul(&RatQ::q_pow(rng.gen_range(0..=max_deg))));
    }
    let mut den = RatQ::zero();
    while den.is_zero() {
        den = RatQ::zero();
        for _ in 0..rng.gen_range(1..=3) {
            den = den.add(
                &RatQ::from_int(rng.gen_range(-4..=4)).mul(&RatQ::q_pow(rng.gen_range(0..=max_deg))),
            );
        }
    }
    num.div(&den).unwrap()
}
