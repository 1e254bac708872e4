//! Reference rewriter used to cross-check the exponent-block engine in
//! `ncalg`. It works on plain letter sequences, applying one adjacent
//! rewrite at a time at a randomly chosen position, so it exercises
//! arbitrary reduction orders.
//!
//! The intermediate normal order here is b, c first with an a- or d-tail
//! (b^l c^m a^k or b^l c^m d^n); a closed-form commutation converts that
//! to PBW form at the end. Each step either shortens the word (ad/da
//! elimination) or strictly reduces the number of order inversions, so
//! any application order terminates.

use rand::Rng;

use crate::exactq::RatQ;
use crate::ncalg::{Letter, NCPoly, PbwMonomial};

type Word = Vec<Letter>;

enum Step {
    /// Replace the pair at i by the given pair, scaling by q^e.
    Swap([Letter; 2], i64),
    /// Replace the pair at i by 1 + q^e b c.
    Eliminate(i64),
}

fn rule(x: Letter, y: Letter) -> Option<Step> {
    use Letter::*;
    match (x, y) {
        (A, B) => Some(Step::Swap([B, A], -1)),
        (A, C) => Some(Step::Swap([C, A], -1)),
        (C, B) => Some(Step::Swap([B, C], 0)),
        (D, B) => Some(Step::Swap([B, D], 1)),
        (D, C) => Some(Step::Swap([C, D], 1)),
        (A, D) => Some(Step::Eliminate(-1)),
        (D, A) => Some(Step::Eliminate(1)),
        _ => None,
    }
}

fn redexes(w: &Word) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| rule(w[i], w[i + 1]).is_some())
        .collect()
}

/// A word of shape b^l c^m a^k or b^l c^m d^n, converted to PBW form:
/// b^l c^m a^k = q^(k(l+m)) a^k b^l c^m.
fn finish(w: &Word, coeff: &RatQ, out: &mut NCPoly) {
    let l = w.iter().filter(|&&x| x == Letter::B).count() as u32;
    let m = w.iter().filter(|&&x| x == Letter::C).count() as u32;
    let k = w.iter().filter(|&&x| x == Letter::A).count() as u32;
    let n = w.iter().filter(|&&x| x == Letter::D).count() as u32;
    debug_assert!(k == 0 || n == 0);
    let (mono, extra) = if n == 0 {
        (
            PbwMonomial::new(k, l, m, 0).unwrap(),
            RatQ::q_pow(k as i64 * (l + m) as i64),
        )
    } else {
        (PbwMonomial::new(0, l, m, n).unwrap(), RatQ::one())
    };
    out.add_term(mono, &coeff.mul(&extra));
}

/// Normalize a letter sequence by single-step rewriting with randomly
/// chosen redexes.
pub fn normalize_random_order<R: Rng>(word: &[Letter], rng: &mut R) -> NCPoly {
    let mut out = NCPoly::zero();
    let mut work: Vec<(Word, RatQ)> = vec![(word.to_vec(), RatQ::one())];
    while let Some((w, coeff)) = work.pop() {
        let rs = redexes(&w);
        if rs.is_empty() {
            finish(&w, &coeff, &mut out);
            continue;
        }
        let i = rs[rng.gen_range(0..rs.len())];
        match rule(w[i], w[i + 1]).unwrap() {
            Step::Swap([x, y], e) => {
                let mut w2 = w;
                w2[i] = x;
                w2[i + 1] = y;
                work.push((w2, coeff.mul(&RatQ::q_pow(e))));
            }
            Step::Eliminate(e) => {
                let mut dropped = w.clone();
                dropped.drain(i..=i + 1);
                let mut with_bc = w;
                with_bc[i] = Letter::B;
                with_bc[i + 1] = Letter::C;
                work.push((with_bc, coeff.mul(&RatQ::q_pow(e))));
                work.push((dropped, coeff));
            }
        }
    }
    out
}
