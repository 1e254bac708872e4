//! Hopf-algebra structure maps: comultiplication, antipode, the circle
//! coaction, and executable checkers for the Hopf axioms.

use std::collections::BTreeMap;

use crate::exactq::RatQ;
use crate::ncalg::{Letter, NCPoly, PbwMonomial};

/// Element of the twofold tensor square; both factors in PBW form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorPoly {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), RatQ>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut t = TensorPoly::zero();
        t.add_term(PbwMonomial::one(), PbwMonomial::one(), &RatQ::one());
        t
    }

    pub fn simple(x: NCPoly, y: NCPoly) -> Self {
        let mut t = TensorPoly::zero();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                t.add_term(*mx, *my, &cx.mul(cy));
            }
        }
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &RatQ)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m1: PbwMonomial, m2: PbwMonomial, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        let key = (m1, m2);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((m1, m2), c) in &other.terms {
            out.add_term(*m1, *m2, c);
        }
        out
    }

    pub fn scale(&self, c: &RatQ) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero();
        }
        TensorPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.mul(c)))
                .collect(),
        }
    }

    /// Componentwise product in the tensor-square algebra, each factor
    /// renormalized to PBW form.
    pub fn mul(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((x1, y1), c1) in &self.terms {
            for ((x2, y2), c2) in &other.terms {
                let left = NCPoly::monomial(*x1, RatQ::one())
                    .mul(&NCPoly::monomial(*x2, RatQ::one()));
                let right = NCPoly::monomial(*y1, RatQ::one())
                    .mul(&NCPoly::monomial(*y2, RatQ::one()));
                let c = c1.mul(c2);
                for (mx, cx) in left.terms() {
                    for (my, cy) in right.terms() {
                        out.add_term(*mx, *my, &c.mul(cx).mul(cy));
                    }
                }
            }
        }
        out
    }
}

fn delta_generator(x: Letter) -> TensorPoly {
    let gen = NCPoly::generator;
    use Letter::*;
    match x {
        // Delta a = a (x) a + b (x) c, etc., from the matrix coproduct
        A => TensorPoly::simple(gen(A), gen(A)).add(&TensorPoly::simple(gen(B), gen(C))),
        B => TensorPoly::simple(gen(A), gen(B)).add(&TensorPoly::simple(gen(B), gen(D))),
        C => TensorPoly::simple(gen(C), gen(A)).add(&TensorPoly::simple(gen(D), gen(C))),
        D => TensorPoly::simple(gen(C), gen(B)).add(&TensorPoly::simple(gen(D), gen(D))),
    }
}

/// Comultiplication: the algebra homomorphism determined by the matrix
/// coproduct on the generators.
pub fn delta(x: &NCPoly) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for (m, c) in x.terms() {
        let mut t = TensorPoly::one();
        for (letter, e) in m.letters() {
            let dg = delta_generator(letter);
            for _ in 0..e {
                t = t.mul(&dg);
            }
        }
        out = out.add(&t.scale(c));
    }
    out
}

/// Antipode: the anti-homomorphism with S(a)=d, S(b)=-qb, S(c)=-q^-1 c,
/// S(d)=a. On a PBW monomial the word is reversed, substituted, and
/// renormalized.
pub fn antipode(x: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (m, c) in x.terms() {
        // S(a^k b^l c^m d^n) = S(d)^n S(c)^m S(b)^l S(a)^k
        //                    = (-1)^(l+m) q^(l-m) a^n c^m b^l d^k
        let scalar = RatQ::q_pow(m.eb as i64 - m.ec as i64);
        let sign = if (m.eb + m.ec) % 2 == 1 {
            RatQ::one().neg()
        } else {
            RatQ::one()
        };
        let word = [
            (Letter::A, m.ed),
            (Letter::C, m.ec),
            (Letter::B, m.eb),
            (Letter::D, m.ea),
        ];
        let coeff = c.mul(&scalar).mul(&sign);
        out = out.add(&crate::ncalg::normalize(&word, coeff));
    }
    out
}

/// The circle coaction, presented as the decomposition of x by
/// z-exponent. Each PBW monomial m lands at exponent zdegree(m).
pub fn coaction(x: &NCPoly) -> BTreeMap<i64, NCPoly> {
    let mut out: BTreeMap<i64, NCPoly> = BTreeMap::new();
    for (m, c) in x.terms() {
        out.entry(m.zdegree())
            .or_insert_with(NCPoly::zero)
            .add_term(*m, c);
    }
    out
}

/// Threefold tensors, used only by the coassociativity check.
#[derive(Debug, Clone, PartialEq, Eq)]
struct TriplePoly {
    terms: BTreeMap<(PbwMonomial, PbwMonomial, PbwMonomial), RatQ>,
}

impl TriplePoly {
    fn zero() -> Self {
        TriplePoly {
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, key: (PbwMonomial, PbwMonomial, PbwMonomial), c: &RatQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }
}

fn delta_left(t: &TensorPoly) -> TriplePoly {
    let mut out = TriplePoly::zero();
    for ((m1, m2), c) in t.terms() {
        let d = delta(&NCPoly::monomial(*m1, RatQ::one()));
        for ((u, v), cu) in d.terms() {
            out.add_term((*u, *v, *m2), &c.mul(cu));
        }
    }
    out
}

fn delta_right(t: &TensorPoly) -> TriplePoly {
    let mut out = TriplePoly::zero();
    for ((m1, m2), c) in t.terms() {
        let d = delta(&NCPoly::monomial(*m2, RatQ::one()));
        for ((u, v), cu) in d.terms() {
            out.add_term((*m1, *u, *v), &c.mul(cu));
        }
    }
    out
}

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every sample.
pub fn check_coassociativity(samples: &[NCPoly]) -> bool {
    samples.iter().all(|x| {
        let d = delta(x);
        delta_left(&d) == delta_right(&d)
    })
}

/// Applying the counit to either tensor leg of Delta(x) returns x.
pub fn check_counit_axiom(samples: &[NCPoly]) -> bool {
    samples.iter().all(|x| {
        let d = delta(x);
        let mut left = NCPoly::zero();
        let mut right = NCPoly::zero();
        for ((m1, m2), c) in d.terms() {
            let e1 = NCPoly::monomial(*m1, RatQ::one()).counit();
            left.add_term(*m2, &c.mul(&e1));
            let e2 = NCPoly::monomial(*m2, RatQ::one()).counit();
            right.add_term(*m1, &c.mul(&e2));
        }
        &left == x && &right == x
    })
}

/// Convolution-inverse axiom: m(S (x) id)Delta(x) = counit(x) 1
/// = m(id (x) S)Delta(x).
pub fn check_antipode_axiom(samples: &[NCPoly]) -> bool {
    samples.iter().all(|x| {
        let d = delta(x);
        let mut left = NCPoly::zero();
        let mut right = NCPoly::zero();
        for ((m1, m2), c) in d.terms() {
            let s1 = antipode(&NCPoly::monomial(*m1, RatQ::one()));
            left = left.add(&s1.mul(&NCPoly::monomial(*m2, RatQ::one())).scale(c));
            let s2 = antipode(&NCPoly::monomial(*m2, RatQ::one()));
            right = right.add(&NCPoly::monomial(*m1, RatQ::one()).mul(&s2).scale(c));
        }
        let want = NCPoly::scalar(x.counit());
        left == want && right == want
    })
}

/// Coaction-grading consistency: coaction(m) is concentrated at
/// z-exponent zdegree(m) for every monomial of x.
pub fn check_coaction_grading(x: &NCPoly) -> bool {
    coaction(x).iter().all(|(e, part)| {
        part.terms().all(|(m, _)| m.zdegree() == *e)
            && *part == x.graded_component(-e)
    })
}
