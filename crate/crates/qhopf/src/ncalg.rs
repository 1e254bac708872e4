//! The coordinate ring of the quantum group SL_q(2): PBW monomials,
//! the rewriting engine normalizing words in the generators a, b, c, d,
//! the integer grading induced by the circle coaction, and the counit.
//!
//! Defining relations (with the orientation used by the rewriter):
//!   ba -> q ab,  ca -> q ac,  db -> q bd,  cb -> bc,  dc -> q cd,
//!   ad -> 1 + q^-1 bc,  da -> 1 + q bc.
//! Normal forms are the ordered monomials a^k b^l c^m d^n with k = 0 or
//! n = 0 (the PBW basis: no monomial contains both a and d).

use std::collections::BTreeMap;
use std::fmt;

use crate::exactq::RatQ;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    pub fn symbol(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }
}

/// An ordered monomial a^ea b^eb c^ec d^ed with ea = 0 or ed = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub ea: u32,
    pub eb: u32,
    pub ec: u32,
    pub ed: u32,
}

impl PbwMonomial {
    pub fn new(ea: u32, eb: u32, ec: u32, ed: u32) -> Option<Self> {
        if ea > 0 && ed > 0 {
            return None;
        }
        Some(PbwMonomial { ea, eb, ec, ed })
    }

    pub fn one() -> Self {
        PbwMonomial {
            ea: 0,
            eb: 0,
            ec: 0,
            ed: 0,
        }
    }

    pub fn is_one(&self) -> bool {
        self.ea == 0 && self.eb == 0 && self.ec == 0 && self.ed == 0
    }

    pub fn total_degree(&self) -> u32 {
        self.ea + self.eb + self.ec + self.ed
    }

    /// z-exponent under the circle coaction: a, c carry +1; b, d carry -1.
    pub fn zdegree(&self) -> i64 {
        self.ea as i64 - self.eb as i64 + self.ec as i64 - self.ed as i64
    }

    /// The monomial as a word, in PBW order.
    pub fn letters(&self) -> Vec<(Letter, u32)> {
        let mut w = Vec::new();
        if self.ea > 0 {
            w.push((Letter::A, self.ea));
        }
        if self.eb > 0 {
            w.push((Letter::B, self.eb));
        }
        if self.ec > 0 {
            w.push((Letter::C, self.ec));
        }
        if self.ed > 0 {
            w.push((Letter::D, self.ed));
        }
        w
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (letter, e) in [
            ('a', self.ea),
            ('b', self.eb),
            ('c', self.ec),
            ('d', self.ed),
        ] {
            if e == 1 {
                parts.push(format!("{letter}"));
            } else if e > 1 {
                parts.push(format!("{letter}^{e}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Element of the coordinate ring: finite Q(q)-linear combination of PBW
/// monomials. No zero coefficients are stored, so equality of values is
/// structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<PbwMonomial, RatQ>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        NCPoly::monomial(PbwMonomial::one(), RatQ::one())
    }

    pub fn monomial(m: PbwMonomial, c: RatQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        NCPoly { terms }
    }

    pub fn generator(x: Letter) -> Self {
        let m = match x {
            Letter::A => PbwMonomial::new(1, 0, 0, 0),
            Letter::B => PbwMonomial::new(0, 1, 0, 0),
            Letter::C => PbwMonomial::new(0, 0, 1, 0),
            Letter::D => PbwMonomial::new(0, 0, 0, 1),
        };
        NCPoly::monomial(m.unwrap(), RatQ::one())
    }

    pub fn scalar(c: RatQ) -> Self {
        NCPoly::monomial(PbwMonomial::one(), c)
    }

    /// zeta = -q^-1 b c, the degree-zero coordinate of the quantum sphere.
    pub fn zeta() -> Self {
        NCPoly::monomial(
            PbwMonomial::new(0, 1, 1, 0).unwrap(),
            RatQ::q_pow(-1).neg(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &RatQ)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> RatQ {
        self.terms.get(m).cloned().unwrap_or_else(RatQ::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatQ) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect(),
        }
    }

    /// Right multiplication of a PBW monomial by a single generator,
    /// yielding at most two normalized terms. The q-power bookkeeping is
    /// done in closed form on exponent blocks.
    fn mono_mul_letter(m: PbwMonomial, x: Letter) -> Vec<(PbwMonomial, RatQ)> {
        let PbwMonomial { ea, eb, ec, ed } = m;
        match x {
            Letter::A => {
                if ed == 0 {
                    // b^l c^m a = q^(l+m) a b^l c^m
                    vec![(
                        PbwMonomial::new(ea + 1, eb, ec, 0).unwrap(),
                        RatQ::q_pow((eb + ec) as i64),
                    )]
                } else {
                    // d^n a = d^(n-1) + q^(2n-1) b c d^(n-1)
                    debug_assert_eq!(ea, 0);
                    vec![
                        (PbwMonomial::new(0, eb, ec, ed - 1).unwrap(), RatQ::one()),
                        (
                            PbwMonomial::new(0, eb + 1, ec + 1, ed - 1).unwrap(),
                            RatQ::q_pow(2 * ed as i64 - 1),
                        ),
                    ]
                }
            }
            Letter::B => {
                if ed == 0 {
                    vec![(PbwMonomial::new(ea, eb + 1, ec, 0).unwrap(), RatQ::one())]
                } else {
                    // d^n b = q^n b d^n
                    vec![(
                        PbwMonomial::new(0, eb + 1, ec, ed).unwrap(),
                        RatQ::q_pow(ed as i64),
                    )]
                }
            }
            Letter::C => {
                if ed == 0 {
                    vec![(PbwMonomial::new(ea, eb, ec + 1, 0).unwrap(), RatQ::one())]
                } else {
                    // d^n c = q^n c d^n
                    vec![(
                        PbwMonomial::new(0, eb, ec + 1, ed).unwrap(),
                        RatQ::q_pow(ed as i64),
                    )]
                }
            }
            Letter::D => {
                if ea == 0 {
                    vec![(PbwMonomial::new(0, eb, ec, ed + 1).unwrap(), RatQ::one())]
                } else {
                    // a^k b^l c^m d
                    //   = q^-(l+m) a^(k-1) b^l c^m (a d)
                    //   = q^-(l+m) (a^(k-1) b^l c^m + q^-1 a^(k-1) b^(l+1) c^(m+1))
                    let shift = RatQ::q_pow(-((eb + ec) as i64));
                    vec![
                        (PbwMonomial::new(ea - 1, eb, ec, 0).unwrap(), shift.clone()),
                        (
                            PbwMonomial::new(ea - 1, eb + 1, ec + 1, 0).unwrap(),
                            shift.mul(&RatQ::q_pow(-1)),
                        ),
                    ]
                }
            }
        }
    }

    /// Right multiplication by x^e.
    pub fn mul_letter(&self, x: Letter, e: u32) -> NCPoly {
        let mut acc = self.clone();
        for _ in 0..e {
            let mut next = NCPoly::zero();
            for (m, c) in &acc.terms {
                for (m2, c2) in Self::mono_mul_letter(*m, x) {
                    next.add_term(m2, &c.mul(&c2));
                }
            }
            acc = next;
        }
        acc
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (m2, c2) in &other.terms {
            let mut part = self.scale(c2);
            for (letter, e) in m2.letters() {
                part = part.mul_letter(letter, e);
            }
            out = out.add(&part);
        }
        out
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The sub-sum of terms lying in the graded component P_mu, i.e. the
    /// terms whose monomials sit at z-exponent -mu.
    pub fn graded_component(&self, mu: i64) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.zdegree() == -mu)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The set of mu with nonzero graded component.
    pub fn support_degrees(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|m| -m.zdegree()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// True iff the element lies in the coordinate ring of the quantum
    /// sphere (every term has z-degree zero).
    pub fn is_coinvariant(&self) -> bool {
        self.terms.keys().all(|m| m.zdegree() == 0)
    }

    /// Counit: the algebra map with a, d -> 1 and b, c -> 0. On a PBW
    /// monomial this is 1 exactly when no b or c occurs.
    pub fn counit(&self) -> RatQ {
        let mut out = RatQ::zero();
        for (m, c) in &self.terms {
            if m.eb == 0 && m.ec == 0 {
                out = out.add(c);
            }
        }
        out
    }

    pub fn rendered(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let coeff = c.coeff_string(true);
            let (neg, coeff_abs) = match coeff.strip_prefix('-') {
                Some(rest) if !rest.starts_with('(') => (true, rest.to_string()),
                _ => (false, coeff),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&coeff_abs);
            } else if coeff_abs == "1" {
                out.push_str(&format!("{m}"));
            } else {
                out.push_str(&format!("{coeff_abs}*{m}"));
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rendered())
    }
}

/// Normalize a word given as exponent blocks, scaled by a coefficient.
pub fn normalize(word: &[(Letter, u32)], coeff: RatQ) -> NCPoly {
    let mut acc = NCPoly::scalar(coeff);
    for (letter, e) in word {
        acc = acc.mul_letter(*letter, *e);
    }
    acc
}

/// Normalize a plain letter sequence with coefficient 1.
pub fn normalize_letters(word: &[Letter]) -> NCPoly {
    let mut acc = NCPoly::one();
    for x in word {
        acc = acc.mul_letter(*x, 1);
    }
    acc
}
