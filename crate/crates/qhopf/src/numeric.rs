//! Numeric specialization of the algebra at a concrete rational q.
//!
//! The relations are re-run with numeric q-powers, so identities like
//! idempotency are recomputed from scratch at q = q0 rather than read
//! off the symbolic result.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bundles::{BundleError, ProjMatrix};
use crate::ncalg::{Letter, PbwMonomial};

pub trait Scalar: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// q0^e for any integer e.
    fn q_pow(q0: &Self, e: i64) -> Self;
    fn abs_value(&self) -> Self;
    fn greater(&self, other: &Self) -> bool;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn q_pow(q0: &Self, e: i64) -> Self {
        let mut acc = <BigRational as One>::one();
        let base = if e >= 0 {
            q0.clone()
        } else {
            q0.recip()
        };
        for _ in 0..e.unsigned_abs() {
            acc *= &base;
        }
        acc
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
    fn greater(&self, other: &Self) -> bool {
        self > other
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn q_pow(q0: &Self, e: i64) -> Self {
        q0.powi(e as i32)
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
    fn greater(&self, other: &Self) -> bool {
        self > other
    }
}

/// Element of the algebra at fixed numeric q: PBW monomials with
/// numeric coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct NumPoly<T: Scalar> {
    terms: BTreeMap<PbwMonomial, T>,
}

impl<T: Scalar> NumPoly<T> {
    pub fn zero() -> Self {
        NumPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &T)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: &T) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        NumPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    fn mono_mul_letter(q0: &T, m: PbwMonomial, x: Letter) -> Vec<(PbwMonomial, T)> {
        let PbwMonomial { ea, eb, ec, ed } = m;
        match x {
            Letter::A => {
                if ed == 0 {
                    vec![(
                        PbwMonomial::new(ea + 1, eb, ec, 0).unwrap(),
                        T::q_pow(q0, (eb + ec) as i64),
                    )]
                } else {
                    vec![
                        (PbwMonomial::new(0, eb, ec, ed - 1).unwrap(), T::one()),
                        (
                            PbwMonomial::new(0, eb + 1, ec + 1, ed - 1).unwrap(),
                            T::q_pow(q0, 2 * ed as i64 - 1),
                        ),
                    ]
                }
            }
            Letter::B => {
                if ed == 0 {
                    vec![(PbwMonomial::new(ea, eb + 1, ec, 0).unwrap(), T::one())]
                } else {
                    vec![(
                        PbwMonomial::new(0, eb + 1, ec, ed).unwrap(),
                        T::q_pow(q0, ed as i64),
                    )]
                }
            }
            Letter::C => {
                if ed == 0 {
                    vec![(PbwMonomial::new(ea, eb, ec + 1, 0).unwrap(), T::one())]
                } else {
                    vec![(
                        PbwMonomial::new(0, eb, ec + 1, ed).unwrap(),
                        T::q_pow(q0, ed as i64),
                    )]
                }
            }
            Letter::D => {
                if ea == 0 {
                    vec![(PbwMonomial::new(0, eb, ec, ed + 1).unwrap(), T::one())]
                } else {
                    let shift = T::q_pow(q0, -((eb + ec) as i64));
                    vec![
                        (PbwMonomial::new(ea - 1, eb, ec, 0).unwrap(), shift.clone()),
                        (
                            PbwMonomial::new(ea - 1, eb + 1, ec + 1, 0).unwrap(),
                            shift.mul(&T::q_pow(q0, -1)),
                        ),
                    ]
                }
            }
        }
    }

    pub fn mul(&self, other: &Self, q0: &T) -> Self {
        let mut out = NumPoly::zero();
        for (m2, c2) in &other.terms {
            let mut part: NumPoly<T> = NumPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(m, c)| (*m, c.mul(c2)))
                    .collect(),
            };
            for (letter, e) in m2.letters() {
                for _ in 0..e {
                    let mut next = NumPoly::zero();
                    for (m, c) in &part.terms {
                        for (m3, c3) in Self::mono_mul_letter(q0, *m, letter) {
                            next.add_term(m3, &c.mul(&c3));
                        }
                    }
                    part = next;
                }
            }
            out = out.add(&part);
        }
        out
    }

    pub fn max_abs_coeff(&self) -> T {
        let mut best = T::zero();
        for c in self.terms.values() {
            let a = c.abs_value();
            if a.greater(&best) {
                best = a;
            }
        }
        best
    }
}

pub fn specialize_matrix(
    x: &ProjMatrix,
    q0: &BigRational,
) -> Result<Vec<Vec<NumPoly<BigRational>>>, BundleError> {
    x.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    let mut p = NumPoly::zero();
                    for (m, c) in e.terms() {
                        p.add_term(*m, &c.eval(q0)?);
                    }
                    Ok(p)
                })
                .collect()
        })
        .collect()
}

pub fn specialize_matrix_f64(
    x: &ProjMatrix,
    q0: &BigRational,
) -> Result<Vec<Vec<NumPoly<f64>>>, BundleError> {
    let exact = specialize_matrix(x, q0)?;
    Ok(exact
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| {
                    let mut f = NumPoly::zero();
                    for (m, c) in p.terms() {
                        f.add_term(*m, &rational_to_f64(c));
                    }
                    f
                })
                .collect()
        })
        .collect())
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("rational representable as f64")
}

fn residual<T: Scalar>(m: &[Vec<NumPoly<T>>], q0: &T) -> T {
    let n = m.len();
    let mut best = T::zero();
    for i in 0..n {
        for j in 0..n {
            let mut acc = NumPoly::zero();
            for k in 0..n {
                acc = acc.add(&m[i][k].mul(&m[k][j], q0));
            }
            acc = acc.add(&m[i][j].neg());
            let a = acc.max_abs_coeff();
            if a.greater(&best) {
                best = a;
            }
        }
    }
    best
}

pub fn idempotency_residual(m: &[Vec<NumPoly<BigRational>>], q0: &BigRational) -> BigRational {
    residual(m, q0)
}

pub fn idempotency_residual_f64(m: &[Vec<NumPoly<f64>>], q0: f64) -> f64 {
    residual(m, &q0)
}

/// tau1 of the trace of a specialized matrix, exactly:
/// the b^n c^n terms contribute coeff * (-q0)^n / (1 - q0^(2n)).
pub fn numeric_tau1_trace(m: &[Vec<NumPoly<BigRational>>], q0: &BigRational) -> BigRational {
    let mut trace: NumPoly<BigRational> = NumPoly::zero();
    for (i, row) in m.iter().enumerate() {
        trace = trace.add(&row[i]);
    }
    let mut out = <BigRational as Zero>::zero();
    for (mono, c) in trace.terms() {
        if mono.ea == 0 && mono.ed == 0 && mono.eb == mono.ec && mono.eb > 0 {
            let n = mono.eb as i64;
            let neg_q_n = {
                let p = Scalar::q_pow(q0, n);
                if n % 2 == 1 {
                    -p
                } else {
                    p
                }
            };
            let denom = <BigRational as One>::one() - Scalar::q_pow(q0, 2 * n);
            out += c * neg_q_n / denom;
        }
    }
    out
}
