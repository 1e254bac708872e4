//! Exact arithmetic in the field Q(q) of rational functions of the
//! indeterminate q, with arbitrary-precision rational coefficients.
//!
//! Canonical form: numerator and denominator are coprime polynomials and
//! the denominator is monic. Equality is structural comparison of
//! canonical forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactqError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("denominator vanishes at q = {0}")]
    Pole(BigRational),
    #[error("q = {0} is excluded (0 and roots of unity on the real line are not allowed)")]
    ExcludedValue(BigRational),
}

/// Univariate polynomial in q over the rationals, sparse representation.
/// No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: BTreeMap<u64, BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        QPoly { coeffs }
    }

    pub fn monomial(exp: u64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        QPoly { coeffs }
    }

    /// q^exp
    pub fn q_pow(exp: u64) -> Self {
        QPoly::monomial(exp, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Trailing (lowest) exponent; None for the zero polynomial.
    pub fn trailing(&self) -> Option<u64> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.iter().next_back().map(|(_, c)| c)
    }

    /// True iff the polynomial is c * q^e for a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn coeff(&self, exp: u64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u64, &BigRational)> {
        self.coeffs.iter()
    }

    fn add_assign_term(&mut self, exp: u64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_assign_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_assign_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Polynomial division with remainder over the rationals.
    pub fn divrem(&self, div: &QPoly) -> (QPoly, QPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let dlc = div.leading_coeff().unwrap().clone();
        let mut quot = QPoly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let rc = rem.leading_coeff().unwrap().clone();
            let factor = rc / &dlc;
            let shift = rd - dd;
            quot.add_assign_term(shift, &factor);
            for (e, c) in &div.coeffs {
                rem.add_assign_term(e + shift, &(-(c * &factor)));
            }
        }
        (quot, rem)
    }

    pub fn make_monic(&self) -> QPoly {
        match self.leading_coeff() {
            None => QPoly::zero(),
            Some(lc) => {
                let inv = BigRational::one() / lc;
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd via the Euclidean algorithm, with a fast path for
    /// monomial arguments (the overwhelmingly common case here:
    /// denominators are powers of q).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        if self.is_monomial() || other.is_monomial() {
            let t = self.trailing().unwrap().min(other.trailing().unwrap());
            return QPoly::q_pow(t);
        }
        let mut a = self.make_monic();
        let mut b = other.make_monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.make_monic();
        }
        a.make_monic()
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        // Horner over the sparse terms, highest exponent first.
        let mut acc = BigRational::zero();
        let mut prev_exp: Option<u64> = None;
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev_exp {
                acc *= pow_rational(q0, p - e);
            }
            acc += c;
            prev_exp = Some(*e);
        }
        if let Some(p) = prev_exp {
            acc *= pow_rational(q0, p);
        }
        acc
    }
}

fn pow_rational(base: &BigRational, exp: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Exact rational function of q in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatQ {
    num: QPoly,
    den: QPoly,
}

impl RatQ {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, ExactqError> {
        if den.is_zero() {
            return Err(ExactqError::DivisionByZero);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatQ {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            let (n, rn) = num.divrem(&g);
            let (d, rd) = den.divrem(&g);
            debug_assert!(rn.is_zero() && rd.is_zero());
            (n, d)
        };
        let lc = den.leading_coeff().unwrap().clone();
        let inv = BigRational::one() / lc;
        RatQ {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RatQ {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatQ {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RatQ {
            num: QPoly::constant(BigRational::from_integer(BigInt::from(n))),
            den: QPoly::one(),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        RatQ {
            num: QPoly::constant(r),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatQ {
            num: p,
            den: QPoly::one(),
        }
    }

    /// q^e for any integer e; negative exponents land in the denominator.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            RatQ {
                num: QPoly::q_pow(e as u64),
                den: QPoly::one(),
            }
        } else {
            RatQ {
                num: QPoly::one(),
                den: QPoly::q_pow((-e) as u64),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &RatQ::one()
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn add(&self, other: &RatQ) -> RatQ {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::canonicalize(num, den)
    }

    pub fn neg(&self) -> RatQ {
        RatQ {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatQ) -> RatQ {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatQ) -> RatQ {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        Self::canonicalize(num, den)
    }

    pub fn inv(&self) -> Result<RatQ, ExactqError> {
        if self.is_zero() {
            return Err(ExactqError::DivisionByZero);
        }
        Ok(Self::canonicalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatQ) -> Result<RatQ, ExactqError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<RatQ, ExactqError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatQ::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact evaluation at q = q0. The values 0, 1 and -1 are excluded
    /// outright; elsewhere a vanishing denominator is a pole error.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, ExactqError> {
        let one = BigRational::one();
        if q0.is_zero() || q0 == &one || q0 == &(-&one) {
            return Err(ExactqError::ExcludedValue(q0.clone()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ExactqError::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Some(n) iff the value is the constant integer n.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den != QPoly::one() {
            return None;
        }
        if self.num.is_zero() {
            return Some(BigInt::zero());
        }
        if self.num.degree() != Some(0) {
            return None;
        }
        let c = self.num.coeff(0);
        if c.is_integer() {
            Some(c.to_integer())
        } else {
            None
        }
    }

    /// Rendering as a sum of signed q-powers with exponents shifted by
    /// -shift, decreasing exponent order. Only valid when the
    /// denominator is a pure power of q.
    fn laurent_terms(&self) -> Option<Vec<(i64, BigRational)>> {
        if !self.den.is_monomial() && !self.den.is_zero() {
            if self.den != QPoly::one() {
                return None;
            }
        }
        let shift = if self.den == QPoly::one() {
            0
        } else if self.den.is_monomial() && self.den.leading_coeff() == Some(&BigRational::one()) {
            self.den.degree().unwrap() as i64
        } else {
            return None;
        };
        let mut v: Vec<(i64, BigRational)> = self
            .num
            .terms()
            .map(|(e, c)| (*e as i64 - shift, c.clone()))
            .collect();
        v.reverse();
        Some(v)
    }

    /// Compact rendering for use as a term coefficient: Laurent form when
    /// the denominator is a power of q, fraction form otherwise. The
    /// `parens` flag wraps multi-term results.
    pub fn coeff_string(&self, parens: bool) -> String {
        if let Some(terms) = self.laurent_terms() {
            if terms.is_empty() {
                return "0".to_string();
            }
            let s = render_laurent(&terms);
            if parens && terms.len() > 1 {
                return format!("({s})");
            }
            return s;
        }
        let num_s = render_poly(&self.num);
        let den_s = render_poly(&self.den);
        let num_w = if self.num.coeffs.len() > 1 {
            format!("({num_s})")
        } else {
            num_s
        };
        let den_w = if self.den.coeffs.len() > 1 {
            format!("({den_s})")
        } else {
            den_s
        };
        format!("{num_w}/{den_w}")
    }
}

fn render_power(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    }
}

fn render_rational(c: &BigRational) -> String {
    if c.is_integer() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// One signed term "c*q^e" without a leading sign for positive c.
fn render_term_abs(e: i64, c: &BigRational) -> String {
    let abs = c.abs();
    let p = render_power(e);
    if p.is_empty() {
        render_rational(&abs)
    } else if abs.is_one() {
        p
    } else {
        format!("{}*{}", render_rational(&abs), p)
    }
}

fn render_laurent(terms: &[(i64, BigRational)]) -> String {
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&render_term_abs(*e, c));
    }
    out
}

fn render_poly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<(i64, BigRational)> = p.terms().map(|(e, c)| (*e as i64, c.clone())).collect();
    let mut rev = terms;
    rev.reverse();
    render_laurent(&rev)
}

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::one() {
            return write!(f, "{}", render_poly(&self.num));
        }
        let num_s = render_poly(&self.num);
        let den_s = render_poly(&self.den);
        let num_w = if self.num.coeffs.len() > 1 {
            format!("({num_s})")
        } else {
            num_s
        };
        let den_w = if self.den.coeffs.len() > 1 {
            format!("({den_s})")
        } else {
            den_s
        };
        write!(f, "{num_w}/{den_w}")
    }
}

// A total order is convenient for deterministic iteration when RatQ is
// used inside sets; it compares the canonical forms lexicographically.
impl PartialOrd for RatQ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatQ {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |r: &RatQ| {
            (
                r.num.coeffs.iter().map(|(e, c)| (*e, c.clone())).collect::<Vec<_>>(),
                r.den.coeffs.iter().map(|(e, c)| (*e, c.clone())).collect::<Vec<_>>(),
            )
        };
        key(self).cmp(&key(other))
    }
}
