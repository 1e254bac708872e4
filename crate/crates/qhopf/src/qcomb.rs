//! Exact q-combinatorics over Q(q): Gaussian (x-)binomial coefficients
//! and x-shifted binomials.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::exactq::RatQ;

/// Gaussian binomial coefficient in the variable x, computed by the
/// telescoping product prod_{j=1..k} (x^(n-k+j) - 1)/(x^j - 1).
/// Returns 0 for k out of range.
pub fn x_binomial(n: u32, k: i64, x: &RatQ) -> RatQ {
    if k < 0 || k > n as i64 {
        return RatQ::zero();
    }
    let k = k as u32;
    let one = RatQ::one();
    let mut acc = RatQ::one();
    for j in 1..=k {
        let num = x.pow((n - k + j) as i64).unwrap().sub(&one);
        let den = x.pow(j as i64).unwrap().sub(&one);
        acc = acc.mul(&num.div(&den).expect("x must not be 0 or 1"));
    }
    acc
}

/// Coefficients of prod_{j=0..nu-1} (1 + x^j t) as a polynomial in t.
pub fn shifted_binomial_row(nu: u32, x: &RatQ) -> Vec<RatQ> {
    let mut coeffs = vec![RatQ::one()];
    for j in 0..nu {
        let xj = x.pow(j as i64).unwrap();
        let mut next = vec![RatQ::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] = next[i].add(c);
            next[i + 1] = next[i + 1].add(&c.mul(&xj));
        }
        coeffs = next;
    }
    coeffs
}

/// The coefficient of t^l in prod_{j=0..nu-1} (1 + x^j t); 0 out of range.
pub fn x_shifted_binomial(nu: u32, l: i64, x: &RatQ) -> RatQ {
    if l < 0 || l > nu as i64 {
        return RatQ::zero();
    }
    shifted_binomial_row(nu, x)[l as usize].clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Binomial,
    Shifted,
}

/// Per-session cache for binomial and shifted-binomial values at a fixed
/// instantiation of x (typically q^2 or q^-2). Concurrent calls return
/// values equal to the pure computation.
pub struct QBinomialTable {
    x: RatQ,
    cache: Mutex<HashMap<(u32, i64, Kind), RatQ>>,
}

impl QBinomialTable {
    pub fn new(x: RatQ) -> Self {
        QBinomialTable {
            x,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn x(&self) -> &RatQ {
        &self.x
    }

    pub fn binomial(&self, n: u32, k: i64) -> RatQ {
        self.lookup(n, k, Kind::Binomial)
    }

    pub fn shifted(&self, nu: u32, l: i64) -> RatQ {
        self.lookup(nu, l, Kind::Shifted)
    }

    fn lookup(&self, n: u32, k: i64, kind: Kind) -> RatQ {
        if let Some(v) = self.cache.lock().unwrap().get(&(n, k, kind)) {
            return v.clone();
        }
        let v = match kind {
            Kind::Binomial => x_binomial(n, k, &self.x),
            Kind::Shifted => x_shifted_binomial(n, k, &self.x),
        };
        self.cache
            .lock()
            .unwrap()
            .insert((n, k, kind), v.clone());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;

    fn x() -> RatQ {
        // generic symbolic x, realized as q
        RatQ::q_pow(1)
    }

    #[test]
    fn binomial_base_cases() {
        for n in 0..6 {
            assert_eq!(x_binomial(n, 0, &x()), RatQ::one());
            assert_eq!(x_binomial(n, n as i64, &x()), RatQ::one());
        }
        assert_eq!(x_binomial(3, -1, &x()), RatQ::zero());
        assert_eq!(x_binomial(3, 4, &x()), RatQ::zero());
    }

    #[test]
    fn binomial_two_one_at_q2() {
        // (2 1)_{q^2} = (q^4 - 1)/(q^2 - 1) = 1 + q^2
        let q2 = RatQ::q_pow(2);
        let got = x_binomial(2, 1, &q2);
        let want = RatQ::one().add(&q2);
        assert_eq!(got, want);
        // oracle: direct formula evaluation
        let one = RatQ::one();
        let direct = RatQ::q_pow(4).sub(&one).div(&q2.sub(&one)).unwrap();
        assert_eq!(got, direct);
    }

    #[test]
    fn binomial_three_one() {
        // (3 1)_x = (x^3 - 1)/(x - 1) = 1 + x + x^2
        let got = x_binomial(3, 1, &x());
        let want = RatQ::one().add(&x()).add(&x().pow(2).unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn shifted_base_cases() {
        for nu in 0..6 {
            assert_eq!(x_shifted_binomial(nu, 0, &x()), RatQ::one());
        }
        // [2 1]_x = 1 + x, [2 2]_x = x from (1 + t)(1 + x t)
        assert_eq!(x_shifted_binomial(2, 1, &x()), RatQ::one().add(&x()));
        assert_eq!(x_shifted_binomial(2, 2, &x()), x());
        assert_eq!(x_shifted_binomial(2, 3, &x()), RatQ::zero());
        assert_eq!(x_shifted_binomial(2, -1, &x()), RatQ::zero());
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(
                    x_binomial(n, k as i64, &x()),
                    x_binomial(n, (n - k) as i64, &x())
                );
            }
        }
    }

    #[test]
    fn shifted_specialization_matches_product() {
        // evaluate [nu l]_x at random rational points and compare with
        // brute-force expansion of the defining product over plain rationals
        let points = [(2i64, 1i64), (1, 2), (-3, 1), (5, 7), (3, 2)];
        for nu in 0..=6u32 {
            for (p, qd) in points {
                let x0 = BigRational::new(BigInt::from(p), BigInt::from(qd));
                // brute force: coefficients of prod (1 + x0^j t)
                let mut coeffs = vec![BigRational::one()];
                for j in 0..nu {
                    let mut xp = BigRational::one();
                    for _ in 0..j {
                        xp *= &x0;
                    }
                    let mut next = vec![BigRational::from_integer(BigInt::from(0)); coeffs.len() + 1];
                    for (i, c) in coeffs.iter().enumerate() {
                        next[i] += c;
                        next[i + 1] += c * &xp;
                    }
                    coeffs = next;
                }
                for l in 0..=nu {
                    let sym = x_shifted_binomial(nu, l as i64, &x());
                    assert_eq!(sym.eval(&x0).unwrap(), coeffs[l as usize]);
                }
            }
        }
    }

    #[test]
    fn table_caches_consistently() {
        let t = QBinomialTable::new(RatQ::q_pow(2));
        for n in 0..=6u32 {
            for k in 0..=n as i64 {
                let first = t.binomial(n, k);
                let second = t.binomial(n, k);
                assert_eq!(first, second);
                assert_eq!(first, x_binomial(n, k, &RatQ::q_pow(2)));
                assert_eq!(t.shifted(n, k), x_shifted_binomial(n, k, &RatQ::q_pow(2)));
            }
        }
    }
}
