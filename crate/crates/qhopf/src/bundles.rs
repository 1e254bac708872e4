//! Quantum Hopf line bundles: the projector matrices e_mu (left) and
//! f_mu (right), matrix algebra over the coordinate ring, the traces
//! tau0 and tau1 on the quantum sphere, the Chern-Connes pairing, and
//! the closed-form trace and pairing expansions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::exactq::{ExactqError, RatQ};
use crate::ncalg::{Letter, NCPoly, PbwMonomial};
use crate::numeric;
use crate::qcomb;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BundleError {
    #[error("element is not coinvariant (some term has nonzero z-degree)")]
    NotCoinvariant,
    #[error("pairing is not an integer constant: {0}")]
    NonIntegerPairing(String),
    #[error("matrix dimensions do not match: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),
    #[error(transparent)]
    Eval(#[from] ExactqError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Square matrix over the coordinate ring, carrying the winding number
/// and the side (left projectors e_mu, right projectors f_mu).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjMatrix {
    pub mu: i64,
    pub side: Side,
    entries: Vec<Vec<NCPoly>>,
}

impl ProjMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &NCPoly {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<NCPoly>] {
        &self.entries
    }

    pub fn identity_like(&self) -> ProjMatrix {
        let n = self.dim();
        let mut entries = vec![vec![NCPoly::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = NCPoly::one();
        }
        ProjMatrix {
            mu: self.mu,
            side: self.side,
            entries,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match mat_mul(self, self) {
            Ok(sq) => sq == *self,
            Err(_) => false,
        }
    }

    pub fn all_entries_coinvariant(&self) -> bool {
        self.entries
            .iter()
            .all(|row| row.iter().all(|e| e.is_coinvariant()))
    }
}

fn neg_q_pow(e: i64) -> RatQ {
    let p = RatQ::q_pow(e);
    if e.rem_euclid(2) == 1 {
        p.neg()
    } else {
        p
    }
}

/// Left projector e_mu. Entry (k,l) is
///   a^(n-k) c^k  (n l)_{q^2} (-q)^l  b^l d^(n-l)      for mu = -n <= 0,
///   b^k d^(n-k)  (n l)_{q^2} (-q)^-l a^(n-l) c^l      for mu = n >= 0,
/// normalized to PBW form.
pub fn build_e(mu: i64) -> ProjMatrix {
    let n = mu.unsigned_abs() as u32;
    let q2 = RatQ::q_pow(2);
    let table = qcomb::QBinomialTable::new(q2);
    let dim = (n + 1) as usize;
    let mut entries = vec![vec![NCPoly::zero(); dim]; dim];
    for k in 0..=n {
        for l in 0..=n {
            let binom = table.binomial(n, l as i64);
            let (coeff, word) = if mu <= 0 {
                (
                    binom.mul(&neg_q_pow(l as i64)),
                    [
                        (Letter::A, n - k),
                        (Letter::C, k),
                        (Letter::B, l),
                        (Letter::D, n - l),
                    ],
                )
            } else {
                (
                    binom.mul(&neg_q_pow(-(l as i64))),
                    [
                        (Letter::B, k),
                        (Letter::D, n - k),
                        (Letter::A, n - l),
                        (Letter::C, l),
                    ],
                )
            };
            entries[k as usize][l as usize] = crate::ncalg::normalize(&word, coeff);
        }
    }
    ProjMatrix {
        mu,
        side: Side::Left,
        entries,
    }
}

/// Right projector f_mu. Entry at row l, column k is
///   (n l)_{q^2} (-q)^-l b^l d^(n-l)  a^(n-k) c^k      for mu = -n <= 0,
///   (n l)_{q^2} (-q)^l  a^(n-l) c^l  b^k d^(n-k)      for mu = n >= 0.
pub fn build_f(mu: i64) -> ProjMatrix {
    let n = mu.unsigned_abs() as u32;
    let q2 = RatQ::q_pow(2);
    let table = qcomb::QBinomialTable::new(q2);
    let dim = (n + 1) as usize;
    let mut entries = vec![vec![NCPoly::zero(); dim]; dim];
    for l in 0..=n {
        for k in 0..=n {
            let binom = table.binomial(n, l as i64);
            let (coeff, word) = if mu <= 0 {
                (
                    binom.mul(&neg_q_pow(-(l as i64))),
                    [
                        (Letter::B, l),
                        (Letter::D, n - l),
                        (Letter::A, n - k),
                        (Letter::C, k),
                    ],
                )
            } else {
                (
                    binom.mul(&neg_q_pow(l as i64)),
                    [
                        (Letter::A, n - l),
                        (Letter::C, l),
                        (Letter::B, k),
                        (Letter::D, n - k),
                    ],
                )
            };
            entries[l as usize][k as usize] = crate::ncalg::normalize(&word, coeff);
        }
    }
    ProjMatrix {
        mu,
        side: Side::Right,
        entries,
    }
}

/// Noncommutative matrix product; entry (i,j) accumulates X_ik * Y_kj.
pub fn mat_mul(x: &ProjMatrix, y: &ProjMatrix) -> Result<ProjMatrix, BundleError> {
    let n = x.dim();
    if n != y.dim() {
        return Err(BundleError::DimensionMismatch(n, y.dim()));
    }
    let mut entries = vec![vec![NCPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = NCPoly::zero();
            for k in 0..n {
                acc = acc.add(&x.entries[i][k].mul(&y.entries[k][j]));
            }
            entries[i][j] = acc;
        }
    }
    Ok(ProjMatrix {
        mu: x.mu,
        side: x.side,
        entries,
    })
}

pub fn mat_trace(x: &ProjMatrix) -> NCPoly {
    let mut acc = NCPoly::zero();
    for i in 0..x.dim() {
        acc = acc.add(&x.entries[i][i]);
    }
    acc
}

/// tau0: the restriction of the counit to the quantum sphere.
pub fn tau0(x: &NCPoly) -> Result<RatQ, BundleError> {
    if !x.is_coinvariant() {
        return Err(BundleError::NotCoinvariant);
    }
    Ok(x.counit())
}

/// tau1: the Chern cyclic cocycle, evaluated on the PBW basis.
///
/// The defining rule assigns (1-q^(2n))^-1 to zeta^n (n > 0) and 0 to
/// every element of the families (ab)^m zeta^n, (cd)^m zeta^n with
/// m > 0, as well as to the unit. On PBW monomials this becomes: only
/// the pure monomials b^n c^n (n > 0) contribute, with value
/// (-q)^n (1-q^(2n))^-1, since zeta^n = (-1/q)^n b^n c^n; every other
/// degree-zero monomial contains a or d and hence lies, up to a power
/// of q, in one of the m > 0 families that the rule annihilates (the
/// q-power rescaling relating (ab)^m to a^m b^m cannot resurrect a zero
/// value).
pub fn tau1(x: &NCPoly) -> Result<RatQ, BundleError> {
    if !x.is_coinvariant() {
        return Err(BundleError::NotCoinvariant);
    }
    let mut out = RatQ::zero();
    for (m, c) in x.terms() {
        if let Some(v) = tau1_monomial_value(m) {
            out = out.add(&c.mul(&v));
        }
    }
    Ok(out)
}

/// tau1 of a single PBW monomial, None when it vanishes.
fn tau1_monomial_value(m: &PbwMonomial) -> Option<RatQ> {
    if m.ea != 0 || m.ed != 0 || m.eb != m.ec || m.eb == 0 {
        return None;
    }
    let n = m.eb as i64;
    let denom = RatQ::one().sub(&RatQ::q_pow(2 * n));
    Some(neg_q_pow(n).mul(&denom.inv().expect("1 - q^2n is nonzero")))
}

/// Pairing report for one projector: the rank pairing tau0(Tr),
/// the Chern pairing tau1(Tr), and the per-degree summands of the
/// latter before cancellation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingReport {
    pub mu: i64,
    pub side: Side,
    pub rank_pairing: i64,
    pub chern_pairing: i64,
    /// Contribution of the zeta-degree-m part of the trace to tau1.
    pub per_degree_terms: BTreeMap<u32, RatQ>,
}

/// Evaluate both traces on Tr(X) exactly. The Chern value must come out
/// as an integer constant; any residual q-dependence is reported as an
/// error rather than rounded away.
pub fn chern_pairing(x: &ProjMatrix) -> Result<PairingReport, BundleError> {
    let trace = mat_trace(x);
    if !trace.is_coinvariant() {
        return Err(BundleError::NotCoinvariant);
    }
    let mut per_degree_terms = BTreeMap::new();
    let mut total = RatQ::zero();
    for (m, c) in trace.terms() {
        if let Some(v) = tau1_monomial_value(m) {
            let term = c.mul(&v);
            per_degree_terms.insert(m.eb, term.clone());
            total = total.add(&term);
        }
    }
    let chern = total
        .as_integer()
        .ok_or_else(|| BundleError::NonIntegerPairing(total.to_string()))?;
    let rank = tau0(&trace)?;
    let rank = rank
        .as_integer()
        .ok_or_else(|| BundleError::NonIntegerPairing(rank.to_string()))?;
    Ok(PairingReport {
        mu: x.mu,
        side: x.side,
        rank_pairing: bigint_to_i64(&rank),
        chern_pairing: bigint_to_i64(&chern),
        per_degree_terms,
    })
}

fn bigint_to_i64(n: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    n.to_i64().expect("pairing value fits in i64")
}

/// Polynomial in zeta with coefficients in Q(q), used by the closed-form
/// trace expansions; index = zeta-degree.
fn zeta_poly_mul(a: &[RatQ], b: &[RatQ]) -> Vec<RatQ> {
    let mut out = vec![RatQ::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&ca.mul(cb));
        }
    }
    out
}

fn zeta_poly_to_ncpoly(coeffs: &[RatQ]) -> NCPoly {
    let zeta = NCPoly::zeta();
    let mut out = NCPoly::zero();
    let mut power = NCPoly::one();
    for c in coeffs {
        out = out.add(&power.scale(c));
        power = power.mul(&zeta);
    }
    out
}

/// The closed-form expansion of Tr(e_mu) as a zeta-polynomial:
///   sum_k (n k)_{q^2} q^(-2k(n-k-1)) zeta^k prod_{l=0}^{n-k-1} (1 - q^(-2l) zeta)
/// for mu = -n < 0, and
///   sum_k (n k)_{q^2} zeta^k prod_{l=0}^{n-k-1} (1 - q^(-2(l+1)) zeta)
/// for mu = n > 0; the empty product is 1.
pub fn closed_form_trace(mu: i64) -> NCPoly {
    if mu == 0 {
        return NCPoly::one();
    }
    let n = mu.unsigned_abs() as u32;
    let q2 = RatQ::q_pow(2);
    let table = qcomb::QBinomialTable::new(q2);
    let mut total = vec![RatQ::zero()];
    for k in 0..=n {
        let binom = table.binomial(n, k as i64);
        let scalar = if mu < 0 {
            binom.mul(&RatQ::q_pow(-2 * k as i64 * (n as i64 - k as i64 - 1)))
        } else {
            binom
        };
        // scalar * zeta^k
        let mut term = vec![RatQ::zero(); k as usize + 1];
        term[k as usize] = scalar;
        for l in 0..(n - k) {
            let qfac = if mu < 0 {
                RatQ::q_pow(-2 * l as i64)
            } else {
                // d^m a^m = prod_{l=0}^{m-1} (1 - q^(2(l+1)) zeta); the
                // shifted-binomial expansion below in closed_form_pairing
                // uses the same positive exponent.
                RatQ::q_pow(2 * (l as i64 + 1))
            };
            term = zeta_poly_mul(&term, &[RatQ::one(), qfac.neg()]);
        }
        if total.len() < term.len() {
            total.resize(term.len(), RatQ::zero());
        }
        for (i, c) in term.iter().enumerate() {
            total[i] = total[i].add(c);
        }
    }
    zeta_poly_to_ncpoly(&total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// The double-sum closed form of the Chern pairing, evaluated exactly:
///   sum_{m=1}^n (1-q^(2m))^-1 (-1)^m
///     sum_{k=0}^m (n k)_{q^2} q^(-2k(n-k-1)) (-1)^k [n-k m-k]_{q^-2}
/// for the negative side, and
///   sum_{m=1}^n (1-q^(2m))^-1
///     sum_{k=0}^m (n k)_{q^2} (-1)^(m-k) q^(2(m-k)) [n-k m-k]_{q^2}
/// for the positive side. Both collapse to +-n.
pub fn closed_form_pairing(n: u32, sign: Sign) -> RatQ {
    assert!(n >= 1);
    let q2 = RatQ::q_pow(2);
    let binom_table = qcomb::QBinomialTable::new(q2.clone());
    let shifted_x = match sign {
        Sign::Negative => RatQ::q_pow(-2),
        Sign::Positive => q2,
    };
    let shifted_table = qcomb::QBinomialTable::new(shifted_x);
    let mut total = RatQ::zero();
    for m in 1..=n {
        let mut inner = RatQ::zero();
        for k in 0..=m {
            let binom = binom_table.binomial(n, k as i64);
            let shifted = shifted_table.shifted(n - k, (m - k) as i64);
            let term = match sign {
                Sign::Negative => {
                    let qfac = RatQ::q_pow(-2 * k as i64 * (n as i64 - k as i64 - 1));
                    let s = if k % 2 == 1 {
                        RatQ::one().neg()
                    } else {
                        RatQ::one()
                    };
                    binom.mul(&qfac).mul(&s).mul(&shifted)
                }
                Sign::Positive => {
                    let e = (m - k) as i64;
                    let s = if (m - k) % 2 == 1 {
                        RatQ::one().neg()
                    } else {
                        RatQ::one()
                    };
                    binom.mul(&RatQ::q_pow(2 * e)).mul(&s).mul(&shifted)
                }
            };
            inner = inner.add(&term);
        }
        let front = RatQ::one()
            .sub(&RatQ::q_pow(2 * m as i64))
            .inv()
            .expect("1 - q^2m is nonzero");
        let signed_front = match sign {
            Sign::Negative => {
                if m % 2 == 1 {
                    front.neg()
                } else {
                    front
                }
            }
            Sign::Positive => front,
        };
        total = total.add(&signed_front.mul(&inner));
    }
    total
}

/// The |mu|+1 spanning monomials of the graded component P_mu:
/// a^(-mu-k) c^k for mu <= 0, b^k d^(mu-k) for mu >= 0.
pub fn hopf_line_bundle_generators(mu: i64) -> Vec<PbwMonomial> {
    let n = mu.unsigned_abs() as u32;
    (0..=n)
        .map(|k| {
            if mu <= 0 {
                PbwMonomial::new(n - k, 0, k, 0).unwrap()
            } else {
                PbwMonomial::new(0, k, 0, n - k).unwrap()
            }
        })
        .collect()
}

/// Result of re-running the projector identities with q specialized to
/// a concrete rational value.
#[derive(Debug, Clone)]
pub struct NumericReport {
    pub mu: i64,
    pub side: Side,
    pub q0: BigRational,
    /// Max abs coefficient of X^2 - X recomputed in exact rational
    /// arithmetic; zero iff the identity survives specialization.
    pub exact_residual: BigRational,
    /// Same residual with f64 coefficients.
    pub float_residual: f64,
    pub numeric_pairing: BigRational,
    pub symbolic_pairing: i64,
}

impl NumericReport {
    pub fn pairing_matches(&self) -> bool {
        self.numeric_pairing == BigRational::from_integer(BigInt::from(self.symbolic_pairing))
    }
}

/// Evaluate all entries at q = q0 and recompute X^2 - X and the Chern
/// pairing numerically, in exact rational and in floating-point
/// arithmetic. The numeric route re-runs the algebra multiplication at
/// the specialized q, so it is independent of the symbolic cancellation.
pub fn numeric_check(x: &ProjMatrix, q0: &BigRational) -> Result<NumericReport, BundleError> {
    let report = chern_pairing(x)?;
    let exact = numeric::specialize_matrix(x, q0)?;
    let exact_residual = numeric::idempotency_residual(&exact, q0);
    let numeric_pairing = numeric::numeric_tau1_trace(&exact, q0);
    let float = numeric::specialize_matrix_f64(x, q0)?;
    let q0f = numeric::rational_to_f64(q0);
    let float_residual = numeric::idempotency_residual_f64(&float, q0f);
    Ok(NumericReport {
        mu: x.mu,
        side: x.side,
        q0: q0.clone(),
        exact_residual,
        float_residual,
        numeric_pairing,
        symbolic_pairing: report.chern_pairing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::normalize_letters;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn mono(ea: u32, eb: u32, ec: u32, ed: u32) -> PbwMonomial {
        PbwMonomial::new(ea, eb, ec, ed).unwrap()
    }

    #[test]
    fn e_zero_is_one() {
        let e0 = build_e(0);
        assert_eq!(e0.dim(), 1);
        assert_eq!(e0.entry(0, 0), &NCPoly::one());
        let f0 = build_f(0);
        assert_eq!(f0.entry(0, 0), &NCPoly::one());
    }

    #[test]
    fn e_minus_one_entries() {
        // hand substitution: [[ad, -q ab], [cd, -q bc]] before normalization
        let e = build_e(-1);
        assert_eq!(e.entry(0, 0), &normalize_letters(&[Letter::A, Letter::D]));
        let mut nn = NCPoly::one();
        nn.add_term(mono(0, 1, 1, 0), &RatQ::q_pow(-1));
        assert_eq!(e.entry(0, 0), &nn);
        assert_eq!(
            e.entry(0, 1),
            &NCPoly::monomial(mono(1, 1, 0, 0), RatQ::q_pow(1).neg())
        );
        assert_eq!(
            e.entry(1, 0),
            &NCPoly::monomial(mono(0, 0, 1, 1), RatQ::one())
        );
        assert_eq!(
            e.entry(1, 1),
            &NCPoly::monomial(mono(0, 1, 1, 0), RatQ::q_pow(1).neg())
        );
    }

    #[test]
    fn e_plus_one_entries() {
        // b^k d^(1-k) (1 l)_{q^2} (-q)^-l a^(1-l) c^l
        let e = build_e(1);
        let q2 = RatQ::q_pow(2);
        for k in 0..=1u32 {
            for l in 0..=1u32 {
                let coeff = qcomb::x_binomial(1, l as i64, &q2).mul(&neg_q_pow(-(l as i64)));
                let want = crate::ncalg::normalize(
                    &[
                        (Letter::B, k),
                        (Letter::D, 1 - k),
                        (Letter::A, 1 - l),
                        (Letter::C, l),
                    ],
                    coeff,
                );
                assert_eq!(e.entry(k as usize, l as usize), &want);
            }
        }
    }

    #[test]
    fn f_minus_one_entries() {
        // (f_-1)_{lk} = (1 l)_{q^2} (-q)^-l b^l d^(1-l) a^(1-k) c^k
        let f = build_f(-1);
        let q2 = RatQ::q_pow(2);
        for l in 0..=1u32 {
            for k in 0..=1u32 {
                let coeff = qcomb::x_binomial(1, l as i64, &q2).mul(&neg_q_pow(-(l as i64)));
                let want = crate::ncalg::normalize(
                    &[
                        (Letter::B, l),
                        (Letter::D, 1 - l),
                        (Letter::A, 1 - k),
                        (Letter::C, k),
                    ],
                    coeff,
                );
                assert_eq!(f.entry(l as usize, k as usize), &want);
            }
        }
    }

    #[test]
    fn idempotency_small_range() {
        for mu in -3..=3 {
            assert!(build_e(mu).is_idempotent(), "e_{mu}");
            assert!(build_f(mu).is_idempotent(), "f_{mu}");
        }
    }

    #[test]
    fn identity_multiplication() {
        let e = build_e(-2);
        let id = e.identity_like();
        assert_eq!(mat_mul(&id, &e).unwrap(), e);
        assert_eq!(mat_mul(&e, &id).unwrap(), e);
    }

    #[test]
    fn dimension_mismatch() {
        let a = build_e(1);
        let b = build_e(2);
        assert!(matches!(
            mat_mul(&a, &b),
            Err(BundleError::DimensionMismatch(2, 3))
        ));
    }

    #[test]
    fn trace_e_minus_one() {
        // Tr(e_-1) = 1 + (q^-1 - q) bc
        let t = mat_trace(&build_e(-1));
        let mut want = NCPoly::one();
        want.add_term(mono(0, 1, 1, 0), &RatQ::q_pow(-1).sub(&RatQ::q_pow(1)));
        assert_eq!(t, want);
    }

    #[test]
    fn tau0_values() {
        assert_eq!(tau0(&NCPoly::one()).unwrap(), RatQ::one());
        assert_eq!(tau0(&NCPoly::zeta()).unwrap(), RatQ::zero());
        for mu in -4..=4 {
            assert_eq!(tau0(&mat_trace(&build_e(mu))).unwrap(), RatQ::one());
        }
        assert_eq!(
            tau0(&NCPoly::generator(Letter::A)),
            Err(BundleError::NotCoinvariant)
        );
    }

    #[test]
    fn tau1_values() {
        // tau1(zeta^n) = (1 - q^2n)^-1
        for n in 1..=4u32 {
            let zn = NCPoly::zeta().pow(n);
            let want = RatQ::one()
                .sub(&RatQ::q_pow(2 * n as i64))
                .inv()
                .unwrap();
            assert_eq!(tau1(&zn).unwrap(), want);
        }
        assert_eq!(tau1(&NCPoly::one()).unwrap(), RatQ::zero());
        // tau1(bc) = -q/(1 - q^2)
        let bc = NCPoly::monomial(mono(0, 1, 1, 0), RatQ::one());
        let want = RatQ::q_pow(1)
            .neg()
            .mul(&RatQ::one().sub(&RatQ::q_pow(2)).inv().unwrap());
        assert_eq!(tau1(&bc).unwrap(), want);
        // degree-zero monomial containing a: annihilated
        let abbc = NCPoly::monomial(mono(1, 2, 1, 0), RatQ::one());
        assert_eq!(tau1(&abbc).unwrap(), RatQ::zero());
        assert_eq!(
            tau1(&NCPoly::generator(Letter::B)),
            Err(BundleError::NotCoinvariant)
        );
    }

    #[test]
    fn chern_pairing_small() {
        let r = chern_pairing(&build_e(-1)).unwrap();
        assert_eq!(r.chern_pairing, -1);
        assert_eq!(r.rank_pairing, 1);
        let r0 = chern_pairing(&build_e(0)).unwrap();
        assert_eq!(r0.chern_pairing, 0);
        assert_eq!(r0.rank_pairing, 1);
    }

    #[test]
    fn remark_per_degree_terms() {
        let r = chern_pairing(&build_e(-2)).unwrap();
        let m1 = RatQ::from_int(-1).sub(&RatQ::q_pow(-2));
        let m2 = RatQ::from_int(-1).add(&RatQ::q_pow(-2));
        assert_eq!(r.per_degree_terms[&1], m1);
        assert_eq!(r.per_degree_terms[&2], m2);
        assert_eq!(r.chern_pairing, -2);

        let r = chern_pairing(&build_e(2)).unwrap();
        assert_eq!(r.per_degree_terms[&1], RatQ::one().add(&RatQ::q_pow(2)));
        assert_eq!(r.per_degree_terms[&2], RatQ::one().sub(&RatQ::q_pow(2)));
        assert_eq!(r.chern_pairing, 2);
    }

    #[test]
    fn pairing_f_small_range() {
        for mu in -4..=4 {
            let r = chern_pairing(&build_f(mu)).unwrap();
            assert_eq!(r.chern_pairing, -mu, "f_{mu}");
            // equality of pairings with e_-mu
            let pe = tau1(&mat_trace(&build_e(-mu))).unwrap();
            let pf = tau1(&mat_trace(&build_f(mu))).unwrap();
            assert_eq!(pe, pf);
        }
    }

    #[test]
    fn closed_form_trace_matches() {
        assert_eq!(closed_form_trace(0), NCPoly::one());
        // mu = -1: 1 + (q^2 - 1) zeta
        let want = NCPoly::one().add(
            &NCPoly::zeta().scale(&RatQ::q_pow(2).sub(&RatQ::one())),
        );
        assert_eq!(closed_form_trace(-1), want);
        for mu in -4..=4 {
            assert_eq!(
                closed_form_trace(mu),
                mat_trace(&build_e(mu)),
                "closed form trace mu={mu}"
            );
        }
    }

    #[test]
    fn closed_form_pairing_collapses() {
        for n in 1..=3u32 {
            assert_eq!(
                closed_form_pairing(n, Sign::Negative),
                RatQ::from_int(-(n as i64))
            );
            assert_eq!(
                closed_form_pairing(n, Sign::Positive),
                RatQ::from_int(n as i64)
            );
        }
    }

    #[test]
    fn line_bundle_generators() {
        assert_eq!(
            hopf_line_bundle_generators(-1),
            vec![mono(1, 0, 0, 0), mono(0, 0, 1, 0)]
        );
        assert_eq!(hopf_line_bundle_generators(0), vec![PbwMonomial::one()]);
        assert_eq!(
            hopf_line_bundle_generators(2),
            vec![mono(0, 0, 0, 2), mono(0, 1, 0, 1), mono(0, 2, 0, 0)]
        );
        for mu in -5..=5i64 {
            for m in hopf_line_bundle_generators(mu) {
                assert_eq!(m.zdegree(), -mu);
            }
        }
    }

    #[test]
    fn coinvariance_of_entries() {
        for mu in -3..=3 {
            assert!(build_e(mu).all_entries_coinvariant());
            assert!(build_f(mu).all_entries_coinvariant());
        }
    }

    #[test]
    fn tau1_trace_property() {
        // tau1(xy) = tau1(yx) on random coinvariant pairs
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let x = crate::sample::random_coinvariant(&mut rng, 4, 2);
            let y = crate::sample::random_coinvariant(&mut rng, 4, 2);
            let xy = tau1(&x.mul(&y)).unwrap();
            let yx = tau1(&y.mul(&x)).unwrap();
            assert_eq!(xy, yx);
        }
    }

    #[test]
    fn numeric_check_examples() {
        use num_traits::Zero;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let r = numeric_check(&build_e(-1), &half).unwrap();
        assert!(r.exact_residual.is_zero());
        assert!(r.pairing_matches());
        assert_eq!(r.symbolic_pairing, -1);

        let two = BigRational::from_integer(BigInt::from(2));
        let r = numeric_check(&build_e(3), &two).unwrap();
        assert!(r.exact_residual.is_zero());
        assert!(r.float_residual < 1e-9);
        assert_eq!(r.symbolic_pairing, 3);
        assert!(r.pairing_matches());

        let one = BigRational::from_integer(BigInt::from(1));
        assert!(matches!(
            numeric_check(&build_e(-1), &one),
            Err(BundleError::Eval(ExactqError::ExcludedValue(_)))
        ));
    }
}
