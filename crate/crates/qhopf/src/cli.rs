//! Command-line surface: expression normalization, projector
//! construction, pairing reports, and the verification suites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bundles::{
    self, build_e, build_f, chern_pairing, closed_form_pairing, closed_form_trace, mat_trace,
    numeric_check, tau1, Side, Sign,
};
use crate::exactq::RatQ;
use crate::hopf;
use crate::ncalg::{Letter, NCPoly, PbwMonomial};
use crate::refrewrite;
use crate::sample;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Idempotent,
    Pairing,
    Rank,
    Coinvariance,
    ClosedForms,
    HopfAxioms,
    Confluence,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Idempotent,
        Check::Pairing,
        Check::Rank,
        Check::Coinvariance,
        Check::ClosedForms,
        Check::HopfAxioms,
        Check::Confluence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Idempotent => "idempotent",
            Check::Pairing => "pairing",
            Check::Rank => "rank",
            Check::Coinvariance => "coinvariance",
            Check::ClosedForms => "closed_forms",
            Check::HopfAxioms => "hopf_axioms",
            Check::Confluence => "confluence",
        }
    }
}

impl FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub mu_min: i64,
    pub mu_max: i64,
    pub checks: BTreeSet<Check>,
    pub q_numeric: Option<BigRational>,
    pub format: Format,
    pub seed: u64,
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            mu_min: -4,
            mu_max: 4,
            checks: Check::ALL.into_iter().collect(),
            q_numeric: None,
            format: Format::Text,
            seed: 0,
        timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), UsageError> {
        if self.mu_min > self.mu_max {
            return Err(UsageError(format!(
                "invalid mu range {}..{}",
                self.mu_min, self.mu_max
            )));
        }
        if let Some(q0) = &self.q_numeric {
            let one = BigRational::one();
            if q0.is_zero() || *q0 == one || *q0 == -&one {
                return Err(UsageError(format!(
                    "q-numeric value {q0} is excluded (0, 1, -1 are not allowed)"
                )));
            }
        }
        Ok(())
    }
}

/// Parse "P/Q" or "P" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, UsageError> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| UsageError(format!("invalid rational '{s}'")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d == 0 {
                return Err(UsageError(format!("zero denominator in '{s}'")));
            }
            Ok(BigRational::new(BigInt::from(n), BigInt::from(d)))
        }
        None => Ok(BigRational::from_integer(BigInt::from(parse_int(s)?))),
    }
}

/// Parse "A..B" into an inclusive range.
pub fn parse_mu_range(s: &str) -> Result<(i64, i64), UsageError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| UsageError(format!("invalid mu range '{s}', expected A..B")))?;
    let lo = a
        .trim()
        .parse::<i64>()
        .map_err(|_| UsageError(format!("invalid mu range bound '{a}'")))?;
    let hi = b
        .trim()
        .parse::<i64>()
        .map_err(|_| UsageError(format!("invalid mu range bound '{b}'")))?;
    Ok((lo, hi))
}

// ------------------------------------------------------------------
// Report types (stable JSON schema, version = crate version)
// ------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub degree: u32,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairingJson {
    pub mu: i64,
    pub side: String,
    pub rank: i64,
    pub chern: i64,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteJson {
    pub status: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConfigJson {
    pub mu_min: i64,
    pub mu_max: i64,
    pub checks: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_numeric: Option<String>,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunReport {
    pub version: String,
    pub config: ConfigJson,
    pub per_mu: Vec<PairingJson>,
    /// Observed (rank, chern) pairs for the left projectors: the
    /// sampled positive-cone coordinates of K0 of the quantum sphere.
    pub observed_pairs: Vec<[i64; 2]>,
    pub suites: BTreeMap<String, SuiteJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, u64>>,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.suites.values().all(|s| s.status == "pass")
    }
}

fn pairing_to_json(r: &bundles::PairingReport) -> PairingJson {
    PairingJson {
        mu: r.mu,
        side: r.side.as_str().to_string(),
        rank: r.rank_pairing,
        chern: r.chern_pairing,
        terms: r
            .per_degree_terms
            .iter()
            .map(|(d, v)| TermJson {
                degree: *d,
                value: v.to_string(),
            })
            .collect(),
    }
}

// ------------------------------------------------------------------
// Suites
// ------------------------------------------------------------------

struct Suite {
    cases: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new() -> Self {
        Suite {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn into_json(self) -> SuiteJson {
        SuiteJson {
            status: if self.failures.is_empty() {
                "pass".to_string()
            } else {
                "fail".to_string()
            },
            cases: self.cases,
            failures: self.failures,
        }
    }
}

fn check_idempotent(mu_range: impl Iterator<Item = i64>) -> Suite {
    let mut s = Suite::new();
    for mu in mu_range {
        let e = build_e(mu);
        s.case(e.is_idempotent(), || format!("e_{mu} is not idempotent"));
        let f = build_f(mu);
        s.case(f.is_idempotent(), || format!("f_{mu} is not idempotent"));
    }
    s
}

fn check_pairing(mu_range: impl Iterator<Item = i64>) -> Suite {
    let mut s = Suite::new();
    for mu in mu_range {
        match chern_pairing(&build_e(mu)) {
            Ok(r) => s.case(r.chern_pairing == mu, || {
                format!("chern(e_{mu}) = {} != {mu}", r.chern_pairing)
            }),
            Err(e) => s.case(false, || format!("chern(e_{mu}) failed: {e}")),
        }
        match chern_pairing(&build_f(mu)) {
            Ok(r) => s.case(r.chern_pairing == -mu, || {
                format!("chern(f_{mu}) = {} != {}", r.chern_pairing, -mu)
            }),
            Err(e) => s.case(false, || format!("chern(f_{mu}) failed: {e}")),
        }
        // the pairing with f_mu equals the pairing with e_-mu
        let pf = tau1(&mat_trace(&build_f(mu)));
        let pe = tau1(&mat_trace(&build_e(-mu)));
        s.case(pf == pe, || {
            format!("tau1(Tr f_{mu}) differs from tau1(Tr e_{})", -mu)
        });
        // term-level reproduction for |mu| = 2
        if mu == -2 {
            let r = chern_pairing(&build_e(-2)).unwrap();
            let m1 = RatQ::from_int(-1).sub(&RatQ::q_pow(-2));
            let m2 = RatQ::from_int(-1).add(&RatQ::q_pow(-2));
            s.case(
                r.per_degree_terms.get(&1) == Some(&m1)
                    && r.per_degree_terms.get(&2) == Some(&m2),
                || "per-degree terms of e_-2 do not match -1-q^-2, -1+q^-2".to_string(),
            );
        }
        if mu == 2 {
            let r = chern_pairing(&build_e(2)).unwrap();
            let m1 = RatQ::one().add(&RatQ::q_pow(2));
            let m2 = RatQ::one().sub(&RatQ::q_pow(2));
            s.case(
                r.per_degree_terms.get(&1) == Some(&m1)
                    && r.per_degree_terms.get(&2) == Some(&m2),
                || "per-degree terms of e_2 do not match 1+q^2, 1-q^2".to_string(),
            );
        }
    }
    s
}

fn check_rank(mu_range: impl Iterator<Item = i64>) -> Suite {
    let mut s = Suite::new();
    for mu in mu_range {
        for (label, m) in [("e", build_e(mu)), ("f", build_f(mu))] {
            match bundles::tau0(&mat_trace(&m)) {
                Ok(v) => s.case(v == RatQ::one(), || {
                    format!("tau0(Tr {label}_{mu}) = {v} != 1")
                }),
                Err(e) => s.case(false, || format!("tau0(Tr {label}_{mu}) failed: {e}")),
            }
        }
    }
    s
}

fn check_coinvariance(mu_range: impl Iterator<Item = i64>) -> Suite {
    let mut s = Suite::new();
    for mu in mu_range {
        s.case(build_e(mu).all_entries_coinvariant(), || {
            format!("e_{mu} has a non-coinvariant entry")
        });
        s.case(build_f(mu).all_entries_coinvariant(), || {
            format!("f_{mu} has a non-coinvariant entry")
        });
    }
    s
}

fn check_closed_forms(mu_min: i64, mu_max: i64) -> Suite {
    let mut s = Suite::new();
    for mu in mu_min..=mu_max {
        let lhs = closed_form_trace(mu);
        let rhs = mat_trace(&build_e(mu));
        s.case(lhs == rhs, || {
            format!("closed-form trace differs from Tr(e_{mu})")
        });
    }
    let n_max = mu_min.unsigned_abs().max(mu_max.unsigned_abs()).min(4) as u32;
    for n in 1..=n_max {
        let neg = closed_form_pairing(n, Sign::Negative);
        s.case(neg == RatQ::from_int(-(n as i64)), || {
            format!("closed-form pairing ({n}, -) = {neg} != -{n}")
        });
        let pos = closed_form_pairing(n, Sign::Positive);
        s.case(pos == RatQ::from_int(n as i64), || {
            format!("closed-form pairing ({n}, +) = {pos} != {n}")
        });
    }
    s
}

fn check_hopf_axioms(seed: u64, random_samples: usize) -> Suite {
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x486f7066);
    let mut samples: Vec<NCPoly> = Letter::ALL.iter().map(|&x| NCPoly::generator(x)).collect();
    samples.push(NCPoly::one());
    for _ in 0..random_samples {
        samples.push(sample::random_element(&mut rng, 3, 3));
    }
    s.case(hopf::check_coassociativity(&samples), || {
        "coassociativity failed".to_string()
    });
    s.case(hopf::check_counit_axiom(&samples), || {
        "counit axiom failed".to_string()
    });
    s.case(hopf::check_antipode_axiom(&samples), || {
        "antipode axiom failed".to_string()
    });
    // coaction-grading consistency on all PBW monomials of degree <= 5
    let mut all_ok = true;
    for total in 0..=5u32 {
        for ea in 0..=total {
            for eb in 0..=(total - ea) {
                for ec in 0..=(total - ea - eb) {
                    let ed = total - ea - eb - ec;
                    if let Some(m) = PbwMonomial::new(ea, eb, ec, ed) {
                        let x = NCPoly::monomial(m, RatQ::one());
                        if !hopf::check_coaction_grading(&x) {
                            all_ok = false;
                        }
                    }
                }
            }
        }
    }
    s.case(all_ok, || "coaction-grading consistency failed".to_string());
    s
}

fn check_confluence(seed: u64, words: usize, triples: usize) -> Suite {
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x436f6e66);
    for _ in 0..words {
        let w = sample::random_word(&mut rng, 8);
        let engine = crate::ncalg::normalize_letters(&w);
        let naive = refrewrite::normalize_random_order(&w, &mut rng);
        s.case(engine == naive, || {
            format!("confluence mismatch on word {w:?}")
        });
    }
    for _ in 0..triples {
        let x = sample::random_element(&mut rng, 4, 2);
        let y = sample::random_element(&mut rng, 4, 2);
        let z = sample::random_element(&mut rng, 4, 2);
        let lhs = x.mul(&y).mul(&z);
        let rhs = x.mul(&y.mul(&z));
        s.case(lhs == rhs, || "associativity mismatch".to_string());
    }
    s
}

fn check_numeric(mu_min: i64, mu_max: i64, q0: &BigRational) -> Suite {
    let mut s = Suite::new();
    let lo = mu_min.max(-4);
    let hi = mu_max.min(4);
    for mu in lo..=hi {
        for m in [build_e(mu), build_f(mu)] {
            let label = format!("{}_{mu} at q={q0}", if m.side == Side::Left { "e" } else { "f" });
            match numeric_check(&m, q0) {
                Ok(r) => {
                    s.case(r.exact_residual.is_zero(), || {
                        format!("{label}: exact idempotency residual {}", r.exact_residual)
                    });
                    s.case(r.float_residual < 1e-9, || {
                        format!("{label}: float residual {}", r.float_residual)
                    });
                    s.case(r.pairing_matches(), || {
                        format!(
                            "{label}: numeric pairing {} != {}",
                            r.numeric_pairing, r.symbolic_pairing
                        )
                    });
                }
                Err(e) => s.case(false, || format!("{label}: {e}")),
            }
        }
    }
    s
}

// ------------------------------------------------------------------
// Commands
// ------------------------------------------------------------------

pub fn run_verify(config: &VerifyConfig) -> Result<RunReport, UsageError> {
    config.validate()?;
    let mut suites = BTreeMap::new();
    let mut timing: BTreeMap<String, u64> = BTreeMap::new();
    let range = || config.mu_min..=config.mu_max;

    let run = |name: &str, suite: Suite, timing: &mut BTreeMap<String, u64>, started: Instant| {
        timing.insert(name.to_string(), started.elapsed().as_millis() as u64);
        (name.to_string(), suite.into_json())
    };

    for check in &config.checks {
        let started = Instant::now();
        let suite = match check {
            Check::Idempotent => check_idempotent(range()),
            Check::Pairing => check_pairing(range()),
            Check::Rank => check_rank(range()),
            Check::Coinvariance => check_coinvariance(range()),
            Check::ClosedForms => check_closed_forms(config.mu_min, config.mu_max),
            Check::HopfAxioms => check_hopf_axioms(config.seed, 100),
            Check::Confluence => check_confluence(config.seed, 500, 500),
        };
        let (name, json) = run(check.name(), suite, &mut timing, started);
        suites.insert(name, json);
    }
    if let Some(q0) = &config.q_numeric {
        let started = Instant::now();
        let suite = check_numeric(config.mu_min, config.mu_max, q0);
        let (name, json) = run("numeric", suite, &mut timing, started);
        suites.insert(name, json);
    }

    let mut per_mu = Vec::new();
    let mut observed = BTreeSet::new();
    for mu in range() {
        for m in [build_e(mu), build_f(mu)] {
            match chern_pairing(&m) {
                Ok(r) => {
                    if m.side == Side::Left {
                        observed.insert([r.rank_pairing, r.chern_pairing]);
                    }
                    per_mu.push(pairing_to_json(&r));
                }
                Err(e) => {
                    suites
                        .entry("pairing".to_string())
                        .or_insert_with(|| SuiteJson {
                            status: "fail".to_string(),
                            cases: 0,
                            failures: Vec::new(),
                        })
                        .failures
                        .push(format!("pairing table entry mu={mu}: {e}"));
                }
            }
        }
    }
    per_mu.sort_by_key(|p| (p.mu, p.side.clone()));

    Ok(RunReport {
        version: VERSION.to_string(),
        config: ConfigJson {
            mu_min: config.mu_min,
            mu_max: config.mu_max,
            checks: config.checks.iter().map(|c| c.name().to_string()).collect(),
            q_numeric: config.q_numeric.as_ref().map(|q| q.to_string()),
            seed: config.seed,
        },
        per_mu,
        observed_pairs: observed.into_iter().collect(),
        suites,
        timing_ms: if config.timing { Some(timing) } else { None },
    })
}

pub fn render_report_text(report: &RunReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("qhopf verify (version {})\n\n", report.version));
    out.push_str("  mu  side    rank  chern\n");
    for p in &report.per_mu {
        out.push_str(&format!(
            "{:>4}  {:<6}  {:>4}  {:>5}\n",
            p.mu, p.side, p.rank, p.chern
        ));
    }
    out.push_str("\nobserved (rank, chern) pairs: ");
    let pairs: Vec<String> = report
        .observed_pairs
        .iter()
        .map(|p| format!("({}, {})", p[0], p[1]))
        .collect();
    out.push_str(&pairs.join(" "));
    out.push('\n');
    out.push('\n');
    for (name, suite) in &report.suites {
        out.push_str(&format!(
            "check {:<14} {} ({} cases)\n",
            name, suite.status, suite.cases
        ));
        for f in &suite.failures {
            out.push_str(&format!("  failure: {f}\n"));
        }
    }
    if let Some(t) = &report.timing_ms {
        out.push('\n');
        for (name, ms) in t {
            out.push_str(&format!("timing {name}: {ms} ms\n"));
        }
    }
    out.push_str(&format!(
        "\noverall: {}\n",
        if report.all_pass() { "pass" } else { "fail" }
    ));
    out
}

pub fn render_projector_text(m: &crate::bundles::ProjMatrix) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{}_{} ({}x{})\n",
        if m.side == Side::Left { "e" } else { "f" },
        m.mu,
        m.dim(),
        m.dim()
    ));
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            out.push_str(&format!("[{i}][{j}] = {}\n", m.entry(i, j).rendered()));
        }
    }
    out
}

pub fn projector_json(m: &crate::bundles::ProjMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = m
        .rows()
        .iter()
        .map(|row| row.iter().map(|e| e.rendered()).collect())
        .collect();
    serde_json::json!({
        "mu": m.mu,
        "side": m.side.as_str(),
        "dim": m.dim(),
        "entries": rows,
    })
}

pub fn pairing_json_value(r: &bundles::PairingReport) -> serde_json::Value {
    serde_json::to_value(pairing_to_json(r)).unwrap()
}

pub fn render_pairing_text(r: &bundles::PairingReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "mu = {}, side = {}\nrank pairing (tau0):  {}\nchern pairing (tau1): {}\n",
        r.mu,
        r.side.as_str(),
        r.rank_pairing,
        r.chern_pairing
    ));
    if !r.per_degree_terms.is_empty() {
        out.push_str("per-degree terms:\n");
        for (d, v) in &r.per_degree_terms {
            out.push_str(&format!("  m={d}: {v}\n"));
        }
    }
    out
}
