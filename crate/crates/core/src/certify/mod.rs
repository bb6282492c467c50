//! Commutation certificates for operators over `Q` by reduction modulo primes.
//!
//! After clearing denominators, `Pint = lambda P` and `Qint = mu Q` have
//! integer coefficients and every coefficient of `[Pint, Qint] = lambda mu [P, Q]`
//! is bounded in absolute value by the majorant `B` (see [`majorant_bound`]).
//! If `[P_p, Q_p] = 0` in `A_1(F_p)` for good primes whose product exceeds
//! `2B`, every such coefficient is an integer in `(-B, B)` divisible by that
//! product, hence zero. A single good prime with `[P_p, Q_p] != 0` refutes
//! commutation outright, since reduction is a ring homomorphism.
//!
//! [`theorem_pipeline`] runs the same loop with the primes restricted by the
//! unit `u = n! * prod(top coefficients of a)` and records, per prime, that
//! `a_p` keeps its total degree, is noncentral and commutes with `P_p`, `Q_p`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{factorial, lcm_denominators, primes_from, serialize_bigint, Prime, Rational};
use crate::domain::Rationals;
use crate::error::{Error, Result};
use crate::weyl::{Degree, QWeyl};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Commute,
    NotCommute,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Commute => "COMMUTE",
            Verdict::NotCommute => "NOT_COMMUTE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Also compute `[P, Q]` directly over `Q`.
    pub cross_check: bool,
    /// Give up (INCONCLUSIVE) after this many good primes.
    pub max_primes: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { cross_check: true, max_primes: 64 }
    }
}

/// `lambda P` and `mu Q` with integer coefficients, `lambda`, `mu` minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClearedPair {
    pub p_int: QWeyl,
    pub q_int: QWeyl,
    pub lambda: BigInt,
    pub mu: BigInt,
}

impl ClearedPair {
    pub fn new(p: &QWeyl, q: &QWeyl) -> Self {
        let (p_int, lambda) = clear_denominators(p);
        let (q_int, mu) = clear_denominators(q);
        ClearedPair { p_int, q_int, lambda, mu }
    }
}

/// Multiplies by the lcm of the coefficient denominators.
pub fn clear_denominators(a: &QWeyl) -> (QWeyl, BigInt) {
    let lambda = lcm_denominators(a.terms().map(|(_, c)| c));
    (a.scale(&Rational::from_integer(lambda.clone())), lambda)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SkipReason {
    #[serde(rename = "divides u")]
    DividesU,
    #[serde(rename = "divides a denominator")]
    DividesDenominator,
}

impl std::fmt::Display for SkipReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SkipReason::DividesU => "divides u",
            SkipReason::DividesDenominator => "divides a denominator",
        })
    }
}

/// Good primes for `a`: those dividing neither `u` nor the denominator factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodPrimeFilter {
    /// Total degree of `a`.
    pub n: u32,
    #[serde(serialize_with = "serialize_bigint")]
    pub factorial: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub u: BigInt,
    /// Product of the denominator-clearing factors in play.
    #[serde(serialize_with = "serialize_bigint")]
    pub extra: BigInt,
}

impl GoodPrimeFilter {
    pub fn with_extra(mut self, factor: &BigInt) -> Self {
        self.extra *= factor;
        self
    }

    pub fn classify(&self, p: Prime) -> Option<SkipReason> {
        if p.divides(&self.u) {
            Some(SkipReason::DividesU)
        } else if p.divides(&self.extra) {
            Some(SkipReason::DividesDenominator)
        } else {
            None
        }
    }

    pub fn is_good(&self, p: Prime) -> bool {
        self.classify(p).is_none()
    }
}

/// `u = n! * prod` of the nonzero top-degree coefficients of `a` after clearing
/// denominators, with `n = tot(a)`.
pub fn compute_u(a: &QWeyl) -> Result<GoodPrimeFilter> {
    let n = match a.total_degree() {
        Degree::Finite(n) if n >= 1 => n,
        _ => return Err(Error::ConstantOperator),
    };
    let (cleared, lambda) = clear_denominators(a);
    let top = cleared.leading_form()?;
    let fact = factorial(n);
    let u = top.terms().fold(fact.clone(), |acc, (_, c)| acc * c.to_integer());
    Ok(GoodPrimeFilter { n, factorial: fact, u, extra: lambda })
}

fn abs_coefficients(a: &QWeyl) -> QWeyl {
    a.try_map_coefficients(Rationals, |_, c| Ok(c.abs())).expect("infallible")
}

/// Largest coefficient of `|P| * |Q| + |Q| * |P|`, which bounds every
/// coefficient of `[P, Q]`: the normal-ordering constants are nonnegative, so
/// each coefficient of `PQ` (resp. `QP`) is at most the matching coefficient
/// of `|P||Q|` (resp. `|Q||P|`) in absolute value.
pub fn majorant_bound(p_int: &QWeyl, q_int: &QWeyl) -> BigInt {
    let (ap, aq) = (abs_coefficients(p_int), abs_coefficients(q_int));
    let sum = &(&ap * &aq) + &(&aq * &ap);
    sum.terms().map(|(_, c)| c.ceil().to_integer()).max().unwrap_or_else(BigInt::zero)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeCheck {
    pub p: Prime,
    pub commutator_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedPrime {
    pub p: Prime,
    pub reason: SkipReason,
}

/// Per-prime record of the pipeline checks on `a_p`, `P_p`, `Q_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub p: Prime,
    pub total_degree: Degree,
    pub degree_prime_to_p: bool,
    pub a_central: bool,
    pub a_commutes_with_p: bool,
    pub a_commutes_with_q: bool,
    pub p_commutes_with_q: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub commutator: String,
    pub is_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(serialize_with = "serialize_opt_bigint")]
    pub majorant_bound: Option<BigInt>,
    #[serde(serialize_with = "serialize_bigint")]
    pub prime_product: BigInt,
    pub primes_used: Vec<PrimeCheck>,
    pub skipped_primes: Vec<SkippedPrime>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<GoodPrimeFilter>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceEntry>,
    pub cross_check: Option<CrossCheck>,
}

fn serialize_opt_bigint<S: serde::Serializer>(n: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_str(&n.to_string()),
        None => s.serialize_none(),
    }
}

impl CertificateReport {
    fn inconclusive(reason: String, cross_check: Option<CrossCheck>) -> Self {
        CertificateReport {
            verdict: Verdict::Inconclusive,
            reason: Some(reason),
            majorant_bound: None,
            prime_product: BigInt::one(),
            primes_used: Vec::new(),
            skipped_primes: Vec::new(),
            filter: None,
            trace: Vec::new(),
            cross_check,
        }
    }
}

fn require_univariate(elems: &[&QWeyl]) -> Result<()> {
    match elems.iter().find(|e| e.nvars() != 1) {
        Some(e) => Err(Error::NotUnivariate(e.nvars())),
        None => Ok(()),
    }
}

fn cross_check(p: &QWeyl, q: &QWeyl, enabled: bool) -> Result<Option<CrossCheck>> {
    if !enabled {
        return Ok(None);
    }
    let c = p.commutator(q)?;
    Ok(Some(CrossCheck { is_zero: c.is_zero(), commutator: c.to_string() }))
}

/// Streams primes smallest-first, skipping those `skip` rejects, until the
/// product of passing primes exceeds `2B`, a prime fails, or the cap is hit.
fn prime_loop(
    p: &QWeyl,
    q: &QWeyl,
    bound: BigInt,
    opts: &CertifyOptions,
    skip: impl Fn(Prime) -> Option<SkipReason>,
    mut extra_checks: impl FnMut(Prime) -> Result<Option<TraceEntry>>,
) -> Result<CertificateReport> {
    let target = &bound * 2;
    let mut report = CertificateReport {
        verdict: Verdict::Inconclusive,
        reason: None,
        majorant_bound: Some(bound),
        prime_product: BigInt::one(),
        primes_used: Vec::new(),
        skipped_primes: Vec::new(),
        filter: None,
        trace: Vec::new(),
        cross_check: None,
    };
    for prime in primes_from(2) {
        if report.primes_used.len() >= opts.max_primes {
            report.reason = Some(format!(
                "prime cap {} reached: product {} does not exceed 2B = {}",
                opts.max_primes, report.prime_product, target
            ));
            return Ok(report);
        }
        if let Some(reason) = skip(prime) {
            report.skipped_primes.push(SkippedPrime { p: prime, reason });
            continue;
        }
        let (pp, qp) = (p.reduce_mod(prime)?, q.reduce_mod(prime)?);
        let zero = pp.commutator(&qp)?.is_zero();
        if let Some(entry) = extra_checks(prime)? {
            report.trace.push(entry);
        }
        report.primes_used.push(PrimeCheck { p: prime, commutator_zero: zero });
        if !zero {
            report.verdict = Verdict::NotCommute;
            return Ok(report);
        }
        report.prime_product *= prime.get();
        if report.prime_product > target {
            report.verdict = Verdict::Commute;
            return Ok(report);
        }
    }
    unreachable!("the prime stream is unbounded")
}

/// Decides whether `[P, Q] = 0` in `A_1(Q)` from reductions modulo primes.
pub fn certify_zero_commutator(p: &QWeyl, q: &QWeyl, opts: &CertifyOptions) -> Result<CertificateReport> {
    require_univariate(&[p, q])?;
    let cleared = ClearedPair::new(p, q);
    let bound = majorant_bound(&cleared.p_int, &cleared.q_int);
    let denominators = &cleared.lambda * &cleared.mu;
    let mut report = prime_loop(
        p,
        q,
        bound,
        opts,
        |prime| prime.divides(&denominators).then_some(SkipReason::DividesDenominator),
        |_| Ok(None),
    )?;
    report.cross_check = cross_check(p, q, opts.cross_check)?;
    Ok(report)
}

/// Runs the reduction argument for a nonconstant `a` and operators `P`, `Q`
/// commuting with it.
///
/// Hypotheses are checked exactly over `Q`; if one fails the verdict is
/// INCONCLUSIVE and names it. Otherwise only primes not dividing `u` (nor any
/// denominator) are used, and each records the trace of per-prime checks.
pub fn theorem_pipeline(a: &QWeyl, p: &QWeyl, q: &QWeyl, opts: &CertifyOptions) -> Result<CertificateReport> {
    require_univariate(&[a, p, q])?;
    let check = cross_check(p, q, opts.cross_check)?;
    if a.total_degree() < Degree::Finite(1) {
        return Ok(CertificateReport::inconclusive("hypothesis failed: a is constant".into(), check));
    }
    for (name, other) in [("P", p), ("Q", q)] {
        if !a.commutator(other)?.is_zero() {
            return Ok(CertificateReport::inconclusive(format!("hypothesis failed: [a, {name}] != 0"), check));
        }
    }
    let cleared = ClearedPair::new(p, q);
    let filter = compute_u(a)?.with_extra(&(&cleared.lambda * &cleared.mu));
    let bound = majorant_bound(&cleared.p_int, &cleared.q_int);
    let mut report = prime_loop(
        p,
        q,
        bound,
        opts,
        |prime| filter.classify(prime),
        |prime| {
            let ap = a.reduce_mod(prime)?;
            let (pp, qp) = (p.reduce_mod(prime)?, q.reduce_mod(prime)?);
            let total_degree = ap.total_degree();
            Ok(Some(TraceEntry {
                p: prime,
                total_degree,
                degree_prime_to_p: total_degree.finite().is_some_and(|d| u64::from(d) % prime.get() != 0),
                a_central: ap.is_central(),
                a_commutes_with_p: ap.commutator(&pp)?.is_zero(),
                a_commutes_with_q: ap.commutator(&qp)?.is_zero(),
                p_commutes_with_q: pp.commutator(&qp)?.is_zero(),
            }))
        },
    )?;
    report.filter = Some(filter);
    report.cross_check = check;
    Ok(report)
}
