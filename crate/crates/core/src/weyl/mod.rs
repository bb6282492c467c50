//! Sparse normal-form elements of the Weyl algebra `A_n(R)`, `R = Q` or `F_p`.
//!
//! Every element is stored as a map from normal-ordered monomials
//! `x^i d^j` (all `x` to the left of all `d`) to nonzero coefficients.
//! The map is ordered graded-lexicographically: total degree first, then
//! the `x` exponents, then the `d` exponents.

mod center;
mod ordering;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::arith::{rational_mod_p, Prime};
use crate::domain::{CoeffDomain, PrimeField, Rationals};
use crate::error::{Error, Result};

pub use center::{decompose_over_center, CenterDecomposition};

/// Exponent vectors of a normal-ordered monomial `x^xexp d^dexp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialKey {
    pub(crate) xexp: Vec<u32>,
    pub(crate) dexp: Vec<u32>,
}

impl MonomialKey {
    pub fn new(xexp: Vec<u32>, dexp: Vec<u32>) -> Result<Self> {
        if xexp.len() != dexp.len() {
            return Err(Error::KeyLength { expected: xexp.len(), got: dexp.len() });
        }
        Ok(MonomialKey { xexp, dexp })
    }

    /// The monomial `1` in `n` variables.
    pub fn unit(nvars: usize) -> Self {
        MonomialKey { xexp: vec![0; nvars], dexp: vec![0; nvars] }
    }

    /// Convenience constructor for one variable: `x^i d^j`.
    pub fn univariate(i: u32, j: u32) -> Self {
        MonomialKey { xexp: vec![i], dexp: vec![j] }
    }

    pub fn nvars(&self) -> usize {
        self.xexp.len()
    }

    pub fn xexp(&self) -> &[u32] {
        &self.xexp
    }

    pub fn dexp(&self) -> &[u32] {
        &self.dexp
    }

    pub fn total_degree(&self) -> u32 {
        self.xexp.iter().chain(&self.dexp).sum()
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.xexp.iter().chain(&self.dexp).copied()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents().all(|e| e == 0)
    }

    /// All monomials in `nvars` variables of total degree `<= bound`, ascending.
    pub fn all_up_to_degree(nvars: usize, bound: u32) -> Vec<MonomialKey> {
        fn fill(slots: usize, budget: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if current.len() == slots {
                out.push(current.clone());
                return;
            }
            for e in 0..=budget {
                current.push(e);
                fill(slots, budget - e, current, out);
                current.pop();
            }
        }
        let mut raw = Vec::new();
        fill(2 * nvars, bound, &mut Vec::new(), &mut raw);
        let mut keys: Vec<MonomialKey> = raw
            .into_iter()
            .map(|mut v| {
                let dexp = v.split_off(nvars);
                MonomialKey { xexp: v, dexp }
            })
            .collect();
        keys.sort();
        keys
    }
}

impl Ord for MonomialKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.xexp.cmp(&other.xexp))
            .then_with(|| self.dexp.cmp(&other.dexp))
    }
}

impl PartialOrd for MonomialKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree of an element; the zero element sits below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => d.fmt(f),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => s.serialize_none(),
            Degree::Finite(d) => s.serialize_u32(*d),
        }
    }
}

/// An element of `A_n(R)` in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement<D: CoeffDomain> {
    domain: D,
    nvars: usize,
    terms: BTreeMap<MonomialKey, D::Elem>,
}

pub type QWeyl = WeylElement<Rationals>;
pub type FpWeyl = WeylElement<PrimeField>;

impl<D: CoeffDomain> WeylElement<D> {
    pub fn zero(domain: D, nvars: usize) -> Self {
        WeylElement { domain, nvars, terms: BTreeMap::new() }
    }

    pub fn one(domain: D, nvars: usize) -> Self {
        let c = domain.one();
        Self::constant(domain, nvars, c)
    }

    pub fn constant(domain: D, nvars: usize, c: D::Elem) -> Self {
        Self::monomial(domain, MonomialKey::unit(nvars), c)
    }

    /// `c * key`. Zero coefficients give the zero element.
    pub fn monomial(domain: D, key: MonomialKey, c: D::Elem) -> Self {
        let nvars = key.nvars();
        let mut terms = BTreeMap::new();
        if !domain.is_zero(&c) {
            terms.insert(key, c);
        }
        WeylElement { domain, nvars, terms }
    }

    /// The coordinate `x_i` (0-based).
    pub fn x(domain: D, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut key = MonomialKey::unit(nvars);
        key.xexp[i] = 1;
        let one = domain.one();
        Self::monomial(domain, key, one)
    }

    /// The derivation `d_i` (0-based).
    pub fn d(domain: D, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut key = MonomialKey::unit(nvars);
        key.dexp[i] = 1;
        let one = domain.one();
        Self::monomial(domain, key, one)
    }

    /// Builds an element from (monomial, coefficient) pairs; repeated keys are summed.
    pub fn from_terms(
        domain: D,
        nvars: usize,
        terms: impl IntoIterator<Item = (MonomialKey, D::Elem)>,
    ) -> Result<Self> {
        let mut out = Self::zero(domain, nvars);
        for (key, c) in terms {
            if key.nvars() != nvars {
                return Err(Error::KeyLength { expected: nvars, got: key.nvars() });
            }
            out.add_term(key, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, key: MonomialKey, c: D::Elem) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                if !self.domain.is_zero(&c) {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let s = self.domain.add(e.get(), &c);
                if self.domain.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MonomialKey, &D::Elem)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &MonomialKey) -> D::Elem {
        self.terms.get(key).cloned().unwrap_or_else(|| self.domain.zero())
    }

    pub fn leading_monomial(&self) -> Option<&MonomialKey> {
        self.terms.keys().next_back()
    }

    pub fn leading_term(&self) -> Option<(&MonomialKey, &D::Elem)> {
        self.terms.iter().next_back()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { left: self.nvars, right: other.nvars });
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch { left: self.domain.to_string(), right: other.domain.to_string() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), self.domain.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let dom = &self.domain;
        let mut out = Self::zero(dom.clone(), self.nvars);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let c12 = dom.mul(c1, c2);
                for (key, ic) in ordering::expand_product(k1, k2) {
                    let c = dom.mul(&c12, &ic.into_domain(dom));
                    out.add_term(key, c);
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let ab = self.checked_mul(other)?;
        let ba = other.checked_mul(self)?;
        ab.checked_sub(&ba)
    }

    pub fn scale(&self, c: &D::Elem) -> Self {
        if self.domain.is_zero(c) {
            return Self::zero(self.domain.clone(), self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.domain.mul(v, c);
        }
        out
    }

    /// Scales so that the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.domain.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.domain.clone(), self.nvars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Degree {
        self.terms.keys().map(MonomialKey::total_degree).max().map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// The homogeneous component of top total degree.
    pub fn leading_form(&self) -> Result<Self> {
        let top = self.total_degree().finite().ok_or(Error::ZeroElement)?;
        let terms = self.terms.iter().filter(|(k, _)| k.total_degree() == top).map(|(k, c)| (k.clone(), c.clone()));
        Ok(WeylElement { domain: self.domain.clone(), nvars: self.nvars, terms: terms.collect() })
    }

    /// Every stored exponent is divisible by the characteristic (for `Q`:
    /// every exponent is zero, i.e. the element is a constant).
    pub fn exponents_divisible_by_characteristic(&self) -> bool {
        let p = self.domain.characteristic();
        self.terms.keys().flat_map(MonomialKey::exponents).all(|e| if p == 0 { e == 0 } else { u64::from(e) % p == 0 })
    }

    /// Commutes with all `2n` generators `x_i`, `d_i`.
    pub fn commutes_with_generators(&self) -> bool {
        (0..self.nvars).all(|i| {
            let x = Self::x(self.domain.clone(), self.nvars, i);
            let d = Self::d(self.domain.clone(), self.nvars, i);
            self.commutator(&x).expect("same algebra").is_zero() && self.commutator(&d).expect("same algebra").is_zero()
        })
    }

    pub fn is_central(&self) -> bool {
        let by_exponents = self.exponents_divisible_by_characteristic();
        debug_assert_eq!(by_exponents, self.commutes_with_generators());
        by_exponents
    }

    /// Converts coefficients into another domain, dropping zeros.
    pub fn try_map_coefficients<E: CoeffDomain>(
        &self,
        target: E,
        mut f: impl FnMut(&MonomialKey, &D::Elem) -> Result<E::Elem>,
    ) -> Result<WeylElement<E>> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = f(k, c)?;
            if !target.is_zero(&v) {
                terms.insert(k.clone(), v);
            }
        }
        Ok(WeylElement { domain: target, nvars: self.nvars, terms })
    }
}

impl WeylElement<Rationals> {
    /// Coefficientwise image in `A_n(F_p)`.
    pub fn reduce_mod(&self, p: Prime) -> Result<WeylElement<PrimeField>> {
        self.try_map_coefficients(PrimeField::new(p), |key, c| {
            rational_mod_p(c, p).map_err(|_| Error::BadPrime {
                p: p.get(),
                coefficient: c.to_string(),
                location: format!(" on monomial {}", crate::parser::format_monomial(key, self.nvars)),
            })
        })
    }
}

pub fn reduce_mod_p(a: &QWeyl, p: Prime) -> Result<FpWeyl> {
    a.reduce_mod(p)
}

/// Normal form of `m1 * m2` over `domain`.
pub fn monomial_mul<D: CoeffDomain>(m1: &MonomialKey, m2: &MonomialKey, domain: &D) -> Result<WeylElement<D>> {
    if m1.nvars() != m2.nvars() {
        return Err(Error::DimensionMismatch { left: m1.nvars(), right: m2.nvars() });
    }
    WeylElement::from_terms(
        domain.clone(),
        m1.nvars(),
        ordering::expand_product(m1, m2).into_iter().map(|(k, c)| (k, c.into_domain(domain))),
    )
}

pub fn commutator<D: CoeffDomain>(a: &WeylElement<D>, b: &WeylElement<D>) -> Result<WeylElement<D>> {
    a.commutator(b)
}

impl<D: CoeffDomain> fmt::Debug for WeylElement<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement[{}; n={}]({})", self.domain, self.nvars, self)
    }
}

impl<D: CoeffDomain> Add for &WeylElement<D> {
    type Output = WeylElement<D>;
    fn add(self, rhs: Self) -> WeylElement<D> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<D: CoeffDomain> Sub for &WeylElement<D> {
    type Output = WeylElement<D>;
    fn sub(self, rhs: Self) -> WeylElement<D> {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<D: CoeffDomain> Mul for &WeylElement<D> {
    type Output = WeylElement<D>;
    fn mul(self, rhs: Self) -> WeylElement<D> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<D: CoeffDomain> Neg for &WeylElement<D> {
    type Output = WeylElement<D>;
    fn neg(self) -> WeylElement<D> {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.domain.neg(v);
        }
        out
    }
}
