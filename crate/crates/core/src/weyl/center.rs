use std::collections::BTreeMap;

use crate::domain::CoeffDomain;
use crate::error::{Error, Result};

use super::{MonomialKey, WeylElement};

type Terms<D> = Vec<(MonomialKey, <D as CoeffDomain>::Elem)>;

/// `a = sum z_ij * x^i d^j` over `0 <= i, j < p`, each `z_ij` central.
///
/// Only nonzero parts are stored; the decomposition of zero is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterDecomposition<D: CoeffDomain> {
    p: u64,
    parts: BTreeMap<(u32, u32), WeylElement<D>>,
    domain: D,
}

impl<D: CoeffDomain> CenterDecomposition<D> {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Nonzero parts keyed by `(i, j)`, ascending.
    pub fn parts(&self) -> impl Iterator<Item = ((u32, u32), &WeylElement<D>)> {
        self.parts.iter().map(|(k, v)| (*k, v))
    }

    pub fn part(&self, i: u32, j: u32) -> WeylElement<D> {
        self.parts.get(&(i, j)).cloned().unwrap_or_else(|| WeylElement::zero(self.domain.clone(), 1))
    }

    pub fn is_all_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// `sum z_ij * x^i d^j`, multiplied out in the algebra.
    pub fn reconstruct(&self) -> WeylElement<D> {
        let mut out = WeylElement::zero(self.domain.clone(), 1);
        for (&(i, j), z) in &self.parts {
            let basis = WeylElement::monomial(self.domain.clone(), MonomialKey::univariate(i, j), self.domain.one());
            out = &out + &(z * &basis);
        }
        out
    }
}

/// Splits `x^A d^B` as `(x^(p*floor(A/p)) d^(p*floor(B/p))) * x^(A mod p) d^(B mod p)`
/// and groups by `(A mod p, B mod p)`. Since `x^p` and `d^p` are central the
/// product on the right is already in normal form.
pub fn decompose_over_center<D: CoeffDomain>(a: &WeylElement<D>) -> Result<CenterDecomposition<D>> {
    let p = a.domain().characteristic();
    if p == 0 {
        return Err(Error::WrongCharacteristic);
    }
    if a.nvars() != 1 {
        return Err(Error::NotUnivariate(a.nvars()));
    }
    let mut grouped: BTreeMap<(u32, u32), Terms<D>> = BTreeMap::new();
    for (key, c) in a.terms() {
        let (ea, eb) = (u64::from(key.xexp[0]), u64::from(key.dexp[0]));
        let (i, j) = ((ea % p) as u32, (eb % p) as u32);
        let central = MonomialKey::univariate((ea - ea % p) as u32, (eb - eb % p) as u32);
        grouped.entry((i, j)).or_default().push((central, c.clone()));
    }
    let parts = grouped
        .into_iter()
        .map(|(ij, terms)| {
            let z = WeylElement::from_terms(a.domain().clone(), 1, terms).expect("univariate keys");
            (ij, z)
        })
        .collect();
    Ok(CenterDecomposition { p, parts, domain: a.domain().clone() })
}
