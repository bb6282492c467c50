//! Seeded random elements for property tests and benchmarks.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::Rational;
use crate::domain::{CoeffDomain, PrimeField, Rationals};
use crate::weyl::{MonomialKey, WeylElement};

/// Total degree uniform in `0..=max_degree`, spread uniformly over the `2n` exponents.
pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, nvars: usize, max_degree: u32) -> MonomialKey {
    let mut exps = vec![0u32; 2 * nvars];
    for _ in 0..rng.gen_range(0..=max_degree) {
        exps[rng.gen_range(0..2 * nvars)] += 1;
    }
    let dexp = exps.split_off(nvars);
    MonomialKey::new(exps, dexp).expect("equal lengths")
}

/// Up to `max_terms` monomials with coefficients drawn from `pool`.
pub fn random_from_pool<D: CoeffDomain, R: Rng + ?Sized>(
    rng: &mut R,
    domain: &D,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
    pool: &[D::Elem],
) -> WeylElement<D> {
    let nterms = rng.gen_range(0..=max_terms);
    let terms = (0..nterms).map(|_| {
        let key = random_monomial(rng, nvars, max_degree);
        let c = pool.choose(rng).expect("nonempty pool").clone();
        (key, c)
    });
    let terms: Vec<_> = terms.collect();
    WeylElement::from_terms(domain.clone(), nvars, terms).expect("matching key length")
}

/// Integer coefficients in `-4..=4` mapped into `domain`.
pub fn random_element<D: CoeffDomain, R: Rng + ?Sized>(
    rng: &mut R,
    domain: &D,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> WeylElement<D> {
    let pool: Vec<D::Elem> = (-4..=4).map(|v| domain.from_bigint(&BigInt::from(v))).collect();
    random_from_pool(rng, domain, nvars, max_degree, max_terms, &pool)
}

/// Coefficients from `{-3..3} ∪ {±1/2}`.
pub fn rational_pool() -> Vec<Rational> {
    let mut pool: Vec<Rational> = (-3..=3).map(|v| Rational::from_integer(BigInt::from(v))).collect();
    pool.push(Rational::new(1.into(), 2.into()));
    pool.push(Rational::new((-1).into(), 2.into()));
    pool
}

pub fn random_rational_element<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> WeylElement<Rationals> {
    random_from_pool(rng, &Rationals, nvars, max_degree, max_terms, &rational_pool())
}

/// Rejection-samples a noncentral element of `A_1(F_p)` with total degree `<= max_degree`.
pub fn random_noncentral<R: Rng + ?Sized>(rng: &mut R, field: &PrimeField, max_degree: u32) -> WeylElement<PrimeField> {
    let pool: Vec<_> = (0..field.characteristic()).map(|v| field.elem(v)).collect();
    loop {
        let a = random_from_pool(rng, field, 1, max_degree, 5, &pool);
        if !a.is_central() {
            return a;
        }
    }
}
