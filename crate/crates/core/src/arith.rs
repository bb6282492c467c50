//! Exact coefficient arithmetic: rationals, prime fields and prime enumeration.
//!
//! Big integers and rationals come from `num-bigint` / `num-rational`; the
//! prime field arithmetic and the primality test are implemented here on
//! machine words.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// A prime number that fits in a machine word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces a big integer into `[0, p)`.
    pub fn reduce(self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.0));
        r.to_u64().expect("residue fits in u64")
    }

    pub fn divides(self, n: &BigInt) -> bool {
        (n % BigInt::from(self.0)).is_zero()
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.0)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are enough for
/// every `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Iterator over the primes `>= start` in increasing order.
#[derive(Debug, Clone)]
pub struct PrimeStream {
    next: u64,
}

impl Iterator for PrimeStream {
    type Item = Prime;

    fn next(&mut self) -> Option<Prime> {
        while self.next < u64::MAX {
            let n = self.next;
            self.next += 1;
            if is_prime(n) {
                return Some(Prime(n));
            }
        }
        None
    }
}

pub fn primes_from(start: u64) -> PrimeStream {
    PrimeStream { next: start.max(2) }
}

/// An element of the prime field `F_p`, stored as its least nonnegative residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElem {
    value: u64,
    modulus: Prime,
}

impl FpElem {
    pub fn new(value: u64, modulus: Prime) -> Self {
        FpElem { value: value % modulus.0, modulus }
    }

    pub fn from_bigint(n: &BigInt, modulus: Prime) -> Self {
        FpElem { value: modulus.reduce(n), modulus }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        FpElem { value: pow_mod(self.value, exp, self.modulus.0), modulus: self.modulus }
    }

    pub fn inv(self) -> Result<Self> {
        fp_inv(self)
    }
}

/// Multiplicative inverse in `F_p` via the extended Euclidean algorithm.
pub fn fp_inv(a: FpElem) -> Result<FpElem> {
    if a.value == 0 {
        return Err(Error::ZeroInverse);
    }
    let p = a.modulus.0 as i128;
    let (mut r0, mut r1) = (p, a.value as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(FpElem { value: t0.rem_euclid(p) as u64, modulus: a.modulus })
}

impl Add for FpElem {
    type Output = FpElem;
    fn add(self, rhs: FpElem) -> FpElem {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.0;
        let s = self.value as u128 + rhs.value as u128;
        FpElem { value: (s % p as u128) as u64, modulus: self.modulus }
    }
}

impl Sub for FpElem {
    type Output = FpElem;
    fn sub(self, rhs: FpElem) -> FpElem {
        self + (-rhs)
    }
}

impl Neg for FpElem {
    type Output = FpElem;
    fn neg(self) -> FpElem {
        let value = if self.value == 0 { 0 } else { self.modulus.0 - self.value };
        FpElem { value, modulus: self.modulus }
    }
}

impl Mul for FpElem {
    type Output = FpElem;
    fn mul(self, rhs: FpElem) -> FpElem {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FpElem { value: mul_mod(self.value, rhs.value, self.modulus.0), modulus: self.modulus }
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Image of `r` in `F_p`; fails when `p` divides the denominator.
pub fn rational_mod_p(r: &Rational, p: Prime) -> Result<FpElem> {
    if p.divides(r.denom()) {
        return Err(Error::BadPrime { p: p.get(), coefficient: r.to_string(), location: String::new() });
    }
    let num = FpElem::from_bigint(r.numer(), p);
    let den = FpElem::from_bigint(r.denom(), p);
    Ok(num * den.inv()?)
}

/// Least common multiple of the denominators of `values` (1 for an empty input).
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::from(1), |acc, r| acc.lcm(r.denom()))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

pub(crate) fn serialize_bigint<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}
