//! Coefficient domains for Weyl algebra elements.
//!
//! A domain is a small value describing the coefficient field (`Q`, or `F_p`
//! for a particular `p`) that knows how to do arithmetic on its elements.
//! Integer structure constants from normal ordering are produced over `Z`
//! and mapped in with [`CoeffDomain::from_bigint`] / [`CoeffDomain::from_u128`].

use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{FpElem, Prime, Rational};
use crate::parser::ParseError;

#[allow(clippy::wrong_self_convention)]
pub trait CoeffDomain: Clone + PartialEq + Eq + Debug + Display + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Display + Send + Sync;

    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn from_u128(&self, n: u128) -> Self::Elem;

    /// Whether the printed form carries a minus sign.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// Interprets a literal `num` or `num/den` from operator text.
    fn from_literal(&self, num: &BigInt, den: Option<&BigInt>) -> Result<Self::Elem, ParseError>;
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Display for Rationals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q")
    }
}

impl CoeffDomain for Rationals {
    type Elem = Rational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_bigint(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }
    fn from_u128(&self, n: u128) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }
    fn is_negative(&self, a: &Rational) -> bool {
        a.is_negative()
    }
    fn from_literal(&self, num: &BigInt, den: Option<&BigInt>) -> Result<Rational, ParseError> {
        match den {
            None => Ok(Rational::from_integer(num.clone())),
            Some(d) if d.is_zero() => {
                Err(ParseError::BadLiteral { literal: format!("{num}/{d}"), reason: "zero denominator".into() })
            }
            Some(d) => Ok(Rational::new(num.clone(), d.clone())),
        }
    }
}

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: Prime,
}

impl PrimeField {
    pub fn new(p: Prime) -> Self {
        PrimeField { p }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn elem(&self, value: u64) -> FpElem {
        FpElem::new(value, self.p)
    }
}

impl Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl CoeffDomain for PrimeField {
    type Elem = FpElem;

    fn characteristic(&self) -> u64 {
        self.p.get()
    }
    fn zero(&self) -> FpElem {
        FpElem::new(0, self.p)
    }
    fn one(&self) -> FpElem {
        FpElem::new(1, self.p)
    }
    fn is_zero(&self, a: &FpElem) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &FpElem) -> bool {
        a.value() == 1
    }
    fn add(&self, a: &FpElem, b: &FpElem) -> FpElem {
        *a + *b
    }
    fn sub(&self, a: &FpElem, b: &FpElem) -> FpElem {
        *a - *b
    }
    fn neg(&self, a: &FpElem) -> FpElem {
        -*a
    }
    fn mul(&self, a: &FpElem, b: &FpElem) -> FpElem {
        *a * *b
    }
    fn inv(&self, a: &FpElem) -> Option<FpElem> {
        a.inv().ok()
    }
    fn from_bigint(&self, n: &BigInt) -> FpElem {
        FpElem::from_bigint(n, self.p)
    }
    fn from_u128(&self, n: u128) -> FpElem {
        FpElem::new((n % self.p.get() as u128) as u64, self.p)
    }
    fn from_literal(&self, num: &BigInt, den: Option<&BigInt>) -> Result<FpElem, ParseError> {
        match den {
            None => Ok(FpElem::from_bigint(num, self.p)),
            Some(d) => Err(ParseError::BadLiteral {
                literal: format!("{num}/{d}"),
                reason: format!("fractions are not accepted over F_{}", self.p),
            }),
        }
    }
}
