//! Normal ordering of monomial products.
//!
//! In each coordinate, `d^a x^b = sum_k k! C(a,k) C(b,k) x^(b-k) d^(a-k)`.
//! Coordinates with different indices commute, so the product of two
//! normal-ordered monomials expands as the cartesian product of the
//! per-coordinate sums.

use num_bigint::BigInt;

use super::MonomialKey;

/// Integer structure constant, kept on the machine word while it fits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum IntCoeff {
    Small(u128),
    Big(BigInt),
}

impl IntCoeff {
    fn to_big(&self) -> BigInt {
        match self {
            IntCoeff::Small(v) => BigInt::from(*v),
            IntCoeff::Big(v) => v.clone(),
        }
    }

    fn mul(&self, other: &IntCoeff) -> IntCoeff {
        if let (IntCoeff::Small(a), IntCoeff::Small(b)) = (self, other) {
            if let Some(c) = a.checked_mul(*b) {
                return IntCoeff::Small(c);
            }
        }
        IntCoeff::Big(self.to_big() * other.to_big())
    }
}

/// `k! * C(a,k) * C(b,k)`, i.e. the falling factorial `a^(k)` times `C(b,k)`.
pub(crate) fn ordering_coefficient(a: u32, b: u32, k: u32) -> IntCoeff {
    debug_assert!(k <= a && k <= b);
    small_ordering_coefficient(a, b, k)
        .map(IntCoeff::Small)
        .unwrap_or_else(|| IntCoeff::Big(big_ordering_coefficient(a, b, k)))
}

fn small_ordering_coefficient(a: u32, b: u32, k: u32) -> Option<u128> {
    let mut falling: u128 = 1;
    for i in 0..k {
        falling = falling.checked_mul((a - i) as u128)?;
    }
    let mut binom: u128 = 1;
    for i in 0..k {
        binom = binom.checked_mul((b - i) as u128)? / (i as u128 + 1);
    }
    falling.checked_mul(binom)
}

fn big_ordering_coefficient(a: u32, b: u32, k: u32) -> BigInt {
    let mut falling = BigInt::from(1);
    for i in 0..k {
        falling *= a - i;
    }
    let mut binom = BigInt::from(1);
    for i in 0..k {
        binom = binom * (b - i) / (i + 1);
    }
    falling * binom
}

/// Expands `(x^i1 d^j1) * (x^i2 d^j2)` into normal-ordered monomials with
/// integer coefficients. Keys must have equal length.
pub(crate) fn expand_product(m1: &MonomialKey, m2: &MonomialKey) -> Vec<(MonomialKey, IntCoeff)> {
    let n = m1.nvars();
    debug_assert_eq!(n, m2.nvars());
    let mut acc: Vec<(Vec<u32>, Vec<u32>, IntCoeff)> =
        vec![(Vec::with_capacity(n), Vec::with_capacity(n), IntCoeff::Small(1))];
    for t in 0..n {
        let a = m1.dexp[t];
        let b = m2.xexp[t];
        let (xi, dj) = (m1.xexp[t], m2.dexp[t]);
        let kmax = a.min(b);
        if kmax == 0 {
            for (xs, ds, _) in acc.iter_mut() {
                xs.push(xi + b);
                ds.push(a + dj);
            }
            continue;
        }
        let factors: Vec<IntCoeff> = (0..=kmax).map(|k| ordering_coefficient(a, b, k)).collect();
        let mut next = Vec::with_capacity(acc.len() * factors.len());
        for (xs, ds, c) in &acc {
            for (k, f) in factors.iter().enumerate() {
                let k = k as u32;
                let mut xs = xs.clone();
                let mut ds = ds.clone();
                xs.push(xi + b - k);
                ds.push(a - k + dj);
                next.push((xs, ds, c.mul(f)));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(xs, ds, c)| (MonomialKey { xexp: xs, dexp: ds }, c)).collect()
}

impl IntCoeff {
    pub(crate) fn into_domain<D: crate::domain::CoeffDomain>(self, domain: &D) -> D::Elem {
        match self {
            IntCoeff::Small(v) => domain.from_u128(v),
            IntCoeff::Big(v) => domain.from_bigint(&v),
        }
    }
}
