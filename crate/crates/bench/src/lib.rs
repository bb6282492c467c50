//! Fixed inputs shared by the benchmarks.

use weylcent_core::{parse, Prime, PrimeField, QWeyl, Rationals, WeylElement};

pub fn rational(text: &str) -> QWeyl {
    parse(text, 1, &Rationals).expect("valid operator")
}

pub fn modular(text: &str, p: u64) -> WeylElement<PrimeField> {
    let field = PrimeField::new(Prime::new(p).expect("prime"));
    parse(text, 1, &field).expect("valid operator")
}

/// Dixmier's commuting pair `(H^2 + 2x, H^3 + 3/2 (xH + Hx))`, `H = d^2 + x^3`.
pub fn dixmier_pair() -> (QWeyl, QWeyl) {
    (rational("(d^2 + x^3)^2 + 2*x"), rational("(d^2 + x^3)^3 + 3/2*(x*(d^2 + x^3) + (d^2 + x^3)*x)"))
}
