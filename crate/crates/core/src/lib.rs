//! Exact arithmetic in Weyl algebras `A_n(Q)` and `A_n(F_p)`.
//!
//! The crate provides:
//!
//! * normal-form arithmetic for polynomial differential operators
//!   ([`WeylElement`]), with total degree, centrality and reduction mod `p`;
//! * the decomposition of `A_1(F_p)` as a free module of rank `p^2` over its
//!   center ([`decompose_over_center`]);
//! * degree-truncated centralizers in positive characteristic, with a
//!   commutativity check and fraction-field witnesses ([`centralizer`]);
//! * a certifier that decides whether two operators over `Q` commute by
//!   checking the commutator modulo enough good primes ([`certify`]);
//! * a text format for operators ([`parser`]).
//!
//! ```
//! use weylcent_core::{parse, Rationals};
//!
//! let a = parse("d^3", 1, &Rationals).unwrap();
//! let b = parse("x^2", 1, &Rationals).unwrap();
//! assert_eq!((&a * &b).to_string(), "x^2*d^3 + 6*x*d^2 + 6*d");
//! ```

pub mod arith;
pub mod centralizer;
pub mod certify;
pub mod domain;
pub mod error;
pub mod linalg;
pub mod parser;
pub mod sample;
pub mod weyl;

pub use arith::{fp_inv, primes_from, rational_mod_p, FpElem, Prime, Rational};
pub use centralizer::{
    centralizer_basis, fraction_witness, pairwise_commute, za_span, CentralizerBasis, FractionWitness,
};
pub use certify::{
    certify_zero_commutator, clear_denominators, compute_u, majorant_bound, theorem_pipeline, CertificateReport,
    CertifyOptions, GoodPrimeFilter, Verdict,
};
pub use domain::{CoeffDomain, PrimeField, Rationals};
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use parser::{parse, print, ParseError};
pub use weyl::{
    commutator, decompose_over_center, monomial_mul, reduce_mod_p, CenterDecomposition, Degree, FpWeyl, MonomialKey,
    QWeyl, WeylElement,
};
