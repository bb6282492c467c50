//! Degree-truncated centralizers in positive characteristic.
//!
//! The centralizer of `a` meets the span of monomials of total degree `<= D`
//! in the kernel of the linear map `b -> [a, b]`, which lands in monomials of
//! degree `<= D + tot(a)`. The kernel is computed exactly and returned as a
//! reduced echelon basis, so the output is canonical for given `(a, D)`.
//!
//! No completeness claim is made beyond the degree bound.

use std::collections::BTreeMap;

use crate::domain::CoeffDomain;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::weyl::{MonomialKey, WeylElement};

/// Basis of `{b : tot(b) <= D, [a, b] = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerBasis<D: CoeffDomain> {
    pub a: WeylElement<D>,
    pub characteristic: u64,
    pub degree_bound: u32,
    /// Reduced echelon form, ascending by leading monomial.
    pub basis: Vec<WeylElement<D>>,
    pub commutative: bool,
    /// First noncommuting pair in basis order, when `commutative` is false.
    pub witness: Option<(WeylElement<D>, WeylElement<D>)>,
}

impl<D: CoeffDomain> CentralizerBasis<D> {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<MonomialKey> {
        self.basis.iter().map(|b| b.leading_monomial().expect("nonzero basis element").clone()).collect()
    }

    pub fn echelon(&self) -> EchelonBasis<D> {
        EchelonBasis::from_elements(self.a.domain().clone(), self.a.nvars(), &self.basis)
    }

    /// Membership in the span of the basis.
    pub fn contains(&self, e: &WeylElement<D>) -> bool {
        self.echelon().contains(e)
    }
}

/// `b * z2 = z1` with `z1, z2` in the truncated `Z[a]`, exhibiting `b` as a
/// fraction over `Z[a]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionWitness<D: CoeffDomain> {
    pub b: WeylElement<D>,
    pub z1: WeylElement<D>,
    pub z2: WeylElement<D>,
    pub degree_bound: u32,
}

fn element_from_coords<D: CoeffDomain>(
    domain: &D,
    nvars: usize,
    monomials: &[MonomialKey],
    coords: &[D::Elem],
) -> WeylElement<D> {
    let terms = monomials.iter().cloned().zip(coords.iter().cloned());
    WeylElement::from_terms(domain.clone(), nvars, terms).expect("keys match nvars")
}

/// Lays out `columns` as a dense matrix with rows indexed by every monomial
/// that occurs, in graded-lex order.
fn column_matrix<D: CoeffDomain>(domain: &D, columns: &[WeylElement<D>]) -> Matrix<D> {
    let mut row_index: BTreeMap<&MonomialKey, usize> = BTreeMap::new();
    for col in columns {
        for (k, _) in col.terms() {
            row_index.entry(k).or_insert(0);
        }
    }
    for (i, v) in row_index.values_mut().enumerate() {
        *v = i;
    }
    let mut m = Matrix::zeros(domain.clone(), row_index.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (k, c) in col.terms() {
            m.set(row_index[k], j, c.clone());
        }
    }
    m
}

/// First pair `(b_i, b_j)`, `i < j`, with `[b_i, b_j] != 0`; `None` if all commute.
pub fn pairwise_commute<D: CoeffDomain>(basis: &[WeylElement<D>]) -> Result<Option<(WeylElement<D>, WeylElement<D>)>> {
    for (i, bi) in basis.iter().enumerate() {
        for bj in &basis[i + 1..] {
            if !bi.commutator(bj)?.is_zero() {
                return Ok(Some((bi.clone(), bj.clone())));
            }
        }
    }
    Ok(None)
}

pub fn centralizer_basis<D: CoeffDomain>(a: &WeylElement<D>, degree_bound: u32) -> Result<CentralizerBasis<D>> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let domain = a.domain();
    let nvars = a.nvars();
    let sources = MonomialKey::all_up_to_degree(nvars, degree_bound);
    let one = domain.one();
    let images: Vec<WeylElement<D>> = sources
        .iter()
        .map(|m| a.commutator(&WeylElement::monomial(domain.clone(), m.clone(), one.clone())))
        .collect::<Result<_>>()?;
    let matrix = column_matrix(domain, &images);

    let mut echelon = EchelonBasis::new(domain.clone(), nvars);
    for v in matrix.kernel() {
        echelon.insert(&element_from_coords(domain, nvars, &sources, &v));
    }
    let basis = echelon.ascending();
    for b in &basis {
        assert!(a.commutator(b)?.is_zero(), "kernel element {b} does not commute with {a}");
    }
    let witness = pairwise_commute(&basis)?;
    Ok(CentralizerBasis {
        a: a.clone(),
        characteristic: domain.characteristic(),
        degree_bound,
        commutative: witness.is_none(),
        witness,
        basis,
    })
}

/// Echelon basis of the degree-`<= D` products `x^(p r) d^(p s) a^m`,
/// `p r + p s + m tot(a) <= D`.
pub fn za_span<D: CoeffDomain>(a: &WeylElement<D>, degree_bound: u32) -> Result<Vec<WeylElement<D>>> {
    Ok(za_echelon(a, degree_bound)?.ascending())
}

fn za_echelon<D: CoeffDomain>(a: &WeylElement<D>, degree_bound: u32) -> Result<EchelonBasis<D>> {
    if a.nvars() != 1 {
        return Err(Error::NotUnivariate(a.nvars()));
    }
    let tot = a.total_degree().finite().ok_or(Error::ZeroElement)?;
    let p = a.domain().characteristic();
    if p == 0 {
        return Err(Error::WrongCharacteristic);
    }
    let p = u32::try_from(p).unwrap_or(u32::MAX);
    let domain = a.domain();
    let max_m = degree_bound.checked_div(tot).unwrap_or(0);
    let mut powers = vec![WeylElement::one(domain.clone(), 1)];
    for _ in 0..max_m {
        let next = &powers[powers.len() - 1] * a;
        powers.push(next);
    }
    let mut echelon = EchelonBasis::new(domain.clone(), 1);
    let max_rs = degree_bound / p;
    for r in 0..=max_rs {
        for s in 0..=(max_rs - r) {
            let central_degree = p * (r + s);
            let central = WeylElement::monomial(domain.clone(), MonomialKey::univariate(p * r, p * s), domain.one());
            for (m, power) in powers.iter().enumerate() {
                if central_degree + m as u32 * tot > degree_bound {
                    break;
                }
                echelon.insert(&(&central * power));
            }
        }
    }
    Ok(echelon)
}

/// Finds `z1, z2` in the truncated `Z[a]` with `z2 != 0` and `b z2 = z1`.
///
/// Unknowns are the coordinates of `z1` and `z2` in the `za_span` basis; one
/// linear system over the field gives every admissible `z2`. Among them the
/// one with the smallest leading monomial (reduced echelon form, monic) is
/// returned, and `z1 = b z2`.
pub fn fraction_witness<D: CoeffDomain>(
    a: &WeylElement<D>,
    b: &WeylElement<D>,
    degree_bound: u32,
) -> Result<FractionWitness<D>> {
    if b.nvars() != 1 {
        return Err(Error::NotUnivariate(b.nvars()));
    }
    if !a.commutator(b)?.is_zero() {
        return Err(Error::NotCommutingInput);
    }
    if a.is_central() {
        return Err(Error::CentralInput);
    }
    let domain = a.domain();
    let za = za_echelon(a, degree_bound)?;
    let gens = za.ascending();
    let k = gens.len();

    let mut columns: Vec<WeylElement<D>> = gens.iter().map(|g| -g).collect();
    columns.extend(gens.iter().map(|g| b * g));
    let matrix = column_matrix(domain, &columns);

    let mut admissible = EchelonBasis::new(domain.clone(), 1);
    for v in matrix.kernel() {
        let mut z2 = WeylElement::zero(domain.clone(), 1);
        for (g, beta) in gens.iter().zip(&v[k..]) {
            z2 = &z2 + &g.scale(beta);
        }
        admissible.insert(&z2);
    }
    let z2 = admissible.ascending().into_iter().next().ok_or(Error::NotFound(degree_bound))?;
    let z1 = b * &z2;
    assert!(za.contains(&z1) && za.contains(&z2), "fraction witness left Z[a]");
    Ok(FractionWitness { b: b.clone(), z1, z2, degree_bound })
}
