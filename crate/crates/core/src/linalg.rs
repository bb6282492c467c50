//! Exact linear algebra over a coefficient field: dense row reduction and
//! kernels, plus reduced echelon bases of Weyl algebra elements.

use crate::domain::CoeffDomain;
use crate::weyl::WeylElement;

/// Dense matrix over `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<D: CoeffDomain> {
    domain: D,
    ncols: usize,
    rows: Vec<Vec<D::Elem>>,
}

impl<D: CoeffDomain> Matrix<D> {
    pub fn zeros(domain: D, nrows: usize, ncols: usize) -> Self {
        let rows = vec![vec![domain.zero(); ncols]; nrows];
        Matrix { domain, ncols, rows }
    }

    pub fn from_rows(domain: D, ncols: usize, rows: Vec<Vec<D::Elem>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix { domain, ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &D::Elem {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: D::Elem) {
        self.rows[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[D::Elem] {
        &self.rows[r]
    }

    /// In-place reduced row echelon form. Columns are scanned left to right and
    /// the first row with a nonzero entry becomes the pivot. Returns the pivot
    /// columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let dom = self.domain.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.rows.len() {
                break;
            }
            let Some(pr) = (r..self.rows.len()).find(|&i| !dom.is_zero(&self.rows[i][c])) else {
                continue;
            };
            self.rows.swap(r, pr);
            let inv = dom.inv(&self.rows[r][c]).expect("nonzero pivot");
            for v in self.rows[r].iter_mut() {
                *v = dom.mul(v, &inv);
            }
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r || dom.is_zero(&row[c]) {
                    continue;
                }
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = dom.sub(v, &dom.mul(&f, pv));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<D::Elem>> {
        let dom = &self.domain;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![dom.zero(); self.ncols];
                v[free] = dom.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = dom.neg(&m.rows[i][free]);
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[D::Elem]) -> Vec<D::Elem> {
        let dom = &self.domain;
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).fold(dom.zero(), |acc, (a, b)| dom.add(&acc, &dom.mul(a, b))))
            .collect()
    }
}

/// Reduced echelon basis of a subspace of `A_n`, relative to the graded-lex
/// monomial order: leading monomials are distinct, every leading coefficient
/// is 1, and no element contains another element's leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis<D: CoeffDomain> {
    domain: D,
    nvars: usize,
    /// Sorted by leading monomial, descending.
    elems: Vec<WeylElement<D>>,
}

impl<D: CoeffDomain> EchelonBasis<D> {
    pub fn new(domain: D, nvars: usize) -> Self {
        EchelonBasis { domain, nvars, elems: Vec::new() }
    }

    pub fn from_elements<'a>(domain: D, nvars: usize, elems: impl IntoIterator<Item = &'a WeylElement<D>>) -> Self
    where
        D: 'a,
    {
        let mut basis = Self::new(domain, nvars);
        for e in elems {
            basis.insert(e);
        }
        basis
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Remainder of `e` after eliminating every leading monomial of the basis.
    pub fn reduce(&self, e: &WeylElement<D>) -> WeylElement<D> {
        let mut rem = e.clone();
        for b in &self.elems {
            let lead = b.leading_monomial().expect("basis elements are nonzero");
            let c = rem.coeff(lead);
            if !self.domain.is_zero(&c) {
                rem = &rem - &b.scale(&c);
            }
        }
        rem
    }

    pub fn contains(&self, e: &WeylElement<D>) -> bool {
        self.reduce(e).is_zero()
    }

    /// Adds `e` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, e: &WeylElement<D>) -> bool {
        assert_eq!(e.nvars(), self.nvars, "element from a different algebra");
        let r = self.reduce(e);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        let lead = r.leading_monomial().expect("nonzero").clone();
        for b in self.elems.iter_mut() {
            let c = b.coeff(&lead);
            if !self.domain.is_zero(&c) {
                *b = &*b - &r.scale(&c);
            }
        }
        self.elems.push(r);
        self.elems.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
        true
    }

    /// Basis elements ordered by leading monomial, ascending.
    pub fn ascending(&self) -> Vec<WeylElement<D>> {
        self.elems.iter().rev().cloned().collect()
    }

    /// Basis elements ordered by leading monomial, descending.
    pub fn descending(&self) -> &[WeylElement<D>] {
        &self.elems
    }
}
