//! Sparse tensor states and two-site local operators.
//!
//! A basis vector `e_{i_1} ⊗ … ⊗ e_{i_n}` of `(C^d)^{⊗n}` is encoded as the
//! integer `Σ i_k d^{n-k}` with 0-based digits, site 1 most significant.
//! Adjacent sites `(i, i+1)` then form one contiguous base-`d²` digit whose
//! value `x * d + y` matches the ordering `e_1⊗e_1, e_1⊗e_2, …` of a
//! printed `d² × d²` matrix.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::braid::{BraidWord, Letter};
use crate::error::Error;
use crate::matrix::{DenseMatrix, WeightVector};
use crate::scalar::Ring;

/// A sparse `d² × d²` matrix acting on two adjacent sites, stored by column.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalOperator<R> {
    d: usize,
    cols: Vec<Vec<(usize, R)>>,
}

impl<R: Ring> LocalOperator<R> {
    /// Operator from `(row, col, value)` triples, 0-based pair indices.
    /// Repeated positions accumulate.
    pub fn from_entries<I>(d: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, R)>,
    {
        let mut dense: DenseMatrix<R> = DenseMatrix::zeros(d * d, d * d);
        for (r, c, v) in entries {
            let cur = dense.get(r, c).plus(&v);
            dense.set(r, c, cur);
        }
        Self::from_dense(d, &dense)
    }

    pub fn from_dense(d: usize, m: &DenseMatrix<R>) -> Self {
        assert_eq!((m.rows(), m.cols()), (d * d, d * d), "local operator must be d² × d²");
        let cols = (0..d * d).map(|c| m.column(c).map(|(r, v)| (r, v.clone())).collect()).collect();
        Self { d, cols }
    }

    pub fn identity(d: usize) -> Self {
        Self::from_dense(d, &DenseMatrix::identity(d * d))
    }

    pub fn to_dense(&self) -> DenseMatrix<R> {
        let mut m = DenseMatrix::zeros(self.d * self.d, self.d * self.d);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn site_dim(&self) -> usize {
        self.d
    }

    pub fn column(&self, c: usize) -> &[(usize, R)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> R {
        self.cols[c].iter().find(|(row, _)| *row == r).map_or_else(R::zero, |(_, v)| v.clone())
    }

    /// Copy with entry `(r, c)` replaced by `v`.
    pub fn with_entry(&self, r: usize, c: usize, v: R) -> Self {
        let mut m = self.to_dense();
        m.set(r, c, v);
        Self::from_dense(self.d, &m)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LocalOperator<S> {
        LocalOperator::from_dense(self.d, &self.to_dense().map(f))
    }

    pub fn scaled(&self, by: &R) -> Self {
        self.map(|v| v.times(by))
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        Ok(Self::from_dense(self.d, &self.to_dense().inverse()?))
    }

    pub fn nonzero_count(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Checks `R12 R23 R12 = R23 R12 R23` on every basis vector of three sites.
    /// Returns the first basis vector (as 0-based digits) where they differ.
    pub fn yang_baxter_violation(&self) -> Option<[usize; 3]> {
        let d = self.d;
        (0..d * d * d).into_par_iter().find_first(|&idx| {
            let x = SparseVector::basis(d, 3, idx as u64);
            let lhs = x.apply_local(self, 1).apply_local(self, 2).apply_local(self, 1);
            let rhs = x.apply_local(self, 2).apply_local(self, 1).apply_local(self, 2);
            lhs != rhs
        })
        .map(|idx| [idx / (d * d), (idx / d) % d, idx % d])
    }
}

/// A finitely supported vector in `(C^d)^{⊗n}`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector<R> {
    d: usize,
    n: usize,
    entries: BTreeMap<u64, R>,
}

impl<R: Ring> SparseVector<R> {
    pub fn zero(d: usize, n: usize) -> Self {
        Self { d, n, entries: BTreeMap::new() }
    }

    pub fn basis(d: usize, n: usize, index: u64) -> Self {
        let mut v = Self::zero(d, n);
        v.entries.insert(index, R::one());
        v
    }

    /// Basis vector from 0-based site digits.
    pub fn basis_from_digits(d: usize, digits: &[usize]) -> Self {
        Self::basis(d, digits.len(), encode(d, digits))
    }

    pub fn site_dim(&self) -> usize {
        self.d
    }

    pub fn sites(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &R)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, index: u64) -> R {
        self.entries.get(&index).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, index: u64, c: &R) {
        let slot = self.entries.entry(index).or_insert_with(R::zero);
        slot.accumulate(c);
        if slot.is_zero() {
            self.entries.remove(&index);
        }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in rhs.iter() {
            out.add_term(k, &v.negated());
        }
        out
    }

    /// Applies `op` to sites `site` and `site + 1` (1-based).
    pub fn apply_local(&self, op: &LocalOperator<R>, site: usize) -> Self {
        assert_eq!(op.d, self.d, "site dimension mismatch");
        assert!(site >= 1 && site < self.n, "site {site} out of range for {} sites", self.n);
        let dd = (self.d * self.d) as u64;
        let place = (self.d as u64).pow((self.n - site - 1) as u32);
        let mut acc: BTreeMap<u64, R> = BTreeMap::new();
        for (&idx, c) in &self.entries {
            let pair = (idx / place) % dd;
            let rest = idx - pair * place;
            for (row, v) in op.column(pair as usize) {
                acc.entry(rest + *row as u64 * place).or_insert_with(R::zero).accumulate_product(v, c);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self { d: self.d, n: self.n, entries: acc }
    }
}

pub fn encode(d: usize, digits: &[usize]) -> u64 {
    digits.iter().fold(0u64, |acc, &x| acc * d as u64 + x as u64)
}

pub fn decode(d: usize, n: usize, mut index: u64) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = (index % d as u64) as usize;
        index /= d as u64;
    }
    out
}

/// The braid group representation `σ_i ↦ id^{⊗ i-1} ⊗ R ⊗ id^{⊗ n-i-1}`.
///
/// The inverse of `R` is computed on first use and cached.
#[derive(Debug)]
pub struct TensorRep<R> {
    op: LocalOperator<R>,
    inv: OnceLock<Option<LocalOperator<R>>>,
}

impl<R: Ring> TensorRep<R> {
    pub fn new(op: LocalOperator<R>) -> Self {
        Self { op, inv: OnceLock::new() }
    }

    pub fn operator(&self) -> &LocalOperator<R> {
        &self.op
    }

    pub fn site_dim(&self) -> usize {
        self.op.site_dim()
    }

    pub fn inverse(&self) -> Result<&LocalOperator<R>, Error> {
        self.inv.get_or_init(|| self.op.inverse().ok()).as_ref().ok_or(Error::NotInvertible)
    }

    pub fn apply_letter(&self, letter: Letter, v: &SparseVector<R>) -> Result<SparseVector<R>, Error> {
        let op = if letter.inverse { self.inverse()? } else { &self.op };
        Ok(v.apply_local(op, letter.index))
    }

    /// Image of `v` under the word, rightmost letter applied first so that
    /// the map is a homomorphism.
    pub fn apply_word(&self, word: &BraidWord, v: &SparseVector<R>) -> Result<SparseVector<R>, Error> {
        if v.sites() != word.strands() {
            return Err(Error::StrandMismatch(v.sites(), word.strands()));
        }
        let mut cur = v.clone();
        for &l in word.letters().iter().rev() {
            cur = self.apply_letter(l, &cur)?;
        }
        Ok(cur)
    }

    pub fn image<'a>(&'a self, word: &'a BraidWord) -> WordImage<'a, R> {
        WordImage { rep: self, word }
    }
}

impl<R: Ring> Clone for TensorRep<R> {
    fn clone(&self) -> Self {
        let inv = OnceLock::new();
        if let Some(cached) = self.inv.get() {
            let _ = inv.set(cached.clone());
        }
        Self { op: self.op.clone(), inv }
    }
}

/// A linear map on `(C^d)^{⊗n}` that can be applied to basis vectors.
pub trait TensorOperator<R: Ring>: Sync {
    fn site_dim(&self) -> usize;
    fn sites(&self) -> usize;
    fn apply(&self, v: &SparseVector<R>) -> Result<SparseVector<R>, Error>;
}

/// `rep(word)` as an operator.
pub struct WordImage<'a, R> {
    rep: &'a TensorRep<R>,
    word: &'a BraidWord,
}

impl<R: Ring> TensorOperator<R> for WordImage<'_, R> {
    fn site_dim(&self) -> usize {
        self.rep.site_dim()
    }
    fn sites(&self) -> usize {
        self.word.strands()
    }
    fn apply(&self, v: &SparseVector<R>) -> Result<SparseVector<R>, Error> {
        self.rep.apply_word(self.word, v)
    }
}

fn site_weight<R: Ring>(weights: &WeightVector<R>, digits: &[usize]) -> R {
    let mut w = R::one();
    for &x in &digits[1..] {
        w = w.times(weights.get(x));
    }
    w
}

/// `trace((id ⊗ w^{⊗ n-1}) ∘ op)`, accumulated one basis vector at a time.
pub fn weighted_trace<R: Ring>(op: &impl TensorOperator<R>, weights: &WeightVector<R>) -> Result<R, Error> {
    let (d, n) = (op.site_dim(), op.sites());
    assert_eq!(weights.dim(), d, "weight dimension mismatch");
    let total = (d as u64).pow(n as u32);
    let parts: Vec<R> = (0..total)
        .into_par_iter()
        .map(|idx| -> Result<R, Error> {
            let w = site_weight(weights, &decode(d, n, idx));
            if w.is_zero() {
                return Ok(R::zero());
            }
            let image = op.apply(&SparseVector::basis(d, n, idx))?;
            Ok(w.times(&image.coeff(idx)))
        })
        .collect::<Result<_, _>>()?;
    let mut acc = R::zero();
    for p in &parts {
        acc.accumulate(p);
    }
    Ok(acc)
}

/// Partial trace over sites `2..n` with site weights, as a `d × d` matrix on site 1.
pub fn partial_trace<R: Ring>(op: &impl TensorOperator<R>, weights: &WeightVector<R>) -> Result<DenseMatrix<R>, Error> {
    let (d, n) = (op.site_dim(), op.sites());
    assert_eq!(weights.dim(), d, "weight dimension mismatch");
    let rest_count = (d as u64).pow(n as u32 - 1);
    let parts: Vec<DenseMatrix<R>> = (0..rest_count)
        .into_par_iter()
        .map(|rest| -> Result<DenseMatrix<R>, Error> {
            let mut block = DenseMatrix::zeros(d, d);
            let mut digits = decode(d, n, rest);
            let w = site_weight(weights, &digits);
            if w.is_zero() {
                return Ok(block);
            }
            for col in 0..d {
                digits[0] = col;
                let image = op.apply(&SparseVector::basis_from_digits(d, &digits))?;
                for row in 0..d {
                    digits[0] = row;
                    let c = image.coeff(encode(d, &digits));
                    if !c.is_zero() {
                        block.set(row, col, w.times(&c));
                    }
                }
            }
            Ok(block)
        })
        .collect::<Result<_, _>>()?;
    let mut acc: DenseMatrix<R> = DenseMatrix::zeros(d, d);
    for p in &parts {
        for r in 0..d {
            for c in 0..d {
                let v = acc.get(r, c).plus(p.get(r, c));
                acc.set(r, c, v);
            }
        }
    }
    Ok(acc)
}

/// Computes the weighted partial trace over sites `2..n` and tests whether
/// it is `c · id`. Returns `c` (the `(1,1)` entry) and the outcome.
pub fn partial_trace_scalar<R: Ring>(op: &impl TensorOperator<R>, weights: &WeightVector<R>) -> Result<(R, bool), Error> {
    let p = partial_trace(op, weights)?;
    let c = p.get(0, 0).clone();
    let d = p.rows();
    let is_scalar = (0..d).all(|r| (0..d).all(|col| if r == col { *p.get(r, col) == c } else { p.get(r, col).is_zero() }));
    Ok((c, is_scalar))
}

/// The identity map on `(C^d)^{⊗n}`.
pub struct IdentityOperator {
    pub d: usize,
    pub n: usize,
}

impl<R: Ring> TensorOperator<R> for IdentityOperator {
    fn site_dim(&self) -> usize {
        self.d
    }
    fn sites(&self) -> usize {
        self.n
    }
    fn apply(&self, v: &SparseVector<R>) -> Result<SparseVector<R>, Error> {
        Ok(v.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentHalf;

    #[test]
    fn encode_decode() {
        let digits = [3, 0, 2, 1];
        assert_eq!(decode(4, 4, encode(4, &digits)), digits);
        assert_eq!(encode(4, &[1, 2]), 6);
    }

    #[test]
    fn swap_operator_acts_locally() {
        // flip on C^2 ⊗ C^2
        let flip = LocalOperator::from_entries(2, [(0, 0, LaurentHalf::one()), (2, 1, LaurentHalf::one()), (1, 2, LaurentHalf::one()), (3, 3, LaurentHalf::one())]);
        let v: SparseVector<LaurentHalf> = SparseVector::basis_from_digits(2, &[1, 0, 0]);
        let w = v.apply_local(&flip, 2);
        assert_eq!(w, SparseVector::basis_from_digits(2, &[1, 0, 0]));
        let w = v.apply_local(&flip, 1);
        assert_eq!(w, SparseVector::basis_from_digits(2, &[0, 1, 0]));
        assert!(flip.yang_baxter_violation().is_none());
    }

    #[test]
    fn identity_partial_trace() {
        let id = IdentityOperator { d: 4, n: 3 };
        let (c, ok) = partial_trace_scalar::<LaurentHalf>(&id, &WeightVector::trivial(4)).unwrap();
        assert!(ok);
        assert_eq!(c, LaurentHalf::from_int(16));
    }

    #[test]
    fn empty_word_is_identity() {
        let rep = TensorRep::new(LocalOperator::<LaurentHalf>::identity(2));
        let v = SparseVector::basis_from_digits(2, &[1, 0, 1]);
        assert_eq!(rep.apply_word(&BraidWord::identity(3), &v).unwrap(), v);
        assert!(rep.apply_word(&BraidWord::identity(2), &v).is_err());
    }
}
