//! Exterior algebras over `W_n`, `W_n ⊕ W_n` and `W_n ⊕ W_n ⊕ W_n`, the
//! maps identifying them with tensor powers, and the product formulas for
//! the Links–Gould invariants that fall out of that identification.
//!
//! A reference basis vector is `f_{i_1}∧…∧f_{i_p}∧g_{j_1}∧…∧g_{j_m}∧h_{k_1}∧…`
//! with each index list increasing; it is stored as three bitmasks. Every
//! sign in this module comes from [`ExteriorIndex::wedge`].

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::burau::{burau_generator, burau_image, r_small, BurauVariant, SmallR};
use crate::error::Error;
use crate::links_gould::{r_lg21_special, s_lg31};
use crate::matrix::DenseMatrix;
use crate::scalar::{LaurentHalf, Rational, Ring};
use crate::tensor::{decode, LocalOperator, SparseVector, TensorRep};

/// Which copy of `W_n` a generator lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    F = 0,
    G = 1,
    H = 2,
}

impl Summand {
    pub const ALL: [Summand; 3] = [Summand::F, Summand::G, Summand::H];

    fn letter(self) -> char {
        match self {
            Self::F => 'f',
            Self::G => 'g',
            Self::H => 'h',
        }
    }
}

/// A reference basis vector; bit `k-1` of a mask stands for position `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExteriorIndex {
    n: usize,
    sets: [u32; 3],
}

impl ExteriorIndex {
    /// The empty wedge `1`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= 32, "at most 32 strands");
        Self { n, sets: [0; 3] }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn mask(&self, s: Summand) -> u32 {
        self.sets[s as usize]
    }

    /// 1-based positions of the generators from summand `s`, increasing.
    pub fn positions(&self, s: Summand) -> Vec<usize> {
        (1..=self.n).filter(|&k| self.contains(s, k)).collect()
    }

    pub fn fset(&self) -> Vec<usize> {
        self.positions(Summand::F)
    }

    pub fn gset(&self) -> Vec<usize> {
        self.positions(Summand::G)
    }

    pub fn hset(&self) -> Vec<usize> {
        self.positions(Summand::H)
    }

    pub fn contains(&self, s: Summand, pos: usize) -> bool {
        self.sets[s as usize] >> (pos - 1) & 1 == 1
    }

    pub fn degree(&self) -> usize {
        self.sets.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Number of positions among `range` at which `s` appears.
    pub fn count_in(&self, s: Summand, range: std::ops::RangeInclusive<usize>) -> usize {
        range.filter(|&k| k >= 1 && k <= self.n && self.contains(s, k)).count()
    }

    /// `self ∧ x_pos` rewritten in reference order: the sign of moving the
    /// new generator left past every generator that sorts after it, or
    /// `None` if it is already present.
    pub fn wedge(&self, s: Summand, pos: usize) -> Option<(i8, ExteriorIndex)> {
        assert!(pos >= 1 && pos <= self.n, "position {pos} out of range");
        if self.contains(s, pos) {
            return None;
        }
        let si = s as usize;
        let mut passed = (self.sets[si] >> pos).count_ones();
        for later in &self.sets[si + 1..] {
            passed += later.count_ones();
        }
        let mut out = *self;
        out.sets[si] |= 1 << (pos - 1);
        Some((if passed.is_multiple_of(2) { 1 } else { -1 }, out))
    }
}

impl fmt::Display for ExteriorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for s in Summand::ALL {
            for k in self.positions(s) {
                parts.push(format!("{}{}", s.letter(), k));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("∧"))
        }
    }
}

/// Rewrites the wedge of `generators` (in the given order) into the
/// reference basis. `None` means the wedge is zero.
pub fn reord(n: usize, generators: &[(Summand, usize)]) -> Option<(i8, ExteriorIndex)> {
    let mut sign = 1;
    let mut idx = ExteriorIndex::empty(n);
    for &(s, p) in generators {
        let (sg, next) = idx.wedge(s, p)?;
        sign *= sg;
        idx = next;
    }
    Some((sign, idx))
}

/// A finite combination of reference basis vectors; no zero coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ExteriorVector {
    terms: BTreeMap<ExteriorIndex, LaurentHalf>,
}

impl ExteriorVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(idx: ExteriorIndex) -> Self {
        Self::signed(1, idx)
    }

    pub fn signed(sign: i8, idx: ExteriorIndex) -> Self {
        let mut v = Self::zero();
        v.add_term(idx, &LaurentHalf::from_int(sign as i64));
        v
    }

    pub fn add_term(&mut self, idx: ExteriorIndex, c: &LaurentHalf) {
        let slot = self.terms.entry(idx).or_insert_with(LaurentHalf::zero);
        slot.accumulate(c);
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn coeff(&self, idx: &ExteriorIndex) -> LaurentHalf {
        self.terms.get(idx).cloned().unwrap_or_else(LaurentHalf::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExteriorIndex, &LaurentHalf)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Per-summand `n × n` matrices of a block-diagonal map on `W_n^{⊕ m}`.
#[derive(Clone, Debug)]
pub struct BlockMap {
    blocks: [Option<DenseMatrix<LaurentHalf>>; 3],
}

impl BlockMap {
    pub fn new(blocks: [Option<DenseMatrix<LaurentHalf>>; 3]) -> Self {
        Self { blocks }
    }

    /// `b` mapped by the given variant on each listed summand.
    pub fn for_word(b: &BraidWord, summands: &[(Summand, BurauVariant)]) -> Result<Self, Error> {
        let mut blocks = [None, None, None];
        for &(s, v) in summands {
            blocks[s as usize] = Some(burau_image(b, v)?);
        }
        Ok(Self { blocks })
    }

    /// A single generator `σ_i^{±1}` on `n` strands.
    pub fn for_generator(n: usize, i: usize, inverse: bool, summands: &[(Summand, BurauVariant)]) -> Result<Self, Error> {
        let mut blocks = [None, None, None];
        for &(s, v) in summands {
            let g = burau_generator(n, i, v)?;
            blocks[s as usize] = Some(if inverse { g.inverse()? } else { g });
        }
        Ok(Self { blocks })
    }

    pub fn block(&self, s: Summand) -> Option<&DenseMatrix<LaurentHalf>> {
        self.blocks[s as usize].as_ref()
    }
}

/// The exterior power of a block-diagonal map applied to one basis vector:
/// each generator is replaced by its image in its own summand and the
/// product is expanded, dropping repeated generators as it goes.
pub fn exterior_apply_basis(map: &BlockMap, idx: &ExteriorIndex) -> ExteriorVector {
    let n = idx.strands();
    let mut partial: BTreeMap<ExteriorIndex, LaurentHalf> = BTreeMap::new();
    partial.insert(ExteriorIndex::empty(n), LaurentHalf::one());
    for s in Summand::ALL {
        let positions = idx.positions(s);
        if positions.is_empty() {
            continue;
        }
        let m = map.block(s).unwrap_or_else(|| panic!("no matrix for summand {s:?}"));
        assert_eq!(m.rows(), n, "summand matrix has the wrong size");
        for p in positions {
            let mut next: BTreeMap<ExteriorIndex, LaurentHalf> = BTreeMap::new();
            for (acc_idx, acc_c) in &partial {
                for (r, v) in m.column(p - 1) {
                    if let Some((sign, w)) = acc_idx.wedge(s, r + 1) {
                        let term = if sign < 0 { -(acc_c * v) } else { acc_c * v };
                        next.entry(w).or_insert_with(LaurentHalf::zero).accumulate(&term);
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            partial = next;
        }
    }
    ExteriorVector { terms: partial }
}

pub fn exterior_apply(map: &BlockMap, v: &ExteriorVector) -> ExteriorVector {
    let mut out = ExteriorVector::zero();
    for (idx, c) in v.iter() {
        for (k, w) in exterior_apply_basis(map, idx).iter() {
            out.add_term(*k, &(c * w));
        }
    }
    out
}

/// All reference basis vectors using only `summands`.
pub fn exterior_basis(n: usize, summands: &[Summand]) -> Vec<ExteriorIndex> {
    let m = summands.len();
    let mut out = Vec::with_capacity(1 << (m * n));
    for bits in 0u64..(1u64 << (m * n)) {
        let mut idx = ExteriorIndex::empty(n);
        for (j, &s) in summands.iter().enumerate() {
            idx.sets[s as usize] = ((bits >> (j * n)) & ((1u64 << n) - 1)) as u32;
        }
        out.push(idx);
    }
    out
}

/// The maps from tensor powers to exterior algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntertwinerKind {
    /// `W^{⊗n} → ∧(W_n ⊕ W_n)` for the specialized `(2,1)` R-matrix.
    I21,
    /// `W^{⊗n} → ∧(W_n^{⊕3})` for the `(3,1)` R-matrix, with reversed sites.
    I31,
    /// `V^{⊗n} → ∧W_n`, `e_1` at site `k` becomes `f_k`.
    J,
    /// `V^{⊗n} → ∧W_n`, `e_0` at site `k` becomes `g_k`.
    K,
}

impl IntertwinerKind {
    pub const ALL: [IntertwinerKind; 4] = [Self::I21, Self::I31, Self::J, Self::K];

    pub fn site_dim(self) -> usize {
        match self {
            Self::I21 => 4,
            Self::I31 => 8,
            Self::J | Self::K => 2,
        }
    }

    /// Summands of the target together with the Burau-type variant acting on each.
    pub fn summands(self) -> &'static [(Summand, BurauVariant)] {
        match self {
            Self::I21 => &[(Summand::F, BurauVariant::F21), (Summand::G, BurauVariant::G21)],
            Self::I31 => &[(Summand::F, BurauVariant::FGH31), (Summand::G, BurauVariant::FGH31), (Summand::H, BurauVariant::FGH31)],
            Self::J => &[(Summand::F, BurauVariant::Standard)],
            Self::K => &[(Summand::G, BurauVariant::G21)],
        }
    }

    /// The R-matrix on the tensor side.
    pub fn operator(self) -> LocalOperator<LaurentHalf> {
        match self {
            Self::I21 => r_lg21_special(),
            Self::I31 => s_lg31(),
            Self::J => r_small(SmallR::R1),
            Self::K => r_small(SmallR::R3),
        }
    }

    /// Whether the tensor side is driven by the mirrored word `hat(b)`.
    pub fn uses_hat(self) -> bool {
        self == Self::I31
    }

    /// Generators (in wedge order) that a site in state `e` (0-based) contributes
    /// at exterior position `pos`.
    fn site_generators(self, e: usize, pos: usize) -> Vec<(Summand, usize)> {
        use Summand::{F, G, H};
        let pick: &[Summand] = match (self, e) {
            (Self::I21, 0) => &[G],
            (Self::I21, 1) => &[],
            (Self::I21, 2) => &[F, G],
            (Self::I21, 3) => &[F],
            (Self::I31, 0) => &[],
            (Self::I31, 1) => &[F],
            (Self::I31, 2) => &[G],
            (Self::I31, 3) => &[H],
            (Self::I31, 4) => &[F, G],
            (Self::I31, 5) => &[F, H],
            (Self::I31, 6) => &[G, H],
            (Self::I31, 7) => &[F, G, H],
            (Self::J, 0) => &[],
            (Self::J, 1) => &[F],
            (Self::K, 0) => &[G],
            (Self::K, 1) => &[],
            _ => unreachable!("site state out of range"),
        };
        pick.iter().map(|&s| (s, pos)).collect()
    }
}

/// How the generators contributed by the sites are turned into a basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WedgeSigns {
    /// Each tensor basis vector goes to the reference basis vector with the
    /// same generators, coefficient `+1`. This is the map that commutes with
    /// the braid actions.
    Unsigned,
    /// The generators are wedged site by site and the permutation sign of
    /// sorting them is kept. Does not intertwine once two sites carry
    /// generators from different summands; kept as a negative control.
    Permutation,
}

/// A signed bijection between the tensor basis and the exterior reference basis.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    kind: IntertwinerKind,
    n: usize,
    images: Vec<(i8, ExteriorIndex)>,
}

impl Intertwiner {
    /// Site `k` in state `e` contributes the generators of `e` at position
    /// `k`. For `I31` the first tensor factor is the newest strand, so site
    /// `k` lands at position `n + 1 - k`.
    pub fn new(kind: IntertwinerKind, n: usize) -> Self {
        Self::with_signs(kind, n, WedgeSigns::Unsigned)
    }

    pub fn with_signs(kind: IntertwinerKind, n: usize, signs: WedgeSigns) -> Self {
        assert!(n >= 1, "intertwiner needs at least one strand");
        let d = kind.site_dim();
        let reversed = kind == IntertwinerKind::I31;
        let images = (0..d.pow(n as u32) as u64)
            .map(|idx| {
                let digits = decode(d, n, idx);
                let order: Vec<usize> = if reversed { (0..n).rev().collect() } else { (0..n).collect() };
                let mut gens = Vec::new();
                for site in order {
                    let pos = if reversed { n - site } else { site + 1 };
                    gens.extend(kind.site_generators(digits[site], pos));
                }
                let (sign, e) = reord(n, &gens).expect("sites never repeat a generator");
                match signs {
                    WedgeSigns::Unsigned => (1, e),
                    WedgeSigns::Permutation => (sign, e),
                }
            })
            .collect();
        Self { kind, n, images }
    }

    pub fn kind(&self) -> IntertwinerKind {
        self.kind
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// Image of a tensor basis vector (engine encoding).
    pub fn image(&self, tensor_index: u64) -> (i8, ExteriorIndex) {
        self.images[tensor_index as usize]
    }

    pub fn apply(&self, v: &SparseVector<LaurentHalf>) -> ExteriorVector {
        let mut out = ExteriorVector::zero();
        for (k, c) in v.iter() {
            let (sign, idx) = self.image(k);
            out.add_term(idx, &if sign < 0 { c.negated() } else { c.clone() });
        }
        out
    }

    /// True when every exterior basis vector is hit exactly once.
    pub fn is_bijective(&self) -> bool {
        let mut seen: Vec<ExteriorIndex> = self.images.iter().map(|(_, i)| *i).collect();
        seen.sort();
        seen.dedup();
        let summands: Vec<Summand> = self.kind.summands().iter().map(|(s, _)| *s).collect();
        seen.len() == self.images.len() && seen.len() == exterior_basis(self.n, &summands).len()
    }
}

/// First generator and tensor basis vector (0-based digits) on which
/// `∧(…)(σ_i^{±1}) ∘ I = I ∘ rep(σ_j^{±1})` fails, over all generators and
/// both signs. `j = i` except for `I31`, where `j = n - i`.
pub fn intertwining_violation(inter: &Intertwiner, op: &LocalOperator<LaurentHalf>) -> Result<Option<(i64, Vec<usize>)>, Error> {
    let (kind, n) = (inter.kind(), inter.strands());
    let d = kind.site_dim();
    let inv = op.inverse()?;
    for i in 1..n {
        for inverse in [false, true] {
            let ext_map = BlockMap::for_generator(n, i, inverse, kind.summands())?;
            let site = if kind.uses_hat() { n - i } else { i };
            let local = if inverse { &inv } else { op };
            let bad = (0..d.pow(n as u32) as u64).into_par_iter().find_first(|&idx| {
                let x = SparseVector::basis(d, n, idx);
                let lhs = inter.apply(&x.apply_local(local, site));
                let (sign, e) = inter.image(idx);
                lhs != exterior_apply(&ext_map, &ExteriorVector::signed(sign, e))
            });
            if let Some(idx) = bad {
                let letter = if inverse { -(i as i64) } else { i as i64 };
                return Ok(Some((letter, decode(d, n, idx))));
            }
        }
    }
    Ok(None)
}

/// The same identity for a whole word; returns the first failing basis vector.
pub fn word_intertwining_violation(inter: &Intertwiner, b: &BraidWord, op: &LocalOperator<LaurentHalf>) -> Result<Option<Vec<usize>>, Error> {
    let (kind, n) = (inter.kind(), inter.strands());
    if b.strands() != n {
        return Err(Error::StrandMismatch(b.strands(), n));
    }
    let d = kind.site_dim();
    let rep = TensorRep::new(op.clone());
    rep.inverse()?;
    let tensor_word = if kind.uses_hat() { b.hat() } else { b.clone() };
    let ext_map = BlockMap::for_word(b, kind.summands())?;
    let bad = (0..d.pow(n as u32) as u64).into_par_iter().find_first(|&idx| {
        let x = SparseVector::basis(d, n, idx);
        let image = rep.apply_word(&tensor_word, &x).expect("inverse already computed");
        let (sign, e) = inter.image(idx);
        inter.apply(&image) != exterior_apply(&ext_map, &ExteriorVector::signed(sign, e))
    });
    Ok(bad.map(|idx| decode(d, n, idx)))
}

/// The bordered matrix with `J_n Ψ(σ_i) = G(σ_i) J_n` (standard Burau to `G`).
pub fn j_n_matrix(n: usize) -> Result<DenseMatrix<LaurentHalf>, Error> {
    if n < 2 {
        return Err(Error::TooFewStrands { needed: 2, got: n });
    }
    let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let mut m = DenseMatrix::zeros(n, n);
    for size in 2..=n {
        let last = size - 1;
        for r in 1..size {
            m.set(r - 1, last, LaurentHalf::int_monomial(sign(r + 1), (size - 1 - r) as i64));
        }
        for c in 1..size {
            m.set(last, c - 1, LaurentHalf::int_monomial(sign(size + 1), -((size - 1 - c) as i64)));
        }
    }
    Ok(m)
}

/// The diagonal maps obtained by moving site weights across an intertwiner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagonalWeight {
    /// `t^{-(n-1)} (-1)^{n-1} (-1)^{#f in 2..n} (-1)^{#g in 2..n}`.
    MuTilde21,
    /// `(-1)^{#f in 2..n}`.
    Mu1,
    /// `(-1)^{n-1} (-1)^{#g in 2..n}`.
    Nu,
    /// `t^{3(n-1)/2} (-1)^{#f, #g, #h in 1..n-1}`.
    MuTilde31,
}

pub fn diagonal_weight(kind: DiagonalWeight, idx: &ExteriorIndex) -> LaurentHalf {
    let n = idx.strands();
    let parity = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    match kind {
        DiagonalWeight::MuTilde21 => {
            let k = (n - 1) + idx.count_in(Summand::F, 2..=n) + idx.count_in(Summand::G, 2..=n);
            LaurentHalf::int_monomial(parity(k), -2 * (n as i64 - 1))
        }
        DiagonalWeight::Mu1 => LaurentHalf::from_int(parity(idx.count_in(Summand::F, 2..=n))),
        DiagonalWeight::Nu => LaurentHalf::from_int(parity(n - 1 + idx.count_in(Summand::G, 2..=n))),
        DiagonalWeight::MuTilde31 => {
            let k: usize = Summand::ALL.iter().map(|&s| idx.count_in(s, 1..=n - 1)).sum();
            LaurentHalf::int_monomial(parity(k), 3 * (n as i64 - 1))
        }
    }
}

/// `Σ_S (-1)^{#S ∩ range} ⟨x_S, ∧M (x_S)⟩` over subsets `S` of one summand.
fn signed_diagonal_sum(b: &BraidWord, s: Summand, variant: BurauVariant, range: std::ops::RangeInclusive<usize>) -> Result<LaurentHalf, Error> {
    let n = b.strands();
    let map = BlockMap::for_word(b, &[(s, variant)])?;
    let parts: Vec<LaurentHalf> = exterior_basis(n, &[s])
        .into_par_iter()
        .map(|idx| {
            let c = exterior_apply_basis(&map, &idx).coeff(&idx);
            if idx.count_in(s, range.clone()) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let mut acc = LaurentHalf::zero();
    for p in &parts {
        acc.accumulate(p);
    }
    Ok(acc)
}

/// The factors `S_F`, `S_G` (and `S_H`) of the product formula.
pub fn product_factors(b: &BraidWord, flavor: ProductFlavor) -> Result<Vec<LaurentHalf>, Error> {
    let n = b.strands();
    match flavor {
        ProductFlavor::Lg21 => Ok(vec![
            signed_diagonal_sum(b, Summand::F, BurauVariant::F21, 2..=n)?,
            signed_diagonal_sum(b, Summand::G, BurauVariant::G21, 2..=n)?,
        ]),
        ProductFlavor::Lg31 => {
            let h = b.hat();
            Summand::ALL.iter().map(|&s| signed_diagonal_sum(&h, s, BurauVariant::FGH31, 1..=n - 1)).collect()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductFlavor {
    Lg21,
    Lg31,
}

/// The Links–Gould invariant as a product of exterior traces, one per summand.
///
/// For `(2,1)` this is `¼ (-t)^{-(n-1)} S_F S_G` times the same `(-1)^{n-1}`
/// that [`crate::links_gould::lg_invariant`] applies to the literal trace,
/// so the two agree exactly.
pub fn lg_product(b: &BraidWord, flavor: ProductFlavor) -> Result<LaurentHalf, Error> {
    let n = b.strands() as i64;
    let factors = product_factors(b, flavor)?;
    let mut prod = LaurentHalf::one();
    for f in &factors {
        prod = &prod * f;
    }
    Ok(match flavor {
        ProductFlavor::Lg21 => prod.scale(&Rational::new(1.into(), 4.into())).shift(-2 * (n - 1)),
        ProductFlavor::Lg31 => prod.scale(&Rational::new(1.into(), 8.into())).shift(3 * (n - 1)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExteriorPath {
    /// `½ trace(μ₁ ∘ ∧Ψ(b))` with the standard Burau matrices.
    ViaPsiMu1,
    /// `½ trace(ν ∘ ∧G(b))`.
    ViaGNu,
}

/// The Alexander polynomial as a weighted trace on `∧W_n`.
pub fn alexander_exterior(b: &BraidWord, path: ExteriorPath) -> Result<LaurentHalf, Error> {
    let n = b.strands();
    let half = Rational::new(1.into(), 2.into());
    Ok(match path {
        ExteriorPath::ViaPsiMu1 => signed_diagonal_sum(b, Summand::F, BurauVariant::Standard, 2..=n)?.scale(&half),
        ExteriorPath::ViaGNu => {
            let s = signed_diagonal_sum(b, Summand::G, BurauVariant::G21, 2..=n)?.scale(&half);
            if n.is_multiple_of(2) {
                -s
            } else {
                s
            }
        }
    })
}
