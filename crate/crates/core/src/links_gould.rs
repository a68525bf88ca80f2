//! Links–Gould invariants as weighted traces of braid group representations.
//!
//! * `(2,1)`: a 16×16 R-matrix over [`ExtScalar`] and its one-variable
//!   specialization `t1 = t0^{-1}`,
//! * `(3,1)`: a 64×64 R-matrix over [`LaurentHalf`], only in one variable.
//!
//! [`lg_trace`] is the literal `(1/d) trace((id ⊗ μ^{⊗ n-1}) ∘ rep(b))`.
//! For the `(2,1)` flavors that trace picks up a sign `(-1)^{n-1}` under
//! stabilization, so [`lg_invariant`] multiplies it back out; the result is
//! then exactly Markov invariant and takes the value 1 on the unknot in
//! every braid group.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::Error;
use crate::matrix::WeightVector;
use crate::scalar::{ExtScalar, LaurentHalf, Rational, Ring, Specialization};
use crate::tensor::{weighted_trace, LocalOperator, TensorRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LgFlavor {
    Lg21TwoVar,
    Lg21Special,
    Lg31Special,
}

impl LgFlavor {
    pub const ALL: [LgFlavor; 3] = [Self::Lg21TwoVar, Self::Lg21Special, Self::Lg31Special];

    pub fn site_dim(self) -> usize {
        match self {
            Self::Lg21TwoVar | Self::Lg21Special => 4,
            Self::Lg31Special => 8,
        }
    }
}

/// An invariant value: two-variable (with `Y`) or one-variable.
#[derive(Clone, Debug, PartialEq)]
pub enum LgValue {
    TwoVar(ExtScalar),
    OneVar(LaurentHalf),
}

impl LgValue {
    pub fn as_one_var(&self) -> Option<&LaurentHalf> {
        match self {
            Self::OneVar(p) => Some(p),
            Self::TwoVar(_) => None,
        }
    }

    pub fn as_two_var(&self) -> Option<&ExtScalar> {
        match self {
            Self::TwoVar(x) => Some(x),
            Self::OneVar(_) => None,
        }
    }

    fn negated(&self) -> Self {
        match self {
            Self::TwoVar(x) => Self::TwoVar(x.negated()),
            Self::OneVar(p) => Self::OneVar(p.negated()),
        }
    }
}

impl fmt::Display for LgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TwoVar(x) => x.fmt(f),
            Self::OneVar(p) => p.fmt(f),
        }
    }
}

fn ext(k: i64, e0: i64, e1: i64) -> ExtScalar {
    ExtScalar::mono(k, e0, e1)
}

/// The 16×16 `(2,1)` R-matrix on `W ⊗ W`, basis `e_a ⊗ e_b` at index `4(a-1) + (b-1)`.
pub fn r_lg21() -> LocalOperator<ExtScalar> {
    let one = ExtScalar::one;
    let y = ExtScalar::y;
    let s0s1 = || ext(1, 1, 1);
    // (row, col) are 1-based as in the printed matrix
    let entries: Vec<(usize, usize, ExtScalar)> = vec![
        (1, 1, ext(-1, 2, 0)),
        (2, 5, ext(-1, 1, 0)),
        (3, 9, ext(-1, 1, 0)),
        (4, 13, ext(-1, 0, 0)),
        (5, 2, ext(-1, 1, 0)),
        (5, 5, one().minus(&ext(1, 2, 0))),
        (6, 6, one()),
        (7, 7, one().minus(&ext(1, 2, 2))),
        (7, 10, s0s1()),
        (7, 13, s0s1().times(&y())),
        (8, 14, ext(-1, 0, 1)),
        (9, 3, ext(-1, 1, 0)),
        (9, 9, one().minus(&ext(1, 2, 0))),
        (10, 7, s0s1()),
        (10, 13, y().negated()),
        (11, 11, one()),
        (12, 15, ext(-1, 0, 1)),
        (13, 4, ext(-1, 0, 0)),
        (13, 7, s0s1().times(&y())),
        (13, 10, y().negated()),
        (13, 13, y().times(&y()).negated()),
        (14, 8, ext(-1, 0, 1)),
        (14, 14, one().minus(&ext(1, 0, 2))),
        (15, 12, ext(-1, 0, 1)),
        (15, 15, one().minus(&ext(1, 0, 2))),
        (16, 16, ext(-1, 0, 2)),
    ];
    LocalOperator::from_entries(4, entries.into_iter().map(|(r, c, v)| (r - 1, c - 1, v)))
}

/// `r_lg21` under `t1 = t0^{-1}`.
pub fn r_lg21_special() -> LocalOperator<LaurentHalf> {
    specialize_operator(&r_lg21(), Specialization::T1ToInvT0)
}

pub fn specialize_operator(op: &LocalOperator<ExtScalar>, rule: Specialization) -> LocalOperator<LaurentHalf> {
    op.map(|x| x.specialize(rule))
}

fn y_special() -> LaurentHalf {
    LaurentHalf::from_ints(-1, &[-1, 0, 1])
}

/// The 64×64 `(3,1)` R-matrix at `q = -1`, as a direct sum of blocks.
pub fn s_lg31() -> LocalOperator<LaurentHalf> {
    let t = |h: i64| LaurentHalf::t_half(h);
    let y = y_special();
    let y2 = &y * &y;
    let y3 = &y2 * &y;
    let idx = |a: usize, b: usize| (a - 1) * 8 + (b - 1);
    let mut entries: Vec<(usize, usize, LaurentHalf)> = Vec::new();
    let mut put = |block: &[Vec<LaurentHalf>], basis: &[(usize, usize)], factor: &LaurentHalf| {
        for (i, &(a, b)) in basis.iter().enumerate() {
            for (j, &(c, d)) in basis.iter().enumerate() {
                let v = &block[i][j] * factor;
                if !v.is_zero() {
                    entries.push((idx(a, b), idx(c, d), v));
                }
            }
        }
    };

    let diag = [t(0), -t(-2), -t(-2), -t(-2), t(-4), t(-4), t(-4), -t(-6)];
    for (a, v) in diag.iter().enumerate() {
        put(&[vec![LaurentHalf::one()]], &[(a + 1, a + 1)], v);
    }

    let z = LaurentHalf::zero;
    let o = LaurentHalf::one;
    let b2 = vec![vec![z(), t(-1)], vec![t(-1), &o() - &t(-2)]];
    let two_blocks: [(&[(usize, usize)], LaurentHalf); 3] = [
        (&[(1, 2), (1, 3), (1, 4)], o()),
        (&[(7, 8), (6, 8), (5, 8)], t(-4)),
        (&[(2, 5), (3, 5), (2, 6), (4, 6), (3, 7), (4, 7)], -t(-2)),
    ];
    for (pairs, f) in two_blocks {
        for &(a, b) in pairs {
            put(&b2, &[(a, b), (b, a)], &f);
        }
    }

    let b4 = vec![
        vec![z(), z(), z(), o()],
        vec![z(), z(), o(), y.clone()],
        vec![z(), o(), z(), y.clone()],
        vec![o(), y.clone(), y.clone(), y2.clone()],
    ];
    let four_blocks: [([(usize, usize); 4], LaurentHalf); 6] = [
        ([(1, 5), (2, 3), (3, 2), (5, 1)], t(-2)),
        ([(1, 6), (2, 4), (4, 2), (6, 1)], t(-2)),
        ([(1, 7), (3, 4), (4, 3), (7, 1)], t(-2)),
        ([(4, 8), (6, 7), (7, 6), (8, 4)], -t(-4)),
        ([(3, 8), (5, 7), (7, 5), (8, 3)], -t(-4)),
        ([(2, 8), (5, 6), (6, 5), (8, 2)], -t(-4)),
    ];
    for (basis, f) in four_blocks {
        put(&b4, &basis, &f);
    }

    let rows: [[u8; 8]; 8] = [
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 1, 2],
        [0, 0, 0, 0, 0, 1, 0, 2],
        [0, 0, 0, 0, 1, 0, 0, 2],
        [0, 0, 0, 1, 0, 2, 2, 3],
        [0, 0, 1, 0, 2, 0, 2, 3],
        [0, 1, 0, 0, 2, 2, 0, 3],
        [1, 2, 2, 2, 3, 3, 3, 4],
    ];
    // code k means Y^{k-1}
    let powers = [z(), o(), y.clone(), y2.clone(), y3.clone()];
    let b8: Vec<Vec<LaurentHalf>> = rows.iter().map(|r| r.iter().map(|&k| powers[k as usize].clone()).collect()).collect();
    put(&b8, &[(1, 8), (4, 5), (3, 6), (2, 7), (7, 2), (6, 3), (5, 4), (8, 1)], &t(-3));

    LocalOperator::from_entries(8, entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MuWeight {
    Mu21,
    Mu31,
}

/// `diag(t0^{-1}, -t1, -t0^{-1}, t1)`.
pub fn mu21() -> WeightVector<ExtScalar> {
    WeightVector::new(vec![ext(1, -2, 0), ext(-1, 0, 2), ext(-1, -2, 0), ext(1, 0, 2)])
}

/// `t0^{3/2} diag(1, -1, -1, -1, 1, 1, 1, -1)`.
pub fn mu31() -> WeightVector<LaurentHalf> {
    let signs = [1, -1, -1, -1, 1, 1, 1, -1];
    WeightVector::new(signs.iter().map(|&s| LaurentHalf::int_monomial(s, 3)).collect())
}

/// The site weight for `flavor`, as a [`LgValue`] list.
pub fn mu_weight(flavor: LgFlavor) -> Vec<LgValue> {
    match flavor {
        LgFlavor::Lg21TwoVar => mu21().entries().iter().cloned().map(LgValue::TwoVar).collect(),
        LgFlavor::Lg21Special => mu21_special().entries().iter().cloned().map(LgValue::OneVar).collect(),
        LgFlavor::Lg31Special => mu31().entries().iter().cloned().map(LgValue::OneVar).collect(),
    }
}

pub fn mu21_special() -> WeightVector<LaurentHalf> {
    mu21().map(|x| x.specialize(Specialization::T1ToInvT0))
}

/// The three representations, built once; inverses are cached on first use.
pub struct LgEngine {
    pub two_var: TensorRep<ExtScalar>,
    pub special21: TensorRep<LaurentHalf>,
    pub special31: TensorRep<LaurentHalf>,
}

impl LgEngine {
    pub fn new() -> Self {
        Self::from_operators(r_lg21(), r_lg21_special(), s_lg31())
    }

    pub fn from_operators(r: LocalOperator<ExtScalar>, r_special: LocalOperator<LaurentHalf>, s: LocalOperator<LaurentHalf>) -> Self {
        Self { two_var: TensorRep::new(r), special21: TensorRep::new(r_special), special31: TensorRep::new(s) }
    }

    /// Process-wide engine with the printed operators.
    pub fn shared() -> &'static LgEngine {
        static ENGINE: OnceLock<LgEngine> = OnceLock::new();
        ENGINE.get_or_init(LgEngine::new)
    }

    pub fn trace(&self, b: &BraidWord, flavor: LgFlavor) -> Result<LgValue, Error> {
        Ok(match flavor {
            LgFlavor::Lg21TwoVar => {
                let tr = weighted_trace(&self.two_var.image(b), &mu21())?;
                LgValue::TwoVar(tr.times(&ExtScalar::from_base(crate::scalar::LaurentHalf2::monomial(quarter(), 0, 0))))
            }
            LgFlavor::Lg21Special => {
                let tr = weighted_trace(&self.special21.image(b), &mu21_special())?;
                LgValue::OneVar(tr.scale(&quarter()))
            }
            LgFlavor::Lg31Special => {
                let tr = weighted_trace(&self.special31.image(b), &mu31())?;
                LgValue::OneVar(tr.scale(&Rational::new(1.into(), 8.into())))
            }
        })
    }

    pub fn invariant(&self, b: &BraidWord, flavor: LgFlavor) -> Result<LgValue, Error> {
        let tr = self.trace(b, flavor)?;
        Ok(if flavor != LgFlavor::Lg31Special && b.strands().is_multiple_of(2) { tr.negated() } else { tr })
    }
}

impl Default for LgEngine {
    fn default() -> Self {
        Self::new()
    }
}

fn quarter() -> Rational {
    Rational::new(1.into(), 4.into())
}

/// The literal trace `(1/d) trace((id ⊗ μ^{⊗ n-1}) ∘ rep(b))`.
pub fn lg_trace(b: &BraidWord, flavor: LgFlavor) -> Result<LgValue, Error> {
    LgEngine::shared().trace(b, flavor)
}

/// The Links–Gould invariant of the closure of `b`.
pub fn lg_invariant(b: &BraidWord, flavor: LgFlavor) -> Result<LgValue, Error> {
    LgEngine::shared().invariant(b, flavor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lo: i64, c: &[i64]) -> LaurentHalf {
        LaurentHalf::from_ints(lo, c)
    }

    fn word(n: usize, w: &str) -> BraidWord {
        BraidWord::parse(w, n).unwrap()
    }

    #[test]
    fn printed_corner_entries() {
        let r = r_lg21();
        assert_eq!(r.get(0, 0), ext(-1, 2, 0));
        assert_eq!(r.get(15, 15), ext(-1, 0, 2));
        assert_eq!(r.nonzero_count(), 26);
    }

    #[test]
    fn specialized_matrix_matches_display() {
        let r = r_lg21_special();
        let s = LaurentHalf::t_half;
        let y = y_special();
        let one_minus = |e| &LaurentHalf::one() - &s(e);
        let expect = [
            ((1, 1), -s(2)),
            ((2, 5), -s(1)),
            ((4, 13), -LaurentHalf::one()),
            ((5, 5), one_minus(2)),
            ((7, 7), LaurentHalf::zero()),
            ((7, 10), -LaurentHalf::one()),
            ((10, 7), -LaurentHalf::one()),
            ((7, 13), -y.clone()),
            ((13, 7), -y.clone()),
            ((10, 13), -y.clone()),
            ((13, 13), -(&y * &y)),
            ((8, 14), s(-1)),
            ((15, 12), s(-1)),
            ((14, 14), one_minus(-2)),
            ((16, 16), -s(-2)),
        ];
        for ((row, col), v) in expect {
            assert_eq!(r.get(row - 1, col - 1), v, "entry ({row},{col})");
        }
    }

    #[test]
    fn s_blocks() {
        let s = s_lg31();
        assert_eq!(s.get(0, 0), LaurentHalf::one());
        assert_eq!(s.get(63, 63), -LaurentHalf::t_half(-6));
        // block on (e1⊗e2, e2⊗e1)
        assert!(s.get(1, 1).is_zero());
        assert_eq!(s.get(1, 8), LaurentHalf::t_half(-1));
        assert_eq!(s.get(8, 8), &LaurentHalf::one() - &LaurentHalf::t_half(-2));
        for c in 0..64 {
            assert!(!s.column(c).is_empty(), "column {c} empty");
        }
    }

    #[test]
    fn weights() {
        assert_eq!(*mu21().get(0), ext(1, -2, 0));
        assert!(mu21().trace().is_zero());
        assert_eq!(*mu31().get(7), LaurentHalf::int_monomial(-1, 3));
        assert_eq!(mu21_special().entries(), &[s(-2), -s(-2), -s(-2), s(-2)]);
        fn s(h: i64) -> LaurentHalf {
            LaurentHalf::t_half(h)
        }
    }

    #[test]
    fn unknot_values() {
        for f in LgFlavor::ALL {
            let v = lg_invariant(&BraidWord::identity(1), f).unwrap();
            match v {
                LgValue::TwoVar(x) => assert!(x.is_one()),
                LgValue::OneVar(p) => assert!(p.is_one()),
            }
        }
    }

    #[test]
    fn trefoil_special_values() {
        let t = word(2, "1 1 1");
        let raw = lg_trace(&t, LgFlavor::Lg21Special).unwrap();
        assert_eq!(raw.as_one_var().unwrap(), &p(-4, &[-1, 0, 2, 0, -3, 0, 2, 0, -1]));
        let inv = lg_invariant(&t, LgFlavor::Lg21Special).unwrap();
        assert_eq!(inv.as_one_var().unwrap(), &p(-4, &[1, 0, -2, 0, 3, 0, -2, 0, 1]));
        let lg31 = lg_invariant(&t, LgFlavor::Lg31Special).unwrap();
        let delta = p(0, &[1, 0, -1, 0, 1]);
        assert_eq!(lg31.as_one_var().unwrap(), &(&delta * &delta * delta.clone()).shift(-9));
    }

    #[test]
    fn one_crossing_unknot() {
        let b = word(2, "1");
        assert_eq!(lg_invariant(&b, LgFlavor::Lg21Special).unwrap().as_one_var().unwrap(), &LaurentHalf::one());
        assert_eq!(lg_trace(&b, LgFlavor::Lg31Special).unwrap().as_one_var().unwrap(), &LaurentHalf::t_half(3));
    }
}
