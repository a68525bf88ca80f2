//! Burau-type representations and the two routes to the Alexander polynomial:
//! the reduced Burau determinant and the weighted trace of a 4×4 R-matrix.

use crate::braid::BraidWord;
use crate::error::Error;
use crate::matrix::{DenseMatrix, WeightVector};
use crate::scalar::{LaurentHalf, Rational};
use crate::tensor::{weighted_trace, LocalOperator, TensorRep};

/// Which of the Burau-type matrices `σ_i` is sent to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BurauVariant {
    /// `f_i ↦ (1-t) f_i + t^{1/2} f_{i+1}`, `f_{i+1} ↦ t^{1/2} f_i`.
    Standard,
    /// `Standard` with `t` replaced by `t^{-1}`.
    F21,
    /// `g_i ↦ -t^{1/2} g_{i+1}`, `g_{i+1} ↦ -t^{1/2} g_i + (1-t) g_{i+1}`.
    G21,
    /// `f_i ↦ t^{-1/2} f_{i+1}`, `f_{i+1} ↦ t^{-1/2} f_i + (1-t^{-1}) f_{i+1}`.
    FGH31,
}

impl BurauVariant {
    pub const ALL: [BurauVariant; 4] = [Self::Standard, Self::F21, Self::G21, Self::FGH31];

    /// The 2×2 block on `(f_i, f_{i+1})`, column action.
    fn block(self) -> [[LaurentHalf; 2]; 2] {
        let z = LaurentHalf::zero;
        let s = LaurentHalf::t_half;
        let one_minus = |e: i64| &LaurentHalf::one() - &LaurentHalf::t_half(e);
        match self {
            Self::Standard => [[one_minus(2), s(1)], [s(1), z()]],
            Self::F21 => [[one_minus(-2), s(-1)], [s(-1), z()]],
            Self::G21 => [[z(), -s(1)], [-s(1), one_minus(2)]],
            Self::FGH31 => [[z(), s(-1)], [s(-1), one_minus(-2)]],
        }
    }
}

/// `n × n` image of `σ_i` (1-based `i`).
pub fn burau_generator(n: usize, i: usize, variant: BurauVariant) -> Result<DenseMatrix<LaurentHalf>, Error> {
    if i == 0 {
        return Err(Error::ZeroGenerator);
    }
    if i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, strands: n });
    }
    let mut m = DenseMatrix::identity(n);
    let block = variant.block();
    for (r, row) in block.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m.set(i - 1 + r, i - 1 + c, v);
        }
    }
    Ok(m)
}

/// `rep(b) = rep(l_1) rep(l_2) ⋯`, inverse letters by exact inversion.
pub fn burau_image(b: &BraidWord, variant: BurauVariant) -> Result<DenseMatrix<LaurentHalf>, Error> {
    let n = b.strands();
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let g = burau_generator(n, i, variant)?;
        let inv = g.inverse()?;
        gens.push((g, inv));
    }
    let mut m = DenseMatrix::identity(n);
    for l in b.letters() {
        let (g, inv) = &gens[l.index - 1];
        m = m.mul(if l.inverse { inv } else { g });
    }
    Ok(m)
}

/// `δ_n = Σ t^{-(n-k)/2} f_k`, fixed by every standard Burau matrix.
pub fn delta_vector(n: usize) -> Vec<LaurentHalf> {
    (1..=n).map(|k| LaurentHalf::t_half(-((n - k) as i64))).collect()
}

/// Action on `W_n / <δ_n>` in the basis of the images of `f_1, …, f_{n-1}`,
/// using `f_n ≡ -Σ_{k<n} t^{-(n-k)/2} f_k`.
pub fn reduced_burau(b: &BraidWord) -> Result<DenseMatrix<LaurentHalf>, Error> {
    let n = b.strands();
    if n < 2 {
        return Err(Error::TooFewStrands { needed: 2, got: n });
    }
    let m = burau_image(b, BurauVariant::Standard)?;
    let mut out = DenseMatrix::zeros(n - 1, n - 1);
    for k in 0..n - 1 {
        let coef = LaurentHalf::t_half(-((n - 1 - k) as i64));
        for c in 0..n - 1 {
            out.set(k, c, m.get(k, c) - &(m.get(n - 1, c) * &coef));
        }
    }
    Ok(out)
}

/// `(1-t) det(I - Ψ̂(b)) / (1-t^n)`, computed exactly. One strand gives 1.
pub fn alexander_det(b: &BraidWord) -> Result<LaurentHalf, Error> {
    let n = b.strands();
    if n == 1 {
        return Ok(LaurentHalf::one());
    }
    let reduced = reduced_burau(b)?;
    let det = DenseMatrix::identity(n - 1).minus(&reduced).det()?;
    let one_minus_t = &LaurentHalf::one() - &LaurentHalf::t();
    let one_minus_tn = &LaurentHalf::one() - &LaurentHalf::t_half(2 * n as i64);
    (&det * &one_minus_t).exact_divide(&one_minus_tn)
}

/// The 4×4 R-matrices on `V ⊗ V`, basis `e0⊗e0, e0⊗e1, e1⊗e0, e1⊗e1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SmallR {
    R1,
    /// `-t^{-1} R1`.
    R2,
    /// `R2` with `t` replaced by `t^{-1}`.
    R3,
}

pub fn r_small(which: SmallR) -> LocalOperator<LaurentHalf> {
    let s = LaurentHalf::t_half;
    let r1 = || {
        LocalOperator::from_entries(
            2,
            [
                (0, 0, LaurentHalf::one()),
                (1, 2, s(1)),
                (2, 1, s(1)),
                (2, 2, &LaurentHalf::one() - &s(2)),
                (3, 3, -s(2)),
            ],
        )
    };
    match which {
        SmallR::R1 => r1(),
        SmallR::R2 => r1().scaled(&-s(-2)),
        SmallR::R3 => r1().scaled(&-s(-2)).map(|x| x.invert_variable()),
    }
}

/// Site weights for the Alexander trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlexanderWeight {
    /// `h = diag(t^{1/2}, -t^{1/2})`.
    H,
    /// `h̃ = diag(1, -1)`.
    HTilde,
}

impl AlexanderWeight {
    pub fn vector(self) -> WeightVector<LaurentHalf> {
        match self {
            Self::H => WeightVector::new(vec![LaurentHalf::t_half(1), -LaurentHalf::t_half(1)]),
            Self::HTilde => WeightVector::new(vec![LaurentHalf::one(), -LaurentHalf::one()]),
        }
    }
}

/// `½ trace((id ⊗ w^{⊗ n-1}) ∘ rep(b))`, times `t^{-(n-1)/2}` when `normalized`.
pub fn alexander_trace(b: &BraidWord, rep: SmallR, weight: AlexanderWeight, normalized: bool) -> Result<LaurentHalf, Error> {
    let rep = TensorRep::new(r_small(rep));
    alexander_trace_with(&rep, b, weight, normalized)
}

/// As [`alexander_trace`] with a prebuilt (and possibly cached) representation.
pub fn alexander_trace_with(
    rep: &TensorRep<LaurentHalf>,
    b: &BraidWord,
    weight: AlexanderWeight,
    normalized: bool,
) -> Result<LaurentHalf, Error> {
    let tr = weighted_trace(&rep.image(b), &weight.vector())?;
    let half = LaurentHalf::constant(Rational::new(1.into(), 2.into()));
    let mut out = &tr * &half;
    if normalized {
        out = out.shift(-(b.strands() as i64 - 1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::equal_up_to_unit;

    fn p(lo: i64, c: &[i64]) -> LaurentHalf {
        LaurentHalf::from_ints(lo, c)
    }

    fn word(n: usize, w: &str) -> BraidWord {
        BraidWord::parse(w, n).unwrap()
    }

    #[test]
    fn standard_block_for_two_strands() {
        let m = burau_generator(2, 1, BurauVariant::Standard).unwrap();
        assert_eq!(m, DenseMatrix::from_rows(vec![vec![p(0, &[1, 0, -1]), p(1, &[1])], vec![p(1, &[1]), LaurentHalf::zero()]]));
        assert!(burau_generator(2, 2, BurauVariant::Standard).is_err());
    }

    #[test]
    fn generators_invert() {
        for v in BurauVariant::ALL {
            let g = burau_generator(4, 2, v).unwrap();
            assert!(g.mul(&g.inverse().unwrap()).is_identity(), "{v:?}");
        }
    }

    #[test]
    fn delta_fixed_by_sigma1() {
        let m = burau_generator(2, 1, BurauVariant::Standard).unwrap();
        let d = DenseMatrix::from_rows(delta_vector(2).into_iter().map(|x| vec![x]).collect());
        assert_eq!(m.mul(&d), d);
    }

    #[test]
    fn reduced_sigma1() {
        let r = reduced_burau(&word(2, "1")).unwrap();
        assert_eq!(*r.get(0, 0), -LaurentHalf::t());
        assert!(reduced_burau(&BraidWord::identity(3)).unwrap().is_identity());
        assert!(reduced_burau(&BraidWord::identity(1)).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(alexander_det(&word(2, "1 1 1")).unwrap(), p(0, &[1, 0, -1, 0, 1]));
        assert_eq!(alexander_det(&word(2, "1 1")).unwrap(), p(0, &[1, 0, -1]));
        let fig8 = alexander_det(&word(3, "1 -2 1 -2")).unwrap();
        assert!(equal_up_to_unit(&fig8, &p(-2, &[-1, 0, 3, 0, -1])).is_some());
        assert_eq!(alexander_det(&BraidWord::identity(1)).unwrap(), LaurentHalf::one());
        assert!(alexander_det(&BraidWord::identity(2)).unwrap().is_zero());
    }

    #[test]
    fn small_r_entries() {
        let r1 = r_small(SmallR::R1);
        assert_eq!(r1.get(3, 3), -LaurentHalf::t());
        assert_eq!(r1.get(1, 2), LaurentHalf::t_half(1));
        let r2 = r_small(SmallR::R2);
        assert_eq!(r2.get(0, 0), -LaurentHalf::t_half(-2));
        let r3 = r_small(SmallR::R3);
        assert_eq!(r3.get(0, 0), -LaurentHalf::t());
        assert_eq!(r3.get(3, 3), LaurentHalf::one());
    }

    #[test]
    fn trace_examples() {
        for (r, w) in [(SmallR::R1, AlexanderWeight::H), (SmallR::R3, AlexanderWeight::HTilde)] {
            assert_eq!(alexander_trace(&BraidWord::identity(1), r, w, true).unwrap(), LaurentHalf::one());
            let tr = alexander_trace(&word(2, "1 1 1"), r, w, false).unwrap();
            assert!(equal_up_to_unit(&tr, &p(0, &[1, 0, -1, 0, 1])).is_some(), "{r:?}: {tr}");
        }
    }
}
