use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{LaurentHalf, Ring};

/// A unit `sign * t^{shift/2}` of the Laurent ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Unit {
    pub sign: i8,
    pub shift: i64,
}

impl Unit {
    pub const ONE: Unit = Unit { sign: 1, shift: 0 };

    pub fn inverse(self) -> Unit {
        Unit { sign: self.sign, shift: -self.shift }
    }

    pub fn apply(self, p: &LaurentHalf) -> LaurentHalf {
        let q = p.shift(self.shift);
        if self.sign < 0 {
            q.negated()
        } else {
            q
        }
    }
}

/// Finds `(s, k)` with `p = s * t^{k/2} * q`, if one exists.
///
/// Two zeros are equal with the trivial unit; zero is never a unit
/// multiple of a nonzero polynomial.
pub fn equal_up_to_unit(p: &LaurentHalf, q: &LaurentHalf) -> Option<Unit> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Some(Unit::ONE),
        (true, false) | (false, true) => return None,
        _ => {}
    }
    let shift = p.min_half_exp()? - q.min_half_exp()?;
    let ratio = p.lowest_coeff()? / q.lowest_coeff()?;
    let sign = if ratio.is_one() {
        1
    } else if (-&ratio).is_one() {
        -1
    } else {
        return None;
    };
    let unit = Unit { sign, shift };
    (unit.apply(q) == *p).then_some(unit)
}

/// The representative of `p`'s unit class with lowest exponent zero and a
/// positive lowest coefficient, together with the unit `u` such that
/// `normalized = u * p`.
pub fn normalize_unit(p: &LaurentHalf) -> (LaurentHalf, Unit) {
    let Some(lo) = p.min_half_exp() else {
        return (LaurentHalf::zero(), Unit::ONE);
    };
    let sign = if p.lowest_coeff().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
    let unit = Unit { sign, shift: -lo };
    (unit.apply(p), unit)
}
