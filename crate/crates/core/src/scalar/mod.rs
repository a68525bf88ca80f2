//! Exact scalar rings.
//!
//! Every matrix in this crate lives over one of three rings:
//!
//! * [`LaurentHalf`]: Laurent polynomials in `t^{1/2}` with rational coefficients,
//! * [`LaurentHalf2`]: the same in two variables `t0^{1/2}`, `t1^{1/2}`,
//! * [`ExtScalar`]: `LaurentHalf2[Y] / (Y^2 - (t0 - 1)(1 - t1))`.
//!
//! Exponents are always stored as integer counts of half powers, so
//! `t^{3/2}` has half-exponent `3`.

mod eval;
mod ext;
mod laurent;
mod laurent2;
mod serial;
mod unit;

pub use eval::{EvalPoint, Evaluate};
pub use ext::ExtScalar;
pub use laurent::LaurentHalf;
pub use laurent2::LaurentHalf2;
pub use serial::{TermRecord, Terms};
pub use unit::{equal_up_to_unit, normalize_unit, Unit};

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational coefficient.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Commutative ring interface used by the generic linear algebra.
///
/// The method names deliberately differ from `std::ops` so that concrete
/// types can implement both without ambiguity.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(k: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    /// `self += rhs`.
    fn accumulate(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }

    /// `self += a * b`; the hot path of every sparse product.
    fn accumulate_product(&mut self, a: &Self, b: &Self) {
        self.accumulate(&a.times(b));
    }

    /// Inverse if `self` is an obvious unit (a signed rational monomial),
    /// `None` otherwise. Elimination only ever pivots on such entries.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Ring morphisms from the two-variable rings down to fewer variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `t1 := t0^{-1}` with `t1^{1/2} := -t0^{-1/2}` and `Y := t0^{1/2} - t0^{-1/2}`.
    T1ToInvT0,
    /// `t1 := 1` with `t1^{1/2} := 1` and `Y := 0`.
    T1ToOne,
    /// `t0 := t0^{-1}` on one-variable polynomials.
    T0ToInvT0,
}
