use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{LaurentHalf, LaurentHalf2, Ring, Specialization};

/// `base + ycoef * Y` with `Y^2 = (t0 - 1)(1 - t1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtScalar {
    pub base: LaurentHalf2,
    pub ycoef: LaurentHalf2,
}

impl ExtScalar {
    pub fn new(base: LaurentHalf2, ycoef: LaurentHalf2) -> Self {
        Self { base, ycoef }
    }

    pub fn from_base(base: LaurentHalf2) -> Self {
        Self { base, ycoef: LaurentHalf2::zero() }
    }

    /// The formal square root `Y`.
    pub fn y() -> Self {
        Self { base: LaurentHalf2::zero(), ycoef: LaurentHalf2::one() }
    }

    /// `Y^2 = (t0 - 1)(1 - t1) = t0 - t0 t1 - 1 + t1`.
    pub fn y_squared() -> LaurentHalf2 {
        LaurentHalf2::from_terms([
            ((2, 0), super::rat(1)),
            ((2, 2), super::rat(-1)),
            ((0, 0), super::rat(-1)),
            ((0, 2), super::rat(1)),
        ])
    }

    pub fn mono(k: i64, e0: i64, e1: i64) -> Self {
        Self::from_base(LaurentHalf2::int_monomial(k, e0, e1))
    }

    pub fn specialize(&self, rule: Specialization) -> LaurentHalf {
        let base = self.base.specialize(rule);
        match rule {
            Specialization::T1ToInvT0 => {
                let y = LaurentHalf::from_ints(-1, &[-1, 0, 1]);
                &base + &(&self.ycoef.specialize(rule) * &y)
            }
            Specialization::T1ToOne => base,
            Specialization::T0ToInvT0 => panic!("t0 -> 1/t0 applies to one-variable polynomials"),
        }
    }

    pub fn swap_variables(&self) -> Self {
        Self { base: self.base.swap_variables(), ycoef: self.ycoef.swap_variables() }
    }
}

impl Ring for ExtScalar {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_base(LaurentHalf2::one())
    }
    fn from_int(k: i64) -> Self {
        Self::mono(k, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.ycoef.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Self { base: self.base.plus(&rhs.base), ycoef: self.ycoef.plus(&rhs.ycoef) }
    }
    fn minus(&self, rhs: &Self) -> Self {
        Self { base: self.base.minus(&rhs.base), ycoef: self.ycoef.minus(&rhs.ycoef) }
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        out.accumulate_product(self, rhs);
        out
    }
    fn negated(&self) -> Self {
        Self { base: self.base.negated(), ycoef: self.ycoef.negated() }
    }
    fn accumulate(&mut self, rhs: &Self) {
        self.base.accumulate(&rhs.base);
        self.ycoef.accumulate(&rhs.ycoef);
    }
    fn accumulate_product(&mut self, a: &Self, b: &Self) {
        self.base.accumulate_product(&a.base, &b.base);
        if !a.ycoef.is_zero() && !b.ycoef.is_zero() {
            let yy = a.ycoef.times(&b.ycoef);
            self.base.accumulate_product(&yy, &Self::y_squared());
        }
        self.ycoef.accumulate_product(&a.base, &b.ycoef);
        self.ycoef.accumulate_product(&a.ycoef, &b.base);
    }
    fn unit_inverse(&self) -> Option<Self> {
        if !self.ycoef.is_zero() {
            return None;
        }
        self.base.unit_inverse().map(Self::from_base)
    }
}

impl Add for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        self.plus(rhs)
    }
}

impl Sub for &ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &ExtScalar) -> ExtScalar {
        self.minus(rhs)
    }
}

impl Mul for &ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: &ExtScalar) -> ExtScalar {
        self.times(rhs)
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        self.negated()
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.base.is_zero(), self.ycoef.is_zero()) {
            (_, true) => write!(f, "{}", self.base),
            (true, false) => write!(f, "({})*Y", self.ycoef),
            (false, false) => write!(f, "{} + ({})*Y", self.base, self.ycoef),
        }
    }
}

impl fmt::Debug for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtScalar({self})")
    }
}
