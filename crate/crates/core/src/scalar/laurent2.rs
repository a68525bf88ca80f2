use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::laurent::{fmt_power, fmt_sum};
use super::{rat, LaurentHalf, Rational, Ring, Specialization};

/// Laurent polynomial in `t0^{1/2}` and `t1^{1/2}` with rational coefficients.
///
/// Keys are `(half_exp_t0, half_exp_t1)`. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentHalf2 {
    terms: BTreeMap<(i64, i64), Rational>,
}

impl LaurentHalf2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int_monomial(1, 0, 0)
    }

    pub fn monomial(c: Rational, e0: i64, e1: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e0, e1), c);
        }
        Self { terms }
    }

    pub fn int_monomial(k: i64, e0: i64, e1: i64) -> Self {
        Self::monomial(rat(k), e0, e1)
    }

    pub fn t0() -> Self {
        Self::int_monomial(1, 2, 0)
    }

    pub fn t1() -> Self {
        Self::int_monomial(1, 0, 2)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), Rational)>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Embed a one-variable polynomial as a polynomial in `t0`.
    pub fn from_t0(p: &LaurentHalf) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    fn add_term(&mut self, key: (i64, i64), c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, e0: i64, e1: i64) -> Rational {
        self.terms.get(&(e0, e1)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exchange the roles of `t0` and `t1`.
    pub fn swap_variables(&self) -> Self {
        Self::from_terms(self.terms().map(|((a, b), c)| ((b, a), c.clone())))
    }

    /// Image in one variable under `rule` (`T1ToInvT0` or `T1ToOne`).
    ///
    /// # Panics
    /// On `T0ToInvT0`, which is a one-variable rule.
    pub fn specialize(&self, rule: Specialization) -> LaurentHalf {
        let terms = self.terms().map(|((a, b), c)| match rule {
            // t0^{a/2} (t1^{1/2})^b -> t0^{a/2} (-t0^{-1/2})^b
            Specialization::T1ToInvT0 => {
                let c = if b.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
                (a - b, c)
            }
            Specialization::T1ToOne => (a, c.clone()),
            Specialization::T0ToInvT0 => panic!("t0 -> 1/t0 applies to one-variable polynomials"),
        });
        LaurentHalf::from_terms(terms)
    }
}

impl Ring for LaurentHalf2 {
    fn zero() -> Self {
        LaurentHalf2::zero()
    }
    fn one() -> Self {
        LaurentHalf2::one()
    }
    fn from_int(k: i64) -> Self {
        Self::int_monomial(k, 0, 0)
    }
    fn is_zero(&self) -> bool {
        LaurentHalf2::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.accumulate(rhs);
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        out.accumulate_product(self, rhs);
        out
    }
    fn negated(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
    fn accumulate(&mut self, rhs: &Self) {
        for (k, c) in rhs.terms() {
            self.add_term(k, c.clone());
        }
    }
    fn accumulate_product(&mut self, a: &Self, b: &Self) {
        for ((a0, a1), x) in a.terms() {
            for ((b0, b1), y) in b.terms() {
                self.add_term((a0 + b0, a1 + b1), x * y);
            }
        }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((a, b), c) = self.terms().next().unwrap();
        Some(Self::monomial(c.recip(), -a, -b))
    }
}

impl Add for &LaurentHalf2 {
    type Output = LaurentHalf2;
    fn add(self, rhs: &LaurentHalf2) -> LaurentHalf2 {
        self.plus(rhs)
    }
}

impl Sub for &LaurentHalf2 {
    type Output = LaurentHalf2;
    fn sub(self, rhs: &LaurentHalf2) -> LaurentHalf2 {
        self.minus(rhs)
    }
}

impl Mul for &LaurentHalf2 {
    type Output = LaurentHalf2;
    fn mul(self, rhs: &LaurentHalf2) -> LaurentHalf2 {
        self.times(rhs)
    }
}

impl Neg for &LaurentHalf2 {
    type Output = LaurentHalf2;
    fn neg(self) -> LaurentHalf2 {
        self.negated()
    }
}

impl fmt::Display for LaurentHalf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, String)> = self
            .terms()
            .map(|((a, b), c)| {
                let mono = match (fmt_power("t0", a), fmt_power("t1", b)) {
                    (x, y) if x.is_empty() => y,
                    (x, y) if y.is_empty() => x,
                    (x, y) => format!("{x}*{y}"),
                };
                (c.clone(), mono)
            })
            .collect();
        fmt_sum(f, &terms)
    }
}

impl fmt::Debug for LaurentHalf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentHalf2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_root_relation_specializes_to_minus_one() {
        // -t0^{1/2} t1^{1/2} -> 1 under t1 := 1/t0
        let x = LaurentHalf2::int_monomial(-1, 1, 1);
        assert_eq!(x.specialize(Specialization::T1ToInvT0), LaurentHalf::one());
    }

    #[test]
    fn t1_to_one_drops_t1() {
        let x = &LaurentHalf2::t0() + &LaurentHalf2::int_monomial(3, 2, 5);
        assert_eq!(x.specialize(Specialization::T1ToOne), LaurentHalf::int_monomial(4, 2));
    }

    #[test]
    fn swap_is_involution() {
        let x = &LaurentHalf2::int_monomial(2, 1, -3) + &LaurentHalf2::t1();
        assert_eq!(x.swap_variables().swap_variables(), x);
        assert_eq!(x.swap_variables().coeff(-3, 1), rat(2));
    }
}
