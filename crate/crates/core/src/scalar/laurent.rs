use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, Rational, Ring};
use crate::error::Error;

/// Laurent polynomial in `t^{1/2}` with exact rational coefficients.
///
/// Stored densely: `coeffs[k]` is the coefficient of `t^{(lo + k)/2}`.
/// The vector is trimmed so that its first and last entries are nonzero;
/// zero is the empty vector with `lo == 0`. Two equal polynomials are
/// therefore structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentHalf {
    lo: i64,
    coeffs: Vec<Rational>,
}

impl LaurentHalf {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^{half_exp / 2}`.
    pub fn monomial(c: Rational, half_exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { lo: half_exp, coeffs: vec![c] }
    }

    /// `k * t^{half_exp / 2}` for a small integer `k`.
    pub fn int_monomial(k: i64, half_exp: i64) -> Self {
        Self::monomial(rat(k), half_exp)
    }

    /// `t^{half_exp / 2}`.
    pub fn t_half(half_exp: i64) -> Self {
        Self::int_monomial(1, half_exp)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::t_half(2)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let terms: Vec<(i64, Rational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|(e, _)| *e).min().unwrap();
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        let mut p = Self { lo, coeffs };
        p.trim();
        p
    }

    /// Build from integer coefficients of consecutive half powers starting at `lo`.
    pub fn from_ints(lo: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (lo + k as i64, rat(c))))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.lo = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms as `(half_exp, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.lo + k as i64, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Lowest half-exponent, `None` for zero.
    pub fn min_half_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn max_half_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `t^{half_exp/2}`.
    pub fn coeff(&self, half_exp: i64) -> Rational {
        let k = half_exp - self.lo;
        if k < 0 || k as usize >= self.coeffs.len() {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Multiply by `t^{half_shift/2}`.
    pub fn shift(&self, half_shift: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { lo: self.lo + half_shift, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { lo: self.lo, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitute `t -> t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / den`; fails when the remainder is nonzero.
    pub fn exact_divide(&self, den: &Self) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Polynomial long division in s = t^{1/2} after shifting both
        // operands to start at exponent zero.
        let mut rem: Vec<Rational> = self.coeffs.clone();
        let d = &den.coeffs;
        if rem.len() < d.len() {
            return Err(Error::NotDivisible);
        }
        let lead = d.last().unwrap();
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + d.len() - 1] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.iter().enumerate() {
                let sub = &c * dj;
                rem[k + j] -= sub;
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        let mut out = Self { lo: self.lo - den.lo, coeffs: q };
        out.trim();
        Ok(out)
    }

    /// `self += a * b` without materialising the product.
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let plo = a.lo + b.lo;
        let phi = plo + (a.coeffs.len() + b.coeffs.len()) as i64 - 2;
        if self.is_zero() {
            self.lo = plo;
        }
        let lo = self.lo.min(plo);
        let hi = phi.max(self.lo + self.coeffs.len() as i64 - 1);
        if lo < self.lo {
            let pad = (self.lo - lo) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_with(Rational::zero).take(pad));
            self.lo = lo;
        }
        let need = (hi - lo + 1) as usize;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, Rational::zero());
        }
        let base = (plo - self.lo) as usize;
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                self.coeffs[base + i + j] += x * y;
            }
        }
        self.trim();
    }

    fn add_scaled(&self, rhs: &Self, sign: i64) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign > 0 { rhs.clone() } else { -rhs };
        }
        let lo = self.lo.min(rhs.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(rhs.lo + rhs.coeffs.len() as i64);
        let mut coeffs = vec![Rational::zero(); (hi - lo) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(rhs.lo - lo) as usize + k];
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        let mut p = Self { lo, coeffs };
        p.trim();
        p
    }
}

impl Ring for LaurentHalf {
    fn zero() -> Self {
        LaurentHalf::zero()
    }
    fn one() -> Self {
        LaurentHalf::one()
    }
    fn from_int(k: i64) -> Self {
        LaurentHalf::int_monomial(k, 0)
    }
    fn is_zero(&self) -> bool {
        LaurentHalf::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, 1)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, -1)
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        out.add_product(self, rhs);
        out
    }
    fn negated(&self) -> Self {
        Self { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn accumulate(&mut self, rhs: &Self) {
        *self = self.add_scaled(rhs, 1);
    }
    fn accumulate_product(&mut self, a: &Self, b: &Self) {
        self.add_product(a, b);
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        Some(Self::monomial(self.coeffs[0].recip(), -self.lo))
    }
}

impl Add for &LaurentHalf {
    type Output = LaurentHalf;
    fn add(self, rhs: &LaurentHalf) -> LaurentHalf {
        self.plus(rhs)
    }
}

impl Sub for &LaurentHalf {
    type Output = LaurentHalf;
    fn sub(self, rhs: &LaurentHalf) -> LaurentHalf {
        self.minus(rhs)
    }
}

impl Mul for &LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: &LaurentHalf) -> LaurentHalf {
        self.times(rhs)
    }
}

impl Neg for &LaurentHalf {
    type Output = LaurentHalf;
    fn neg(self) -> LaurentHalf {
        self.negated()
    }
}

impl Add for LaurentHalf {
    type Output = LaurentHalf;
    fn add(self, rhs: LaurentHalf) -> LaurentHalf {
        self.plus(&rhs)
    }
}

impl Sub for LaurentHalf {
    type Output = LaurentHalf;
    fn sub(self, rhs: LaurentHalf) -> LaurentHalf {
        self.minus(&rhs)
    }
}

impl Mul for LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: LaurentHalf) -> LaurentHalf {
        self.times(&rhs)
    }
}

impl Neg for LaurentHalf {
    type Output = LaurentHalf;
    fn neg(self) -> LaurentHalf {
        self.negated()
    }
}

/// Writes `t^e` for a half-exponent `e` in variable `var`.
pub(crate) fn fmt_power(var: &str, half_exp: i64) -> String {
    match half_exp {
        0 => String::new(),
        2 => var.to_string(),
        e if e % 2 == 0 => format!("{var}^{}", e / 2),
        e => format!("{var}^({e}/2)"),
    }
}

/// Joins `(coefficient, monomial text)` pairs as `a + b - c`.
pub(crate) fn fmt_sum(f: &mut fmt::Formatter<'_>, terms: &[(Rational, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        let coef = if abs.is_integer() { abs.to_integer().to_string() } else { format!("({abs})") };
        match (mono.is_empty(), abs.is_one()) {
            (true, _) => write!(f, "{coef}")?,
            (false, true) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{coef}{mono}")?,
        }
    }
    Ok(())
}

impl fmt::Display for LaurentHalf {
    /// Ascending exponents, e.g. `1 - t + t^2` or `-t^(-1/2) + t^(1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, String)> =
            self.terms().map(|(e, c)| (c.clone(), fmt_power("t", e))).collect();
        fmt_sum(f, &terms)
    }
}

impl fmt::Debug for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentHalf({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lo: i64, c: &[i64]) -> LaurentHalf {
        LaurentHalf::from_ints(lo, c)
    }

    #[test]
    fn square_of_half_difference() {
        // (t^{1/2} - t^{-1/2})^2 = t - 2 + t^{-1}
        let y = p(-1, &[-1, 0, 1]);
        assert_eq!(&y * &y, p(-2, &[1, 0, -2, 0, 1]));
    }

    #[test]
    fn canonical_zero() {
        let a = p(3, &[1, 2]);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z, LaurentHalf::zero());
        assert_eq!(p(0, &[0, 0, 5, 0]), LaurentHalf::int_monomial(5, 2));
    }

    #[test]
    fn exact_divisions() {
        // (1 + t^3) / (1 + t) = 1 - t + t^2
        let num = p(0, &[1, 0, 0, 0, 0, 0, 1]);
        let den = p(0, &[1, 0, 1]);
        assert_eq!(num.exact_divide(&den).unwrap(), p(0, &[1, 0, -1, 0, 1]));
        // (1 - t^2) / (1 - t) = 1 + t
        let num = p(0, &[1, 0, 0, 0, -1]);
        let den = p(0, &[1, 0, -1]);
        assert_eq!(num.exact_divide(&den).unwrap(), p(0, &[1, 0, 1]));
        let q = p(-3, &[2, 0, 7]);
        assert_eq!(q.exact_divide(&LaurentHalf::one()).unwrap(), q);
    }

    #[test]
    fn division_errors() {
        let num = p(0, &[1, 0, 1]);
        assert!(matches!(num.exact_divide(&p(0, &[1, 0, -1])), Err(Error::NotDivisible)));
        assert!(matches!(num.exact_divide(&LaurentHalf::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn unit_inverse_only_for_monomials() {
        let u = LaurentHalf::int_monomial(-2, 3);
        assert_eq!(&u * &u.unit_inverse().unwrap(), LaurentHalf::one());
        assert!(p(0, &[1, 1]).unit_inverse().is_none());
        assert!(LaurentHalf::zero().unit_inverse().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(p(0, &[1, 0, -1, 0, 1]).to_string(), "1 - t + t^2");
        assert_eq!(p(-2, &[-1, 0, 3, 0, -1]).to_string(), "-t^-1 + 3 - t");
        assert_eq!(p(-1, &[-1, 0, 1]).to_string(), "-t^(-1/2) + t^(1/2)");
        assert_eq!(LaurentHalf::zero().to_string(), "0");
        let half = LaurentHalf::monomial(Rational::new(3.into(), 2.into()), 4);
        assert_eq!(half.to_string(), "(3/2)t^2");
    }

    #[test]
    fn accumulate_product_matches_times() {
        let a = p(-3, &[1, -2, 0, 4]);
        let b = p(5, &[2, 0, 1]);
        let mut acc = p(0, &[7, 1]);
        let expect = &acc + &(&a * &b);
        acc.accumulate_product(&a, &b);
        assert_eq!(acc, expect);
    }
}
