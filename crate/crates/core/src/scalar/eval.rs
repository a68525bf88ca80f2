use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{ExtScalar, LaurentHalf, LaurentHalf2, Rational};
use crate::error::Error;

/// A numeric point at which polynomials can be evaluated.
///
/// Half powers are taken from the stored square roots, so the caller
/// controls branch choices exactly.
#[derive(Clone, Copy, Debug)]
pub struct EvalPoint {
    pub t0_root: Complex64,
    pub t1_root: Complex64,
    pub y: Complex64,
}

impl EvalPoint {
    /// Point from `t0`, `t1`, `y` using principal square roots for the half
    /// powers. Fails unless `y^2 = (t0 - 1)(1 - t1)` to within `1e-9` relative.
    pub fn new(t0: Complex64, t1: Complex64, y: Complex64) -> Result<Self, Error> {
        Self::from_roots(t0.sqrt(), t1.sqrt(), y)
    }

    pub fn from_roots(t0_root: Complex64, t1_root: Complex64, y: Complex64) -> Result<Self, Error> {
        let t0 = t0_root * t0_root;
        let t1 = t1_root * t1_root;
        let want = (t0 - 1.0) * (1.0 - t1);
        let scale = 1.0 + want.norm();
        if (y * y - want).norm() > 1e-9 * scale {
            return Err(Error::InconsistentY);
        }
        Ok(Self { t0_root, t1_root, y })
    }

    /// Single-variable point; `t1 = 1` and `y = 0`.
    pub fn single(t: Complex64) -> Self {
        Self { t0_root: t.sqrt(), t1_root: Complex64::new(1.0, 0.0), y: Complex64::new(0.0, 0.0) }
    }
}

fn to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

pub trait Evaluate {
    fn evaluate(&self, at: &EvalPoint) -> Complex64;
}

impl Evaluate for LaurentHalf {
    fn evaluate(&self, at: &EvalPoint) -> Complex64 {
        self.terms().map(|(e, c)| at.t0_root.powi(e as i32) * to_f64(c)).sum()
    }
}

impl Evaluate for LaurentHalf2 {
    fn evaluate(&self, at: &EvalPoint) -> Complex64 {
        self.terms()
            .map(|((a, b), c)| at.t0_root.powi(a as i32) * at.t1_root.powi(b as i32) * to_f64(c))
            .sum()
    }
}

impl Evaluate for ExtScalar {
    fn evaluate(&self, at: &EvalPoint) -> Complex64 {
        self.base.evaluate(at) + self.ycoef.evaluate(at) * at.y
    }
}
