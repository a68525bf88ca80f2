//! Term-list serialization shared by every scalar ring.
//!
//! A polynomial is a list of records
//! `{numerator, denominator, half_exp_t0, half_exp_t1, y_degree}`.
//! Integers that fit in `i64` are written as JSON numbers, larger ones as
//! decimal strings; both forms are accepted on input.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExtScalar, LaurentHalf, LaurentHalf2, Rational};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    #[serde(with = "big_int")]
    pub numerator: BigInt,
    #[serde(with = "big_int")]
    pub denominator: BigInt,
    pub half_exp_t0: i64,
    pub half_exp_t1: i64,
    pub y_degree: u8,
}

impl TermRecord {
    fn new(c: &Rational, half_exp_t0: i64, half_exp_t1: i64, y_degree: u8) -> Self {
        Self {
            numerator: c.numer().clone(),
            denominator: c.denom().clone(),
            half_exp_t0,
            half_exp_t1,
            y_degree,
        }
    }

    fn coefficient(&self) -> Result<Rational, Error> {
        if self.denominator == BigInt::from(0) {
            return Err(Error::Format("zero denominator in term record".into()));
        }
        Ok(Rational::new(self.numerator.clone(), self.denominator.clone()))
    }
}

mod big_int {
    use super::*;
    use num_traits::ToPrimitive;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(k) => s.serialize_i64(k),
            None => s.serialize_str(&v.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(k) => Ok(BigInt::from(k)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Conversion to and from the term-record list.
pub trait Terms: Sized {
    fn to_records(&self) -> Vec<TermRecord>;
    fn from_records(records: &[TermRecord]) -> Result<Self, Error>;
}

impl Terms for LaurentHalf {
    fn to_records(&self) -> Vec<TermRecord> {
        self.terms().map(|(e, c)| TermRecord::new(c, e, 0, 0)).collect()
    }

    fn from_records(records: &[TermRecord]) -> Result<Self, Error> {
        let mut terms = Vec::with_capacity(records.len());
        for r in records {
            if r.half_exp_t1 != 0 || r.y_degree != 0 {
                return Err(Error::Format("one-variable polynomial has a t1 or Y term".into()));
            }
            terms.push((r.half_exp_t0, r.coefficient()?));
        }
        Ok(Self::from_terms(terms))
    }
}

impl Terms for LaurentHalf2 {
    fn to_records(&self) -> Vec<TermRecord> {
        self.terms().map(|((a, b), c)| TermRecord::new(c, a, b, 0)).collect()
    }

    fn from_records(records: &[TermRecord]) -> Result<Self, Error> {
        let mut terms = Vec::with_capacity(records.len());
        for r in records {
            if r.y_degree != 0 {
                return Err(Error::Format("polynomial without Y has a Y term".into()));
            }
            terms.push(((r.half_exp_t0, r.half_exp_t1), r.coefficient()?));
        }
        Ok(Self::from_terms(terms))
    }
}

impl Terms for ExtScalar {
    fn to_records(&self) -> Vec<TermRecord> {
        let base = self.base.terms().map(|((a, b), c)| TermRecord::new(c, a, b, 0));
        let y = self.ycoef.terms().map(|((a, b), c)| TermRecord::new(c, a, b, 1));
        base.chain(y).collect()
    }

    fn from_records(records: &[TermRecord]) -> Result<Self, Error> {
        let mut base = Vec::new();
        let mut ycoef = Vec::new();
        for r in records {
            let entry = ((r.half_exp_t0, r.half_exp_t1), r.coefficient()?);
            match r.y_degree {
                0 => base.push(entry),
                1 => ycoef.push(entry),
                d => return Err(Error::Format(format!("y_degree must be 0 or 1, got {d}"))),
            }
        }
        Ok(Self::new(LaurentHalf2::from_terms(base), LaurentHalf2::from_terms(ycoef)))
    }
}
