//! Braid words and the moves that preserve (or predictably change) their closure.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;

/// One Artin generator `σ_index` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(index: usize, inverse: bool) -> Self {
        Self { index, inverse }
    }

    pub fn signed(self) -> i64 {
        if self.inverse {
            -(self.index as i64)
        } else {
            self.index as i64
        }
    }

    pub fn flipped(self) -> Self {
        Self { index: self.index, inverse: !self.inverse }
    }
}

/// A word in the Artin generators of `B_strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

/// The moves a check may apply to a braid.
#[derive(Clone, Debug)]
pub enum MarkovMove {
    /// `g b g^{-1}`.
    Conjugate(BraidWord),
    /// Embed in `B_{n+1}` and append `σ_n^{±1}`.
    Stabilize { positive: bool },
    /// Reversed word with every letter inverted.
    Inverse,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, Error> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        for l in &letters {
            if l.index == 0 {
                return Err(Error::ZeroGenerator);
            }
            if l.index >= strands {
                return Err(Error::GeneratorOutOfRange { index: l.index, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "braid needs at least one strand");
        Self { strands, letters: Vec::new() }
    }

    /// From signed generator indices; negative means inverse.
    pub fn from_signed(strands: usize, word: &[i64]) -> Result<Self, Error> {
        let mut letters = Vec::with_capacity(word.len());
        for &k in word {
            if k == 0 {
                return Err(Error::ZeroGenerator);
            }
            letters.push(Letter::new(k.unsigned_abs() as usize, k < 0));
        }
        Self::new(strands, letters)
    }

    /// Parses whitespace-separated nonzero integers.
    pub fn parse(text: &str, strands: usize) -> Result<Self, Error> {
        let mut word = Vec::new();
        for tok in text.split_whitespace() {
            let k: i64 = tok.parse().map_err(|_| Error::MalformedToken(tok.to_string()))?;
            word.push(k);
        }
        Self::from_signed(strands, &word)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    /// `σ_i^ε ↦ σ_{n-i}^ε`: the braid seen from the other side.
    pub fn hat(&self) -> Self {
        let n = self.strands;
        let letters = self.letters.iter().map(|l| Letter::new(n - l.index, l.inverse)).collect();
        Self { strands: n, letters }
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|l| l.flipped()).collect();
        Self { strands: self.strands, letters }
    }

    pub fn concat(&self, other: &Self) -> Result<Self, Error> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    pub fn conjugate(&self, g: &Self) -> Result<Self, Error> {
        if self.strands != g.strands {
            return Err(Error::StrandMismatch(self.strands, g.strands));
        }
        g.concat(self)?.concat(&g.inverse())
    }

    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, !positive));
        Self { strands: self.strands + 1, letters }
    }

    pub fn apply_move(&self, mv: &MarkovMove) -> Result<Self, Error> {
        match mv {
            MarkovMove::Conjugate(g) => self.conjugate(g),
            MarkovMove::Stabilize { positive } => Ok(self.stabilize(*positive)),
            MarkovMove::Inverse => Ok(self.inverse()),
        }
    }

    /// Deterministic pseudorandom word with letters uniform over the
    /// `2(n-1)` signed generators. On one strand the word is always empty.
    pub fn random(seed: u64, strands: usize, length: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(&mut rng, strands, length)
    }

    pub fn random_with<R: Rng>(rng: &mut R, strands: usize, length: usize) -> Self {
        assert!(strands > 0, "braid needs at least one strand");
        if strands == 1 {
            return Self::identity(1);
        }
        let letters = (0..length)
            .map(|_| Letter::new(rng.gen_range(1..strands), rng.gen_bool(0.5)))
            .collect();
        Self { strands, letters }
    }

    /// Permutation induced on strand positions (0-based): strand at position
    /// `p` ends at `perm[p]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        count
    }
}

impl fmt::Display for BraidWord {
    /// Canonical text form: signed indices separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l.signed())?;
        }
        Ok(())
    }
}
