use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LyndonWord;

/// Finitely supported integer combination of Lyndon basis elements.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// Lie elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeLieElement {
    terms: BTreeMap<LyndonWord, BigInt>,
}

impl FreeLieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(word: LyndonWord) -> Self {
        Self::term(word, BigInt::one())
    }

    pub fn term(word: LyndonWord, coeff: BigInt) -> Self {
        let mut e = Self::zero();
        e.add_term(word, coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (LyndonWord, BigInt)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, LyndonWord, BigInt> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &LyndonWord) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// The common degree of all terms, or `None` for zero or inhomogeneous
    /// elements.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(LyndonWord::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add_term(&mut self, word: LyndonWord, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &FreeLieElement, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeLieElement {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<LyndonWord, BigInt> {
        self.terms
    }
}

impl Neg for FreeLieElement {
    type Output = FreeLieElement;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add for FreeLieElement {
    type Output = FreeLieElement;
    fn add(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl Sub for FreeLieElement {
    type Output = FreeLieElement;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}
