//! Magnus expansion of free-group words into truncated noncommutative
//! power series, and the tensor embedding of the free Lie algebra.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::freelie::{standard_bracketing, BracketTree, FreeLieElement};

/// Free-group word: letters with exponent `+1` or `-1`.
pub type FreeWord = Vec<(u8, i8)>;

/// Element of `ℤ⟨⟨X_0, X_1, …⟩⟩` truncated above a given word length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorSeries {
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl TensorSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut s = Self::zero();
        s.add_term(Vec::new(), BigInt::one());
        s
    }

    pub fn letter(l: u8) -> Self {
        let mut s = Self::zero();
        s.add_term(vec![l], BigInt::one());
        s
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Vec<u8>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self, order: usize) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.len() + b.len() > order {
                    continue;
                }
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        TensorSeries { terms: self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    /// Lowest positive word length with a nonzero coefficient.
    pub fn lowest_positive_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).filter(|&l| l > 0).min()
    }
}

/// `x ↦ 1 + X`, `x⁻¹ ↦ 1 - X + X² - …`, truncated above `order`.
pub fn magnus_expand(word: &[(u8, i8)], order: usize) -> TensorSeries {
    let mut acc = TensorSeries::one();
    for &(l, e) in word {
        let factor = if e > 0 {
            TensorSeries::one().add(&TensorSeries::letter(l))
        } else {
            let mut s = TensorSeries::zero();
            for j in 0..=order {
                let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                s.add_term(vec![l; j], sign);
            }
            s
        };
        acc = acc.mul(&factor, order);
    }
    acc
}

pub fn inverse_word(w: &[(u8, i8)]) -> FreeWord {
    w.iter().rev().map(|&(l, e)| (l, -e)).collect()
}

/// The group commutator word `a b a⁻¹ b⁻¹` realizing a bracketing.
pub fn commutator_word(tree: &BracketTree<u8>) -> FreeWord {
    match tree {
        BracketTree::Leaf(l) => vec![(*l, 1)],
        BracketTree::Node(a, b) => {
            let a = commutator_word(a);
            let b = commutator_word(b);
            let mut w = a.clone();
            w.extend_from_slice(&b);
            w.extend(inverse_word(&a));
            w.extend(inverse_word(&b));
            w
        }
    }
}

/// Embeds a free Lie element into the tensor algebra via `[a,b] ↦ ab - ba`.
pub fn tensor_embedding(x: &FreeLieElement) -> TensorSeries {
    let mut out = TensorSeries::zero();
    for (w, c) in x.terms() {
        let t = tree_embedding(&standard_bracketing(w));
        for (word, d) in &t.terms {
            out.add_term(word.clone(), c * d);
        }
    }
    out
}

fn tree_embedding(tree: &BracketTree<u8>) -> TensorSeries {
    match tree {
        BracketTree::Leaf(l) => TensorSeries::letter(*l),
        BracketTree::Node(a, b) => {
            let a = tree_embedding(a);
            let b = tree_embedding(b);
            let order = usize::MAX;
            a.mul(&b, order).sub(&b.mul(&a, order))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_cancels() {
        let w: FreeWord = vec![(0, 1), (1, -1), (0, 1)];
        let mut both = w.clone();
        both.extend(inverse_word(&w));
        assert_eq!(magnus_expand(&both, 6), TensorSeries::one());
    }

    #[test]
    fn simple_commutator() {
        let tree = BracketTree::node(BracketTree::leaf(0u8), BracketTree::leaf(1u8));
        let m = magnus_expand(&commutator_word(&tree), 2);
        let mut expected = TensorSeries::one();
        expected.add_term(vec![0, 1], BigInt::one());
        expected.add_term(vec![1, 0], -BigInt::one());
        assert_eq!(m, expected);
    }
}
