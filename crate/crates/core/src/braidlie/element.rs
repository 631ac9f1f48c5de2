use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::Generator;
use crate::freelie::{FreeLieElement, LyndonWord};
use crate::{syntax, Error, Result};

/// Element of the graded Lie algebra of `P_n`, stored by its components in
/// `L[V_2] ⊕ … ⊕ L[V_n]`.
///
/// Component `m` is a free Lie element over the letters of
/// `V_m = {B(1,m) < … < B(m-1,m)}`; zero components are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PnLieElement {
    n: usize,
    components: BTreeMap<usize, FreeLieElement>,
}

impl PnLieElement {
    pub fn zero(n: usize) -> Self {
        PnLieElement { n, components: BTreeMap::new() }
    }

    /// Degree-one element for `g`. The caller is responsible for `g` lying
    /// within `n` strands (see [`Generator::checked`]).
    pub fn generator(n: usize, g: Generator) -> Self {
        Self::from_component(n, g.component(), FreeLieElement::basis(LyndonWord::letter(g.letter())))
    }

    pub fn from_component(n: usize, m: usize, x: FreeLieElement) -> Self {
        let mut e = Self::zero(n);
        e.add_component(m, x);
        e
    }

    pub fn basis_element(n: usize, m: usize, w: LyndonWord) -> Self {
        Self::from_component(n, m, FreeLieElement::basis(w))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &BTreeMap<usize, FreeLieElement> {
        &self.components
    }

    pub fn component(&self, m: usize) -> FreeLieElement {
        self.components.get(&m).cloned().unwrap_or_default()
    }

    /// Common degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.components.values().map(FreeLieElement::degree);
        let d = degrees.next()??;
        degrees.all(|e| e == Some(d)).then_some(d)
    }

    /// `(component, word, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &LyndonWord, &BigInt)> {
        self.components
            .iter()
            .flat_map(|(&m, x)| x.terms().map(move |(w, c)| (m, w, c)))
    }

    pub fn add_component(&mut self, m: usize, x: FreeLieElement) {
        if x.is_zero() {
            return;
        }
        let slot = self.components.entry(m).or_default();
        *slot = std::mem::take(slot) + x;
        if slot.is_zero() {
            self.components.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &PnLieElement, c: &BigInt) {
        for (&m, x) in &other.components {
            self.add_component(m, x.scaled(c));
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Same components viewed over a different strand count.
    pub(crate) fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub(crate) fn same_n(&self, other: &PnLieElement) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::MismatchedStrands(self.n, other.n))
        }
    }
}

/// Concatenated generator labels of a word in component `m`.
pub fn word_label(m: usize, w: &LyndonWord) -> String {
    w.letters().iter().map(|&l| Generator::from_letter(l, m).to_string()).collect()
}

impl fmt::Display for PnLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&syntax::format_terms(self.terms().map(|(m, w, c)| (word_label(m, w), c))))
    }
}

impl Add for PnLieElement {
    type Output = PnLieElement;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "adding elements over different strand counts");
        for (m, x) in rhs.components {
            self.add_component(m, x);
        }
        self
    }
}

impl Neg for PnLieElement {
    type Output = PnLieElement;
    fn neg(self) -> Self {
        PnLieElement {
            n: self.n,
            components: self.components.into_iter().map(|(m, x)| (m, -x)).collect(),
        }
    }
}

impl Sub for PnLieElement {
    type Output = PnLieElement;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// Basis of the degree-`q` part: Lyndon words of each `L[V_m]`, ordered by
/// component and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    n: usize,
    degree: usize,
    entries: Vec<(usize, LyndonWord)>,
    index: HashMap<(usize, LyndonWord), usize>,
}

impl GradedBasis {
    pub fn from_entries(n: usize, degree: usize, entries: Vec<(usize, LyndonWord)>) -> Self {
        let index = entries.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        GradedBasis { n, degree, entries, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, LyndonWord)] {
        &self.entries
    }

    pub fn position(&self, m: usize, w: &LyndonWord) -> Option<usize> {
        self.index.get(&(m, w.clone())).copied()
    }

    /// Indices of the entries in component `m`.
    pub fn component_indices(&self, m: usize) -> Vec<usize> {
        (0..self.entries.len()).filter(|&i| self.entries[i].0 == m).collect()
    }

    pub fn element(&self, i: usize) -> PnLieElement {
        let (m, w) = &self.entries[i];
        PnLieElement::basis_element(self.n, *m, w.clone())
    }

    pub fn coordinates(&self, x: &PnLieElement) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.entries.len()];
        for (m, w, c) in x.terms() {
            let i = self.position(m, w).ok_or_else(|| {
                Error::Dimension(format!("term {} is not in the degree-{} basis", word_label(m, w), self.degree))
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn combination(&self, coeffs: &[BigInt]) -> PnLieElement {
        assert_eq!(coeffs.len(), self.entries.len());
        let mut out = PnLieElement::zero(self.n);
        for ((m, w), c) in self.entries.iter().zip(coeffs) {
            if !c.is_zero() {
                out.add_component(*m, FreeLieElement::term(w.clone(), c.clone()));
            }
        }
        out
    }
}
