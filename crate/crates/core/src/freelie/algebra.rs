use std::collections::HashMap;

use num_bigint::BigInt;

use super::{bracket, lyndon_words, normalize_letters, BracketTree, FreeLieElement, LyndonWord};
use crate::exactla::{self, IntMatrix};
use crate::{syntax, Error, Result, DEFAULT_DEGREE_CAP};

/// Ordered, nonempty set of distinct generator labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("empty".into()));
        }
        if symbols.len() > u8::MAX as usize + 1 {
            return Err(Error::InvalidAlphabet("more than 256 symbols".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet(format!("duplicate label `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// `a, b, c, …` for `k <= 26`, otherwise `x1, x2, …`.
    pub fn standard(k: usize) -> Result<Self> {
        if k <= 26 {
            Self::new((0..k).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            Self::new((1..=k).map(|i| format!("x{i}")))
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, label: &str) -> Result<u8> {
        self.symbols
            .iter()
            .position(|s| s == label)
            .map(|i| i as u8)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn word_label(&self, w: &LyndonWord) -> String {
        w.letters().iter().map(|&l| self.symbols[l as usize].as_str()).collect()
    }
}

/// The free Lie algebra over ℤ on an [`Alphabet`].
#[derive(Clone, Debug)]
pub struct FreeLieAlgebra {
    alphabet: Alphabet,
    degree_cap: usize,
}

impl FreeLieAlgebra {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeLieAlgebra { alphabet, degree_cap: DEFAULT_DEGREE_CAP }
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree == 0 {
            Err(Error::ZeroDegree)
        } else if degree > self.degree_cap {
            Err(Error::DegreeAboveCap { degree, cap: self.degree_cap })
        } else {
            Ok(())
        }
    }

    pub fn lyndon_words(&self, degree: usize) -> Result<Vec<LyndonWord>> {
        self.check_degree(degree)?;
        Ok(lyndon_words(self.alphabet.len(), degree))
    }

    pub fn generator(&self, label: &str) -> Result<FreeLieElement> {
        Ok(FreeLieElement::basis(LyndonWord::letter(self.alphabet.index_of(label)?)))
    }

    /// Lyndon-basis expansion of a bracket expression over labels.
    pub fn normalize<S: AsRef<str>>(&self, expr: &BracketTree<S>) -> Result<FreeLieElement> {
        self.check_degree(expr.degree())?;
        let letters = expr.try_map_leaves(&mut |s| self.alphabet.index_of(s.as_ref()))?;
        Ok(normalize_letters(&letters))
    }

    pub fn bracket(&self, x: &FreeLieElement, y: &FreeLieElement) -> FreeLieElement {
        bracket(x, y)
    }

    /// Integral basis of `{x of degree q : [x, z] = 0}` for a degree-1 `z`.
    pub fn centralizer_degree(&self, z: &FreeLieElement, q: usize) -> Result<Vec<FreeLieElement>> {
        if z.is_zero() {
            return Err(Error::ZeroElement);
        }
        if z.degree() != Some(1) {
            return Err(Error::NotDegreeOne);
        }
        self.check_degree(q + 1)?;
        let source = self.lyndon_words(q)?;
        let target = self.lyndon_words(q + 1)?;
        let a = bracket_matrix(&source, &target, |w| bracket(&FreeLieElement::basis(w.clone()), z));
        Ok(exactla::kernel(&a)
            .into_iter()
            .map(|v| {
                FreeLieElement::from_terms(source.iter().cloned().zip(v))
            })
            .collect())
    }

    /// Canonical text: `coeff*word` terms sorted by word; coefficient 1 is
    /// omitted and negative terms are written with `-`.
    pub fn format(&self, x: &FreeLieElement) -> String {
        syntax::format_terms(x.terms().map(|(w, c)| (self.alphabet.word_label(w), c)))
    }
}

/// Matrix of `f` from the span of `source` into coordinates over `target`.
pub(crate) fn bracket_matrix(
    source: &[LyndonWord],
    target: &[LyndonWord],
    f: impl Fn(&LyndonWord) -> FreeLieElement,
) -> IntMatrix {
    let index: HashMap<&LyndonWord, usize> = target.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut a = IntMatrix::zeros(target.len(), source.len());
    for (col, w) in source.iter().enumerate() {
        for (t, c) in f(w).terms() {
            let row = index[t];
            a.set(row, col, BigInt::clone(c));
        }
    }
    a
}
