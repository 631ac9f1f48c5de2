//! Braid words in the Artin generators and words in the pure generators.

use std::collections::BTreeMap;
use std::fmt;

use crate::braidlie::Generator;
use crate::{Error, Result};

/// A word in `σ_1, …, σ_{n-1}` and their inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount { n, reason: "braids need at least 2 strands" });
        }
        for &(i, e) in &letters {
            if i == 0 || i >= n {
                return Err(Error::InvalidBraid(format!("sigma_{i} is not a generator of B_{n}")));
            }
            if e != 1 && e != -1 {
                return Err(Error::InvalidBraid(format!("exponent {e} on sigma_{i}")));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MismatchedStrands(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Group commutator `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, other: &BraidWord) -> Result<Self> {
        self.concat(other)?.concat(&self.inverse())?.concat(&other.inverse())
    }

    /// Strand (1-based, by starting position) found at each position after
    /// the word is read left to right.
    pub fn strand_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..=self.n).collect();
        for &(i, _) in &self.letters {
            order.swap(i - 1, i);
        }
        order
    }

    pub fn is_pure(&self) -> bool {
        self.strand_order().iter().enumerate().all(|(p, &s)| s == p + 1)
    }

    /// Signed crossing counts per unordered strand pair `(a, b)`, `a < b`.
    pub fn crossing_counts(&self) -> BTreeMap<(usize, usize), i64> {
        let mut order: Vec<usize> = (1..=self.n).collect();
        let mut counts = BTreeMap::new();
        for &(i, e) in &self.letters {
            let (a, b) = (order[i - 1], order[i]);
            *counts.entry((a.min(b), a.max(b))).or_insert(0) += e as i64;
            order.swap(i - 1, i);
        }
        counts.retain(|_, c| *c != 0);
        counts
    }

    /// Pairwise linking numbers of a pure braid.
    pub fn linking_numbers(&self) -> Result<BTreeMap<(usize, usize), i64>> {
        if !self.is_pure() {
            return Err(Error::InvalidBraid("linking numbers need a pure braid".into()));
        }
        Ok(self.crossing_counts().into_iter().map(|(k, c)| (k, c / 2)).collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| if e > 0 { format!("s{i}") } else { format!("s{i}^-1") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `A(i,j) = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹`.
pub fn pure_generator_word(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    let g = Generator::checked(i, j, n)?;
    let (i, j) = (g.i(), g.j());
    let mut letters: Vec<(usize, i8)> = (i + 1..j).rev().map(|k| (k, 1)).collect();
    letters.push((i, 1));
    letters.push((i, 1));
    letters.extend((i + 1..j).map(|k| (k, -1)));
    BraidWord::new(n, letters)
}

/// The full-twist word `∏_{j=2..n} (A(1,j) A(2,j) ⋯ A(j-1,j))`, whose
/// image in degree one is the sum of all generators.
pub fn center_word(n: usize) -> Result<BraidWord> {
    let mut w = BraidWord::identity(n)?;
    for j in 2..=n {
        for i in 1..j {
            w = w.concat(&pure_generator_word(n, i, j)?)?;
        }
    }
    Ok(w)
}

/// A word in the pure generators `A(i,j)^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PureWord {
    n: usize,
    letters: Vec<(Generator, i8)>,
}

impl PureWord {
    pub fn new(n: usize, letters: Vec<(Generator, i8)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount { n, reason: "braids need at least 2 strands" });
        }
        for &(g, e) in &letters {
            if g.j() > n {
                return Err(Error::InvalidGenerator { i: g.i(), j: g.j(), n });
            }
            if e != 1 && e != -1 {
                return Err(Error::InvalidBraid(format!("exponent {e} on {g}")));
            }
        }
        Ok(PureWord { n, letters })
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self> {
        Self::new(n, vec![(g, 1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[(Generator, i8)] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        PureWord { n: self.n, letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn commutator(&self, other: &PureWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MismatchedStrands(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        letters.extend(self.inverse().letters);
        letters.extend(other.inverse().letters);
        Ok(PureWord { n: self.n, letters })
    }

    /// Expands each `A(i,j)` into Artin generators.
    pub fn to_braid_word(&self) -> Result<BraidWord> {
        let mut w = BraidWord::identity(self.n)?;
        for &(g, e) in &self.letters {
            let a = pure_generator_word(self.n, g.i(), g.j())?;
            w = w.concat(&if e > 0 { a } else { a.inverse() })?;
        }
        Ok(w)
    }
}

impl fmt::Display for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                let a = format!("A({},{})", g.i(), g.j());
                if e > 0 { a } else { format!("{a}^-1") }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
