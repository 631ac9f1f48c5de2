use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Degree-one generator `B(i,j)` with `i < j`.
///
/// `B(j,i)` is identified with `B(i,j)` on construction. Generators order by
/// component `j` first, then by `i`, matching the graded basis order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    i: usize,
    j: usize,
}

impl Generator {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::InvalidGenerator { i: a, j: b, n: a.max(b) });
        }
        Ok(Generator { i: a.min(b), j: a.max(b) })
    }

    /// Validated against a strand count.
    pub fn checked(a: usize, b: usize, n: usize) -> Result<Self> {
        let g = Self::new(a, b).map_err(|_| Error::InvalidGenerator { i: a, j: b, n })?;
        if g.j > n {
            return Err(Error::InvalidGenerator { i: a, j: b, n });
        }
        Ok(g)
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Index `m` of the free factor `L[V_m]` containing this generator.
    pub fn component(&self) -> usize {
        self.j
    }

    /// Letter index inside the alphabet `V_j = {B(1,j) < … < B(j-1,j)}`.
    pub fn letter(&self) -> u8 {
        (self.i - 1) as u8
    }

    pub(crate) fn from_letter(letter: u8, component: usize) -> Self {
        Generator { i: letter as usize + 1, j: component }
    }

    pub fn is_disjoint(&self, other: &Generator) -> bool {
        self.i != other.i && self.i != other.j && self.j != other.i && self.j != other.j
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.j, self.i).cmp(&(other.j, other.i))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})", self.i, self.j)
    }
}

/// All generators for `n` strands, ordered by component then first index.
pub fn generators(n: usize) -> Result<Vec<Generator>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount { n, reason: "need at least 2 strands" });
    }
    Ok((2..=n).flat_map(|j| (1..j).map(move |i| Generator { i, j })).collect())
}
