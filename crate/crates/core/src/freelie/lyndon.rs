//! Lyndon words, their enumeration and the Witt dimension formula.

use std::fmt;

use crate::{Error, Result};

/// A Lyndon word over letter indices `0..k`.
///
/// Letters are compared by index, so the derived ordering is the
/// lexicographic order used throughout the Lyndon basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord(Vec<u8>);

impl LyndonWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if is_lyndon(&letters) {
            Ok(LyndonWord(letters))
        } else {
            Err(Error::NotLyndon(letters))
        }
    }

    pub fn letter(l: u8) -> Self {
        LyndonWord(vec![l])
    }

    /// Caller guarantees the Lyndon property.
    pub(crate) fn from_vec_unchecked(letters: Vec<u8>) -> Self {
        debug_assert!(is_lyndon(&letters), "{letters:?} is not Lyndon");
        LyndonWord(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Concatenation `self · other`; Lyndon whenever `self < other`.
    pub(crate) fn concat(&self, other: &LyndonWord) -> LyndonWord {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        LyndonWord::from_vec_unchecked(v)
    }
}

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LyndonWord{:?}", self.0)
    }
}

/// True iff `w` is nonempty and strictly smaller than each of its proper
/// rotations.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    // Equivalent characterization: strictly smaller than every proper suffix.
    (1..w.len()).all(|k| w < &w[k..])
}

/// All Lyndon words of length `degree` over `k` letters, in lexicographic
/// order.
pub fn lyndon_words(k: usize, degree: usize) -> Vec<LyndonWord> {
    assert!(k <= u8::MAX as usize + 1, "alphabet too large");
    let mut out = Vec::new();
    if k == 0 || degree == 0 {
        return out;
    }
    let top = (k - 1) as u8;
    // Duval's generation algorithm; visits every Lyndon word of length
    // <= degree in increasing order.
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == degree {
            out.push(LyndonWord::from_vec_unchecked(w.clone()));
        }
        let m = w.len();
        while w.len() < degree {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n >= 1);
    let mut result = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Rank of the degree-`q` part of the free Lie algebra on `k` generators:
/// `(1/q) Σ_{d | q} μ(d) k^{q/d}`.
///
/// Panics if an intermediate power overflows `i128`.
pub fn witt_dimension(k: u64, q: u64) -> u64 {
    assert!(k >= 1 && q >= 1, "witt_dimension needs k >= 1 and q >= 1");
    let mut sum: i128 = 0;
    for d in (1..=q).filter(|d| q % d == 0) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let exp = u32::try_from(q / d).expect("degree too large");
        let pow = (k as i128).checked_pow(exp).expect("witt_dimension overflow");
        sum += mu as i128 * pow;
    }
    debug_assert_eq!(sum % q as i128, 0);
    (sum / q as i128) as u64
}

/// Standard factorization `w = left · right`, where `right` is the longest
/// proper suffix of `w` that is itself Lyndon.
pub fn standard_factorization(w: &LyndonWord) -> Result<(LyndonWord, LyndonWord)> {
    let letters = w.letters();
    if letters.len() < 2 {
        return Err(Error::DegreeOneFactorization);
    }
    let split = (1..letters.len())
        .find(|&k| is_lyndon(&letters[k..]))
        .expect("the last letter is always a Lyndon suffix");
    Ok((
        LyndonWord::from_vec_unchecked(letters[..split].to_vec()),
        LyndonWord::from_vec_unchecked(letters[split..].to_vec()),
    ))
}
