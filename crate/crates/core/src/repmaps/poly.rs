//! Truncated commutative polynomials `ℤ[u_1..u_k] / (total degree > D)`.

use std::collections::btree_map::{self, BTreeMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{syntax, Error, Result};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u8>;

pub fn total_degree(m: &[u8]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

/// Monomials of total degree `d` in `k` variables, `u_1^d` first
/// (descending lexicographic order on exponent vectors).
pub fn monomials_of_degree(k: usize, d: usize) -> Vec<Monomial> {
    fn rec(k: usize, d: usize, prefix: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == k {
            prefix.push(d as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u8);
            rec(k, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(k, d, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// A polynomial with integer coefficients; truncation is applied by the
/// operations that take an `order`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(k: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![0; k], c.into());
        p
    }

    /// `u_v` (zero-based variable index `v`).
    pub fn variable(k: usize, v: usize) -> Self {
        let mut m = vec![0; k];
        m[v] = 1;
        let mut p = Self::zero();
        p.add_term(m, BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, BigInt> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u8]) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TruncPoly) -> TruncPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> TruncPoly {
        TruncPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &TruncPoly) -> TruncPoly {
        self.add(&other.neg())
    }

    pub fn scaled(&self, c: &BigInt) -> TruncPoly {
        if c.is_zero() {
            return Self::zero();
        }
        TruncPoly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    /// Product with every monomial of total degree above `order` dropped.
    pub fn mul(&self, other: &TruncPoly, order: usize) -> TruncPoly {
        let mut out = TruncPoly::zero();
        for (m1, c1) in &self.terms {
            let d1 = total_degree(m1);
            for (m2, c2) in &other.terms {
                if d1 + total_degree(m2) > order {
                    continue;
                }
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn truncated(&self, order: usize) -> TruncPoly {
        TruncPoly {
            terms: self.terms.iter().filter(|(m, _)| total_degree(m) <= order).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> TruncPoly {
        TruncPoly {
            terms: self.terms.iter().filter(|(m, _)| total_degree(m) == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Lowest total degree among nonzero terms.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(|m| total_degree(m)).min()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.iter().find(|(m, _)| total_degree(m) == 0).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Sets every variable equal to a single one: `ℤ[u_1..u_k] → ℤ[u]`.
    pub fn identify_variables(&self) -> TruncPoly {
        let mut out = TruncPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(vec![total_degree(m) as u8], c.clone());
        }
        out
    }

    /// Highest variable index used, plus one.
    pub fn variables_used(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.iter().rposition(|&e| e > 0))
            .map(|v| v + 1)
            .max()
            .unwrap_or(0)
    }

    /// Canonical text, e.g. `1+2*u1^2*u2-u3`.
    pub fn format(&self) -> String {
        let label = |m: &[u8]| -> String {
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { format!("u{}", v + 1) } else { format!("u{}^{e}", v + 1) })
                .collect();
            if factors.is_empty() { "1".into() } else { factors.join("*") }
        };
        // Constant terms print their coefficient even when it is one.
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            if total_degree(m) == 0 {
                if c.is_negative() {
                    out.push('-');
                } else if !out.is_empty() {
                    out.push('+');
                }
                out.push_str(&c.abs().to_string());
            } else {
                let t = syntax::format_terms([(label(m), c)]);
                if !out.is_empty() && !t.starts_with('-') {
                    out.push('+');
                }
                out.push_str(&t);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses `3*u1^2*u2 - u + 1`; `u` means `u1`. Exponent vectors have
    /// length `k`, which must cover every variable used.
    pub fn parse(text: &str, k: usize) -> Result<TruncPoly> {
        let err = |pos: usize, message: &str| Error::Parse { pos, message: message.to_string() };
        let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut i = 0;
        let mut out = TruncPoly::zero();
        if chars.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        let pos_of = |i: usize| chars.get(i).map_or(text.len(), |&(p, _)| p);
        while i < chars.len() {
            let mut sign = BigInt::one();
            if chars[i].1 == '+' || chars[i].1 == '-' {
                if chars[i].1 == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(err(pos_of(i), "expected `+` or `-`"));
            }
            let mut coeff = sign;
            let mut mono = vec![0u8; k];
            loop {
                let Some(&(p, c)) = chars.get(i) else {
                    return Err(err(text.len(), "expected a term"));
                };
                if c.is_ascii_digit() {
                    let start = i;
                    while chars.get(i).is_some_and(|(_, c)| c.is_ascii_digit()) {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                    coeff *= digits.parse::<BigInt>().map_err(|_| err(p, "bad integer"))?;
                } else if c == 'u' {
                    i += 1;
                    let start = i;
                    while chars.get(i).is_some_and(|(_, c)| c.is_ascii_digit()) {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                    let v: usize = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| err(p, "bad variable index"))? };
                    if v == 0 || v > k {
                        return Err(err(p, &format!("variable u{v} outside u1..u{k}")));
                    }
                    let mut e = 1u32;
                    if chars.get(i).is_some_and(|(_, c)| *c == '^') {
                        i += 1;
                        let start = i;
                        while chars.get(i).is_some_and(|(_, c)| c.is_ascii_digit()) {
                            i += 1;
                        }
                        let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                        e = digits.parse().map_err(|_| err(pos_of(start), "bad exponent"))?;
                    }
                    let slot = &mut mono[v - 1];
                    *slot = u8::try_from(*slot as u32 + e).map_err(|_| err(p, "exponent too large"))?;
                } else {
                    return Err(err(p, &format!("unexpected `{c}`")));
                }
                match chars.get(i) {
                    Some((_, '*')) => i += 1,
                    Some((_, 'u')) => {}
                    _ => break,
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}
