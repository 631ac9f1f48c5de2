//! Square matrices over truncated polynomial rings.

use num_bigint::BigInt;

use super::poly::{monomials_of_degree, TruncPoly};
use crate::exactla::{hnf, IntMatrix};
use crate::{Error, Result};

/// An `m×m` matrix with entries in `ℤ[u_1..u_k]` modulo total degree
/// above `order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeriesMatrix {
    size: usize,
    vars: usize,
    order: usize,
    entries: Vec<TruncPoly>,
}

impl TruncSeriesMatrix {
    pub fn zero(size: usize, vars: usize, order: usize) -> Self {
        TruncSeriesMatrix { size, vars, order, entries: vec![TruncPoly::zero(); size * size] }
    }

    pub fn identity(size: usize, vars: usize, order: usize) -> Self {
        let mut m = Self::zero(size, vars, order);
        for i in 0..size {
            m.entries[i * size + i] = TruncPoly::constant(vars, 1);
        }
        m
    }

    /// Builds from row-major entries, truncating each to `order`.
    pub fn from_entries(size: usize, vars: usize, order: usize, entries: Vec<TruncPoly>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Dimension(format!("{} entries for a {size}x{size} matrix", entries.len())));
        }
        if let Some(p) = entries.iter().find(|p| p.variables_used() > vars) {
            return Err(Error::Dimension(format!("entry {} uses more than {vars} variables", p.format())));
        }
        let entries = entries
            .into_iter()
            .map(|p| {
                // Pad exponent vectors to the ring's variable count.
                let mut q = TruncPoly::zero();
                for (m, c) in p.terms() {
                    let mut m = m.clone();
                    m.resize(vars, 0);
                    q.add_term(m, c.clone());
                }
                q.truncated(order)
            })
            .collect();
        Ok(TruncSeriesMatrix { size, vars, order, entries })
    }

    /// Embeds a constant integer matrix.
    pub fn from_int(m: &IntMatrix, vars: usize, order: usize) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Dimension(format!("{}x{} is not square", m.rows(), m.cols())));
        }
        let entries = m.entries().iter().map(|c| TruncPoly::constant(vars, c.clone())).collect();
        Ok(TruncSeriesMatrix { size: m.rows(), vars, order, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> &TruncPoly {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: TruncPoly) {
        self.entries[r * self.size + c] = p.truncated(self.order);
    }

    pub fn entries(&self) -> &[TruncPoly] {
        &self.entries
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.size != other.size || self.vars != other.vars || self.order != other.order {
            return Err(Error::Dimension(format!(
                "incompatible matrices: size {} vars {} order {} vs size {} vars {} order {}",
                self.size, self.vars, self.order, other.size, other.vars, other.order
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.size;
        let mut out = Self::zero(n, self.vars, self.order);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b, self.order);
                    let slot = &mut out.entries[i * n + j];
                    *slot = slot.add(&prod);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(TruncSeriesMatrix { entries, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect();
        Ok(TruncSeriesMatrix { entries, ..self.clone_shape() })
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        TruncSeriesMatrix { entries: self.entries.iter().map(|p| p.scaled(c)).collect(), ..self.clone_shape() }
    }

    fn clone_shape(&self) -> Self {
        TruncSeriesMatrix { size: self.size, vars: self.vars, order: self.order, entries: Vec::new() }
    }

    /// Same entries viewed modulo a different order (higher orders keep the
    /// polynomials as they are).
    pub fn with_order(&self, order: usize) -> Self {
        TruncSeriesMatrix {
            size: self.size,
            vars: self.vars,
            order,
            entries: self.entries.iter().map(|p| p.truncated(order)).collect(),
        }
    }

    /// Degree-`d` homogeneous part of each entry.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        TruncSeriesMatrix { entries: self.entries.iter().map(|p| p.homogeneous_part(d)).collect(), ..self.clone_shape() }
    }

    pub fn constant_part(&self) -> IntMatrix {
        IntMatrix::from_vec(self.size, self.size, self.entries.iter().map(TruncPoly::constant_term).collect())
            .expect("square")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TruncPoly::is_zero)
    }

    /// Lowest degree `d ≥ 1` at which `self - I` is nonzero, if any.
    pub fn identity_defect(&self) -> Option<usize> {
        let id = Self::identity(self.size, self.vars, self.order);
        let diff = self.sub(&id).expect("same shape");
        diff.entries.iter().filter_map(TruncPoly::valuation).min()
    }

    /// Whether `self ≡ I` modulo terms of degree `≥ d`.
    pub fn congruent_to_identity_below(&self, d: usize) -> bool {
        self.identity_defect().is_none_or(|v| v >= d)
    }

    /// Inverse within the truncation; the constant part must be unimodular.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant_part();
        let (h, u) = hnf(&c);
        if h != IntMatrix::identity(self.size) {
            return Err(Error::NotInvertible);
        }
        let c_inv = Self::from_int(&u, self.vars, self.order)?;
        let nilpotent = self.sub(&Self::from_int(&c, self.vars, self.order)?)?;
        // (C + N)^{-1} = Σ (-C^{-1} N)^k C^{-1}
        let step = c_inv.mul(&nilpotent)?.scaled(&BigInt::from(-1));
        let mut acc = Self::identity(self.size, self.vars, self.order);
        let mut power = acc.clone();
        for _ in 0..self.order {
            power = power.mul(&step)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        acc.mul(&c_inv)
    }

    /// Group commutator `A B A^{-1} B^{-1}`.
    pub fn group_commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.mul(&self.inverse()?)?.mul(&other.inverse()?)
    }

    /// Ring commutator `AB - BA`.
    pub fn lie_commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Coordinates of the degree-`d` part: monomials in the order of
    /// [`monomials_of_degree`], then entries row-major.
    pub fn flatten_degree(&self, d: usize) -> Vec<BigInt> {
        let mut out = Vec::new();
        for m in monomials_of_degree(self.vars, d) {
            for p in &self.entries {
                out.push(p.coeff(&m));
            }
        }
        out
    }

    /// Stacks the coefficient matrices of `u_1, …, u_k` vertically.
    pub fn degree_one_blocks(&self) -> IntMatrix {
        let n = self.size;
        let mut out = IntMatrix::zeros(self.vars * n, n);
        for v in 0..self.vars {
            let mut m = vec![0u8; self.vars];
            m[v] = 1;
            for r in 0..n {
                for c in 0..n {
                    out.set(v * n + r, c, self.get(r, c).coeff(&m));
                }
            }
        }
        out
    }

    /// Sets every variable equal: the image in `ℤ[u]`.
    pub fn identify_variables(&self) -> Self {
        TruncSeriesMatrix {
            size: self.size,
            vars: 1,
            order: self.order,
            entries: self.entries.iter().map(TruncPoly::identify_variables).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.identity_defect().is_none()
    }

    /// Row-major entries as canonical polynomial text.
    pub fn format_rows(&self) -> Vec<Vec<String>> {
        (0..self.size).map(|r| (0..self.size).map(|c| self.get(r, c).format()).collect()).collect()
    }
}
