//! Representations of braid groups as truncated matrix families.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::braid::{pure_generator_word, BraidWord, PureWord};
use super::poly::TruncPoly;
use super::series::TruncSeriesMatrix;
use crate::braidlie::{generators, Generator};
use crate::exactla::IntMatrix;
use crate::{Error, Result};

/// Truncation used when a spec does not name one.
pub const DEFAULT_ORDER: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Family {
    Burau,
    Gassner,
    /// Images of the pure generators `A(i,j)`.
    Custom { size: usize, vars: usize, images: BTreeMap<Generator, TruncSeriesMatrix> },
}

/// A representation of `P_n` (or `B_n`) by matrices over `ℤ[u_1..u_k]`
/// truncated above total degree `order`, where `u = t - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationSpec {
    n: usize,
    order: usize,
    family: Family,
}

impl RepresentationSpec {
    /// Unreduced Burau representation, `n×n` over `ℤ[t^{±1}]`.
    pub fn burau(n: usize, order: usize) -> Result<Self> {
        check_n(n)?;
        Ok(RepresentationSpec { n, order, family: Family::Burau })
    }

    /// Gassner representation of `P_n`, one variable per strand.
    pub fn gassner(n: usize, order: usize) -> Result<Self> {
        check_n(n)?;
        Ok(RepresentationSpec { n, order, family: Family::Gassner })
    }

    /// Explicit images of every pure generator, each congruent to the
    /// identity modulo degree one.
    pub fn custom(n: usize, order: usize, images: BTreeMap<Generator, TruncSeriesMatrix>) -> Result<Self> {
        check_n(n)?;
        let gens = generators(n)?;
        for g in &gens {
            if !images.contains_key(g) {
                return Err(Error::InvalidSpec(format!("missing image for A({},{})", g.i(), g.j())));
            }
        }
        if let Some(g) = images.keys().find(|g| g.j() > n) {
            return Err(Error::InvalidSpec(format!("A({},{}) is not a generator of P_{n}", g.i(), g.j())));
        }
        let first = &images[&gens[0]];
        let (size, vars) = (first.size(), first.vars());
        if size == 0 {
            return Err(Error::InvalidSpec("images must be nonempty matrices".into()));
        }
        let mut normalized = BTreeMap::new();
        for (g, m) in images {
            if m.size() != size || m.vars() != vars {
                return Err(Error::InvalidSpec(format!("image of A({},{}) has a different shape", g.i(), g.j())));
            }
            if m.constant_part() != IntMatrix::identity(size) {
                return Err(Error::InvalidSpec(format!(
                    "image of A({},{}) is not the identity modulo degree one",
                    g.i(),
                    g.j()
                )));
            }
            normalized.insert(g, m);
        }
        Ok(RepresentationSpec { n, order, family: Family::Custom { size, vars, images: normalized } })
    }

    /// Reads a TOML description:
    ///
    /// ```toml
    /// family = "custom"      # or "burau", "gassner"
    /// n = 3
    /// order = 3              # optional
    /// variables = 1          # optional for custom specs
    /// [images]
    /// "A(1,2)" = [["1+u", "0"], ["0", "1"]]
    /// ```
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: SpecFile = toml::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        let order = file.order.unwrap_or(DEFAULT_ORDER);
        match file.family.as_str() {
            "burau" | "gassner" => {
                if file.images.is_some() || file.variables.is_some() {
                    return Err(Error::InvalidSpec(format!("{} takes no images or variables", file.family)));
                }
                if file.family == "burau" { Self::burau(file.n, order) } else { Self::gassner(file.n, order) }
            }
            "custom" => {
                let raw = file.images.ok_or_else(|| Error::InvalidSpec("custom family needs [images]".into()))?;
                let mut parsed = BTreeMap::new();
                let mut vars_used = 1;
                for (key, rows) in &raw {
                    let g = parse_generator_key(key)?;
                    let size = rows.len();
                    if rows.iter().any(|r| r.len() != size) {
                        return Err(Error::InvalidSpec(format!("image of {key} is not square")));
                    }
                    let mut entries = Vec::new();
                    for e in rows.iter().flatten() {
                        let p = match e {
                            Entry::Int(c) => TruncPoly::constant(0, *c),
                            Entry::Text(s) => TruncPoly::parse(s, 255)?,
                        };
                        vars_used = vars_used.max(p.variables_used());
                        entries.push(p);
                    }
                    if parsed.insert(g, (size, entries)).is_some() {
                        return Err(Error::InvalidSpec(format!("duplicate image for {key}")));
                    }
                }
                let vars = match file.variables {
                    Some(v) if v < vars_used => {
                        return Err(Error::InvalidSpec(format!("entries use u{vars_used} but variables = {v}")));
                    }
                    Some(0) => return Err(Error::InvalidSpec("variables must be positive".into())),
                    Some(v) => v,
                    None => vars_used,
                };
                let images = parsed
                    .into_iter()
                    .map(|(g, (size, entries))| Ok((g, TruncSeriesMatrix::from_entries(size, vars, order, entries)?)))
                    .collect::<Result<_>>()?;
                Self::custom(file.n, order, images)
            }
            other => Err(Error::InvalidSpec(format!("unknown family `{other}`"))),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Burau => "burau",
            Family::Gassner => "gassner",
            Family::Custom { .. } => "custom",
        }
    }

    /// Matrix size.
    pub fn size(&self) -> usize {
        match &self.family {
            Family::Burau | Family::Gassner => self.n,
            Family::Custom { size, .. } => *size,
        }
    }

    /// Number of polynomial variables.
    pub fn vars(&self) -> usize {
        match &self.family {
            Family::Burau => 1,
            Family::Gassner => self.n,
            Family::Custom { vars, .. } => *vars,
        }
    }

    pub fn with_order(&self, order: usize) -> Self {
        let family = match &self.family {
            Family::Custom { size, vars, images } => Family::Custom {
                size: *size,
                vars: *vars,
                images: images.iter().map(|(g, m)| (*g, m.with_order(order))).collect(),
            },
            f => f.clone(),
        };
        RepresentationSpec { n: self.n, order, family }
    }

    /// Image of a braid word. Gassner images need pure braids; custom specs
    /// only know the pure generators, see [`Self::rep_image_pure`].
    pub fn rep_image(&self, word: &BraidWord) -> Result<TruncSeriesMatrix> {
        if word.n() != self.n {
            return Err(Error::MismatchedStrands(self.n, word.n()));
        }
        match &self.family {
            Family::Burau => {
                let mut acc = TruncSeriesMatrix::identity(self.n, 1, self.order);
                for &(i, e) in word.letters() {
                    acc = acc.mul(&sigma_block(self.n, i, e, 0, 1, self.order))?;
                }
                Ok(acc)
            }
            Family::Gassner => {
                if !word.is_pure() {
                    return Err(Error::InvalidBraid(format!("the Gassner representation needs a pure braid, got {word}")));
                }
                Ok(colored_image(self.n, word, self.order))
            }
            Family::Custom { .. } => Err(Error::InvalidSpec(
                "custom representations are given on pure generators; use a pure word".into(),
            )),
        }
    }

    /// Image of a word in the pure generators.
    pub fn rep_image_pure(&self, word: &PureWord) -> Result<TruncSeriesMatrix> {
        if word.n() != self.n {
            return Err(Error::MismatchedStrands(self.n, word.n()));
        }
        match &self.family {
            Family::Custom { size, vars, images } => {
                let mut acc = TruncSeriesMatrix::identity(*size, *vars, self.order);
                for &(g, e) in word.letters() {
                    let m = &images[&g];
                    acc = acc.mul(&if e > 0 { m.clone() } else { m.inverse()? })?;
                }
                Ok(acc)
            }
            _ => self.rep_image(&word.to_braid_word()?),
        }
    }

    pub fn generator_image(&self, g: Generator) -> Result<TruncSeriesMatrix> {
        self.rep_image_pure(&PureWord::generator(self.n, g)?)
    }

    /// Degree-one parts `X(i,j)` of the generator images, as series
    /// matrices truncated at `order`.
    pub fn degree_one_series(&self, order: usize) -> Result<BTreeMap<Generator, TruncSeriesMatrix>> {
        let low = self.with_order(1);
        generators(self.n)?
            .into_iter()
            .map(|g| Ok((g, low.generator_image(g)?.homogeneous_part(1).with_order(order))))
            .collect()
    }

    /// Degree-one parts as integer matrices: the coefficient blocks of
    /// `u_1, …, u_k` stacked vertically, `(k·m)×m`.
    pub fn degree_one_images(&self) -> Result<BTreeMap<Generator, IntMatrix>> {
        Ok(self.degree_one_series(1)?.into_iter().map(|(g, m)| (g, m.degree_one_blocks())).collect())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidStrandCount { n, reason: "braids need at least 2 strands" });
    }
    Ok(())
}

/// `σ_i^{±1}` with parameter `t = 1 + u_var`: the block
/// `[[1-t, t], [1, 0]]` or its inverse `[[0, 1], [t⁻¹, 1-t⁻¹]]`.
fn sigma_block(n: usize, i: usize, sign: i8, var: usize, vars: usize, order: usize) -> TruncSeriesMatrix {
    let mut m = TruncSeriesMatrix::identity(n, vars, order);
    let one = TruncPoly::constant(vars, 1);
    let u = TruncPoly::variable(vars, var);
    let (a, b) = (i - 1, i);
    if sign > 0 {
        m.set(a, a, u.neg());
        m.set(a, b, one.add(&u));
        m.set(b, a, one);
        m.set(b, b, TruncPoly::zero());
    } else {
        // t⁻¹ = Σ (-u)^k
        let mut t_inv = TruncPoly::zero();
        let mut power = one.clone();
        for _ in 0..=order {
            t_inv = t_inv.add(&power);
            power = power.mul(&u.neg(), order);
        }
        m.set(a, a, TruncPoly::zero());
        m.set(a, b, one.clone());
        m.set(b, a, t_inv.clone());
        m.set(b, b, one.sub(&t_inv));
    }
    m
}

/// Colored Burau product: `σ_i` uses the variable of the strand at
/// position `i+1` and `σ_i⁻¹` the one at position `i`, both read before
/// the crossing, so that `σ_i σ_i⁻¹` cancels.
fn colored_image(n: usize, word: &BraidWord, order: usize) -> TruncSeriesMatrix {
    let mut colors: Vec<usize> = (0..n).collect();
    let mut acc = TruncSeriesMatrix::identity(n, n, order);
    for &(i, e) in word.letters() {
        let var = if e > 0 { colors[i] } else { colors[i - 1] };
        acc = acc.mul(&sigma_block(n, i, e, var, n, order)).expect("same shape");
        colors.swap(i - 1, i);
    }
    acc
}

/// Burau `σ_i` at truncation `order`.
pub fn burau_sigma(n: usize, i: usize, order: usize) -> Result<TruncSeriesMatrix> {
    BraidWord::new(n, vec![(i, 1)])?;
    Ok(sigma_block(n, i, 1, 0, 1, order))
}

/// Burau `σ_i⁻¹` at truncation `order`.
pub fn burau_sigma_inverse(n: usize, i: usize, order: usize) -> Result<TruncSeriesMatrix> {
    BraidWord::new(n, vec![(i, -1)])?;
    Ok(sigma_block(n, i, -1, 0, 1, order))
}

/// Image of `A(i,j)` under a spec.
pub fn pure_generator_image(spec: &RepresentationSpec, i: usize, j: usize) -> Result<TruncSeriesMatrix> {
    let g = Generator::checked(i, j, spec.n())?;
    match spec.family {
        Family::Custom { .. } => spec.generator_image(g),
        _ => spec.rep_image(&pure_generator_word(spec.n(), i, j)?),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    family: String,
    n: usize,
    order: Option<usize>,
    variables: Option<usize>,
    images: Option<BTreeMap<String, Vec<Vec<Entry>>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

fn parse_generator_key(key: &str) -> Result<Generator> {
    let bad = || Error::InvalidSpec(format!("image key `{key}` is not of the form A(i,j)"));
    let compact: String = key.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("A(")
        .or_else(|| compact.strip_prefix("B("))
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if a >= b {
        return Err(bad());
    }
    Generator::new(a, b)
}
