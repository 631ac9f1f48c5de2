//! Maps induced on associated graded pieces by a representation.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::braid::{center_word, pure_generator_word, PureWord};
use super::poly::monomials_of_degree;
use super::rep::RepresentationSpec;
use super::series::TruncSeriesMatrix;
use crate::braidlie::{Generator, GradedBasis, PureBraidLie};
use crate::central::MatrixSource;
use crate::exactla::IntMatrix;
use crate::freelie::{standard_bracketing, BracketTree, LyndonWord};
use crate::{Error, Result};

/// First infinitesimal braid relation violated by the degree-one images,
/// if any.
pub fn infinitesimal_relation_failure(n: usize, xs: &BTreeMap<Generator, TruncSeriesMatrix>) -> Result<Option<String>> {
    let x = |g: Generator| xs[&g].with_order(2);
    let gens: Vec<Generator> = xs.keys().copied().collect();
    for (a, &g) in gens.iter().enumerate() {
        for &h in &gens[a + 1..] {
            if g.is_disjoint(&h) && !x(g).lie_commutator(&x(h))?.is_zero() {
                return Ok(Some(format!("[X{g}, X{h}] != 0")));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for t in 1..=n {
                if i == j || j == t || i == t {
                    continue;
                }
                let g = Generator::new(i, j)?;
                let h1 = Generator::new(i, t)?;
                let h2 = Generator::new(j, t)?;
                let sum = x(h1).add(&x(h2))?;
                if !x(g).lie_commutator(&sum)?.is_zero() {
                    return Ok(Some(format!("[X{g}, X{h1} + X{h2}] != 0")));
                }
            }
        }
    }
    Ok(None)
}

fn check_basis(spec: &RepresentationSpec, basis: &GradedBasis) -> Result<()> {
    if basis.n() != spec.n() {
        return Err(Error::MismatchedStrands(spec.n(), basis.n()));
    }
    if basis.degree() == 0 {
        return Err(Error::ZeroDegree);
    }
    Ok(())
}

/// Matrix of the degree-`q` map `E_0^q(P_n) → gr^q`, built from iterated
/// ring commutators of the degree-one images along the standard
/// bracketing of each basis word. Columns follow `basis`; rows are the
/// degree-`q` coordinates of [`TruncSeriesMatrix::flatten_degree`].
pub fn induced_graded_map(spec: &RepresentationSpec, basis: &GradedBasis) -> Result<IntMatrix> {
    check_basis(spec, basis)?;
    let q = basis.degree();
    let xs = spec.degree_one_series(q)?;
    let mut memo: HashMap<(usize, LyndonWord), TruncSeriesMatrix> = HashMap::new();
    let columns = basis
        .entries()
        .iter()
        .map(|(m, w)| Ok(word_commutator(*m, w, &xs, &mut memo)?.flatten_degree(q)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(graded_rows(spec, q), &columns))
}

/// Length of the degree-`q` coordinate vectors of a spec's matrices.
pub fn graded_rows(spec: &RepresentationSpec, q: usize) -> usize {
    monomials_of_degree(spec.vars(), q).len() * spec.size() * spec.size()
}

fn word_commutator(
    m: usize,
    w: &LyndonWord,
    xs: &BTreeMap<Generator, TruncSeriesMatrix>,
    memo: &mut HashMap<(usize, LyndonWord), TruncSeriesMatrix>,
) -> Result<TruncSeriesMatrix> {
    let key = (m, w.clone());
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let v = if w.degree() == 1 {
        xs[&Generator::new(w.letters()[0] as usize + 1, m)?].clone()
    } else {
        let (a, b) = crate::freelie::standard_factorization(w)?;
        let a = word_commutator(m, &a, xs, memo)?;
        let b = word_commutator(m, &b, xs, memo)?;
        a.lie_commutator(&b)?
    };
    memo.insert(key, v.clone());
    Ok(v)
}

/// The group commutator word in pure generators for the basis element
/// `(m, w)`.
pub fn basis_group_word(n: usize, m: usize, w: &LyndonWord) -> Result<PureWord> {
    tree_word(n, &standard_bracketing(w).try_map_leaves(&mut |&l| Generator::new(l as usize + 1, m))?)
}

fn tree_word(n: usize, tree: &BracketTree<Generator>) -> Result<PureWord> {
    match tree {
        BracketTree::Leaf(g) => PureWord::generator(n, *g),
        BracketTree::Node(a, b) => tree_word(n, a)?.commutator(&tree_word(n, b)?),
    }
}

/// Same matrix as [`induced_graded_map`], computed independently: each
/// basis element is realized as an actual commutator of pure braids, its
/// image is evaluated at truncation `q`, checked to be the identity below
/// degree `q`, and its degree-`q` part is read off.
pub fn induced_graded_map_group(spec: &RepresentationSpec, basis: &GradedBasis) -> Result<IntMatrix> {
    check_basis(spec, basis)?;
    let q = basis.degree();
    let at_q = spec.with_order(q);
    let mut columns = Vec::with_capacity(basis.len());
    for (m, w) in basis.entries() {
        let word = basis_group_word(spec.n(), *m, w)?;
        let image = at_q.rep_image_pure(&word)?;
        if !image.congruent_to_identity_below(q) {
            return Err(Error::Dimension(format!(
                "image of {word} is not the identity below degree {q}"
            )));
        }
        columns.push(image.flatten_degree(q));
    }
    Ok(IntMatrix::from_columns(graded_rows(spec, q), &columns))
}

/// Checks that setting `u_1 = … = u_n = u` sends Gassner data to Burau
/// data: images of the pure generators and the full twist, degree-one
/// images, and the graded maps through `max_q`.
pub fn gassner_specializes(n: usize, max_q: usize, lie: &PureBraidLie, src: &dyn MatrixSource) -> Result<bool> {
    let order = max_q.max(1);
    let gassner = RepresentationSpec::gassner(n, order)?;
    let burau = RepresentationSpec::burau(n, order)?;
    let mut words = vec![center_word(n)?];
    for j in 2..=n {
        for i in 1..j {
            words.push(pure_generator_word(n, i, j)?);
        }
    }
    for w in &words {
        if gassner.rep_image(w)?.identify_variables() != burau.rep_image(w)? {
            return Ok(false);
        }
    }
    let g1 = gassner.degree_one_series(1)?;
    let b1 = burau.degree_one_series(1)?;
    if g1.iter().any(|(g, x)| x.identify_variables() != b1[g]) {
        return Ok(false);
    }
    let m2 = n * n;
    for q in 1..=max_q {
        let basis = src.basis(lie, q)?;
        let gm = induced_graded_map(&gassner, &basis)?;
        let bm = induced_graded_map(&burau, &basis)?;
        for c in 0..basis.len() {
            let col = gm.column(c);
            let mut folded = vec![BigInt::zero(); m2];
            for (r, v) in col.iter().enumerate() {
                folded[r % m2] += v;
            }
            if folded != bm.column(c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
