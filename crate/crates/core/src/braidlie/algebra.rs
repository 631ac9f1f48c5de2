//! The Lie bracket of `E_0^*(P_n)` as an iterated semidirect product.
//!
//! Each `L[V_b]` is an ideal of the subalgebra spanned by components
//! `2..=b`, and a component-`a` element with `a < b` acts on it by the
//! derivation determined on generators by
//!
//! ```text
//! [B(i,a), B(s,b)] =  0               if s ∉ {i, a}
//! [B(i,a), B(i,b)] =  [B(i,b), B(a,b)]
//! [B(i,a), B(a,b)] = -[B(i,b), B(a,b)]
//! ```
//!
//! These three rules follow from the infinitesimal braid relations by linear
//! elimination. Brackets inside one component are free brackets.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use super::{generators, Generator, GradedBasis, PnLieElement};
use crate::exactla::IntMatrix;
use crate::freelie::{
    bracket as free_bracket, bracket_words, lyndon_words, standard_bracketing, standard_factorization,
    BracketTree, FreeLieElement, LyndonWord,
};
use crate::{Error, Result, DEFAULT_DEGREE_CAP};

/// Generator action used for mixed-component brackets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ActionRule {
    #[default]
    Standard,
    /// Sign of the `[B(i,a), B(i,b)]` rule flipped; only for exercising the
    /// relation checker.
    #[doc(hidden)]
    FaultySign,
}

type ActionKey = (usize, LyndonWord, usize, LyndonWord);

/// The graded Lie algebra of the pure braid group on `n` strands.
#[derive(Debug)]
pub struct PureBraidLie {
    n: usize,
    degree_cap: usize,
    rule: ActionRule,
    actions: RwLock<HashMap<ActionKey, FreeLieElement>>,
}

impl Clone for PureBraidLie {
    fn clone(&self) -> Self {
        PureBraidLie {
            n: self.n,
            degree_cap: self.degree_cap,
            rule: self.rule,
            actions: RwLock::default(),
        }
    }
}

impl PureBraidLie {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount { n, reason: "need at least 2 strands" });
        }
        Ok(PureBraidLie {
            n,
            degree_cap: DEFAULT_DEGREE_CAP,
            rule: ActionRule::Standard,
            actions: RwLock::default(),
        })
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn with_rule(mut self, rule: ActionRule) -> Self {
        self.rule = rule;
        self.actions = RwLock::default();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn check_degree(&self, q: usize) -> Result<()> {
        if q == 0 {
            Err(Error::ZeroDegree)
        } else if q > self.degree_cap {
            Err(Error::DegreeAboveCap { degree: q, cap: self.degree_cap })
        } else {
            Ok(())
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        generators(self.n).expect("n >= 2")
    }

    pub fn generator(&self, i: usize, j: usize) -> Result<PnLieElement> {
        Ok(PnLieElement::generator(self.n, Generator::checked(i, j, self.n)?))
    }

    pub fn basis(&self, q: usize) -> Result<GradedBasis> {
        self.check_degree(q)?;
        let entries = (2..=self.n)
            .flat_map(|m| lyndon_words(m - 1, q).into_iter().map(move |w| (m, w)))
            .collect();
        Ok(GradedBasis::from_entries(self.n, q, entries))
    }

    /// `Δ(n)`: every generator with coefficient one.
    pub fn delta(&self) -> PnLieElement {
        self.generators()
            .into_iter()
            .fold(PnLieElement::zero(self.n), |acc, g| acc + PnLieElement::generator(self.n, g))
    }

    /// `B(1,n) + … + B(n-1,n)`.
    pub fn bn_element(&self) -> Result<PnLieElement> {
        if self.n < 3 {
            return Err(Error::InvalidStrandCount { n: self.n, reason: "need at least 3 strands" });
        }
        Ok((1..self.n).fold(PnLieElement::zero(self.n), |acc, s| {
            acc + PnLieElement::generator(self.n, Generator::new(s, self.n).expect("s < n"))
        }))
    }

    pub fn bracket(&self, x: &PnLieElement, y: &PnLieElement) -> Result<PnLieElement> {
        x.same_n(y)?;
        if x.n() != self.n {
            return Err(Error::MismatchedStrands(x.n(), self.n));
        }
        let mut out = PnLieElement::zero(self.n);
        for (&a, ex) in x.components() {
            for (&b, ey) in y.components() {
                use std::cmp::Ordering::*;
                match a.cmp(&b) {
                    Equal => out.add_component(a, free_bracket(ex, ey)),
                    Less => out.add_component(b, self.act_element(a, ex, b, ey)),
                    Greater => out.add_component(a, -self.act_element(b, ey, a, ex)),
                }
            }
        }
        Ok(out)
    }

    /// Action of the component-`a` element `x` on the component-`b` element
    /// `y`, for `a < b`.
    fn act_element(&self, a: usize, x: &FreeLieElement, b: usize, y: &FreeLieElement) -> FreeLieElement {
        let mut out = FreeLieElement::zero();
        for (u, cu) in x.terms() {
            for (v, cv) in y.terms() {
                out.add_scaled(&self.act(a, u, b, v), &(cu * cv));
            }
        }
        out
    }

    fn act_on(&self, a: usize, u: &LyndonWord, b: usize, y: &FreeLieElement) -> FreeLieElement {
        let mut out = FreeLieElement::zero();
        for (v, c) in y.terms() {
            out.add_scaled(&self.act(a, u, b, v), c);
        }
        out
    }

    fn act(&self, a: usize, u: &LyndonWord, b: usize, v: &LyndonWord) -> FreeLieElement {
        debug_assert!(a < b);
        let key = (a, u.clone(), b, v.clone());
        if let Some(hit) = self.actions.read().expect("poisoned").get(&key) {
            return hit.clone();
        }
        let result = if u.degree() > 1 {
            // The action is a Lie morphism into derivations:
            // D_[u1,u2] = D_u1 D_u2 - D_u2 D_u1.
            let (u1, u2) = standard_factorization(u).expect("degree >= 2");
            let vv = FreeLieElement::basis(v.clone());
            self.act_on(a, &u1, b, &self.act_on(a, &u2, b, &vv))
                - self.act_on(a, &u2, b, &self.act_on(a, &u1, b, &vv))
        } else if v.degree() > 1 {
            // D is a derivation of L[V_b].
            let (v1, v2) = standard_factorization(v).expect("degree >= 2");
            let (e1, e2) = (FreeLieElement::basis(v1.clone()), FreeLieElement::basis(v2.clone()));
            free_bracket(&self.act(a, u, b, &v1), &e2) + free_bracket(&e1, &self.act(a, u, b, &v2))
        } else {
            self.generator_action(u.letters()[0] as usize + 1, a, v.letters()[0] as usize + 1)
        };
        self.actions.write().expect("poisoned").insert(key, result.clone());
        result
    }

    /// `[B(i,a), B(s,b)]` for `i < a < b`, as an element of `L[V_b]`.
    fn generator_action(&self, i: usize, a: usize, s: usize) -> FreeLieElement {
        // [B(i,b), B(a,b)] is the Lyndon word (i, a) in V_b since i < a.
        let ia = || bracket_words(&LyndonWord::letter((i - 1) as u8), &LyndonWord::letter((a - 1) as u8));
        if s == i {
            match self.rule {
                ActionRule::Standard => ia(),
                ActionRule::FaultySign => -ia(),
            }
        } else if s == a {
            -ia()
        } else {
            FreeLieElement::zero()
        }
    }

    /// Folds the bracket over a tree of generators.
    pub fn eval_expression(&self, expr: &BracketTree<Generator>) -> Result<PnLieElement> {
        let tree = expr.try_map_leaves(&mut |g| {
            Generator::checked(g.i(), g.j(), self.n).map(|g| PnLieElement::generator(self.n, g))
        })?;
        tree.fold(&mut |x| Ok(x.clone()), &mut |a: Result<PnLieElement>, b: Result<PnLieElement>| {
            self.bracket(&a?, &b?)
        })
    }

    /// The standard bracketing of the basis element `(m, w)` as a generator
    /// tree.
    pub fn basis_tree(m: usize, w: &LyndonWord) -> BracketTree<Generator> {
        standard_bracketing(w).map_leaves(&mut |&l| Generator::from_letter(l, m))
    }

    /// Relabels generators by `σ(B(i,j)) = B(σ(i),σ(j))` and renormalizes.
    ///
    /// `sigma[k - 1]` is the image of strand `k`.
    pub fn symmetric_action(&self, sigma: &[usize], x: &PnLieElement) -> Result<PnLieElement> {
        let n = self.n;
        let mut seen = vec![false; n];
        if sigma.len() != n {
            return Err(Error::NotBijective(n));
        }
        for &s in sigma {
            if s == 0 || s > n || std::mem::replace(&mut seen[s - 1], true) {
                return Err(Error::NotBijective(n));
            }
        }
        let mut out = PnLieElement::zero(n);
        for (m, w, c) in x.terms() {
            let tree = Self::basis_tree(m, w).try_map_leaves(&mut |g| Generator::new(sigma[g.i() - 1], sigma[g.j() - 1]))?;
            out.add_scaled(&self.eval_expression(&tree)?, c);
        }
        Ok(out)
    }

    /// Image under deleting the last strand: drops component `n`.
    pub fn project_delete_strand(&self, x: &PnLieElement) -> Result<PnLieElement> {
        if self.n < 3 {
            return Err(Error::InvalidStrandCount { n: self.n, reason: "cannot delete a strand from 2 strands" });
        }
        let mut out = PnLieElement::zero(self.n - 1);
        for (&m, e) in x.components() {
            if m < self.n {
                out.add_component(m, e.clone());
            }
        }
        Ok(out.with_n(self.n - 1))
    }

    /// Matrix of `x ↦ [x, z]` from degree `q` to degree `q + deg z`, in
    /// graded-basis coordinates.
    pub fn ad_matrix(&self, q: usize, z: &PnLieElement) -> Result<IntMatrix> {
        let d = z.degree().ok_or_else(|| {
            if z.is_zero() {
                Error::ZeroElement
            } else {
                Error::Dimension("ad_matrix needs a homogeneous element".into())
            }
        })?;
        let source = self.basis(q)?;
        let target = self.basis(q + d)?;
        self.ad_matrix_between(&source, &target, z)
    }

    pub fn ad_matrix_between(&self, source: &GradedBasis, target: &GradedBasis, z: &PnLieElement) -> Result<IntMatrix> {
        let mut a = IntMatrix::zeros(target.len(), source.len());
        for col in 0..source.len() {
            let image = self.bracket(&source.element(col), z)?;
            for (row, c) in target.coordinates(&image)?.into_iter().enumerate() {
                a.set(row, col, c);
            }
        }
        Ok(a)
    }

    /// Degree-one element with the given coefficient on each generator.
    pub fn degree_one(&self, coeffs: impl IntoIterator<Item = (Generator, BigInt)>) -> PnLieElement {
        let mut out = PnLieElement::zero(self.n);
        for (g, c) in coeffs {
            out.add_scaled(&PnLieElement::generator(self.n, g), &c);
        }
        out
    }

    pub(crate) fn unit_generator(&self, g: Generator) -> PnLieElement {
        self.degree_one([(g, BigInt::one())])
    }
}
