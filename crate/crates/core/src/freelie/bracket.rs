//! Bracket of Lyndon basis elements, reduced back into the Lyndon basis.
//!
//! For Lyndon words `u < v`, `uv` is Lyndon and `[u, v]` is its standard
//! bracketing exactly when `u` is a letter or the right standard factor of
//! `u` is `>= v`. Otherwise, with `u = (u1, u2)`, Jacobi gives
//! `[u, v] = [u1, [u2, v]] - [u2, [u1, v]]`, and the recursion terminates by
//! the classical decreasing measure on (degree, lexicographic gap).

use std::cell::RefCell;
use std::collections::HashMap;


use super::{standard_factorization, BracketTree, FreeLieElement, LyndonWord};

thread_local! {
    static WORD_BRACKETS: RefCell<HashMap<(LyndonWord, LyndonWord), FreeLieElement>> =
        RefCell::new(HashMap::new());
}

/// `[u, v]` for Lyndon basis elements `u`, `v`.
pub fn bracket_words(u: &LyndonWord, v: &LyndonWord) -> FreeLieElement {
    use std::cmp::Ordering;
    match u.cmp(v) {
        Ordering::Equal => FreeLieElement::zero(),
        Ordering::Greater => -bracket_ordered(v, u),
        Ordering::Less => bracket_ordered(u, v),
    }
}

fn bracket_ordered(u: &LyndonWord, v: &LyndonWord) -> FreeLieElement {
    let key = (u.clone(), v.clone());
    if let Some(hit) = WORD_BRACKETS.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let result = if u.degree() == 1 {
        FreeLieElement::basis(u.concat(v))
    } else {
        let (u1, u2) = standard_factorization(u).expect("degree >= 2");
        if u2 >= *v {
            FreeLieElement::basis(u.concat(v))
        } else {
            let first = bracket_word_element(&u1, &bracket_words(&u2, v));
            let second = bracket_word_element(&u2, &bracket_words(&u1, v));
            first - second
        }
    };
    WORD_BRACKETS.with(|m| m.borrow_mut().insert(key, result.clone()));
    result
}

/// `[u, y]` for a basis word `u` and an arbitrary element `y`.
pub fn bracket_word_element(u: &LyndonWord, y: &FreeLieElement) -> FreeLieElement {
    let mut out = FreeLieElement::zero();
    for (w, c) in y.terms() {
        out.add_scaled(&bracket_words(u, w), c);
    }
    out
}

/// `[x, y]`, extended bilinearly from the basis.
pub fn bracket(x: &FreeLieElement, y: &FreeLieElement) -> FreeLieElement {
    let mut out = FreeLieElement::zero();
    for (u, a) in x.terms() {
        for (v, b) in y.terms() {
            out.add_scaled(&bracket_words(u, v), &(a * b));
        }
    }
    out
}

/// The standard bracketing of a Lyndon word as a tree over its letters.
pub fn standard_bracketing(w: &LyndonWord) -> BracketTree<u8> {
    if w.degree() == 1 {
        BracketTree::leaf(w.letters()[0])
    } else {
        let (l, r) = standard_factorization(w).expect("degree >= 2");
        BracketTree::node(standard_bracketing(&l), standard_bracketing(&r))
    }
}

/// Evaluates a tree over letter indices into the Lyndon basis.
pub fn normalize_letters(tree: &BracketTree<u8>) -> FreeLieElement {
    tree.fold(
        &mut |&l| FreeLieElement::basis(LyndonWord::letter(l)),
        &mut |a, b| bracket(&a, &b),
    )
}

/// Applies the Lie homomorphism determined by `image(letter)` to `x`.
pub fn substitute(x: &FreeLieElement, image: &impl Fn(u8) -> FreeLieElement) -> FreeLieElement {
    let mut out = FreeLieElement::zero();
    for (w, c) in x.terms() {
        let t = standard_bracketing(w).fold(&mut |&l| image(l), &mut |a, b| bracket(&a, &b));
        out.add_scaled(&t, c);
    }
    out
}
