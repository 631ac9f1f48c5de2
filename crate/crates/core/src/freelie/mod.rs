//! Free Lie algebras over ℤ in the Lyndon basis.

mod algebra;
mod bracket;
mod element;
mod lyndon;
mod tree;

pub use algebra::{Alphabet, FreeLieAlgebra};
pub use bracket::{
    bracket, bracket_word_element, bracket_words, normalize_letters, standard_bracketing, substitute,
};
pub use element::FreeLieElement;
pub use lyndon::{is_lyndon, lyndon_words, mobius, standard_factorization, witt_dimension, LyndonWord};
pub use tree::BracketTree;
