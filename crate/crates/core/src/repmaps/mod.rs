//! Truncated matrix representations of braid groups and the graded maps
//! they induce.
//!
//! Polynomials are written in `u = t - 1` and truncated by total degree, so
//! the congruence filtration of a representation is the filtration by
//! `u`-adic valuation of `M - I`.

mod braid;
mod criterion;
mod graded;
mod magnus;
mod poly;
mod rep;
mod series;

pub use braid::{center_word, pure_generator_word, BraidWord, PureWord};
pub use criterion::{
    criterion_checks, criterion_test, criterion_test_with, CheckKind, CheckOutcome, Conclusion, CriterionReport,
};
pub use graded::{
    basis_group_word, gassner_specializes, graded_rows, induced_graded_map, induced_graded_map_group, infinitesimal_relation_failure,
};
pub use magnus::{commutator_word, inverse_word, magnus_expand, tensor_embedding, FreeWord, TensorSeries};
pub use poly::{monomials_of_degree, total_degree, Monomial, TruncPoly};
pub use rep::{burau_sigma, burau_sigma_inverse, pure_generator_image, RepresentationSpec, DEFAULT_ORDER};
pub use series::TruncSeriesMatrix;

#[cfg(test)]
mod tests;
