//! The graded Lie algebra `E_0^*(P_n)` of the pure braid group.

mod algebra;
mod element;
mod generator;
mod relations;

pub use algebra::{ActionRule, PureBraidLie};
pub use element::{word_label, GradedBasis, PnLieElement};
pub use generator::{generators, Generator};
pub use relations::{RelationFailure, RelationReport};
