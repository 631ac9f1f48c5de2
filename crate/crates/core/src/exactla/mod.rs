//! Exact integer linear algebra: normal forms, kernels and injectivity.

mod kernel;
mod matrix;
mod normal_form;

pub use kernel::{is_injective, kernel, kernel_of_stack, rank, Injectivity};
pub use matrix::IntMatrix;
pub use normal_form::{hnf, smith_diagonal, snf};

#[cfg(test)]
mod tests;
