//! Exact computations in the associated graded Lie algebra of the pure braid
//! group.
//!
//! The crate is organized in layers:
//!
//! - [`freelie`]: free Lie algebras over the integers in the Lyndon basis.
//! - [`braidlie`]: the graded Lie algebra of `P_n`, realized as the direct sum
//!   `L[V_2] ⊕ … ⊕ L[V_n]` with the bracket twisted by the infinitesimal braid
//!   relations.
//! - [`exactla`]: Hermite and Smith normal forms, integer kernels.
//! - [`central`]: degreewise centralizers and adjoint kernels.
//! - [`repmaps`]: truncated matrix representations (Burau, Gassner, custom),
//!   Magnus expansions and the faithfulness-criterion tester.
//! - [`syntax`]: the text grammar for elements and bracket expressions.

pub mod braidlie;
pub mod central;
pub mod error;
pub mod exactla;
pub mod freelie;
pub mod repmaps;
pub mod syntax;

pub use error::{Error, Result};

/// Default upper bound on the degrees the algebra layers accept.
pub const DEFAULT_DEGREE_CAP: usize = 8;
