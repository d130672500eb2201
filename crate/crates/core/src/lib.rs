//! Silting mutation and two-term silting enumeration for finite-dimensional
//! quiver algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`], [`poly`], [`linalg`]: exact scalars and dense linear algebra.
//! * [`algebra`]: quiver presentations, normal forms, algebra invariants.
//! * [`homotopy`]: bounded complexes of projectives up to homotopy.
//! * [`silting`]: mutation, approximations, enumeration of two-term objects.
//! * [`graph`], [`cdv`]: mutation graphs and the permutation model.

pub mod algebra;
pub mod cdv;
pub mod dump;
pub mod error;
pub mod field;
pub mod graph;
pub mod homotopy;
pub mod linalg;
pub mod poly;
pub mod silting;

pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, PrimeField, RationalField, DEFAULT_PRIME};
