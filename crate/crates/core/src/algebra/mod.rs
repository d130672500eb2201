//! Quiver algebras: presentations, normal forms and invariants.

pub mod fd;
pub mod fingerprint;
pub mod groebner;
pub mod presentation;
pub mod symmetric;

pub use fd::{build_algebra, element_from_expr, opposite_presentation, Elem, FdAlgebra, DEFAULT_MAX_PATH_LEN};
pub use fingerprint::{fingerprint, IsoFingerprint};
pub use groebner::RewritingSystem;
pub use presentation::{parse_presentation, AlgebraPresentation, Arrow, Path, PathWordExpr, Quiver};
pub use symmetric::{is_symmetric, is_symmetric_seeded, SymmetricVerdict};
