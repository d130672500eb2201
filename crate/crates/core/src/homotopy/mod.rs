//! Bounded complexes of projective modules up to homotopy.

pub mod complex;
pub mod decompose;
pub mod hom;
pub mod minimize;

pub use complex::{cocone, cone, AlgMatrix, ChainMap, ProjComplex};
pub use decompose::{decompose, endomorphism_radical, is_indecomposable, iso_in_homotopy, TopRepresentation};
pub use hom::{hom_dimension, HomSpace};
pub use minimize::minimize;
