//! Silting objects, mutation and two-term enumeration.

pub mod approx;
pub mod enumerate;
pub mod object;

pub use crate::graph::{Direction, MutationWord};
pub use approx::{end_algebra, minimal_left_approx, minimal_right_approx, mutate, mutate_seeded, Approximation};
pub use enumerate::{
    build_from_silting, derived_class, graph_from_poset, mutate_word, mutate_word_seeded, two_silt_enumerate,
    vertex_label, Move, TwoSiltPoset, DEFAULT_CAP,
};
pub use object::{is_presilting, is_tilting, silting_leq, SiltingObject};
