//! Constructive maps on permutations that preserve or complement descent
//! sets while acting predictably on the `Mc`, `Ic` and major-index codes.

mod complement;
mod prefix;
mod shuffle;

pub use complement::{
    complement_descents, complement_descents_incremental, complement_insert_slot,
};
pub use prefix::{
    check_rotation_conditions, rotate_code_prefix, sort_code_prefix, sort_code_prefix_steps,
};
pub use shuffle::{
    descent_class, descent_class_by_filter, shifted_shuffle, shuffle_class_bijection,
    shuffle_of_identities, Composition,
};
