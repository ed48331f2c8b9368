//! Partitions, diagrams, strips and (signed) permutations.

mod cells;
mod index;
mod partition;
mod perm;
mod typed;

pub use cells::{box_related, components, relation_value, Cell, Flavor};
pub use index::index_function;
pub use partition::{
    add_horizontal_strips, is_horizontal_strip, is_vertical_strip, remove_vertical_strips, strip_kind, Partition,
    StripKind,
};
pub use perm::{
    grassmannian_a, grassmannian_a_inverse, grassmannian_c, grassmannian_c_inverse, grassmannian_d,
    grassmannian_d_inverse, grassmannian_label, Group, Simple, SignedPermutation,
};
pub use typed::TypedPartition;
