//! Symmetric groups, shuffles, spaces with a symmetric group action and the
//! induced spaces `(Σ_n)_+ ∧_H A`.

mod induced;
mod permutation;
mod shuffle;
mod space;

pub use induced::{
    balanced_smash, coordinate_swap, smash_action, smash_equivariant, sphere_action, Induced,
};
pub use permutation::{factorial, Permutation};
pub use shuffle::Shuffle;
pub use space::{
    acts_freely_off_image, first_non_free_cell, is_equivariant, wedge_equivariant,
    EquivariantSpace,
};

#[cfg(test)]
mod tests;
