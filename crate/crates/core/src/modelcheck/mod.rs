//! Latching spaces, stable cofibrations, lifting problems and instance
//! checks of the pushout-product theorems.

mod cofibration;
mod latching;
mod lifting;
mod theorems;

pub use cofibration::{non_injective_witness, stable_cofibration_check, CofibrationReport, LevelVerdict};
pub use latching::{latching, latching_square, Latching, LatchingObject};
pub use lifting::{has_lifting_property, Arrow, LiftingProblem, LiftingVerdict};
pub use theorems::{
    level_classify, pushout_product_theorem_check, pushout_product_theorem_check_spectra, Clause,
    LevelClassification, PushoutProductReport,
};

#[cfg(test)]
mod tests;
