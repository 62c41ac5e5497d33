//! Exact integral homology of finite pointed simplicial sets and the stable
//! colimits of symmetric spectra read through it.

mod chains;
mod homology;
pub mod matrix;
mod stable;

pub use chains::{
    chain_map, normalized_chains, suspension_chain_map, suspension_into, CellIndex, Chain, ChainComplex,
    ChainMap,
};
pub use homology::{free_part_matrix, homology, is_unimodular, Homology, HomologyGroup, Reduction};
pub use matrix::{smith_normal_form, Matrix, SmithForm};
pub use stable::{
    homology_equivalence, hurewicz_gate, hz_level_complex, hz_stable_colimit, induced_map, space_homology,
    stable_colimit, stable_map_report, InducedMap, Interpretation, LevelGroup, StableColimitReport,
    StableMapReport,
};
