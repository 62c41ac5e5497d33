//! Finite combinatorial models of symmetric spectra over pointed simplicial
//! sets, with an exact integral homology engine and bounded model-category
//! decision procedures.

pub mod cli;
pub mod error;
pub mod equivariant;
pub mod homotopy;
pub mod json;
pub mod modelcheck;
pub mod spectra;
pub mod sset;
pub mod symseq;
pub mod workspace;

pub use error::{Error, Result};
