use serde::Serialize;

use super::latching::LatchingObject;
use crate::equivariant::first_non_free_cell;
use crate::error::Result;
use crate::spectra::SpectrumMap;
use crate::sset::{pushout, SimplicialMap};

/// The verdict on one corner map `X_n ⨿_{L_n X} L_n Y → Y_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelVerdict {
    pub n: usize,
    pub latching_built: bool,
    pub monomorphism: bool,
    pub free: bool,
    /// A pair of cells with the same image, or a cell with a nontrivial stabilizer.
    pub witness: Option<String>,
}

impl LevelVerdict {
    pub fn ok(&self) -> bool {
        self.latching_built && self.monomorphism && self.free
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CofibrationReport {
    pub levels: Vec<LevelVerdict>,
    pub overall: bool,
}

/// Two distinct cells with equal images, or a cell sent to a degenerate simplex.
pub fn non_injective_witness(f: &SimplicialMap) -> Option<String> {
    let mut seen = std::collections::HashMap::new();
    for c in f.source().all_cells() {
        let img = f.image_of(c);
        if img.is_degenerate() {
            return Some(format!("{c} maps to a degenerate simplex"));
        }
        if let Some(prev) = seen.insert(img.cell, c) {
            return Some(format!("{prev} and {c} both map to {}", img.cell));
        }
    }
    None
}

/// Checks that every corner map through the bound is a monomorphism on
/// which `Σ_n` acts freely off the image.
pub fn stable_cofibration_check(f: &SpectrumMap) -> Result<CofibrationReport> {
    let lx = LatchingObject::new(f.source())?;
    let ly = LatchingObject::new(f.target())?;
    let lf = lx.induced(f, &ly);
    let y = f.target();
    let mut levels = Vec::new();
    for n in 0..=y.bound() {
        let po = pushout(lx.map.component(n), lf.component(n));
        let verdict = match po {
            Err(e) => LevelVerdict {
                n,
                latching_built: false,
                monomorphism: false,
                free: false,
                witness: Some(e.to_string()),
            },
            Ok(po) => {
                let corner = po.copair(f.component(n), ly.map.component(n));
                let mono = non_injective_witness(&corner);
                let free = if mono.is_none() { first_non_free_cell(&corner, y.level(n)) } else { None };
                LevelVerdict {
                    n,
                    latching_built: true,
                    monomorphism: mono.is_none(),
                    free: mono.is_none() && free.is_none(),
                    witness: mono.or(free.map(|c| format!("{c} has a nontrivial stabilizer"))),
                }
            }
        };
        levels.push(verdict);
    }
    let overall = levels.iter().all(LevelVerdict::ok);
    Ok(CofibrationReport { levels, overall })
}
