use std::sync::Arc;

use crate::equivariant::EquivariantSpace;
use crate::error::{Error, Result};
use crate::spectra::{bar_sphere, smash, smash_maps, SpectrumMap, SpectrumSmash, SymmetricSpectrum};
use crate::sset::SimplicialMap;

/// `X ∧ S̄` with its map to `X` induced by `S̄ → S`.
#[derive(Clone, Debug)]
pub struct LatchingObject {
    pub smash: SpectrumSmash,
    /// `X ∧ S̄ → X`, `[α, x, s̄] ↦ α · (x · s̄)`
    pub map: SpectrumMap,
}

impl LatchingObject {
    pub fn new(x: &Arc<SymmetricSpectrum>) -> Result<Self> {
        let bar = Arc::new(bar_sphere(x.bound()));
        let smash = smash(x, &bar)?;
        let map = smash.map_out(x, |n, p, alpha, a, s| {
            x.level(n).act(alpha, &x.right_action(p, a, n - p, s))
        });
        Ok(Self { smash, map })
    }

    pub fn spectrum(&self) -> &Arc<SymmetricSpectrum> {
        self.smash.spectrum()
    }

    /// `L_n f = Ev_n(f ∧ S̄)` between two latching objects.
    pub fn induced(&self, f: &SpectrumMap, target: &LatchingObject) -> SpectrumMap {
        let bar = self.smash.right().clone();
        smash_maps(f, &SpectrumMap::identity(bar), &self.smash, &target.smash)
    }
}

/// The latching space `L_n X` and its map to `X_n`.
#[derive(Clone, Debug)]
pub struct Latching {
    pub n: usize,
    pub space: Arc<EquivariantSpace>,
    pub map: SimplicialMap,
}

/// `L_n X = Ev_n(X ∧ S̄)`, computed from the truncation of `X` to level `n`.
pub fn latching(x: &Arc<SymmetricSpectrum>, n: usize) -> Result<Latching> {
    if n > x.bound() {
        return Err(Error::OutOfBound { level: n, bound: x.bound() });
    }
    let xt = Arc::new(x.truncate(n));
    let obj = LatchingObject::new(&xt)?;
    Ok(Latching {
        n,
        space: obj.spectrum().level(n).clone(),
        map: obj.map.component(n).with_target(x.space(n).clone()),
    })
}

/// The square `L_n X → X_n`, `L_n Y → Y_n` induced by `f`, as
/// `(L_n f, top, bottom)`; it commutes by naturality.
pub fn latching_square(f: &SpectrumMap, n: usize) -> Result<(SimplicialMap, SimplicialMap, SimplicialMap)> {
    if n > f.source().bound() {
        return Err(Error::OutOfBound { level: n, bound: f.source().bound() });
    }
    let ft = f.truncate(n);
    let lx = LatchingObject::new(ft.source())?;
    let ly = LatchingObject::new(ft.target())?;
    let lf = lx.induced(&ft, &ly);
    Ok((
        lf.component(n).clone(),
        lx.map.component(n).clone(),
        ly.map.component(n).clone(),
    ))
}
