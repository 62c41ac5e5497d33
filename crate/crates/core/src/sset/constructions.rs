use std::sync::Arc;

use super::{PointedSimplicialSet, Quotient, Simplex, SimplicialMap, Smash, Wedge};
use crate::error::{Error, Result};

/// `A × B` with its projections (see [`Smash::projection`]).
pub fn product(a: &Arc<PointedSimplicialSet>, b: &Arc<PointedSimplicialSet>) -> Smash {
    Smash::product(vec![a.clone(), b.clone()])
}

/// `A ∧ B`.
pub fn smash(a: &Arc<PointedSimplicialSet>, b: &Arc<PointedSimplicialSet>) -> Smash {
    Smash::smash2(a, b)
}

pub fn wedge(parts: Vec<Arc<PointedSimplicialSet>>) -> Result<Wedge> {
    if parts.is_empty() {
        return Err(Error::InvalidInput("wedge of an empty list".into()));
    }
    Ok(Wedge::new(parts))
}

/// A pushout `B ⨿_A C`, computed as a quotient of `B ∨ C`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub wedge: Wedge,
    pub quotient: Quotient,
    /// `B → B ⨿_A C`
    pub left: SimplicialMap,
    /// `C → B ⨿_A C`
    pub right: SimplicialMap,
}

impl Pushout {
    pub fn space(&self) -> &Arc<PointedSimplicialSet> {
        self.quotient.space()
    }

    /// The map out of the pushout restricting to `u` on `B` and `v` on `C`.
    pub fn copair(&self, u: &SimplicialMap, v: &SimplicialMap) -> SimplicialMap {
        let w = self.wedge.copair(u.target().clone(), &[u, v]);
        self.quotient.descend(&w)
    }
}

pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout> {
    if !(Arc::ptr_eq(f.source(), g.source()) || f.source() == g.source()) {
        return Err(Error::InvalidInput("pushout legs have different sources".into()));
    }
    let wedge = Wedge::new(vec![f.target().clone(), g.target().clone()]);
    let relations: Vec<(Simplex, Simplex)> = f
        .source()
        .all_cells()
        .map(|c| {
            (
                wedge.include(0, &f.image_of(c)),
                wedge.include(1, &g.image_of(c)),
            )
        })
        .collect();
    let quotient = Quotient::new(wedge.space().clone(), &relations)?;
    let left = wedge.inclusion(0).then(quotient.map());
    let right = wedge.inclusion(1).then(quotient.map());
    Ok(Pushout {
        wedge,
        quotient,
        left,
        right,
    })
}

/// `X / A` for a subobject inclusion `A → X`.
pub fn quotient_by_subobject(inclusion: &SimplicialMap) -> Result<Quotient> {
    if !inclusion.is_monomorphism() {
        return Err(Error::NotMonomorphism);
    }
    let x = inclusion.target();
    let relations: Vec<(Simplex, Simplex)> = inclusion
        .source()
        .all_cells()
        .map(|c| (inclusion.image_of(c), x.base_simplex(c.dim)))
        .collect();
    Quotient::new(x.clone(), &relations)
}
