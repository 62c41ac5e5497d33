//! Truncated symmetric sequences of pointed simplicial sets and their tensor
//! product.

mod tensor;

use std::sync::Arc;

pub use tensor::{
    assoc_iso, free_tensor_iso, left_unitor, right_unitor, tensor, tensor_maps, twist_iso,
    Tensor, TensorLevel,
};

use crate::equivariant::{is_equivariant, smash_equivariant, EquivariantSpace, Induced};
use crate::error::{Error, Result};
use crate::sset::{sphere, PointedSimplicialSet, SimplicialMap};

/// Levels `X_0, ..., X_N`, level `n` carrying a `Σ_n` action.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricSequence {
    bound: usize,
    levels: Vec<Arc<EquivariantSpace>>,
}

impl SymmetricSequence {
    pub fn new(levels: Vec<Arc<EquivariantSpace>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidInput("a sequence needs at least level 0".into()));
        }
        for (n, l) in levels.iter().enumerate() {
            if l.degree() != n || l.blocks().len() != 1 {
                return Err(Error::DegreeMismatch(l.degree(), n));
            }
            l.check()?;
        }
        Ok(Self::from_levels(levels))
    }

    pub(crate) fn from_levels(levels: Vec<Arc<EquivariantSpace>>) -> Self {
        Self {
            bound: levels.len() - 1,
            levels,
        }
    }

    /// The sequence that is a point at every level.
    pub fn point(bound: usize) -> Self {
        Self::from_levels((0..=bound).map(|n| Arc::new(EquivariantSpace::point(n))).collect())
    }

    /// The unit `(S⁰, *, *, ...)`.
    pub fn unit(bound: usize) -> Self {
        Self::from_levels(
            (0..=bound)
                .map(|n| {
                    if n == 0 {
                        Arc::new(EquivariantSpace::trivial(sphere(0), 0))
                    } else {
                        Arc::new(EquivariantSpace::point(n))
                    }
                })
                .collect(),
        )
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn levels(&self) -> &[Arc<EquivariantSpace>] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> &Arc<EquivariantSpace> {
        &self.levels[n]
    }

    /// `Ev_n`.
    pub fn eval(&self, n: usize) -> Result<&Arc<EquivariantSpace>> {
        self.levels.get(n).ok_or(Error::OutOfBound {
            level: n,
            bound: self.bound,
        })
    }

    /// The first `bound + 1` levels.
    pub fn truncate(&self, bound: usize) -> Self {
        Self::from_levels(self.levels[..=bound.min(self.bound)].to_vec())
    }
}

/// `G_n K`: `(Σ_n)_+ ∧ K` at level `n`, a point elsewhere.
pub fn free_g(n: usize, k: &Arc<PointedSimplicialSet>, bound: usize) -> Result<SymmetricSequence> {
    if n > bound {
        return Err(Error::OutOfBound { level: n, bound });
    }
    Ok(SymmetricSequence::from_levels(
        (0..=bound)
            .map(|m| {
                if m == n {
                    free_level(n, k).space().clone()
                } else {
                    Arc::new(EquivariantSpace::point(m))
                }
            })
            .collect(),
    ))
}

/// `(Σ_n)_+ ∧ K` as an induced space from the trivial subgroup.
pub fn free_level(n: usize, k: &Arc<PointedSimplicialSet>) -> Induced {
    let blocks = vec![1; n];
    let base = EquivariantSpace::from_parts(k.clone(), blocks, vec![None; n.saturating_sub(1)]);
    Induced::new(Arc::new(base))
}

/// `X ∧ K` with `Σ_n` acting on `X_n` only.
pub fn smash_space(x: &SymmetricSequence, k: &Arc<PointedSimplicialSet>) -> SymmetricSequence {
    let kk = Arc::new(EquivariantSpace::trivial(k.clone(), 0));
    SymmetricSequence::from_levels(
        x.levels
            .iter()
            .map(|l| Arc::new(smash_equivariant(&[l.clone(), kk.clone()]).1))
            .collect(),
    )
}

/// A levelwise equivariant map of symmetric sequences.
#[derive(Clone, Debug)]
pub struct SymSeqMap {
    source: Arc<SymmetricSequence>,
    target: Arc<SymmetricSequence>,
    components: Vec<SimplicialMap>,
}

impl PartialEq for SymSeqMap {
    fn eq(&self, other: &Self) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.images() == b.images())
    }
}

impl SymSeqMap {
    pub fn new(
        source: Arc<SymmetricSequence>,
        target: Arc<SymmetricSequence>,
        components: Vec<SimplicialMap>,
    ) -> Result<Self> {
        let out = Self::from_parts(source, target, components);
        out.check()?;
        Ok(out)
    }

    pub(crate) fn from_parts(
        source: Arc<SymmetricSequence>,
        target: Arc<SymmetricSequence>,
        components: Vec<SimplicialMap>,
    ) -> Self {
        Self {
            source,
            target,
            components,
        }
    }

    pub fn identity(x: Arc<SymmetricSequence>) -> Self {
        let components = x
            .levels
            .iter()
            .map(|l| SimplicialMap::identity(l.space().clone()))
            .collect();
        Self::from_parts(x.clone(), x, components)
    }

    pub fn source(&self) -> &Arc<SymmetricSequence> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SymmetricSequence> {
        &self.target
    }

    pub fn components(&self) -> &[SimplicialMap] {
        &self.components
    }

    pub fn component(&self, n: usize) -> &SimplicialMap {
        &self.components[n]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SymSeqMap) -> SymSeqMap {
        let components = self
            .components
            .iter()
            .zip(&next.components)
            .map(|(a, b)| a.then(b))
            .collect();
        Self::from_parts(self.source.clone(), next.target.clone(), components)
    }

    pub fn check(&self) -> Result<()> {
        if self.source.bound != self.target.bound || self.components.len() != self.source.bound + 1 {
            return Err(Error::BoundMismatch(self.source.bound, self.target.bound));
        }
        for (n, f) in self.components.iter().enumerate() {
            f.verify()?;
            if !is_equivariant(f, &self.source.levels[n], &self.target.levels[n])? {
                return Err(Error::InvalidInput(format!("component {n} is not equivariant")));
            }
        }
        Ok(())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(SimplicialMap::is_isomorphism)
    }

    pub fn is_monomorphism(&self) -> bool {
        self.components.iter().all(SimplicialMap::is_monomorphism)
    }
}

#[cfg(test)]
mod tests;
