use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::{CellId, PointedSimplicialSet, Simplex};
use crate::error::{Error, Result};

/// A pointed simplicial map, stored as the image of every nondegenerate
/// simplex of the source.
#[derive(Clone)]
pub struct SimplicialMap {
    source: Arc<PointedSimplicialSet>,
    target: Arc<PointedSimplicialSet>,
    images: Vec<Vec<Simplex>>,
}

impl fmt::Debug for SimplicialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialMap")
            .field("source", &self.source)
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

impl PartialEq for SimplicialMap {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
            && (Arc::ptr_eq(&self.source, &other.source) || self.source == other.source)
            && (Arc::ptr_eq(&self.target, &other.target) || self.target == other.target)
    }
}

impl Eq for SimplicialMap {}

impl SimplicialMap {
    /// Builds a map from explicit images and verifies it.
    pub fn new(
        source: Arc<PointedSimplicialSet>,
        target: Arc<PointedSimplicialSet>,
        images: Vec<Vec<Simplex>>,
    ) -> Result<Self> {
        let map = Self {
            source,
            target,
            images,
        };
        map.verify()?;
        Ok(map)
    }

    /// Builds a map by evaluating `f` on every nondegenerate source simplex.
    /// The result is not checked; call [`verify`](Self::verify) when `f` is
    /// not known to be simplicial.
    pub fn from_fn(
        source: Arc<PointedSimplicialSet>,
        target: Arc<PointedSimplicialSet>,
        mut f: impl FnMut(CellId) -> Simplex,
    ) -> Self {
        let images = (0..source.counts().len())
            .map(|d| source.cells(d).map(&mut f).collect())
            .collect();
        Self {
            source,
            target,
            images,
        }
    }

    pub fn try_from_fn(
        source: Arc<PointedSimplicialSet>,
        target: Arc<PointedSimplicialSet>,
        f: impl FnMut(CellId) -> Simplex,
    ) -> Result<Self> {
        let map = Self::from_fn(source, target, f);
        map.verify()?;
        Ok(map)
    }

    pub fn identity(space: Arc<PointedSimplicialSet>) -> Self {
        Self::from_fn(space.clone(), space, Simplex::nondegenerate)
    }

    /// The map sending everything to the basepoint.
    pub fn constant(source: Arc<PointedSimplicialSet>, target: Arc<PointedSimplicialSet>) -> Self {
        let t = target.clone();
        Self::from_fn(source, target, move |c| t.base_simplex(c.dim))
    }

    pub fn source(&self) -> &Arc<PointedSimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PointedSimplicialSet> {
        &self.target
    }

    pub fn image_of(&self, cell: CellId) -> Simplex {
        self.images[cell.dim][cell.index]
    }

    pub fn images(&self) -> &[Vec<Simplex>] {
        &self.images
    }

    /// Image of an arbitrary (possibly degenerate) simplex.
    pub fn apply(&self, s: &Simplex) -> Simplex {
        let base = self.images[s.cell.dim][s.cell.index];
        if s.degen == 0 {
            base
        } else {
            base.degenerate_by(s.degen, s.dim)
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SimplicialMap) -> SimplicialMap {
        debug_assert!(Arc::ptr_eq(&self.target, &next.source) || *self.target == *next.source);
        let images = self
            .images
            .iter()
            .map(|row| row.iter().map(|s| next.apply(s)).collect())
            .collect();
        SimplicialMap {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
        }
    }

    /// Same images, re-targeted at an equal object (used after
    /// reconstruction produces an identical copy).
    pub fn with_target(&self, target: Arc<PointedSimplicialSet>) -> SimplicialMap {
        SimplicialMap {
            source: self.source.clone(),
            target,
            images: self.images.clone(),
        }
    }

    /// Checks that images have the right dimension, faces commute and the
    /// basepoint is preserved.
    pub fn verify(&self) -> Result<()> {
        let src = &self.source;
        let tgt = &self.target;
        if self.images.len() != src.counts().len()
            || self
                .images
                .iter()
                .zip(src.counts())
                .any(|(row, &c)| row.len() != c)
        {
            return Err(Error::NotSimplicial("image table has the wrong shape".into()));
        }
        for cell in src.all_cells() {
            let img = self.image_of(cell);
            if img.dim != cell.dim || !tgt.contains(&img) {
                return Err(Error::NotSimplicial(format!("bad image for cell {cell}")));
            }
        }
        if !tgt.is_base(&self.image_of(src.basepoint())) {
            return Err(Error::NotSimplicial("basepoint not preserved".into()));
        }
        for cell in src.all_cells().filter(|c| c.dim > 0) {
            let s = Simplex::nondegenerate(cell);
            let img = self.image_of(cell);
            for i in 0..=cell.dim {
                if self.apply(&src.face(&s, i)) != tgt.face(&img, i) {
                    return Err(Error::NotSimplicial(format!(
                        "face d_{i} does not commute on cell {cell}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Injective on simplices of every dimension.
    pub fn is_monomorphism(&self) -> bool {
        let mut seen = HashSet::new();
        self.images
            .iter()
            .flatten()
            .all(|s| !s.is_degenerate() && seen.insert(s.cell))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_monomorphism()
            && (0..self.target.counts().len().max(self.source.counts().len()))
                .all(|d| self.source.count(d) == self.target.count(d))
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<SimplicialMap> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut images: Vec<Vec<Simplex>> = self
            .target
            .counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| vec![Simplex::nondegenerate(CellId::new(d, 0)); c])
            .collect();
        for cell in self.source.all_cells() {
            let img = self.image_of(cell);
            images[img.cell.dim][img.cell.index] = Simplex::nondegenerate(cell);
        }
        Some(SimplicialMap {
            source: self.target.clone(),
            target: self.source.clone(),
            images,
        })
    }

    /// Nondegenerate simplices of the target hit by some simplex.
    pub fn image_cells(&self) -> HashSet<CellId> {
        self.images.iter().flatten().map(|s| s.cell).collect()
    }
}
