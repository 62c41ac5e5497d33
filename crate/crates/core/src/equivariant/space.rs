use std::collections::HashSet;
use std::sync::Arc;

use super::Permutation;
use crate::error::{Error, Result};
use crate::sset::{CellId, PointedSimplicialSet, Simplex, SimplicialMap, Wedge};

/// A pointed simplicial set with a basepoint-preserving left action of a
/// Young subgroup `Σ_{b_1} × ... × Σ_{b_m} ⊆ Σ_n`, given on the adjacent
/// transpositions that lie in it. With a single block this is a `Σ_n`-space.
#[derive(Clone, Debug)]
pub struct EquivariantSpace {
    space: Arc<PointedSimplicialSet>,
    degree: usize,
    blocks: Vec<usize>,
    generators: Vec<Option<SimplicialMap>>,
}

impl PartialEq for EquivariantSpace {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.blocks == other.blocks
            && (Arc::ptr_eq(&self.space, &other.space) || self.space == other.space)
            && self
                .generators
                .iter()
                .zip(&other.generators)
                .all(|(a, b)| match (a, b) {
                    (Some(a), Some(b)) => a.images() == b.images(),
                    (None, None) => true,
                    _ => false,
                })
    }
}

impl EquivariantSpace {
    /// A `Σ_n`-space from the actions of `s_0, ..., s_{n-2}`, checked.
    pub fn new(
        space: Arc<PointedSimplicialSet>,
        degree: usize,
        generators: Vec<SimplicialMap>,
    ) -> Result<Self> {
        let out = Self::with_blocks(
            space,
            vec![degree],
            generators.into_iter().map(Some).collect(),
        )?;
        Ok(out)
    }

    /// An action of the Young subgroup for `blocks`; `generators[j]` must be
    /// present exactly when `j` and `j + 1` lie in one block.
    pub fn with_blocks(
        space: Arc<PointedSimplicialSet>,
        blocks: Vec<usize>,
        generators: Vec<Option<SimplicialMap>>,
    ) -> Result<Self> {
        let out = Self::from_parts(space, blocks, generators);
        out.check()?;
        Ok(out)
    }

    /// Unchecked constructor for actions known to be valid by construction.
    pub(crate) fn from_parts(
        space: Arc<PointedSimplicialSet>,
        blocks: Vec<usize>,
        generators: Vec<Option<SimplicialMap>>,
    ) -> Self {
        let degree = blocks.iter().sum();
        Self {
            space,
            degree,
            blocks,
            generators,
        }
    }

    /// The trivial action of `Σ_n`.
    pub fn trivial(space: Arc<PointedSimplicialSet>, degree: usize) -> Self {
        let id = SimplicialMap::identity(space.clone());
        Self::from_parts(
            space,
            vec![degree],
            vec![Some(id); degree.saturating_sub(1)],
        )
    }

    pub fn point(degree: usize) -> Self {
        Self::trivial(Arc::new(PointedSimplicialSet::point()), degree)
    }

    pub fn space(&self) -> &Arc<PointedSimplicialSet> {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn generators(&self) -> &[Option<SimplicialMap>] {
        &self.generators
    }

    pub fn generator(&self, j: usize) -> &SimplicialMap {
        self.generators[j]
            .as_ref()
            .unwrap_or_else(|| panic!("s_{j} is not in the acting subgroup"))
    }

    /// `α · s` for a permutation in the acting subgroup.
    pub fn act(&self, alpha: &Permutation, s: &Simplex) -> Simplex {
        debug_assert_eq!(alpha.degree(), self.degree);
        alpha
            .reduced_word()
            .into_iter()
            .fold(*s, |acc, j| self.generator(j).apply(&acc))
    }

    /// The action of `α` as a map.
    pub fn act_map(&self, alpha: &Permutation) -> SimplicialMap {
        let word = alpha.reduced_word();
        let mut out = SimplicialMap::identity(self.space.clone());
        for j in word {
            out = out.then(self.generator(j));
        }
        out
    }

    /// Restricts to a finer block decomposition.
    pub fn restrict(&self, blocks: Vec<usize>) -> Self {
        assert_eq!(blocks.iter().sum::<usize>(), self.degree);
        let inner = inner_positions(&blocks);
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(j, g)| if inner.contains(&j) { g.clone() } else { None })
            .collect();
        Self::from_parts(self.space.clone(), blocks, generators)
    }

    /// Checks the shape of the generator list, that each generator is a
    /// basepoint-preserving simplicial map, and the Coxeter relations.
    pub fn check(&self) -> Result<()> {
        if self.degree != self.blocks.iter().sum::<usize>() {
            return Err(Error::InvalidInput("block sizes do not add up to the degree".into()));
        }
        if self.generators.len() != self.degree.saturating_sub(1) {
            return Err(Error::InvalidInput(format!(
                "degree {} needs {} generators, got {}",
                self.degree,
                self.degree.saturating_sub(1),
                self.generators.len()
            )));
        }
        let inner = inner_positions(&self.blocks);
        for (j, g) in self.generators.iter().enumerate() {
            match g {
                Some(g) => {
                    if !inner.contains(&j) {
                        return Err(Error::InvalidInput(format!("s_{j} crosses a block boundary")));
                    }
                    if !(Arc::ptr_eq(g.source(), &self.space) || **g.source() == *self.space)
                        || !(Arc::ptr_eq(g.target(), &self.space) || **g.target() == *self.space)
                    {
                        return Err(Error::InvalidInput(format!(
                            "generator s_{j} is not an endomorphism of the space"
                        )));
                    }
                    g.verify()?;
                }
                None if inner.contains(&j) => {
                    return Err(Error::InvalidInput(format!("generator s_{j} is missing")));
                }
                None => {}
            }
        }
        let id = SimplicialMap::identity(self.space.clone());
        for (j, g) in self.generators.iter().enumerate() {
            let Some(g) = g else { continue };
            if g.then(g).images() != id.images() {
                return Err(Error::InvalidInput(format!("s_{j}² is not the identity")));
            }
            for (k, h) in self.generators.iter().enumerate().skip(j + 1) {
                let Some(h) = h else { continue };
                let ok = if k == j + 1 {
                    g.then(h).then(g).images() == h.then(g).then(h).images()
                } else {
                    g.then(h).images() == h.then(g).images()
                };
                if !ok {
                    return Err(Error::InvalidInput(format!(
                        "Coxeter relation between s_{j} and s_{k} fails"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Positions `j` with `j` and `j + 1` in the same block.
fn inner_positions(blocks: &[usize]) -> HashSet<usize> {
    let mut out = HashSet::new();
    let mut off = 0;
    for &b in blocks {
        for j in off..(off + b).saturating_sub(1) {
            out.insert(j);
        }
        off += b;
    }
    out
}

/// True iff `f` commutes with every generator acting on both sides.
pub fn is_equivariant(
    f: &SimplicialMap,
    source: &EquivariantSpace,
    target: &EquivariantSpace,
) -> Result<bool> {
    if source.degree != target.degree {
        return Err(Error::DegreeMismatch(source.degree, target.degree));
    }
    for (a, b) in source.generators.iter().zip(&target.generators) {
        if let (Some(a), Some(b)) = (a, b) {
            if a.then(f).images() != f.then(b).images() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For a monomorphism `f` into `target`: true iff every nondegenerate
/// simplex of the target outside the image has trivial stabilizer.
pub fn acts_freely_off_image(f: &SimplicialMap, target: &EquivariantSpace) -> Result<bool> {
    if !f.is_monomorphism() {
        return Err(Error::NotMonomorphism);
    }
    Ok(first_non_free_cell(f, target).is_none())
}

/// A nondegenerate simplex off the image of `f` with a nontrivial stabilizer.
pub fn first_non_free_cell(f: &SimplicialMap, target: &EquivariantSpace) -> Option<CellId> {
    let image = f.image_cells();
    let order: usize = target.blocks.iter().map(|&b| super::factorial(b)).product();
    let space = &target.space;
    let mut done: HashSet<CellId> = HashSet::new();
    for cell in space.all_cells() {
        if image.contains(&cell) || done.contains(&cell) {
            continue;
        }
        // orbit by breadth-first search over the generators; the action is
        // free on the orbit iff its size is the group order
        let mut orbit = vec![cell];
        let mut seen: HashSet<CellId> = HashSet::from([cell]);
        let mut i = 0;
        while i < orbit.len() {
            let c = orbit[i];
            i += 1;
            for g in target.generators.iter().flatten() {
                let img = g.image_of(c);
                if img.is_degenerate() {
                    return Some(c);
                }
                if seen.insert(img.cell) {
                    orbit.push(img.cell);
                }
            }
        }
        if orbit.len() != order {
            return Some(cell);
        }
        done.extend(orbit);
    }
    None
}

/// The wedge of `Σ_n`-spaces of a common degree, with the diagonal action.
pub fn wedge_equivariant(parts: &[Arc<EquivariantSpace>]) -> (Wedge, EquivariantSpace) {
    let wedge = Wedge::new(parts.iter().map(|p| p.space.clone()).collect());
    let degree = parts.first().map_or(0, |p| p.degree);
    let blocks = parts.first().map_or(vec![0], |p| p.blocks.clone());
    let generators = (0..degree.saturating_sub(1))
        .map(|j| {
            if parts.iter().any(|p| p.generators[j].is_none()) {
                return None;
            }
            Some(SimplicialMap::from_fn(
                wedge.space().clone(),
                wedge.space().clone(),
                |c| match wedge.split(&Simplex::nondegenerate(c)) {
                    None => Simplex::nondegenerate(c),
                    Some((p, s)) => wedge.include(p, &parts[p].generator(j).apply(&s)),
                },
            ))
        })
        .collect();
    let space = wedge.space().clone();
    (wedge, EquivariantSpace::from_parts(space, blocks, generators))
}
