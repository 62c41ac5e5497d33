use std::collections::HashMap;
use std::sync::Arc;

use super::simplex::strip_common;
use super::{masks_with_popcount, CellId, PointedSimplicialSet, SSetBuilder, Simplex, SimplicialMap};

/// An iterated product or smash product `A_1 × ... × A_m` / `A_1 ∧ ... ∧ A_m`
/// together with the decomposition of each of its simplices into components.
///
/// Nondegenerate simplices are tuples of equal-dimension simplices whose
/// degeneracy masks have empty common intersection. In the smash case tuples
/// touching a basepoint are collapsed to the basepoint. With no factors the
/// product is the point and the smash is `S⁰`.
#[derive(Clone, Debug)]
pub struct Smash {
    factors: Vec<Arc<PointedSimplicialSet>>,
    space: Arc<PointedSimplicialSet>,
    collapse: bool,
    tuples: Vec<Vec<Vec<Simplex>>>,
    index: HashMap<Vec<Simplex>, CellId>,
    unit_vertex: Option<CellId>,
}

impl Smash {
    pub fn smash(factors: Vec<Arc<PointedSimplicialSet>>) -> Self {
        Self::build(factors, true)
    }

    pub fn product(factors: Vec<Arc<PointedSimplicialSet>>) -> Self {
        Self::build(factors, false)
    }

    pub fn smash2(a: &Arc<PointedSimplicialSet>, b: &Arc<PointedSimplicialSet>) -> Self {
        Self::smash(vec![a.clone(), b.clone()])
    }

    pub fn space(&self) -> &Arc<PointedSimplicialSet> {
        &self.space
    }

    pub fn factors(&self) -> &[Arc<PointedSimplicialSet>] {
        &self.factors
    }

    pub fn is_smash(&self) -> bool {
        self.collapse
    }

    fn build(factors: Vec<Arc<PointedSimplicialSet>>, collapse: bool) -> Self {
        let mut builder = SSetBuilder::new();
        let mut tuples: Vec<Vec<Vec<Simplex>>> = Vec::new();
        let mut index: HashMap<Vec<Simplex>, CellId> = HashMap::new();
        let mut unit_vertex = None;

        let base_id = builder.add_vertex();
        if collapse {
            tuples.push(vec![Vec::new()]);
            if factors.is_empty() {
                let v = builder.add_vertex();
                tuples[0].push(Vec::new());
                index.insert(Vec::new(), v);
                unit_vertex = Some(v);
            }
        } else {
            let base: Vec<Simplex> = factors.iter().map(|f| f.base_simplex(0)).collect();
            tuples.push(vec![base.clone()]);
            index.insert(base, base_id);
        }

        let mut out = Self {
            factors,
            space: Arc::new(PointedSimplicialSet::point()),
            collapse,
            tuples: Vec::new(),
            index: HashMap::new(),
            unit_vertex,
        };

        let max_dim: usize = out.factors.iter().map(|f| f.dim()).sum();
        if !out.factors.is_empty() {
            for k in 0..=max_dim {
                let mut found = Vec::new();
                let mut current = Vec::with_capacity(out.factors.len());
                out.enumerate(k, 0, full_mask_u64(k), &mut current, &mut found);
                for tuple in found {
                    if k == 0 && !collapse && tuple.iter().zip(&out.factors).all(|(s, f)| f.is_base(s)) {
                        continue;
                    }
                    let cell = if k == 0 {
                        builder.add_vertex()
                    } else {
                        let faces = (0..=k)
                            .map(|i| {
                                let parts: Vec<Simplex> = tuple
                                    .iter()
                                    .zip(&out.factors)
                                    .map(|(s, f)| f.face(s, i))
                                    .collect();
                                lookup(&index, &out.factors, collapse, base_id, k - 1, &parts)
                            })
                            .collect();
                        builder.add_cell(faces)
                    };
                    if tuples.len() <= k {
                        tuples.resize_with(k + 1, Vec::new);
                    }
                    tuples[k].push(tuple.clone());
                    index.insert(tuple, cell);
                }
            }
        }
        out.space = Arc::new(builder.build(base_id));
        out.tuples = tuples;
        out.index = index;
        out
    }

    /// Depth-first enumeration of nondegenerate `k`-tuples; `common` is the
    /// running intersection of the degeneracy masks chosen so far.
    fn enumerate(
        &self,
        k: usize,
        depth: usize,
        common: u64,
        current: &mut Vec<Simplex>,
        found: &mut Vec<Vec<Simplex>>,
    ) {
        if depth == self.factors.len() {
            if common == 0 {
                found.push(current.clone());
            }
            return;
        }
        let f = &self.factors[depth];
        for cdim in 0..=k.min(f.dim()) {
            for mask in masks_with_popcount(k, k - cdim) {
                let next = common & mask as u64;
                for cell in f.cells(cdim) {
                    if self.collapse && cell == f.basepoint() {
                        continue;
                    }
                    current.push(Simplex::new(k, mask, cell));
                    self.enumerate(k, depth + 1, next, current, found);
                    current.pop();
                }
            }
        }
    }

    /// The simplex of the product/smash with the given components (all of
    /// dimension `dim`).
    pub fn pair(&self, dim: usize, parts: &[Simplex]) -> Simplex {
        debug_assert_eq!(parts.len(), self.factors.len());
        debug_assert!(parts.iter().all(|p| p.dim == dim));
        if self.factors.is_empty() {
            let v = self.unit_vertex.unwrap_or(self.space.basepoint());
            return Simplex::on_vertex(v.index, dim);
        }
        lookup(
            &self.index,
            &self.factors,
            self.collapse,
            self.space.basepoint(),
            dim,
            parts,
        )
    }

    pub fn pair2(&self, a: Simplex, b: Simplex) -> Simplex {
        self.pair(a.dim, &[a, b])
    }

    /// Components of a simplex; `None` for the collapsed basepoint of a smash.
    pub fn split(&self, s: &Simplex) -> Option<Vec<Simplex>> {
        let tuple = &self.tuples[s.cell.dim][s.cell.index];
        if self.collapse && s.cell == self.space.basepoint() {
            return None;
        }
        Some(if s.degen == 0 {
            tuple.clone()
        } else {
            tuple.iter().map(|t| t.degenerate_by(s.degen, s.dim)).collect()
        })
    }

    pub fn split2(&self, s: &Simplex) -> Option<(Simplex, Simplex)> {
        self.split(s).map(|v| (v[0], v[1]))
    }

    /// Components of a nondegenerate simplex.
    pub fn components(&self, cell: CellId) -> &[Simplex] {
        &self.tuples[cell.dim][cell.index]
    }

    /// Projection onto factor `i` (product only).
    pub fn projection(&self, i: usize) -> SimplicialMap {
        assert!(!self.collapse, "projections exist on products only");
        SimplicialMap::from_fn(self.space.clone(), self.factors[i].clone(), |c| {
            self.tuples[c.dim][c.index][i]
        })
    }

    /// Smash (or product) of maps, componentwise, into `target`.
    pub fn map_into(&self, target: &Smash, maps: &[&SimplicialMap]) -> SimplicialMap {
        assert_eq!(maps.len(), self.factors.len());
        SimplicialMap::from_fn(self.space.clone(), target.space.clone(), |c| {
            let s = Simplex::nondegenerate(c);
            match self.split(&s) {
                None => target.space.base_simplex(c.dim),
                Some(parts) => {
                    let imgs: Vec<Simplex> =
                        parts.iter().zip(maps).map(|(p, m)| m.apply(p)).collect();
                    target.pair(c.dim, &imgs)
                }
            }
        })
    }
}

fn full_mask_u64(k: usize) -> u64 {
    (1u64 << k) - 1
}

fn lookup(
    index: &HashMap<Vec<Simplex>, CellId>,
    factors: &[Arc<PointedSimplicialSet>],
    collapse: bool,
    base: CellId,
    dim: usize,
    parts: &[Simplex],
) -> Simplex {
    if collapse && parts.iter().zip(factors).any(|(p, f)| f.is_base(p)) {
        return Simplex::on_vertex(base.index, dim);
    }
    let common = parts.iter().fold(super::full_mask(dim), |m, p| m & p.degen);
    let key: Vec<Simplex> = if common == 0 {
        parts.to_vec()
    } else {
        let reduced = dim - common.count_ones() as usize;
        parts
            .iter()
            .map(|p| Simplex::new(reduced, strip_common(p.degen, common, dim), p.cell))
            .collect()
    };
    let cell = *index
        .get(&key)
        .unwrap_or_else(|| panic!("no cell for tuple {key:?}"));
    if common == 0 {
        Simplex::nondegenerate(cell)
    } else {
        Simplex::new(dim, common, cell)
    }
}
