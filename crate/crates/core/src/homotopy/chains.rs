//! Reduced normalized chains and chain maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::{zeros, Matrix};
use crate::sset::{circle, CellId, PointedSimplicialSet, Simplex, SimplicialMap, Smash};

/// A sparse integer chain: generator index to nonzero coefficient.
pub type Chain = BTreeMap<usize, BigInt>;

pub(crate) fn add_scaled(target: &mut Chain, source: &Chain, q: &BigInt) {
    for (&i, v) in source {
        let e = target.entry(i).or_insert_with(BigInt::zero);
        *e += v * q;
        if e.is_zero() {
            target.remove(&i);
        }
    }
}

/// A bounded free chain complex with boundaries stored by column:
/// `boundary(k)[j]` is `∂` of generator `j` in degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<Vec<Chain>>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<Vec<Chain>>) -> Self {
        debug_assert_eq!(ranks.len(), boundaries.len());
        Self { ranks, boundaries }
    }

    /// The rank in degree `k`, zero above the top.
    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    pub fn boundary(&self, k: usize) -> &[Chain] {
        self.boundaries.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub(crate) fn boundaries(&self) -> &[Vec<Chain>] {
        &self.boundaries
    }

    /// `∂_k` as a dense `rank(k-1) × rank(k)` matrix.
    pub fn boundary_matrix(&self, k: usize) -> Matrix {
        let rows = if k == 0 { 0 } else { self.rank(k - 1) };
        let mut m = zeros(rows, self.rank(k));
        for (j, col) in self.boundary(k).iter().enumerate() {
            for (&i, v) in col {
                m[i][j] = v.clone();
            }
        }
        m
    }

    pub fn apply_boundary(&self, k: usize, c: &Chain) -> Chain {
        let mut out = Chain::new();
        for (&j, v) in c {
            add_scaled(&mut out, &self.boundary(k)[j], v);
        }
        out
    }

    /// `∂ ∘ ∂ = 0` in every degree.
    pub fn is_complex(&self) -> bool {
        (2..self.ranks.len()).all(|k| {
            self.boundary(k)
                .iter()
                .all(|col| self.apply_boundary(k - 1, col).is_empty())
        })
    }
}

/// Numbering of the nondegenerate non-base simplices of a space.
#[derive(Clone, Debug)]
pub struct CellIndex {
    space: Arc<PointedSimplicialSet>,
}

impl CellIndex {
    pub fn new(space: Arc<PointedSimplicialSet>) -> Self {
        Self { space }
    }

    pub fn space(&self) -> &Arc<PointedSimplicialSet> {
        &self.space
    }

    /// The generator of a simplex; `None` if it is degenerate or the base.
    pub fn generator(&self, s: &Simplex) -> Option<usize> {
        if s.is_degenerate() {
            return None;
        }
        let base = self.space.basepoint();
        match s.cell.dim {
            0 if s.cell == base => None,
            0 => Some(s.cell.index - usize::from(s.cell.index > base.index)),
            _ => Some(s.cell.index),
        }
    }

    pub fn cell(&self, k: usize, g: usize) -> CellId {
        let base = self.space.basepoint();
        if k == 0 && g >= base.index {
            CellId::new(0, g + 1)
        } else {
            CellId::new(k, g)
        }
    }

    pub fn rank(&self, k: usize) -> usize {
        let c = self.space.count(k);
        if k == 0 {
            c - 1
        } else {
            c
        }
    }
}

/// Reduced normalized chains: one generator per nondegenerate non-base
/// simplex, `∂ = Σ (-1)^i d_i` with degenerate and base faces dropped.
pub fn normalized_chains(x: &Arc<PointedSimplicialSet>) -> ChainComplex {
    let idx = CellIndex::new(x.clone());
    let top = x.dim();
    let ranks: Vec<usize> = (0..=top).map(|k| idx.rank(k)).collect();
    let boundaries = (0..=top)
        .map(|k| {
            (0..ranks[k])
                .map(|g| {
                    let mut col = Chain::new();
                    if k == 0 {
                        return col;
                    }
                    let faces = x.cell_faces(idx.cell(k, g));
                    for (i, f) in faces.iter().enumerate() {
                        if let Some(h) = idx.generator(f) {
                            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                            add_scaled(&mut col, &Chain::from([(h, BigInt::one())]), &sign);
                        }
                    }
                    col
                })
                .collect()
        })
        .collect();
    ChainComplex::new(ranks, boundaries)
}

/// A chain map raising degree by `shift`, stored by the images of
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub shift: usize,
    pub columns: Vec<Vec<Chain>>,
}

impl ChainMap {
    pub fn apply(&self, k: usize, c: &Chain) -> Chain {
        let mut out = Chain::new();
        for (&j, v) in c {
            if let Some(img) = self.columns.get(k).and_then(|col| col.get(j)) {
                add_scaled(&mut out, img, v);
            }
        }
        out
    }

    /// The matrix in degree `k` with `rows` target generators.
    pub fn matrix(&self, k: usize, rows: usize) -> Matrix {
        let cols = self.columns.get(k).map_or(0, Vec::len);
        let mut m = zeros(rows, cols);
        for (j, col) in self.columns.get(k).into_iter().flatten().enumerate() {
            for (&i, v) in col {
                m[i][j] = v.clone();
            }
        }
        m
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ChainMap) -> ChainMap {
        let columns = self
            .columns
            .iter()
            .enumerate()
            .map(|(k, cols)| cols.iter().map(|c| next.apply(k + self.shift, c)).collect())
            .collect();
        ChainMap {
            shift: self.shift + next.shift,
            columns,
        }
    }
}

/// The map on normalized chains of a simplicial map; degenerate and base
/// images contribute zero.
pub fn chain_map(f: &SimplicialMap) -> ChainMap {
    let src = CellIndex::new(f.source().clone());
    let tgt = CellIndex::new(f.target().clone());
    let columns = (0..=f.source().dim())
        .map(|k| {
            (0..src.rank(k))
                .map(|g| {
                    let img = f.image_of(src.cell(k, g));
                    tgt.generator(&img)
                        .map(|h| Chain::from([(h, BigInt::one())]))
                        .unwrap_or_default()
                })
                .collect()
        })
        .collect();
    ChainMap { shift: 0, columns }
}

/// `x ↦ Σ_i (-1)^i (e_i, s_i x)`: the shuffle product with the fundamental
/// edge of `S¹`, projected to `S¹ ∧ X`. Realizes `H̃_k(X) ≅ H̃_{k+1}(S¹ ∧ X)`.
pub fn suspension_chain_map(x: &Arc<PointedSimplicialSet>) -> (Smash, ChainMap) {
    let sm = Smash::smash2(&circle(), x);
    let map = suspension_into(&sm);
    (sm, map)
}

/// The suspension chain map into a given `S¹ ∧ X`.
pub fn suspension_into(sm: &Smash) -> ChainMap {
    let x = sm.factors()[1].clone();
    let src = CellIndex::new(x.clone());
    let tgt = CellIndex::new(sm.space().clone());
    let edge = CellId::new(1, 0);
    let columns = (0..=x.dim())
        .map(|k| {
            (0..src.rank(k))
                .map(|g| {
                    let xs = Simplex::nondegenerate(src.cell(k, g));
                    let mut out = Chain::new();
                    for i in 0..=k {
                        // the (k+1)-simplex of S¹ whose only jump is at position i
                        let full = if k == 0 { 0 } else { (1u32 << (k + 1)) - 1 };
                        let e = Simplex::new(k + 1, full & !(1 << i), edge);
                        let s = sm.pair2(e, xs.degeneracy(i));
                        if let Some(h) = tgt.generator(&s) {
                            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                            add_scaled(&mut out, &Chain::from([(h, BigInt::one())]), &sign);
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    ChainMap { shift: 1, columns }
}
