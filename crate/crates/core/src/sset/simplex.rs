//! Simplices in Eilenberg–Zilber normal form.
//!
//! Every simplex of a simplicial set is uniquely `s_{i_k} ... s_{i_1} y` with
//! `i_k > ... > i_1` and `y` nondegenerate. We store the index set of that
//! degeneracy word as a bitmask: bit `j` is set iff the underlying monotone
//! surjection `[m] -> [dim y]` identifies `j` and `j + 1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest simplex dimension representable by the bitmask encoding.
pub const MAX_DIM: usize = 31;

/// A nondegenerate simplex of some parent object, identified by dimension and
/// a dense index within that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
}

impl CellId {
    pub const fn new(dim: usize, index: usize) -> Self {
        Self { dim, index }
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.dim, self.index)
    }
}

/// A canonical degeneracy word, indices strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DegeneracyWord(Vec<usize>);

impl DegeneracyWord {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidInput(format!(
                "degeneracy indices must be strictly decreasing, got {indices:?}"
            )));
        }
        if indices.first().is_some_and(|&i| i >= MAX_DIM) {
            return Err(Error::InvalidInput("degeneracy index too large".into()));
        }
        Ok(Self(indices))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_mask(mask: u32) -> Self {
        let mut v: Vec<usize> = (0..32).filter(|j| mask & (1 << j) != 0).collect();
        v.reverse();
        Self(v)
    }

    pub fn to_mask(&self) -> u32 {
        self.0.iter().fold(0, |m, &j| m | (1 << j))
    }
}

/// A simplex `s_J y` of dimension `dim`, with `y = cell` nondegenerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub dim: usize,
    pub degen: u32,
    pub cell: CellId,
}

impl Simplex {
    pub const fn nondegenerate(cell: CellId) -> Self {
        Self { dim: cell.dim, degen: 0, cell }
    }

    /// Builds `s_J cell` from a mask. Panics if the dimensions do not add up.
    pub fn new(dim: usize, degen: u32, cell: CellId) -> Self {
        debug_assert!(dim <= MAX_DIM);
        debug_assert_eq!(degen.count_ones() as usize + cell.dim, dim);
        debug_assert!(dim == 0 || degen < (1u32 << dim));
        Self { dim, degen, cell }
    }

    pub fn is_degenerate(&self) -> bool {
        self.degen != 0
    }

    pub fn word(&self) -> DegeneracyWord {
        DegeneracyWord::from_mask(self.degen)
    }

    /// `s_J cell` where `J` is every position, i.e. the fully degenerate
    /// `dim`-simplex on a vertex.
    pub fn on_vertex(vertex: usize, dim: usize) -> Self {
        Self::new(dim, full_mask(dim), CellId::new(0, vertex))
    }

    /// Applies a further degeneracy operator given by `outer` (a mask on
    /// `new_dim` positions whose surjection lands in `[self.dim]`).
    pub fn degenerate_by(&self, outer: u32, new_dim: usize) -> Self {
        let degen = compose_masks(self.degen, self.dim, outer, new_dim);
        Self::new(new_dim, degen, self.cell)
    }

    /// `s_j` applied to this simplex.
    pub fn degeneracy(&self, j: usize) -> Self {
        assert!(j <= self.dim, "s_{j} undefined on a {}-simplex", self.dim);
        self.degenerate_by(1 << j, self.dim + 1)
    }
}

pub(crate) const fn full_mask(dim: usize) -> u32 {
    if dim == 0 {
        0
    } else {
        (1u32 << dim) - 1
    }
}

/// Removes bit `pos` from `mask`, shifting higher bits down by one.
pub(crate) fn delete_bit(mask: u32, pos: usize) -> u32 {
    let low = mask & ((1u32 << pos) - 1);
    let high = (mask >> (pos + 1)) << pos;
    low | high
}

#[cfg(test)]
/// Values of the monotone surjection `[dim] -> [dim - |mask|]` encoded by `mask`.
pub(crate) fn surjection(mask: u32, dim: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(dim + 1);
    let mut v = 0;
    out.push(0);
    for j in 0..dim {
        if mask & (1 << j) == 0 {
            v += 1;
        }
        out.push(v);
    }
    out
}

/// Mask of the composite surjection `first ∘ second`, where `second: [dim2] ->
/// [dim1]` has mask `second_mask` and `first: [dim1] -> ...` has mask
/// `first_mask`.
pub(crate) fn compose_masks(first_mask: u32, dim1: usize, second_mask: u32, dim2: usize) -> u32 {
    debug_assert_eq!(dim2 - second_mask.count_ones() as usize, dim1);
    let mut out = 0u32;
    let mut image = 0usize;
    for j in 0..dim2 {
        if second_mask & (1 << j) != 0 {
            out |= 1 << j;
        } else {
            if first_mask & (1 << image) != 0 {
                out |= 1 << j;
            }
            image += 1;
        }
    }
    out
}

/// Removes the positions in `common` from `mask` (both on `dim` positions),
/// given `common ⊆ mask`. The result is the mask of the surjection through
/// which `mask` factors after collapsing `common`.
pub(crate) fn strip_common(mask: u32, common: u32, dim: usize) -> u32 {
    debug_assert_eq!(mask & common, common);
    let mut out = 0u32;
    let mut k = 0;
    for j in 0..dim {
        if common & (1 << j) != 0 {
            continue;
        }
        if mask & (1 << j) != 0 {
            out |= 1 << k;
        }
        k += 1;
    }
    out
}

/// Iterates over all `dim`-bit masks with exactly `ones` bits set, ascending.
pub(crate) fn masks_with_popcount(dim: usize, ones: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << dim;
    let mut next: Option<u64> = if ones > dim {
        None
    } else {
        Some((1u64 << ones) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur as u32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_mask_round_trip() {
        let w = DegeneracyWord::new(vec![4, 2, 0]).unwrap();
        assert_eq!(w.to_mask(), 0b10101);
        assert_eq!(DegeneracyWord::from_mask(0b10101), w);
        assert!(DegeneracyWord::new(vec![1, 1]).is_err());
        assert!(DegeneracyWord::new(vec![0, 2]).is_err());
    }

    #[test]
    fn surjection_values() {
        assert_eq!(surjection(0b010, 3), vec![0, 1, 1, 2]);
        assert_eq!(surjection(0b11, 2), vec![0, 0, 0]);
    }

    #[test]
    fn composition_matches_arrays() {
        // brute force over small surjections
        for dim2 in 0..6 {
            for second in 0..(1u32 << dim2) {
                let dim1 = dim2 - second.count_ones() as usize;
                for first in 0..(1u32 << dim1) {
                    let s2 = surjection(second, dim2);
                    let s1 = surjection(first, dim1);
                    let comp: Vec<usize> = s2.iter().map(|&v| s1[v]).collect();
                    let mut expect = 0u32;
                    for j in 0..dim2 {
                        if comp[j] == comp[j + 1] {
                            expect |= 1 << j;
                        }
                    }
                    assert_eq!(compose_masks(first, dim1, second, dim2), expect);
                }
            }
        }
    }

    #[test]
    fn popcount_enumeration() {
        let all: Vec<u32> = masks_with_popcount(4, 2).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_with_popcount(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_with_popcount(0, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_with_popcount(2, 3).count(), 0);
        assert_eq!(masks_with_popcount(5, 5).collect::<Vec<_>>(), vec![0b11111]);
    }

    #[test]
    fn delete_and_strip() {
        assert_eq!(delete_bit(0b1011, 1), 0b101);
        assert_eq!(strip_common(0b1011, 0b0010, 4), 0b101);
    }
}
