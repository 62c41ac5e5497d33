//! Finite pointed simplicial sets stored by their nondegenerate simplices.
//!
//! A [`PointedSimplicialSet`] keeps, for every nondegenerate `k`-simplex with
//! `k >= 1`, its `k + 1` faces as canonical [`Simplex`] values. Everything else
//! (faces of degenerate simplices, iterated faces) is derived through the
//! simplicial identities.

mod constructions;
mod map;
mod maps_enum;
mod quotient;
mod simplex;
mod smash;
mod standard;
mod wedge;

use std::fmt;

pub use constructions::{product, pushout, quotient_by_subobject, smash, wedge, Pushout};
pub use map::SimplicialMap;
pub use maps_enum::{all_maps, all_maps_bounded, search_maps, Budget, DEFAULT_BUDGET};
pub use quotient::Quotient;
pub use simplex::{CellId, DegeneracyWord, Simplex, MAX_DIM};
pub use smash::Smash;
pub use standard::{
    boundary_inclusion, circle, collapse_to_vertex, horn_inclusion, sphere, sphere_smash, standard_space,
    StandardSpace,
};
pub use wedge::Wedge;

pub(crate) use simplex::{full_mask, masks_with_popcount};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct PointedSimplicialSet {
    counts: Vec<usize>,
    faces: Vec<Vec<Vec<Simplex>>>,
    basepoint: usize,
}

impl fmt::Debug for PointedSimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointedSimplicialSet{:?}", self.counts)
    }
}

impl PointedSimplicialSet {
    /// The one-point object.
    pub fn point() -> Self {
        Self {
            counts: vec![1],
            faces: vec![vec![Vec::new()]],
            basepoint: 0,
        }
    }

    /// Assembles an object from raw face data and checks every invariant.
    pub fn from_faces(faces: Vec<Vec<Vec<Simplex>>>, basepoint: usize) -> Result<Self> {
        let counts: Vec<usize> = faces.iter().map(Vec::len).collect();
        let out = Self {
            counts,
            faces,
            basepoint,
        };
        out.validate()?;
        Ok(out)
    }

    /// Highest dimension containing a nondegenerate simplex.
    pub fn dim(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.counts.get(dim).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn num_cells(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn cells(&self, dim: usize) -> impl Iterator<Item = CellId> {
        (0..self.count(dim)).map(move |i| CellId::new(dim, i))
    }

    /// All nondegenerate simplices, ordered by dimension then index.
    pub fn all_cells(&self) -> impl Iterator<Item = CellId> + '_ {
        (0..self.counts.len()).flat_map(move |d| self.cells(d))
    }

    pub fn basepoint(&self) -> CellId {
        CellId::new(0, self.basepoint)
    }

    /// The basepoint degenerated up to dimension `dim`.
    pub fn base_simplex(&self, dim: usize) -> Simplex {
        Simplex::on_vertex(self.basepoint, dim)
    }

    pub fn is_base(&self, s: &Simplex) -> bool {
        s.cell == self.basepoint()
    }

    /// True iff the only nondegenerate simplex is the basepoint.
    pub fn is_point(&self) -> bool {
        self.num_cells() == 1
    }

    pub fn cell_faces(&self, cell: CellId) -> &[Simplex] {
        &self.faces[cell.dim][cell.index]
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        s.cell.index < self.count(s.cell.dim)
    }

    /// The face `d_i s`, in canonical form.
    pub fn face(&self, s: &Simplex, i: usize) -> Simplex {
        let m = s.dim;
        assert!(m >= 1 && i <= m, "d_{i} undefined on a {m}-simplex");
        let mask = s.degen;
        let at = i < m && mask & (1 << i) != 0;
        let below = i > 0 && mask & (1 << (i - 1)) != 0;
        if at {
            return Simplex::new(m - 1, simplex::delete_bit(mask, i), s.cell);
        }
        if below {
            return Simplex::new(m - 1, simplex::delete_bit(mask, i - 1), s.cell);
        }
        // d_i kills a vertex of the nondegenerate part
        let v = i - (mask & ((1u32 << i) - 1)).count_ones() as usize;
        let inner = simplex::delete_bit(mask, i.min(m - 1));
        let z = self.faces[s.cell.dim][s.cell.index][v];
        z.degenerate_by(inner, m - 1)
    }

    /// All faces `d_0 s, ..., d_m s`.
    pub fn faces_of(&self, s: &Simplex) -> Vec<Simplex> {
        (0..=s.dim).map(|i| self.face(s, i)).collect()
    }

    /// Every `dim`-simplex, degenerate ones included, in a fixed order.
    pub fn simplices(&self, dim: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for cdim in 0..=dim.min(self.counts.len().saturating_sub(1)) {
            for mask in masks_with_popcount(dim, dim - cdim) {
                for cell in self.cells(cdim) {
                    out.push(Simplex::new(dim, mask, cell));
                }
            }
        }
        out
    }

    /// The `j`-th vertex of a simplex.
    pub fn vertex(&self, s: &Simplex, j: usize) -> CellId {
        let mut cur = *s;
        // drop the vertices after j, then those before it
        for _ in j + 1..=s.dim {
            cur = self.face(&cur, cur.dim);
        }
        for _ in 0..j {
            cur = self.face(&cur, 0);
        }
        cur.cell
    }

    /// Checks face-data consistency and the simplicial identities
    /// `d_i d_j = d_{j-1} d_i` for `i < j` on every nondegenerate simplex.
    pub fn validate(&self) -> Result<()> {
        if self.count(0) == 0 || self.basepoint >= self.count(0) {
            return Err(Error::InvalidInput("basepoint is not a vertex".into()));
        }
        if self.faces.first().is_some_and(|v| v.iter().any(|f| !f.is_empty())) {
            return Err(Error::InvalidInput("vertices have no faces".into()));
        }
        for (k, cells) in self.faces.iter().enumerate().skip(1) {
            for (idx, fs) in cells.iter().enumerate() {
                if fs.len() != k + 1 {
                    return Err(Error::InvalidInput(format!(
                        "cell {k}.{idx} has {} faces, expected {}",
                        fs.len(),
                        k + 1
                    )));
                }
                for f in fs {
                    if f.dim != k - 1
                        || f.degen.count_ones() as usize + f.cell.dim != k - 1
                        || (f.dim > 0 && f.degen >= (1u32 << f.dim))
                        || !self.contains(f)
                    {
                        return Err(Error::InvalidInput(format!(
                            "cell {k}.{idx} has an inconsistent face entry {f:?}"
                        )));
                    }
                }
            }
        }
        for (k, cells) in self.faces.iter().enumerate().skip(2) {
            for idx in 0..cells.len() {
                let s = Simplex::nondegenerate(CellId::new(k, idx));
                for j in 1..=k {
                    let dj = self.face(&s, j);
                    for i in 0..j {
                        let lhs = self.face(&dj, i);
                        let rhs = self.face(&self.face(&s, i), j - 1);
                        if lhs != rhs {
                            return Err(Error::SimplicialIdentity(format!(
                                "d_{i} d_{j} != d_{} d_{i} on cell {k}.{idx}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Incremental constructor; cells must be added after their faces.
#[derive(Default, Debug, Clone)]
pub struct SSetBuilder {
    faces: Vec<Vec<Vec<Simplex>>>,
}

impl SSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self) -> CellId {
        self.push(0, Vec::new())
    }

    /// Adds a cell with faces `d_0, ..., d_k`; its dimension is `faces.len() - 1`.
    pub fn add_cell(&mut self, faces: Vec<Simplex>) -> CellId {
        assert!(!faces.is_empty(), "use add_vertex for 0-cells");
        let k = faces.len() - 1;
        debug_assert!(faces.iter().all(|f| f.dim + 1 == k.max(1)));
        self.push(k, faces)
    }

    fn push(&mut self, dim: usize, faces: Vec<Simplex>) -> CellId {
        if self.faces.len() <= dim {
            self.faces.resize_with(dim + 1, Vec::new);
        }
        self.faces[dim].push(faces);
        CellId::new(dim, self.faces[dim].len() - 1)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.faces.get(dim).map_or(0, Vec::len)
    }

    /// Finishes construction without re-checking the simplicial identities.
    pub fn build(mut self, basepoint: CellId) -> PointedSimplicialSet {
        assert_eq!(basepoint.dim, 0);
        while self.faces.len() > 1 && self.faces.last().is_some_and(Vec::is_empty) {
            self.faces.pop();
        }
        if self.faces.is_empty() {
            self.faces.push(Vec::new());
        }
        let counts = self.faces.iter().map(Vec::len).collect();
        PointedSimplicialSet {
            counts,
            faces: self.faces,
            basepoint: basepoint.index,
        }
    }
}

#[cfg(test)]
mod tests;
