use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use super::{CellId, PointedSimplicialSet, Simplex, SimplicialMap};
use crate::error::{Error, Result};

/// Default number of candidate assignments a search may try.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Counts candidate assignments against a limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

/// Every pointed simplicial map `a → x`, each exactly once.
pub fn all_maps(a: &Arc<PointedSimplicialSet>, x: &Arc<PointedSimplicialSet>) -> Vec<SimplicialMap> {
    all_maps_bounded(a, x, &mut Budget::new(u64::MAX)).expect("unbounded search")
}

pub fn all_maps_bounded(
    a: &Arc<PointedSimplicialSet>,
    x: &Arc<PointedSimplicialSet>,
    budget: &mut Budget,
) -> Result<Vec<SimplicialMap>> {
    let mut out = Vec::new();
    search_maps(a, x, &|_, _| true, budget, &mut |m| {
        out.push(m);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Depth-first search over maps `a → x` whose image of each cell satisfies
/// `allow`. Cells are assigned by dimension then index; candidates for a cell
/// are the simplices of `x` with the already-determined faces, in the order
/// of [`PointedSimplicialSet::simplices`]. Returns `true` if `visit` stopped
/// the search.
pub fn search_maps(
    a: &Arc<PointedSimplicialSet>,
    x: &Arc<PointedSimplicialSet>,
    allow: &dyn Fn(CellId, &Simplex) -> bool,
    budget: &mut Budget,
    visit: &mut dyn FnMut(SimplicialMap) -> ControlFlow<()>,
) -> Result<bool> {
    let index = FaceIndex::new(x, a.dim());
    let cells: Vec<CellId> = a.all_cells().collect();
    let mut images: Vec<Vec<Simplex>> = a
        .counts()
        .iter()
        .map(|&c| vec![Simplex::nondegenerate(CellId::new(0, 0)); c])
        .collect();
    let mut state = Search {
        a,
        x,
        allow,
        index: &index,
        cells: &cells,
        budget,
        visit,
    };
    state.go(0, &mut images)
}

struct FaceIndex {
    vertices: Vec<Simplex>,
    by_faces: Vec<HashMap<Vec<Simplex>, Vec<Simplex>>>,
}

impl FaceIndex {
    fn new(x: &PointedSimplicialSet, top: usize) -> Self {
        let vertices = x.simplices(0);
        let mut by_faces = vec![HashMap::new()];
        for k in 1..=top {
            let mut m: HashMap<Vec<Simplex>, Vec<Simplex>> = HashMap::new();
            for s in x.simplices(k) {
                m.entry(x.faces_of(&s)).or_default().push(s);
            }
            by_faces.push(m);
        }
        Self { vertices, by_faces }
    }
}

struct Search<'a> {
    a: &'a Arc<PointedSimplicialSet>,
    x: &'a Arc<PointedSimplicialSet>,
    allow: &'a dyn Fn(CellId, &Simplex) -> bool,
    index: &'a FaceIndex,
    cells: &'a [CellId],
    budget: &'a mut Budget,
    visit: &'a mut dyn FnMut(SimplicialMap) -> ControlFlow<()>,
}

impl Search<'_> {
    fn go(&mut self, pos: usize, images: &mut Vec<Vec<Simplex>>) -> Result<bool> {
        if pos == self.cells.len() {
            let map = SimplicialMap::from_fn(
                self.a.clone(),
                self.x.clone(),
                |c| images[c.dim][c.index],
            );
            return Ok((self.visit)(map).is_break());
        }
        let cell = self.cells[pos];
        let candidates: Vec<Simplex> = if cell.dim == 0 {
            if cell == self.a.basepoint() {
                vec![self.x.base_simplex(0)]
            } else {
                self.index.vertices.clone()
            }
        } else {
            let faces: Vec<Simplex> = self
                .a
                .cell_faces(cell)
                .iter()
                .map(|f| apply(images, f))
                .collect();
            match self.index.by_faces[cell.dim].get(&faces) {
                Some(v) => v.clone(),
                None => return Ok(false),
            }
        };
        for s in candidates {
            self.budget.spend()?;
            if !(self.allow)(cell, &s) {
                continue;
            }
            images[cell.dim][cell.index] = s;
            if self.go(pos + 1, images)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn apply(images: &[Vec<Simplex>], s: &Simplex) -> Simplex {
    let base = images[s.cell.dim][s.cell.index];
    if s.degen == 0 {
        base
    } else {
        base.degenerate_by(s.degen, s.dim)
    }
}
