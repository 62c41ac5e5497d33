use std::sync::Arc;

use super::{CellId, PointedSimplicialSet, SSetBuilder, Simplex, SimplicialMap};

/// `A_1 ∨ ... ∨ A_m` with basepoints identified, remembering where each
/// simplex came from.
#[derive(Clone, Debug)]
pub struct Wedge {
    parts: Vec<Arc<PointedSimplicialSet>>,
    space: Arc<PointedSimplicialSet>,
    origin: Vec<Vec<Option<(usize, CellId)>>>,
    // part -> dim -> index -> wedge index
    placement: Vec<Vec<Vec<usize>>>,
}

impl Wedge {
    pub fn new(parts: Vec<Arc<PointedSimplicialSet>>) -> Self {
        let mut builder = SSetBuilder::new();
        let base = builder.add_vertex();
        let max_dim = parts.iter().map(|p| p.dim()).max().unwrap_or(0);
        let mut origin: Vec<Vec<Option<(usize, CellId)>>> = vec![vec![None]];
        let mut placement: Vec<Vec<Vec<usize>>> = parts
            .iter()
            .map(|p| p.counts().iter().map(|&c| vec![usize::MAX; c]).collect())
            .collect();
        for (pi, p) in parts.iter().enumerate() {
            placement[pi][0][p.basepoint().index] = base.index;
        }
        for k in 0..=max_dim {
            if origin.len() <= k {
                origin.push(Vec::new());
            }
            for (pi, p) in parts.iter().enumerate() {
                for cell in p.cells(k) {
                    if cell == p.basepoint() {
                        continue;
                    }
                    let id = if k == 0 {
                        builder.add_vertex()
                    } else {
                        let faces = p
                            .cell_faces(cell)
                            .iter()
                            .map(|f| translate(&placement[pi], p, f))
                            .collect();
                        builder.add_cell(faces)
                    };
                    placement[pi][k][cell.index] = id.index;
                    origin[k].push(Some((pi, cell)));
                }
            }
        }
        let space = Arc::new(builder.build(base));
        Self {
            parts,
            space,
            origin,
            placement,
        }
    }

    pub fn space(&self) -> &Arc<PointedSimplicialSet> {
        &self.space
    }

    pub fn parts(&self) -> &[Arc<PointedSimplicialSet>] {
        &self.parts
    }

    /// The copy of a simplex of part `part` inside the wedge.
    pub fn include(&self, part: usize, s: &Simplex) -> Simplex {
        translate(&self.placement[part], &self.parts[part], s)
    }

    /// Which part a simplex lives in; `None` for the basepoint.
    pub fn split(&self, s: &Simplex) -> Option<(usize, Simplex)> {
        self.origin[s.cell.dim][s.cell.index].map(|(p, c)| (p, Simplex::new(s.dim, s.degen, c)))
    }

    pub fn inclusion(&self, part: usize) -> SimplicialMap {
        SimplicialMap::from_fn(self.parts[part].clone(), self.space.clone(), |c| {
            self.include(part, &Simplex::nondegenerate(c))
        })
    }

    /// The map out of the wedge that restricts to `maps[i]` on part `i`.
    pub fn copair(&self, target: Arc<PointedSimplicialSet>, maps: &[&SimplicialMap]) -> SimplicialMap {
        assert_eq!(maps.len(), self.parts.len());
        let t = target.clone();
        SimplicialMap::from_fn(self.space.clone(), target, |c| {
            match self.split(&Simplex::nondegenerate(c)) {
                None => t.base_simplex(c.dim),
                Some((p, s)) => maps[p].apply(&s),
            }
        })
    }
}

fn translate(placement: &[Vec<usize>], part: &PointedSimplicialSet, s: &Simplex) -> Simplex {
    if part.is_base(s) {
        return Simplex::on_vertex(0, s.dim);
    }
    let idx = placement[s.cell.dim][s.cell.index];
    Simplex::new(s.dim, s.degen, CellId::new(s.cell.dim, idx))
}
