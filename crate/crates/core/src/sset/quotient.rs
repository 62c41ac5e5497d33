use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use super::{CellId, PointedSimplicialSet, SSetBuilder, Simplex, SimplicialMap};
use crate::error::{Error, Result};

/// The quotient of a simplicial set by the simplicial equivalence relation
/// generated by a list of pairs of equal-dimension simplices.
///
/// The relation is closed under faces, then classes are resolved one
/// dimension at a time from the bottom. A class that contains a degenerate
/// simplex of the quotient becomes that degenerate simplex; every other class
/// becomes a new nondegenerate cell, numbered in order of its least member.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: Arc<PointedSimplicialSet>,
    space: Arc<PointedSimplicialSet>,
    map: SimplicialMap,
    reps: Vec<Vec<CellId>>,
}

impl Quotient {
    pub fn new(source: Arc<PointedSimplicialSet>, relations: &[(Simplex, Simplex)]) -> Result<Self> {
        let top = source.counts().len();
        let rel_top = relations.iter().map(|(a, _)| a.dim + 1).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<(Simplex, Simplex)>> = vec![Vec::new(); top.max(rel_top)];
        let mut seen: HashSet<(Simplex, Simplex)> = HashSet::new();
        for &(a, b) in relations {
            if a.dim != b.dim || !source.contains(&a) || !source.contains(&b) {
                return Err(Error::InvalidInput(format!(
                    "relation {a:?} ~ {b:?} is not between simplices of one dimension"
                )));
            }
            push_pair(&mut by_dim, &mut seen, a, b);
        }
        // close under faces, top down
        let mut k = by_dim.len();
        while k > 1 {
            k -= 1;
            let rels = by_dim[k].clone();
            for (a, b) in rels {
                for i in 0..=k {
                    push_pair(&mut by_dim, &mut seen, source.face(&a, i), source.face(&b, i));
                }
            }
        }
        drop(seen);

        let mut builder = SSetBuilder::new();
        let mut images: Vec<Vec<Simplex>> = Vec::with_capacity(top);
        let mut reps: Vec<Vec<CellId>> = Vec::with_capacity(top);
        let mut base = None;

        for k in 0..top {
            let n = source.count(k);
            let rels = by_dim.get(k).map(Vec::as_slice).unwrap_or(&[]);
            // degenerate simplices of the quotient that occur in relations
            let mut deg_nodes: HashMap<Simplex, usize> = HashMap::new();
            let mut deg_list: Vec<Simplex> = Vec::new();
            let mut node = |s: &Simplex, images: &Vec<Vec<Simplex>>| -> usize {
                if s.degen == 0 {
                    return s.cell.index;
                }
                let img = apply(images, s);
                *deg_nodes.entry(img).or_insert_with(|| {
                    deg_list.push(img);
                    n + deg_list.len() - 1
                })
            };
            let edges: Vec<(usize, usize)> = rels
                .iter()
                .map(|(a, b)| (node(a, &images), node(b, &images)))
                .collect();
            let mut uf = UnionFind::<usize>::new(n + deg_list.len());
            for (x, y) in edges {
                uf.union(x, y);
            }
            let mut resolved: HashMap<usize, Simplex> = HashMap::new();
            for (j, s) in deg_list.iter().enumerate() {
                let root = uf.find(n + j);
                if let Some(prev) = resolved.insert(root, *s) {
                    return Err(Error::InvalidInput(format!(
                        "relation identifies distinct degenerate simplices {prev:?} and {s:?}"
                    )));
                }
            }
            let mut row = Vec::with_capacity(n);
            let mut rep_row = Vec::new();
            for idx in 0..n {
                let cell = CellId::new(k, idx);
                let root = uf.find(idx);
                let img = match resolved.get(&root) {
                    Some(s) => *s,
                    None => {
                        let id = if k == 0 {
                            builder.add_vertex()
                        } else {
                            let faces = source
                                .cell_faces(cell)
                                .iter()
                                .map(|f| apply(&images, f))
                                .collect();
                            builder.add_cell(faces)
                        };
                        rep_row.push(cell);
                        let s = Simplex::nondegenerate(id);
                        resolved.insert(root, s);
                        s
                    }
                };
                if k == 0 && idx == source.basepoint().index {
                    base = Some(img.cell);
                }
                row.push(img);
            }
            images.push(row);
            reps.push(rep_row);
        }
        let space = Arc::new(builder.build(base.expect("source has a basepoint")));
        reps.truncate(space.counts().len());
        let map = SimplicialMap::from_fn(source.clone(), space.clone(), |c| images[c.dim][c.index]);
        Ok(Self {
            source,
            space,
            map,
            reps,
        })
    }

    pub fn source(&self) -> &Arc<PointedSimplicialSet> {
        &self.source
    }

    pub fn space(&self) -> &Arc<PointedSimplicialSet> {
        &self.space
    }

    /// The projection from the source.
    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    pub fn project(&self, s: &Simplex) -> Simplex {
        self.map.apply(s)
    }

    /// The least source cell projecting onto a quotient cell.
    pub fn representative(&self, cell: CellId) -> CellId {
        self.reps[cell.dim][cell.index]
    }

    /// The map out of the quotient through which `f` factors. `f` is assumed
    /// to respect the relation; use [`descend_checked`](Self::descend_checked)
    /// otherwise.
    pub fn descend(&self, f: &SimplicialMap) -> SimplicialMap {
        SimplicialMap::from_fn(self.space.clone(), f.target().clone(), |c| {
            f.image_of(self.representative(c))
        })
    }

    pub fn descend_checked(&self, f: &SimplicialMap) -> Result<SimplicialMap> {
        let g = self.descend(f);
        if self.map.then(&g).images() != f.images() {
            return Err(Error::NotSimplicial(
                "map does not respect the identifications".into(),
            ));
        }
        Ok(g)
    }
}

fn push_pair(
    by_dim: &mut [Vec<(Simplex, Simplex)>],
    seen: &mut HashSet<(Simplex, Simplex)>,
    a: Simplex,
    b: Simplex,
) {
    if a == b {
        return;
    }
    let key = if a < b { (a, b) } else { (b, a) };
    if seen.insert(key) {
        by_dim[a.dim].push(key);
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
