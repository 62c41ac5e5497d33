use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{CellId, PointedSimplicialSet, SSetBuilder, Simplex, SimplicialMap, Smash};
use crate::error::{Error, Result};

/// The named small objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardSpace {
    DeltaPlus(usize),
    BoundaryPlus(usize),
    HornPlus(usize, usize),
    Sphere(usize),
    ZeroSphere,
    IntervalPlus,
}

pub fn standard_space(kind: StandardSpace) -> Result<Arc<PointedSimplicialSet>> {
    Ok(match kind {
        StandardSpace::DeltaPlus(n) => simplex_plus(n, |_| true).0,
        StandardSpace::BoundaryPlus(n) => simplex_plus(n, |s| s.len() <= n).0,
        StandardSpace::HornPlus(n, i) => {
            check_horn(n, i)?;
            simplex_plus(n, horn_filter(n, i)).0
        }
        StandardSpace::Sphere(n) => sphere(n),
        StandardSpace::ZeroSphere => sphere(0),
        StandardSpace::IntervalPlus => simplex_plus(1, |_| true).0,
    })
}

/// The simplicial circle `Δ[1]/∂Δ[1]`: one vertex and one edge. Every call
/// returns the same shared object.
pub fn circle() -> Arc<PointedSimplicialSet> {
    static CIRCLE: OnceLock<Arc<PointedSimplicialSet>> = OnceLock::new();
    CIRCLE
        .get_or_init(|| {
            let mut b = SSetBuilder::new();
            let v = b.add_vertex();
            b.add_cell(vec![Simplex::nondegenerate(v), Simplex::nondegenerate(v)]);
            Arc::new(b.build(v))
        })
        .clone()
}

/// `S^n` as the `n`-fold smash of `S¹`, with its factor decomposition.
/// Shared per `n`.
pub fn sphere_smash(n: usize) -> Arc<Smash> {
    static CACHE: OnceLock<Mutex<Vec<Option<Arc<Smash>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    if let Some(Some(s)) = cache.lock().unwrap().get(n) {
        return s.clone();
    }
    let built = Arc::new(Smash::smash(vec![circle(); n]));
    let mut guard = cache.lock().unwrap();
    if guard.len() <= n {
        guard.resize(n + 1, None);
    }
    guard[n].get_or_insert(built).clone()
}

pub fn sphere(n: usize) -> Arc<PointedSimplicialSet> {
    sphere_smash(n).space().clone()
}

/// `∂Δ[n]_+ → Δ[n]_+`.
pub fn boundary_inclusion(n: usize) -> SimplicialMap {
    sub_inclusion(n, |s| s.len() <= n)
}

/// `Λ^n_i[n]_+ → Δ[n]_+`.
pub fn horn_inclusion(n: usize, i: usize) -> Result<SimplicialMap> {
    check_horn(n, i)?;
    Ok(sub_inclusion(n, horn_filter(n, i)))
}

/// The collapse `Δ[n]_+ → Δ[0]_+` sending every simplex to the non-base vertex.
pub fn collapse_to_vertex(n: usize) -> SimplicialMap {
    let (src, _) = simplex_plus(n, |_| true);
    let (tgt, _) = simplex_plus(0, |_| true);
    let s2 = src.clone();
    SimplicialMap::from_fn(src, tgt, move |c| {
        if c == s2.basepoint() {
            Simplex::on_vertex(0, 0)
        } else {
            Simplex::on_vertex(1, c.dim)
        }
    })
}

fn check_horn(n: usize, i: usize) -> Result<()> {
    if n == 0 || i > n {
        return Err(Error::InvalidInput(format!("no horn Λ^{n}_{i}")));
    }
    Ok(())
}

fn horn_filter(n: usize, i: usize) -> impl Fn(&[usize]) -> bool {
    move |s: &[usize]| s.len() < n || (s.len() == n && s.contains(&i))
}

fn sub_inclusion(n: usize, keep: impl Fn(&[usize]) -> bool) -> SimplicialMap {
    let (sub, sub_cells) = simplex_plus(n, keep);
    let (full, full_cells) = simplex_plus(n, |_| true);
    let index: HashMap<&Vec<usize>, CellId> = full_cells.iter().map(|(s, c)| (s, *c)).collect();
    let lookup: HashMap<CellId, CellId> = sub_cells.iter().map(|(s, c)| (*c, index[s])).collect();
    SimplicialMap::from_fn(sub, full, |c| {
        if c.dim == 0 && c.index == 0 {
            Simplex::on_vertex(0, 0)
        } else {
            Simplex::nondegenerate(lookup[&c])
        }
    })
}

/// A subcomplex of `Δ[n]` given by a downward closed family of vertex sets,
/// with a disjoint basepoint (vertex 0). Also returns the vertex set of every
/// non-base cell.
fn simplex_plus(
    n: usize,
    keep: impl Fn(&[usize]) -> bool,
) -> (Arc<PointedSimplicialSet>, Vec<(Vec<usize>, CellId)>) {
    let mut b = SSetBuilder::new();
    let base = b.add_vertex();
    let mut cells: Vec<(Vec<usize>, CellId)> = Vec::new();
    let mut index: HashMap<Vec<usize>, CellId> = HashMap::new();
    for size in 1..=n + 1 {
        for subset in subsets(n + 1, size) {
            if !keep(&subset) {
                continue;
            }
            let id = if size == 1 {
                b.add_vertex()
            } else {
                let faces = (0..size)
                    .map(|i| {
                        let mut f = subset.clone();
                        f.remove(i);
                        Simplex::nondegenerate(index[&f])
                    })
                    .collect();
                b.add_cell(faces)
            };
            index.insert(subset.clone(), id);
            cells.push((subset, id));
        }
    }
    (Arc::new(b.build(base)), cells)
}

/// Sorted `size`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    go(0, n, size, &mut cur, &mut out);
    out
}
