use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::equivariant::is_equivariant;
use crate::error::{Error, Result};
use crate::spectra::{SpectrumMap, SymmetricSpectrum};
use crate::sset::{search_maps, Budget, CellId, PointedSimplicialSet, Simplex, SimplicialMap};

/// Maps that the lifting search can enumerate: simplicial maps (one level)
/// and maps of spectra (levels `0..=bound`).
pub trait Arrow: Clone + PartialEq + Sized {
    type Object;

    fn source(&self) -> &Arc<Self::Object>;
    fn target(&self) -> &Arc<Self::Object>;
    /// `next ∘ self`
    fn compose(&self, next: &Self) -> Self;
    fn levels(&self) -> usize;
    fn at(&self, n: usize) -> &SimplicialMap;

    /// Visits every map `a → x` whose level-`n` image of each cell passes
    /// `allow`, in a fixed order. Returns `true` if `visit` stopped.
    fn search(
        a: &Arc<Self::Object>,
        x: &Arc<Self::Object>,
        allow: &dyn Fn(usize, CellId, &Simplex) -> bool,
        budget: &mut Budget,
        visit: &mut dyn FnMut(Self) -> ControlFlow<()>,
    ) -> Result<bool>;
}

impl Arrow for SimplicialMap {
    type Object = PointedSimplicialSet;

    fn source(&self) -> &Arc<PointedSimplicialSet> {
        SimplicialMap::source(self)
    }

    fn target(&self) -> &Arc<PointedSimplicialSet> {
        SimplicialMap::target(self)
    }

    fn compose(&self, next: &Self) -> Self {
        self.then(next)
    }

    fn levels(&self) -> usize {
        1
    }

    fn at(&self, _: usize) -> &SimplicialMap {
        self
    }

    fn search(
        a: &Arc<PointedSimplicialSet>,
        x: &Arc<PointedSimplicialSet>,
        allow: &dyn Fn(usize, CellId, &Simplex) -> bool,
        budget: &mut Budget,
        visit: &mut dyn FnMut(Self) -> ControlFlow<()>,
    ) -> Result<bool> {
        search_maps(a, x, &|c, s| allow(0, c, s), budget, visit)
    }
}

impl Arrow for SpectrumMap {
    type Object = SymmetricSpectrum;

    fn source(&self) -> &Arc<SymmetricSpectrum> {
        SpectrumMap::source(self)
    }

    fn target(&self) -> &Arc<SymmetricSpectrum> {
        SpectrumMap::target(self)
    }

    fn compose(&self, next: &Self) -> Self {
        self.then(next)
    }

    fn levels(&self) -> usize {
        self.components().len()
    }

    fn at(&self, n: usize) -> &SimplicialMap {
        self.component(n)
    }

    fn search(
        a: &Arc<SymmetricSpectrum>,
        x: &Arc<SymmetricSpectrum>,
        allow: &dyn Fn(usize, CellId, &Simplex) -> bool,
        budget: &mut Budget,
        visit: &mut dyn FnMut(Self) -> ControlFlow<()>,
    ) -> Result<bool> {
        if a.bound() != x.bound() {
            return Err(Error::BoundMismatch(a.bound(), x.bound()));
        }
        search_levels(a, x, allow, budget, visit, &mut Vec::new())
    }
}

/// Level by level: candidates at level `n` are equivariant and commute with
/// `σ` against the already chosen level `n - 1`.
fn search_levels(
    a: &Arc<SymmetricSpectrum>,
    x: &Arc<SymmetricSpectrum>,
    allow: &dyn Fn(usize, CellId, &Simplex) -> bool,
    budget: &mut Budget,
    visit: &mut dyn FnMut(SpectrumMap) -> ControlFlow<()>,
    prefix: &mut Vec<SimplicialMap>,
) -> Result<bool> {
    let n = prefix.len();
    if n > a.bound() {
        let map = SpectrumMap::new(a.clone(), x.clone(), prefix.clone())?;
        return Ok(visit(map).is_break());
    }
    let mut candidates = Vec::new();
    search_maps(a.space(n), x.space(n), &|c, s| allow(n, c, s), budget, &mut |h| {
        let equi = is_equivariant(&h, a.level(n), x.level(n)).unwrap_or(false);
        if equi && (n == 0 || commutes_with_sigma(a, x, n, &prefix[n - 1], &h)) {
            candidates.push(h);
        }
        ControlFlow::Continue(())
    })?;
    for h in candidates {
        prefix.push(h);
        let stop = search_levels(a, x, allow, budget, visit, prefix)?;
        prefix.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

fn commutes_with_sigma(
    a: &SymmetricSpectrum,
    x: &SymmetricSpectrum,
    n: usize,
    prev: &SimplicialMap,
    h: &SimplicialMap,
) -> bool {
    let susp = a.suspension(n - 1);
    susp.space().all_cells().all(|c| {
        let Some((t, y)) = susp.split2(&Simplex::nondegenerate(c)) else {
            return true;
        };
        h.apply(&a.sigma(n - 1).image_of(c)) == x.sigma_apply(n - 1, &t, &prev.apply(&y))
    })
}

/// A square from `i: A → B` to `p: X → Y` with `top: A → X`,
/// `bottom: B → Y` and `p ∘ top = bottom ∘ i`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftingProblem<M> {
    pub i: M,
    pub p: M,
    pub top: M,
    pub bottom: M,
}

impl<M: Arrow> LiftingProblem<M> {
    pub fn commutes(&self) -> bool {
        self.top.compose(&self.p) == self.i.compose(&self.bottom)
    }

    /// A diagonal `h: B → X` with `h ∘ i = top` and `p ∘ h = bottom`.
    pub fn solve(&self, budget: &mut Budget) -> Result<Option<M>> {
        // required values of the lift on cells hit by `i` nondegenerately
        let forced: Vec<HashMap<CellId, Simplex>> = (0..self.i.levels())
            .map(|n| {
                let (i, top) = (self.i.at(n), self.top.at(n));
                i.source()
                    .all_cells()
                    .filter_map(|c| {
                        let img = i.image_of(c);
                        (!img.is_degenerate()).then(|| (img.cell, top.image_of(c)))
                    })
                    .collect()
            })
            .collect();
        let allow = |n: usize, c: CellId, s: &Simplex| {
            self.p.at(n).apply(s) == self.bottom.at(n).image_of(c) && forced[n].get(&c).is_none_or(|f| f == s)
        };
        let mut found = None;
        M::search(self.i.target(), self.p.source(), &allow, budget, &mut |h| {
            if self.i.compose(&h) == self.top {
                found = Some(h);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        Ok(found)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LiftingVerdict<M> {
    /// Every one of `squares` commutative squares has a lift.
    Lifts { squares: usize },
    /// The first square, in search order, without a lift.
    Fails(Box<LiftingProblem<M>>),
    BudgetExceeded { limit: u64 },
}

/// Decides whether `i` has the left lifting property against `p` by
/// enumerating every commutative square (tops first, then bottoms) and
/// searching for a diagonal, spending at most `limit` candidate images.
pub fn has_lifting_property<M: Arrow>(i: &M, p: &M, limit: u64) -> Result<LiftingVerdict<M>> {
    let mut budget = Budget::new(limit);
    match decide(i, p, &mut budget) {
        Err(Error::BudgetExceeded(limit)) => Ok(LiftingVerdict::BudgetExceeded { limit }),
        other => other,
    }
}

fn decide<M: Arrow>(i: &M, p: &M, budget: &mut Budget) -> Result<LiftingVerdict<M>> {
    let mut tops = Vec::new();
    M::search(i.source(), p.source(), &|_, _, _| true, budget, &mut |u| {
        tops.push(u);
        ControlFlow::Continue(())
    })?;
    let mut squares = 0;
    for top in tops {
        let forced: Vec<HashMap<CellId, Simplex>> = (0..i.levels())
            .map(|n| {
                let (im, pu) = (i.at(n), top.at(n).then(p.at(n)));
                im.source()
                    .all_cells()
                    .filter_map(|c| {
                        let img = im.image_of(c);
                        (!img.is_degenerate()).then(|| (img.cell, pu.image_of(c)))
                    })
                    .collect()
            })
            .collect();
        let target = top.compose(p);
        let mut bottoms = Vec::new();
        M::search(
            i.target(),
            p.target(),
            &|n, c, s| forced[n].get(&c).is_none_or(|f| f == s),
            budget,
            &mut |v| {
                if i.compose(&v) == target {
                    bottoms.push(v);
                }
                ControlFlow::Continue(())
            },
        )?;
        for bottom in bottoms {
            squares += 1;
            let problem = LiftingProblem {
                i: i.clone(),
                p: p.clone(),
                top: top.clone(),
                bottom,
            };
            if problem.solve(budget)?.is_none() {
                return Ok(LiftingVerdict::Fails(Box::new(problem)));
            }
        }
    }
    Ok(LiftingVerdict::Lifts { squares })
}
