use std::sync::Arc;

use super::*;
use crate::sset::{sphere, CellId, PointedSimplicialSet, SSetBuilder, Simplex, SimplicialMap};

fn binomial(n: usize, k: usize) -> usize {
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[test]
fn block_embed_is_a_homomorphism() {
    assert!(Permutation::block_embed(&Permutation::identity(2), &Permutation::identity(3)).is_identity());
    let t = Permutation::transposition(2, 0);
    assert_eq!(
        Permutation::block_embed(&t, &Permutation::identity(1)),
        Permutation::transposition(3, 0)
    );
    for p in 0..=3 {
        for q in 0..=3 {
            let sp = Permutation::all(p);
            let sq = Permutation::all(q);
            for b1 in &sp {
                for b2 in &sp {
                    for g1 in &sq {
                        for g2 in &sq {
                            let lhs = Permutation::block_embed(&b1.compose(b2), &g1.compose(g2));
                            let rhs = Permutation::block_embed(b1, g1)
                                .compose(&Permutation::block_embed(b2, g2));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn rho_examples() {
    assert!(Permutation::shuffle_rho(0, 3).is_identity());
    assert_eq!(Permutation::shuffle_rho(1, 1), Permutation::transposition(2, 0));
    assert_eq!(Permutation::shuffle_rho(2, 1).to_one_based(), vec![2, 3, 1]);
}

#[test]
fn reduced_words_act_correctly() {
    for n in 0..=5 {
        for a in Permutation::all(n) {
            let rebuilt = a.reduced_word().into_iter().fold(Permutation::identity(n), |acc, j| {
                Permutation::transposition(n, j).compose(&acc)
            });
            assert_eq!(rebuilt, a);
        }
    }
}

#[test]
fn shuffle_factorization_is_exact() {
    for n in 0..=4 {
        for p in 0..=n {
            let blocks = [p, n - p];
            let shuffles = Shuffle::all(&blocks);
            assert_eq!(shuffles.len(), binomial(n, p));
            for a in Permutation::all(n) {
                for mu in &shuffles {
                    let m = mu.to_permutation(&blocks);
                    let am = a.compose(&m);
                    let (nu, beta) = Shuffle::factor(&am, &blocks);
                    assert!(beta.preserves_blocks(&blocks));
                    assert_eq!(nu.to_permutation(&blocks).compose(&beta), am);
                    let (b1, b2) = (beta.block_part(0, p), beta.block_part(p, n - p));
                    assert_eq!(Permutation::block_embed(&b1, &b2), beta);
                }
            }
        }
    }
}

#[test]
fn sphere_actions_satisfy_coxeter() {
    for n in 0..=4 {
        sphere_action(n).check().unwrap();
    }
    assert!(sphere_action(1).generators().is_empty());
}

#[test]
fn sphere_two_swap() {
    let s2 = sphere_action(2);
    let g = s2.generator(0);
    let tops: Vec<CellId> = s2.space().cells(2).collect();
    assert_eq!(g.image_of(tops[0]), Simplex::nondegenerate(tops[1]));
    assert_eq!(g.image_of(tops[1]), Simplex::nondegenerate(tops[0]));
    let diag = CellId::new(1, 0);
    assert_eq!(g.image_of(diag), Simplex::nondegenerate(diag));
}

#[test]
fn balanced_smash_counts() {
    for n in 0..=5 {
        for p in 0..=n {
            let a = EquivariantSpace::trivial(sphere(1), n);
            let ind = balanced_smash(n, p, n - p, &a).unwrap();
            assert_eq!(ind.cosets().len(), binomial(n, p));
            assert_eq!(ind.space().space().count(1), binomial(n, p));
            ind.space().check().unwrap();
        }
    }
    assert!(balanced_smash(3, 1, 1, &EquivariantSpace::point(3)).is_err());
    let pt = balanced_smash(3, 1, 2, &EquivariantSpace::point(3)).unwrap();
    assert!(pt.space().space().is_point());
}

#[test]
fn balanced_smash_full_subgroup_is_identity() {
    let a = sphere_action(3);
    let ind = balanced_smash(3, 3, 0, &a).unwrap();
    assert_eq!(ind.cosets().len(), 1);
    assert_eq!(ind.space().space().counts(), a.space().counts());
    for j in 0..2 {
        assert_eq!(ind.space().generator(j).images(), a.generator(j).images());
    }
}

#[test]
fn balanced_smash_two_circles() {
    let (_, a) = smash_equivariant(&[sphere_action(1), sphere_action(1)]);
    let ind = balanced_smash(2, 1, 1, &a).unwrap();
    ind.space().check().unwrap();
    assert_eq!(ind.space().space().count(2), 4);
    // the transposition exchanges the two summands
    let g = ind.space().generator(0);
    for c in ind.space().space().cells(2) {
        let (mu, _) = ind.decompose(&Simplex::nondegenerate(c)).unwrap();
        let (nu, _) = ind.decompose(&g.image_of(c)).unwrap();
        assert_ne!(mu, nu);
    }
}

#[test]
fn equivariance_examples() {
    let s2 = sphere_action(2);
    let id = SimplicialMap::identity(s2.space().clone());
    assert!(is_equivariant(&id, &s2, &s2).unwrap());
    let swap = s2.generator(0).clone();
    let trivial = EquivariantSpace::trivial(s2.space().clone(), 2);
    assert!(is_equivariant(&swap, &trivial, &trivial).unwrap());
    assert!(!is_equivariant(&swap, &s2, &trivial).unwrap());
    assert!(is_equivariant(&id, &s2, &EquivariantSpace::trivial(s2.space().clone(), 3)).is_err());
}

fn two_points_swapped() -> EquivariantSpace {
    let mut b = SSetBuilder::new();
    let base = b.add_vertex();
    b.add_vertex();
    b.add_vertex();
    let space = Arc::new(b.build(base));
    let swap = SimplicialMap::from_fn(space.clone(), space.clone(), |c| {
        Simplex::nondegenerate(CellId::new(0, [0, 2, 1][c.index]))
    });
    EquivariantSpace::new(space, 2, vec![swap]).unwrap()
}

#[test]
fn free_action_examples() {
    let reg = two_points_swapped();
    let inc = SimplicialMap::constant(Arc::new(PointedSimplicialSet::point()), reg.space().clone());
    assert!(acts_freely_off_image(&inc, &reg).unwrap());
    let id = SimplicialMap::identity(reg.space().clone());
    assert!(acts_freely_off_image(&id, &reg).unwrap());
    let triv = EquivariantSpace::trivial(sphere(0), 2);
    let inc = SimplicialMap::constant(Arc::new(PointedSimplicialSet::point()), triv.space().clone());
    assert!(!acts_freely_off_image(&inc, &triv).unwrap());
}

#[test]
fn induced_generators_match_element() {
    let (_, a) = smash_equivariant(&[sphere_action(2), sphere_action(1)]);
    let ind = Induced::new(Arc::new(a));
    let sp = ind.space();
    for alpha in Permutation::all(3) {
        for c in ind.base().space().all_cells() {
            let z = Simplex::nondegenerate(c);
            let direct = ind.element(&alpha, &z);
            let via = sp.act(&alpha, &ind.element(&Permutation::identity(3), &z));
            assert_eq!(direct, via);
        }
    }
}
