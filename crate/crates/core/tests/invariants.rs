mod common;

use std::sync::Arc;

use proptest::prelude::*;

use common::*;
use symspec::equivariant::Permutation;
use symspec::homotopy::{free_part_matrix, is_unimodular, normalized_chains, smith_normal_form, space_homology, suspension_chain_map, Homology};
use symspec::modelcheck::{has_lifting_property, LiftingVerdict};
use symspec::spectra::pushout_product_sset;
use symspec::sset::{circle, sphere, wedge, PointedSimplicialSet, Simplex, SimplicialMap, Smash, DEFAULT_BUDGET};
use symspec::symseq::{free_g, tensor, twist_iso, SymSeqMap};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn simplices(x: &PointedSimplicialSet, max: usize) -> Vec<Simplex> {
    (0..=max).flat_map(|d| x.simplices(d)).collect()
}

#[test]
fn twist_is_not_the_identity() {
    let g = Arc::new(free_g(1, &sphere(0), 2).unwrap());
    let gg = tensor(&g, &g).unwrap();
    let tau = twist_iso(&gg, &gg).unwrap();
    assert!(tau != SymSeqMap::identity(gg.sequence().clone()));
    assert!(tau.then(&tau) == SymSeqMap::identity(gg.sequence().clone()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simplicial_identities(seed in any::<u64>()) {
        let x = random_space(&mut rng(seed), 6);
        for s in simplices(&x, 2) {
            for j in 0..=s.dim {
                let t = s.degeneracy(j);
                for i in 0..=t.dim {
                    let lhs = x.face(&t, i);
                    let rhs = if i == j || i == j + 1 {
                        s
                    } else if i < j {
                        x.face(&s, i).degeneracy(j - 1)
                    } else {
                        x.face(&s, i - 1).degeneracy(j)
                    };
                    prop_assert_eq!(lhs, rhs);
                }
            }
            if s.dim >= 2 {
                for j in 1..=s.dim {
                    for i in 0..j {
                        prop_assert_eq!(x.face(&x.face(&s, j), i), x.face(&x.face(&s, i), j - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_homology(seed in any::<u64>()) {
        let x = random_space(&mut rng(seed), 6);
        let c = normalized_chains(&x);
        prop_assert!(squares_to_zero(&c));
        let chi: i64 = (0..=c.top()).map(|k| if k % 2 == 0 { c.rank(k) as i64 } else { -(c.rank(k) as i64) }).sum();
        let h = space_homology(&x, c.top());
        let betti: i64 = h.iter().enumerate().map(|(k, g)| if k % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum();
        prop_assert_eq!(chi, betti);
        let oracle = betti_numbers(&c);
        for (k, g) in h.iter().enumerate() {
            prop_assert!(g.rank <= oracle[k]);
        }
    }

    #[test]
    fn wedge_adds_homology(a in any::<u64>(), b in any::<u64>()) {
        let x = random_space(&mut rng(a), 4);
        let y = random_space(&mut rng(b), 4);
        let w = wedge(vec![x.clone(), y.clone()]).unwrap();
        let hx = space_homology(&x, 2);
        let hy = space_homology(&y, 2);
        let hw = space_homology(w.space(), 2);
        for k in 0..=2 {
            prop_assert_eq!(hw[k].rank, hx[k].rank + hy[k].rank);
            let mut t = hx[k].torsion.clone();
            t.extend(hy[k].torsion.iter().cloned());
            t.sort();
            let mut tw = hw[k].torsion.clone();
            tw.sort();
            prop_assert_eq!(tw, t);
        }
    }

    #[test]
    fn suspension_shifts_homology(seed in any::<u64>()) {
        let x = random_space(&mut rng(seed), 4);
        let (sm, e) = suspension_chain_map(&x);
        let cs = normalized_chains(&x);
        let ct = normalized_chains(sm.space());
        for k in 0..=x.dim() {
            let hs = Homology::of(&cs, k);
            let ht = Homology::of(&ct, k + 1);
            prop_assert_eq!(&hs.group, &ht.group);
            prop_assert!(is_unimodular(&free_part_matrix(&hs, &ht, |z| e.apply(k, z)), hs.group.rank));
        }
    }

    #[test]
    fn smith_form_certificate(seed in any::<u64>(), rows in 1usize..=8, cols in 1usize..=8) {
        let m = random_matrix(&mut rng(seed), rows, cols);
        let s = smith_normal_form(&m, cols);
        prop_assert_eq!(smith_certificate(&m, rows, cols, &s), Ok(()));
    }

    #[test]
    fn permutation_group_laws(a in perm(5), b in perm(5), c in perm(5)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        let word = a.reduced_word();
        // application order: the first letter acts first
        let rebuilt = word.iter().fold(Permutation::identity(5), |acc, &j| Permutation::transposition(5, j).compose(&acc));
        prop_assert_eq!(&rebuilt, &a);
        let inversions = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| a.apply(i) > a.apply(j)).count();
        prop_assert_eq!(word.len(), inversions);
    }

    #[test]
    fn pushout_products_of_monos_are_monos(a in any::<u64>(), b in any::<u64>()) {
        let mut r = rng(a ^ b.rotate_left(17));
        let x = random_space(&mut r, 3);
        let y = random_space(&mut r, 3);
        let f = random_subcomplex(&mut r, &x);
        let g = random_subcomplex(&mut r, &y);
        prop_assert!(injective(&f) && injective(&g));
        let (_, corner) = pushout_product_sset(&f, &g).unwrap();
        prop_assert!(corner.verify().is_ok());
        prop_assert!(injective(&corner));
    }

    #[test]
    fn monos_lift_against_identities(seed in any::<u64>()) {
        let mut r = rng(seed);
        let y = random_space(&mut r, 3);
        let i = random_subcomplex(&mut r, &y);
        let p = SimplicialMap::identity(circle());
        match has_lifting_property(&i, &p, DEFAULT_BUDGET).unwrap() {
            LiftingVerdict::Lifts { .. } => {}
            LiftingVerdict::BudgetExceeded { .. } => {}
            LiftingVerdict::Fails(w) => prop_assert!(false, "identity refuted: {:?}", w.commutes()),
        }
    }

    #[test]
    fn smash_with_zero_sphere_is_trivial(seed in any::<u64>()) {
        let x = random_space(&mut rng(seed), 4);
        let sm = Smash::smash2(&sphere(0), &x);
        prop_assert_eq!(sm.space().counts(), x.counts());
        prop_assert_eq!(space_homology(sm.space(), 2), space_homology(&x, 2));
    }
}
