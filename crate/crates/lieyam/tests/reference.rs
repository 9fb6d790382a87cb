//! Library predicates against the reference implementations in `common`,
//! exhaustively on small grids and on seeded random pairs.

mod common;

use common::*;
use lieyam::cohomology::YamagutiComplex;
use lieyam::deform::is_nijenhuis_structure;
use lieyam::fixtures::{a2, random_valid_pair, sl2};
use lieyam::rota_baxter::{grid_matrices, is_rbn, is_relative_rb, search_nijenhuis, search_relative_rb};
use lieyam::{LieYRepPair, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GRID: [i64; 3] = [-1, 0, 1];

fn structure(p: &LieYRepPair) -> (Structure, RepData) {
    (Structure::from_algebra(&p.algebra), RepData::from_pair(p))
}

fn seeded_pair(seed: u64) -> LieYRepPair {
    random_valid_pair(&mut ChaCha8Rng::seed_from_u64(seed), 3).1
}

#[test]
fn semidirect_product_matches_the_written_out_brackets() {
    for p in [LieYRepPair::adjoint(a2()), LieYRepPair::coadjoint(a2()), seeded_pair(1), seeded_pair(2)] {
        let (g, r) = structure(&p);
        let ours = Structure::from_algebra(&p.semidirect().unwrap());
        assert!(same_structure(&ours, &semidirect(&g, &r)));
    }
}

#[test]
fn derived_map_matches_its_formula() {
    for p in [LieYRepPair::coadjoint(a2()), LieYRepPair::coadjoint(sl2(&Rational::from_int(1))), seeded_pair(3)] {
        let (g, r) = structure(&p);
        let dd = p.derived_d();
        for i in 0..g.dim {
            for j in 0..g.dim {
                assert_eq!(dense(dd.at(i, j)), r.d_of(&g, &unit(g.dim, i), &unit(g.dim, j)));
            }
        }
    }
}

#[test]
fn nijenhuis_verdicts_agree_on_the_grid() {
    for a in [a2(), sl2(&Rational::from_int(1))] {
        let g = Structure::from_algebra(&a);
        let grid = if a.dim() == 2 { grid_matrices(2, 2, &GRID) } else { grid_matrices(3, 3, &[0, 1]) };
        for n in grid {
            assert_eq!(a.is_nijenhuis(&n).unwrap(), is_nijenhuis(&g, &dense(&n)), "{n:?}");
        }
    }
}

#[test]
fn rota_baxter_verdicts_agree_with_graph_closure() {
    for p in [LieYRepPair::adjoint(a2()), LieYRepPair::coadjoint(a2())] {
        let (g, r) = structure(&p);
        let mut found = 0;
        for t in grid_matrices(2, 2, &GRID) {
            let ours = is_relative_rb(&p, &t).unwrap();
            assert_eq!(ours, graph_is_subalgebra(&g, &r, &dense(&t)), "{t:?}");
            found += usize::from(ours);
        }
        assert!(found > 1);
    }
}

#[test]
fn nijenhuis_structure_verdicts_agree_on_the_grid() {
    let p = LieYRepPair::adjoint(a2());
    let (g, r) = structure(&p);
    for n in search_nijenhuis(&p.algebra, &GRID) {
        for s in grid_matrices(2, 2, &GRID) {
            let ours = is_nijenhuis_structure(&p, &n, &s).unwrap();
            assert_eq!(ours, common::is_nijenhuis_structure(&g, &r, &dense(&n), &dense(&s)), "{n:?} {s:?}");
        }
    }
}

#[test]
fn rota_baxter_nijenhuis_verdicts_agree_on_the_grid() {
    let p = LieYRepPair::adjoint(a2());
    let (g, r) = structure(&p);
    let ops = search_relative_rb(&p, &GRID);
    let nij = search_nijenhuis(&p.algebra, &GRID);
    let mut found = 0;
    for t in &ops {
        for n in &nij {
            for s in [n.clone(), n.transpose()] {
                let ours = is_rbn(&p, t, &s, n).unwrap();
                assert_eq!(ours, common::is_rbn(&g, &r, &dense(t), &dense(&s), &dense(n)), "{t:?} {s:?} {n:?}");
                found += usize::from(ours);
            }
        }
    }
    assert!(found > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_pairs_are_valid_for_the_reference(seed in any::<u64>()) {
        let p = seeded_pair(seed);
        let (g, r) = structure(&p);
        prop_assert!(pair_is_valid(&g, &r));
    }

    #[test]
    fn coboundary_matches_the_reference(seed in any::<u64>()) {
        let p = seeded_pair(seed);
        let (g, r) = structure(&p);
        let oracle = YamagutiOracle::new(&g, &r);
        let cx = YamagutiComplex::new(&p.algebra, &p.rep).unwrap();
        for k in 1..=2 {
            prop_assert_eq!(dense(&cx.delta_matrix(k).unwrap()), oracle.matrix(k));
        }
    }

    #[test]
    fn reference_elimination_matches_rank_nullity(seed in any::<u64>()) {
        let p = seeded_pair(seed);
        let cx = YamagutiComplex::new(&p.algebra, &p.rep).unwrap();
        let m = dense(&cx.delta_matrix(1).unwrap());
        let cols = cx.cochain_len(1);
        let kernel = kernel_basis(&m, cols);
        prop_assert_eq!(kernel.len() + dense_rank(&m), cols);
        prop_assert_eq!(cx.cohomology_dim(1).unwrap(), kernel.len());
        for v in &kernel {
            prop_assert!(vzero(&dm_apply(&m, v)));
        }
    }
}
