mod common;

use latcoh_core::fixtures::symmetric_non_semigroup;
use latcoh_core::graded::{module_from_root, module_of_set, root_from_weight, TowerModule};
use latcoh_core::reconstruct::{
    compute_e, detect_lg1_equals_2, e_from_root, initial_part, initial_part_from_root,
    lg1_equals_2_by_last_generator, lg1_equals_2_from_generators, multiplicity_from_module,
    reconstruct, reconstruct_semigroup, ReconstructError,
};
use latcoh_core::semigroup::{enumerate_plane_branch_semigroups, GcdChain, NumericalSemigroup};
use latcoh_core::weight1d::weight_sequence;
use proptest::prelude::*;

fn module(gens: &[u64]) -> TowerModule {
    module_of_set(NumericalSemigroup::from_generators(gens).unwrap().as_set())
}

#[test]
fn round_trip_through_the_root() {
    for s in enumerate_plane_branch_semigroups(120) {
        let root = root_from_weight(&weight_sequence(s.as_set()));
        let back = reconstruct_semigroup(&module_from_root(&root)).unwrap();
        assert_eq!(back, s);
    }
}

#[test]
fn multiplicity_delta_and_detector_per_branch() {
    for s in enumerate_plane_branch_semigroups(200) {
        let m = module_of_set(s.as_set());
        assert_eq!(
            multiplicity_from_module(&m).unwrap(),
            s.multiplicity(),
            "{:?}",
            s.min_gens()
        );
        let part = initial_part(&m).unwrap();
        assert_eq!(part.delta, s.delta());
        if s.is_smooth() {
            continue;
        }
        let chain = GcdChain::new(s.min_gens());
        let truth = chain.l_penultimate() == Some(2);
        assert_eq!(detect_lg1_equals_2(&m), truth, "{:?}", s.min_gens());
        assert_eq!(lg1_equals_2_from_generators(s.min_gens()), truth);
        assert_eq!(
            lg1_equals_2_by_last_generator(&s),
            truth,
            "{:?}",
            s.min_gens()
        );
    }
}

#[test]
fn structure_of_the_initial_part() {
    for s in enumerate_plane_branch_semigroups(200) {
        if s.is_smooth() {
            continue;
        }
        let m = module_of_set(s.as_set());
        let part = initial_part(&m).unwrap();
        let gens = s.min_gens();
        let g = gens.len() - 1;
        assert!(part.e <= 0);
        if g >= 2 {
            assert!(part.elements.contains(&gens[g - 1]), "{gens:?}");
        }
        if GcdChain::new(gens).l_penultimate() == Some(2) {
            let expected: Vec<u64> = (0..=s.delta()).filter(|&x| s.contains(x)).collect();
            assert_eq!(part.elements, expected, "{gens:?}");
            assert!(s.delta() < gens[g]);
        }
        // The root-side reading gives the same set.
        let root = root_from_weight(&weight_sequence(s.as_set()));
        assert_eq!(e_from_root(&root), part.e);
        assert_eq!(
            initial_part_from_root(&root).unwrap(),
            part.elements,
            "{gens:?}"
        );
    }
}

#[test]
fn weights_of_gapped_maximal_points_lie_above_e() {
    for s in enumerate_plane_branch_semigroups(200) {
        let w = weight_sequence(s.as_set());
        let e = compute_e(&module_of_set(s.as_set()));
        let delta = s.delta();
        for l in 0..=delta {
            let gapped = (0..l).all(|x| !(s.contains(x) && s.contains(x + 1)));
            if !gapped {
                break;
            }
            let max = (l..=delta).map(|x| w.at(x)).max().unwrap();
            if max == w.at(l) {
                assert!(w.at(l) >= e, "{:?} at {l}", s.min_gens());
            }
        }
    }
}

#[test]
fn worked_reconstructions() {
    let r = reconstruct(&module(&[6, 10, 31])).unwrap();
    assert_eq!(r.generators(), &[6, 10, 31]);
    assert_eq!(r.primitives, vec![6, 10]);
    assert_eq!(r.delta, 23);
    assert_eq!(
        reconstruct(&module(&[6, 15, 31])).unwrap().generators(),
        &[6, 15, 31]
    );
    assert_eq!(reconstruct(&module(&[2, 3])).unwrap().generators(), &[2, 3]);
    assert!(reconstruct(&TowerModule::trivial())
        .unwrap()
        .semigroup
        .is_smooth());

    // The symmetric non-semigroup has the module of ⟨4,11⟩, so it
    // reconstructs to ⟨4,11⟩.
    let fake = module_of_set(&symmetric_non_semigroup());
    assert_eq!(fake, module(&[4, 11]));
    assert_eq!(reconstruct(&fake).unwrap().generators(), &[4, 11]);
}

#[test]
fn non_branch_modules_are_rejected() {
    // ⟨3,4,5⟩ is not symmetric; ⟨4,6,7⟩ is not a plane-branch semigroup.
    for gens in [[3u64, 4, 5], [4, 6, 7]] {
        let m = module(&gens);
        assert!(reconstruct(&m).is_err(), "{gens:?}");
    }
    let lone = TowerModule::new(-1, vec![(-1, -1)]).unwrap();
    assert!(reconstruct(&lone).is_err());
    let high = TowerModule::new(1, vec![]).unwrap();
    assert!(matches!(
        reconstruct(&high),
        Err(ReconstructError::InconsistentModule(_) | ReconstructError::NotBranchModule(_))
    ));
}

fn arbitrary_module() -> impl Strategy<Value = TowerModule> {
    (-8i64..=0, prop::collection::vec((0i64..9, 0i64..9), 0..10)).prop_map(|(base, raw)| {
        let towers = raw
            .into_iter()
            .map(|(a, b)| {
                let m = base + a.min(-base);
                let n = (m + b).min(0);
                (m, n)
            })
            .collect();
        TowerModule::new(base, towers).unwrap()
    })
}

proptest! {
    /// Either a diagnosable error or a semigroup whose module is the input.
    #[test]
    fn reconstruction_never_answers_wrongly(m in arbitrary_module()) {
        if let Ok(r) = reconstruct(&m) {
            prop_assert!(r.semigroup.is_plane_branch());
            prop_assert_eq!(module_of_set(r.semigroup.as_set()), m);
        }
    }
}
