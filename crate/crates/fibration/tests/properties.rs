use std::collections::BTreeSet;
use std::sync::OnceLock;

use exactlin::Subspace;
use fibration::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regularize::regularize_regular;
use rootsys::sample::random_regular;
use rootsys::{enumerate_parabolics, Family, ParabolicRootSet, RegularSubalgebra, RootSystem, DEFAULT_RANK_CAP};

fn small_systems() -> &'static [(RootSystem, Vec<ParabolicRootSet>)] {
    static CELL: OnceLock<Vec<(RootSystem, Vec<ParabolicRootSet>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::C, 2), (Family::B, 3), (Family::C, 3)]
            .into_iter()
            .map(|(f, r)| {
                let sys = RootSystem::build(f, r).unwrap();
                let all = enumerate_parabolics(&sys, DEFAULT_RANK_CAP).unwrap();
                (sys, all)
            })
            .collect()
    })
}

fn n_reductive(v: &RegularSubalgebra) -> bool {
    let nr = RegularSubalgebra::from_parts(Subspace::zero(v.toral().ambient_dim()), v.nilpotent_roots());
    v.real_part().join(&nr) == *v
}

/// Some simple z-root misses nr(v) while twice it is again a z-root.
fn doubling_gap(sys: &RootSystem, v: &RegularSubalgebra, q: &ParabolicRootSet) -> bool {
    let z = z_root_decomposition(sys, q).unwrap();
    let nr = v.nilpotent_roots();
    z.simple_zroots.iter().any(|&i| {
        let c = &z.zroots[i];
        let double: Vec<i64> = c.label.iter().map(|x| 2 * x).collect();
        c.roots.is_disjoint(&nr) && z.component(&double).is_some()
    })
}

fn as_set(v: Vec<ParabolicRootSet>) -> BTreeSet<ParabolicRootSet> {
    v.into_iter().collect()
}

#[test]
fn z_decompositions_of_every_small_parabolic_verify() {
    for (sys, all) in small_systems() {
        for q in all {
            let z = z_root_decomposition(sys, q).unwrap();
            z.verify(sys, q).unwrap();
            assert_eq!(z.center.dim(), sys.rank() - rootsys_rank(sys, q));
        }
    }
}

fn rootsys_rank(sys: &RootSystem, q: &ParabolicRootSet) -> usize {
    Subspace::span(sys.dim(), q.qr().iter().map(rootsys::root_vector).collect()).dim()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn searches_match_the_oracle(which in 0usize..7, seed in any::<u64>(), p in 0.05f64..0.5) {
        let (sys, _) = &small_systems()[which];
        let v = random_regular(sys, &mut ChaCha8Rng::seed_from_u64(seed), p);
        let max = maximal_par(sys, &v, None, DEFAULT_RANK_CAP).unwrap();
        prop_assert!(!max.is_empty());
        prop_assert_eq!(as_set(max), as_set(maximal_par_oracle(sys, &v, None).unwrap()));
        let min = minimal_par(sys, &v, DEFAULT_RANK_CAP).unwrap();
        prop_assert_eq!(as_set(min), as_set(minimal_par_oracle(sys, &v).unwrap()));
    }

    #[test]
    fn maps_into_par_respect_the_lattice(which in 0usize..7, seed in any::<u64>(), p in 0.05f64..0.5) {
        let (sys, all) = &small_systems()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_regular(sys, &mut rng, p);
        let e = random_regular(sys, &mut rng, p);
        prop_assert!(classify_map(sys, &v, &e).lattice_holds());
        let (_, w) = regularize_regular(sys, &v).unwrap();
        prop_assert!(par_membership_regular(&v, &w));
        for q in all.iter().filter(|q| par_membership_regular(&v, q)) {
            let c = classify_map(sys, &v, &q.subalgebra(sys));
            prop_assert!(c.is_cr && c.lattice_holds());
            if n_reductive(&v) {
                prop_assert!(c.fibers_totally_real);
            }
        }
    }

    #[test]
    fn lifts_combinations_and_deployments(which in 0usize..7, seed in any::<u64>(), p in 0.05f64..0.5) {
        let (sys, all) = &small_systems()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_regular(sys, &mut rng, p);
        let par: Vec<&ParabolicRootSet> = all.iter().filter(|q| par_membership_regular(&v, q)).collect();
        let q1 = par[rng.gen_range(0..par.len())];
        let q2 = par[rng.gen_range(0..par.len())];
        let (s1, s2) = (q1.subalgebra(sys), q2.subalgebra(sys));
        let combined = combine_parabolics(sys, &v, &s1, &s2).unwrap();
        prop_assert!(combined.certificate.passed());
        let min = minimal_par(sys, &v, DEFAULT_RANK_CAP).unwrap();
        if min.contains(q1) {
            prop_assert_eq!(&combined.q, &s1);
        }
        prop_assert_eq!(combine_parabolics(sys, &v, &s1, &s1).unwrap().q, s1.clone());
        let l = lift(sys, &v, &s1).unwrap();
        prop_assert_eq!(lift(sys, &l.v_q, &s1).unwrap().v_q, l.v_q.clone());
        if n_reductive(&v) {
            prop_assert!(l.strengthens);
            for q in maximal_par(sys, &v, None, DEFAULT_RANK_CAP).unwrap() {
                let d = deployment_verify(sys, &v, &q);
                let gap = doubling_gap(sys, &v, &q);
                prop_assert_eq!(d.is_ok(), !gap, "{:?}", d);
            }
        }
    }
}
