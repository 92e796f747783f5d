use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realforms::{build_real_form, RealForm, RealFormSpec};
use regularize::{regularize_matrix, regularize_regular};
use rootsys::sample::random_regular;
use rootsys::{Family, RootSystem};

fn systems() -> Vec<RootSystem> {
    let mut out = Vec::new();
    for r in 1..=4 {
        out.push(RootSystem::build(Family::A, r).unwrap());
    }
    for r in 2..=4 {
        out.push(RootSystem::build(Family::B, r).unwrap());
        out.push(RootSystem::build(Family::C, r).unwrap());
    }
    out.push(RootSystem::build(Family::D, 4).unwrap());
    out
}

fn compact_forms() -> Vec<RealForm> {
    ["compact-su:3", "compact-su:4", "compact-sp:2", "compact-so:5", "compact-so:6", "compact-so:7"]
        .iter()
        .map(|s| build_real_form(s.parse::<RealFormSpec>().unwrap()).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chain_is_monotone_frozen_and_certified(which in 0usize..11, seed in any::<u64>(), p in 0.05f64..0.5) {
        let systems = systems();
        let sys = &systems[which % systems.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_regular(sys, &mut rng, p);
        let (chain, q) = regularize_regular(sys, &v).unwrap();
        prop_assert!(chain.result.certificate.passed());
        for w in chain.steps.windows(2) {
            prop_assert!(w[1].v.contains(&w[0].v));
            prop_assert!(w[1].nr.roots().is_superset(w[0].nr.roots()));
        }
        let s = chain.stabilized_at;
        prop_assert_eq!(chain.steps.len(), s + 2);
        prop_assert_eq!(&chain.steps[s].nr, &chain.steps[s - 1].nr);
        prop_assert_eq!(&chain.steps[s + 1].v, &chain.steps[s].v);
        // the limit is a fixed point
        let (again, q2) = regularize_regular(sys, &q.subalgebra(sys)).unwrap();
        prop_assert_eq!(again.stabilized_at, 1);
        prop_assert_eq!(q2, q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn backends_agree(which in 0usize..6, seed in any::<u64>(), p in 0.05f64..0.4) {
        thread_local! {
            static FORMS: Vec<RealForm> = compact_forms();
        }
        FORMS.with(|forms| {
            let f = &forms[which];
            let sys = f.k_roots().unwrap().system();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let v = random_regular(sys, &mut rng, p);
            let m = f.embed_regular(&v).unwrap();
            assert_eq!(f.regular_of(&m).as_ref(), Some(&v));
            let (rchain, _) = regularize_regular(sys, &v).unwrap();
            let mchain = regularize_matrix(f.model(), &m).unwrap();
            assert_eq!(rchain.dims(), mchain.dims());
            assert_eq!(rchain.nr_dims(), mchain.nr_dims());
            assert_eq!(rchain.stabilized_at, mchain.stabilized_at);
            for (a, b) in rchain.steps.iter().zip(&mchain.steps) {
                assert_eq!(f.regular_of(&b.v).as_ref(), Some(&a.v));
                assert_eq!(f.regular_of(&b.nr).as_ref(), Some(&a.nr));
            }
        });
    }
}
