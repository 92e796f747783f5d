use exactlin::Subspace;
use fibration::*;
use rootsys::{
    lie_closure_regular, ClosureMode, Family, ParabolicRootSet, RegularSubalgebra, RootSystem, DEFAULT_RANK_CAP,
};

// v = k^{−2e₂} in C₂ and the maximal parabolic with Levi roots ±2e₁.
#[test]
fn long_root_in_c2_has_a_maximal_parabolic_not_generated_by_nr_and_levi() {
    let sys = RootSystem::build(Family::C, 2).unwrap();
    let v = RegularSubalgebra::new(&sys, Subspace::zero(2), sys.parse_set(&["-2e2"]).unwrap()).unwrap();
    let q = ParabolicRootSet::new(&sys, sys.parse_set(&["2e1", "-2e1", "-e1-e2", "e1-e2", "-2e2"]).unwrap()).unwrap();
    let max = maximal_par(&sys, &v, None, DEFAULT_RANK_CAP).unwrap();
    assert!(max.contains(&q));
    assert_eq!(max.len(), 3);

    let err = deployment_verify(&sys, &v, &q).unwrap_err();
    assert!(matches!(err, FibrationError::Verification(_)));
    let start = RegularSubalgebra::from_parts(sys.cartan().clone(), sys.parse_set(&["2e1", "-2e1", "-2e2"]).unwrap());
    let closure = lie_closure_regular(&sys, &start, &ClosureMode::Algebra).unwrap();
    assert_eq!(closure, start);
    assert_eq!(closure.dim() + 2, q.subalgebra(&sys).dim());

    // the one simple z-root misses nr(v), and adding its negative breaks closedness
    let z = z_root_decomposition(&sys, &q).unwrap();
    assert_eq!(z.simple_zroots.len(), 1);
    let simple = &z.zroots[z.simple_zroots[0]];
    assert_eq!(simple.roots, sys.parse_set(&["-e1-e2", "e1-e2"]).unwrap());
    assert!(simple.roots.is_disjoint(&v.nilpotent_roots()));
    assert_eq!(z.component(&[2]).unwrap().roots, sys.parse_set(&["-2e2"]).unwrap());
    let enlarged: rootsys::RootSet =
        q.q().iter().chain(simple.roots.iter().map(|r| r.neg()).collect::<Vec<_>>().iter()).cloned().collect();
    assert!(ParabolicRootSet::new(&sys, enlarged).is_err());

    let c = classify_map(&sys, &v, &q.subalgebra(&sys));
    assert!(c.fibers_totally_real && !c.is_spread && !c.is_deployment);
}

#[test]
fn other_maximal_parabolics_of_the_long_root_deploy() {
    let sys = RootSystem::build(Family::C, 2).unwrap();
    let v = RegularSubalgebra::new(&sys, Subspace::zero(2), sys.parse_set(&["-2e2"]).unwrap()).unwrap();
    let ok: Vec<bool> = maximal_par(&sys, &v, None, DEFAULT_RANK_CAP)
        .unwrap()
        .iter()
        .map(|q| deployment_verify(&sys, &v, q).is_ok())
        .collect();
    assert_eq!(ok.iter().filter(|&&b| b).count(), 2);
}
