use exactlin::Subspace;
use fibration::*;
use rootsys::{Family, ParabolicRootSet, RegularSubalgebra, RootSet, RootSystem, DEFAULT_RANK_CAP};

fn b3() -> RootSystem {
    RootSystem::build(Family::B, 3).unwrap()
}

fn set(sys: &RootSystem, items: &[&str]) -> RootSet {
    sys.parse_set(items).unwrap()
}

fn v(sys: &RootSystem) -> RegularSubalgebra {
    RegularSubalgebra::new(sys, Subspace::zero(3), set(sys, &["e1-e3", "e2"])).unwrap()
}

fn borel(sys: &RootSystem) -> RegularSubalgebra {
    ParabolicRootSet::from_crosses(sys, &[1, 2, 3]).unwrap().subalgebra(sys)
}

#[test]
fn exactly_two_maximal_parabolics_over_the_borel() {
    let sys = b3();
    let max = maximal_par(&sys, &v(&sys), Some(&borel(&sys)), DEFAULT_RANK_CAP).unwrap();
    let mut crosses: Vec<Vec<usize>> = max.iter().map(|q| q.crosses(&sys).unwrap()).collect();
    crosses.sort();
    assert_eq!(crosses, vec![vec![1, 3], vec![2]]);
    let first = ParabolicRootSet::from_crosses(&sys, &[2]).unwrap();
    assert_eq!(first.qr(), &set(&sys, &["e3", "-e3", "e1-e2", "-e1+e2"]));
    let second = ParabolicRootSet::from_crosses(&sys, &[1, 3]).unwrap();
    assert_eq!(second.qr(), &set(&sys, &["e2-e3", "-e2+e3"]));
    for q in &max {
        assert!(par_membership_regular(&v(&sys), q));
        assert!(par_membership(&sys, &v(&sys), &q.subalgebra(&sys)).unwrap());
    }
}

#[test]
fn first_parabolic_has_two_z_components() {
    let sys = b3();
    let q = ParabolicRootSet::from_crosses(&sys, &[2]).unwrap();
    let z = z_root_decomposition(&sys, &q).unwrap();
    z.verify(&sys, &q).unwrap();
    assert_eq!(z.center.dim(), 1);
    let pos: Vec<_> = z.positive().collect();
    assert_eq!(pos.len(), 2);
    assert_eq!(z.simple_zroots.len(), 1);
    let nu = z.component(&[1]).unwrap();
    assert_eq!(nu.roots, set(&sys, &["e1", "e2", "e1-e3", "e1+e3", "e2-e3", "e2+e3"]));
    assert_eq!(z.component(&[2]).unwrap().roots, set(&sys, &["e1+e2"]));
    assert!(v(&sys).roots().is_subset(&nu.roots));
}

#[test]
fn second_parabolic_has_five_z_components() {
    let sys = b3();
    let q = ParabolicRootSet::from_crosses(&sys, &[1, 3]).unwrap();
    let z = z_root_decomposition(&sys, &q).unwrap();
    z.verify(&sys, &q).unwrap();
    assert_eq!(z.center.dim(), 2);
    assert_eq!(z.positive().count(), 5);
    let holding = |r: &str| z.positive().find(|c| c.roots.contains(&sys.parse_root(r).unwrap())).unwrap();
    let nu1 = holding("e1-e2");
    let nu2 = holding("e2");
    let combo = |a: i64, b: i64| -> Vec<i64> { nu1.label.iter().zip(&nu2.label).map(|(x, y)| a * x + b * y).collect() };
    assert_eq!(nu1.roots, set(&sys, &["e1-e2", "e1-e3"]));
    assert_eq!(nu2.roots, set(&sys, &["e2", "e3"]));
    assert_eq!(z.component(&combo(1, 1)).unwrap().roots, set(&sys, &["e1"]));
    assert_eq!(z.component(&combo(1, 2)).unwrap().roots, set(&sys, &["e1+e2", "e1+e3"]));
    assert_eq!(z.component(&combo(0, 2)).unwrap().roots, set(&sys, &["e2+e3"]));
    let simple: Vec<&RootSet> = z.simple_zroots.iter().map(|&i| &z.zroots[i].roots).collect();
    assert_eq!(simple.len(), 2);
    assert!(simple.contains(&&nu1.roots) && simple.contains(&&nu2.roots));
    let vr = v(&sys);
    let meets = |c: &RootSet| -> RootSet { c.intersection(vr.roots()).cloned().collect() };
    assert_eq!(meets(&nu1.roots), set(&sys, &["e1-e3"]));
    assert_eq!(meets(&nu2.roots), set(&sys, &["e2"]));
}

#[test]
fn borel_z_roots_are_the_roots() {
    let sys = b3();
    let q = ParabolicRootSet::from_crosses(&sys, &[1, 2, 3]).unwrap();
    let z = z_root_decomposition(&sys, &q).unwrap();
    z.verify(&sys, &q).unwrap();
    assert_eq!(z.center, *sys.cartan());
    assert_eq!(z.zroots.len(), sys.len());
    assert!(z.zroots.iter().all(|c| c.roots.len() == 1));
    assert_eq!(z.simple_zroots.len(), 3);
}

#[test]
fn deployment_generated_as_algebra_not_as_module() {
    let sys = b3();
    for crosses in [vec![2], vec![1, 3]] {
        let q = ParabolicRootSet::from_crosses(&sys, &crosses).unwrap();
        let d = deployment_verify(&sys, &v(&sys), &q).unwrap();
        assert_eq!(d.algebra_closure, q.subalgebra(&sys));
        assert!(!d.generated_as_module, "crosses {crosses:?}");
        assert!(d.module_closure.dim() < q.subalgebra(&sys).dim());
        assert!(d.classification.is_deployment && d.classification.fibers_totally_real);
        assert!(d.classification.lattice_holds());
    }
}

#[test]
fn parabolic_deploys_onto_itself() {
    let sys = b3();
    let q = ParabolicRootSet::from_crosses(&sys, &[2]).unwrap();
    let d = deployment_verify(&sys, &q.subalgebra(&sys), &q).unwrap();
    assert!(d.generated_as_module);
    assert!(d.classification.is_submersion);
}

#[test]
fn deployment_rejects_outsiders() {
    let sys = b3();
    let q = ParabolicRootSet::from_crosses(&sys, &[1]).unwrap();
    let w = RegularSubalgebra::new(&sys, Subspace::zero(3), set(&sys, &["-e1+e2"])).unwrap();
    assert_eq!(deployment_verify(&sys, &w, &q), Err(FibrationError::NotInPar));
}

#[test]
fn zero_subalgebra_has_only_k_as_maximal() {
    let sys = b3();
    let zero = RegularSubalgebra::zero(&sys);
    let max = maximal_par(&sys, &zero, None, DEFAULT_RANK_CAP).unwrap();
    assert_eq!(max.len(), 1);
    assert_eq!(max[0].qr().len(), sys.len());
}

#[test]
fn minimal_elements_of_parabolic_and_cartan() {
    let sys = b3();
    let q = ParabolicRootSet::from_crosses(&sys, &[2]).unwrap();
    assert_eq!(minimal_par(&sys, &q.subalgebra(&sys), DEFAULT_RANK_CAP).unwrap(), vec![q.clone()]);
    let cartan = RegularSubalgebra::with_cartan(&sys, RootSet::new()).unwrap();
    let min = minimal_par(&sys, &cartan, DEFAULT_RANK_CAP).unwrap();
    assert_eq!(min.len() as u64, sys.weyl_order());
    assert!(min.iter().all(ParabolicRootSet::is_borel));
}

#[test]
fn homotopic_characteristic_of_so7_parabolics() {
    let sys = b3();
    let q = ParabolicRootSet::from_crosses(&sys, &[2]).unwrap();
    let h = homotopic_characteristic_regular(&sys, &v(&sys).real_part(), &q).unwrap();
    assert_eq!((h.rank_s, h.torus_meet_s, h.c_q), (2, 0, 2));
    assert!(!h.cartan_part_in_torus);
    let own = homotopic_characteristic_regular(&sys, &q.levi(&sys), &q).unwrap();
    assert_eq!(own.c_q, 0);
    assert!(own.cartan_part_in_torus && own.cartan_is_torus_plus_center);
    let b = ParabolicRootSet::from_crosses(&sys, &[1, 2, 3]).unwrap();
    assert_eq!(homotopic_characteristic_regular(&sys, &v(&sys).real_part(), &b).unwrap().c_q, 0);
}
