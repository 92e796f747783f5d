use rootsys::*;

fn b3() -> RootSystem {
    RootSystem::build(Family::B, 3).unwrap()
}

fn par_v(v: &RegularSubalgebra, q: &ParabolicRootSet) -> bool {
    v.roots().is_subset(q.q()) && v.nilpotent_roots().is_disjoint(q.qr())
}

#[test]
fn so7_two_maximal_parabolics_over_the_borel() {
    let sys = b3();
    let v =
        RegularSubalgebra::new(&sys, exactlin::Subspace::zero(3), sys.parse_set(&["e1-e3", "e2"]).unwrap()).unwrap();
    let borel = ParabolicRootSet::from_crosses(&sys, &[1, 2, 3]).unwrap();
    let candidates: Vec<ParabolicRootSet> = enumerate_parabolics(&sys, DEFAULT_RANK_CAP)
        .unwrap()
        .into_iter()
        .filter(|q| q.contains(&borel) && par_v(&v, q))
        .collect();
    let maximal: Vec<&ParabolicRootSet> =
        candidates.iter().filter(|q| !candidates.iter().any(|p| p != *q && p.contains(q))).collect();
    assert_eq!(maximal.len(), 2);
    let crosses: Vec<Vec<usize>> = maximal.iter().map(|q| q.crosses(&sys).unwrap()).collect();
    assert!(crosses.contains(&vec![2]));
    assert!(crosses.contains(&vec![1, 3]));
    let first = ParabolicRootSet::from_crosses(&sys, &[2]).unwrap();
    assert_eq!(first.qn(), &sys.parse_set(&["e1", "e2", "e1-e3", "e1+e3", "e2-e3", "e2+e3", "e1+e2"]).unwrap());
    assert_eq!(first.qr(), &sys.parse_set(&["e3", "-e3", "e1-e2", "-e1+e2"]).unwrap());
    let second = ParabolicRootSet::from_crosses(&sys, &[1, 3]).unwrap();
    assert_eq!(second.qr(), &sys.parse_set(&["e2-e3", "-e2+e3"]).unwrap());
    assert_eq!(second.qn().len(), 8);
}

#[test]
fn so7_regularization_keeps_the_commuting_sl2() {
    let sys = b3();
    let n = sys.parse_set(&["e1-e3", "e2"]).unwrap();
    let mut w = normalizer_regular(&sys, &n).unwrap();
    for _ in 0..10 {
        let next = normalizer_regular(&sys, &w.nilpotent_roots()).unwrap();
        if next == w {
            break;
        }
        w = next;
    }
    // ±(e1+e3) commute with both generators, so they survive every step
    let q = ParabolicRootSet::new(&sys, w.roots().clone()).unwrap();
    assert_eq!(q.qr(), &sys.parse_set(&["e1+e3", "-e1-e3"]).unwrap());
    assert_eq!(q.qn(), &sys.parse_set(&["e1", "e2", "e1-e3", "e1+e2", "e2-e3", "e2+e3", "-e1+e2", "-e3"]).unwrap());
    assert!(!q.contains(&ParabolicRootSet::from_crosses(&sys, &[1, 2, 3]).unwrap()));
}

#[test]
fn so7_generated_as_algebra_but_not_as_module() {
    let sys = b3();
    let nr = sys.parse_set(&["e1-e3", "e2"]).unwrap();
    for crosses in [vec![2], vec![1, 3]] {
        let q = ParabolicRootSet::from_crosses(&sys, &crosses).unwrap();
        let levi = q.levi(&sys);
        let start = RegularSubalgebra::from_parts(levi.toral().clone(), levi.roots().union(&nr).cloned().collect());
        let alg = lie_closure_regular(&sys, &start, &ClosureMode::Algebra).unwrap();
        assert_eq!(alg, q.subalgebra(&sys), "crosses {crosses:?}");
        let module = lie_closure_regular(&sys, &start, &ClosureMode::Module(levi.clone())).unwrap();
        assert!(q.subalgebra(&sys).contains(&module));
        assert!(module.dim() < q.subalgebra(&sys).dim());
        assert_eq!(lie_closure_regular(&sys, &module, &ClosureMode::Module(levi)).unwrap(), module);
    }
    let q = ParabolicRootSet::from_crosses(&sys, &[2]).unwrap();
    let levi = q.levi(&sys);
    let start = RegularSubalgebra::from_parts(levi.toral().clone(), levi.roots().union(&nr).cloned().collect());
    let module = lie_closure_regular(&sys, &start, &ClosureMode::Module(levi)).unwrap();
    assert!(!module.roots().contains(&sys.parse_root("e1+e2").unwrap()));
}

#[test]
fn parabolic_nilradical_is_self_normalizing() {
    for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
        let sys = RootSystem::build(f, r).unwrap();
        for q in enumerate_parabolics(&sys, DEFAULT_RANK_CAP).unwrap() {
            if q.qn().is_empty() {
                continue;
            }
            let n = normalizer_regular(&sys, q.qn()).unwrap();
            assert_eq!(n.roots(), q.q());
        }
    }
}

#[test]
fn parabolic_counts_match_oracle() {
    for (f, r) in [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::C, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 3),
    ] {
        let sys = RootSystem::build(f, r).unwrap();
        assert_eq!(enumerate_parabolics(&sys, DEFAULT_RANK_CAP).unwrap(), parabolic_oracle(&sys), "{f}{r}");
    }
}
