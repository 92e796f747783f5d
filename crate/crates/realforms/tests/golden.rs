use exactlin::Subspace;
use realforms::{build_minimal_orbit, build_real_form, type_criteria, RealForm, RealFormSpec, RootTag};
use rootsys::{Root, RootSet, RootSystem};

fn family(form: &RealForm, rows: &[&str]) -> Subspace {
    form.pattern(rows).unwrap()
}

fn form(s: &str) -> RealForm {
    build_real_form(s.parse::<RealFormSpec>().unwrap()).unwrap()
}

fn simple(sys: &RootSystem, coeffs: &[&[i64]]) -> RootSet {
    coeffs.iter().map(|c| sys.from_simple_coefficients(c).unwrap()).collect()
}

fn roots<S: AsRef<str>>(sys: &RootSystem, items: &[S]) -> RootSet {
    sys.parse_set(items).unwrap()
}

#[test]
fn su13_flag_of_isotropic_planes() {
    let f = form("su:1,3");
    assert_eq!(f.k().dim(), 9);
    let k = family(&f, &["l0 z1 c2 w", "c1 l1 c3 c1", "z2 z3 l2 z2", "w z1 c2 l0"]);
    assert_eq!(f.k().space(), &k);
    let m = build_minimal_orbit(&f, &[2]).unwrap();
    let v = family(&f, &["l0 0 c2 0", "c1 l1 c3 c1", "0 0 l2 0", "0 0 c2 l0"]);
    assert_eq!(f.flatten(&m.v), v);
    assert_eq!(m.v.dim(), 5);
    let nr = family(&f, &["0 0 c2 0", "c1 0 c3 c1", "0 0 0 0", "0 0 c2 0"]);
    assert_eq!(f.flatten(&m.nr), nr);
    assert_eq!(m.nr.dim(), 3);
    assert_eq!(m.cr.cr_dims(), (3, 1));
}

#[test]
fn su13_flag_of_isotropic_line_in_plane() {
    let f = form("su:1,3");
    let m = build_minimal_orbit(&f, &[1, 2]).unwrap();
    let v = family(&f, &["l0 0 c2 0", "0 l1 c1 0", "0 0 l2 0", "0 0 c2 l0"]);
    assert_eq!(f.flatten(&m.v), v);
    let nr = family(&f, &["0 0 c2 0", "0 0 c1 0", "0 0 0 0", "0 0 c2 0"]);
    assert_eq!(f.flatten(&m.nr), nr);
}

#[test]
fn su23_sets_and_matrices() {
    let f = form("su:2,3");
    assert_eq!(f.k().dim(), 12);
    let k = family(&f, &["l2 c1 h1 h2 m2", "z1 l1 z2 m1 w2", "w1 c2 l0 c2 w1", "w2 m1 z2 l1 z1", "m2 h2 h1 c1 l2"]);
    assert_eq!(f.k().space(), &k);
    let sys = f.g_roots().system();
    let cl = f.classification();
    let tag = |c: &[i64]| cl.tag(&sys.from_simple_coefficients(c).unwrap()).unwrap();
    assert_eq!(tag(&[1, 0, 0, 0]), RootTag::Complex);
    assert_eq!(tag(&[0, 1, 0, 0]), RootTag::Complex);
    assert_eq!(tag(&[0, 0, 0, 1]), RootTag::Complex);
    assert_eq!(tag(&[0, 1, 1, 0]), RootTag::Real);

    let m = build_minimal_orbit(&f, &[1, 3]).unwrap();
    let s = &m.sets;
    let f_n = simple(
        sys,
        &[
            &[1, 0, 0, 0],
            &[1, 1, 0, 0],
            &[1, 1, 1, 0],
            &[1, 1, 1, 1],
            &[0, 1, 1, 0],
            &[0, 1, 1, 1],
            &[0, 0, 1, 0],
            &[0, 0, 1, 1],
        ],
    );
    assert_eq!(s.f_n, f_n);
    assert_eq!(s.f_r, simple(sys, &[&[0, 1, 0, 0], &[0, -1, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, -1]]));
    assert_eq!(s.f_theta_n, simple(sys, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]));
    assert!(s.f_theta_r.is_empty());

    let v = family(&f, &["l2 c1 0 0 0", "0 l1 0 0 0", "0 c2 l0 c2 0", "0 0 0 l1 0", "0 0 0 c1 l2"]);
    assert_eq!(f.flatten(&m.v), v);
    let nr = family(&f, &["0 c1 0 0 0", "0 0 0 0 0", "0 c2 0 c2 0", "0 0 0 0 0", "0 0 0 c1 0"]);
    assert_eq!(f.flatten(&m.nr), nr);

    let t = type_criteria(&f, s);
    let real_n: RootSet = t.real_in_f.intersection(&s.f_n).cloned().collect();
    assert_eq!(real_n, simple(sys, &[&[0, 1, 1, 0], &[1, 1, 1, 1]]));
    assert_eq!(t.max_sets, vec![real_n]);
    assert!(!t.type_i);
    let w = t.witness_i.clone().unwrap();
    assert_eq!(w.alpha, sys.from_simple_coefficients(&[0, 1, 1, 0]).unwrap());
    assert_eq!(w.beta, sys.from_simple_coefficients(&[1, 0, 0, 0]).unwrap());
    assert_eq!(w.sum, sys.from_simple_coefficients(&[1, 1, 1, 0]).unwrap());
    // no reductive roots survive θ, so the type II condition is empty
    assert!(t.type_ii);
    assert!(t.agrees_with(m.cr.regularity_type().unwrap()));
}

#[test]
fn su23_normalizer_of_v() {
    let f = form("su:2,3");
    let m = build_minimal_orbit(&f, &[1, 3]).unwrap();
    let n = matrixlie::normalizer(&m.v);
    let shown = family(&f, &["l2 c1 0 0 u", "0 l1 0 u 0", "0 c2 l0 c2 0", "0 u 0 l1 0", "u 0 0 c1 l2"]);
    assert_eq!(f.flatten(&n), shown);
}

#[test]
fn quaternionic_flag_is_regular() {
    let f = form("slH:2");
    assert_eq!(f.k().dim(), 10);
    let k = family(&f, &["l1 c1 h c2", "z1 -l1 z2 -w", "w c2 l2 c3", "z2 -h z3 -l2"]);
    assert_eq!(f.k().space(), &k);
    let m = build_minimal_orbit(&f, &[1, 3]).unwrap();
    let v = family(&f, &["l1 c1 0 c2", "0 -l1 0 0", "0 c2 l2 c3", "0 0 0 -l2"]);
    assert_eq!(f.flatten(&m.v), v);
    let nr = family(&f, &["0 c1 0 c2", "0 0 0 0", "0 c2 0 c3", "0 0 0 0"]);
    assert_eq!(f.flatten(&m.nr), nr);
    let kdata = f.k_roots().unwrap();
    let reg = f.regular_of(&m.v).expect("regular");
    assert_eq!(reg.roots(), &roots(kdata.system(), &["2e1", "2e2", "e1+e2"]));
    assert_eq!(reg.toral(), kdata.system().cartan());
    let t = type_criteria(&f, &m.sets);
    assert!(t.real_in_f.is_empty());
    assert!(t.type_i);
    assert!(t.agrees_with(m.cr.regularity_type().unwrap()));
}

#[test]
fn so35_sets_and_strongly_orthogonal_systems() {
    let f = form("so:3,5");
    assert_eq!(f.k().dim(), 13);
    let sys = f.g_roots().system();
    let mut real = Vec::new();
    for i in 1..=3 {
        for j in i + 1..=3 {
            for s in ["+", "-"] {
                real.push(format!("e{i}{s}e{j}"));
                real.push(format!("-e{i}{s}e{j}"));
            }
        }
    }
    assert_eq!(f.classification().real(), roots(sys, &real));
    let m = build_minimal_orbit(&f, &[4]).unwrap();
    let s = &m.sets;
    assert_eq!(s.f_theta_n, roots(sys, &["e1+e4", "e2+e4", "e3+e4"]));
    assert_eq!(s.f_theta_r, roots(sys, &["e1-e2", "-e1+e2", "e1-e3", "-e1+e3", "e2-e3", "-e2+e3"]));
    let t = type_criteria(&f, s);
    let expected: Vec<RootSet> = [(1, 2), (1, 3), (2, 3)]
        .iter()
        .map(|(i, j)| roots(sys, &[&format!("e{i}-e{j}"), &format!("e{i}+e{j}")]))
        .collect();
    let mut got = t.max_sets.clone();
    got.sort();
    let mut want = expected;
    want.sort();
    assert_eq!(got, want);
    assert_eq!(t.per_set.len(), 3);
    assert!(t.per_set.iter().all(|&(_, ii)| !ii));
    assert!(!t.type_ii);
    assert!(!t.type_i);
    assert!(t.agrees_with(m.cr.regularity_type().unwrap()));
}

#[test]
fn compact_forms_have_only_compact_roots() {
    for s in ["compact-so:7", "compact-sp:2", "compact-su:4", "compact-so:6"] {
        let f = form(s);
        let cl = f.classification();
        assert!(cl.tags().values().all(|&t| t == RootTag::ImaginaryCompact), "{s}");
        let rank = f.g_roots().system().rank();
        for crosses in [vec![1], vec![rank], (1..=rank).collect::<Vec<_>>()] {
            let m = build_minimal_orbit(&f, &crosses).unwrap();
            assert_eq!(m.sets.f_theta, m.sets.f, "{s} {crosses:?}");
            assert_eq!(m.cr.cr_dims().1, 0);
        }
    }
}

#[test]
fn invalid_crosses_are_rejected() {
    let f = form("su:2,3");
    assert!(build_minimal_orbit(&f, &[1, 1]).is_err());
    assert!(build_minimal_orbit(&f, &[5]).is_err());
    assert!(build_minimal_orbit(&f, &[0]).is_err());
}

#[test]
fn regular_embedding_round_trip() {
    let f = form("compact-so:7");
    let sys = f.k_roots().unwrap().system().clone();
    let v = rootsys::RegularSubalgebra::from_parts(Subspace::zero(sys.dim()), roots(&sys, &["e1-e3", "e2"]));
    let m = f.embed_regular(&v).unwrap();
    assert_eq!(m.dim(), 2);
    assert_eq!(f.regular_of(&m).unwrap(), v);
    let _: Root = sys.parse_root("e1").unwrap();
}

#[test]
fn su23_grading_element_gives_a_parabolic_over_v() {
    use exactlin::{DenseMatrix, GaussRational as G};
    let f = form("su:2,3");
    let m = build_minimal_orbit(&f, &[1, 3]).unwrap();
    let a = DenseMatrix::diagonal(&[1, -1, 0, -1, 1].map(|x| G::from_ints(0, x)));
    let q = matrixlie::parabolic_from_element(f.k(), &a).unwrap();
    assert!(q.contains(&m.v));
    assert!(q.join(&q.sigma()).is_full());
    assert_eq!(matrixlie::normalizer(&q), q);
    assert_eq!(q.meet(&q.sigma()), matrixlie::centralizer_of(f.k(), &a).unwrap());
}
