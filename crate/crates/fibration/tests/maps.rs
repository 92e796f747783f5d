use crcore::{CRAlgebra, CrModel};
use fibration::*;
use matrixlie::Subalg;
use realforms::{build_minimal_orbit, build_real_form, RealForm, RealFormSpec};
use regularize::regularize_matrix;

fn form(s: &str) -> RealForm {
    build_real_form(s.parse::<RealFormSpec>().unwrap()).unwrap()
}

fn sub(f: &RealForm, rows: &[&str]) -> Subalg {
    f.k_subalg(&f.pattern(rows).unwrap()).unwrap()
}

#[test]
fn u3_submersion_with_totally_real_fibers() {
    let f = form("compact-u:3");
    let model = f.model();
    let v = sub(&f, &["l z1 z2", "0 l z1", "0 0 l"]);
    let q = sub(&f, &["a b c", "0 d e", "0 g h"]);
    assert_eq!(v.dim(), 3);
    assert_eq!(q.dim(), 7);
    let nr_v = model.nr(&v).unwrap();
    let nr_q = model.nr(&q).unwrap();
    assert_eq!(nr_v, sub(&f, &["0 z1 z2", "0 0 z1", "0 0 0"]));
    assert_eq!(nr_q, sub(&f, &["0 z1 z2", "0 0 0", "0 0 0"]));
    assert!(!nr_v.contains(&nr_q));
    let levi_q = q.meet(&q.sigma());
    assert_eq!(nr_v.join(&levi_q), q);
    assert_eq!(nr_v.dim() + levi_q.dim(), q.dim());
    let c = classify_matrix_map(&v, &q).unwrap();
    assert!(c.is_cr && c.is_submersion && c.fibers_totally_real);
    assert!(c.lattice_holds());
    assert!(par_membership(model.as_ref(), &v, &q).unwrap());
}

#[test]
fn identity_map_satisfies_every_clause() {
    let f = form("su:1,3");
    let m = build_minimal_orbit(&f, &[2]).unwrap();
    let c = classify_matrix_map(&m.v, &m.v).unwrap();
    assert!(c.is_cr && c.is_submersion && c.is_spread && c.is_deployment);
    assert!(c.fibers_totally_real && c.fibers_totally_complex);
    assert_eq!(c.witnesses.levi_v, c.witnesses.levi_e);
}

#[test]
fn non_inclusion_is_not_cr() {
    let f = form("compact-u:3");
    let a = sub(&f, &["0 z 0", "0 0 0", "0 0 0"]);
    let b = sub(&f, &["0 0 0", "z 0 0", "0 0 0"]);
    let c = classify_matrix_map(&a, &b).unwrap();
    assert!(!c.is_cr && !c.is_submersion && !c.is_spread && !c.fibers_totally_real);
    assert!(c.lattice_holds());
}

#[test]
fn ambient_mismatch_is_rejected() {
    let a = form("compact-u:3");
    let b = form("compact-su:3");
    let x = Subalg::zero(a.k().clone());
    let y = Subalg::zero(b.k().clone());
    assert_eq!(classify_matrix_map(&x, &y).unwrap_err(), FibrationError::AmbientMismatch);
}

#[test]
fn regularizations_lie_in_par_and_have_totally_real_fibers() {
    for (spec, crosses) in [("su:1,3", vec![2]), ("su:1,3", vec![1, 2]), ("su:2,3", vec![1, 3]), ("slH:2", vec![1])] {
        let f = form(spec);
        let m = build_minimal_orbit(&f, &crosses).unwrap();
        let model = f.model();
        let q = regularize_matrix(model, &m.v).unwrap().result.q;
        assert!(par_membership(model.as_ref(), &m.v, &q).unwrap(), "{spec} {crosses:?}");
        let c = classify_matrix_map(&m.v, &q).unwrap();
        assert!(c.fibers_totally_real, "{spec} {crosses:?}");
        assert!(c.lattice_holds());
    }
}

#[test]
fn full_algebra_is_in_par_only_for_totally_real_v() {
    let f = form("su:1,3");
    let model = f.model();
    let m = build_minimal_orbit(&f, &[2]).unwrap();
    let k = model.full();
    assert!(!par_membership(model.as_ref(), &m.v, &k).unwrap());
    let levi = m.v.meet(&m.v.sigma());
    assert!(par_membership(model.as_ref(), &levi, &k).unwrap());
    assert_eq!(lift(model.as_ref(), &levi, &k).unwrap().v_q, levi);
}

#[test]
fn isotropic_line_in_plane_lifts_to_a_circle_bundle_over_the_full_flag() {
    let f = form("su:1,3");
    let model = f.model();
    let m = build_minimal_orbit(&f, &[1, 2]).unwrap();
    let q = sub(&f, &["l0 h c2 u", "0 l1 c1 0", "0 0 l2 0", "u h c2 l0"]);
    assert!(par_membership(model.as_ref(), &m.v, &q).unwrap());
    let l = lift(model.as_ref(), &m.v, &q).unwrap();
    assert!(l.n_reductive && l.strengthens);
    assert_eq!(l.v_q, sub(&f, &["l0 h c2 0", "0 l1 c1 0", "0 0 l2 0", "0 h c2 l0"]));
    let cr = CRAlgebra::new(model.clone(), l.v_q.clone()).unwrap();
    assert_eq!(cr.cr_dims(), (3, 1));
    assert_eq!(lift(model.as_ref(), &l.v_q, &q).unwrap().v_q, l.v_q);
}

#[test]
fn totally_real_v_lifts_to_the_horocyclic_structure() {
    let f = form("su:2,3");
    let model = f.model();
    let m = build_minimal_orbit(&f, &[1, 3]).unwrap();
    let q = regularize_matrix(model, &m.v).unwrap().result.q;
    let levi = m.v.meet(&m.v.sigma());
    let l = lift(model.as_ref(), &levi, &q).unwrap();
    assert_eq!(l.v_q, levi.join(&model.nr(&q).unwrap()));
    assert_eq!(l.levi, levi);
    assert!(l.strengthens);
}

#[test]
fn lift_rejects_parabolics_outside_par() {
    let f = form("su:1,3");
    let model = f.model();
    let m = build_minimal_orbit(&f, &[2]).unwrap();
    assert_eq!(lift(model.as_ref(), &m.v, &model.full()).unwrap_err(), FibrationError::NotInPar);
}

#[test]
fn homotopic_characteristic_in_matrices() {
    let f = form("su:2,3");
    let model = f.model();
    let m = build_minimal_orbit(&f, &[1, 3]).unwrap();
    let q = regularize_matrix(model, &m.v).unwrap().result.q;
    let levi_q = q.meet(&q.sigma());
    let own = homotopic_characteristic_matrix(&levi_q, &q, 3).unwrap();
    assert_eq!(own.c_q, 0);
    let levi_v = m.v.meet(&m.v.sigma());
    let ranks: Vec<usize> =
        (0..4).map(|seed| homotopic_characteristic_matrix(&levi_v, &q, seed).unwrap().rank_s).collect();
    let s = levi_q.bracket_space(&levi_q);
    assert!(ranks.iter().all(|&r| r == model.max_torus_dim(&s, 11).unwrap()));
    let h = homotopic_characteristic_matrix(&levi_v, &q, 7).unwrap();
    assert!(h.c_q <= h.rank_s);
    assert_eq!(h.c_q == 0, h.torus_meet_s == h.rank_s);
}
