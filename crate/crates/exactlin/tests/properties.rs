use exactlin::{canonicalize, kernel, min_poly, squarefree_part, DenseMatrix, GaussRational as G, Subspace};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = G> {
    (-3i64..=3, -2i64..=2).prop_map(|(a, b)| G::from_ints(a, b))
}

fn vectors(count: usize, n: usize) -> impl Strategy<Value = Vec<Vec<G>>> {
    prop::collection::vec(prop::collection::vec(scalar(), n), count)
}

fn square(n: usize) -> impl Strategy<Value = DenseMatrix> {
    prop::collection::vec(scalar(), n * n).prop_map(move |d| DenseMatrix::from_flat(n, n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn modular_law(a in vectors(3, 6), b in vectors(4, 6)) {
        let sa = canonicalize(6, a).unwrap();
        let sb = canonicalize(6, b).unwrap();
        let (m, j) = sa.meet_join(&sb).unwrap();
        prop_assert_eq!(m.dim() + j.dim(), sa.dim() + sb.dim());
        prop_assert!(sa.contains(&m) && sb.contains(&m));
        prop_assert!(j.contains(&sa) && j.contains(&sb));
    }

    #[test]
    fn rref_is_unique(a in vectors(4, 5), perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(), scales in prop::collection::vec(scalar().prop_filter("nonzero", |s| !s.is_zero()), 4)) {
        let s = canonicalize(5, a.clone()).unwrap();
        let shuffled: Vec<Vec<G>> = perm.iter().zip(&scales)
            .map(|(&k, c)| a[k].iter().map(|x| x * c).collect())
            .collect();
        prop_assert_eq!(canonicalize(5, shuffled).unwrap(), s.clone());
        prop_assert_eq!(canonicalize(5, s.basis().to_vec()).unwrap(), s);
    }

    #[test]
    fn conjugation_is_an_involution(a in vectors(3, 4)) {
        let s = canonicalize(4, a).unwrap();
        prop_assert_eq!(s.conj().conj(), s.clone());
        prop_assert_eq!(s.conj().dim(), s.dim());
    }

    #[test]
    fn min_poly_annihilates(m in square(4)) {
        let p = min_poly(&m).unwrap();
        prop_assert!(p.is_monic());
        prop_assert!(p.eval_matrix(&m).is_zero());
        let s = squarefree_part(&p);
        prop_assert!(p.div_rem(&s).1.is_zero());
    }

    #[test]
    fn kernel_is_annihilated(m in prop::collection::vec(scalar(), 12).prop_map(|d| DenseMatrix::from_flat(3, 4, d))) {
        let k = kernel(&m);
        prop_assert_eq!(k.dim() + Subspace::span(4, m.row_vecs()).dim(), 4);
        for b in k.basis() {
            prop_assert!(m.mul_vec(b).iter().all(G::is_zero));
        }
    }
}
