//! Seeded random generation of regular subalgebras.

use exactlin::{GaussRational as G, Subspace};
use rand::Rng;

use crate::regular::{lie_closure_regular, ClosureMode, RegularSubalgebra};
use crate::system::{Mask, RootSystem};

/// Random root mask, each root included with probability `p`.
pub fn random_mask<R: Rng>(sys: &RootSystem, rng: &mut R, p: f64) -> Mask {
    (0..sys.len()).filter(|_| rng.gen_bool(p)).fold(0u128, |m, i| m | (1u128 << i))
}

/// Random subspace of the Cartan spanned by small integer combinations.
pub fn random_toral<R: Rng>(sys: &RootSystem, rng: &mut R, max_dim: usize) -> Subspace {
    let k = rng.gen_range(0..=max_dim.min(sys.rank()));
    let basis = sys.cartan().basis().to_vec();
    let vectors = (0..k)
        .map(|_| {
            let mut v = vec![G::zero(); sys.dim()];
            for b in &basis {
                let c = G::from_ints(rng.gen_range(-2..=2), rng.gen_range(-1..=1));
                for (x, y) in v.iter_mut().zip(b) {
                    *x = &*x + &(&c * y);
                }
            }
            v
        })
        .collect();
    Subspace::span(sys.dim(), vectors)
}

/// Random regular subalgebra: the Lie closure of a random toral part and
/// random root set.
pub fn random_regular<R: Rng>(sys: &RootSystem, rng: &mut R, p: f64) -> RegularSubalgebra {
    let toral = random_toral(sys, rng, 2);
    let roots = sys.set_of(random_mask(sys, rng, p));
    lie_closure_regular(sys, &RegularSubalgebra::from_parts(toral, roots), &ClosureMode::Algebra)
        .expect("closure of roots of the system")
}

/// Random closed set with no pair of opposite roots.
pub fn random_nilpotent<R: Rng>(sys: &RootSystem, rng: &mut R, p: f64) -> Mask {
    let pos = sys.positive_mask();
    let mut m = sys.close_mask(random_mask(sys, rng, p) & pos);
    // a random Weyl conjugate keeps the set closed and purely nilpotent
    for _ in 0..rng.gen_range(0..3 * sys.rank()) {
        m = sys.reflect_mask(rng.gen_range(0..sys.rank()), m);
    }
    m
}
