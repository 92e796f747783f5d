use crcore::CrModel;
use rayon::prelude::*;
use regularize::certify_parabolic;
use rootsys::{
    enumerate_parabolics, lie_closure_regular, parabolic_oracle, ClosureMode, ParabolicRootSet, RegularSubalgebra,
    RootError, RootSystem,
};

use crate::{classify_map, FibrationError, MapClassification};

/// `v ⊆ q` and `nr(v) ∩ L(q) = 0`, after certifying that `q` is parabolic.
pub fn par_membership<M: CrModel>(model: &M, v: &M::Space, q: &M::Space) -> Result<bool, FibrationError> {
    let cert = certify_parabolic(model, q)?;
    if !cert.passed() {
        return Err(FibrationError::NotParabolic(cert));
    }
    if !model.contains(q, v) {
        return Ok(false);
    }
    let levi = model.meet(q, &model.conj(q));
    let nr = model.nr(v)?;
    Ok(model.dim(&model.meet(&nr, &levi)) == 0)
}

/// Root-set form of [`par_membership`].
pub fn par_membership_regular(v: &RegularSubalgebra, q: &ParabolicRootSet) -> bool {
    v.roots().is_subset(q.q()) && v.nilpotent_roots().is_disjoint(q.qr())
}

fn check_subalgebra(sys: &RootSystem, v: &RegularSubalgebra) -> Result<(), FibrationError> {
    v.validate(sys)?;
    if !v.is_subalgebra(sys) {
        return Err(RootError::NotClosed("v".into()).into());
    }
    Ok(())
}

fn members(
    candidates: Vec<ParabolicRootSet>,
    v: &RegularSubalgebra,
    constraint: Option<&RegularSubalgebra>,
) -> Vec<ParabolicRootSet> {
    candidates
        .into_par_iter()
        .filter(|q| par_membership_regular(v, q) && constraint.is_none_or(|w| w.roots().is_subset(q.q())))
        .collect()
}

fn extremes(set: &[ParabolicRootSet], maximal: bool) -> Vec<ParabolicRootSet> {
    set.par_iter()
        .filter(|q| !set.iter().any(|p| p != *q && if maximal { p.contains(q) } else { q.contains(p) }))
        .cloned()
        .collect()
}

/// Inclusion-maximal elements of `Par(v)`, optionally among those
/// containing `w`. Sorted like [`enumerate_parabolics`].
pub fn maximal_par(
    sys: &RootSystem,
    v: &RegularSubalgebra,
    constraint: Option<&RegularSubalgebra>,
    rank_cap: usize,
) -> Result<Vec<ParabolicRootSet>, FibrationError> {
    check_subalgebra(sys, v)?;
    let par = members(enumerate_parabolics(sys, rank_cap)?, v, constraint);
    Ok(extremes(&par, true))
}

/// [`maximal_par`] over the brute-force parabolic list.
pub fn maximal_par_oracle(
    sys: &RootSystem,
    v: &RegularSubalgebra,
    constraint: Option<&RegularSubalgebra>,
) -> Result<Vec<ParabolicRootSet>, FibrationError> {
    check_subalgebra(sys, v)?;
    let par = members(parabolic_oracle(sys), v, constraint);
    Ok(extremes(&par, true))
}

/// Inclusion-minimal elements of `Par(v)`. Fails if some minimal `q` has
/// `nr(v) ⊄ nr(q)` or two minimal Levi root sets are not Weyl-conjugate.
pub fn minimal_par(
    sys: &RootSystem,
    v: &RegularSubalgebra,
    rank_cap: usize,
) -> Result<Vec<ParabolicRootSet>, FibrationError> {
    check_subalgebra(sys, v)?;
    let par = members(enumerate_parabolics(sys, rank_cap)?, v, None);
    let minimal = extremes(&par, false);
    check_minimal(sys, v, &minimal)?;
    Ok(minimal)
}

/// [`minimal_par`] over the brute-force parabolic list.
pub fn minimal_par_oracle(sys: &RootSystem, v: &RegularSubalgebra) -> Result<Vec<ParabolicRootSet>, FibrationError> {
    check_subalgebra(sys, v)?;
    let par = members(parabolic_oracle(sys), v, None);
    let minimal = extremes(&par, false);
    check_minimal(sys, v, &minimal)?;
    Ok(minimal)
}

fn check_minimal(sys: &RootSystem, v: &RegularSubalgebra, minimal: &[ParabolicRootSet]) -> Result<(), FibrationError> {
    let nr = v.nilpotent_roots();
    for q in minimal {
        if !nr.is_subset(q.qn()) {
            return Err(FibrationError::Verification(format!("nr(v) is not contained in nr(q) for {q:?}")));
        }
    }
    if let Some(first) = minimal.first() {
        let from = sys.mask_of(first.qr())?;
        for q in &minimal[1..] {
            let to = sys.mask_of(q.qr())?;
            if sys.conjugating_word(from, to).is_none() {
                return Err(FibrationError::Verification(format!(
                    "Levi roots of {first:?} and {q:?} are not conjugate"
                )));
            }
        }
    }
    Ok(())
}

/// Outcome of [`deployment_verify`].
#[derive(Clone, Debug, PartialEq)]
pub struct Deployment {
    /// `lie(nr(v) + L(q))`, equal to `q` on success.
    pub algebra_closure: RegularSubalgebra,
    /// The `L(q)`-module generated by `nr(v) + L(q)`.
    pub module_closure: RegularSubalgebra,
    pub generated_as_module: bool,
    pub classification: MapClassification<RegularSubalgebra>,
}

/// Checks that `q ∈ Par(v)` is generated by `nr(v) + L(q)` as a Lie algebra
/// and that `(k₀, v) → (k₀, q)` is a deployment. `v` must be n-reductive.
pub fn deployment_verify(
    sys: &RootSystem,
    v: &RegularSubalgebra,
    q: &ParabolicRootSet,
) -> Result<Deployment, FibrationError> {
    check_subalgebra(sys, v)?;
    if !par_membership_regular(v, q) {
        return Err(FibrationError::NotInPar);
    }
    let nr = v.nilpotent_roots();
    let reductive_sum =
        v.real_part().join(&RegularSubalgebra::from_parts(exactlin::Subspace::zero(sys.dim()), nr.clone()));
    if reductive_sum != *v {
        return Err(FibrationError::Verification("v is not n-reductive".into()));
    }
    let levi = q.levi(sys);
    let start = RegularSubalgebra::from_parts(levi.toral().clone(), levi.roots().union(&nr).cloned().collect());
    let algebra_closure = lie_closure_regular(sys, &start, &ClosureMode::Algebra)?;
    let target = q.subalgebra(sys);
    if algebra_closure != target {
        let missing: Vec<String> = target.roots().difference(algebra_closure.roots()).map(|r| r.to_string()).collect();
        return Err(FibrationError::Verification(format!("lie(nr(v) + L(q)) misses root spaces {missing:?}")));
    }
    let module_closure = lie_closure_regular(sys, &start, &ClosureMode::Module(levi))?;
    let classification = classify_map(sys, v, &target);
    if !classification.is_deployment {
        return Err(FibrationError::Verification(format!("map is not a deployment: {:?}", classification.flags())));
    }
    Ok(Deployment { generated_as_module: module_closure == target, algebra_closure, module_closure, classification })
}
