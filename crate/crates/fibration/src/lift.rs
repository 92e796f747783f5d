use crcore::{strengthens, CrModel};
use exactlin::Subspace;
use matrixlie::{centralizer, maximal_torus, Subalg};
use regularize::{certify_parabolic, ParabolicDescriptor};
use rootsys::{root_vector, ParabolicRootSet, RegularSubalgebra, RootSystem};

use crate::{par_membership, FibrationError};

/// `v_q = v + nr(q)` with the checks made along the way.
#[derive(Clone, Debug, PartialEq)]
pub struct Lift<S> {
    pub v_q: S,
    pub nr: S,
    pub levi: S,
    /// Whether the input `v` was n-reductive; if so the lift is too and
    /// has the same Levi part.
    pub n_reductive: bool,
    pub strengthens: bool,
}

fn levi_of<M: CrModel>(model: &M, s: &M::Space) -> M::Space {
    model.meet(s, &model.conj(s))
}

fn is_n_reductive<M: CrModel>(model: &M, s: &M::Space) -> Result<bool, FibrationError> {
    Ok(model.join(&levi_of(model, s), &model.nr(s)?) == *s)
}

pub fn lift<M: CrModel>(model: &M, v: &M::Space, q: &M::Space) -> Result<Lift<M::Space>, FibrationError> {
    if !par_membership(model, v, q)? {
        return Err(FibrationError::NotInPar);
    }
    let nr_q = model.nr(q)?;
    let v_q = model.join(v, &nr_q);
    let nr = model.nr(&v_q)?;
    if nr != model.join(&model.nr(v)?, &nr_q) {
        return Err(FibrationError::Verification("nr(v_q) differs from nr(v) + nr(q)".into()));
    }
    let levi = levi_of(model, &v_q);
    let n_reductive = is_n_reductive(model, v)?;
    let mut strengthened = false;
    if n_reductive {
        if levi != levi_of(model, v) {
            return Err(FibrationError::Verification("L(v_q) differs from L(v)".into()));
        }
        if !is_n_reductive(model, &v_q)? {
            return Err(FibrationError::Verification("v_q is not n-reductive".into()));
        }
        strengthened = strengthens(model, v, &v_q);
        if !strengthened {
            return Err(FibrationError::Verification("v_q does not strengthen v".into()));
        }
    }
    Ok(Lift { v_q, nr, levi, n_reductive, strengthens: strengthened })
}

/// `nr(q₁) + q₁ ∩ q₂` for `q₁, q₂ ∈ Par(v)`, certified and checked to lie in `Par(v)`.
pub fn combine_parabolics<M: CrModel>(
    model: &M,
    v: &M::Space,
    q1: &M::Space,
    q2: &M::Space,
) -> Result<ParabolicDescriptor<M::Space>, FibrationError> {
    if !par_membership(model, v, q1)? || !par_membership(model, v, q2)? {
        return Err(FibrationError::NotInPar);
    }
    let q = model.join(&model.nr(q1)?, &model.meet(q1, q2));
    let certificate = certify_parabolic(model, &q)?;
    if !certificate.passed() {
        return Err(FibrationError::NotParabolic(certificate));
    }
    if !par_membership(model, v, &q)? {
        return Err(FibrationError::Verification("combined parabolic is not in Par(v)".into()));
    }
    Ok(ParabolicDescriptor { q, certificate })
}

/// `c_q = rank s_q − dim(τ ∩ s_q)` with `s_q = [L(q), L(q)]` and `τ` a
/// maximal torus of the Levi part `m` of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopicCharacteristic {
    pub rank_s: usize,
    pub torus_meet_s: usize,
    pub c_q: usize,
    /// `t ∩ s_q ⊆ τ` for a Cartan subalgebra `t ⊇ τ`.
    pub cartan_part_in_torus: bool,
    /// `t = τ + z` with `z` the center of `L(q)`.
    pub cartan_is_torus_plus_center: bool,
}

pub fn homotopic_characteristic_regular(
    sys: &RootSystem,
    m: &RegularSubalgebra,
    q: &ParabolicRootSet,
) -> Result<HomotopicCharacteristic, FibrationError> {
    if m.conj() != *m || !m.is_subalgebra(sys) {
        return Err(FibrationError::Verification("m is not a conjugation-stable subalgebra".into()));
    }
    let tau = m.toral();
    let s_cartan = Subspace::span(sys.dim(), q.qr().iter().map(root_vector).collect());
    let torus_meet_s = tau.meet(&s_cartan).dim();
    let eqs: Vec<_> = q.qr().iter().map(root_vector).collect();
    let center = exactlin::kernel_of_rows(eqs, sys.dim()).meet(sys.cartan());
    Ok(HomotopicCharacteristic {
        rank_s: s_cartan.dim(),
        torus_meet_s,
        c_q: s_cartan.dim() - torus_meet_s,
        cartan_part_in_torus: tau.contains(&s_cartan),
        cartan_is_torus_plus_center: tau.join(&center) == *sys.cartan(),
    })
}

/// Matrix form; tori are drawn with `seed`.
pub fn homotopic_characteristic_matrix(
    m: &Subalg,
    q: &Subalg,
    seed: u64,
) -> Result<HomotopicCharacteristic, FibrationError> {
    if m.ambient() != q.ambient() {
        return Err(FibrationError::AmbientMismatch);
    }
    let levi = q.meet(&q.sigma());
    let s = levi.bracket_space(&levi);
    let tau = maximal_torus(m, seed)?;
    let rank_s = maximal_torus(&s, seed)?.dim();
    let torus_meet_s = tau.meet(&s).dim();
    let cartan = maximal_torus(&centralizer(&tau), seed)?;
    let center = centralizer(&levi).meet(&levi);
    Ok(HomotopicCharacteristic {
        rank_s,
        torus_meet_s,
        c_q: rank_s.saturating_sub(torus_meet_s),
        cartan_part_in_torus: tau.contains(&cartan.meet(&s)),
        cartan_is_torus_plus_center: tau.join(&center) == cartan,
    })
}
