//! Parabolic regularization: iterate `v_{m+1} = N_k(nr(v_m))` until the
//! nilpotent ideals stop growing, then certify that the limit is parabolic.

use std::fmt;

use crcore::{CrError, CrModel, MatrixModel};
use matrixlie::Subalg;
use rootsys::{ParabolicRootSet, RegularSubalgebra, RootError, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegularizeError {
    #[error("step {step}: {source}")]
    Step { step: usize, source: CrError },
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("step {step}: sequence is not non-decreasing")]
    Monotonicity { step: usize },
    #[error("freeze rule violated after step {step}")]
    Freeze { step: usize },
    #[error("no stabilization within {0} steps")]
    NotStabilized(usize),
    #[error("limit is not parabolic: {0}")]
    Certificate(Certificate),
    #[error("not a subalgebra")]
    NotSubalgebra,
}

/// Structural checks for a parabolic subalgebra `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    /// `N_k(q) = q`.
    pub self_normalizing: bool,
    /// `q + σ(q) = k`.
    pub q_plus_conj_is_k: bool,
    /// `k = nr(q) ⊕ L(q) ⊕ σ(nr(q))`.
    pub triple_decomposition: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.self_normalizing && self.q_plus_conj_is_k && self.triple_decomposition
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "self_normalizing={} q_plus_conj_is_k={} triple_decomposition={}",
            self.self_normalizing, self.q_plus_conj_is_k, self.triple_decomposition
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Step<S> {
    pub v: S,
    pub nr: S,
    pub dim: usize,
    pub nr_dim: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicDescriptor<S> {
    pub q: S,
    pub certificate: Certificate,
}

/// `steps[0] = v`, `steps[m+1] = N(nr(steps[m]))`, ending with one
/// confirming step after the first `m` with `nr(v_m) = nr(v_{m−1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularizationChain<S> {
    pub steps: Vec<Step<S>>,
    /// First index `m ≥ 1` with `nr(v_m) = nr(v_{m−1})`.
    pub stabilized_at: usize,
    pub result: ParabolicDescriptor<S>,
}

impl<S> RegularizationChain<S> {
    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.dim).collect()
    }

    pub fn nr_dims(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.nr_dim).collect()
    }
}

/// Evaluates the three parabolic conditions.
pub fn certify_parabolic<M: CrModel>(model: &M, q: &M::Space) -> Result<Certificate, CrError> {
    let full = model.ambient_dim();
    let self_normalizing = model.normalizer(q)? == *q;
    let cq = model.conj(q);
    let q_plus_conj_is_k = model.dim(&model.join(q, &cq)) == full;
    let nr = model.nr(q)?;
    let levi = model.meet(q, &cq);
    let cnr = model.conj(&nr);
    let sum = model.join(&model.join(&nr, &levi), &cnr);
    let triple_decomposition = model.dim(&nr) * 2 + model.dim(&levi) == full && model.dim(&sum) == full;
    Ok(Certificate { self_normalizing, q_plus_conj_is_k, triple_decomposition })
}

/// Runs the chain on any backend and certifies the limit.
pub fn regularize<M: CrModel>(model: &M, v: &M::Space) -> Result<RegularizationChain<M::Space>, RegularizeError> {
    if !model.is_subalgebra(v) {
        return Err(RegularizeError::NotSubalgebra);
    }
    let bound = model.ambient_dim() + 2;
    let step_of = |m: usize, v: M::Space| -> Result<Step<M::Space>, RegularizeError> {
        let nr = model.nr(&v).map_err(|source| RegularizeError::Step { step: m, source })?;
        Ok(Step { dim: model.dim(&v), nr_dim: model.dim(&nr), v, nr })
    };
    let mut steps = vec![step_of(0, v.clone())?];
    let mut stabilized_at = None;
    while steps.len() <= bound {
        let m = steps.len();
        let prev = &steps[m - 1];
        let next = model.normalizer(&prev.nr).map_err(|source| RegularizeError::Step { step: m, source })?;
        let step = step_of(m, next)?;
        if !model.contains(&step.v, &prev.v) || !model.contains(&step.nr, &prev.nr) {
            return Err(RegularizeError::Monotonicity { step: m });
        }
        let frozen = step.nr == prev.nr;
        if let Some(s) = stabilized_at {
            if step.v != prev.v || !frozen {
                return Err(RegularizeError::Freeze { step: s });
            }
            steps.push(step);
            break;
        }
        if frozen {
            stabilized_at = Some(m);
        }
        steps.push(step);
    }
    let stabilized_at = stabilized_at.ok_or(RegularizeError::NotStabilized(bound))?;
    let q = steps.last().expect("nonempty").v.clone();
    let certificate =
        certify_parabolic(model, &q).map_err(|source| RegularizeError::Step { step: steps.len(), source })?;
    if !certificate.passed() {
        return Err(RegularizeError::Certificate(certificate));
    }
    Ok(RegularizationChain { steps, stabilized_at, result: ParabolicDescriptor { q, certificate } })
}

/// Root-data backend; also returns the limit as a parabolic root set, which
/// checks `Q ∪ −Q = R` and closedness.
pub fn regularize_regular(
    sys: &RootSystem,
    v: &RegularSubalgebra,
) -> Result<(RegularizationChain<RegularSubalgebra>, ParabolicRootSet), RegularizeError> {
    v.validate(sys)?;
    let chain = regularize(sys, v)?;
    let q = ParabolicRootSet::new(sys, chain.result.q.roots().clone())?;
    if chain.result.q.toral() != sys.cartan() {
        return Err(RegularizeError::Certificate(chain.result.certificate));
    }
    Ok((chain, q))
}

/// Matrix backend.
pub fn regularize_matrix(model: &MatrixModel, v: &Subalg) -> Result<RegularizationChain<Subalg>, RegularizeError> {
    regularize(model, v)
}
