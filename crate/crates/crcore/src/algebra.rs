use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::model::CrModel;
use crate::CrError;

/// Regularity type of `v`: normalized by a maximal torus of `k₀` (I), only
/// its Levi intersection is (II), or neither (III).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegularityType {
    I,
    II,
    III,
}

impl fmt::Display for RegularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RegularityType::I => "I",
            RegularityType::II => "II",
            RegularityType::III => "III",
        };
        write!(f, "{s}")
    }
}

/// Witness for [`CRAlgebra::is_n_reductive`].
#[derive(Clone, Debug, PartialEq)]
pub struct NReductive<S> {
    pub holds: bool,
    pub nr: S,
    pub levi: S,
}

/// A subalgebra `v ⊆ k` with lazily computed, write-once derived data.
pub struct CRAlgebra<M: CrModel> {
    model: Arc<M>,
    v: M::Space,
    seed: u64,
    levi: OnceLock<Result<M::Space, CrError>>,
    nr: OnceLock<Result<M::Space, CrError>>,
    dims: OnceLock<(usize, usize)>,
}

impl<M: CrModel> Clone for CRAlgebra<M> {
    fn clone(&self) -> Self {
        CRAlgebra {
            model: self.model.clone(),
            v: self.v.clone(),
            seed: self.seed,
            levi: self.levi.clone(),
            nr: self.nr.clone(),
            dims: self.dims.clone(),
        }
    }
}

impl<M: CrModel> fmt::Debug for CRAlgebra<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CRAlgebra({}, dim v = {})", self.model.label(), self.model.dim(&self.v))
    }
}

impl<M: CrModel> CRAlgebra<M> {
    /// Fails unless `v` is closed under the bracket.
    pub fn new(model: Arc<M>, v: M::Space) -> Result<Self, CrError> {
        if !model.is_subalgebra(&v) {
            return Err(CrError::NotSubalgebra(format!("{v:?}")));
        }
        Ok(Self::new_unchecked(model, v))
    }

    pub(crate) fn new_unchecked(model: Arc<M>, v: M::Space) -> Self {
        CRAlgebra { model, v, seed: 0, levi: OnceLock::new(), nr: OnceLock::new(), dims: OnceLock::new() }
    }

    /// Seed used for randomized torus searches.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn model(&self) -> &Arc<M> {
        &self.model
    }

    pub fn v(&self) -> &M::Space {
        &self.v
    }

    pub fn dim(&self) -> usize {
        self.model.dim(&self.v)
    }

    pub fn conj(&self) -> M::Space {
        self.model.conj(&self.v)
    }

    /// `L(v) = v ∩ v̄`, verified to have `nr(L(v)) = 0`.
    pub fn levi_intersection(&self) -> Result<M::Space, CrError> {
        self.levi
            .get_or_init(|| {
                let l = self.model.meet(&self.v, &self.conj());
                let nr = self.model.nr(&l)?;
                if self.model.dim(&nr) != 0 {
                    return Err(CrError::Verification("v ∩ v̄ is not reductive".into()));
                }
                Ok(l)
            })
            .clone()
    }

    pub fn nr(&self) -> Result<M::Space, CrError> {
        self.nr.get_or_init(|| self.model.nr(&self.v)).clone()
    }

    /// `v = nr(v) ⊕ L(v)`.
    pub fn is_n_reductive(&self) -> Result<NReductive<M::Space>, CrError> {
        let nr = self.nr()?;
        let levi = self.levi_intersection()?;
        let m = &self.model;
        let holds = m.dim(&m.meet(&nr, &levi)) == 0 && m.dim(&nr) + m.dim(&levi) == self.dim();
        if holds && m.join(&nr, &levi) != self.v {
            return Err(CrError::Verification("nr(v) + L(v) differs from v despite matching dimensions".into()));
        }
        Ok(NReductive { holds, nr, levi })
    }

    /// `(dim v − dim L(v), dim k − dim(v + v̄))`.
    pub fn cr_dims(&self) -> (usize, usize) {
        *self.dims.get_or_init(|| {
            let m = &self.model;
            let cv = self.conj();
            let l = m.dim(&m.meet(&self.v, &cv));
            let s = m.dim(&m.join(&self.v, &cv));
            (self.dim() - l, m.ambient_dim() - s)
        })
    }

    pub fn is_totally_real(&self) -> bool {
        self.cr_dims().0 == 0
    }

    pub fn is_totally_complex(&self) -> bool {
        self.cr_dims().1 == 0
    }

    /// Real dimension of the orbit `K₀/L₀(v)`.
    pub fn manifold_dim(&self) -> usize {
        let (d, _) = self.cr_dims();
        self.model.ambient_dim() - (self.dim() - d)
    }

    /// `other` strengthens `self`: `self ⊆ other` and `L(self) = L(other)`.
    pub fn strengthens_to(&self, other: &M::Space) -> bool {
        let m = &self.model;
        if !m.contains(other, &self.v) {
            return false;
        }
        let lo = m.meet(other, &m.conj(other));
        lo == m.meet(&self.v, &self.conj())
    }

    /// Rank test on the conjugation-stable parts of `N_k(v)` and `N_k(L(v))`.
    pub fn regularity_type(&self) -> Result<RegularityType, CrError> {
        let m = &self.model;
        let rank = m.rank();
        let full_rank = |s: &M::Space| -> Result<bool, CrError> {
            let n = m.normalizer(s)?;
            let compact = m.meet(&n, &m.conj(&n));
            Ok(m.max_torus_dim(&compact, self.seed)? == rank)
        };
        if full_rank(&self.v)? {
            return Ok(RegularityType::I);
        }
        if full_rank(&self.levi_intersection()?)? {
            return Ok(RegularityType::II);
        }
        Ok(RegularityType::III)
    }
}

/// `v₂` strengthens `v₁`: `v₁ ⊆ v₂` and `L(v₁) = L(v₂)`.
pub fn strengthens<M: CrModel>(model: &M, v1: &M::Space, v2: &M::Space) -> bool {
    model.contains(v2, v1) && model.meet(v1, &model.conj(v1)) == model.meet(v2, &model.conj(v2))
}
