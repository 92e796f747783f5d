use std::fmt::Debug;
use std::sync::{Arc, OnceLock};

use matrixlie::{AmbientAlgebra, Subalg};
use rootsys::{lie_closure_regular, ClosureMode, RegularSubalgebra, RootSystem};

use crate::CrError;

/// Lattice and structure operations on subspaces of `k` needed by the CR
/// layer.
pub trait CrModel: Send + Sync {
    type Space: Clone + PartialEq + Debug + Send + Sync;

    fn label(&self) -> String;
    /// `dim_C k`.
    fn ambient_dim(&self) -> usize;
    fn full(&self) -> Self::Space;
    fn zero(&self) -> Self::Space;
    fn dim(&self, s: &Self::Space) -> usize;
    fn meet(&self, a: &Self::Space, b: &Self::Space) -> Self::Space;
    /// Vector-space sum.
    fn join(&self, a: &Self::Space, b: &Self::Space) -> Self::Space;
    fn contains(&self, a: &Self::Space, b: &Self::Space) -> bool;
    /// Image under the compact conjugation.
    fn conj(&self, s: &Self::Space) -> Self::Space;
    /// Lie subalgebra generated.
    fn lie(&self, s: &Self::Space) -> Self::Space;
    fn is_subalgebra(&self, s: &Self::Space) -> bool;
    /// Ideal of nilpotent elements of the radical.
    fn nr(&self, s: &Self::Space) -> Result<Self::Space, CrError>;
    fn normalizer(&self, s: &Self::Space) -> Result<Self::Space, CrError>;
    /// Dimension of a maximal torus of a conjugation-stable reductive subalgebra.
    fn max_torus_dim(&self, s: &Self::Space, seed: u64) -> Result<usize, CrError>;
    /// Rank of `k`.
    fn rank(&self) -> usize;
}

impl CrModel for RootSystem {
    type Space = RegularSubalgebra;

    fn label(&self) -> String {
        RootSystem::label(self)
    }

    fn ambient_dim(&self) -> usize {
        self.cartan().dim() + self.len()
    }

    fn full(&self) -> RegularSubalgebra {
        RegularSubalgebra::full(self)
    }

    fn zero(&self) -> RegularSubalgebra {
        RegularSubalgebra::zero(self)
    }

    fn dim(&self, s: &RegularSubalgebra) -> usize {
        s.dim()
    }

    fn meet(&self, a: &RegularSubalgebra, b: &RegularSubalgebra) -> RegularSubalgebra {
        a.meet(b)
    }

    fn join(&self, a: &RegularSubalgebra, b: &RegularSubalgebra) -> RegularSubalgebra {
        a.join(b)
    }

    fn contains(&self, a: &RegularSubalgebra, b: &RegularSubalgebra) -> bool {
        a.contains(b)
    }

    fn conj(&self, s: &RegularSubalgebra) -> RegularSubalgebra {
        s.conj()
    }

    fn lie(&self, s: &RegularSubalgebra) -> RegularSubalgebra {
        lie_closure_regular(self, s, &ClosureMode::Algebra).expect("roots of the system")
    }

    fn is_subalgebra(&self, s: &RegularSubalgebra) -> bool {
        s.is_subalgebra(self)
    }

    fn nr(&self, s: &RegularSubalgebra) -> Result<RegularSubalgebra, CrError> {
        if !s.is_subalgebra(self) {
            return Err(CrError::NotSubalgebra(format!("{s:?}")));
        }
        Ok(RegularSubalgebra::from_parts(exactlin::Subspace::zero(self.dim()), s.nilpotent_roots()))
    }

    fn normalizer(&self, s: &RegularSubalgebra) -> Result<RegularSubalgebra, CrError> {
        Ok(rootsys::normalizer(self, s)?)
    }

    fn max_torus_dim(&self, s: &RegularSubalgebra, _seed: u64) -> Result<usize, CrError> {
        if s.conj() != *s {
            return Err(CrError::Verification("torus requested for a non-conjugation-stable subalgebra".into()));
        }
        // the toral part contains every coroot of V = −V, so it is a Cartan subalgebra
        Ok(s.toral().dim())
    }

    fn rank(&self) -> usize {
        self.cartan().dim()
    }
}

/// Matrix backend over an [`AmbientAlgebra`].
pub struct MatrixModel {
    ambient: Arc<AmbientAlgebra>,
    rank: OnceLock<usize>,
}

impl MatrixModel {
    pub fn new(ambient: Arc<AmbientAlgebra>) -> Self {
        MatrixModel { ambient, rank: OnceLock::new() }
    }

    pub fn ambient(&self) -> &Arc<AmbientAlgebra> {
        &self.ambient
    }
}

impl CrModel for MatrixModel {
    type Space = Subalg;

    fn label(&self) -> String {
        self.ambient.label().to_string()
    }

    fn ambient_dim(&self) -> usize {
        self.ambient.dim()
    }

    fn full(&self) -> Subalg {
        Subalg::full(self.ambient.clone())
    }

    fn zero(&self) -> Subalg {
        Subalg::zero(self.ambient.clone())
    }

    fn dim(&self, s: &Subalg) -> usize {
        s.dim()
    }

    fn meet(&self, a: &Subalg, b: &Subalg) -> Subalg {
        a.meet(b)
    }

    fn join(&self, a: &Subalg, b: &Subalg) -> Subalg {
        a.join(b)
    }

    fn contains(&self, a: &Subalg, b: &Subalg) -> bool {
        a.contains(b)
    }

    fn conj(&self, s: &Subalg) -> Subalg {
        s.sigma()
    }

    fn lie(&self, s: &Subalg) -> Subalg {
        let mut cur = s.clone();
        loop {
            let next = cur.join(&cur.bracket_space(&cur));
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    fn is_subalgebra(&self, s: &Subalg) -> bool {
        s.is_bracket_closed()
    }

    fn nr(&self, s: &Subalg) -> Result<Subalg, CrError> {
        Ok(matrixlie::nilradical_nr(s)?)
    }

    fn normalizer(&self, s: &Subalg) -> Result<Subalg, CrError> {
        Ok(matrixlie::normalizer(s))
    }

    fn max_torus_dim(&self, s: &Subalg, seed: u64) -> Result<usize, CrError> {
        Ok(matrixlie::maximal_torus(s, seed)?.dim())
    }

    fn rank(&self) -> usize {
        *self.rank.get_or_init(|| {
            matrixlie::maximal_torus(&Subalg::full(self.ambient.clone()), 0x5eed)
                .expect("the ambient algebra is the complexification of a compact algebra")
                .dim()
        })
    }
}
