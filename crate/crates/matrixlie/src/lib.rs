//! Matrix Lie algebras over the Gaussian rationals.
//!
//! An [`AmbientAlgebra`] is a bracket-closed span `k ⊆ gl_n(Q(i))` that is
//! stable under the compact conjugation `X ↦ −X̄ᵀ`. Subalgebras are
//! subspaces of its coordinate space; every structural computation reduces
//! to one exact linear solve and is verified before it is returned.

mod ambient;
mod jc;
mod subalg;

use exactlin::LinError;

pub use ambient::{linear_solutions, AmbientAlgebra, Coords};
pub use jc::{is_semisimple, jordan_chevalley, JCDecomposition};
pub use subalg::{
    bracket_closure, centralizer, centralizer_of, maximal_torus, nilradical_nr, normalizer, parabolic_from_element,
    radical, splittable_evidence, SplitEvidence, Subalg,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixLieError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("matrix is not in the ambient algebra {0}")]
    NotInAmbient(String),
    #[error("span is not closed under the bracket: {0}")]
    NotClosed(String),
    #[error("span is not stable under the compact conjugation")]
    SigmaNotPreserved,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no suitable random element after {0} attempts")]
    RetryBudget(usize),
    #[error("spectrum of ad(A) is not of the form i·λ with λ rational: {0}")]
    Spectrum(String),
}
