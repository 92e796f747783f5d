//! CR algebras `(k₀, v)`: a complex subalgebra `v` of the complexification
//! `k` of a compact Lie algebra `k₀`, analyzed through the compact
//! conjugation `σ`.
//!
//! Everything is written once against [`CrModel`], which is implemented by
//! the matrix backend ([`MatrixModel`]) and by the root-data backend
//! ([`rootsys::RootSystem`]).

mod algebra;
mod model;

pub use algebra::{strengthens, CRAlgebra, NReductive, RegularityType};
pub use model::{CrModel, MatrixModel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrError {
    #[error(transparent)]
    Root(#[from] rootsys::RootError),
    #[error(transparent)]
    Matrix(#[from] matrixlie::MatrixLieError),
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("verification failed: {0}")]
    Verification(String),
}
