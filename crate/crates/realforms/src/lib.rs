//! Classical real forms `g₀` in standard matrix presentations, the Cartan
//! involution machinery on roots, and the CR algebras `(k₀, f ∩ k)` of
//! minimal orbits in flag manifolds.

mod form;
mod roots;
mod spec;
mod theta;

pub use form::{build_real_form, compact_conjugation, AdaptedPair, Involution, RealForm, RootData};
pub use roots::{classify_roots, RootClassification, RootTag};
pub use spec::{RealFormSpec, MAX_MATRIX_SIZE};
pub use theta::{
    build_minimal_orbit, flag_parabolic, theta_sets, type_criteria, MinimalOrbit, ThetaSets, TypeCriteria, Witness,
};

use crcore::CrError;
use matrixlie::MatrixLieError;
use rootsys::RootError;

#[derive(Debug, thiserror::Error)]
pub enum RealFormError {
    #[error("unsupported real form: {0}")]
    Unsupported(String),
    #[error("cannot parse real form {0:?}")]
    Parse(String),
    #[error("invalid crosses: {0}")]
    Crosses(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Matrix(#[from] MatrixLieError),
    #[error(transparent)]
    Cr(#[from] CrError),
    #[error("internal check failed: {0}")]
    Internal(String),
}
