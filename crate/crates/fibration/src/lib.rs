//! Maps between CR algebras `(k₀, v) → (k₀, e)`, the parabolic set
//! `Par(v)`, and the structures built from its elements.

mod classify;
mod lift;
mod par;
mod zroots;

pub use classify::{classify_map, classify_matrix_map, MapClassification, MapWitnesses};
pub use lift::{
    combine_parabolics, homotopic_characteristic_matrix, homotopic_characteristic_regular, lift,
    HomotopicCharacteristic, Lift,
};
pub use par::{
    deployment_verify, maximal_par, maximal_par_oracle, minimal_par, minimal_par_oracle, par_membership,
    par_membership_regular, Deployment,
};
pub use zroots::{z_root_decomposition, ZRoot, ZRootDecomposition};

use crcore::CrError;
use matrixlie::MatrixLieError;
use regularize::Certificate;
use rootsys::RootError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FibrationError {
    #[error(transparent)]
    Cr(#[from] CrError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Matrix(#[from] MatrixLieError),
    #[error("not parabolic: {0}")]
    NotParabolic(Certificate),
    #[error("q is not in Par(v)")]
    NotInPar,
    #[error("subalgebras live in different ambient algebras")]
    AmbientMismatch,
    #[error("check failed: {0}")]
    Verification(String),
}
