//! Exact linear algebra over the Gaussian rationals `Q(i)`.
//!
//! Subspaces are kept in reduced row-echelon form with leading ones, so two
//! subspaces are equal exactly when their canonical bases are equal.

mod gauss;
mod matrix;
mod poly;
mod rat;
mod subspace;

pub use gauss::GaussRational;
pub use matrix::DenseMatrix;
pub use poly::{min_poly, rational_roots, squarefree_part, Poly};
pub use rat::{ParseRatError, Rat};
pub use subspace::{kernel, kernel_of_rows, rref_rows, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ragged rows")]
    Ragged,
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}

/// Shorthand for a vector of scalars.
pub type Vector = Vec<GaussRational>;

/// Canonical span of `vectors`; errors on ragged input.
pub fn canonicalize(ambient: usize, vectors: Vec<Vector>) -> Result<Subspace, LinError> {
    Subspace::canonicalize(ambient, vectors)
}

/// Coefficients of `v` in the canonical basis of `s`, if `v ∈ s`.
pub fn solve_membership(v: &[GaussRational], s: &Subspace) -> Option<Vector> {
    s.solve_membership(v)
}
