use std::fmt;

use exactlin::{kernel_of_rows, DenseMatrix, GaussRational as G, Subspace};

use crate::MatrixLieError;

/// Coordinates with respect to the canonical basis of an ambient algebra.
pub type Coords = Vec<G>;

type Sparse = Vec<(usize, G)>;

/// A bracket-closed, conjugation-stable span `k ⊆ gl_n`.
///
/// The basis is the reduced row-echelon basis of `k` inside the flattened
/// `n²` entries, so the coordinates of `X ∈ k` are its entries at the pivot
/// positions.
#[derive(Clone)]
pub struct AmbientAlgebra {
    label: String,
    n: usize,
    space: Subspace,
    basis: Vec<DenseMatrix>,
    structure: Vec<Vec<Sparse>>,
    sigma: Vec<Coords>,
}

impl fmt::Debug for AmbientAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} in gl{})", self.label, self.dim(), self.n)
    }
}

impl PartialEq for AmbientAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.space == o.space
    }
}

impl Eq for AmbientAlgebra {}

fn sparse(v: Coords) -> Sparse {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

fn solution_space(n: usize, conditions: impl Fn(&DenseMatrix) -> DenseMatrix) -> Subspace {
    // conditions is linear; evaluate it on unit matrices to get its columns
    let images: Vec<Vec<G>> = (0..n * n).map(|k| conditions(&DenseMatrix::unit(n, k / n, k % n)).into_flat()).collect();
    let m = images.first().map_or(0, Vec::len);
    let rows: Vec<Vec<G>> = (0..m).map(|r| images.iter().map(|c| c[r].clone()).collect()).collect();
    kernel_of_rows(rows, n * n)
}

/// Basis of `{X ∈ gl_n : conditions(X) = 0}` for a linear map `conditions`.
pub fn linear_solutions(n: usize, conditions: impl Fn(&DenseMatrix) -> DenseMatrix) -> Vec<DenseMatrix> {
    solution_space(n, conditions).basis().iter().map(|v| DenseMatrix::from_flat(n, n, v.clone())).collect()
}

impl AmbientAlgebra {
    /// Span of the generators; fails unless it is closed under the bracket
    /// and the compact conjugation.
    pub fn new(label: impl Into<String>, n: usize, generators: Vec<DenseMatrix>) -> Result<Self, MatrixLieError> {
        for g in &generators {
            if g.rows() != n || g.cols() != n {
                return Err(MatrixLieError::Lin(exactlin::LinError::DimensionMismatch {
                    expected: n,
                    found: g.rows(),
                }));
            }
        }
        let space = Subspace::span(n * n, generators.into_iter().map(DenseMatrix::into_flat).collect());
        Self::from_space(label.into(), n, space)
    }

    fn from_space(label: String, n: usize, space: Subspace) -> Result<Self, MatrixLieError> {
        let basis: Vec<DenseMatrix> = space.basis().iter().map(|v| DenseMatrix::from_flat(n, n, v.clone())).collect();
        let d = basis.len();
        let mut structure = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in i + 1..d {
                let b = basis[i].bracket(&basis[j]);
                let c = space
                    .solve_membership(b.as_flat())
                    .ok_or_else(|| MatrixLieError::NotClosed(format!("[b{i}, b{j}]")))?;
                let neg: Coords = c.iter().map(|x| -x).collect();
                structure[i][j] = sparse(c);
                structure[j][i] = sparse(neg);
            }
        }
        let sigma = basis
            .iter()
            .map(|b| {
                space.solve_membership(b.conj_transpose().neg().as_flat()).ok_or(MatrixLieError::SigmaNotPreserved)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AmbientAlgebra { label, n, space, basis, structure, sigma })
    }

    /// Solutions of the given linear conditions on `n × n` matrices.
    pub fn from_conditions(
        label: impl Into<String>,
        n: usize,
        conditions: impl Fn(&DenseMatrix) -> DenseMatrix,
    ) -> Result<Self, MatrixLieError> {
        Self::from_space(label.into(), n, solution_space(n, conditions))
    }

    pub fn gl(n: usize) -> Self {
        Self::from_space(format!("gl{n}"), n, Subspace::full(n * n)).expect("gl_n")
    }

    pub fn sl(n: usize) -> Self {
        Self::from_conditions(format!("sl{n}"), n, |x| DenseMatrix::from_flat(1, 1, vec![x.trace()])).expect("sl_n")
    }

    /// `{X : XᵀS + SX = 0}` for a symmetric `S`.
    pub fn so_form(label: impl Into<String>, s: &DenseMatrix) -> Result<Self, MatrixLieError> {
        let s = s.clone();
        Self::from_conditions(label, s.rows(), move |x| x.transpose().mul(&s).add(&s.mul(x)))
    }

    /// `{X : XᵀΩ + ΩX = 0}` for a skew `Ω`.
    pub fn sp_form(label: impl Into<String>, omega: &DenseMatrix) -> Result<Self, MatrixLieError> {
        Self::so_form(label, omega)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Matrix size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[DenseMatrix] {
        &self.basis
    }

    /// `k` as a subspace of the flattened matrix space.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn contains_matrix(&self, m: &DenseMatrix) -> bool {
        m.rows() == self.n && m.cols() == self.n && self.space.contains_vector(m.as_flat())
    }

    pub fn coords(&self, m: &DenseMatrix) -> Option<Coords> {
        if m.rows() != self.n || m.cols() != self.n {
            return None;
        }
        self.space.solve_membership(m.as_flat())
    }

    pub fn coords_checked(&self, m: &DenseMatrix) -> Result<Coords, MatrixLieError> {
        self.coords(m).ok_or_else(|| MatrixLieError::NotInAmbient(self.label.clone()))
    }

    pub fn matrix(&self, c: &[G]) -> DenseMatrix {
        DenseMatrix::from_flat(self.n, self.n, self.space.element(c))
    }

    pub fn bracket(&self, x: &[G], y: &[G]) -> Coords {
        let d = self.dim();
        let mut out = vec![G::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in &self.structure[i][j] {
                    out[*k] += &(&c * s);
                }
            }
        }
        out
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Coords {
        let mut out = vec![G::zero(); self.dim()];
        for (k, s) in &self.structure[i][j] {
            out[*k] = s.clone();
        }
        out
    }

    /// The compact conjugation `X ↦ −X̄ᵀ` in coordinates.
    pub fn sigma(&self, x: &[G]) -> Coords {
        let mut out = vec![G::zero(); self.dim()];
        for (xi, s) in x.iter().zip(&self.sigma) {
            if xi.is_zero() {
                continue;
            }
            let c = xi.conj();
            for (o, v) in out.iter_mut().zip(s) {
                if !v.is_zero() {
                    *o += &(&c * v);
                }
            }
        }
        out
    }

    pub fn sigma_space(&self, s: &Subspace) -> Subspace {
        s.map(self.dim(), |v| self.sigma(v))
    }

    /// `ad(x)` as a `dim × dim` matrix acting on coordinates.
    pub fn ad(&self, x: &[G]) -> DenseMatrix {
        let d = self.dim();
        let mut m = DenseMatrix::zeros(d, d);
        let cols: Vec<Coords> = (0..d).map(|j| self.bracket(x, &self.unit(j))).collect();
        let mut flat = m.clone().into_flat();
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                flat[i * d + j] = v.clone();
            }
        }
        m = DenseMatrix::from_flat(d, d, flat);
        m
    }

    pub fn unit(&self, j: usize) -> Coords {
        let mut v = vec![G::zero(); self.dim()];
        v[j] = G::one();
        v
    }

    /// Trace form `tr(XY)` of the defining representation.
    pub fn trace_form(&self, x: &[G], y: &[G]) -> G {
        self.matrix(x).trace_of_product(&self.matrix(y))
    }
}
