//! Subspaces of `Q(i)^n` in canonical reduced row-echelon form.

use crate::gauss::GaussRational as G;
use crate::matrix::DenseMatrix;
use crate::LinError;

/// Gauss–Jordan elimination in place on the first `ncols` columns.
///
/// On return the nonzero rows come first, each with a leading 1 that is the
/// only nonzero entry of its column; zero rows are dropped. Returns the pivot
/// columns.
pub fn rref_rows(rows: &mut Vec<Vec<G>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if !rows[r][c].is_one() {
            let inv = rows[r][c].inv();
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let f = other[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in other[c..].iter_mut().zip(&prow[c..]) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<G>>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        f.debug_list()
            .entries(self.basis.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
            .finish()
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis =
            (0..ambient).map(|i| (0..ambient).map(|j| if i == j { G::one() } else { G::zero() }).collect()).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Canonical span of `vectors`, all of length `ambient`.
    pub fn canonicalize(ambient: usize, vectors: Vec<Vec<G>>) -> Result<Self, LinError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinError::DimensionMismatch { expected: ambient, found: v.len() });
        }
        let mut rows: Vec<Vec<G>> = vectors.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        let pivots = rref_rows(&mut rows, ambient);
        Ok(Subspace { ambient, basis: rows, pivots })
    }

    /// Like [`Subspace::canonicalize`] for callers that guarantee the shape.
    pub fn span(ambient: usize, vectors: Vec<Vec<G>>) -> Self {
        Subspace::canonicalize(ambient, vectors).expect("vectors of the ambient dimension")
    }

    pub fn spanned_by_units(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs = indices
            .into_iter()
            .map(|k| (0..ambient).map(|j| if j == k { G::one() } else { G::zero() }).collect())
            .collect();
        Subspace::span(ambient, vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<G>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> DenseMatrix {
        DenseMatrix::from_flat(self.dim(), self.ambient, self.basis.iter().flatten().cloned().collect())
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v − Σ v[p_k]·b_k`; zero exactly when `v` lies in the subspace.
    pub fn residual(&self, v: &[G]) -> Vec<G> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[G]) -> bool {
        v.len() == self.ambient && self.residual(v).iter().all(G::is_zero)
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn solve_membership(&self, v: &[G]) -> Option<Vec<G>> {
        if self.contains_vector(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Combination `Σ c_k b_k` of the canonical basis.
    pub fn element(&self, coeffs: &[G]) -> Vec<G> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![G::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += &(c * y);
                }
            }
        }
        out
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && other.dim() <= self.dim()
            && other.basis.iter().all(|v| self.contains_vector(v))
    }

    fn check(&self, o: &Subspace) -> Result<(), LinError> {
        if self.ambient != o.ambient {
            Err(LinError::DimensionMismatch { expected: self.ambient, found: o.ambient })
        } else {
            Ok(())
        }
    }

    pub fn join(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient, "ambient mismatch");
        if self.contains(o) {
            return self.clone();
        }
        if o.contains(self) {
            return o.clone();
        }
        let mut rows = self.basis.clone();
        rows.extend(o.basis.iter().cloned());
        Subspace::span(self.ambient, rows)
    }

    pub fn meet(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient, "ambient mismatch");
        if self.contains(o) {
            return o.clone();
        }
        if o.contains(self) {
            return self.clone();
        }
        // x = Σ c_k a_k lies in o iff Σ c_k residual_o(a_k) = 0
        let res: Vec<Vec<G>> = self.basis.iter().map(|a| o.residual(a)).collect();
        let m = self.dim();
        let eqs: Vec<Vec<G>> = (0..self.ambient).map(|j| res.iter().map(|r| r[j].clone()).collect()).collect();
        let coeffs = kernel_of_rows(eqs, m);
        Subspace::span(self.ambient, coeffs.basis.iter().map(|c| self.element(c)).collect())
    }

    /// Intersection and sum; satisfies `dim(A∩B) + dim(A+B) = dim A + dim B`.
    pub fn meet_join(&self, o: &Subspace) -> Result<(Subspace, Subspace), LinError> {
        self.check(o)?;
        Ok((self.meet(o), self.join(o)))
    }

    /// Entrywise complex conjugate, re-canonicalized.
    pub fn conj(&self) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().map(|v| v.iter().map(G::conj).collect()).collect())
    }

    /// Image under a linear map given on vectors.
    pub fn map(&self, target_dim: usize, f: impl Fn(&[G]) -> Vec<G>) -> Subspace {
        Subspace::span(target_dim, self.basis.iter().map(|v| f(v)).collect())
    }

    /// Linear functionals (rows) whose common kernel is this subspace.
    pub fn equations(&self) -> Vec<Vec<G>> {
        let mut eqs = Vec::new();
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for c in (0..self.ambient).filter(|&c| !is_pivot[c]) {
            // x_c − Σ_k b_k[c] x_{p_k} = 0
            let mut e = vec![G::zero(); self.ambient];
            e[c] = G::one();
            for (b, &p) in self.basis.iter().zip(&self.pivots) {
                if !b[c].is_zero() {
                    e[p] = -&b[c];
                }
            }
            eqs.push(e);
        }
        eqs
    }
}

/// Kernel of the matrix whose rows are `rows` (each of length `ncols`).
pub fn kernel_of_rows(mut rows: Vec<Vec<G>>, ncols: usize) -> Subspace {
    let pivots = rref_rows(&mut rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vs = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![G::zero(); ncols];
        x[f] = G::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            if !row[f].is_zero() {
                x[p] = -&row[f];
            }
        }
        vs.push(x);
    }
    Subspace::span(ncols, vs)
}

/// Right kernel `{x : M x = 0}`.
pub fn kernel(m: &DenseMatrix) -> Subspace {
    kernel_of_rows(m.row_vecs(), m.cols())
}
