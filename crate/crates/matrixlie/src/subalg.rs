use std::fmt;
use std::sync::Arc;

use exactlin::{kernel_of_rows, min_poly, rational_roots, DenseMatrix, GaussRational as G, Rat, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ambient::{AmbientAlgebra, Coords};
use crate::jc::{is_semisimple, jordan_chevalley};
use crate::MatrixLieError;

/// A subspace of an ambient algebra, in ambient coordinates.
#[derive(Clone)]
pub struct Subalg {
    ambient: Arc<AmbientAlgebra>,
    space: Subspace,
}

impl fmt::Debug for Subalg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subalg(dim {} in {})", self.dim(), self.ambient.label())
    }
}

impl PartialEq for Subalg {
    fn eq(&self, o: &Self) -> bool {
        self.space == o.space && (Arc::ptr_eq(&self.ambient, &o.ambient) || *self.ambient == *o.ambient)
    }
}

impl Eq for Subalg {}

impl Subalg {
    pub fn new(ambient: Arc<AmbientAlgebra>, space: Subspace) -> Result<Self, MatrixLieError> {
        if space.ambient_dim() != ambient.dim() {
            return Err(
                exactlin::LinError::DimensionMismatch { expected: ambient.dim(), found: space.ambient_dim() }.into()
            );
        }
        Ok(Subalg { ambient, space })
    }

    pub fn from_matrices(ambient: Arc<AmbientAlgebra>, mats: &[DenseMatrix]) -> Result<Self, MatrixLieError> {
        let coords = mats.iter().map(|m| ambient.coords_checked(m)).collect::<Result<Vec<_>, _>>()?;
        let space = Subspace::span(ambient.dim(), coords);
        Ok(Subalg { ambient, space })
    }

    pub fn zero(ambient: Arc<AmbientAlgebra>) -> Self {
        let space = Subspace::zero(ambient.dim());
        Subalg { ambient, space }
    }

    pub fn full(ambient: Arc<AmbientAlgebra>) -> Self {
        let space = Subspace::full(ambient.dim());
        Subalg { ambient, space }
    }

    pub fn ambient(&self) -> &Arc<AmbientAlgebra> {
        &self.ambient
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.space.is_full()
    }

    pub fn basis(&self) -> &[Coords] {
        self.space.basis()
    }

    pub fn basis_matrices(&self) -> Vec<DenseMatrix> {
        self.space.basis().iter().map(|c| self.ambient.matrix(c)).collect()
    }

    pub fn with_space(&self, space: Subspace) -> Subalg {
        Subalg { ambient: self.ambient.clone(), space }
    }

    pub fn contains(&self, o: &Subalg) -> bool {
        self.space.contains(&o.space)
    }

    pub fn contains_coords(&self, c: &[G]) -> bool {
        self.space.contains_vector(c)
    }

    pub fn contains_matrix(&self, m: &DenseMatrix) -> bool {
        self.ambient.coords(m).is_some_and(|c| self.space.contains_vector(&c))
    }

    pub fn meet(&self, o: &Subalg) -> Subalg {
        self.with_space(self.space.meet(&o.space))
    }

    pub fn join(&self, o: &Subalg) -> Subalg {
        self.with_space(self.space.join(&o.space))
    }

    /// Image under the compact conjugation.
    pub fn sigma(&self) -> Subalg {
        self.with_space(self.ambient.sigma_space(&self.space))
    }

    pub fn is_sigma_stable(&self) -> bool {
        self.sigma() == *self
    }

    /// `span [self, o]`.
    pub fn bracket_space(&self, o: &Subalg) -> Subalg {
        let mut vs = Vec::new();
        for x in self.basis() {
            for y in o.basis() {
                vs.push(self.ambient.bracket(x, y));
            }
        }
        self.with_space(Subspace::span(self.ambient.dim(), vs))
    }

    pub fn is_bracket_closed(&self) -> bool {
        let b = self.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.space.contains_vector(&self.ambient.bracket(&b[i], &b[j]))))
    }

    pub fn is_abelian(&self) -> bool {
        let b = self.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.ambient.bracket(&b[i], &b[j]).iter().all(G::is_zero)))
    }

    /// Whether `[o, self] ⊆ self`.
    pub fn is_stable_under(&self, o: &Subalg) -> bool {
        o.basis().iter().all(|x| self.basis().iter().all(|y| self.space.contains_vector(&self.ambient.bracket(x, y))))
    }

    /// Coordinates of an ambient element on the canonical basis of `self`.
    pub fn local_coords(&self, c: &[G]) -> Option<Coords> {
        self.space.solve_membership(c)
    }

    /// Derived series down to the first repeated term.
    pub fn derived_series(&self) -> Vec<Subalg> {
        let mut out = vec![self.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = last.bracket_space(last);
            if next.dim() == last.dim() {
                return out;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subalg::is_zero)
    }

    /// Killing form of `self` on its canonical basis.
    pub fn killing_form(&self) -> DenseMatrix {
        let d = self.dim();
        let b = self.basis();
        let ads: Vec<DenseMatrix> = b
            .iter()
            .map(|x| {
                let mut flat = vec![G::zero(); d * d];
                for (j, y) in b.iter().enumerate() {
                    let c = self.local_coords(&self.ambient.bracket(x, y)).expect("bracket-closed");
                    for (i, v) in c.into_iter().enumerate() {
                        flat[i * d + j] = v;
                    }
                }
                DenseMatrix::from_flat(d, d, flat)
            })
            .collect();
        let mut flat = vec![G::zero(); d * d];
        for i in 0..d {
            for j in i..d {
                let v = ads[i].trace_of_product(&ads[j]);
                flat[j * d + i] = v.clone();
                flat[i * d + j] = v;
            }
        }
        DenseMatrix::from_flat(d, d, flat)
    }

    /// Element of the ambient from coordinates on `self`.
    pub fn element(&self, local: &[G]) -> Coords {
        self.space.element(local)
    }
}

/// Smallest bracket-closed subspace containing the matrices.
pub fn bracket_closure(ambient: &Arc<AmbientAlgebra>, mats: &[DenseMatrix]) -> Result<Subalg, MatrixLieError> {
    let start = Subalg::from_matrices(ambient.clone(), mats)?;
    Ok(close(start))
}

pub(crate) fn close(start: Subalg) -> Subalg {
    let mut cur = start;
    loop {
        let next = cur.join(&cur.bracket_space(&cur));
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// `{X ∈ k : [X, target] ⊆ target}`.
pub fn normalizer(target: &Subalg) -> Subalg {
    let amb = target.ambient();
    let d = amb.dim();
    let eqs = target.space().equations();
    if eqs.is_empty() {
        return Subalg::full(amb.clone());
    }
    // rows: f([b_i, t]) for every equation f and target basis vector t
    let images: Vec<Vec<Coords>> =
        target.basis().iter().map(|t| (0..d).map(|i| amb.bracket(&amb.unit(i), t)).collect()).collect();
    let mut rows = Vec::new();
    for f in &eqs {
        for img in &images {
            rows.push(img.iter().map(|v| dot(f, v)).collect());
        }
    }
    target.with_space(kernel_of_rows(rows, d))
}

/// `{X ∈ k : [X, s] = 0 for all s}`.
pub fn centralizer(s: &Subalg) -> Subalg {
    let amb = s.ambient();
    let d = amb.dim();
    let mut rows = Vec::new();
    for t in s.basis() {
        let cols: Vec<Coords> = (0..d).map(|i| amb.bracket(&amb.unit(i), t)).collect();
        for r in 0..d {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    s.with_space(kernel_of_rows(rows, d))
}

pub fn centralizer_of(ambient: &Arc<AmbientAlgebra>, m: &DenseMatrix) -> Result<Subalg, MatrixLieError> {
    Ok(centralizer(&Subalg::from_matrices(ambient.clone(), std::slice::from_ref(m))?))
}

fn dot(a: &[G], b: &[G]) -> G {
    let mut s = G::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += &(x * y);
        }
    }
    s
}

/// Solvable radical: the Killing-orthogonal of `[v, v]` inside `v`.
pub fn radical(v: &Subalg) -> Result<Subalg, MatrixLieError> {
    if !v.is_bracket_closed() {
        return Err(MatrixLieError::Precondition("radical of a subspace that is not a subalgebra".into()));
    }
    let d = v.dim();
    if d == 0 {
        return Ok(v.clone());
    }
    let kappa = v.killing_form();
    let derived = v.bracket_space(v);
    let mut rows = Vec::new();
    for w in derived.basis() {
        let wl = v.local_coords(w).expect("derived algebra inside v");
        rows.push(kappa.mul_vec(&wl));
    }
    let local = kernel_of_rows(rows, d);
    let rad = v.with_space(Subspace::span(v.ambient().dim(), local.basis().iter().map(|c| v.element(c)).collect()));
    if !rad.is_solvable() {
        return Err(MatrixLieError::Verification("radical is not solvable".into()));
    }
    Ok(rad)
}

/// Associative algebra (without unit) generated by the matrices.
fn envelope(n: usize, gens: &[DenseMatrix]) -> Vec<DenseMatrix> {
    let mut space = Subspace::span(n * n, gens.iter().map(|g| g.as_flat().to_vec()).collect());
    loop {
        let basis: Vec<DenseMatrix> = space.basis().iter().map(|b| DenseMatrix::from_flat(n, n, b.clone())).collect();
        let mut vs: Vec<Vec<G>> = space.basis().to_vec();
        for g in gens {
            for b in &basis {
                vs.push(g.mul(b).into_flat());
            }
        }
        let next = Subspace::span(n * n, vs);
        if next.dim() == space.dim() {
            return basis;
        }
        space = next;
    }
}

/// The ideal `nr(v)` of nilpotent elements of the radical, computed as the
/// elements `X` of `rad(v)` with `tr(X·a) = 0` for every `a` in the
/// associative algebra generated by `rad(v)`, then verified: it is an ideal
/// of `v`, consists of nilpotent matrices, and `[v, rad(v)] ⊆ nr(v)`.
pub fn nilradical_nr(v: &Subalg) -> Result<Subalg, MatrixLieError> {
    let rad = radical(v)?;
    let amb = v.ambient();
    let n = amb.n();
    let rmats = rad.basis_matrices();
    let env = envelope(n, &rmats);
    let rows: Vec<Vec<G>> = env.iter().map(|a| rmats.iter().map(|x| x.trace_of_product(a)).collect()).collect();
    let local = kernel_of_rows(rows, rad.dim());
    let nr = v.with_space(Subspace::span(amb.dim(), local.basis().iter().map(|c| rad.element(c)).collect()));
    if !nr.is_stable_under(v) {
        return Err(MatrixLieError::Verification("nr(v) is not an ideal of v".into()));
    }
    if let Some(i) = nr.basis_matrices().iter().position(|m| !m.is_nilpotent()) {
        return Err(MatrixLieError::Verification(format!("basis element {i} of nr(v) is not nilpotent")));
    }
    if !nr.contains(&v.bracket_space(&rad)) {
        return Err(MatrixLieError::Verification("v / nr(v) is not reductive".into()));
    }
    Ok(nr)
}

/// Outcome of [`splittable_evidence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitEvidence {
    pub passed: bool,
    pub checked: usize,
    pub seed: u64,
    pub witness: Option<DenseMatrix>,
}

pub(crate) fn random_element(v: &Subalg, rng: &mut ChaCha8Rng) -> Coords {
    let local: Vec<G> = (0..v.dim()).map(|_| G::from_ints(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect();
    v.element(&local)
}

/// Checks that both Jordan–Chevalley parts of every basis element and of
/// `trials` seeded random elements lie in `v`. Evidence, not proof.
pub fn splittable_evidence(v: &Subalg, trials: usize, seed: u64) -> Result<SplitEvidence, MatrixLieError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples: Vec<Coords> = v.basis().to_vec();
    for _ in 0..trials {
        samples.push(random_element(v, &mut rng));
    }
    let amb = v.ambient();
    for (k, x) in samples.iter().enumerate() {
        let m = amb.matrix(x);
        let jc = jordan_chevalley(&m)?;
        if !v.contains_matrix(&jc.semisimple) {
            return Ok(SplitEvidence { passed: false, checked: k + 1, seed, witness: Some(m) });
        }
    }
    Ok(SplitEvidence { passed: true, checked: samples.len(), seed, witness: None })
}

/// A maximal torus of a conjugation-stable reductive subalgebra `c`: the
/// centralizer in `c` of `x + σ(x)` for a seeded random `x ∈ c`, redrawn
/// until it is abelian and consists of semisimple elements.
pub fn maximal_torus(c: &Subalg, seed: u64) -> Result<Subalg, MatrixLieError> {
    const ATTEMPTS: usize = 32;
    if !c.is_sigma_stable() {
        return Err(MatrixLieError::Precondition("subalgebra is not stable under the compact conjugation".into()));
    }
    if c.is_abelian() {
        return Ok(c.clone());
    }
    let amb = c.ambient();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let x = random_element(c, &mut rng);
        let sx = amb.sigma(&x);
        let y: Coords = x.iter().zip(&sx).map(|(a, b)| a + b).collect();
        let z = centralizer(&c.with_space(Subspace::span(amb.dim(), vec![y]))).meet(c);
        if z.is_abelian() && z.basis_matrices().iter().all(|m| is_semisimple(m).unwrap_or(false)) {
            return Ok(z);
        }
    }
    Err(MatrixLieError::RetryBudget(ATTEMPTS))
}

/// `q_A = Σ_{λ≥0} {X : [A, X] = iλX}` for `A` in the compact form whose
/// eigenvalues are `i` times rationals.
pub fn parabolic_from_element(ambient: &Arc<AmbientAlgebra>, a: &DenseMatrix) -> Result<Subalg, MatrixLieError> {
    let ac = ambient.coords_checked(a)?;
    if ambient.sigma(&ac) != ac {
        return Err(MatrixLieError::Precondition("A is not in the compact real form".into()));
    }
    let p = min_poly(a)?;
    let mu = rational_roots(&p.rotate_by_i()).ok_or_else(|| MatrixLieError::Spectrum(p.to_string()))?;
    if Some(mu.len()) != p.degree() {
        return Err(MatrixLieError::Spectrum(p.to_string()));
    }
    let mut lambdas: Vec<Rat> = Vec::new();
    for x in &mu {
        for y in &mu {
            let l = x.sub(y);
            if l.signum() >= 0 && !lambdas.contains(&l) {
                lambdas.push(l);
            }
        }
    }
    let d = ambient.dim();
    let ad = ambient.ad(&ac);
    let mut q = Subspace::zero(d);
    for l in &lambdas {
        let shift = G::new(Rat::zero(), l.clone());
        let m = ad.sub(&DenseMatrix::identity(d).scale(&shift));
        q = q.join(&exactlin::kernel(&m));
    }
    Subalg::new(ambient.clone(), q)
}
