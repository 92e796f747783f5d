use std::sync::Arc;

use crcore::MatrixModel;
use exactlin::{kernel_of_rows, DenseMatrix, GaussRational as G, Rat, Subspace};
use matrixlie::{AmbientAlgebra, Subalg};
use rootsys::{Family, RegularSubalgebra, Root, RootSet, RootSystem};

use crate::roots::{classify, RootClassification};
use crate::spec::RealFormSpec;
use crate::RealFormError;

/// A Cartan involution of `g`, stated on matrices.
#[derive(Clone, Debug)]
pub enum Involution {
    Identity,
    /// `X ↦ PXP` for the permutation matrix of an involutive permutation.
    Permutation(Vec<usize>),
    /// `X ↦ −ΩXᵀΩ⁻¹` for a real skew `Ω` with `Ω² = −1`.
    Symplectic(DenseMatrix),
}

impl Involution {
    pub fn apply(&self, x: &DenseMatrix) -> DenseMatrix {
        match self {
            Involution::Identity => x.clone(),
            Involution::Permutation(p) => {
                let n = x.rows();
                let mut out = DenseMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        out[(i, j)] = x[(p[i], p[j])].clone();
                    }
                }
                out
            }
            Involution::Symplectic(w) => w.mul(&x.transpose()).mul(w),
        }
    }
}

/// The compact conjugation `X ↦ −X̄ᵀ`.
pub fn compact_conjugation(x: &DenseMatrix) -> DenseMatrix {
    x.conj_transpose().neg()
}

fn flat_units(n: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Subspace {
    Subspace::spanned_by_units(n * n, entries.into_iter().map(|(i, j)| i * n + j))
}

fn to_matrices(n: usize, s: &Subspace) -> Vec<DenseMatrix> {
    s.basis().iter().map(|v| DenseMatrix::from_flat(n, n, v.clone())).collect()
}

/// Root data of a diagonal Cartan subalgebra: the character of each matrix
/// position and the root spaces inside a given algebra.
#[derive(Clone, Debug)]
pub struct RootData {
    system: RootSystem,
    chars: Vec<Root>,
    spaces: Vec<Subspace>,
    cartan: Subspace,
}

impl RootData {
    /// Root spaces are `algebra ∩ span{E_ij : c(i) − c(j) = α}`.
    pub fn new(system: RootSystem, chars: Vec<Root>, algebra: &Subspace) -> Result<Self, RealFormError> {
        let n = chars.len();
        let mut spaces = Vec::with_capacity(system.len());
        for r in system.roots() {
            let cells =
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| chars[i].sub(&chars[j]) == *r);
            let s = flat_units(n, cells).meet(algebra);
            if s.dim() != 1 {
                return Err(RealFormError::Internal(format!("root space of {r} has dimension {}", s.dim())));
            }
            spaces.push(s);
        }
        let cartan = flat_units(n, (0..n).map(|i| (i, i))).meet(algebra);
        if cartan.dim() < system.rank() {
            return Err(RealFormError::Internal(format!("diagonal Cartan has dimension {}", cartan.dim())));
        }
        Ok(RootData { system, chars, spaces, cartan })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    /// Character of each matrix position.
    pub fn chars(&self) -> &[Root] {
        &self.chars
    }

    pub fn n(&self) -> usize {
        self.chars.len()
    }

    /// Flattened root space of a root.
    pub fn root_space(&self, r: &Root) -> Option<&Subspace> {
        self.system.index_of(r).map(|i| &self.spaces[i])
    }

    pub fn root_vector(&self, r: &Root) -> Option<DenseMatrix> {
        self.root_space(r).map(|s| DenseMatrix::from_flat(self.n(), self.n(), s.basis()[0].clone()))
    }

    /// Flattened diagonal Cartan subalgebra.
    pub fn cartan(&self) -> &Subspace {
        &self.cartan
    }

    /// Weight of a root vector, read off its first nonzero off-diagonal entry.
    pub fn weight_of(&self, x: &DenseMatrix) -> Option<Root> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !x[(i, j)].is_zero())
            .map(|(i, j)| self.chars[i].sub(&self.chars[j]))
    }

    /// Values `c(i)(a)` of a Cartan element on the positions.
    pub fn grading_values(&self, a: &[Rat]) -> Vec<Rat> {
        self.chars
            .iter()
            .map(|c| c.0.iter().zip(a).fold(Rat::zero(), |acc, (&k, x)| acc.add(&x.mul(&Rat::from_int(k as i64)))))
            .collect()
    }

    /// Diagonal matrix of a Cartan element given in `e`-coordinates.
    pub fn diagonal(&self, x: &[G]) -> DenseMatrix {
        let d: Vec<G> = self
            .chars
            .iter()
            .map(|c| c.0.iter().zip(x).fold(G::zero(), |acc, (&k, v)| acc + &(v * &G::from_int(k as i64))))
            .collect();
        DenseMatrix::diagonal(&d)
    }

    /// Inverse of [`RootData::diagonal`].
    pub fn toral_coords(&self, d: &DenseMatrix) -> Option<Vec<G>> {
        let dim = self.system.dim();
        let rows: Vec<Vec<G>> = self
            .chars
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut row: Vec<G> = c.0.iter().map(|&k| G::from_int(k as i64)).collect();
                row.push(-&d[(i, i)]);
                row
            })
            .collect();
        let ker = kernel_of_rows(rows, dim + 1);
        let v = ker.basis().iter().find(|v| !v[dim].is_zero())?;
        let s = v[dim].inv();
        Some(v[..dim].iter().map(|x| x * &s).collect())
    }
}

/// The θ-stable Cartan subalgebra used for flag problems and its splitting
/// into the `±1` eigenspaces of θ. All three are flattened `n²` subspaces.
#[derive(Clone, Debug)]
pub struct AdaptedPair {
    pub h0: Subspace,
    pub h_plus: Subspace,
    pub h_minus: Subspace,
}

/// Matrix data of a real form `g₀ ⊆ g`: `g`, the Cartan involution θ, the
/// complexified maximal compact `k = g^θ` and the diagonal root data.
pub struct RealForm {
    spec: RealFormSpec,
    n: usize,
    g: Arc<AmbientAlgebra>,
    k: Arc<AmbientAlgebra>,
    p: Subspace,
    theta: Involution,
    g_roots: RootData,
    k_roots: Option<RootData>,
    adapted: AdaptedPair,
    classification: RootClassification,
    model: Arc<MatrixModel>,
}

impl std::fmt::Debug for RealForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RealForm({})", self.spec)
    }
}

fn reversal_swaps(n: usize, count: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in 0..count {
        p.swap(i, n - 1 - i);
    }
    p
}

fn anti_diagonal(n: usize, sign: impl Fn(usize) -> i64) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, n - 1 - i)] = G::from_int(sign(i));
    }
    m
}

fn type_a_chars(n: usize) -> Vec<Root> {
    (0..n).map(|i| Root::e(n, i)).collect()
}

fn orthogonal_chars(n: usize) -> Vec<Root> {
    let m = n / 2;
    (0..n)
        .map(|i| {
            if i < m {
                Root::e(m, i)
            } else if n % 2 == 1 && i == m {
                Root::zero(m)
            } else {
                Root::e(m, n - 1 - i).neg()
            }
        })
        .collect()
}

fn orthogonal_family(n: usize) -> Family {
    if n.is_multiple_of(2) {
        Family::D
    } else {
        Family::B
    }
}

/// Builds the matrix data of a real form and verifies that θ, the compact
/// conjugation τ and `σ = θτ` are commuting involutions of `g`.
/// Ambient, involution, root data of `g` and optional root data of `k`.
type FormParts = (AmbientAlgebra, Involution, RootSystem, Vec<Root>, Option<(RootSystem, Vec<Root>)>);

pub fn build_real_form(spec: RealFormSpec) -> Result<RealForm, RealFormError> {
    spec.validate()?;
    let n = spec.matrix_size();
    let label = spec.to_string();
    let (g, theta, system, chars, k_data): FormParts = match spec {
        RealFormSpec::Su { p, q } => (
            AmbientAlgebra::sl(n),
            Involution::Permutation(reversal_swaps(n, p.min(q))),
            RootSystem::build(Family::A, n - 1)?,
            type_a_chars(n),
            None,
        ),
        RealFormSpec::CompactSu { .. } => {
            let sys = RootSystem::build(Family::A, n - 1)?;
            (AmbientAlgebra::sl(n), Involution::Identity, sys.clone(), type_a_chars(n), Some((sys, type_a_chars(n))))
        }
        RealFormSpec::CompactU { .. } => {
            (AmbientAlgebra::gl(n), Involution::Identity, RootSystem::build(Family::A, n - 1)?, type_a_chars(n), None)
        }
        RealFormSpec::SlH { n: m } => {
            let mut omega = DenseMatrix::zeros(n, n);
            for k in 0..m {
                omega[(2 * k, 2 * k + 1)] = G::one();
                omega[(2 * k + 1, 2 * k)] = G::from_int(-1);
            }
            let kchars: Vec<Root> =
                (0..n).map(|i| if i % 2 == 0 { Root::e(m, i / 2) } else { Root::e(m, i / 2).neg() }).collect();
            (
                AmbientAlgebra::sl(n),
                Involution::Symplectic(omega),
                RootSystem::build(Family::A, n - 1)?,
                type_a_chars(n),
                Some((RootSystem::build(Family::C, m)?, kchars)),
            )
        }
        RealFormSpec::So { p, q } => (
            AmbientAlgebra::so_form(format!("so{n}"), &anti_diagonal(n, |_| 1))?,
            Involution::Permutation(reversal_swaps(n, p.min(q))),
            RootSystem::build(orthogonal_family(n), n / 2)?,
            orthogonal_chars(n),
            None,
        ),
        RealFormSpec::CompactSo { .. } => {
            let sys = RootSystem::build(orthogonal_family(n), n / 2)?;
            (
                AmbientAlgebra::so_form(format!("so{n}"), &anti_diagonal(n, |_| 1))?,
                Involution::Identity,
                sys.clone(),
                orthogonal_chars(n),
                Some((sys, orthogonal_chars(n))),
            )
        }
        RealFormSpec::CompactSp { n: m } => {
            let sys = RootSystem::build(Family::C, m)?;
            let chars: Vec<Root> =
                (0..n).map(|i| if i < m { Root::e(m, i) } else { Root::e(m, n - 1 - i).neg() }).collect();
            let omega = anti_diagonal(n, |i| if i < m { 1 } else { -1 });
            (
                AmbientAlgebra::sp_form(format!("sp{m}"), &omega)?,
                Involution::Identity,
                sys.clone(),
                chars.clone(),
                Some((sys, chars)),
            )
        }
    };
    let g = Arc::new(g);
    verify_involutions(&g, &theta)?;
    let k_space = eigenspace(&g, &theta, false)?;
    let p = eigenspace(&g, &theta, true)?;
    let k = if matches!(theta, Involution::Identity) {
        Arc::new(g.as_ref().clone().with_label(format!("k[{label}]")))
    } else {
        Arc::new(AmbientAlgebra::new(format!("k[{label}]"), n, to_matrices(n, &k_space))?)
    };
    let g_roots = RootData::new(system, chars, g.space())?;
    let k_roots = match k_data {
        Some((sys, ch)) => Some(RootData::new(sys, ch, k.space())?),
        None => None,
    };
    let h0 = g_roots.cartan().clone();
    let adapted = AdaptedPair { h_plus: h0.meet(k.space()), h_minus: h0.meet(&p), h0 };
    if adapted.h_plus.dim() + adapted.h_minus.dim() != adapted.h0.dim() {
        return Err(RealFormError::Internal("Cartan subalgebra is not θ-stable".into()));
    }
    let classification = classify(&g_roots, &theta)?;
    let model = Arc::new(MatrixModel::new(k.clone()));
    let form = RealForm { spec, n, g, k, p, theta, g_roots, k_roots, adapted, classification, model };
    form.verify_projection()?;
    Ok(form)
}

fn eigenspace(g: &AmbientAlgebra, theta: &Involution, negative: bool) -> Result<Subspace, RealFormError> {
    let n = g.n();
    let d = g.dim();
    let images: Vec<Vec<G>> = g
        .basis()
        .iter()
        .map(|b| g.coords(&theta.apply(b)).ok_or_else(|| RealFormError::Internal("θ does not preserve g".into())))
        .collect::<Result<_, _>>()?;
    let sign = if negative { G::one() } else { G::from_int(-1) };
    let rows: Vec<Vec<G>> = (0..d)
        .map(|r| (0..d).map(|i| if i == r { &images[i][r] + &sign } else { images[i][r].clone() }).collect())
        .collect();
    let ker = kernel_of_rows(rows, d);
    Ok(Subspace::span(n * n, ker.basis().iter().map(|c| g.matrix(c).into_flat()).collect()))
}

fn verify_involutions(g: &AmbientAlgebra, theta: &Involution) -> Result<(), RealFormError> {
    let fail = |what: &str| Err(RealFormError::Internal(what.to_string()));
    let basis = g.basis();
    for b in basis {
        let t = theta.apply(b);
        if !g.contains_matrix(&t) {
            return fail("θ does not preserve g");
        }
        if theta.apply(&t) != *b {
            return fail("θ is not an involution");
        }
        let tau = compact_conjugation(b);
        if compact_conjugation(&tau) != *b {
            return fail("τ is not an involution");
        }
        if theta.apply(&tau) != compact_conjugation(&t) {
            return fail("θ and τ do not commute");
        }
        let sigma = theta.apply(&tau);
        if theta.apply(&compact_conjugation(&sigma)) != *b {
            return fail("σ is not an involution");
        }
        let x = b.add(&tau);
        let y = b.sub(&tau).scale(&G::i());
        for z in [x, y] {
            if z.is_zero() {
                continue;
            }
            let tr = z.trace_of_product(&z);
            if !tr.is_real() || tr.re.signum() >= 0 {
                return fail("trace form is not negative definite on the compact form");
            }
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if theta.apply(&a.bracket(b)) != theta.apply(a).bracket(&theta.apply(b)) {
                return fail("θ is not an automorphism");
            }
        }
    }
    Ok(())
}

impl RealForm {
    pub fn spec(&self) -> RealFormSpec {
        self.spec
    }

    /// Matrix size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> &Arc<AmbientAlgebra> {
        &self.g
    }

    pub fn k(&self) -> &Arc<AmbientAlgebra> {
        &self.k
    }

    /// Flattened `−1` eigenspace of θ.
    pub fn p(&self) -> &Subspace {
        &self.p
    }

    pub fn theta(&self) -> &Involution {
        &self.theta
    }

    pub fn model(&self) -> &Arc<MatrixModel> {
        &self.model
    }

    /// Root data of `g` for the diagonal Cartan.
    pub fn g_roots(&self) -> &RootData {
        &self.g_roots
    }

    /// Root data of `k` when the θ-fixed diagonal is a Cartan subalgebra of `k`.
    pub fn k_roots(&self) -> Option<&RootData> {
        self.k_roots.as_ref()
    }

    pub fn adapted(&self) -> &AdaptedPair {
        &self.adapted
    }

    pub fn classification(&self) -> &RootClassification {
        &self.classification
    }

    /// The real structure `σ = θτ` of `g₀`.
    pub fn sigma(&self, x: &DenseMatrix) -> DenseMatrix {
        self.theta.apply(&compact_conjugation(x))
    }

    /// Projection onto `k` along `p`.
    pub fn pi(&self, x: &DenseMatrix) -> DenseMatrix {
        x.add(&self.theta.apply(x)).scale_rat(&Rat::new(1, 2))
    }

    /// Image of a flattened subspace under the projection onto `k`.
    pub fn pi_space(&self, s: &Subspace) -> Subspace {
        let n = self.n;
        s.map(n * n, |v| self.pi(&DenseMatrix::from_flat(n, n, v.to_vec())).into_flat())
    }

    /// `π(g^α)` as a flattened subspace.
    pub fn pi_root(&self, r: &Root) -> Subspace {
        match self.g_roots.root_space(r) {
            Some(s) => self.pi_space(s),
            None => Subspace::zero(self.n * self.n),
        }
    }

    /// Flattened span of a matrix family written one row per string, with
    /// one free parameter per symbol (`0` for a zero entry, a leading `-`
    /// for a negated parameter), intersected with `g`.
    pub fn pattern<S: AsRef<str>>(&self, rows: &[S]) -> Result<Subspace, RealFormError> {
        let n = self.n;
        if rows.len() != n {
            return Err(RealFormError::Parse(format!("pattern has {} rows, expected {n}", rows.len())));
        }
        let mut symbols: std::collections::BTreeMap<String, DenseMatrix> = std::collections::BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            let tokens: Vec<&str> = row.as_ref().split_whitespace().collect();
            if tokens.len() != n {
                return Err(RealFormError::Parse(format!(
                    "pattern row {i} has {} entries, expected {n}",
                    tokens.len()
                )));
            }
            for (j, t) in tokens.iter().enumerate() {
                if *t == "0" {
                    continue;
                }
                let (sign, name) = match t.strip_prefix('-') {
                    Some(rest) => (-1, rest),
                    None => (1, *t),
                };
                symbols.entry(name.to_string()).or_insert_with(|| DenseMatrix::zeros(n, n))[(i, j)] = G::from_int(sign);
            }
        }
        let span = Subspace::span(n * n, symbols.into_values().map(DenseMatrix::into_flat).collect());
        Ok(span.meet(self.g.space()))
    }

    /// Subalgebra of `k` spanned by a flattened subspace.
    pub fn k_subalg(&self, s: &Subspace) -> Result<Subalg, RealFormError> {
        Ok(Subalg::from_matrices(self.k.clone(), &to_matrices(self.n, s))?)
    }

    /// Flattened span of a subalgebra of `k`.
    pub fn flatten(&self, v: &Subalg) -> Subspace {
        Subspace::span(self.n * self.n, v.basis_matrices().into_iter().map(DenseMatrix::into_flat).collect())
    }

    /// Matrix realization of a regular subalgebra of `k` given in the root
    /// data of `k`.
    pub fn embed_regular(&self, v: &RegularSubalgebra) -> Result<Subalg, RealFormError> {
        let data = self
            .k_roots
            .as_ref()
            .ok_or_else(|| RealFormError::Unsupported(format!("{}: no root data for k on the diagonal", self.spec)))?;
        v.validate(data.system())?;
        let mut mats: Vec<DenseMatrix> = v.toral().basis().iter().map(|x| data.diagonal(x)).collect();
        for r in v.roots() {
            mats.push(data.root_vector(r).expect("root of k"));
        }
        Ok(Subalg::from_matrices(self.k.clone(), &mats)?)
    }

    /// Root description of a subalgebra of `k` spanned by diagonal matrices
    /// and root spaces of `k`, or `None` if it is not of that form.
    pub fn regular_of(&self, v: &Subalg) -> Option<RegularSubalgebra> {
        let data = self.k_roots.as_ref()?;
        let s = self.flatten(v);
        let toral_flat = s.meet(data.cartan());
        let toral: Vec<Vec<G>> =
            to_matrices(self.n, &toral_flat).iter().map(|d| data.toral_coords(d)).collect::<Option<_>>()?;
        let roots: RootSet =
            data.system().roots().iter().filter(|r| s.contains(data.root_space(r).expect("root"))).cloned().collect();
        if toral.len() + roots.len() != s.dim() {
            return None;
        }
        Some(RegularSubalgebra::from_parts(Subspace::span(data.system().dim(), toral), roots))
    }

    fn verify_projection(&self) -> Result<(), RealFormError> {
        let fail = |what: String| Err(RealFormError::Internal(what));
        for b in self.g.basis() {
            let x = self.pi(b);
            if self.pi(&x) != x || !self.k.contains_matrix(&x) {
                return fail("π is not a projection onto k".into());
            }
            if self.theta.apply(b) == b.neg() && !x.is_zero() {
                return fail("π does not vanish on p".into());
            }
        }
        let cl = &self.classification;
        for r in self.g_roots.system().roots() {
            let image = self.pi_root(r);
            if image != self.pi_root(&cl.theta_star(r)) {
                return fail(format!("π(g^{r}) differs from π(g^(θ*{r}))"));
            }
            if cl.is_noncompact_imaginary(r) && !image.is_zero() {
                return fail(format!("π(g^{r}) is nonzero for a noncompact imaginary root"));
            }
        }
        Ok(())
    }
}
