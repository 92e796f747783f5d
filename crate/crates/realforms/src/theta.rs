use std::collections::BTreeSet;

use crcore::MatrixModel;
use crcore::{CRAlgebra, RegularityType};
use exactlin::Subspace;
use matrixlie::{nilradical_nr, Subalg};
use rootsys::{crossed_coweight, strongly_orthogonal_maximal_sets, ParabolicRootSet, Root, RootSet, RootSystem};

use crate::form::RealForm;
use crate::RealFormError;

/// Root sets attached to a parabolic `f` of `g` and the Cartan involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSets {
    pub crosses: Vec<usize>,
    pub f: RootSet,
    pub f_n: RootSet,
    pub f_r: RootSet,
    /// `F` without the noncompact imaginary roots.
    pub f_star: RootSet,
    pub f_theta: RootSet,
    pub f_theta_n: RootSet,
    pub f_theta_r: RootSet,
}

fn closed(sys: &RootSystem, s: &RootSet) -> bool {
    s.iter().all(|a| s.iter().all(|b| !sys.is_root(&a.add(b)) || s.contains(&a.add(b))))
}

/// `F^θ = F* ∩ θ*(F*)` and its nilpotent and reductive parts for the
/// parabolic with the given (1-based) crossed simple roots.
pub fn theta_sets(form: &RealForm, crosses: &[usize]) -> Result<ThetaSets, RealFormError> {
    let sys = form.g_roots().system();
    let distinct: BTreeSet<usize> = crosses.iter().copied().collect();
    if distinct.len() != crosses.len() {
        return Err(RealFormError::Crosses(format!("repeated index in {crosses:?}")));
    }
    if let Some(&k) = crosses.iter().find(|&&k| k == 0 || k > sys.rank()) {
        return Err(RealFormError::Crosses(format!("index {k} outside 1..={}", sys.rank())));
    }
    let q = ParabolicRootSet::from_crosses(sys, crosses)?;
    let cl = form.classification();
    let f = q.q().clone();
    let f_star: RootSet = f.iter().filter(|r| !cl.is_noncompact_imaginary(r)).cloned().collect();
    let f_theta: RootSet = f_star.iter().filter(|r| f_star.contains(&cl.theta_star(r))).cloned().collect();
    let f_theta_n: RootSet = f_theta.intersection(q.qn()).cloned().collect();
    let f_theta_r: RootSet = q.qr().iter().filter(|r| q.qr().contains(&cl.theta_star(r))).cloned().collect();
    // roots of F^θ in neither part pair with one in F^θ_n: π(g^α) = π(g^{θ*α})
    let covered =
        f_theta.iter().all(|r| f_theta_n.contains(r) || f_theta_r.contains(r) || f_theta_n.contains(&cl.theta_star(r)));
    if !covered {
        return Err(RealFormError::Internal("F^θ is not covered by its nilpotent and reductive parts".into()));
    }
    for (name, s) in [("F^θ", &f_theta), ("F^θ_n", &f_theta_n), ("F^θ_r", &f_theta_r)] {
        if !closed(sys, s) {
            return Err(RealFormError::Internal(format!("{name} is not closed")));
        }
    }
    Ok(ThetaSets {
        crosses: crosses.to_vec(),
        f,
        f_n: q.qn().clone(),
        f_r: q.qr().clone(),
        f_star,
        f_theta,
        f_theta_n,
        f_theta_r,
    })
}

/// The CR algebra `(k₀, f ∩ k)` of a minimal orbit, with both descriptions
/// of `v` and `nr(v)` verified to agree.
pub struct MinimalOrbit {
    pub sets: ThetaSets,
    /// Flattened `f`.
    pub f: Subspace,
    pub v: Subalg,
    pub nr: Subalg,
    pub cr: CRAlgebra<MatrixModel>,
}

impl std::fmt::Debug for MinimalOrbit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MinimalOrbit(crosses {:?}, dim v {})", self.sets.crosses, self.v.dim())
    }
}

fn sum_of(n: usize, parts: impl IntoIterator<Item = Subspace>) -> Subspace {
    parts.into_iter().fold(Subspace::zero(n * n), |acc, s| acc.join(&s))
}

/// Flattened parabolic `f = g ∩ span{E_ij : A_i ≥ A_j}` for the sum `A` of
/// the crossed fundamental coweights.
pub fn flag_parabolic(form: &RealForm, crosses: &[usize]) -> Result<Subspace, RealFormError> {
    let n = form.n();
    let a = crossed_coweight(form.g_roots().system(), crosses)?;
    let vals = form.g_roots().grading_values(&a);
    let cells = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| vals[i] >= vals[j]);
    let span = Subspace::spanned_by_units(n * n, cells.map(|(i, j)| i * n + j).collect::<Vec<_>>());
    Ok(span.meet(form.g().space()))
}

pub fn build_minimal_orbit(form: &RealForm, crosses: &[usize]) -> Result<MinimalOrbit, RealFormError> {
    let n = form.n();
    let sets = theta_sets(form, crosses)?;
    let f = flag_parabolic(form, crosses)?;
    let v_matrix = f.meet(form.k().space());
    let v_roots =
        sum_of(n, std::iter::once(form.adapted().h_plus.clone()).chain(sets.f_theta.iter().map(|r| form.pi_root(r))));
    if v_matrix != v_roots {
        return Err(RealFormError::Internal(format!(
            "f ∩ k has dimension {} but the root formula gives {}",
            v_matrix.dim(),
            v_roots.dim()
        )));
    }
    let v = form.k_subalg(&v_matrix)?;
    let nr = nilradical_nr(&v)?;
    let nr_roots = form.k_subalg(&sum_of(n, sets.f_theta_n.iter().map(|r| form.pi_root(r))))?;
    if nr != nr_roots {
        return Err(RealFormError::Internal(format!(
            "nr(v) has dimension {} but the root formula gives {}",
            nr.dim(),
            nr_roots.dim()
        )));
    }
    let cr = CRAlgebra::new(form.model().clone(), v.clone())?;
    if !cr.is_n_reductive()?.holds {
        return Err(RealFormError::Internal("minimal-orbit CR algebra is not n-reductive".into()));
    }
    Ok(MinimalOrbit { sets, f, v, nr, cr })
}

/// A failing instance `α + β ∈ R` with `α + β` outside the target set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub alpha: Root,
    pub beta: Root,
    pub sum: Root,
}

/// Root-combinatorial tests for regularity types I and II.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeCriteria {
    /// Real roots in `F`.
    pub real_in_f: RootSet,
    /// Maximal strongly orthogonal sets of real roots in `F`, up to sign.
    pub max_sets: Vec<RootSet>,
    pub type_i: bool,
    pub type_ii: bool,
    pub witness_i: Option<Witness>,
    pub witness_ii: Option<Witness>,
    /// For each maximal set: whether the type I and type II conditions hold
    /// for some choice of signs.
    pub per_set: Vec<(bool, bool)>,
}

impl TypeCriteria {
    /// Whether the matrix-side regularity type agrees with these criteria.
    pub fn agrees_with(&self, t: RegularityType) -> bool {
        let expected = if self.type_i {
            RegularityType::I
        } else if self.type_ii {
            RegularityType::II
        } else {
            RegularityType::III
        };
        expected == t
    }
}

fn first_failure(sys: &RootSystem, alphas: &[Root], betas: &RootSet, target: &RootSet) -> Option<Witness> {
    for a in alphas {
        for b in betas {
            let s = a.add(b);
            if sys.is_root(&s) && !target.contains(&s) {
                return Some(Witness { alpha: a.clone(), beta: b.clone(), sum: s });
            }
        }
    }
    None
}

/// Whether some sign choice of `set` (within `F`) satisfies the condition;
/// otherwise the witness for the given signs.
fn evaluate_set(
    sys: &RootSystem,
    f: &RootSet,
    set: &RootSet,
    betas: &RootSet,
    target: &RootSet,
) -> Result<(), Witness> {
    let reps: Vec<Root> = set.iter().cloned().collect();
    let flexible: Vec<usize> = (0..reps.len()).filter(|&i| f.contains(&reps[i].neg())).collect();
    let mut first = None;
    for mask in 0u64..(1u64 << flexible.len()) {
        let mut choice = reps.clone();
        for (bit, &i) in flexible.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                choice[i] = reps[i].neg();
            }
        }
        match first_failure(sys, &choice, betas, target) {
            None => return Ok(()),
            Some(w) => {
                first.get_or_insert(w);
            }
        }
    }
    Err(first.expect("at least one sign choice"))
}

/// Type I holds iff for some maximal strongly orthogonal set `{α_i}` of real
/// roots in `F`, `β ∈ F^θ` and `α_i + β ∈ R` force `α_i + β ∈ F^θ`; type II
/// is the same test with `F^θ_r` in place of `F^θ`.
pub fn type_criteria(form: &RealForm, sets: &ThetaSets) -> TypeCriteria {
    let sys = form.g_roots().system();
    let real = form.classification().real();
    let real_in_f: RootSet = sets.f.intersection(&real).cloned().collect();
    let max_sets = strongly_orthogonal_maximal_sets(sys, &real_in_f);
    let candidates: Vec<RootSet> = if max_sets.is_empty() { vec![RootSet::new()] } else { max_sets.clone() };
    let mut type_i = false;
    let mut type_ii = false;
    let mut witness_i = None;
    let mut witness_ii = None;
    let mut per_set = Vec::new();
    for s in &candidates {
        let r1 = evaluate_set(sys, &sets.f, s, &sets.f_theta, &sets.f_theta);
        let r2 = evaluate_set(sys, &sets.f, s, &sets.f_theta_r, &sets.f_theta_r);
        per_set.push((r1.is_ok(), r2.is_ok()));
        match r1 {
            Ok(()) => type_i = true,
            Err(w) => {
                witness_i.get_or_insert(w);
            }
        }
        match r2 {
            Ok(()) => type_ii = true,
            Err(w) => {
                witness_ii.get_or_insert(w);
            }
        }
    }
    if type_i {
        witness_i = None;
    }
    if type_ii {
        witness_ii = None;
    }
    if max_sets.is_empty() {
        per_set.clear();
    }
    TypeCriteria { real_in_f, max_sets, type_i, type_ii, witness_i, witness_ii, per_set }
}
