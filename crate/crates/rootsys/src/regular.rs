//! Subalgebras spanned by a toral piece and root spaces.

use std::fmt;

use exactlin::{GaussRational as G, Subspace};

use crate::root::{format_set, Root, RootSet};
use crate::system::{indices, root_vector, Mask, RootSystem};
use crate::RootError;

/// `a ⊕ Σ_{α∈V} k^α` with `a` a subspace of the Cartan coordinate space.
///
/// Coordinates are taken on a real basis of the imaginary part of the
/// compact torus, so conjugation acts entrywise on `a` and by negation on `V`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RegularSubalgebra {
    toral: Subspace,
    roots: RootSet,
}

impl fmt::Debug for RegularSubalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(toral dim {}, {:?})", self.toral.dim(), format_set(&self.roots))
    }
}

/// How [`lie_closure_regular`] closes its input.
#[derive(Clone, Debug)]
pub enum ClosureMode {
    /// Smallest subalgebra containing the input.
    Algebra,
    /// Smallest subspace containing the input and stable under the bracket
    /// with the given subalgebra.
    Module(RegularSubalgebra),
}

impl RegularSubalgebra {
    /// Validated constructor.
    pub fn new(sys: &RootSystem, toral: Subspace, roots: RootSet) -> Result<Self, RootError> {
        let v = RegularSubalgebra { toral, roots };
        v.validate(sys)?;
        Ok(v)
    }

    /// Builds the pair without checking closure; used for subspaces that are
    /// only modules.
    pub fn from_parts(toral: Subspace, roots: RootSet) -> Self {
        RegularSubalgebra { toral, roots }
    }

    /// The subalgebra `t ⊕ Σ_{α∈V} k^α`.
    pub fn with_cartan(sys: &RootSystem, roots: RootSet) -> Result<Self, RootError> {
        Self::new(sys, sys.cartan().clone(), roots)
    }

    pub fn zero(sys: &RootSystem) -> Self {
        RegularSubalgebra { toral: Subspace::zero(sys.dim()), roots: RootSet::new() }
    }

    pub fn full(sys: &RootSystem) -> Self {
        RegularSubalgebra { toral: sys.cartan().clone(), roots: sys.roots().iter().cloned().collect() }
    }

    pub fn toral(&self) -> &Subspace {
        &self.toral
    }

    pub fn roots(&self) -> &RootSet {
        &self.roots
    }

    pub fn dim(&self) -> usize {
        self.toral.dim() + self.roots.len()
    }

    pub fn mask(&self, sys: &RootSystem) -> Mask {
        sys.mask_of(&self.roots).expect("roots of the system")
    }

    /// Checks that the toral part lies in the Cartan, every element of `V`
    /// is a root, and the pair is closed under brackets.
    pub fn validate(&self, sys: &RootSystem) -> Result<(), RootError> {
        if self.toral.ambient_dim() != sys.dim() || !sys.cartan().contains(&self.toral) {
            return Err(RootError::Precondition("toral part is not inside the Cartan subalgebra".into()));
        }
        let m = sys.mask_of(&self.roots)?;
        for i in indices(m) {
            for j in indices(m) {
                if let Some(k) = sys.sum_index(i, j) {
                    if m >> k & 1 == 0 {
                        return Err(RootError::NotClosed(format!(
                            "{} + {} = {}",
                            sys.root(i),
                            sys.root(j),
                            sys.root(k)
                        )));
                    }
                }
            }
            if m >> sys.neg_index(i) & 1 == 1 && !self.toral.contains_vector(&root_vector(sys.root(i))) {
                return Err(RootError::NotClosed(format!("coroot of {} missing from the toral part", sys.root(i))));
            }
        }
        Ok(())
    }

    pub fn is_subalgebra(&self, sys: &RootSystem) -> bool {
        self.validate(sys).is_ok()
    }

    /// `(ā, −V)`.
    pub fn conj(&self) -> Self {
        RegularSubalgebra { toral: self.toral.conj(), roots: self.roots.iter().map(Root::neg).collect() }
    }

    pub fn contains(&self, o: &RegularSubalgebra) -> bool {
        self.toral.contains(&o.toral) && o.roots.is_subset(&self.roots)
    }

    pub fn meet(&self, o: &RegularSubalgebra) -> Self {
        RegularSubalgebra {
            toral: self.toral.meet(&o.toral),
            roots: self.roots.intersection(&o.roots).cloned().collect(),
        }
    }

    /// Vector-space sum (not closed in general).
    pub fn join(&self, o: &RegularSubalgebra) -> Self {
        RegularSubalgebra { toral: self.toral.join(&o.toral), roots: self.roots.union(&o.roots).cloned().collect() }
    }

    /// `V_n = {α ∈ V : −α ∉ V}`.
    pub fn nilpotent_roots(&self) -> RootSet {
        self.roots.iter().filter(|r| !self.roots.contains(&r.neg())).cloned().collect()
    }

    /// `V_r = V ∩ −V`.
    pub fn reductive_roots(&self) -> RootSet {
        self.roots.iter().filter(|r| self.roots.contains(&r.neg())).cloned().collect()
    }

    /// The nilradical roots `V_n` and the reductive complement `(a, V_r)`.
    pub fn nr_and_levi(&self) -> (RootSet, RegularSubalgebra) {
        (self.nilpotent_roots(), RegularSubalgebra { toral: self.toral.clone(), roots: self.reductive_roots() })
    }

    /// `v ∩ v̄ = (a ∩ ā, V_r)`.
    pub fn real_part(&self) -> Self {
        RegularSubalgebra { toral: self.toral.meet(&self.toral.conj()), roots: self.reductive_roots() }
    }

    /// Whether the root evaluates to zero on the toral part.
    pub fn annihilates(&self, r: &Root) -> bool {
        vanishes_on(r, &self.toral)
    }
}

pub(crate) fn vanishes_on(r: &Root, s: &Subspace) -> bool {
    s.basis().iter().all(|b| dot(r, b).is_zero())
}

fn dot(r: &Root, v: &[G]) -> G {
    r.0.iter().zip(v).fold(G::zero(), |acc, (&c, x)| acc + x.scale(&exactlin::Rat::from_int(c as i64)))
}

/// Smallest closed superset of `s`.
pub fn closed_closure(sys: &RootSystem, s: &RootSet) -> Result<RootSet, RootError> {
    Ok(sys.set_of(sys.close_mask(sys.mask_of(s)?)))
}

/// Normalizer of a purely nilpotent closed root set `N`:
/// `t ⊕ Σ{k^β : −β ∉ N, and α+β ∈ R ⇒ α+β ∈ N for all α ∈ N}`.
pub fn normalizer_regular(sys: &RootSystem, n: &RootSet) -> Result<RegularSubalgebra, RootError> {
    let m = sys.mask_of(n)?;
    if !sys.is_closed_mask(m) {
        return Err(RootError::Precondition("root set is not closed".into()));
    }
    if m & sys.neg_mask(m) != 0 {
        return Err(RootError::Precondition("root set contains a pair of opposite roots".into()));
    }
    normalizer(sys, &RegularSubalgebra { toral: Subspace::zero(sys.dim()), roots: n.clone() })
}

/// Normalizer of an arbitrary subspace `a ⊕ Σ_V k^α`. The result always
/// contains the full Cartan subalgebra.
pub fn normalizer(sys: &RootSystem, v: &RegularSubalgebra) -> Result<RegularSubalgebra, RootError> {
    let m = v.mask(sys);
    let mut out = 0u128;
    for b in 0..sys.len() {
        let beta = sys.root(b);
        let in_v = m >> b & 1 == 1;
        if !in_v && !v.annihilates(beta) {
            continue;
        }
        let ok = indices(m).all(|a| {
            if sys.neg_index(a) == b {
                v.toral.contains_vector(&root_vector(beta))
            } else {
                sys.sum_index(a, b).is_none_or(|k| m >> k & 1 == 1)
            }
        });
        if ok {
            out |= 1u128 << b;
        }
    }
    let n = RegularSubalgebra { toral: sys.cartan().clone(), roots: sys.set_of(out) };
    n.validate(sys)?;
    Ok(n)
}

/// Lie closure of `v`, either as a subalgebra or as a module over a fixed
/// subalgebra. Both modes are idempotent.
pub fn lie_closure_regular(
    sys: &RootSystem,
    v: &RegularSubalgebra,
    mode: &ClosureMode,
) -> Result<RegularSubalgebra, RootError> {
    match mode {
        ClosureMode::Algebra => {
            let m = sys.close_mask(v.mask(sys));
            let pairs = m & sys.neg_mask(m);
            let coroots: Vec<Vec<G>> = indices(pairs).map(|i| root_vector(sys.root(i))).collect();
            let toral = v.toral.join(&Subspace::span(sys.dim(), coroots));
            Ok(RegularSubalgebra { toral, roots: sys.set_of(m) })
        }
        ClosureMode::Module(l) => {
            let lm = l.mask(sys);
            let mut m = v.mask(sys);
            let mut toral = v.toral.clone();
            loop {
                let mut next = m;
                let mut new_coroots = Vec::new();
                for g in indices(lm) {
                    if !vanishes_on(sys.root(g), &toral) {
                        next |= 1u128 << g;
                    }
                    for b in indices(m) {
                        if sys.neg_index(b) == g {
                            new_coroots.push(root_vector(sys.root(b)));
                        } else if let Some(k) = sys.sum_index(g, b) {
                            next |= 1u128 << k;
                        }
                    }
                }
                let grown = toral.join(&Subspace::span(sys.dim(), new_coroots));
                if next == m && grown.dim() == toral.dim() {
                    break;
                }
                m = next;
                toral = grown;
            }
            Ok(RegularSubalgebra { toral, roots: sys.set_of(m) })
        }
    }
}
