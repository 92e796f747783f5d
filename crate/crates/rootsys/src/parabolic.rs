//! Parabolic root sets: closed `Q` with `Q ∪ −Q = R`.

use std::collections::BTreeSet;
use std::fmt;

use exactlin::{GaussRational as G, Rat};
use rayon::prelude::*;

use crate::regular::RegularSubalgebra;
use crate::root::{format_set, Root, RootSet};
use crate::system::{indices, Family, Mask, RootSystem};
use crate::RootError;

pub const DEFAULT_RANK_CAP: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicRootSet {
    q: RootSet,
    qn: RootSet,
    qr: RootSet,
}

impl fmt::Debug for ParabolicRootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_n={:?} Q_r={:?}", format_set(&self.qn), format_set(&self.qr))
    }
}

impl ParabolicRootSet {
    /// Checks that `q` is closed and `q ∪ −q = R`.
    pub fn new(sys: &RootSystem, q: RootSet) -> Result<Self, RootError> {
        let m = sys.mask_of(&q)?;
        if m | sys.neg_mask(m) != sys.full_mask() {
            return Err(RootError::Precondition("Q ∪ −Q is not the whole root system".into()));
        }
        if !sys.is_closed_mask(m) {
            return Err(RootError::NotClosed("parabolic set".into()));
        }
        Ok(Self::from_mask(sys, m))
    }

    pub(crate) fn from_mask(sys: &RootSystem, m: Mask) -> Self {
        let neg = sys.neg_mask(m);
        ParabolicRootSet { q: sys.set_of(m), qn: sys.set_of(m & !neg), qr: sys.set_of(m & neg) }
    }

    /// `Q = {α : α(A) ≥ 0}` for a grading covector in the coordinate space.
    pub fn from_grading(sys: &RootSystem, a: &[Rat]) -> Result<Self, RootError> {
        if a.len() != sys.dim() {
            return Err(RootError::Precondition(format!(
                "grading has {} coordinates, expected {}",
                a.len(),
                sys.dim()
            )));
        }
        let mut m = 0u128;
        for (i, r) in sys.roots().iter().enumerate() {
            if eval(r, a).signum() >= 0 {
                m |= 1u128 << i;
            }
        }
        Ok(Self::from_mask(sys, m))
    }

    /// `Q` = roots whose coefficients on the crossed simple roots are
    /// nonnegative. Crosses are 1-based Bourbaki indices.
    pub fn from_crosses(sys: &RootSystem, crosses: &[usize]) -> Result<Self, RootError> {
        check_crosses(sys, crosses)?;
        let mut m = 0u128;
        for (i, r) in sys.roots().iter().enumerate() {
            let c = sys.simple_coefficients(r).expect("root");
            if crosses.iter().all(|&k| c[k - 1] >= 0) {
                m |= 1u128 << i;
            }
        }
        Ok(Self::from_mask(sys, m))
    }

    pub fn q(&self) -> &RootSet {
        &self.q
    }

    pub fn qn(&self) -> &RootSet {
        &self.qn
    }

    pub fn qr(&self) -> &RootSet {
        &self.qr
    }

    pub fn mask(&self, sys: &RootSystem) -> Mask {
        sys.mask_of(&self.q).expect("roots of the system")
    }

    pub fn is_borel(&self) -> bool {
        self.qr.is_empty()
    }

    /// `t ⊕ Σ_Q k^α`.
    pub fn subalgebra(&self, sys: &RootSystem) -> RegularSubalgebra {
        RegularSubalgebra::from_parts(sys.cartan().clone(), self.q.clone())
    }

    /// The reductive part `t ⊕ Σ_{Q_r} k^α`.
    pub fn levi(&self, sys: &RootSystem) -> RegularSubalgebra {
        RegularSubalgebra::from_parts(sys.cartan().clone(), self.qr.clone())
    }

    pub fn contains(&self, o: &ParabolicRootSet) -> bool {
        o.q.is_subset(&self.q)
    }

    /// Crossed simple roots if `Q` contains the standard Borel.
    pub fn crosses(&self, sys: &RootSystem) -> Option<Vec<usize>> {
        if !sys.positive_roots().is_subset(&self.q) {
            return None;
        }
        Some((1..=sys.rank()).filter(|&k| !self.q.contains(&sys.root(sys.simple_index(k - 1)).neg())).collect())
    }
}

fn eval(r: &Root, a: &[Rat]) -> Rat {
    r.0.iter().zip(a).fold(Rat::zero(), |acc, (&c, x)| acc.add(&x.mul(&Rat::from_int(c as i64))))
}

fn check_crosses(sys: &RootSystem, crosses: &[usize]) -> Result<(), RootError> {
    let mut seen = BTreeSet::new();
    for &k in crosses {
        if k == 0 || k > sys.rank() {
            return Err(RootError::IndexOutOfRange { index: k, rank: sys.rank() });
        }
        if !seen.insert(k) {
            return Err(RootError::Precondition(format!("simple root {k} crossed twice")));
        }
    }
    Ok(())
}

/// Sum of the fundamental coweights of the crossed simple roots, as a vector
/// of the Cartan coordinate space.
pub fn crossed_coweight(sys: &RootSystem, crosses: &[usize]) -> Result<Vec<Rat>, RootError> {
    check_crosses(sys, crosses)?;
    let dim = sys.dim();
    let mut rows: Vec<Vec<G>> = sys
        .simple_roots()
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let mut row: Vec<G> = s.0.iter().map(|&x| G::from_int(x as i64)).collect();
            row.push(G::from_int(crosses.contains(&(k + 1)) as i64));
            row
        })
        .collect();
    if sys.family() == Family::A {
        let mut row = vec![G::one(); dim];
        row.push(G::zero());
        rows.push(row);
    }
    let pivots = exactlin::rref_rows(&mut rows, dim + 1);
    debug_assert_eq!(pivots.len(), dim);
    let mut out = vec![Rat::zero(); dim];
    for (row, &p) in rows.iter().zip(&pivots) {
        out[p] = row[dim].re.clone();
    }
    Ok(out)
}

/// All parabolic sets: Weyl conjugates of the standard ones, sorted
/// lexicographically by their sorted root lists.
pub fn enumerate_parabolics(sys: &RootSystem, rank_cap: usize) -> Result<Vec<ParabolicRootSet>, RootError> {
    if sys.rank() > rank_cap {
        return Err(RootError::RankCap { rank: sys.rank(), cap: rank_cap });
    }
    let r = sys.rank();
    let masks: BTreeSet<Mask> = (0u32..1 << r)
        .into_par_iter()
        .map(|bits| {
            let crosses: Vec<usize> = (1..=r).filter(|k| bits >> (k - 1) & 1 == 1).collect();
            let std = ParabolicRootSet::from_crosses(sys, &crosses).expect("valid crosses").mask(sys);
            sys.weyl_orbit(std)
        })
        .flatten_iter()
        .collect::<Vec<Mask>>()
        .into_iter()
        .collect();
    let mut out: Vec<ParabolicRootSet> = masks.into_iter().map(|m| ParabolicRootSet::from_mask(sys, m)).collect();
    out.sort();
    Ok(out)
}

/// Brute-force list of parabolic sets: every sign pattern on the positive
/// roots (`+`, `−` or both) whose union is closed. Exponential; meant for
/// cross-checking small ranks.
pub fn parabolic_oracle(sys: &RootSystem) -> Vec<ParabolicRootSet> {
    let pos: Vec<usize> = indices(sys.positive_mask()).collect();
    let total = 3u64.pow(pos.len() as u32);
    let masks: BTreeSet<Mask> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut m = 0u128;
            for &i in &pos {
                match code % 3 {
                    0 => m |= 1u128 << i,
                    1 => m |= 1u128 << sys.neg_index(i),
                    _ => m |= (1u128 << i) | (1u128 << sys.neg_index(i)),
                }
                code /= 3;
            }
            sys.is_closed_mask(m).then_some(m)
        })
        .collect::<Vec<Mask>>()
        .into_iter()
        .collect();
    let mut out: Vec<ParabolicRootSet> = masks.into_iter().map(|m| ParabolicRootSet::from_mask(sys, m)).collect();
    out.sort();
    out
}
