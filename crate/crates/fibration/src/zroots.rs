use std::collections::BTreeMap;

use exactlin::{kernel, DenseMatrix, GaussRational as G, Rat, Subspace};
use rootsys::{ParabolicRootSet, Root, RootSet, RootSystem};

use crate::FibrationError;

/// One component `k_ν`: the roots restricting to `ν` on `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZRoot {
    /// Values of `ν` on the basis of `z`.
    pub restriction: Vec<Rat>,
    pub roots: RootSet,
    /// `ν` in terms of the simple positive z-roots (negative for `ν < 0`).
    pub label: Vec<i64>,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZRootDecomposition {
    /// `z = {H ∈ t : α(H) = 0 for α ∈ Q_r}`.
    pub center: Subspace,
    /// Positive components first, ordered by height then label.
    pub zroots: Vec<ZRoot>,
    /// Indices into `zroots`.
    pub simple_zroots: Vec<usize>,
}

impl ZRootDecomposition {
    pub fn positive(&self) -> impl Iterator<Item = &ZRoot> {
        self.zroots.iter().filter(|z| z.positive)
    }

    pub fn component(&self, label: &[i64]) -> Option<&ZRoot> {
        self.zroots.iter().find(|z| z.label == label)
    }

    /// Completeness, `Σ_{ν>0} k_ν = nr(q)` and `[k_ν, k_μ] ⊆ k_{ν+μ}`.
    pub fn verify(&self, sys: &RootSystem, q: &ParabolicRootSet) -> Result<(), FibrationError> {
        let covered: usize = self.zroots.iter().map(|z| z.roots.len()).sum();
        if covered + q.qr().len() != sys.len() {
            return Err(FibrationError::Verification("z-components do not cover the non-Levi roots".into()));
        }
        let positive: RootSet = self.positive().flat_map(|z| z.roots.iter().cloned()).collect();
        if &positive != q.qn() {
            return Err(FibrationError::Verification("positive z-components differ from nr(q)".into()));
        }
        for a in &self.zroots {
            for b in &self.zroots {
                let sum: Vec<i64> = a.label.iter().zip(&b.label).map(|(x, y)| x + y).collect();
                for ra in &a.roots {
                    for rb in &b.roots {
                        let s = ra.add(rb);
                        if !sys.is_root(&s) {
                            continue;
                        }
                        let home = if sum.iter().all(|&c| c == 0) {
                            q.qr().contains(&s)
                        } else {
                            self.component(&sum).is_some_and(|z| z.roots.contains(&s))
                        };
                        if !home {
                            return Err(FibrationError::Verification(format!("[{ra}, {rb}] leaves its component")));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn pairing(r: &Root, h: &[G]) -> Rat {
    r.0.iter().zip(h).fold(Rat::zero(), |acc, (&c, x)| acc.add(&x.re.mul(&Rat::from_int(c as i64))))
}

fn restriction(r: &Root, center: &Subspace) -> Vec<Rat> {
    center.basis().iter().map(|h| pairing(r, h)).collect()
}

/// Coefficients `c` with `Σ c_i simple_i = target`.
fn decompose(simple: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<i64>> {
    let k = simple.len();
    let rows: Vec<Vec<G>> = (0..target.len())
        .map(|r| {
            simple
                .iter()
                .map(|s| G::from_rat(s[r].clone()))
                .chain(std::iter::once(G::from_rat(target[r].neg())))
                .collect()
        })
        .collect();
    let ker = kernel(&DenseMatrix::from_rows(rows).ok()?);
    let v = ker.basis().iter().find(|b| !b[k].is_zero())?;
    let scale = v[k].inv();
    v[..k]
        .iter()
        .map(|c| {
            let c = c * &scale;
            (c.is_real() && c.re.is_integer()).then(|| c.re.numer().try_into().ok()).flatten()
        })
        .collect()
}

pub fn z_root_decomposition(sys: &RootSystem, q: &ParabolicRootSet) -> Result<ZRootDecomposition, FibrationError> {
    let eqs: Vec<Vec<G>> = q.qr().iter().map(rootsys::root_vector).collect();
    let center = exactlin::kernel_of_rows(eqs, sys.dim()).meet(sys.cartan());
    let mut groups: BTreeMap<Vec<Rat>, RootSet> = BTreeMap::new();
    for r in sys.roots() {
        if q.qr().contains(r) {
            continue;
        }
        groups.entry(restriction(r, &center)).or_default().insert(r.clone());
    }
    let pos: Vec<(&Vec<Rat>, &RootSet)> = groups.iter().filter(|(_, rs)| rs.is_subset(q.qn())).collect();
    let pos_keys: Vec<&Vec<Rat>> = pos.iter().map(|(k, _)| *k).collect();
    let simple: Vec<Vec<Rat>> = pos_keys
        .iter()
        .filter(|nu| {
            !pos_keys.iter().any(|a| {
                let rest: Vec<Rat> = nu.iter().zip(a.iter()).map(|(x, y)| x.sub(y)).collect();
                pos_keys.iter().any(|b| **b == rest)
            })
        })
        .map(|nu| (*nu).clone())
        .collect();
    let mut zroots = Vec::new();
    for (nu, roots) in &groups {
        let positive = roots.is_subset(q.qn());
        if !positive && !roots.iter().all(|r| q.qn().contains(&r.neg())) {
            return Err(FibrationError::Verification("a z-component mixes Q_n and −Q_n".into()));
        }
        let label = decompose(&simple, nu).ok_or_else(|| {
            FibrationError::Verification("z-root is not an integer combination of simple ones".into())
        })?;
        if label.iter().any(|&c| if positive { c < 0 } else { c > 0 }) {
            return Err(FibrationError::Verification("z-root label has mixed signs".into()));
        }
        zroots.push(ZRoot { restriction: nu.clone(), roots: roots.clone(), label, positive });
    }
    zroots.sort_by_key(|z| {
        let height: i64 = z.label.iter().sum();
        (!z.positive, height.abs(), z.label.iter().map(|c| -c.abs()).collect::<Vec<_>>())
    });
    let simple_zroots =
        (0..zroots.len()).filter(|&i| zroots[i].positive && zroots[i].label.iter().sum::<i64>() == 1).collect();
    Ok(ZRootDecomposition { center, zroots, simple_zroots })
}
