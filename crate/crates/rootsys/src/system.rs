//! Classical root systems with precomputed index tables.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use exactlin::{GaussRational as G, Rat, Subspace};

use crate::root::{Root, RootSet};
use crate::RootError;

/// Bitmask over the indices of [`RootSystem::roots`].
pub type Mask = u128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for Family {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Family, RootError> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            _ => Err(RootError::Unsupported(format!("family {s:?}"))),
        }
    }
}

#[derive(Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    dim: usize,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    neg: Vec<usize>,
    sums: Vec<Vec<Option<usize>>>,
    positive: Mask,
    simple: Vec<usize>,
    coeffs: Vec<Vec<i64>>,
    reflections: Vec<Vec<usize>>,
    cartan: Subspace,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, o: &Self) -> bool {
        self.family == o.family && self.rank == o.rank
    }
}

impl Eq for RootSystem {}

fn all_roots(family: Family, rank: usize) -> (usize, Vec<Root>, Vec<Root>) {
    let n = rank;
    let dim = if family == Family::A { n + 1 } else { n };
    let e = |k: usize| Root::e(dim, k);
    let mut pos = Vec::new();
    match family {
        Family::A => {
            for i in 0..dim {
                for j in i + 1..dim {
                    pos.push(e(i).sub(&e(j)));
                }
            }
        }
        Family::B | Family::C | Family::D => {
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(e(i).sub(&e(j)));
                    pos.push(e(i).add(&e(j)));
                }
                match family {
                    Family::B => pos.push(e(i)),
                    Family::C => pos.push(e(i).scale(2)),
                    _ => {}
                }
            }
        }
    }
    let mut simple: Vec<Root> = (0..n.saturating_sub(1)).map(|i| e(i).sub(&e(i + 1))).collect();
    match family {
        Family::A => simple.push(e(n - 1).sub(&e(n))),
        Family::B => simple.push(e(n - 1)),
        Family::C => simple.push(e(n - 1).scale(2)),
        Family::D => simple.push(e(n - 2).add(&e(n - 1))),
    }
    (dim, pos, simple)
}

/// Solves `Σ c_i s_i = x` exactly; `None` if `x` is outside the span.
fn coefficients_in(simple: &[Root], x: &Root) -> Option<Vec<Rat>> {
    let dim = x.dim();
    let k = simple.len();
    let mut rows: Vec<Vec<G>> = (0..dim)
        .map(|r| {
            let mut row: Vec<G> = simple.iter().map(|s| G::from_int(s.0[r] as i64)).collect();
            row.push(G::from_int(x.0[r] as i64));
            row
        })
        .collect();
    let pivots = exactlin::rref_rows(&mut rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Rat::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        c[p] = row[k].re.clone();
    }
    Some(c)
}

impl RootSystem {
    /// The root system of the given classical family and rank, roots in `e_i`
    /// coordinates (dimension `rank + 1` for type A). Systems with more than
    /// 128 roots are rejected.
    pub fn build(family: Family, rank: usize) -> Result<RootSystem, RootError> {
        if rank == 0 {
            return Err(RootError::Unsupported(format!("{family}0")));
        }
        if family == Family::D && rank < 3 {
            return Err(RootError::Unsupported(format!("D{rank} (type D needs rank at least 3)")));
        }
        let count = match family {
            Family::A => rank * (rank + 1),
            Family::B | Family::C => 2 * rank * rank,
            Family::D => 2 * rank * (rank - 1),
        };
        if count > 128 {
            return Err(RootError::Unsupported(format!("{family}{rank} has {count} roots (limit 128)")));
        }
        let (dim, pos, simple_roots) = all_roots(family, rank);
        let mut roots: Vec<Root> = pos.iter().cloned().chain(pos.iter().map(Root::neg)).collect();
        roots.sort();
        debug_assert_eq!(roots.len(), count);
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let neg = roots.iter().map(|r| index[&r.neg()]).collect();
        let sums = roots.iter().map(|a| roots.iter().map(|b| index.get(&a.add(b)).copied()).collect()).collect();
        let positive = pos.iter().fold(0u128, |m, r| m | (1u128 << index[r]));
        let simple = simple_roots.iter().map(|r| index[r]).collect();
        let coeffs = roots
            .iter()
            .map(|r| {
                coefficients_in(&simple_roots, r)
                    .expect("roots lie in the span of the simple roots")
                    .iter()
                    .map(|c| {
                        assert!(c.is_integer(), "integral simple-root coefficients");
                        c.numer().try_into().expect("small coefficient")
                    })
                    .collect()
            })
            .collect();
        let reflections = simple_roots
            .iter()
            .map(|s| {
                let ss = s.dot(s);
                roots
                    .iter()
                    .map(|r| {
                        let k = 2 * r.dot(s) / ss;
                        index[&r.sub(&s.scale(k as i32))]
                    })
                    .collect()
            })
            .collect();
        let cartan = if family == Family::A {
            Subspace::span(dim, simple_roots.iter().map(root_vector).collect())
        } else {
            Subspace::full(dim)
        };
        let sys =
            RootSystem { family, rank, dim, roots, index, neg, sums, positive, simple, coeffs, reflections, cartan };
        sys.check_invariants();
        Ok(sys)
    }

    fn check_invariants(&self) {
        for (i, c) in self.coeffs.iter().enumerate() {
            let positive = self.positive >> i & 1 == 1;
            assert!(c.iter().all(|&x| if positive { x >= 0 } else { x <= 0 }));
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the `e_i` coordinate space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn neg_index(&self, i: usize) -> usize {
        self.neg[i]
    }

    /// Index of `roots[i] + roots[j]` when that sum is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i][j]
    }

    pub fn positive_mask(&self) -> Mask {
        self.positive
    }

    pub fn full_mask(&self) -> Mask {
        if self.roots.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.roots.len()) - 1
        }
    }

    pub fn positive_roots(&self) -> RootSet {
        self.set_of(self.positive)
    }

    pub fn is_positive(&self, r: &Root) -> bool {
        self.index_of(r).is_some_and(|i| self.positive >> i & 1 == 1)
    }

    /// Simple roots in Bourbaki order.
    pub fn simple_roots(&self) -> Vec<Root> {
        self.simple.iter().map(|&i| self.roots[i].clone()).collect()
    }

    pub fn simple_index(&self, k: usize) -> usize {
        self.simple[k]
    }

    /// Integer coefficients of a root on the simple roots.
    pub fn simple_coefficients(&self, r: &Root) -> Option<&[i64]> {
        self.index_of(r).map(|i| self.coeffs[i].as_slice())
    }

    /// `α₁+α₂+α₃`-style label of a root.
    pub fn simple_label(&self, r: &Root) -> Option<String> {
        let c = self.simple_coefficients(r)?;
        let mut s = String::new();
        for (k, &x) in c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let sign = if x < 0 {
                "-"
            } else if s.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = x.unsigned_abs();
            if mag == 1 {
                s.push_str(&format!("{sign}a{}", k + 1));
            } else {
                s.push_str(&format!("{sign}{mag}a{}", k + 1));
            }
        }
        Some(s)
    }

    /// Root with the given simple-root coefficients.
    pub fn from_simple_coefficients(&self, c: &[i64]) -> Option<Root> {
        let mut v = Root::zero(self.dim);
        for (k, &x) in c.iter().enumerate() {
            v = v.add(&self.roots[self.simple[k]].scale(x as i32));
        }
        self.is_root(&v).then_some(v)
    }

    /// The Cartan subalgebra inside the coordinate space (trace-zero
    /// hyperplane for type A, everything otherwise).
    pub fn cartan(&self) -> &Subspace {
        &self.cartan
    }

    pub fn mask_of<'a>(&self, set: impl IntoIterator<Item = &'a Root>) -> Result<Mask, RootError> {
        let mut m = 0u128;
        for r in set {
            let i = self.index_of(r).ok_or_else(|| RootError::NotARoot(r.to_string()))?;
            m |= 1u128 << i;
        }
        Ok(m)
    }

    pub fn set_of(&self, mask: Mask) -> RootSet {
        indices(mask).map(|i| self.roots[i].clone()).collect()
    }

    pub fn neg_mask(&self, mask: Mask) -> Mask {
        indices(mask).fold(0u128, |m, i| m | (1u128 << self.neg[i]))
    }

    pub fn parse_root(&self, s: &str) -> Result<Root, RootError> {
        let r = Root::parse(s, self.dim)?;
        if self.is_root(&r) {
            Ok(r)
        } else {
            Err(RootError::NotARoot(s.to_string()))
        }
    }

    pub fn parse_set<S: AsRef<str>>(&self, items: &[S]) -> Result<RootSet, RootError> {
        items.iter().map(|s| self.parse_root(s.as_ref())).collect()
    }

    /// Smallest closed mask containing `mask`.
    pub fn close_mask(&self, mut mask: Mask) -> Mask {
        loop {
            let mut next = mask;
            for i in indices(mask) {
                for j in indices(mask) {
                    if let Some(k) = self.sums[i][j] {
                        next |= 1u128 << k;
                    }
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    pub fn is_closed_mask(&self, mask: Mask) -> bool {
        self.close_mask(mask) == mask
    }

    /// Applies the `k`-th simple reflection to every root of the mask.
    pub fn reflect_mask(&self, k: usize, mask: Mask) -> Mask {
        indices(mask).fold(0u128, |m, i| m | (1u128 << self.reflections[k][i]))
    }

    pub fn reflect_root(&self, k: usize, r: &Root) -> Root {
        let s = &self.roots[self.simple[k]];
        r.sub(&s.scale((2 * r.dot(s) / s.dot(s)) as i32))
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match self.family {
            Family::A => fact(self.rank + 1),
            Family::B | Family::C => fact(self.rank) << self.rank,
            Family::D => fact(self.rank) << (self.rank - 1),
        }
    }

    /// Orbit of a root set under the Weyl group, generated by simple reflections.
    pub fn weyl_orbit(&self, mask: Mask) -> HashSet<Mask> {
        let mut seen = HashSet::from([mask]);
        let mut queue = VecDeque::from([mask]);
        while let Some(m) = queue.pop_front() {
            for k in 0..self.rank {
                let r = self.reflect_mask(k, m);
                if seen.insert(r) {
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// A word in simple reflections carrying `from` to `to`, if one exists.
    pub fn conjugating_word(&self, from: Mask, to: Mask) -> Option<Vec<usize>> {
        let mut parent: HashMap<Mask, (Mask, usize)> = HashMap::new();
        let mut queue = VecDeque::from([from]);
        parent.insert(from, (from, usize::MAX));
        while let Some(m) = queue.pop_front() {
            if m == to {
                let mut word = Vec::new();
                let mut cur = m;
                while cur != from {
                    let (p, k) = parent[&cur];
                    word.push(k);
                    cur = p;
                }
                return Some(word);
            }
            for k in 0..self.rank {
                let r = self.reflect_mask(k, m);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(r) {
                    e.insert((m, k));
                    queue.push_back(r);
                }
            }
        }
        None
    }

    /// Enumerates the Weyl group as signed permutations of the coordinates:
    /// `w(x)_{perm[i]} = signs[i]·x_i`.
    pub fn weyl_elements(&self) -> Vec<WeylElement> {
        let n = self.dim;
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for k in 0..n {
                    if !p.contains(&k) {
                        let mut q = p.clone();
                        q.push(k);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        let sign_patterns: Vec<Vec<i32>> = match self.family {
            Family::A => vec![vec![1; n]],
            _ => (0..1u32 << n)
                .map(|bits| (0..n).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect::<Vec<i32>>())
                .filter(|s| self.family != Family::D || s.iter().filter(|&&x| x < 0).count() % 2 == 0)
                .collect(),
        };
        let mut out = Vec::new();
        for p in &perms {
            for s in &sign_patterns {
                out.push(WeylElement { perm: p.clone(), signs: s.clone() });
            }
        }
        out
    }
}

/// A signed permutation of the `e_i` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i32>,
}

impl WeylElement {
    pub fn apply(&self, r: &Root) -> Root {
        let mut out = vec![0; r.dim()];
        for (i, &x) in r.0.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] * x;
        }
        Root(out)
    }

    pub fn apply_set(&self, s: &RootSet) -> RootSet {
        s.iter().map(|r| self.apply(r)).collect()
    }
}

pub fn root_vector(r: &Root) -> Vec<G> {
    r.0.iter().map(|&x| G::from_int(x as i64)).collect()
}

/// Indices of the set bits of a mask, ascending.
pub fn indices(mask: Mask) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts() {
        for (f, r, n) in
            [(Family::A, 3, 12), (Family::B, 3, 18), (Family::C, 2, 8), (Family::D, 4, 24), (Family::A, 1, 2)]
        {
            let s = RootSystem::build(f, r).unwrap();
            assert_eq!(s.len(), n, "{f}{r}");
            assert_eq!(s.positive_roots().len(), n / 2);
            for (i, r) in s.roots().iter().enumerate() {
                assert_eq!(s.root(s.neg_index(i)), &r.neg());
            }
        }
        assert!(RootSystem::build(Family::D, 2).is_err());
        assert!(RootSystem::build(Family::A, 0).is_err());
    }

    #[test]
    fn c2_uses_long_roots() {
        let s = RootSystem::build(Family::C, 2).unwrap();
        let expect = s.parse_set(&["2e1", "-2e1", "2e2", "-2e2", "e1+e2", "e1-e2", "-e1+e2", "-e1-e2"]).unwrap();
        assert_eq!(s.set_of(s.full_mask()), expect);
        assert_eq!(s.simple_roots(), vec![s.parse_root("e1-e2").unwrap(), s.parse_root("2e2").unwrap()]);
    }

    #[test]
    fn weyl_group_orders() {
        for (f, r) in [(Family::A, 2), (Family::B, 3), (Family::C, 2), (Family::D, 4)] {
            let s = RootSystem::build(f, r).unwrap();
            let w = s.weyl_elements();
            assert_eq!(w.len() as u64, s.weyl_order());
            for g in &w {
                for root in s.roots() {
                    assert!(s.is_root(&g.apply(root)));
                }
            }
            // orbit of a generic single root under reflections equals the W-orbit
            let orbit = s.weyl_orbit(1u128 << s.simple_index(0));
            let by_elements: HashSet<Mask> =
                w.iter().map(|g| 1u128 << s.index_of(&g.apply(&s.simple_roots()[0])).unwrap()).collect();
            assert_eq!(orbit, by_elements);
        }
    }

    #[test]
    fn simple_labels() {
        let s = RootSystem::build(Family::A, 4).unwrap();
        let r = s.parse_root("e1-e4").unwrap();
        assert_eq!(s.simple_label(&r).unwrap(), "a1+a2+a3");
        assert_eq!(s.from_simple_coefficients(&[1, 1, 1, 0]).unwrap(), r);
    }
}
