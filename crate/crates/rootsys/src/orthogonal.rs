use std::collections::BTreeSet;

use crate::root::{Root, RootSet};
use crate::system::RootSystem;

/// All inclusion-maximal subsets `S` of the candidates with `α ± β ∉ R`
/// for distinct `α, β ∈ S`. Roots are taken up to sign; the representative
/// is the positive root when it is a candidate. Output is sorted.
pub fn strongly_orthogonal_maximal_sets(sys: &RootSystem, candidates: &RootSet) -> Vec<RootSet> {
    let mut reps: Vec<Root> = Vec::new();
    for r in candidates {
        let n = r.neg();
        if reps.contains(&n) {
            continue;
        }
        if sys.is_positive(r) || !candidates.contains(&n) {
            reps.push(r.clone());
        }
    }
    let k = reps.len();
    let compatible = |a: &Root, b: &Root| !sys.is_root(&a.add(b)) && !sys.is_root(&a.sub(b)) && a != b && *a != b.neg();
    let adj: Vec<Vec<bool>> =
        (0..k).map(|i| (0..k).map(|j| i != j && compatible(&reps[i], &reps[j])).collect()).collect();
    let mut out: BTreeSet<RootSet> = BTreeSet::new();
    bron_kerbosch(&adj, Vec::new(), (0..k).collect(), Vec::new(), &mut |clique| {
        out.insert(clique.iter().map(|&i| reps[i].clone()).collect());
    });
    out.into_iter().collect()
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            emit(&r);
        }
        return;
    }
    let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, emit);
        p.retain(|&u| u != v);
        x.push(v);
    }
}
