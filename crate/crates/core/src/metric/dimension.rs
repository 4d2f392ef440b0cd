//! Metric dimension of a unicyclic graph in polynomial time.
//!
//! The dimension is either `L + max{2 − b, 0}` or one more. A minimum
//! branch-resolving set `R` is built from thread leaves, leaving out the
//! shortest thread at each cycle vertex, and completed with representatives
//! `u_i` of the non-branch-active cycle indices (`v_i`, or the leaf of its
//! thread).

use itertools::Itertools;

use crate::unicyclic::UnicyclicDecomposition;

use super::config::is_resolving_set_fast;

fn branch_resolving_core(dec: &UnicyclicDecomposition) -> Vec<usize> {
    let mut r = Vec::with_capacity(dec.l_value());
    for v in 0..dec.graph().n() {
        let threads = dec.threads(v);
        if threads.len() < 2 {
            continue;
        }
        let skip = if dec.is_on_cycle(v) {
            (0..threads.len())
                .min_by_key(|&t| threads[t].len())
                .unwrap()
        } else {
            0
        };
        r.extend(
            (0..threads.len())
                .filter(|&t| t != skip)
                .map(|t| threads[t].leaf()),
        );
    }
    r
}

fn representatives(dec: &UnicyclicDecomposition) -> Vec<usize> {
    (0..dec.girth())
        .filter(|i| dec.branch_active().binary_search(i).is_err())
        .map(|i| match dec.cycle_threads(i).first() {
            Some(th) => th.leaf(),
            None => dec.cycle_vertex(i),
        })
        .collect()
}

fn complete(
    dec: &UnicyclicDecomposition,
    core: &[usize],
    pool: &[usize],
    extra: usize,
) -> Option<Vec<usize>> {
    pool.iter().copied().combinations(extra).find_map(|add| {
        let mut s = core.to_vec();
        s.extend(add);
        is_resolving_set_fast(dec, &s).then(|| {
            s.sort_unstable();
            s
        })
    })
}

/// One metric basis, sorted.
pub fn find_basis_fast(dec: &UnicyclicDecomposition) -> Vec<usize> {
    let core = branch_resolving_core(dec);
    let reps = representatives(dec);
    let base = dec.dimension_base();
    if let Some(s) = complete(dec, &core, &reps, base - core.len()) {
        return s;
    }
    let extra = base + 1 - core.len();
    if let Some(s) = complete(dec, &core, &reps, extra) {
        return s;
    }
    let rest: Vec<usize> = (0..dec.graph().n()).filter(|v| !core.contains(v)).collect();
    complete(dec, &core, &rest, extra).unwrap_or_else(|| (0..dec.graph().n()).collect())
}

/// `dim(G)`: the base value when the restricted search finds a resolving
/// set of that size, otherwise one more.
pub fn metric_dimension(dec: &UnicyclicDecomposition) -> usize {
    let core = branch_resolving_core(dec);
    let reps = representatives(dec);
    let base = dec.dimension_base();
    match complete(dec, &core, &reps, base - core.len()) {
        Some(_) => base,
        None => base + 1,
    }
}
