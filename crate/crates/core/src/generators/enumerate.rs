//! Every connected unicyclic graph up to a vertex bound, one per
//! isomorphism class.
//!
//! A unicyclic graph is a cyclic sequence of rooted trees, so classes are
//! cyclic sequences of canonical rooted trees taken up to rotation and
//! reflection.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Canonical rooted trees of each size; a tree is its sorted list of
/// children, each named `(size, index)`.
struct RootedTrees {
    by_size: Vec<Vec<Vec<(usize, usize)>>>,
}

impl RootedTrees {
    fn new(max: usize) -> Self {
        let mut by_size: Vec<Vec<Vec<(usize, usize)>>> = vec![Vec::new(); max + 1];
        if max >= 1 {
            by_size[1].push(Vec::new());
        }
        for k in 2..=max {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            Self::children(&by_size, k - 1, (1, 0), &mut cur, &mut out);
            by_size[k] = out;
        }
        RootedTrees { by_size }
    }

    fn children(
        by_size: &[Vec<Vec<(usize, usize)>>],
        remaining: usize,
        min: (usize, usize),
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for size in min.0..=remaining {
            let start = if size == min.0 { min.1 } else { 0 };
            for idx in start..by_size[size].len() {
                cur.push((size, idx));
                Self::children(by_size, remaining - size, (size, idx), cur, out);
                cur.pop();
            }
        }
    }

    /// Adds the tree below `root`, children in depth-first order.
    fn attach(
        &self,
        tree: (usize, usize),
        root: usize,
        edges: &mut Vec<(usize, usize)>,
        next: &mut usize,
    ) {
        for &child in &self.by_size[tree.0][tree.1] {
            let id = *next;
            *next += 1;
            edges.push((root, id));
            self.attach(child, id, edges, next);
        }
    }
}

fn dihedral_min(seq: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let g = seq.len();
    let mut best = seq.to_vec();
    for r in 0..g {
        let fwd: Vec<_> = (0..g).map(|t| seq[(r + t) % g]).collect();
        let bwd: Vec<_> = (0..g).map(|t| seq[(r + g - t) % g]).collect();
        best = best.min(fwd).min(bwd);
    }
    best
}

/// All unicyclic graphs on exactly `n` vertices, up to isomorphism.
/// Vertices `0..g` form the cycle, tree vertices follow in cycle order.
pub fn unicyclic_graphs_with_n(n: usize) -> Vec<Graph> {
    if n < 3 {
        return Vec::new();
    }
    let trees = RootedTrees::new(n - 2);
    let mut out = Vec::new();
    for g in 3..=n {
        let mut seen = BTreeSet::new();
        let mut seq = Vec::with_capacity(g);
        sequences(&trees, g, n, &mut seq, &mut seen);
        for seq in seen {
            let mut edges: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
            let mut next = g;
            for (i, &t) in seq.iter().enumerate() {
                trees.attach(t, i, &mut edges, &mut next);
            }
            out.push(Graph::from_edges(n, &edges).expect("enumerated graphs are valid"));
        }
    }
    out
}

fn sequences(
    trees: &RootedTrees,
    g: usize,
    remaining: usize,
    seq: &mut Vec<(usize, usize)>,
    seen: &mut BTreeSet<Vec<(usize, usize)>>,
) {
    let left = g - seq.len();
    if left == 0 {
        if remaining == 0 {
            seen.insert(dihedral_min(seq));
        }
        return;
    }
    for size in 1..=remaining + 1 - left {
        for idx in 0..trees.by_size[size].len() {
            seq.push((size, idx));
            sequences(trees, g, remaining - size, seq, seen);
            seq.pop();
        }
    }
}

/// All unicyclic graphs with `3 ≤ n ≤ max_n`, ordered by `n` then girth.
pub fn all_unicyclic_graphs(max_n: usize) -> Vec<Graph> {
    (3..=max_n).flat_map(unicyclic_graphs_with_n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_tree_counts() {
        let t = RootedTrees::new(7);
        let counts: Vec<usize> = (1..=7).map(|k| t.by_size[k].len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48]);
    }

    #[test]
    fn unicyclic_counts() {
        // Connected unicyclic graphs on n vertices, n = 3..=10.
        let counts: Vec<usize> = (3..=10).map(|n| unicyclic_graphs_with_n(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89, 240, 657]);
    }
}
