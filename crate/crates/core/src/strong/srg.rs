//! Mutually maximally distant pairs and the strong resolving graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::unicyclic::UnicyclicDecomposition;

/// Graph on `V(G)` whose edges are the MMD pairs. It may be disconnected, so
/// it is kept apart from [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongResolvingGraph {
    pub n: usize,
    /// Sorted pairs `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
    pub boundary: Vec<usize>,
    pub isolated: Vec<usize>,
}

impl StrongResolvingGraph {
    pub fn from_edges(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut touched = vec![false; n];
        for &(u, v) in &edges {
            touched[u] = true;
            touched[v] = true;
        }
        let (boundary, isolated) = (0..n).partition(|&v| touched[v]);
        StrongResolvingGraph {
            n,
            edges: edges.into_iter().collect(),
            boundary,
            isolated,
        }
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

/// Every neighbor of `u` is at most as far from `v` as `u` is.
pub fn is_maximally_distant(g: &Graph, dist: &DistanceMatrix, u: usize, v: usize) -> bool {
    let duv = dist.get(v, u);
    g.neighbors(u).iter().all(|&w| dist.get(v, w) <= duv)
}

pub fn is_mmd(g: &Graph, dist: &DistanceMatrix, u: usize, v: usize) -> bool {
    u != v && is_maximally_distant(g, dist, u, v) && is_maximally_distant(g, dist, v, u)
}

/// MMD pairs straight from the definition; works for any connected graph.
pub fn build_srg_definition(g: &Graph) -> StrongResolvingGraph {
    let dist = all_pairs_distances(g);
    let n = g.n();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| is_mmd(g, &dist, u, v))
        .collect();
    StrongResolvingGraph::from_edges(n, edges)
}

/// Every tree `T_{v_i}` is `v_i` plus pendants.
pub fn check_star_form(dec: &UnicyclicDecomposition) -> Result<()> {
    let g = dec.graph();
    for i in 0..dec.girth() {
        let vi = dec.cycle_vertex(i);
        if dec
            .component(i)
            .iter()
            .any(|&u| u != vi && g.degree(u) != 1)
        {
            return Err(Error::NotReduced(vi));
        }
    }
    Ok(())
}

/// The strong resolving graph of a unicyclic graph in star form, assembled
/// from the cycle: degree-2 cycle vertices pair with their (near-)antipodes,
/// a decorated cycle vertex is replaced by its leaves, and all leaves form a
/// clique. Decorated cycle vertices stay isolated.
pub fn build_srg_unicyclic(dec: &UnicyclicDecomposition) -> Result<StrongResolvingGraph> {
    check_star_form(dec)?;
    let g = dec.graph();
    let girth = dec.girth();
    let block = |i: usize| -> Vec<usize> {
        let vi = dec.cycle_vertex(i);
        if g.degree(vi) == 2 {
            vec![vi]
        } else {
            g.neighbors(vi)
                .iter()
                .copied()
                .filter(|&u| g.degree(u) == 1)
                .collect()
        }
    };
    let mut edges = BTreeSet::new();
    let mut join = |a: &[usize], b: &[usize]| {
        for &x in a {
            for &y in b {
                if x != y {
                    edges.insert((x.min(y), x.max(y)));
                }
            }
        }
    };
    let half = girth / 2;
    let pairs: Vec<(usize, usize)> = if girth.is_multiple_of(2) {
        (0..half).map(|i| (i, i + half)).collect()
    } else {
        (0..girth).map(|i| (i, (i + half) % girth)).collect()
    };
    for (i, j) in pairs {
        join(&block(i), &block(j));
    }
    let leaves = g.leaves();
    join(&leaves, &leaves);
    Ok(StrongResolvingGraph::from_edges(g.n(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unicyclic::decompose_unicyclic;

    #[test]
    fn star_leaves_are_mmd() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = all_pairs_distances(&g);
        assert!(is_mmd(&g, &d, 1, 2) && is_mmd(&g, &d, 2, 3));
        assert!(!is_mmd(&g, &d, 0, 1));
    }

    #[test]
    fn path_has_one_edge() {
        let srg = build_srg_definition(&Graph::path(5));
        assert_eq!(srg.edges, vec![(0, 4)]);
        assert_eq!(srg.isolated, vec![1, 2, 3]);
        let d = all_pairs_distances(&Graph::path(4));
        assert!(!is_mmd(&Graph::path(4), &d, 0, 1));
    }

    #[test]
    fn even_cycle_is_a_matching() {
        let srg = build_srg_definition(&Graph::cycle(6));
        assert_eq!(srg.edges, vec![(0, 3), (1, 4), (2, 5)]);
        let dec = decompose_unicyclic(&Graph::cycle(6)).unwrap();
        assert_eq!(build_srg_unicyclic(&dec).unwrap(), srg);
    }

    #[test]
    fn odd_cycle_is_a_cycle() {
        // v0 v3 v1 v4 v2 v0
        let srg = build_srg_definition(&Graph::cycle(5));
        assert_eq!(srg.edges, vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        let dec = decompose_unicyclic(&Graph::cycle(5)).unwrap();
        assert_eq!(build_srg_unicyclic(&dec).unwrap(), srg);
        let c7 = decompose_unicyclic(&Graph::cycle(7)).unwrap();
        assert_eq!(build_srg_unicyclic(&c7).unwrap().edges.len(), 7);
    }

    #[test]
    fn non_star_form_is_rejected() {
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(0, 6), (6, 7)]);
        let dec = decompose_unicyclic(&Graph::from_edges(8, &e).unwrap()).unwrap();
        assert_eq!(build_srg_unicyclic(&dec).unwrap_err(), Error::NotReduced(0));
    }
}
