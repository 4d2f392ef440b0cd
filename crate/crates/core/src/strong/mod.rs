//! Strong resolution: the strong resolving graph, exact independent sets,
//! strong metric dimension and strong basis forced vertices.

mod even;
mod mis;
mod odd;
mod reduce;
mod srg;

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::unicyclic::{decompose_unicyclic, UnicyclicDecomposition};

pub use even::{analyze_even, strong_basis_forced_even, EvenCycleAnalysis};
pub use mis::{max_independent_set, max_independent_set_with_cap, MISResult, MIS_CAP};
pub use odd::{maximal_sequences, strong_basis_forced_odd, OddCycleAnalysis};
pub use reduce::{reduce_to_star_form, StarForm};
pub use srg::{
    build_srg_definition, build_srg_unicyclic, check_star_form, is_maximally_distant, is_mmd,
    StrongResolvingGraph,
};

/// `alpha` is the independence number of `G_SR`; `dim_s = n − alpha` is its
/// vertex cover number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongReport {
    pub alpha: usize,
    pub dim_s: usize,
    pub forced_strong: BTreeSet<usize>,
    pub boundary: Vec<usize>,
}

impl StrongReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Some vertex of `s` has `u` on a shortest path to `v`, or `v` on one to `u`.
pub fn is_strong_resolving_set_oracle(dist: &DistanceMatrix, s: &[usize]) -> bool {
    let n = dist.n();
    (0..n).tuple_combinations().all(|(u, v)| {
        s.iter().any(|&w| {
            let (wu, wv, uv) = (dist.get(w, u), dist.get(w, v), dist.get(u, v));
            wu == wv + uv || wv == wu + uv
        })
    })
}

/// Smallest strong resolving set size by increasing cardinality.
pub fn strong_metric_dimension_exhaustive(dist: &DistanceMatrix, cap: usize) -> Result<usize> {
    let n = dist.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok((0..=n)
        .find(|&k| {
            (0..n)
                .combinations(k)
                .any(|s| is_strong_resolving_set_oracle(dist, &s))
        })
        .expect("V(G) strongly resolves G"))
}

/// Vertex cover number of the strong resolving graph.
pub fn strong_metric_dimension(g: &Graph) -> Result<usize> {
    let srg = build_srg_definition(g);
    Ok(g.n() - max_independent_set(&srg.adjacency())?.alpha)
}

/// Vertices in every minimum vertex cover of `G_SR`, found by exact solves.
pub fn strong_basis_forced_oracle(g: &Graph) -> Result<BTreeSet<usize>> {
    Ok(strong_report_oracle(g)?.forced_strong)
}

pub fn strong_report_oracle(g: &Graph) -> Result<StrongReport> {
    let srg = build_srg_definition(g);
    let mis = max_independent_set(&srg.adjacency())?;
    Ok(StrongReport {
        alpha: mis.alpha,
        dim_s: g.n() - mis.alpha,
        forced_strong: mis.vc,
        boundary: srg.boundary,
    })
}

/// Strong basis forced vertices from the even/odd characterizations, on the
/// star form, mapped back to the input ids.
pub fn strong_basis_forced_fast(dec: &UnicyclicDecomposition) -> Result<BTreeSet<usize>> {
    let star = reduce_to_star_form(dec);
    let sdec = decompose_unicyclic(&star.graph)?;
    let forced = if sdec.girth() % 2 == 0 {
        strong_basis_forced_even(&sdec)?
    } else {
        strong_basis_forced_odd(&sdec)?
    };
    Ok(forced.into_iter().map(|v| star.mapping[v]).collect())
}

/// `G_SR` of any unicyclic graph: the unicyclic construction on the star
/// form, mapped back. Vertices dropped by the reduction come out isolated.
pub fn strong_resolving_graph(dec: &UnicyclicDecomposition) -> Result<StrongResolvingGraph> {
    let star = reduce_to_star_form(dec);
    let srg = build_srg_unicyclic(&decompose_unicyclic(&star.graph)?)?;
    let edges = srg
        .edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (star.mapping[u], star.mapping[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    Ok(StrongResolvingGraph::from_edges(dec.graph().n(), edges))
}

/// Report built from the unicyclic construction of `G_SR` on the star form
/// (one exact solve for `alpha`) and the characterizations.
pub fn strong_report_fast(dec: &UnicyclicDecomposition) -> Result<StrongReport> {
    let star = reduce_to_star_form(dec);
    let sdec = decompose_unicyclic(&star.graph)?;
    let srg = build_srg_unicyclic(&sdec)?;
    let mis = max_independent_set(&srg.adjacency())?;
    let n = dec.graph().n();
    let alpha = mis.alpha + (n - star.graph.n());
    let mut boundary: Vec<usize> = srg.boundary.iter().map(|&v| star.mapping[v]).collect();
    boundary.sort_unstable();
    Ok(StrongReport {
        alpha,
        dim_s: n - alpha,
        forced_strong: strong_basis_forced_fast(dec)?,
        boundary,
    })
}
