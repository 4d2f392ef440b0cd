//! Graph surgeries that move basis forced vertices around, each paired with
//! the prediction its structure theorem makes and an oracle cross-check.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::metric::{
    basis_forced_fast, basis_forced_oracle, enumerate_metric_bases_oracle, find_basis_fast,
};
use crate::unicyclic::{decompose_unicyclic, UnicyclicDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verification {
    Confirmed,
    Refuted,
    Unverified,
}

impl Verification {
    fn from(predicted: bool, observed: Option<bool>) -> Self {
        match observed {
            None => Verification::Unverified,
            Some(o) if o == predicted => Verification::Confirmed,
            Some(_) => Verification::Refuted,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    pub graph: Graph,
    /// Old id to new id; `None` for removed vertices.
    pub mapping: Vec<Option<usize>>,
    /// Vertex of the input graph the surgery happened at.
    pub anchor: usize,
    /// What the theorem predicts: preservation for `extend`, forcedness of
    /// the new or remaining vertex for the others.
    pub predicted: bool,
    /// The same statement checked by the oracle, when within cap.
    pub observed: Option<bool>,
    pub verification: Verification,
}

impl TransformResult {
    fn new(
        graph: Graph,
        mapping: Vec<Option<usize>>,
        anchor: usize,
        predicted: bool,
        observed: Option<bool>,
    ) -> Self {
        TransformResult {
            graph,
            mapping,
            anchor,
            predicted,
            observed,
            verification: Verification::from(predicted, observed),
        }
    }

    pub fn to_json(&self) -> String {
        let graph: serde_json::Value =
            serde_json::from_str(&self.graph.to_json()).expect("graph JSON is valid");
        serde_json::json!({
            "graph": graph,
            "mapping": self.mapping,
            "anchor": self.anchor,
            "predicted": self.predicted,
            "observed": self.observed,
            "verification": self.verification,
        })
        .to_string()
    }
}

fn identity_mapping(n: usize) -> Vec<Option<usize>> {
    (0..n).map(Some).collect()
}

/// `(dim, forced)` by the oracle within cap, else by the unicyclic fast path.
pub fn forced_set(g: &Graph, cap: usize) -> Result<(usize, BTreeSet<usize>)> {
    if g.n() <= cap {
        let r = basis_forced_oracle(&all_pairs_distances(g), cap)?;
        return Ok((r.dim, r.forced));
    }
    match decompose_unicyclic(g) {
        Ok(dec) => {
            let r = basis_forced_fast(&dec);
            Ok((r.dim, r.forced))
        }
        Err(_) => Err(Error::CapExceeded { n: g.n(), cap }),
    }
}

/// Attaches a path of `m` vertices at a non-forced vertex farthest from the
/// smallest forced vertex. The forced set and the dimension are preserved.
pub fn extend_with_path(g: &Graph, m: usize, cap: usize) -> Result<TransformResult> {
    if m == 0 {
        return Err(Error::PreconditionViolated(
            "path length must be at least 1".into(),
        ));
    }
    let (dim, forced) = forced_set(g, cap)?;
    let Some(&b) = forced.iter().next() else {
        return Err(Error::NoForcedVertex);
    };
    if forced.len() == g.n() {
        return Err(Error::DegenerateForcedSet);
    }
    let dist = all_pairs_distances(g);
    let v = (0..g.n())
        .filter(|u| !forced.contains(u))
        .max_by_key(|&u| (dist.get(b, u), std::cmp::Reverse(u)))
        .expect("some vertex is not forced");
    let h = g.with_path(v, m);
    let observed = if h.n() <= cap {
        let r = basis_forced_oracle(&all_pairs_distances(&h), cap)?;
        Some(r.dim == dim && r.forced == forced)
    } else {
        None
    };
    Ok(TransformResult::new(
        h,
        identity_mapping(g.n()),
        v,
        true,
        observed,
    ))
}

/// Whether a pendant attached at the forced vertex `v` is forced: for every
/// basis `R` some neighbour `w` of `v` has `d(r, w) = d(r, v) + 1` for all
/// `r ∈ R`.
pub fn attach_pendant_forced_check(g: &Graph, v: usize, cap: usize) -> Result<TransformResult> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let dist = all_pairs_distances(g);
    let bases = enumerate_metric_bases_oracle(&dist, cap)?;
    if !bases.iter().all(|r| r.contains(&v)) {
        return Err(Error::NotForced(v));
    }
    let predicted = bases.iter().all(|r| {
        g.neighbors(v)
            .iter()
            .any(|&w| r.iter().all(|&x| dist.get(x, w) == dist.get(x, v) + 1))
    });
    let h = g.with_pendant(v);
    let u = g.n();
    let observed = if h.n() <= cap {
        Some(
            basis_forced_oracle(&all_pairs_distances(&h), cap)?
                .forced
                .contains(&u),
        )
    } else {
        None
    };
    Ok(TransformResult::new(
        h,
        identity_mapping(g.n()),
        v,
        predicted,
        observed,
    ))
}

fn has_thread_at(dec: &UnicyclicDecomposition, i: usize, len: Option<usize>) -> bool {
    dec.cycle_threads(i)
        .iter()
        .any(|t| len.is_none_or(|l| t.len() == l))
}

/// Indices strictly between `from` and `to` along the shorter arc.
fn open_arc(g: usize, from: usize, to: usize) -> Vec<usize> {
    let fwd = (to + g - from) % g;
    if fwd <= g - fwd {
        (1..fwd).map(|t| (from + t) % g).collect()
    } else {
        (1..g - fwd).map(|t| (from + g - t) % g).collect()
    }
}

/// Whether the cycle neighbour of the forced pendant `v` is forced once `v`
/// is removed. Known negative cases and the antipodal-thread criterion are
/// decided structurally; anything else goes to the oracle.
pub fn pendant_to_cycle_check(g: &Graph, v: usize, cap: usize) -> Result<TransformResult> {
    let dec = decompose_unicyclic(g)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if !dec.is_lone_pendant(v) {
        return Err(Error::NotForcedPendant(v));
    }
    let (s, forced) = if g.n() <= cap {
        let r = basis_forced_oracle(&all_pairs_distances(g), cap)?;
        let s = r.bases.expect("oracle lists bases").swap_remove(0);
        (s, r.forced)
    } else {
        (find_basis_fast(&dec), basis_forced_fast(&dec).forced)
    };
    if !forced.contains(&v) {
        return Err(Error::NotForcedPendant(v));
    }

    let girth = dec.girth();
    let half = girth / 2;
    let vi = dec.component_of(v);
    let root = dec.cycle_vertex(vi);
    let other = *dec
        .active_indices(&s)
        .iter()
        .find(|&&i| i != vi)
        .expect("bases of graphs with forced vertices are biactive");
    let k = dec.cycle_distance(other, vi);
    let between = open_arc(girth, other, vi);
    let b = dec.b_value();

    let (h, mapping) = g.without_vertex(v)?;
    let target = mapping[root].expect("cycle vertex survives");

    let excluded = (k + 2 == half && !between.iter().any(|&i| has_thread_at(&dec, i, None)))
        || (k + 1 == half && b == 0);
    let structural = if excluded {
        Some(false)
    } else if b == 1 && dec.branch_active().contains(&other) {
        let want = half - k - 1;
        let hypothesis = want == 0 || between.iter().any(|&i| has_thread_at(&dec, i, Some(want)));
        hypothesis.then(|| has_thread_at(&dec, (vi + half) % girth, None))
    } else {
        None
    };

    let observed = if h.n() <= cap {
        Some(
            basis_forced_oracle(&all_pairs_distances(&h), cap)?
                .forced
                .contains(&target),
        )
    } else {
        None
    };
    let predicted = match (structural, observed) {
        (Some(p), _) => p,
        (None, Some(o)) => o,
        (None, None) => basis_forced_fast(&decompose_unicyclic(&h)?)
            .forced
            .contains(&target),
    };
    Ok(TransformResult::new(h, mapping, v, predicted, observed))
}

/// Attaches a pendant to the forced cycle vertex `v`; the pendant is then
/// forced.
pub fn cycle_to_pendant(g: &Graph, v: usize, cap: usize) -> Result<TransformResult> {
    let dec = decompose_unicyclic(g)?;
    if !dec.is_on_cycle(v) {
        return Err(Error::NotForcedCycleVertex(v));
    }
    let (_, forced) = forced_set(g, cap)?;
    if !forced.contains(&v) {
        return Err(Error::NotForcedCycleVertex(v));
    }
    let h = g.with_pendant(v);
    let u = g.n();
    let observed = if h.n() <= cap {
        Some(
            basis_forced_oracle(&all_pairs_distances(&h), cap)?
                .forced
                .contains(&u),
        )
    } else {
        None
    };
    Ok(TransformResult::new(
        h,
        identity_mapping(g.n()),
        v,
        true,
        observed,
    ))
}
