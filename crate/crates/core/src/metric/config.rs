//! Resolving-set test for unicyclic graphs via the three forbidden
//! configurations 𝒜, ℬ and 𝒞 over a canonical labelling.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::unicyclic::{canonical_labelling, CanonicalLabelling, Thread, UnicyclicDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConfigurationKind {
    A,
    B,
    C,
}

/// The S-free thread that triggers a ℬ or 𝒞 configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffendingThread {
    /// Index of the attachment vertex under the canonical labelling.
    pub index: usize,
    pub thread: Vec<usize>,
    /// For 𝒞 only: the bound `g/2 − k` the thread length reaches.
    pub required_len: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationWitness {
    pub kind: ConfigurationKind,
    pub labelling: CanonicalLabelling,
    pub detail: Option<OffendingThread>,
}

fn thread_hits(thread: &Thread, s: &HashSet<usize>) -> bool {
    thread.vertices.iter().any(|v| s.contains(v))
}

/// `a(S) ≥ 2`, and every vertex with `ℓ(v) > 1` has at least `ℓ(v) − 1` of
/// its threads meeting `S`.
pub fn check_biactive_branch_resolving(dec: &UnicyclicDecomposition, s: &[usize]) -> bool {
    if dec.active_indices(s).len() < 2 {
        return false;
    }
    is_branch_resolving(dec, s)
}

pub fn is_branch_resolving(dec: &UnicyclicDecomposition, s: &[usize]) -> bool {
    let set: HashSet<usize> = s.iter().copied().collect();
    (0..dec.graph().n()).filter(|&v| dec.ell(v) > 1).all(|v| {
        let hit = dec
            .threads(v)
            .iter()
            .filter(|t| thread_hits(t, &set))
            .count();
        hit + 1 >= dec.ell(v)
    })
}

/// First configuration found, searching 𝒜, then ℬ, then 𝒞, each by
/// ascending cycle index under the canonical labelling.
pub fn find_configuration(
    dec: &UnicyclicDecomposition,
    s: &[usize],
) -> Result<Option<ConfigurationWitness>> {
    if !check_biactive_branch_resolving(dec, s) {
        return Err(Error::PreconditionViolated(
            "configurations are defined for biactive branch-resolving sets only".into(),
        ));
    }
    let labelling = canonical_labelling(dec, s)?;
    let set: HashSet<usize> = s.iter().copied().collect();
    let g = dec.girth();
    let (k, a) = (labelling.k, labelling.a);
    let even = g.is_multiple_of(2);

    let free_thread_at = |t: usize, min_len: usize| -> Option<&Thread> {
        let base = labelling.frame.to_base(t);
        dec.cycle_threads(base)
            .iter()
            .find(|th| th.len() >= min_len && !thread_hits(th, &set))
    };

    if a == 2 && even && k == g / 2 {
        return Ok(Some(ConfigurationWitness {
            kind: ConfigurationKind::A,
            labelling,
            detail: None,
        }));
    }

    if k < g / 2 {
        let lo_end = g / 2 - 1;
        let hi_start = g.div_ceil(2) + k + 1;
        let in_window =
            |t: usize| t == 0 || (k..=lo_end).contains(&t) || (hi_start..g).contains(&t);
        if let Some((t, th)) = (0..g)
            .filter(|&t| in_window(t))
            .find_map(|t| free_thread_at(t, 1).map(|th| (t, th)))
        {
            let detail = OffendingThread {
                index: t,
                thread: th.vertices.clone(),
                required_len: None,
            };
            return Ok(Some(ConfigurationWitness {
                kind: ConfigurationKind::B,
                labelling,
                detail: Some(detail),
            }));
        }
    }

    if a == 2 && even && k <= g / 2 {
        let required = g / 2 - k;
        if let Some((t, th)) = (0..=k).find_map(|t| free_thread_at(t, required).map(|th| (t, th))) {
            let detail = OffendingThread {
                index: t,
                thread: th.vertices.clone(),
                required_len: Some(required),
            };
            return Ok(Some(ConfigurationWitness {
                kind: ConfigurationKind::C,
                labelling,
                detail: Some(detail),
            }));
        }
    }

    Ok(None)
}

/// Resolving-set test in polynomial time: biactive, branch-resolving and free
/// of all three configurations.
pub fn is_resolving_set_fast(dec: &UnicyclicDecomposition, s: &[usize]) -> bool {
    check_biactive_branch_resolving(dec, s) && matches!(find_configuration(dec, s), Ok(None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::unicyclic::decompose_unicyclic;

    /// Cycle `C_g` on `0..g` with one pendant per listed cycle vertex, pendant
    /// ids assigned from `g` upward in list order.
    fn cycle_with_pendants(g: usize, at: &[usize]) -> Graph {
        let mut edges: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
        for (k, &i) in at.iter().enumerate() {
            edges.push((i, g + k));
        }
        Graph::from_edges(g + at.len(), &edges).unwrap()
    }

    #[test]
    fn configuration_a_on_antipodal_pendants() {
        let dec = decompose_unicyclic(&cycle_with_pendants(6, &[0, 3])).unwrap();
        let w = find_configuration(&dec, &[6, 7]).unwrap().unwrap();
        assert_eq!(w.kind, ConfigurationKind::A);
        assert_eq!(w.labelling.k, 3);
        assert!(!is_resolving_set_fast(&dec, &[6, 7]));
    }

    #[test]
    fn configuration_b_on_c8() {
        // Pendants at v_0, v_2, v_7; S = pendants of v_0 and v_2, so k = 2 and
        // the free pendant at v_7 lies in [⌈g/2⌉+k+1, g−1] = [7, 7].
        let dec = decompose_unicyclic(&cycle_with_pendants(8, &[0, 2, 7])).unwrap();
        let w = find_configuration(&dec, &[8, 9]).unwrap().unwrap();
        assert_eq!(w.kind, ConfigurationKind::B);
        let detail = w.detail.unwrap();
        assert_eq!(detail.thread, vec![10]);
        assert_eq!((detail.index, w.labelling.k), (7, 2));
    }

    #[test]
    fn free_pendant_outside_b_window() {
        // With the free pendant at v_5 instead, index 5 is outside both
        // windows under either minimal labelling, so nothing fires, and the
        // oracle agrees that S resolves.
        let g = cycle_with_pendants(8, &[0, 2, 5]);
        let dec = decompose_unicyclic(&g).unwrap();
        assert_eq!(find_configuration(&dec, &[8, 9]).unwrap(), None);
        let d = crate::graph::all_pairs_distances(&g);
        assert!(crate::metric::is_resolving_set_oracle(&d, &[8, 9]));
    }

    #[test]
    fn configuration_c_on_c8() {
        // Pendants at v_0 and v_2, a length-2 thread at v_1.
        let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.extend([(0, 8), (2, 9), (1, 10), (10, 11)]);
        let dec = decompose_unicyclic(&Graph::from_edges(12, &edges).unwrap()).unwrap();
        let w = find_configuration(&dec, &[8, 9]).unwrap().unwrap();
        assert_eq!(w.kind, ConfigurationKind::C);
        let detail = w.detail.unwrap();
        assert_eq!(detail.thread, vec![10, 11]);
        assert_eq!(detail.required_len, Some(2));
    }

    #[test]
    fn biactive_branch_resolving_checks() {
        let dec = decompose_unicyclic(&cycle_with_pendants(6, &[0, 3])).unwrap();
        assert!(check_biactive_branch_resolving(&dec, &[6, 7]));
        // Single component: a(S) = 1.
        assert!(!check_biactive_branch_resolving(&dec, &[0, 6]));

        // Three threads at v_0; hitting only one of them is not enough.
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 6), (0, 7), (7, 8)]);
        edges.push((0, 9));
        let dec = decompose_unicyclic(&Graph::from_edges(10, &edges).unwrap()).unwrap();
        assert_eq!(dec.ell(0), 3);
        assert!(!check_biactive_branch_resolving(&dec, &[6, 3]));
        assert!(check_biactive_branch_resolving(&dec, &[6, 8, 3]));
    }

    #[test]
    fn precondition_violation_is_an_error() {
        let dec = decompose_unicyclic(&Graph::cycle(5)).unwrap();
        assert!(matches!(
            find_configuration(&dec, &[0]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(!is_resolving_set_fast(&dec, &[0]));
    }
}
