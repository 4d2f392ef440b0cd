use std::collections::BTreeSet;

use itertools::Itertools;

use crate::unicyclic::UnicyclicDecomposition;

use super::config::is_resolving_set_fast;
use super::dimension::metric_dimension;
use super::pendant_char::{check_cycle_char, check_pendant_char};
use super::{ForcedReport, Method};

/// Basis forced vertices without enumerating bases, except for `b(G) = 0`
/// where every pair of vertices is tested with the configuration check.
pub fn basis_forced_fast(dec: &UnicyclicDecomposition) -> ForcedReport {
    let dim = metric_dimension(dec);
    let empty = |method| ForcedReport {
        dim,
        forced: BTreeSet::new(),
        method,
        bases: None,
    };
    let b = dec.b_value();
    if dec.girth() % 2 == 1 || b >= 2 || dim != dec.dimension_base() {
        return empty(Method::Characterization);
    }

    if b == 1 {
        let mut forced = BTreeSet::new();
        for v in 0..dec.graph().n() {
            let report = if dec.is_lone_pendant(v) {
                check_pendant_char(dec, v)
            } else if dec.is_bare_cycle_vertex(v) {
                check_cycle_char(dec, v)
            } else {
                continue;
            };
            if report.expect("b(G) = 1 checked above").verdict() {
                forced.insert(v);
            }
        }
        return ForcedReport {
            dim,
            forced,
            method: Method::Characterization,
            bases: None,
        };
    }

    let bases: Vec<Vec<usize>> = (0..dec.graph().n())
        .tuple_combinations()
        .map(|(x, y)| vec![x, y])
        .filter(|s| is_resolving_set_fast(dec, s))
        .collect();
    let mut forced: BTreeSet<usize> = bases
        .first()
        .map(|s| s.iter().copied().collect())
        .unwrap_or_default();
    for s in &bases {
        forced.retain(|v| s.contains(v));
    }
    ForcedReport {
        dim,
        forced,
        method: Method::Hybrid,
        bases: Some(bases),
    }
}
