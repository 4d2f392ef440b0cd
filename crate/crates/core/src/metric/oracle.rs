//! Exhaustive, definition-level checks. These know nothing about cycles or
//! threads and serve as the reference the fast paths are tested against.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;

use super::{ForcedReport, Method};

pub const DEFAULT_ORACLE_CAP: usize = 16;

/// Oracle cap from `UBX_ORACLE_CAP`, falling back to 16.
pub fn oracle_cap_from_env() -> usize {
    std::env::var("UBX_ORACLE_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// True iff the distance vectors to `s` are pairwise distinct.
pub fn is_resolving_set_oracle(dist: &DistanceMatrix, s: &[usize]) -> bool {
    let n = dist.n();
    if s.is_empty() {
        return n <= 1;
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(n);
    (0..n).all(|v| seen.insert(s.iter().map(|&x| dist.get(x, v)).collect()))
}

/// Smallest size of a resolving set, by increasing cardinality.
pub fn metric_dimension_oracle(dist: &DistanceMatrix, cap: usize) -> Result<usize> {
    let n = dist.n();
    check_cap(n, cap)?;
    for k in 0..=n {
        if (0..n)
            .combinations(k)
            .any(|s| is_resolving_set_oracle(dist, &s))
        {
            return Ok(k);
        }
    }
    unreachable!("V(G) resolves G")
}

/// Every metric basis, each sorted, in lexicographic order.
pub fn enumerate_metric_bases_oracle(dist: &DistanceMatrix, cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = dist.n();
    check_cap(n, cap)?;
    for k in 0..=n {
        let bases: Vec<Vec<usize>> = (0..n)
            .combinations(k)
            .filter(|s| is_resolving_set_oracle(dist, s))
            .collect();
        if !bases.is_empty() {
            return Ok(bases);
        }
    }
    unreachable!("V(G) resolves G")
}

/// Intersection of all metric bases.
pub fn basis_forced_oracle(dist: &DistanceMatrix, cap: usize) -> Result<ForcedReport> {
    let bases = enumerate_metric_bases_oracle(dist, cap)?;
    let mut forced: BTreeSet<usize> = bases[0].iter().copied().collect();
    for b in &bases[1..] {
        forced.retain(|v| b.contains(v));
    }
    Ok(ForcedReport {
        dim: bases[0].len(),
        forced,
        method: Method::Oracle,
        bases: Some(bases),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, Graph};

    #[test]
    fn path_resolved_by_endpoint() {
        let d = all_pairs_distances(&Graph::path(4));
        assert!(is_resolving_set_oracle(&d, &[0]));
        assert!(!is_resolving_set_oracle(&d, &[1]));
        assert_eq!(metric_dimension_oracle(&d, 16).unwrap(), 1);
    }

    #[test]
    fn antipodal_pair_fails_on_c6() {
        let d = all_pairs_distances(&Graph::cycle(6));
        assert!(!is_resolving_set_oracle(&d, &[0, 3]));
        // v_1 and v_5 both sit at (1, 2).
        assert_eq!((d.get(0, 1), d.get(3, 1)), (1, 2));
        assert_eq!((d.get(0, 5), d.get(3, 5)), (1, 2));
    }

    #[test]
    fn cycles_have_dimension_two() {
        for n in 3..9 {
            let d = all_pairs_distances(&Graph::cycle(n));
            assert_eq!(metric_dimension_oracle(&d, 16).unwrap(), 2, "C_{n}");
        }
    }

    #[test]
    fn c6_bases_regression() {
        // Every pair except the three antipodal ones.
        let d = all_pairs_distances(&Graph::cycle(6));
        let bases = enumerate_metric_bases_oracle(&d, 16).unwrap();
        assert_eq!(bases.len(), 12);
        assert!(!bases.contains(&vec![0, 3]));
    }

    #[test]
    fn empty_set() {
        let d = all_pairs_distances(&Graph::path(2));
        assert!(!is_resolving_set_oracle(&d, &[]));
    }

    #[test]
    fn cap_is_enforced() {
        let d = all_pairs_distances(&Graph::cycle(20));
        assert_eq!(
            metric_dimension_oracle(&d, 16).unwrap_err(),
            Error::CapExceeded { n: 20, cap: 16 }
        );
    }
}
