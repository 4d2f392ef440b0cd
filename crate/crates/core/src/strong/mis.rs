//! Exact maximum independent sets with core, corona and the forced-cover
//! set `VC = V ∖ corona`.
//!
//! `alpha` is always the independence number here; the vertex cover number
//! is `n − alpha`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest number of non-isolated vertices the solver accepts.
pub const MIS_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MISResult {
    pub alpha: usize,
    pub witness: BTreeSet<usize>,
    /// Vertices in some maximum independent set.
    pub corona: BTreeSet<usize>,
    /// Vertices in every maximum independent set.
    pub core: BTreeSet<usize>,
    /// Vertices in every minimum vertex cover.
    pub vc: BTreeSet<usize>,
}

impl MISResult {
    pub fn vertex_cover_number(&self, n: usize) -> usize {
        n - self.alpha
    }
}

struct Solver {
    nb: Vec<u64>,
}

impl Solver {
    fn best(&self, mask: u64) -> (u32, u64) {
        let mut best = (0, 0);
        self.search(mask, 0, &mut best);
        best
    }

    fn alpha(&self, mask: u64) -> u32 {
        self.best(mask).0
    }

    fn search(&self, mut mask: u64, mut cur: u64, best: &mut (u32, u64)) {
        loop {
            if mask == 0 {
                if cur.count_ones() > best.0 {
                    *best = (cur.count_ones(), cur);
                }
                return;
            }
            if cur.count_ones() + mask.count_ones() <= best.0 {
                return;
            }
            let (mut lo, mut lo_deg, mut hi, mut hi_deg) = (0, u32::MAX, 0, 0);
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let d = (self.nb[v] & mask).count_ones();
                if d < lo_deg {
                    (lo, lo_deg) = (v, d);
                }
                if d > hi_deg {
                    (hi, hi_deg) = (v, d);
                }
            }
            // A vertex of degree at most one lies in some maximum
            // independent set of what remains.
            if lo_deg <= 1 {
                cur |= 1 << lo;
                mask &= !(self.nb[lo] | 1 << lo);
                continue;
            }
            self.search(mask & !(self.nb[hi] | 1 << hi), cur | 1 << hi, best);
            mask &= !(1 << hi);
        }
    }
}

pub fn max_independent_set(adj: &[Vec<usize>]) -> Result<MISResult> {
    max_independent_set_with_cap(adj, MIS_CAP)
}

/// Exact solve; `cap` bounds the number of non-isolated vertices and may
/// not exceed [`MIS_CAP`].
pub fn max_independent_set_with_cap(adj: &[Vec<usize>], cap: usize) -> Result<MISResult> {
    let n = adj.len();
    let active: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
    let cap = cap.min(MIS_CAP);
    if active.len() > cap {
        return Err(Error::CapExceeded {
            n: active.len(),
            cap,
        });
    }
    let mut local = vec![usize::MAX; n];
    for (i, &v) in active.iter().enumerate() {
        local[v] = i;
    }
    let nb: Vec<u64> = active
        .iter()
        .map(|&v| {
            adj[v]
                .iter()
                .filter(|&&w| w != v)
                .fold(0u64, |m, &w| m | 1 << local[w])
        })
        .collect();
    let solver = Solver { nb };
    let full = if active.len() == 64 {
        u64::MAX
    } else {
        (1u64 << active.len()) - 1
    };
    let (a, wit) = solver.best(full);

    let isolated = (0..n).filter(|&v| adj[v].is_empty());
    let mut witness: BTreeSet<usize> = isolated.clone().collect();
    let mut corona = witness.clone();
    let mut core = witness.clone();
    for (i, &v) in active.iter().enumerate() {
        if wit >> i & 1 == 1 {
            witness.insert(v);
        }
        if solver.alpha(full & !(solver.nb[i] | 1 << i)) + 1 == a {
            corona.insert(v);
        }
        if solver.alpha(full & !(1 << i)) < a {
            core.insert(v);
        }
    }
    let vc = (0..n).filter(|v| !corona.contains(v)).collect();
    Ok(MISResult {
        alpha: a as usize + isolated.count(),
        witness,
        corona,
        core,
        vc,
    })
}
