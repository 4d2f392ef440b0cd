use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::unicyclic::UnicyclicDecomposition;

use super::srg::check_star_form;

/// Antipodal bookkeeping on an even cycle in star form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenCycleAnalysis {
    /// `q[i]`: leaves adjacent to `v_{i+g/2}`.
    pub q: Vec<Vec<usize>>,
    /// Cycle indices whose antipodal pair has both degrees equal to two.
    pub d2: Vec<usize>,
    pub d2_count: usize,
    /// Cycle indices whose antipodal pair has both degrees above two.
    pub dgt2: Vec<usize>,
    pub dgt2_count: usize,
}

pub fn analyze_even(dec: &UnicyclicDecomposition) -> Result<EvenCycleAnalysis> {
    let girth = dec.girth();
    if girth % 2 == 1 {
        return Err(Error::OddGirth);
    }
    check_star_form(dec)?;
    let g = dec.graph();
    let half = girth / 2;
    let deg = |i: usize| g.degree(dec.cycle_vertex(i));
    let q = (0..girth)
        .map(|i| {
            let anti = dec.cycle_vertex(i + half);
            g.neighbors(anti)
                .iter()
                .copied()
                .filter(|&u| g.degree(u) == 1)
                .collect()
        })
        .collect();
    let d2: Vec<usize> = (0..girth)
        .filter(|&i| deg(i) == 2 && deg(i + half) == 2)
        .collect();
    let dgt2: Vec<usize> = (0..girth)
        .filter(|&i| deg(i) > 2 && deg(i + half) > 2)
        .collect();
    Ok(EvenCycleAnalysis {
        q,
        d2_count: d2.len() / 2,
        d2,
        dgt2_count: dgt2.len() / 2,
        dgt2,
    })
}

/// Strong basis forced vertices of an even-girth graph in star form: empty
/// when no antipodal pair is decorated on both sides, otherwise the leaves
/// whose cycle vertex sits opposite a degree-2 vertex.
pub fn strong_basis_forced_even(dec: &UnicyclicDecomposition) -> Result<BTreeSet<usize>> {
    let a = analyze_even(dec)?;
    let girth = dec.girth();
    let all_decorated = (0..girth).all(|i| dec.graph().degree(dec.cycle_vertex(i)) >= 3);
    if a.dgt2.is_empty() || all_decorated {
        return Ok(BTreeSet::new());
    }
    Ok((0..girth)
        .filter(|i| !a.d2.contains(i) && !a.dgt2.contains(i))
        .flat_map(|i| a.q[i].iter().copied())
        .collect())
}
