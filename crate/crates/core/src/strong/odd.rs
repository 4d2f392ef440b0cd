use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::unicyclic::UnicyclicDecomposition;

use super::srg::check_star_form;

/// Maximal MMD sequences of degree-2 cycle vertices on an odd cycle in star
/// form, and the sets derived from them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddCycleAnalysis {
    /// Each sequence walks the cycle in steps of `(g+1)/2`.
    pub sequences: Vec<Vec<usize>>,
    pub lengths: Vec<usize>,
    pub a1: Vec<Vec<usize>>,
    pub a2: Vec<Vec<usize>>,
    /// `qp[i]`: leaves adjacent to `v_{i+⌊g/2⌋}`.
    pub qp: Vec<Vec<usize>>,
    /// `qpp[i]`: leaves adjacent to `v_{i+⌈g/2⌉}`.
    pub qpp: Vec<Vec<usize>>,
    /// Decorated cycle vertices whose leaves meet no end of an odd sequence.
    pub u: Vec<usize>,
    /// For each decorated cycle vertex, the sequences its leaves are
    /// adjacent to, as `(sequence, position of the adjacent end)`.
    pub attachments: Vec<(usize, Vec<(usize, usize)>)>,
}

impl OddCycleAnalysis {
    fn is_odd(&self, s: usize) -> bool {
        self.lengths[s] % 2 == 1
    }

    fn odd_attachments(&self, idx: usize) -> usize {
        self.attachments[idx]
            .1
            .iter()
            .filter(|&&(s, _)| self.is_odd(s))
            .count()
    }
}

fn leaves_of(dec: &UnicyclicDecomposition, i: usize) -> Vec<usize> {
    let g = dec.graph();
    let v = dec.cycle_vertex(i);
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&u| g.degree(u) == 1)
        .collect()
}

pub fn maximal_sequences(dec: &UnicyclicDecomposition) -> Result<OddCycleAnalysis> {
    let girth = dec.girth();
    if girth.is_multiple_of(2) {
        return Err(Error::EvenGirth);
    }
    check_star_form(dec)?;
    let g = dec.graph();
    let half = girth / 2;
    let step = half + 1;
    let decorated = |i: usize| g.degree(dec.cycle_vertex(i)) > 2;

    let mut sequences: Vec<Vec<usize>> = Vec::new();
    let mut seq_of = vec![None; girth];
    if let Some(start) = (0..girth).find(|&i| decorated(i)) {
        let mut run: Vec<usize> = Vec::new();
        for t in 1..=girth {
            let i = (start + t * step) % girth;
            if decorated(i) {
                if !run.is_empty() {
                    sequences.push(std::mem::take(&mut run));
                }
            } else {
                run.push(i);
            }
        }
    }
    sequences.sort_by_key(|s| s[0]);
    for (k, s) in sequences.iter().enumerate() {
        for (pos, &i) in s.iter().enumerate() {
            seq_of[i] = Some((k, pos));
        }
    }

    let mut attachments = Vec::new();
    for p in (0..girth).filter(|&i| decorated(i)) {
        let mut adj = Vec::new();
        for nb in [(p + half) % girth, (p + step) % girth] {
            if let Some((k, pos)) = seq_of[nb] {
                adj.push((k, pos));
            }
        }
        attachments.push((p, adj));
    }

    let lengths: Vec<usize> = sequences.iter().map(Vec::len).collect();
    let to_ids = |idx: &[usize]| idx.iter().map(|&i| dec.cycle_vertex(i)).collect::<Vec<_>>();
    let a1 = sequences
        .iter()
        .map(|s| to_ids(&s.iter().copied().step_by(2).collect::<Vec<_>>()))
        .collect();
    let a2 = sequences
        .iter()
        .map(|s| to_ids(&s.iter().copied().skip(1).step_by(2).collect::<Vec<_>>()))
        .collect();
    let qp = (0..girth)
        .map(|i| leaves_of(dec, (i + half) % girth))
        .collect();
    let qpp = (0..girth)
        .map(|i| leaves_of(dec, (i + step) % girth))
        .collect();

    let mut analysis = OddCycleAnalysis {
        sequences: sequences.iter().map(|s| to_ids(s)).collect(),
        lengths,
        a1,
        a2,
        qp,
        qpp,
        u: Vec::new(),
        attachments: attachments
            .into_iter()
            .map(|(p, adj)| (dec.cycle_vertex(p), adj))
            .collect(),
    };
    analysis.u = (0..analysis.attachments.len())
        .filter(|&k| analysis.odd_attachments(k) == 0)
        .map(|k| analysis.attachments[k].0)
        .collect();
    Ok(analysis)
}

/// Strong basis forced vertices of an odd-girth graph in star form.
pub fn strong_basis_forced_odd(dec: &UnicyclicDecomposition) -> Result<BTreeSet<usize>> {
    let a = maximal_sequences(dec)?;
    let g = dec.graph();
    let mut forced = BTreeSet::new();
    if a.attachments.len() <= 1 {
        return Ok(forced);
    }
    let leaves = |v: usize| {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| g.degree(u) == 1)
            .collect::<Vec<_>>()
    };
    let odd: Vec<usize> = (0..a.sequences.len()).filter(|&s| a.is_odd(s)).collect();

    if a.u.is_empty() {
        // Leaves meeting two odd sequences, and the inner classes of odd
        // sequences both of whose ends meet such leaves.
        let mut doubly = vec![false; a.attachments.len()];
        for (k, (p, _)) in a.attachments.iter().enumerate() {
            if a.odd_attachments(k) == 2 {
                doubly[k] = true;
                forced.extend(leaves(*p));
            }
        }
        for &s in &odd {
            let last = a.lengths[s] - 1;
            if last == 0 {
                continue;
            }
            let end_ok = |pos: usize| {
                a.attachments
                    .iter()
                    .enumerate()
                    .any(|(k, (_, adj))| doubly[k] && adj.contains(&(s, pos)))
            };
            if end_ok(0) && end_ok(last) {
                forced.extend(a.a2[s].iter().copied());
            }
        }
        return Ok(forced);
    }

    for (k, (p, _)) in a.attachments.iter().enumerate() {
        if a.odd_attachments(k) > 0 {
            forced.extend(leaves(*p));
        }
    }
    for &s in &odd {
        forced.extend(a.a2[s].iter().copied());
    }
    if let [u] = a.u[..] {
        let adj = &a.attachments.iter().find(|(p, _)| *p == u).unwrap().1;
        for &(s, pos) in adj {
            let class = if pos % 2 == 0 { &a.a1[s] } else { &a.a2[s] };
            forced.extend(class.iter().copied());
        }
    }
    Ok(forced)
}
