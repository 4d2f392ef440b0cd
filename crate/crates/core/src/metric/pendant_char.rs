//! Basis forced test for lone pendants and bare cycle vertices when
//! `b(G) = 1`.
//!
//! The cycle is relabelled so that `v_0` is the branch-active vertex and the
//! candidate's attachment `v_j` has `j ≤ g/2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::unicyclic::{CycleFrame, UnicyclicDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PendantCharReport {
    pub candidate: usize,
    /// Index of the candidate's cycle vertex under the relabelling.
    pub j: usize,
    pub m: Option<usize>,
    pub conditions: Vec<Condition>,
}

impl PendantCharReport {
    pub fn verdict(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn condition(&self, label: &str) -> Option<bool> {
        self.conditions
            .iter()
            .find(|c| c.label == label)
            .map(|c| c.holds)
    }
}

struct View<'a> {
    dec: &'a UnicyclicDecomposition,
    frame: CycleFrame,
    g: i64,
}

impl View<'_> {
    fn deg(&self, t: i64) -> usize {
        let base = self.frame.to_base(t.rem_euclid(self.g) as usize);
        self.dec.graph().degree(self.dec.cycle_vertex(base))
    }

    fn thread_lens(&self, t: i64) -> impl Iterator<Item = i64> + '_ {
        let base = self.frame.to_base(t.rem_euclid(self.g) as usize);
        self.dec
            .cycle_threads(base)
            .iter()
            .map(|th| th.len() as i64)
    }

    fn has_thread(&self, t: i64) -> bool {
        self.thread_lens(t).next().is_some()
    }
}

fn relabel(dec: &UnicyclicDecomposition, attach: usize) -> Result<(View<'_>, usize)> {
    if dec.b_value() != 1 {
        return Err(Error::PreconditionViolated(format!(
            "characterization needs b(G) = 1, found {}",
            dec.b_value()
        )));
    }
    let g = dec.girth();
    let zero = dec.branch_active()[0];
    let forward = CycleFrame::new(g, zero, 1);
    let t = forward.from_base(attach);
    let (frame, j) = if t <= g / 2 {
        (forward, t)
    } else {
        (CycleFrame::new(g, zero, -1), g - t)
    };
    Ok((
        View {
            dec,
            frame,
            g: g as i64,
        },
        j,
    ))
}

fn shared_conditions(view: &View, j: i64) -> (Vec<Condition>, Option<usize>) {
    let g = view.g;
    let h = g / 2;
    let even = g % 2 == 0;
    let mut out = Vec::with_capacity(8);
    out.push(Condition {
        label: "1",
        holds: even,
    });
    out.push(Condition {
        label: "2",
        holds: !view.has_thread(0),
    });
    out.push(Condition {
        label: "3",
        holds: (2..=h - 1).contains(&j),
    });
    let window = (j + 1..h).chain(h + j + 1..g);
    out.push(Condition {
        label: "4",
        holds: window.clone().all(|i| view.deg(i) == 2),
    });
    out.push(Condition {
        label: "5",
        holds: (1..j).all(|i| view.thread_lens(i).all(|len| len < h - j)),
    });
    let m = (1..g).find(|&l| view.deg(l) >= 3 || view.deg(h + l) >= 3);
    let six = m.is_some_and(|m| {
        m < j && (h + m + 1..=h + j).any(|i| view.thread_lens(i).any(|len| len >= m))
    });
    out.push(Condition {
        label: "6",
        holds: six,
    });
    (out, m.map(|m| m as usize))
}

/// A thread of length exactly `g/2 − j − 1` at some `v_i`, `i ∈ [1, j − 1]`.
/// Length zero is met by every vertex.
fn exact_thread_below(view: &View, j: i64) -> bool {
    let want = view.g / 2 - j - 1;
    want == 0 || (1..j).any(|i| view.thread_lens(i).any(|len| len == want))
}

/// Conditions (1)–(7) for a pendant `v` with `T_{v_j} = {v_j, v}`.
pub fn check_pendant_char(dec: &UnicyclicDecomposition, v: usize) -> Result<PendantCharReport> {
    if !dec.is_lone_pendant(v) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} is not a lone pendant on the cycle"
        )));
    }
    let attach = dec.component_of(v);
    let (view, j) = relabel(dec, attach)?;
    let ji = j as i64;
    let (mut conditions, m) = shared_conditions(&view, ji);
    conditions.push(Condition {
        label: "7",
        holds: ji == view.g / 2 - 2 || exact_thread_below(&view, ji),
    });
    Ok(PendantCharReport {
        candidate: v,
        j,
        m,
        conditions,
    })
}

/// Conditions (1)–(6), (7') and (8) for a cycle vertex of degree two.
pub fn check_cycle_char(dec: &UnicyclicDecomposition, v: usize) -> Result<PendantCharReport> {
    let Some(idx) = dec.cycle_index(v).filter(|_| dec.graph().degree(v) == 2) else {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} is not a degree-2 cycle vertex"
        )));
    };
    let (view, j) = relabel(dec, idx)?;
    let ji = j as i64;
    let (mut conditions, m) = shared_conditions(&view, ji);
    conditions.push(Condition {
        label: "7'",
        holds: exact_thread_below(&view, ji),
    });
    conditions.push(Condition {
        label: "8",
        holds: view.has_thread(view.g / 2 + ji),
    });
    Ok(PendantCharReport {
        candidate: v,
        j,
        m,
        conditions,
    })
}
