//! Seeded random unicyclic graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenBounds {
    pub max_n: usize,
    pub max_threads_per_vertex: usize,
    pub max_thread_len: usize,
    /// Continuation probability of the geometric thread count per vertex.
    pub thread_prob: f64,
    /// Probability of hanging an extra path off an interior thread vertex,
    /// which creates off-cycle branching.
    pub branch_prob: f64,
}

impl Default for GenBounds {
    fn default() -> Self {
        GenBounds {
            max_n: 14,
            max_threads_per_vertex: 3,
            max_thread_len: 3,
            thread_prob: 0.5,
            branch_prob: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub girth: usize,
    /// Explicit thread lengths per cycle vertex; sampled when absent.
    pub decoration: Option<Vec<Vec<usize>>>,
    pub seed: u64,
    pub bounds: GenBounds,
}

impl GenSpec {
    pub fn new(girth: usize, seed: u64, bounds: GenBounds) -> Self {
        GenSpec {
            girth,
            decoration: None,
            seed,
            bounds,
        }
    }
}

/// `C_g` with threads of the given lengths; cycle vertices first, then
/// each thread root to leaf in cycle order.
pub fn decorated_cycle(decoration: &[Vec<usize>]) -> Result<Graph> {
    let g = decoration.len();
    if g < 3 {
        return Err(Error::BoundsInfeasible(format!("girth {g} < 3")));
    }
    let mut edges: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut next = g;
    for (i, lens) in decoration.iter().enumerate() {
        for &len in lens {
            let mut prev = i;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    Graph::from_edges(next, &edges)
}

pub fn gen_random_unicyclic(spec: &GenSpec) -> Result<Graph> {
    let g = spec.girth;
    let b = spec.bounds;
    if g < 3 {
        return Err(Error::BoundsInfeasible(format!("girth {g} < 3")));
    }
    if b.max_n < g {
        return Err(Error::BoundsInfeasible(format!(
            "max_n {} below girth {g}",
            b.max_n
        )));
    }
    for (name, p) in [
        ("thread_prob", b.thread_prob),
        ("branch_prob", b.branch_prob),
    ] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::BoundsInfeasible(format!(
                "{name} {p} outside [0, 1]"
            )));
        }
    }
    if let Some(dec) = &spec.decoration {
        if dec.len() != g {
            return Err(Error::BoundsInfeasible(format!(
                "{} decorations for girth {g}",
                dec.len()
            )));
        }
        return decorated_cycle(dec);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut budget = b.max_n - g;
    let mut decoration = vec![Vec::new(); g];
    if b.max_thread_len > 0 {
        for lens in decoration.iter_mut() {
            let mut count = 0;
            while count < b.max_threads_per_vertex && rng.gen_bool(b.thread_prob) {
                count += 1;
            }
            for _ in 0..count {
                let len = rng.gen_range(1..=b.max_thread_len).min(budget);
                if len == 0 {
                    break;
                }
                budget -= len;
                lens.push(len);
            }
        }
    }
    let base = decorated_cycle(&decoration)?;
    let mut edges = base.edges().to_vec();
    let mut next = base.n();
    if b.branch_prob > 0.0 && b.max_thread_len > 0 {
        for v in g..base.n() {
            if budget == 0 || base.degree(v) != 2 || !rng.gen_bool(b.branch_prob) {
                continue;
            }
            let len = rng.gen_range(1..=b.max_thread_len).min(budget);
            budget -= len;
            let mut prev = v;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    Graph::from_edges(next, &edges)
}
