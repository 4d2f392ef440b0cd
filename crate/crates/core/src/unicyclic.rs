//! Structure of a connected unicyclic graph: the cycle `C = v_0 … v_{g-1}`,
//! the trees `T_{v_i}` hanging from it, threads, `ℓ(v)`, `L(G)` and `b(G)`.
//!
//! A *thread* attached to a vertex `v` of degree at least three is a path
//! `u_1 … u_t` with `u_1 ∈ N(v)` off the cycle, every `u_i` of degree two
//! except the leaf `u_t`. Its length is `t`, so a single pendant has length 1.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    /// Vertex the thread hangs from.
    pub attach: usize,
    /// Thread vertices ordered from the attachment side to the leaf.
    pub vertices: Vec<usize>,
}

impl Thread {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn leaf(&self) -> usize {
        *self.vertices.last().expect("threads are nonempty")
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

#[derive(Debug, Clone)]
pub struct UnicyclicDecomposition {
    graph: Graph,
    cycle: Vec<usize>,
    cycle_index: Vec<Option<usize>>,
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
    threads: Vec<Vec<Thread>>,
    /// For every vertex lying on some thread, the index of that thread in
    /// `threads[attach]` together with the attachment vertex.
    thread_of: Vec<Option<(usize, usize)>>,
    ell: Vec<usize>,
    l_sum: usize,
    branching: Vec<usize>,
    branch_active: Vec<usize>,
}

impl UnicyclicDecomposition {
    pub fn new(graph: &Graph) -> Result<Self> {
        let n = graph.n();
        if graph.edge_count() != n {
            return Err(Error::NotUnicyclic {
                vertices: n,
                edges: graph.edge_count(),
            });
        }

        // Peel leaves until only the cycle remains.
        let mut deg: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for &w in graph.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }

        let start = (0..n)
            .find(|&v| !removed[v])
            .expect("|E| = |V| leaves a cycle");
        let on_cycle = |v: usize| !removed[v];
        let first_step = graph
            .neighbors(start)
            .iter()
            .copied()
            .filter(|&w| on_cycle(w))
            .min()
            .expect("cycle vertices have two cycle neighbors");
        let mut cycle = vec![start, first_step];
        loop {
            let cur = *cycle.last().unwrap();
            let prev = cycle[cycle.len() - 2];
            let next = graph
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| on_cycle(w) && w != prev)
                .expect("cycle is 2-regular");
            if next == start {
                break;
            }
            cycle.push(next);
        }
        let g = cycle.len();
        let mut cycle_index = vec![None; n];
        for (i, &v) in cycle.iter().enumerate() {
            cycle_index[v] = Some(i);
        }

        // Trees hanging from the cycle; depth 0 on the cycle.
        let mut component_of = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut components = vec![Vec::new(); g];
        for (i, &root) in cycle.iter().enumerate() {
            let mut queue = VecDeque::from([root]);
            component_of[root] = i;
            while let Some(u) = queue.pop_front() {
                components[i].push(u);
                for &w in graph.neighbors(u) {
                    if cycle_index[w].is_none() && component_of[w] == usize::MAX {
                        component_of[w] = i;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            components[i].sort_unstable();
        }

        let mut threads = vec![Vec::new(); n];
        let mut thread_of = vec![None; n];
        for v in 0..n {
            if graph.degree(v) < 3 {
                continue;
            }
            for &w in graph.neighbors(v) {
                if cycle_index[w].is_some() || parent[v] == w {
                    continue;
                }
                let mut path = vec![w];
                let (mut prev, mut cur) = (v, w);
                let is_thread = loop {
                    match graph.degree(cur) {
                        1 => break true,
                        2 => {
                            let next = graph
                                .neighbors(cur)
                                .iter()
                                .copied()
                                .find(|&x| x != prev)
                                .unwrap();
                            path.push(next);
                            prev = cur;
                            cur = next;
                        }
                        _ => break false,
                    }
                };
                if is_thread {
                    let idx = threads[v].len();
                    for &u in &path {
                        thread_of[u] = Some((v, idx));
                    }
                    threads[v].push(Thread {
                        attach: v,
                        vertices: path,
                    });
                }
            }
        }
        let ell: Vec<usize> = threads.iter().map(Vec::len).collect();
        let l_sum = ell.iter().filter(|&&l| l > 1).map(|&l| l - 1).sum();

        let branching: Vec<usize> = (0..n)
            .filter(|&v| match cycle_index[v] {
                Some(_) => graph.degree(v) >= 4,
                None => graph.degree(v) >= 3,
            })
            .collect();
        let mut branch_active: Vec<usize> = branching.iter().map(|&v| component_of[v]).collect();
        branch_active.sort_unstable();
        branch_active.dedup();

        Ok(UnicyclicDecomposition {
            graph: graph.clone(),
            cycle,
            cycle_index,
            component_of,
            components,
            threads,
            thread_of,
            ell,
            l_sum,
            branching,
            branch_active,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn girth(&self) -> usize {
        self.cycle.len()
    }

    /// Cycle vertices in base order: `v_0` is the smallest id on the cycle,
    /// `v_1` its smaller-id cycle neighbor.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn cycle_vertex(&self, i: usize) -> usize {
        self.cycle[i % self.cycle.len()]
    }

    pub fn cycle_index(&self, v: usize) -> Option<usize> {
        self.cycle_index[v]
    }

    pub fn is_on_cycle(&self, v: usize) -> bool {
        self.cycle_index[v].is_some()
    }

    /// Index `i` of the tree `T_{v_i}` containing `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// Vertex set of `T_{v_i}`, sorted.
    pub fn component(&self, i: usize) -> &[usize] {
        &self.components[i]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn threads(&self, v: usize) -> &[Thread] {
        &self.threads[v]
    }

    /// Threads attached to the cycle vertex `v_i`.
    pub fn cycle_threads(&self, i: usize) -> &[Thread] {
        &self.threads[self.cycle_vertex(i)]
    }

    /// The thread containing `v`, if any.
    pub fn thread_containing(&self, v: usize) -> Option<&Thread> {
        self.thread_of[v].map(|(a, idx)| &self.threads[a][idx])
    }

    pub fn ell(&self, v: usize) -> usize {
        self.ell[v]
    }

    /// `L(G) = Σ_{ℓ(v) > 1} (ℓ(v) − 1)`.
    pub fn l_value(&self) -> usize {
        self.l_sum
    }

    pub fn branching(&self) -> &[usize] {
        &self.branching
    }

    /// Indices `i` with `T_{v_i}` containing a branching vertex.
    pub fn branch_active(&self) -> &[usize] {
        &self.branch_active
    }

    pub fn b_value(&self) -> usize {
        self.branch_active.len()
    }

    /// `L(G) + max{2 − b(G), 0}`, the smaller of the two candidate dimensions.
    pub fn dimension_base(&self) -> usize {
        self.l_sum + 2usize.saturating_sub(self.b_value())
    }

    /// `d(v_i, v_j)` measured along the cycle.
    pub fn cycle_distance(&self, i: usize, j: usize) -> usize {
        let g = self.girth();
        let d = (i + g - j) % g;
        d.min(g - d)
    }

    /// Vertex is a pendant whose component is exactly `{v_i, pendant}`.
    pub fn is_lone_pendant(&self, v: usize) -> bool {
        !self.is_on_cycle(v)
            && self.graph.degree(v) == 1
            && self.components[self.component_of[v]].len() == 2
    }

    /// Vertex is a cycle vertex whose component is just itself.
    pub fn is_bare_cycle_vertex(&self, v: usize) -> bool {
        self.is_on_cycle(v) && self.components[self.component_of[v]].len() == 1
    }

    /// Sorted cycle indices whose component meets `s`.
    pub fn active_indices(&self, s: &[usize]) -> Vec<usize> {
        let mut active: Vec<usize> = s.iter().map(|&v| self.component_of[v]).collect();
        active.sort_unstable();
        active.dedup();
        active
    }
}

pub fn decompose_unicyclic(graph: &Graph) -> Result<UnicyclicDecomposition> {
    UnicyclicDecomposition::new(graph)
}

/// A relabelling of the cycle: new index `t` names base index
/// `offset + direction·t (mod g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleFrame {
    pub girth: usize,
    pub offset: usize,
    /// `+1` or `-1`.
    pub direction: i8,
}

impl CycleFrame {
    pub fn new(girth: usize, offset: usize, direction: i8) -> Self {
        debug_assert!(direction == 1 || direction == -1);
        CycleFrame {
            girth,
            offset: offset % girth,
            direction,
        }
    }

    /// Base index of new index `t` (taken mod g).
    pub fn to_base(&self, t: usize) -> usize {
        let g = self.girth;
        let t = t % g;
        if self.direction > 0 {
            (self.offset + t) % g
        } else {
            (self.offset + g - t) % g
        }
    }

    /// New index of base index `i`.
    pub fn from_base(&self, i: usize) -> usize {
        let g = self.girth;
        if self.direction > 0 {
            (i + g - self.offset) % g
        } else {
            (self.offset + g - i % g) % g
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLabelling {
    pub frame: CycleFrame,
    /// Largest S-active index under this labelling.
    pub k: usize,
    /// Sorted S-active indices under this labelling.
    pub active: Vec<usize>,
    /// `a(S)`.
    pub a: usize,
}

impl CanonicalLabelling {
    pub fn offset(&self) -> usize {
        self.frame.offset
    }

    pub fn direction(&self) -> i8 {
        self.frame.direction
    }
}

/// Rotates and possibly reflects the cycle so that `v_0` is S-active and the
/// largest S-active index `k` is minimal. Ties go to the smallest base offset,
/// then to direction `+1`.
pub fn canonical_labelling(
    dec: &UnicyclicDecomposition,
    s: &[usize],
) -> Result<CanonicalLabelling> {
    let active = dec.active_indices(s);
    if active.is_empty() {
        return Err(Error::NoActiveVertex);
    }
    let g = dec.girth();
    let mut best: Option<CanonicalLabelling> = None;
    for &offset in &active {
        for direction in [1i8, -1] {
            let frame = CycleFrame::new(g, offset, direction);
            let mut relabelled: Vec<usize> = active.iter().map(|&i| frame.from_base(i)).collect();
            relabelled.sort_unstable();
            let k = *relabelled.last().unwrap();
            if best.as_ref().is_none_or(|b| k < b.k) {
                best = Some(CanonicalLabelling {
                    frame,
                    k,
                    a: relabelled.len(),
                    active: relabelled,
                });
            }
        }
    }
    Ok(best.unwrap())
}
