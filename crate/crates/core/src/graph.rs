//! Simple connected undirected graphs, their text formats, and hop distances.
//!
//! Two input formats are accepted:
//!
//! * JSON: `{"n": 3, "edges": [[0,1],[1,2],[2,0]], "labels": {"0": "a"}}`
//!   with `labels` optional.
//! * Edge list: one `u v` pair per line, `#` starts a comment. Ids are
//!   arbitrary base-10 integers and are renumbered to `0..n` in ascending
//!   order; when that renumbering is not the identity, the original ids are
//!   kept as labels.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Deserialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: BTreeMap<usize, String>,
}

#[derive(Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    labels: BTreeMap<String, String>,
}

impl Graph {
    /// Builds a validated graph: no self-loops, no duplicate edges, connected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let graph = Graph {
            adj,
            edges: seen.into_iter().collect(),
            labels: BTreeMap::new(),
        };
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        if let Some(&v) = labels.keys().find(|&&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Cycle `C_n` on `0..n` in order.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle is a valid graph")
    }

    /// Path `P_n` on `0..n` in order.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path is a valid graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Leaves (degree-one vertices).
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n()
    }

    /// Graph with one new vertex (id `n`) adjacent to `v`.
    pub fn with_pendant(&self, v: usize) -> Self {
        self.with_path(v, 1)
    }

    /// Graph with a path of `m` new vertices (ids `n..n+m`) hanging from `v`.
    pub fn with_path(&self, v: usize, m: usize) -> Self {
        let n = self.n();
        let mut edges = self.edges.clone();
        let mut prev = v;
        for id in n..n + m {
            edges.push((prev, id));
            prev = id;
        }
        let g = Graph::from_edges(n + m, &edges).expect("attaching a path keeps the graph valid");
        g.with_labels(self.labels.clone())
            .expect("labels stay in range")
    }

    /// Removes `v` and renumbers the survivors in order. Returns the new graph
    /// and the old-to-new id map.
    pub fn without_vertex(&self, v: usize) -> Result<(Self, Vec<Option<usize>>)> {
        let mapping: Vec<Option<usize>> = (0..self.n())
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((mapping[a]?, mapping[b]?)))
            .collect();
        let labels = self
            .labels
            .iter()
            .filter_map(|(&k, name)| Some((mapping[k]?, name.clone())))
            .collect();
        let g = Graph::from_edges(self.n() - 1, &edges)?.with_labels(labels)?;
        Ok((g, mapping))
    }

    /// Canonical compact JSON. `parse(to_json(g))` reproduces `g` exactly.
    pub fn to_json(&self) -> String {
        // Written by hand so label keys come out in numeric, not string, order.
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|(u, v)| format!("[{u},{v}]"))
            .collect();
        let mut out = format!("{{\"n\":{},\"edges\":[{}]", self.n(), edges.join(","));
        if !self.labels.is_empty() {
            let labels: Vec<String> = self
                .labels
                .iter()
                .map(|(k, v)| format!("\"{k}\":{}", serde_json::Value::String(v.clone())))
                .collect();
            out.push_str(&format!(",\"labels\":{{{}}}", labels.join(",")));
        }
        out.push('}');
        out
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses either format; text whose first non-blank character is `{` is JSON.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let edges: Vec<_> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    let mut labels = BTreeMap::new();
    for (k, v) in doc.labels {
        let id: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("label key {k:?} is not a vertex id")))?;
        labels.insert(id, v);
    }
    Graph::from_edges(doc.n, &edges)?.with_labels(labels)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut raw = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let ids: Vec<&str> = line.split_whitespace().collect();
        if ids.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected two vertex ids, found {}",
                lineno + 1,
                ids.len()
            )));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: bad vertex id {s:?}", lineno + 1)))
        };
        raw.push((parse(ids[0])?, parse(ids[1])?));
    }
    let ids: BTreeSet<usize> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let edges: Vec<_> = raw.iter().map(|(u, v)| (index[u], index[v])).collect();
    let identity = index.iter().all(|(id, i)| id == i);
    let labels = if identity {
        BTreeMap::new()
    } else {
        index.iter().map(|(id, &i)| (i, id.to_string())).collect()
    };
    Graph::from_edges(ids.len(), &edges)?.with_labels(labels)
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// One BFS per source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == u32::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}
