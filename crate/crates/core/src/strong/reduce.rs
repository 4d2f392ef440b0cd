use crate::graph::Graph;
use crate::unicyclic::UnicyclicDecomposition;

/// Star form of a unicyclic graph and the map from its vertices back to
/// the original ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarForm {
    pub graph: Graph,
    /// `mapping[new] = old`; cycle vertices map to themselves, pendants to
    /// the leaf they stand for.
    pub mapping: Vec<usize>,
}

/// Keeps the cycle and every leaf, hanging each leaf directly from its cycle
/// vertex. Ids are compacted in their original order, so a graph already in
/// star form with compact ids comes back unchanged.
pub fn reduce_to_star_form(dec: &UnicyclicDecomposition) -> StarForm {
    let g = dec.graph();
    let n = g.n();
    let mapping: Vec<usize> = (0..n)
        .filter(|&v| dec.is_on_cycle(v) || g.degree(v) == 1)
        .collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in mapping.iter().enumerate() {
        new_id[v] = i;
    }
    let girth = dec.girth();
    let mut edges: Vec<(usize, usize)> = (0..girth)
        .map(|i| (new_id[dec.cycle_vertex(i)], new_id[dec.cycle_vertex(i + 1)]))
        .collect();
    for &v in &mapping {
        if !dec.is_on_cycle(v) {
            edges.push((new_id[dec.cycle_vertex(dec.component_of(v))], new_id[v]));
        }
    }
    let labels = g
        .labels()
        .iter()
        .filter(|(v, _)| new_id[**v] != usize::MAX)
        .map(|(v, l)| (new_id[*v], l.clone()))
        .collect();
    let graph = Graph::from_edges(mapping.len(), &edges)
        .and_then(|h| h.with_labels(labels))
        .expect("star form of a unicyclic graph is valid");
    StarForm { graph, mapping }
}
