use std::collections::BTreeSet;

use proptest::prelude::*;

use unicyclic::generators::{gen_random_unicyclic, GenBounds, GenSpec};
use unicyclic::metric::{basis_forced_fast, metric_dimension};
use unicyclic::strong::strong_basis_forced_fast;
use unicyclic::{canonical_labelling, decompose_unicyclic, parse_graph, Graph};

fn graph() -> impl Strategy<Value = Graph> {
    (
        3usize..=10,
        any::<u64>(),
        1usize..=3,
        1usize..=3,
        0.0f64..=0.9,
        prop_oneof![Just(0.0), Just(0.3)],
    )
        .prop_map(|(girth, seed, threads, len, thread_prob, branch_prob)| {
            let bounds = GenBounds {
                max_n: 16,
                max_threads_per_vertex: threads,
                max_thread_len: len,
                thread_prob,
                branch_prob,
            };
            gen_random_unicyclic(&GenSpec::new(girth, seed, bounds)).unwrap()
        })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

fn mapped(s: &BTreeSet<usize>, perm: &[usize]) -> BTreeSet<usize> {
    s.iter().map(|&v| perm[v]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn json_round_trip(g in graph()) {
        let text = g.to_json();
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn edge_list_round_trip(g in graph()) {
        let back = parse_graph(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn invariant_under_relabelling(g in graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        let (dg, dh) = (decompose_unicyclic(&g).unwrap(), decompose_unicyclic(&h).unwrap());
        prop_assert_eq!(metric_dimension(&dg), metric_dimension(&dh));
        prop_assert_eq!(mapped(&basis_forced_fast(&dg).forced, &perm), basis_forced_fast(&dh).forced);
        prop_assert_eq!(
            mapped(&strong_basis_forced_fast(&dg).unwrap(), &perm),
            strong_basis_forced_fast(&dh).unwrap()
        );
    }

    #[test]
    fn canonical_k_bounds(g in graph(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        let dec = decompose_unicyclic(&g).unwrap();
        let s: Vec<usize> = picks.iter().map(|i| i.index(g.n())).collect();
        let lab = canonical_labelling(&dec, &s).unwrap();
        let girth = dec.girth();
        prop_assert_eq!(lab.a, dec.active_indices(&s).len());
        // Some gap between consecutive active indices is at least ⌈g/a⌉.
        prop_assert!(lab.k <= girth - girth.div_ceil(lab.a));
        if lab.a <= 2 {
            prop_assert!(lab.k <= girth / 2);
        }
    }

    #[test]
    fn dimension_is_base_or_one_more(g in graph()) {
        let dec = decompose_unicyclic(&g).unwrap();
        let dim = metric_dimension(&dec);
        prop_assert!(dim == dec.dimension_base() || dim == dec.dimension_base() + 1);
    }
}

#[test]
fn three_spread_actives_exceed_half_girth() {
    let g = Graph::cycle(5);
    let lab = canonical_labelling(&decompose_unicyclic(&g).unwrap(), &[0, 2, 4]).unwrap();
    assert_eq!((lab.a, lab.k), (3, 3));
}
