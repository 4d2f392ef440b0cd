use unicyclic::generators::{all_unicyclic_graphs, gen_random_unicyclic, GenBounds, GenSpec};
use unicyclic::metric::basis_forced_fast;
use unicyclic::transforms::{cycle_to_pendant, pendant_to_cycle_check, Verification};
use unicyclic::{decompose_unicyclic, Graph};

fn corpus() -> Vec<Graph> {
    let mut graphs = all_unicyclic_graphs(10);
    let bounds = GenBounds {
        max_n: 14,
        max_threads_per_vertex: 1,
        max_thread_len: 3,
        thread_prob: 0.7,
        branch_prob: 0.3,
    };
    graphs.extend((0..2000u64).map(|seed| {
        let girth = 6 + 2 * (seed as usize % 4);
        gen_random_unicyclic(&GenSpec::new(girth, seed, bounds)).unwrap()
    }));
    graphs
}

#[test]
fn forced_cycle_vertex_round_trip() {
    let mut seen = 0;
    for g in corpus().iter().filter(|g| g.n() < 16) {
        let dec = decompose_unicyclic(g).unwrap();
        for v in basis_forced_fast(&dec).forced {
            if !dec.is_on_cycle(v) {
                continue;
            }
            let h = cycle_to_pendant(g, v, 16).unwrap();
            assert_eq!(h.verification, Verification::Confirmed, "{}", g.to_json());
            let back = pendant_to_cycle_check(&h.graph, g.n(), 16).unwrap();
            assert!(back.predicted, "{}", g.to_json());
            assert_eq!(
                back.verification,
                Verification::Confirmed,
                "{}",
                g.to_json()
            );
            assert_eq!(back.graph.edges(), g.edges());
            seen += 1;
        }
    }
    assert!(seen >= 10, "only {seen} forced cycle vertices");
}

#[test]
fn pendant_removal_agrees_with_oracle() {
    let mut seen = 0;
    for g in corpus() {
        let dec = decompose_unicyclic(&g).unwrap();
        for v in basis_forced_fast(&dec).forced {
            if dec.is_lone_pendant(v) {
                let r = pendant_to_cycle_check(&g, v, 16).unwrap();
                assert_eq!(
                    r.verification,
                    Verification::Confirmed,
                    "{} at {v}",
                    g.to_json()
                );
                seen += 1;
            }
        }
    }
    assert!(seen >= 50, "only {seen} forced pendants");
}
