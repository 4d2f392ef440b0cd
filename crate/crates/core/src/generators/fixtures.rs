//! Named fixture graphs with their known forced sets, plus the `G_n` and
//! `G_{t,q}` families.

use std::collections::BTreeMap;

use crate::graph::Graph;

use super::random::decorated_cycle;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: Graph,
    pub unicyclic: bool,
    pub dim: Option<usize>,
    /// Basis forced vertices.
    pub forced: Option<Vec<usize>>,
    /// Vertices in some metric basis but not in all of them.
    pub gray: Option<Vec<usize>>,
    pub strong_forced: Option<Vec<usize>>,
}

fn labelled(n: usize, edges: &[(usize, usize)], names: &[&str]) -> Graph {
    let labels: BTreeMap<usize, String> = names
        .iter()
        .enumerate()
        .map(|(i, s)| (i, s.to_string()))
        .collect();
    Graph::from_edges(n, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("fixture is valid")
}

fn hexagon() -> Vec<(usize, usize)> {
    (0..6).map(|i| (i, (i + 1) % 6)).collect()
}

/// Six vertices around a hub `c`, with a unique metric basis `{v1, r1}`.
fn fig1_edges() -> Vec<(usize, usize)> {
    // v1=0 r1=1 c=2 w1=3 a=4 z=5
    vec![
        (2, 1),
        (1, 4),
        (4, 2),
        (2, 0),
        (0, 3),
        (3, 2),
        (2, 5),
        (5, 4),
        (4, 3),
        (3, 5),
        (0, 1),
    ]
}

const FIG1_NAMES: [&str; 8] = ["v1", "r1", "c", "w1", "a", "z", "u1", "u2"];

pub fn fig1_g() -> Graph {
    labelled(6, &fig1_edges(), &FIG1_NAMES[..6])
}

pub fn fig1_h1() -> Graph {
    let mut e = fig1_edges();
    e.push((0, 6));
    labelled(7, &e, &FIG1_NAMES[..7])
}

pub fn fig1_h2() -> Graph {
    let mut e = fig1_edges();
    e.extend([(0, 6), (1, 7)]);
    labelled(8, &e, &FIG1_NAMES)
}

/// `fig1-G` without the edge `v1 r1`, with the pendant `u1` at `v1`.
pub fn fig1_h1_prime() -> Graph {
    let mut e: Vec<_> = fig1_edges().into_iter().filter(|&e| e != (0, 1)).collect();
    e.push((0, 6));
    labelled(7, &e, &FIG1_NAMES[..7])
}

// Hexagon positions: 0 bottom, 1 lower right, 2 upper right, 3 top,
// 4 upper left, 5 lower left.

/// Pendants on every cycle vertex except the bottom one.
pub fn fig2a() -> Graph {
    let mut e = hexagon();
    e.extend([(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]);
    Graph::from_edges(11, &e).unwrap()
}

/// A two-vertex thread at the lower right, pendants at upper right, top and
/// lower left.
pub fn fig2b() -> Graph {
    let mut e = hexagon();
    e.extend([(1, 6), (6, 7), (2, 8), (3, 9), (5, 10)]);
    Graph::from_edges(11, &e).unwrap()
}

/// Upper right carries a vertex with three leaves; pendants at top and
/// upper left.
pub fn fig2c() -> Graph {
    let mut e = hexagon();
    e.extend([(2, 6), (6, 7), (6, 8), (6, 9), (3, 10), (4, 11)]);
    Graph::from_edges(12, &e).unwrap()
}

const FIG3_NAMES: [&str; 15] = [
    "a0", "a1", "a2", "a3", "a4", "a5", "x1", "x3", "y3", "t3", "w3", "z3", "x4", "y4", "z4",
];

pub fn fig3_g() -> Graph {
    let mut e = hexagon();
    e.extend([
        (1, 6),
        (3, 7),
        (7, 8),
        (3, 9),
        (9, 10),
        (9, 11),
        (4, 12),
        (12, 13),
        (13, 14),
    ]);
    labelled(15, &e, &FIG3_NAMES)
}

/// Star form of `fig3-G`: three pendants at `a3`, one each at `a1`, `a4`.
pub fn fig3_g_prime() -> Graph {
    let mut e = hexagon();
    e.extend([(1, 6), (3, 7), (3, 8), (3, 9), (4, 10)]);
    labelled(
        11,
        &e,
        &[
            "a0", "a1", "a2", "a3", "a4", "a5", "x1", "y3", "w3", "z3", "z4",
        ],
    )
}

/// `C_{2n+2}` with a pendant on each of `v_0 … v_{n+1}`.
pub fn gen_gn(n: usize) -> Graph {
    assert!(n >= 2, "G_n needs n ≥ 2");
    let g = 2 * n + 2;
    let dec: Vec<Vec<usize>> = (0..g)
        .map(|i| if i <= n + 1 { vec![1] } else { vec![] })
        .collect();
    decorated_cycle(&dec).unwrap()
}

/// `C_{2t+1}` with `q` pendants on each of `v_0`, `v_t`, `v_{t+1}`, `v_{2t}`.
pub fn gen_gtq(t: usize, q: usize) -> Graph {
    assert!(t >= 2 && q >= 2, "G_(t,q) needs t, q ≥ 2");
    let g = 2 * t + 1;
    let dec: Vec<Vec<usize>> = (0..g)
        .map(|i| {
            if [0, t, t + 1, 2 * t].contains(&i) {
                vec![1; q]
            } else {
                vec![]
            }
        })
        .collect();
    decorated_cycle(&dec).unwrap()
}

pub fn fixtures() -> Vec<Fixture> {
    let fx = |name, description, graph, unicyclic| Fixture {
        name,
        description,
        graph,
        unicyclic,
        dim: None,
        forced: None,
        gray: None,
        strong_forced: None,
    };
    vec![
        Fixture {
            dim: Some(2),
            forced: Some(vec![0, 1]),
            ..fx(
                "fig1-G",
                "hub graph with unique basis {v1, r1}; not unicyclic",
                fig1_g(),
                false,
            )
        },
        Fixture {
            dim: Some(2),
            forced: Some(vec![1, 6]),
            ..fx("fig1-H1", "fig1-G plus pendant u1 at v1", fig1_h1(), false)
        },
        Fixture {
            dim: Some(2),
            forced: Some(vec![6, 7]),
            ..fx("fig1-H2", "fig1-H1 plus pendant u2 at r1", fig1_h2(), false)
        },
        fx(
            "fig1-H1prime",
            "fig1-G minus edge v1 r1, plus pendant u1 at v1",
            fig1_h1_prime(),
            false,
        ),
        Fixture {
            dim: Some(2),
            forced: Some(vec![6, 10]),
            gray: Some(vec![]),
            ..fx(
                "fig2a",
                "C6 with pendants on five cycle vertices",
                fig2a(),
                true,
            )
        },
        Fixture {
            dim: Some(2),
            forced: Some(vec![10]),
            gray: Some(vec![6, 7, 9]),
            ..fx(
                "fig2b",
                "C6 with a 2-thread and three pendants",
                fig2b(),
                true,
            )
        },
        Fixture {
            dim: Some(3),
            forced: Some(vec![0]),
            gray: Some(vec![7, 8, 9]),
            ..fx(
                "fig2c",
                "C6 with a branching vertex off the cycle",
                fig2c(),
                true,
            )
        },
        Fixture {
            strong_forced: Some(vec![8, 10, 11]),
            ..fx(
                "fig3-G",
                "C6 with mixed threads and an off-cycle branch",
                fig3_g(),
                true,
            )
        },
        Fixture {
            strong_forced: Some(vec![7, 8, 9]),
            ..fx("fig3-Gprime", "star form of fig3-G", fig3_g_prime(), true)
        },
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}
