//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS or FAIL line.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use unicyclic::generators::{
    all_unicyclic_graphs, fig1_g, fig1_h1, fig1_h1_prime, fig2a, fig2b, fig2c, fig3_g, gen_gn,
    gen_gtq, gen_random_unicyclic, GenBounds, GenSpec,
};
use unicyclic::metric::{
    basis_forced_fast, basis_forced_oracle, check_cycle_char, check_pendant_char,
    is_resolving_set_fast, is_resolving_set_oracle, metric_dimension, metric_dimension_oracle,
};
use unicyclic::strong::{
    build_srg_definition, build_srg_unicyclic, reduce_to_star_form, strong_basis_forced_even,
    strong_basis_forced_fast, strong_basis_forced_odd, strong_basis_forced_oracle,
    strong_metric_dimension, strong_metric_dimension_exhaustive,
};
use unicyclic::transforms::{attach_pendant_forced_check, extend_with_path, Verification};
use unicyclic::verify::{verify_instance, VerifyConfig};
use unicyclic::{all_pairs_distances, canonical_labelling, decompose_unicyclic, Graph};

const CAP: usize = 16;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Corpus {
    exhaustive: Vec<Graph>,
    random: Vec<Graph>,
    /// Random graphs drawn with bounds that make forced vertices common.
    forced_rich: Vec<Graph>,
}

impl Corpus {
    fn build() -> Self {
        let cfg = VerifyConfig {
            max_n: 14,
            seed: 2024,
            ..VerifyConfig::default()
        };
        let random = (0..500)
            .map(|i| verify_instance(&cfg, i).unwrap())
            .collect();
        let mut forced_rich = Vec::new();
        for seed in 0..6000u64 {
            let (threads, len) = if seed % 2 == 0 { (1, 2) } else { (1, 3) };
            let bounds = GenBounds {
                max_n: 14,
                max_threads_per_vertex: threads,
                max_thread_len: len,
                thread_prob: 0.75,
                branch_prob: 0.3,
            };
            let girth = 4 + 2 * (seed as usize % 5);
            forced_rich.push(gen_random_unicyclic(&GenSpec::new(girth, seed, bounds)).unwrap());
        }
        Corpus {
            exhaustive: all_unicyclic_graphs(10),
            random,
            forced_rich,
        }
    }

    fn all(&self) -> impl Iterator<Item = &Graph> {
        self.exhaustive
            .iter()
            .chain(&self.random)
            .chain(&self.forced_rich)
    }
}

fn no_failures(items: Vec<String>) -> Result<(), String> {
    match items.len() {
        0 => Ok(()),
        n => Err(format!("{n} failure(s), first: {}", items[0])),
    }
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

fn c1_fixtures() -> Outcome {
    let start = Instant::now();
    let cases = [
        ("fig2a", fig2a(), vec![6, 10], 2, Some(1)),
        ("fig2b", fig2b(), vec![10], 2, None),
        ("fig2c", fig2c(), vec![0], 3, None),
    ];
    for (name, g, forced, dim, bases) in cases {
        let fast = basis_forced_fast(&decompose_unicyclic(&g).unwrap());
        let oracle = basis_forced_oracle(&all_pairs_distances(&g), CAP).unwrap();
        if fast.forced != set(&forced)
            || fast.dim != dim
            || oracle.forced != fast.forced
            || oracle.dim != dim
        {
            return Err(format!(
                "{name}: fast {:?}/{} oracle {:?}/{}",
                fast.forced, fast.dim, oracle.forced, oracle.dim
            ));
        }
        if let Some(count) = bases {
            let found = oracle.bases.as_ref().map_or(0, |b| b.len());
            if found != count {
                return Err(format!("{name}: {found} bases"));
            }
        }
    }
    let g = fig3_g();
    let fast = strong_basis_forced_fast(&decompose_unicyclic(&g).unwrap()).unwrap();
    if fast != set(&[8, 10, 11]) || strong_basis_forced_oracle(&g).unwrap() != fast {
        return Err(format!("fig3-G strong forced {fast:?}"));
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("4 fixtures in {elapsed:.1?}"))
}

fn c2_resolving(corpus: &Corpus) -> Outcome {
    let bad: Vec<String> = corpus
        .exhaustive
        .par_iter()
        .filter_map(|g| {
            let dec = decompose_unicyclic(g).unwrap();
            let d = all_pairs_distances(g);
            let n = g.n();
            (1u32..1 << n).find_map(|mask| {
                let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                (is_resolving_set_fast(&dec, &s) != is_resolving_set_oracle(&d, &s))
                    .then(|| format!("{} S={s:?}", g.to_json()))
            })
        })
        .collect();
    let exhaustive_sets: usize = corpus
        .exhaustive
        .iter()
        .map(|g| (1usize << g.n()) - 1)
        .sum();
    no_failures(bad)?;
    let bad: Vec<String> = corpus
        .random
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let dec = decompose_unicyclic(g).unwrap();
            let d = all_pairs_distances(g);
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            let verts: Vec<usize> = (0..g.n()).collect();
            (0..200).find_map(|_| {
                let k = rng.gen_range(1..=g.n().min(6));
                let mut s: Vec<usize> = verts.choose_multiple(&mut rng, k).copied().collect();
                s.sort_unstable();
                (is_resolving_set_fast(&dec, &s) != is_resolving_set_oracle(&d, &s))
                    .then(|| format!("{} S={s:?}", g.to_json()))
            })
        })
        .collect();
    no_failures(bad)?;
    Ok(format!(
        "{} graphs / {exhaustive_sets} sets exhaustive, {} graphs x 200 random sets",
        corpus.exhaustive.len(),
        corpus.random.len()
    ))
}

fn c3_dimension(corpus: &Corpus) -> Outcome {
    let graphs: Vec<&Graph> = corpus.all().collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let dec = decompose_unicyclic(g).unwrap();
            let base = dec.dimension_base();
            let dim = metric_dimension(&dec);
            let oracle = metric_dimension_oracle(&all_pairs_distances(g), CAP).unwrap();
            (dim != oracle || !(base..=base + 1).contains(&dim))
                .then(|| format!("{} dim {dim} oracle {oracle} base {base}", g.to_json()))
        })
        .collect();
    no_failures(bad)?;
    Ok(format!("{} graphs", graphs.len()))
}

fn structure_violation(g: &Graph) -> Option<String> {
    let dec = decompose_unicyclic(g).unwrap();
    let r = basis_forced_oracle(&all_pairs_distances(g), CAP).unwrap();
    if r.forced.is_empty() {
        return None;
    }
    let gg = dec.girth();
    let why = if r.forced.len() > 2 {
        "more than two forced".to_string()
    } else if gg % 2 == 1 {
        "odd girth".into()
    } else if r.dim != dec.dimension_base() {
        "dim above base".into()
    } else if dec.b_value() > 1 {
        "b > 1".into()
    } else if let Some(s) = r.bases.as_ref().unwrap().iter().find(|s| {
        let lab = canonical_labelling(&dec, s).unwrap();
        lab.a != 2 || lab.k < 2 || lab.k >= gg / 2
    }) {
        format!("basis {s:?} breaks a(S) = 2, 2 <= k < g/2")
    } else if let Some(v) = r
        .forced
        .iter()
        .find(|&&v| !(dec.is_lone_pendant(v) || dec.is_bare_cycle_vertex(v)))
    {
        format!("forced {v} is neither a lone pendant nor a bare cycle vertex")
    } else {
        let v = r.forced.iter().find(|&&v| {
            dec.cycle_index(v)
                .is_some_and(|i| dec.cycle_threads((i + gg / 2) % gg).is_empty())
        })?;
        format!("forced cycle vertex {v} lacks an antipodal thread")
    };
    Some(format!("{}: {why}", g.to_json()))
}

fn c4_structure(corpus: &Corpus) -> Outcome {
    let graphs: Vec<&Graph> = corpus.all().collect();
    let with_forced = graphs
        .par_iter()
        .filter(|g| {
            !basis_forced_fast(&decompose_unicyclic(g).unwrap())
                .forced
                .is_empty()
        })
        .count();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| structure_violation(g))
        .collect();
    no_failures(bad)?;
    Ok(format!(
        "{} graphs, {with_forced} with forced vertices",
        graphs.len()
    ))
}

fn c5_b1(corpus: &Corpus) -> Outcome {
    let graphs: Vec<&Graph> = corpus
        .all()
        .filter(|g| decompose_unicyclic(g).unwrap().b_value() == 1)
        .collect();
    let results: Vec<(usize, usize, Option<String>)> = graphs
        .par_iter()
        .map(|g| {
            let dec = decompose_unicyclic(g).unwrap();
            let forced = basis_forced_oracle(&all_pairs_distances(g), CAP)
                .unwrap()
                .forced;
            let mut candidates = 0;
            for v in 0..g.n() {
                let report = if dec.is_lone_pendant(v) {
                    check_pendant_char(&dec, v).unwrap()
                } else if dec.is_bare_cycle_vertex(v) {
                    check_cycle_char(&dec, v).unwrap()
                } else {
                    continue;
                };
                candidates += 1;
                if report.verdict() != forced.contains(&v) {
                    return (0, 0, Some(format!("{} vertex {v}", g.to_json())));
                }
            }
            (candidates, forced.len(), None)
        })
        .collect();
    let candidates: usize = results.iter().map(|r| r.0).sum();
    let positives: usize = results.iter().map(|r| r.1).sum();
    no_failures(results.into_iter().filter_map(|r| r.2).collect())?;
    Ok(format!(
        "{} graphs, {candidates} candidates, {positives} forced",
        graphs.len()
    ))
}

fn c6_srg(corpus: &Corpus) -> Outcome {
    let graphs: Vec<&Graph> = corpus.all().collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let star = reduce_to_star_form(&decompose_unicyclic(g).unwrap());
            let srg_star = build_srg_definition(&star.graph);
            let built = build_srg_unicyclic(&decompose_unicyclic(&star.graph).unwrap()).unwrap();
            if built != srg_star {
                return Some(format!("{}: construction differs", g.to_json()));
            }
            let mapped: BTreeSet<(usize, usize)> = srg_star
                .edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (star.mapping[u], star.mapping[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            let original: BTreeSet<(usize, usize)> =
                build_srg_definition(g).edges.into_iter().collect();
            (mapped != original).then(|| format!("{}: reduction changes the SRG", g.to_json()))
        })
        .collect();
    no_failures(bad)?;
    Ok(format!("{} graphs", graphs.len()))
}

fn c7_families() -> Outcome {
    let start = Instant::now();
    let mut cases: Vec<(String, Graph, usize)> =
        (2..=8).map(|n| (format!("G_{n}"), gen_gn(n), n)).collect();
    for t in 2..=6 {
        for q in 2..=4 {
            cases.push((format!("G_({t},{q})"), gen_gtq(t, q), t - 2 + 2 * q));
        }
    }
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|(name, g, want)| {
            let oracle = strong_basis_forced_oracle(g).unwrap().len();
            let fast = strong_basis_forced_fast(&decompose_unicyclic(g).unwrap())
                .unwrap()
                .len();
            (oracle != *want || fast != *want)
                .then(|| format!("{name}: oracle {oracle} fast {fast} want {want}"))
        })
        .collect();
    no_failures(bad)?;
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 30.0 {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{} family members in {elapsed:.1?}", cases.len()))
}

fn c8_even_odd() -> Outcome {
    let mut counts = [0usize; 2];
    let mut nonempty = 0;
    for parity in [0usize, 1] {
        let bad: Vec<(bool, Option<String>)> = (0..500u64)
            .into_par_iter()
            .map(|seed| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed * 2 + parity as u64);
                let girth = if parity == 0 {
                    2 * rng.gen_range(2..=9)
                } else {
                    2 * rng.gen_range(1..=9) + 1
                };
                let bounds = GenBounds {
                    max_n: 24,
                    max_threads_per_vertex: rng.gen_range(1..=3),
                    max_thread_len: rng.gen_range(1..=3),
                    thread_prob: [0.3, 0.5, 0.7][rng.gen_range(0..3)],
                    branch_prob: [0.0, 0.3][rng.gen_range(0..2)],
                };
                let g = gen_random_unicyclic(&GenSpec::new(girth, rng.gen(), bounds)).unwrap();
                let star = reduce_to_star_form(&decompose_unicyclic(&g).unwrap()).graph;
                let dec = decompose_unicyclic(&star).unwrap();
                let fast = if dec.girth().is_multiple_of(2) {
                    strong_basis_forced_even(&dec).unwrap()
                } else {
                    strong_basis_forced_odd(&dec).unwrap()
                };
                let oracle = strong_basis_forced_oracle(&star).unwrap();
                let msg = (fast != oracle)
                    .then(|| format!("{} fast {fast:?} oracle {oracle:?}", star.to_json()));
                (!oracle.is_empty(), msg)
            })
            .collect();
        counts[parity] = bad.len();
        nonempty += bad.iter().filter(|r| r.0).count();
        no_failures(bad.into_iter().filter_map(|r| r.1).collect())?;
    }
    Ok(format!(
        "{} even, {} odd reduced graphs, {nonempty} with strong forced vertices",
        counts[0], counts[1]
    ))
}

fn c9_transforms(corpus: &Corpus) -> Outcome {
    let forced: Vec<(&Graph, BTreeSet<usize>)> = corpus
        .all()
        .filter(|g| g.n() < CAP)
        .filter_map(|g| {
            let f = basis_forced_fast(&decompose_unicyclic(g).unwrap()).forced;
            (!f.is_empty()).then_some((g, f))
        })
        .take(100)
        .collect();
    if forced.len() < 100 {
        return Err(format!("only {} forced-vertex instances", forced.len()));
    }
    let bad: Vec<String> = forced
        .par_iter()
        .flat_map(|(g, f)| {
            let mut out = Vec::new();
            let r = extend_with_path(g, 1, CAP).unwrap();
            if r.verification != Verification::Confirmed {
                out.push(format!("extend {}: {:?}", g.to_json(), r.verification));
            }
            for &v in f {
                let r = attach_pendant_forced_check(g, v, CAP).unwrap();
                if r.verification != Verification::Confirmed {
                    out.push(format!(
                        "pendant {} at {v}: {:?}",
                        g.to_json(),
                        r.verification
                    ));
                }
            }
            out
        })
        .collect();
    no_failures(bad)?;

    let (g_prime, _) = fig1_h1_prime().without_vertex(6).unwrap();
    for (name, g, v, want) in [
        ("H1", fig1_g(), 0, true),
        ("H2", fig1_h1(), 1, true),
        ("H1'", g_prime, 0, false),
    ] {
        let r = attach_pendant_forced_check(&g, v, CAP).unwrap();
        if r.predicted != want || r.observed != Some(want) {
            return Err(format!(
                "{name}: predicted {} observed {:?}",
                r.predicted, r.observed
            ));
        }
    }
    Ok(format!("{} instances plus 3 fixtures", forced.len()))
}

fn c10_strong_dim(corpus: &Corpus) -> Outcome {
    let graphs: Vec<&Graph> = corpus.all().filter(|g| g.n() <= 12).collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let cover = strong_metric_dimension(g).unwrap();
            let exhaustive =
                strong_metric_dimension_exhaustive(&all_pairs_distances(g), 12).unwrap();
            (cover != exhaustive)
                .then(|| format!("{}: cover {cover} exhaustive {exhaustive}", g.to_json()))
        })
        .collect();
    no_failures(bad)?;
    Ok(format!("{} graphs", graphs.len()))
}

fn main() {
    let corpus = Corpus::build();
    let criteria: Vec<Criterion> = vec![
        ("1 fixture regression", Box::new(c1_fixtures)),
        (
            "2 resolving-set equivalence",
            Box::new(|| c2_resolving(&corpus)),
        ),
        (
            "3 dimension formula and oracle",
            Box::new(|| c3_dimension(&corpus)),
        ),
        (
            "4 forced-vertex structure",
            Box::new(|| c4_structure(&corpus)),
        ),
        ("5 b=1 characterization", Box::new(|| c5_b1(&corpus))),
        ("6 strong resolving graph", Box::new(|| c6_srg(&corpus))),
        ("7 G_n and G_(t,q) counts", Box::new(c7_families)),
        ("8 even/odd strong characterizations", Box::new(c8_even_odd)),
        ("9 transform laws", Box::new(|| c9_transforms(&corpus))),
        (
            "10 strong dimension identity",
            Box::new(|| c10_strong_dim(&corpus)),
        ),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.1?}]", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
